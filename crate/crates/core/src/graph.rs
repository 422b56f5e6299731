//! Simple undirected graphs stored as sorted adjacency lists.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::multiset::DegreeMultiset;

/// Vertex identifier. Vertices of a graph of order `n` are `0..n`.
pub type Vertex = usize;

/// Errors raised while building or generating a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// The graph would have no vertices.
    ZeroOrder,
    /// An edge endpoint is not a vertex of the graph.
    IdOutOfRange { id: Vertex, order: usize },
    /// An edge joins a vertex to itself.
    SelfLoop(Vertex),
    /// A family parameter violates the family's constraints.
    BadParameter(&'static str),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::ZeroOrder => f.write_str("graph must have at least one vertex"),
            GraphError::IdOutOfRange { id, order } => {
                write!(f, "vertex id {id} out of range for order {order}")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::BadParameter(msg) => write!(f, "bad family parameter: {msg}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite simple undirected graph.
///
/// Adjacency lists are sorted and free of duplicates and self-loops, and the
/// relation is symmetric. Disconnected graphs are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    size: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse to a single edge.
    pub fn from_edge_list(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= order {
                    return Err(GraphError::IdOutOfRange { id, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Sorts and dedups each list and counts edges. Callers must supply a
    /// symmetric, loop-free relation on `0..adjacency.len()`.
    pub(crate) fn from_raw_adjacency(mut adjacency: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(!adjacency.is_empty());
        let mut degree_sum = 0;
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            debug_assert!(list.binary_search(&v).is_err(), "self-loop at {v}");
            degree_sum += list.len();
        }
        debug_assert!(degree_sum % 2 == 0);
        Graph {
            adjacency,
            size: degree_sum / 2,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Per-vertex degrees, indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Iterates over each edge once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The well-arranged degree sequence: all degrees, non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq = self.degrees();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn degree_multiset(&self) -> DegreeMultiset {
        DegreeMultiset::from_degrees(self.adjacency.iter().map(Vec::len))
    }

    /// Returns the common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.degree(0);
        self.adjacency
            .iter()
            .all(|list| list.len() == first)
            .then_some(first)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }
}
