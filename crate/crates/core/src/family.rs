//! Named graph families with fixed canonical labelings.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError, Vertex};

/// A named family together with its parameters.
///
/// Labelings are fixed: paths run `0-1-..-(n-1)`, cycles close with
/// `(n-1, 0)`, complete bipartite parts are `0..m` and `m..m+n`, and the
/// star centre is vertex `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `P_n`, `n >= 1`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_n`, `n >= 1`.
    Complete(usize),
    /// `K_{m,n}`, `m, n >= 1`.
    CompleteBipartite(usize, usize),
    /// `K_{1,m}`, `m >= 1`.
    Star(usize),
    /// `n` isolated vertices, `n >= 1`.
    Empty(usize),
}

impl Family {
    pub fn validate(&self) -> Result<(), GraphError> {
        let ok = match *self {
            Family::Path(n) | Family::Complete(n) | Family::Star(n) | Family::Empty(n) => n >= 1,
            Family::Cycle(n) => n >= 3,
            Family::CompleteBipartite(m, n) => m >= 1 && n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(GraphError::BadParameter(match self {
                Family::Path(_) => "path needs n >= 1",
                Family::Cycle(_) => "cycle needs n >= 3",
                Family::Complete(_) => "complete graph needs n >= 1",
                Family::CompleteBipartite(..) => "complete bipartite graph needs m, n >= 1",
                Family::Star(_) => "star needs m >= 1",
                Family::Empty(_) => "empty graph needs n >= 1",
            }))
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Empty(n) => n,
            Family::CompleteBipartite(m, n) => m + n,
            Family::Star(m) => m + 1,
        }
    }

    /// Builds the canonical labeled instance.
    pub fn generate(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        match *self {
            Family::Path(n) => edges.extend((1..n).map(|i| (i - 1, i))),
            Family::Cycle(n) => {
                edges.extend((1..n).map(|i| (i - 1, i)));
                edges.push((n - 1, 0));
            }
            Family::Complete(n) => {
                for u in 0..n {
                    edges.extend((u + 1..n).map(|v| (u, v)));
                }
            }
            Family::CompleteBipartite(m, n) => {
                for u in 0..m {
                    edges.extend((m..m + n).map(|v| (u, v)));
                }
            }
            Family::Star(m) => edges.extend((1..=m).map(|v| (0, v))),
            Family::Empty(_) => {}
        }
        Graph::from_edge_list(self.order(), &edges)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "K{{{m},{n}}}"),
            Family::Star(m) => write!(f, "S{m}"),
            Family::Empty(n) => write!(f, "E{n}"),
        }
    }
}

/// Shorthand for `family.generate()`.
pub fn generate(family: Family) -> Result<Graph, GraphError> {
    family.generate()
}
