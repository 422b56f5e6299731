//! The five graph products, built explicitly or predicted from degree
//! multisets.
//!
//! Pair products label vertex `(i, j)` as `i * n2 + j`. The join keeps the
//! first factor's ids and shifts the second by `n1`. The corona keeps the
//! first factor's ids and places copy `i` of the second factor at
//! `n1 + i * n2 .. n1 + (i + 1) * n2`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::curling::{multiset_compound_curling_number, multiset_curling_number, CurlingError};
use crate::graph::{Graph, Vertex};
use crate::multiset::DegreeMultiset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    Join,
    Cartesian,
    Strong,
    Tensor,
    Corona,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::Join,
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Tensor,
        ProductKind::Corona,
    ];

    /// The three products on the vertex set `V1 x V2`.
    pub const PAIR: [ProductKind; 3] = [
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Tensor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Join => "join",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Tensor => "tensor",
            ProductKind::Corona => "corona",
        }
    }

    /// Order of the product of graphs of orders `n1` and `n2`.
    pub fn order(self, n1: usize, n2: usize) -> Option<usize> {
        match self {
            ProductKind::Join => n1.checked_add(n2),
            ProductKind::Cartesian | ProductKind::Strong | ProductKind::Tensor => {
                n1.checked_mul(n2)
            }
            ProductKind::Corona => n2.checked_add(1).and_then(|m| n1.checked_mul(m)),
        }
    }

    /// Degree of a pair-product vertex whose coordinates have degrees `a`
    /// and `b`. `None` for join and corona, which are not pair products.
    pub fn pair_degree(self, a: usize, b: usize) -> Option<usize> {
        match self {
            ProductKind::Cartesian => a.checked_add(b),
            ProductKind::Strong => a
                .checked_mul(b)
                .and_then(|ab| ab.checked_add(a))
                .and_then(|s| s.checked_add(b)),
            ProductKind::Tensor => a.checked_mul(b),
            ProductKind::Join | ProductKind::Corona => None,
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `G1 + G2`: disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.order(), g2.order());
    let mut adj: Vec<Vec<Vertex>> = Vec::with_capacity(n1 + n2);
    for v in 0..n1 {
        let mut list = g1.neighbors(v).to_vec();
        list.extend(n1..n1 + n2);
        adj.push(list);
    }
    for u in 0..n2 {
        let mut list: Vec<Vertex> = (0..n1).collect();
        list.extend(g2.neighbors(u).iter().map(|&w| w + n1));
        adj.push(list);
    }
    Graph::from_raw_adjacency(adj)
}

fn pair_product(g1: &Graph, g2: &Graph, same_first: bool, same_second: bool, both: bool) -> Graph {
    let (n1, n2) = (g1.order(), g2.order());
    let mut adj = vec![Vec::new(); n1 * n2];
    for i in 0..n1 {
        for j in 0..n2 {
            let list = &mut adj[i * n2 + j];
            if same_first {
                list.extend(g2.neighbors(j).iter().map(|&l| i * n2 + l));
            }
            if same_second {
                list.extend(g1.neighbors(i).iter().map(|&k| k * n2 + j));
            }
            if both {
                for &k in g1.neighbors(i) {
                    list.extend(g2.neighbors(j).iter().map(|&l| k * n2 + l));
                }
            }
        }
    }
    Graph::from_raw_adjacency(adj)
}

/// `G1 □ G2`: `(i,j) ~ (k,l)` iff one coordinate is equal and the other
/// adjacent.
pub fn cartesian(g1: &Graph, g2: &Graph) -> Graph {
    pair_product(g1, g2, true, true, false)
}

/// `G1 ⊠ G2`: union of the Cartesian and tensor adjacencies.
pub fn strong(g1: &Graph, g2: &Graph) -> Graph {
    pair_product(g1, g2, true, true, true)
}

/// `G1 × G2`: `(i,j) ~ (k,l)` iff `i ~ k` and `j ~ l`. May be disconnected.
pub fn tensor(g1: &Graph, g2: &Graph) -> Graph {
    pair_product(g1, g2, false, false, true)
}

/// `G1 ⊙ G2`: one copy of `G2` per vertex of `G1`, each copy fully joined to
/// its host vertex.
pub fn corona(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.order(), g2.order());
    let copy_start = |i: usize| n1 + i * n2;
    let mut adj: Vec<Vec<Vertex>> = Vec::with_capacity(n1 * (n2 + 1));
    for v in 0..n1 {
        let mut list = g1.neighbors(v).to_vec();
        list.extend(copy_start(v)..copy_start(v) + n2);
        adj.push(list);
    }
    for i in 0..n1 {
        let base = copy_start(i);
        for u in 0..n2 {
            let mut list: Vec<Vertex> = g2.neighbors(u).iter().map(|&w| base + w).collect();
            list.push(i);
            adj.push(list);
        }
    }
    Graph::from_raw_adjacency(adj)
}

/// Builds the product of `kind` explicitly.
pub fn product(kind: ProductKind, g1: &Graph, g2: &Graph) -> Graph {
    match kind {
        ProductKind::Join => join(g1, g2),
        ProductKind::Cartesian => cartesian(g1, g2),
        ProductKind::Strong => strong(g1, g2),
        ProductKind::Tensor => tensor(g1, g2),
        ProductKind::Corona => corona(g1, g2),
    }
}

/// Degree multiset of a product, computed from the factors' multisets alone.
///
/// Work is proportional to the number of distinct degree pairs, not to the
/// product's order. Degree values that coincide are merged.
pub fn product_degree_multiset(
    kind: ProductKind,
    m1: &DegreeMultiset,
    m2: &DegreeMultiset,
) -> Result<DegreeMultiset, CurlingError> {
    let (n1, n2) = (m1.order(), m2.order());
    let mut out = DegreeMultiset::new();
    let shift = |m: &DegreeMultiset, by: usize, scale: usize, out: &mut DegreeMultiset| {
        for (d, c) in m.iter() {
            let degree = d.checked_add(by).ok_or(CurlingError::Overflow)?;
            let count = c.checked_mul(scale).ok_or(CurlingError::Overflow)?;
            out.add(degree, count);
        }
        Ok(())
    };
    match kind {
        ProductKind::Join => {
            shift(m1, n2, 1, &mut out)?;
            shift(m2, n1, 1, &mut out)?;
        }
        ProductKind::Corona => {
            shift(m1, n2, 1, &mut out)?;
            shift(m2, 1, n1, &mut out)?;
        }
        ProductKind::Cartesian | ProductKind::Strong | ProductKind::Tensor => {
            for (a, ca) in m1.iter() {
                for (b, cb) in m2.iter() {
                    let degree = kind.pair_degree(a, b).ok_or(CurlingError::Overflow)?;
                    let count = ca.checked_mul(cb).ok_or(CurlingError::Overflow)?;
                    out.add(degree, count);
                }
            }
        }
    }
    Ok(out)
}

/// `(cn, cn^c)` of the product, without building it.
pub fn predicted_invariants(
    kind: ProductKind,
    g1: &Graph,
    g2: &Graph,
) -> Result<(usize, u64), CurlingError> {
    let m = product_degree_multiset(kind, &g1.degree_multiset(), &g2.degree_multiset())?;
    Ok((
        multiset_curling_number(&m),
        multiset_compound_curling_number(&m)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curling::{compound_curling_number, graph_curling_number};
    use crate::family::Family::{self, *};

    fn g(f: Family) -> Graph {
        f.generate().unwrap()
    }

    fn ms(pairs: &[(usize, usize)]) -> DegreeMultiset {
        DegreeMultiset::from_counts(pairs.iter().copied())
    }

    fn invariants(h: &Graph) -> (usize, u64) {
        (graph_curling_number(h), compound_curling_number(h).unwrap())
    }

    #[test]
    fn join_examples() {
        let w = join(&g(Complete(1)), &g(Cycle(4)));
        assert_eq!(w.degree_multiset(), ms(&[(4, 1), (3, 4)]));
        let h = join(&g(Cycle(4)), &g(Cycle(4)));
        assert_eq!(h.regular_degree(), Some(6));
        assert_eq!(invariants(&h), (8, 8));
        assert_eq!(join(&g(Complete(2)), &g(Complete(3))), g(Complete(5)));
    }

    #[test]
    fn cartesian_examples() {
        let sq = cartesian(&g(Path(2)), &g(Path(2)));
        assert_eq!(sq.regular_degree(), Some(2));
        assert_eq!(sq.size(), 4);
        // 0-1-3-2-0 is the canonical C4 relabeled.
        assert!(sq.has_edge(0, 1) && sq.has_edge(1, 3) && sq.has_edge(3, 2) && sq.has_edge(2, 0));

        let ladder = cartesian(&g(Path(5)), &g(Path(2)));
        assert_eq!(ladder.degree_multiset(), ms(&[(3, 6), (2, 4)]));
        assert_eq!(invariants(&ladder), (6, 24));

        assert_eq!(invariants(&cartesian(&g(Cycle(3)), &g(Cycle(3)))), (9, 9));
        let torus = cartesian(&g(Cycle(4)), &g(Cycle(3)));
        assert_eq!(torus.degree_sequence(), vec![4; 12]);
    }

    #[test]
    fn strong_examples() {
        assert_eq!(strong(&g(Path(2)), &g(Path(2))), g(Complete(4)));
        let s = strong(&g(Path(3)), &g(Path(3)));
        assert_eq!(s.degree_multiset(), ms(&[(8, 1), (5, 4), (3, 4)]));
        assert_eq!(invariants(&s), (4, 16));
        let t = strong(&g(Cycle(4)), &g(Cycle(4)));
        assert_eq!(t.regular_degree(), Some(8));
        assert_eq!(invariants(&t), (16, 16));
    }

    #[test]
    fn tensor_examples() {
        let t = tensor(&g(Path(2)), &g(Path(2)));
        assert_eq!(t.regular_degree(), Some(1));
        assert_eq!(t.size(), 2);
        assert_eq!(invariants(&t), (4, 4));
        assert_eq!(invariants(&tensor(&g(Path(5)), &g(Path(2)))), (6, 24));
        let c = tensor(&g(Cycle(4)), &g(Path(2)));
        assert_eq!((c.order(), c.regular_degree()), (8, Some(2)));
        assert_eq!(graph_curling_number(&c), 8);
    }

    #[test]
    fn corona_examples() {
        for m in 1..6 {
            assert_eq!(corona(&g(Complete(1)), &g(Complete(m))), g(Complete(m + 1)));
        }
        let c = corona(&g(Cycle(3)), &g(Complete(2)));
        assert_eq!(c.degree_multiset(), ms(&[(4, 3), (2, 6)]));
        assert_eq!(invariants(&c), (6, 18));
        let p = corona(&g(Path(3)), &g(Complete(1)));
        // host degrees are d + 1, copy vertices 0 + 1
        assert_eq!(p.degree_multiset(), ms(&[(3, 1), (2, 2), (1, 3)]));
        assert_eq!(graph_curling_number(&p), 3);
        // copy of vertex 1 sits at id 3 + 1
        assert_eq!(p.neighbors(4), &[1]);
    }

    #[test]
    fn multiset_examples() {
        let got = product_degree_multiset(
            ProductKind::Cartesian,
            &ms(&[(2, 3), (1, 2)]),
            &ms(&[(1, 2)]),
        );
        assert_eq!(got, Ok(ms(&[(3, 6), (2, 4)])));
        let got = product_degree_multiset(ProductKind::Tensor, &ms(&[(3, 5)]), &ms(&[(4, 7)]));
        assert_eq!(got, Ok(ms(&[(12, 35)])));
        let got = product_degree_multiset(ProductKind::Corona, &ms(&[(2, 3)]), &ms(&[(1, 2)]));
        assert_eq!(got, Ok(ms(&[(4, 3), (2, 6)])));
    }

    #[test]
    fn predicted_examples() {
        let p = |k, a, b| predicted_invariants(k, &g(a), &g(b)).unwrap();
        assert_eq!(p(ProductKind::Cartesian, Path(4), Path(4)), (8, 128));
        assert_eq!(p(ProductKind::Cartesian, Cycle(5), Path(6)), (20, 200));
        assert_eq!(p(ProductKind::Strong, Cycle(4), Path(5)), (12, 96));
    }

    #[test]
    fn multiset_overflow() {
        let big = ms(&[(1, usize::MAX / 2), (0, 3)]);
        assert_eq!(
            product_degree_multiset(ProductKind::Cartesian, &big, &big),
            Err(CurlingError::Overflow)
        );
    }
}
