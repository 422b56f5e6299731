//! Seeded random graphs for the randomized checks.

use curling_core::{Family, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Edge probabilities drawn per sample, covering sparse to dense graphs.
pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// An Erdős–Rényi graph with order uniform in `1..=max_order` and edge
/// probability drawn from [`EDGE_PROBABILITIES`]. Not necessarily connected.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, max_order: usize) -> Graph {
    let n = rng.gen_range(1..=max_order.max(1));
    let p = *EDGE_PROBABILITIES.choose(rng).expect("non-empty");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("ids in range")
}

/// Regular families of order at most `max_order`: cycles, complete graphs,
/// balanced complete bipartite graphs and, unless `min_degree > 0`, edgeless
/// graphs.
pub fn regular_families(max_order: usize, min_degree: usize) -> Vec<Family> {
    let mut out = Vec::new();
    out.extend((3..=max_order).map(Family::Cycle));
    out.extend((1..=max_order).map(Family::Complete));
    out.extend((1..=max_order / 2).map(|m| Family::CompleteBipartite(m, m)));
    out.extend((1..=max_order).map(Family::Empty));
    out.retain(|f| regular_degree(f) >= min_degree);
    out
}

fn regular_degree(f: &Family) -> usize {
    match *f {
        Family::Cycle(_) => 2,
        Family::Complete(n) => n - 1,
        Family::CompleteBipartite(m, _) => m,
        _ => 0,
    }
}

pub fn random_regular<R: Rng + ?Sized>(
    rng: &mut R,
    max_order: usize,
    min_degree: usize,
) -> (Family, Graph) {
    let pool = regular_families(max_order, min_degree);
    let family = *pool.choose(rng).expect("regular pool is empty");
    (family, family.generate().expect("valid family"))
}
