//! Curling numbers of integer sequences and graphs, and the degree
//! sequences of graph products.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! - [`Graph`], a simple undirected graph, and the named [`Family`]
//!   generators;
//! - the string curling number, the run decomposition of a sorted degree
//!   sequence, `cn(G)` and the compound curling number `cn^c(G)`;
//! - explicit join, Cartesian, strong, tensor and corona products, plus
//!   [`product_degree_multiset`], which predicts a product's degree multiset
//!   from its factors' multisets without building it.
#![no_std]

extern crate alloc;

pub mod curling;
pub mod family;
pub mod graph;
pub mod multiset;
pub mod product;

pub use curling::{
    compound_curling_number, curling_report, graph_curling_number,
    multiset_compound_curling_number, multiset_curling_number, run_decomposition,
    string_curling_number, string_curling_oracle, CurlingError, CurlingReport, Run,
    RunDecomposition,
};
pub use family::{generate, Family};
pub use graph::{Graph, GraphError, Vertex};
pub use multiset::DegreeMultiset;
pub use product::{
    cartesian, corona, join, predicted_invariants, product, product_degree_multiset, strong,
    tensor, ProductKind,
};
