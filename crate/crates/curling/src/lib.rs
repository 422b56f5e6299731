//! Edge-list files, product expressions, the verification harness and the
//! command-line front end built on `curling-core`.

pub mod edgelist;
pub mod eval;
pub mod expr;

pub use edgelist::{parse_edge_list, read_edge_list, to_edge_list, EdgeListError};
pub use eval::{build_graph, evaluate, evaluate_json, expression_multiset, EvalError, ReportJson};
pub use expr::{parse_expression, ParseError, ProductExpr};
pub mod harness;
pub mod sample;

pub use harness::{
    run_bound_checks, run_formula_checks, CheckSuiteReport, PropCheck, Quantity, Ranges, Verdict,
    ERRATA,
};
pub mod cli;
