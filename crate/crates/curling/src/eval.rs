//! Evaluating product expressions into curling reports.

use std::path::Path;

use curling_core::{
    curling_report, multiset_compound_curling_number, multiset_curling_number, product,
    product_degree_multiset, CurlingError, CurlingReport, DegreeMultiset, Graph, GraphError,
    RunDecomposition,
};
use serde::Serialize;
use thiserror::Error;

use crate::edgelist::{read_edge_list, EdgeListError};
use crate::expr::ProductExpr;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Curling(#[from] CurlingError),
}

/// Builds the graph an expression denotes. Relative `file(..)` paths are
/// resolved against `base`.
pub fn build_graph(expr: &ProductExpr, base: &Path) -> Result<Graph, EvalError> {
    Ok(match expr {
        ProductExpr::Atom(family) => family.generate()?,
        ProductExpr::File(path) => read_edge_list(base.join(path))?,
        ProductExpr::Binary { op, left, right } => {
            product(*op, &build_graph(left, base)?, &build_graph(right, base)?)
        }
    })
}

/// Degree multiset of an expression, combining leaf multisets without
/// building any product.
pub fn expression_multiset(expr: &ProductExpr, base: &Path) -> Result<DegreeMultiset, EvalError> {
    Ok(match expr {
        ProductExpr::Atom(family) => family.generate()?.degree_multiset(),
        ProductExpr::File(path) => read_edge_list(base.join(path))?.degree_multiset(),
        ProductExpr::Binary { op, left, right } => product_degree_multiset(
            *op,
            &expression_multiset(left, base)?,
            &expression_multiset(right, base)?,
        )?,
    })
}

pub fn evaluate(expr: &ProductExpr, base: &Path) -> Result<CurlingReport, EvalError> {
    Ok(curling_report(&build_graph(expr, base)?)?)
}

/// Serialized form of a report. The fields that need the materialized graph
/// are `None` for reports computed from multisets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_sequence: Option<Vec<usize>>,
    /// `[value, length]` pairs.
    pub runs: Vec<(usize, usize)>,
    pub cn: usize,
    pub cnc: u64,
    pub string_cn: usize,
}

fn run_pairs(runs: &RunDecomposition) -> Vec<(usize, usize)> {
    runs.iter().map(|r| (r.value, r.length)).collect()
}

impl From<&CurlingReport> for ReportJson {
    fn from(r: &CurlingReport) -> Self {
        ReportJson {
            order: Some(r.order),
            size: Some(r.size),
            degree_sequence: Some(r.degree_sequence.clone()),
            runs: run_pairs(&r.runs),
            cn: r.cn,
            cnc: r.cnc,
            string_cn: r.string_cn,
        }
    }
}

impl ReportJson {
    pub fn from_multiset(m: &DegreeMultiset) -> Result<Self, CurlingError> {
        let runs = RunDecomposition::from_multiset(m);
        Ok(ReportJson {
            order: None,
            size: None,
            degree_sequence: None,
            runs: run_pairs(&runs),
            cn: multiset_curling_number(m),
            cnc: multiset_compound_curling_number(m)?,
            string_cn: runs.string_curling_number(),
        })
    }

    /// Multi-line text rendering.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        if let Some(order) = self.order {
            lines.push(format!("order            {order}"));
        }
        if let Some(size) = self.size {
            lines.push(format!("size             {size}"));
        }
        if let Some(seq) = &self.degree_sequence {
            let seq: Vec<String> = seq.iter().map(usize::to_string).collect();
            lines.push(format!("degree sequence  ({})", seq.join(",")));
        }
        let runs: Vec<String> = self.runs.iter().map(|(v, l)| format!("{v}^{l}")).collect();
        lines.push(format!("runs             {}", runs.join(" ")));
        lines.push(format!("cn               {}", self.cn));
        lines.push(format!("cnc              {}", self.cnc));
        lines.push(format!("string cn        {}", self.string_cn));
        lines.join("\n")
    }
}

/// Evaluates an expression, optionally via multisets only.
pub fn evaluate_json(expr: &ProductExpr, base: &Path, fast: bool) -> Result<ReportJson, EvalError> {
    if fast {
        Ok(ReportJson::from_multiset(&expression_multiset(
            expr, base,
        )?)?)
    } else {
        Ok(ReportJson::from(&evaluate(expr, base)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expression;

    fn eval(text: &str) -> CurlingReport {
        evaluate(&parse_expression(text).unwrap(), Path::new(".")).unwrap()
    }

    #[test]
    fn examples() {
        let k4 = eval("K4");
        assert_eq!((k4.cn, k4.cnc), (4, 4));
        let ladder = eval("P5 box P2");
        assert_eq!((ladder.cn, ladder.cnc), (6, 24));
        let c = eval("C4 x P2");
        assert_eq!((c.cn, c.cnc), (8, 8));
    }

    #[test]
    fn fast_path_agrees() {
        for text in [
            "K4",
            "P5 box P2",
            "(K3 + K2) o K1",
            "S4 strong P5 x C3",
            "E2 x K3 + P4",
        ] {
            let e = parse_expression(text).unwrap();
            let slow = evaluate_json(&e, Path::new("."), false).unwrap();
            let fast = evaluate_json(&e, Path::new("."), true).unwrap();
            assert_eq!(
                (slow.cn, slow.cnc, slow.string_cn),
                (fast.cn, fast.cnc, fast.string_cn)
            );
            assert_eq!(slow.runs, fast.runs);
            assert!(fast.order.is_none() && fast.degree_sequence.is_none());
        }
    }

    #[test]
    fn json_keys() {
        let e = parse_expression("C3 box C3").unwrap();
        let json = serde_json::to_value(evaluate_json(&e, Path::new("."), false).unwrap()).unwrap();
        assert_eq!(json["cn"], 9);
        assert_eq!(json["cnc"], 9);
        assert_eq!(json["runs"], serde_json::json!([[4, 9]]));
        let fast = serde_json::to_value(evaluate_json(&e, Path::new("."), true).unwrap()).unwrap();
        assert!(fast.get("order").is_none() && fast.get("size").is_none());
    }

    #[test]
    fn missing_file() {
        let e = parse_expression("file(definitely-missing.el)").unwrap();
        assert!(matches!(
            evaluate(&e, Path::new(".")),
            Err(EvalError::EdgeList(EdgeListError::Io { .. }))
        ));
    }
}
