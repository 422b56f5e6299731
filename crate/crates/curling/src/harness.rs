//! Mechanical replay of the closed-form curling-number results for named
//! families and products, plus seeded randomized bound and oracle checks.
//!
//! Every check compares an expected value (a number, a closed interval or a
//! degree multiset) against the value computed on an explicitly constructed
//! graph. Mismatches on entries of [`ERRATA`] are reported as
//! [`Verdict::KnownErratum`] instead of [`Verdict::Fail`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::str::FromStr;

use curling_core::{
    cartesian, compound_curling_number, corona, graph_curling_number, join, product,
    product_degree_multiset, strong, tensor, DegreeMultiset, Family, Graph, ProductKind,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::sample::{random_graph, random_regular};

/// Check ids whose published closed form disagrees with the construction.
///
/// - `table1.knn-cnc`: `K_{n,n}` is regular on `2n` vertices, so its
///   compound curling number is `2n`, not `n^2`.
/// - `sec3.stacked-book-degrees`: the hub degrees of `K_{1,m} □ P_n` are
///   `m+2` and `m+1`, not the literal `5` and `4` (which only hold for
///   `m = 3`).
pub const ERRATA: [&str; 2] = ["table1.knn-cnc", "sec3.stacked-book-degrees"];

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Param {
    Int(u64),
    Text(String),
}

impl From<usize> for Param {
    fn from(v: usize) -> Self {
        Param::Int(v as u64)
    }
}

impl From<u64> for Param {
    fn from(v: u64) -> Self {
        Param::Int(v)
    }
}

impl From<String> for Param {
    fn from(v: String) -> Self {
        Param::Text(v)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_string())
    }
}

impl From<Family> for Param {
    fn from(f: Family) -> Self {
        Param::Text(f.to_string())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Text(s) => f.write_str(s),
        }
    }
}

pub type Params = BTreeMap<String, Param>;

macro_rules! params {
    ($($k:literal => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut m = Params::new();
        $(m.insert($k.to_string(), Param::from($v));)*
        m
    }};
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(u64),
    /// Closed interval `[min, max]`.
    Bounds {
        min: u64,
        max: u64,
    },
    /// `[degree, multiplicity]` pairs, degrees decreasing.
    Multiset(Vec<(usize, usize)>),
}

impl Quantity {
    pub fn multiset(m: &DegreeMultiset) -> Self {
        Quantity::Multiset(m.iter().rev().collect())
    }

    /// Whether `actual` satisfies this expectation.
    pub fn admits(&self, actual: &Quantity) -> bool {
        match (self, actual) {
            (Quantity::Bounds { min, max }, Quantity::Int(v)) => min <= v && v <= max,
            _ => self == actual,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Bounds { min, max } => write!(f, "[{min}, {max}]"),
            Quantity::Multiset(pairs) => {
                let parts: Vec<String> = pairs.iter().map(|(d, c)| format!("{d}^{c}")).collect();
                write!(f, "{{{}}}", parts.join(" "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    KnownErratum,
    /// Recorded value with no claim attached.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PropCheck {
    pub prop_id: String,
    pub params: Params,
    pub expected: Option<Quantity>,
    pub actual: Quantity,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub known_erratum: usize,
    pub info: usize,
}

impl VerdictCounts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::KnownErratum => self.known_erratum += 1,
            Verdict::Info => self.info += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckSuiteReport {
    pub checks: Vec<PropCheck>,
    /// Seed of the randomized checks, if any ran.
    pub seed: Option<u64>,
}

impl CheckSuiteReport {
    fn finish(mut checks: Vec<PropCheck>, seed: Option<u64>) -> Self {
        checks.sort();
        CheckSuiteReport { checks, seed }
    }

    pub fn merge(mut self, other: CheckSuiteReport) -> Self {
        self.checks.extend(other.checks);
        self.checks.sort();
        self.seed = self.seed.or(other.seed);
        self
    }

    pub fn counts(&self) -> VerdictCounts {
        let mut c = VerdictCounts::default();
        for check in &self.checks {
            c.add(check.verdict);
        }
        c
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    /// Ids that produced at least one check with verdict `v`.
    pub fn ids_with(&self, v: Verdict) -> BTreeSet<&str> {
        self.checks
            .iter()
            .filter(|c| c.verdict == v)
            .map(|c| c.prop_id.as_str())
            .collect()
    }

    pub fn with_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a PropCheck> + 'a {
        self.checks.iter().filter(move |c| c.prop_id == id)
    }

    /// The checks as a JSON array of `{prop_id, params, expected, actual,
    /// verdict}` objects.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.checks).expect("report serializes")
    }

    /// Per-id verdict counts, followed by every failure, erratum and
    /// informational record.
    pub fn to_table(&self) -> String {
        let mut per_id: BTreeMap<&str, VerdictCounts> = BTreeMap::new();
        for c in &self.checks {
            per_id.entry(&c.prop_id).or_default().add(c.verdict);
        }
        let width = per_id.keys().map(|k| k.len()).max().unwrap_or(8).max(8);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:width$}  {:>6}  {:>6}  {:>8}  {:>6}",
            "prop_id", "pass", "fail", "erratum", "info"
        );
        for (id, c) in &per_id {
            let _ = writeln!(
                out,
                "{id:width$}  {:>6}  {:>6}  {:>8}  {:>6}",
                c.pass, c.fail, c.known_erratum, c.info
            );
        }
        for c in self.checks.iter().filter(|c| c.verdict != Verdict::Pass) {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let expected = c
                .expected
                .as_ref()
                .map_or("-".to_string(), |q| q.to_string());
            let _ = writeln!(
                out,
                "{:?} {} [{}] expected {} actual {}",
                c.verdict,
                c.prop_id,
                params.join(", "),
                expected,
                c.actual
            );
        }
        let t = self.counts();
        let _ = write!(
            out,
            "total {} checks: {} pass, {} fail, {} known erratum, {} info",
            self.checks.len(),
            t.pass,
            t.fail,
            t.known_erratum,
            t.info
        );
        if let Some(seed) = self.seed {
            let _ = write!(out, " (seed {seed})");
        }
        out
    }
}

/// Inclusive bounds on family parameters. Each check further clamps the
/// lower end to the smallest parameter its formula is stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ranges {
    pub lo: usize,
    pub hi: usize,
}

impl Default for Ranges {
    fn default() -> Self {
        Ranges { lo: 2, hi: 12 }
    }
}

impl Ranges {
    pub fn span(&self, min: usize) -> RangeInclusive<usize> {
        self.lo.max(min)..=self.hi
    }
}

impl FromStr for Ranges {
    type Err = String;

    /// Accepts `a..b` or `a..=b`, both inclusive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Ranges { lo, hi })
    }
}

fn graph(f: Family) -> Graph {
    f.generate().expect("harness families are valid")
}

fn cn(g: &Graph) -> u64 {
    graph_curling_number(g) as u64
}

fn cnc(g: &Graph) -> u64 {
    compound_curling_number(g).expect("harness graphs stay far below overflow")
}

fn u(v: usize) -> u64 {
    v as u64
}

fn ms(pairs: &[(usize, usize)]) -> Quantity {
    Quantity::multiset(&DegreeMultiset::from_counts(pairs.iter().copied()))
}

#[derive(Default)]
struct Recorder {
    checks: Vec<PropCheck>,
}

impl Recorder {
    fn check(&mut self, id: &str, params: Params, expected: Quantity, actual: Quantity) {
        let verdict = if expected.admits(&actual) {
            Verdict::Pass
        } else if ERRATA.contains(&id) {
            Verdict::KnownErratum
        } else {
            Verdict::Fail
        };
        self.checks.push(PropCheck {
            prop_id: id.to_string(),
            params,
            expected: Some(expected),
            actual,
            verdict,
        });
    }

    fn int(&mut self, id: &str, params: Params, expected: u64, actual: u64) {
        self.check(id, params, Quantity::Int(expected), Quantity::Int(actual));
    }

    /// Records `<prefix>-cn` and `<prefix>-cnc` for graph `g`.
    fn invariants(&mut self, prefix: &str, params: Params, expected: (u64, u64), g: &Graph) {
        self.int(&format!("{prefix}-cn"), params.clone(), expected.0, cn(g));
        self.int(&format!("{prefix}-cnc"), params, expected.1, cnc(g));
    }

    fn degrees(&mut self, id: &str, params: Params, expected: Quantity, g: &Graph) {
        self.check(
            id,
            params,
            expected,
            Quantity::multiset(&g.degree_multiset()),
        );
    }

    fn info(&mut self, id: &str, params: Params, actual: Quantity) {
        self.checks.push(PropCheck {
            prop_id: id.to_string(),
            params,
            expected: None,
            actual,
            verdict: Verdict::Info,
        });
    }
}

/// Replays every closed-form result over the family parameters in `ranges`.
pub fn run_formula_checks(ranges: Ranges) -> CheckSuiteReport {
    let mut r = Recorder::default();
    table_one(&mut r, ranges);
    regular_law(&mut r, ranges);
    join_checks(&mut r, ranges);
    cartesian_checks(&mut r, ranges);
    strong_checks(&mut r, ranges);
    corona_checks(&mut r, ranges);
    tensor_checks(&mut r, ranges);
    CheckSuiteReport::finish(r.checks, None)
}

fn table_one(r: &mut Recorder, ranges: Ranges) {
    for n in ranges.span(1) {
        let g = graph(Family::Complete(n));
        r.invariants("table1.complete", params!("n" => n), (u(n), u(n)), &g);
    }
    for m in ranges.span(1) {
        for n in ranges.span(1) {
            let g = graph(Family::CompleteBipartite(m, n));
            let p = params!("m" => m, "n" => n);
            if m != n {
                r.invariants("table1.kmn", p, (u(m.max(n)), u(m * n)), &g);
            } else {
                r.int("table1.knn-cn", p.clone(), u(2 * n), cn(&g));
                r.int("table1.knn-cnc", p.clone(), u(n * n), cnc(&g));
                r.int("prop1.5.knn-cnc", p, u(2 * n), cnc(&g));
            }
        }
    }
    for n in ranges.span(1) {
        let g = graph(Family::Path(n));
        let p = params!("n" => n);
        if n >= 4 {
            r.invariants("table1.path", p, (u(n - 2), u(2 * (n - 2))), &g);
        } else {
            r.info("table1.path-cn", p.clone(), Quantity::Int(cn(&g)));
            r.info("table1.path-cnc", p, Quantity::Int(cnc(&g)));
        }
    }
    for n in ranges.span(3) {
        let g = graph(Family::Cycle(n));
        r.invariants("table1.cycle", params!("n" => n), (u(n), u(n)), &g);
    }
}

/// Cycles, complete graphs and balanced complete bipartite graphs whose
/// parameter lies in `ranges`.
fn regular_pool(ranges: Ranges, nontrivial: bool) -> Vec<Family> {
    let mut pool: Vec<Family> = ranges.span(3).map(Family::Cycle).collect();
    pool.extend(
        ranges
            .span(if nontrivial { 2 } else { 1 })
            .map(Family::Complete),
    );
    pool.extend(
        ranges
            .span(1)
            .filter(|m| 2 * m <= ranges.hi)
            .map(|m| Family::CompleteBipartite(m, m)),
    );
    pool
}

fn regular_law(r: &mut Recorder, ranges: Ranges) {
    for f in regular_pool(ranges, false) {
        let g = graph(f);
        let n = u(g.order());
        r.invariants("prop1.5.regular", params!("g" => f), (n, n), &g);
    }
}

fn join_checks(r: &mut Recorder, ranges: Ranges) {
    let pool = regular_pool(ranges, false);
    let mut witnesses = 0;
    for &f1 in &pool {
        for &f2 in &pool {
            let (g1, g2) = (graph(f1), graph(f2));
            let (n1, n2) = (g1.order(), g2.order());
            let (r1, r2) = (g1.degree(0), g2.degree(0));
            let h = join(&g1, &g2);
            let p = params!("g1" => f1, "g2" => f2);
            let expected = if r1 + n2 == r2 + n1 {
                witnesses += 1;
                (u(n1 + n2), u(n1 + n2))
            } else {
                (u(n1.max(n2)), u(n1 * n2))
            };
            r.invariants("sec2.regular-join", p, expected, &h);
        }
    }
    r.info(
        "sec2.regular-join-equality-witnesses",
        params!(),
        Quantity::Int(witnesses),
    );
}

fn cartesian_checks(r: &mut Recorder, ranges: Ranges) {
    let pool: Vec<Family> = ranges
        .span(3)
        .map(Family::Cycle)
        .chain(ranges.span(1).map(Family::Complete))
        .collect();
    for &f1 in &pool {
        for &f2 in &pool {
            let (g1, g2) = (graph(f1), graph(f2));
            let n = u(g1.order() * g2.order());
            let p = params!("g1" => f1, "g2" => f2);
            r.invariants(
                "sec3.regular-box-regular",
                p.clone(),
                (n, n),
                &cartesian(&g1, &g2),
            );
            r.invariants(
                "sec4.regular-strong-regular",
                p.clone(),
                (n, n),
                &strong(&g1, &g2),
            );
            r.invariants("sec6.regular-tensor-regular", p, (n, n), &tensor(&g1, &g2));
        }
    }

    let p2 = graph(Family::Path(2));
    for m in ranges.span(3) {
        let g = cartesian(&graph(Family::Path(m)), &p2);
        let expected = (u(4usize.max(2 * m - 4)), u(8 * (m - 2)));
        r.invariants("sec3.ladder", params!("m" => m), expected, &g);
    }

    for m in ranges.span(3) {
        for n in ranges.span(3) {
            let g = cartesian(&graph(Family::Path(m)), &graph(Family::Path(n)));
            let p = params!("m" => m, "n" => n);
            let interior = (m - 2) * (n - 2);
            let border = 2 * (m + n - 4);
            let expected = (u(border.max(interior)), u(8 * interior * (m + n - 4)));
            r.invariants("sec3.grid", p.clone(), expected, &g);
            r.int(
                "sec3.grid-cnc-expanded",
                p.clone(),
                u(8 * ((m - 2) * (m - 2) * (n - 2) + (m - 2) * (n - 2) * (n - 2))),
                cnc(&g),
            );
            r.degrees(
                "sec3.grid-degrees",
                p,
                ms(&[(4, interior), (3, border), (2, 4)]),
                &g,
            );
        }
    }

    for m in ranges.span(3) {
        let cycle = graph(Family::Cycle(m));
        let p = params!("m" => m);
        let g = cartesian(&cycle, &p2);
        r.invariants("sec3.prism-p2", p.clone(), (u(2 * m), u(2 * m)), &g);
        let g = cartesian(&cycle, &graph(Family::Path(3)));
        r.invariants("sec3.prism-p3", p, (u(2 * m), u(2 * m * m)), &g);
        for n in ranges.span(4) {
            let g = cartesian(&cycle, &graph(Family::Path(n)));
            let p = params!("m" => m, "n" => n);
            let expected = (u(m * (n - 2)), u(2 * m * m * (n - 2)));
            r.invariants("sec3.prism", p.clone(), expected, &g);
            r.degrees(
                "sec3.prism-degrees",
                p,
                ms(&[(4, m * (n - 2)), (3, 2 * m)]),
                &g,
            );
        }
        for n in ranges.span(3) {
            let g = cartesian(&cycle, &graph(Family::Cycle(n)));
            let mn = u(m * n);
            r.invariants("sec3.torus", params!("m" => m, "n" => n), (mn, mn), &g);
        }
    }

    for m in ranges.span(2) {
        let star = graph(Family::Star(m));
        let p = params!("m" => m);
        let g = cartesian(&star, &p2);
        r.invariants("sec3.book", p.clone(), (u(2 * m), u(4 * m)), &g);
        r.degrees(
            "sec3.book-degrees",
            p.clone(),
            ms(&[(2, 2 * m), (m + 1, 2)]),
            &g,
        );
        let g = cartesian(&star, &graph(Family::Path(3)));
        r.invariants("sec3.book3", p.clone(), (u(2 * m), u(4 * m * m)), &g);
        let literal = ms(&[(2, 2 * m), (3, m), (m + 1, 2), (m + 2, 1)]);
        r.degrees("sec3.book3-degrees", p, literal, &g);
    }

    for m in ranges.span(3) {
        let star = graph(Family::Star(m));
        for n in ranges.span(4) {
            let g = cartesian(&star, &graph(Family::Path(n)));
            let p = params!("m" => m, "n" => n);
            let cn_expected = m * (n - 2);
            let expected = (u(cn_expected), u(4 * m * m * (n - 2) * (n - 2)));
            r.invariants("sec3.stacked-book", p.clone(), expected, &g);
            r.int(
                "sec3.stacked-book-cnc-square",
                p.clone(),
                u(2 * cn_expected).pow(2),
                cnc(&g),
            );
            let literal = ms(&[(5, n - 2), (4, 2), (3, m * (n - 2)), (2, 2 * m)]);
            r.degrees("sec3.stacked-book-degrees", p.clone(), literal, &g);
            let corrected = ms(&[(m + 2, n - 2), (m + 1, 2), (3, m * (n - 2)), (2, 2 * m)]);
            r.degrees("sec3.stacked-book-degrees-corrected", p, corrected, &g);
        }
    }
}

fn strong_checks(r: &mut Recorder, ranges: Ranges) {
    let p2 = graph(Family::Path(2));
    r.degrees(
        "sec4.p2-p2-is-k4",
        params!(),
        ms(&[(3, 4)]),
        &strong(&p2, &p2),
    );

    for m in ranges.span(3) {
        for n in ranges.span(3) {
            let (pm, pn) = (graph(Family::Path(m)), graph(Family::Path(n)));
            let g = strong(&pm, &pn);
            let p = params!("m" => m, "n" => n);
            let interior = (m - 2) * (n - 2);
            let border = 2 * (m + n - 4);
            let expected = (u(border.max(interior)), u(8 * interior * (m + n - 4)));
            r.invariants("sec4.grid", p.clone(), expected, &g);
            r.degrees(
                "sec4.grid-degrees",
                p.clone(),
                ms(&[(8, interior), (5, border), (3, 4)]),
                &g,
            );
            r.int(
                "sec4.grid-cnc-matches-cartesian",
                p,
                cnc(&cartesian(&pm, &pn)),
                cnc(&g),
            );
        }
    }

    for m in ranges.span(3) {
        let cycle = graph(Family::Cycle(m));
        let g = strong(&cycle, &p2);
        r.invariants("sec4.prism-p2", params!("m" => m), (u(2 * m), u(2 * m)), &g);
        for n in ranges.span(3) {
            let path = graph(Family::Path(n));
            let g = strong(&cycle, &path);
            let p = params!("m" => m, "n" => n);
            let expected = (u((2 * m).max(m * (n - 2))), u(2 * m * m * (n - 2)));
            r.invariants("sec4.prism", p.clone(), expected, &g);
            r.degrees(
                "sec4.prism-degrees",
                p.clone(),
                ms(&[(5, 2 * m), (8, m * (n - 2))]),
                &g,
            );
            r.int(
                "sec4.prism-cnc-matches-cartesian",
                p,
                cnc(&cartesian(&cycle, &path)),
                cnc(&g),
            );
            let g = strong(&cycle, &graph(Family::Cycle(n)));
            let mn = u(m * n);
            r.invariants("sec4.torus", params!("m" => m, "n" => n), (mn, mn), &g);
        }
    }

    for m in ranges.span(2) {
        let g = strong(&graph(Family::Star(m)), &p2);
        r.invariants("sec4.book", params!("m" => m), (u(2 * m), u(4 * m)), &g);
    }
    for m in ranges.span(3) {
        let star = graph(Family::Star(m));
        for n in ranges.span(3) {
            let path = graph(Family::Path(n));
            let g = strong(&star, &path);
            let p = params!("m" => m, "n" => n);
            let expected = (
                u((2 * m).max(m * (n - 2))),
                u(4 * m * m * (n - 2) * (n - 2)),
            );
            r.invariants("sec4.stacked-book", p.clone(), expected, &g);
            let literal = ms(&[
                (3, 2 * m),
                (5, m * (n - 2)),
                (2 * m + 1, 2),
                (3 * m + 2, n - 2),
            ]);
            r.degrees("sec4.stacked-book-degrees", p.clone(), literal, &g);
            if n >= 4 {
                let book = cartesian(&star, &path);
                r.int(
                    "sec4.stacked-book-cnc-matches-cartesian",
                    p,
                    cnc(&book),
                    cnc(&g),
                );
            }
        }
    }
}

fn corona_checks(r: &mut Recorder, ranges: Ranges) {
    let pool = regular_pool(ranges, true);
    let mut witnesses = 0;
    for &f1 in &pool {
        for &f2 in &pool {
            let (g1, g2) = (graph(f1), graph(f2));
            let (n1, n2) = (g1.order(), g2.order());
            let (r1, r2) = (g1.degree(0), g2.degree(0));
            let h = corona(&g1, &g2);
            let p = params!("g1" => f1, "g2" => f2);
            let expected = if r1 + n2 == 1 + r2 {
                witnesses += 1;
                (u(n1 * (1 + n2)), u(n1 * (1 + n2)))
            } else {
                (u(n1 * n2), u(n1 * n1 * n2))
            };
            r.invariants("sec5.regular-corona", p, expected, &h);
        }
    }
    r.info(
        "sec5.regular-corona-equality-witnesses",
        params!(),
        Quantity::Int(witnesses),
    );
}

fn tensor_checks(r: &mut Recorder, ranges: Ranges) {
    let p2 = graph(Family::Path(2));
    r.invariants("sec6.p2-p2", params!(), (4, 4), &tensor(&p2, &p2));
    r.invariants(
        "sec6.p3-p2",
        params!(),
        (4, 8),
        &tensor(&graph(Family::Path(3)), &p2),
    );
    for m in ranges.span(4) {
        let g = tensor(&graph(Family::Path(m)), &p2);
        let expected = (u(2 * m - 4), u(8 * (m - 2)));
        r.invariants("sec6.path-p2", params!("m" => m), expected, &g);
        r.degrees(
            "sec6.path-p2-degrees",
            params!("m" => m),
            ms(&[(2, 2 * (m - 2)), (1, 4)]),
            &g,
        );
    }
    for m in ranges.span(3) {
        for n in ranges.span(3) {
            let g = tensor(&graph(Family::Path(m)), &graph(Family::Path(n)));
            let interior = (m - 2) * (n - 2);
            let border = 2 * (m + n - 4);
            let expected = (u(border.max(interior)), u(8 * interior * (m + n - 4)));
            r.invariants("sec6.paths", params!("m" => m, "n" => n), expected, &g);
        }
    }
    for m in ranges.span(3) {
        let cycle = graph(Family::Cycle(m));
        let g = tensor(&cycle, &p2);
        r.invariants("sec6.cycle-p2", params!("m" => m), (u(2 * m), u(2 * m)), &g);
        for n in ranges.span(3) {
            let g = tensor(&cycle, &graph(Family::Path(n)));
            let p = params!("m" => m, "n" => n);
            let expected = (u((2 * m).max(m * (n - 2))), u(2 * m * m * (n - 2)));
            r.invariants("sec6.cycle-path", p.clone(), expected, &g);
            r.degrees(
                "sec6.cycle-path-degrees",
                p,
                ms(&[(2, 2 * m), (4, m * (n - 2))]),
                &g,
            );
        }
    }
}

/// Randomized checks on `samples` seeded pairs of graphs with order at most
/// `max_order`, preceded by the fixed pairs `(K1, K1)` and `(C5, C6)`.
///
/// Asserts the join and corona bounds, multiset-vs-explicit equality for
/// all five products, and the regular-factor laws for the Cartesian and
/// tensor products. The number of pairs where `cn` of a product differs from
/// the product of the factors' `cn` is recorded per kind as information.
pub fn run_bound_checks(samples: usize, max_order: usize, seed: u64) -> CheckSuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Recorder::default();
    let mut pairs = vec![
        (graph(Family::Complete(1)), graph(Family::Complete(1))),
        (graph(Family::Cycle(5)), graph(Family::Cycle(6))),
    ];
    pairs.extend((0..samples).map(|_| {
        (
            random_graph(&mut rng, max_order),
            random_graph(&mut rng, max_order),
        )
    }));

    let mut non_factoring: BTreeMap<ProductKind, u64> = BTreeMap::new();
    for (i, (g1, g2)) in pairs.iter().enumerate() {
        let p = params!("sample" => i, "n1" => g1.order(), "n2" => g2.order());
        let (a, b) = (cn(g1), cn(g2));
        let n1 = u(g1.order());

        let join_cn = cn(&join(g1, g2));
        r.check(
            "thm2.1",
            p.clone(),
            Quantity::Bounds {
                min: a.max(b),
                max: a + b,
            },
            Quantity::Int(join_cn),
        );
        let corona_cn = cn(&corona(g1, g2));
        r.check(
            "thm5.1",
            p.clone(),
            Quantity::Bounds {
                min: n1 * b,
                max: a + n1 * b,
            },
            Quantity::Int(corona_cn),
        );

        let (m1, m2) = (g1.degree_multiset(), g2.degree_multiset());
        for kind in ProductKind::ALL {
            let explicit = product(kind, g1, g2);
            let predicted = product_degree_multiset(kind, &m1, &m2).expect("small multisets");
            r.check(
                &format!("oracle.{kind}"),
                p.clone(),
                Quantity::multiset(&predicted),
                Quantity::multiset(&explicit.degree_multiset()),
            );
            if cn(&explicit) != a * b {
                *non_factoring.entry(kind).or_default() += 1;
            }
        }

        let (f, reg) = random_regular(&mut rng, max_order, 0);
        let mut q = p.clone();
        q.insert("regular".into(), Param::from(f));
        r.int(
            "sec3.regular-box-arbitrary",
            q,
            u(reg.order()) * b,
            cn(&cartesian(&reg, g2)),
        );

        let (f, reg) = random_regular(&mut rng, max_order, 1);
        let mut q = p;
        q.insert("regular".into(), Param::from(f));
        r.int(
            "sec6.regular-tensor-arbitrary",
            q,
            u(reg.order()) * b,
            cn(&tensor(&reg, g2)),
        );
    }
    for kind in ProductKind::ALL {
        r.info(
            "conclusion.cn-factorization-counterexamples",
            params!("kind" => kind.name(), "pairs" => pairs.len()),
            Quantity::Int(non_factoring.get(&kind).copied().unwrap_or(0)),
        );
    }
    CheckSuiteReport::finish(r.checks, Some(seed))
}
