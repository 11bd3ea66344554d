//! Graph enumeration, invariant tables, classification reports and the
//! formula-against-oracle sweep behind the command-line tool.
//!
//! Every report is plain text with a fixed column or field order, and the
//! sweep sorts its records before rendering, so output does not depend on
//! the number of worker threads.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use itertools::Itertools;
use rayon::prelude::*;

use crate::classify::{condition_class, find_obstruction, is_matroid, MatroidMethod};
use crate::error::{Error, Result};
use crate::formulas::{a1_formula, a2_formula, greg_formula, is_cm, FormulaResult};
use crate::graph::{CanonicalForm, Graph};
use crate::takayama::{InvariantValue, OracleTable};

/// Every graph on `r` vertices with at least one edge, `3 <= r <= 7`.
///
/// Without `with_isolated`, graphs with an isolated vertex are skipped. With
/// `dedupe`, one graph per isomorphism class is kept, namely the one built
/// from the canonical form, and the result is sorted by canonical form.
/// Otherwise graphs come in the order of their edge bitmask.
pub fn enumerate_graphs(r: usize, with_isolated: bool, dedupe: bool) -> Result<Vec<Graph>> {
    if !(3..=7).contains(&r) {
        return Err(Error::InvalidArgument(format!(
            "vertex count must be between 3 and 7, got {r}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..r).tuple_combinations().collect();
    let graphs = (1u64..1 << pairs.len()).map(|mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(r, edges).expect("pairs are distinct non-loops")
    });
    let graphs = graphs.filter(|g| with_isolated || g.isolated_vertices().is_empty());
    if !dedupe {
        return Ok(graphs.collect());
    }
    let forms: BTreeSet<CanonicalForm> = graphs.map(|g| g.canonical_form()).collect();
    Ok(forms.into_iter().map(|f| f.graph()).collect())
}

/// Which values [`run_invariants`] fills in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    fn formula(self) -> bool {
        self != Method::Oracle
    }

    fn oracle(self) -> bool {
        self != Method::Formula
    }
}

/// One cell of an invariants table. `None` means the value was not asked
/// for; `Some("N/A")` means it was asked for but is undefined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub formula: Option<String>,
    pub oracle: Option<String>,
}

const NA: &str = "N/A";

impl Cell {
    /// `Some(true)` when both sides are present, defined and equal.
    pub fn matches(&self) -> Option<bool> {
        match (&self.formula, &self.oracle) {
            (Some(f), Some(o)) if f != NA && o != NA => Some(f == o),
            _ => None,
        }
    }

    fn render(&self) -> String {
        match (&self.formula, &self.oracle) {
            (Some(f), Some(o)) => {
                let flag = match self.matches() {
                    Some(true) => "ok",
                    Some(false) => "MISMATCH",
                    None => "-",
                };
                format!("{f}/{o}/{flag}")
            }
            (Some(v), None) | (None, Some(v)) => v.clone(),
            (None, None) => String::new(),
        }
    }
}

/// One row of [`run_invariants`]: the invariants of `S/I_G^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantsRow {
    pub n: u32,
    pub a1: Cell,
    pub a2: Cell,
    pub greg: Cell,
    /// `reg(S/I_G^(n))`; its closed form is the geometric regularity formula.
    pub reg_symbolic: Cell,
    pub cm: Cell,
    pub branches: [String; 3],
}

impl InvariantsRow {
    pub fn cells(&self) -> [&Cell; 5] {
        [&self.a1, &self.a2, &self.greg, &self.reg_symbolic, &self.cm]
    }

    pub fn has_mismatch(&self) -> bool {
        self.cells().iter().any(|c| c.matches() == Some(false))
    }
}

/// Output of [`run_invariants`], rendered by [`InvariantsTable::to_table`]
/// and [`InvariantsTable::to_csv`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantsTable {
    pub rows: Vec<InvariantsRow>,
}

/// Column order of invariants tables. New columns go at the end.
pub const INVARIANT_COLUMNS: [&str; 9] = [
    "n",
    "a1",
    "a2",
    "greg",
    "reg_symbolic",
    "cm",
    "a1_branch",
    "a2_branch",
    "greg_branch",
];

impl InvariantsTable {
    fn records(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                let mut rec = vec![r.n.to_string()];
                rec.extend(r.cells().iter().map(|c| c.render()));
                rec.extend(r.branches.iter().cloned());
                rec
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = INVARIANT_COLUMNS.join(",");
        out.push('\n');
        for rec in self.records() {
            out.push_str(&rec.join(","));
            out.push('\n');
        }
        out
    }

    /// Columns padded to a common width.
    pub fn to_table(&self) -> String {
        let mut recs = vec![INVARIANT_COLUMNS.iter().map(|s| s.to_string()).collect_vec()];
        recs.extend(self.records());
        let widths: Vec<usize> = (0..INVARIANT_COLUMNS.len())
            .map(|k| recs.iter().map(|r| r[k].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for rec in recs {
            let line = rec
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .join("  ");
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn has_mismatch(&self) -> bool {
        self.rows.iter().any(InvariantsRow::has_mismatch)
    }
}

fn formula_text(r: &Result<FormulaResult>) -> (String, String) {
    match r {
        Ok(f) => (f.value.to_string(), f.branch.clone()),
        Err(_) => (NA.to_string(), String::new()),
    }
}

/// `a_0 = a_1 = -∞`, the Cohen–Macaulay test for a 2-dimensional quotient.
fn oracle_cm(t: &OracleTable) -> bool {
    t.a(0).is_neg_infinity() && t.a(1).is_neg_infinity()
}

/// Invariants of `S/I_G^n` for `n = 1..=n_max`.
///
/// Formula columns read `N/A` outside the closed forms' domain; the oracle
/// columns need only an edge.
pub fn run_invariants(g: &Graph, n_max: u32, method: Method) -> Result<InvariantsTable> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n-max must be positive".into()));
    }
    let ideal = if method.oracle() {
        Some(g.stanley_reisner()?)
    } else {
        None
    };
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut row = InvariantsRow {
            n,
            a1: Cell { formula: None, oracle: None },
            a2: Cell { formula: None, oracle: None },
            greg: Cell { formula: None, oracle: None },
            reg_symbolic: Cell { formula: None, oracle: None },
            cm: Cell { formula: None, oracle: None },
            branches: Default::default(),
        };
        if method.formula() {
            let (a1, b1) = formula_text(&a1_formula(g, n));
            let (a2, b2) = formula_text(&a2_formula(g, n));
            let (gr, bg) = formula_text(&greg_formula(g, n));
            row.a1.formula = Some(a1);
            row.a2.formula = Some(a2);
            row.greg.formula = Some(gr.clone());
            row.reg_symbolic.formula = Some(gr);
            row.cm.formula = Some(is_cm(g, n).map_or(NA.to_string(), |b| b.to_string()));
            row.branches = [b1, b2, bg];
        }
        if let Some(ideal) = &ideal {
            let t = OracleTable::compute(&ideal.power(n))?;
            let sym = OracleTable::compute(&g.symbolic_power(n)?)?;
            row.a1.oracle = Some(t.a(1).to_string());
            row.a2.oracle = Some(t.a(2).to_string());
            row.greg.oracle = Some(t.greg().to_string());
            row.reg_symbolic.oracle = Some(sym.reg().to_string());
            row.cm.oracle = Some(oracle_cm(&t).to_string());
        }
        rows.push(row);
    }
    Ok(InvariantsTable { rows })
}

/// Settings for [`run_verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_vertices: usize,
    pub max_n: u32,
    pub with_isolated: bool,
    pub dedupe: bool,
    pub workers: usize,
}

/// The invariants compared by [`run_verify`], in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    A1,
    A2,
    Greg,
    /// Geometric regularity formula against `reg` of the symbolic power.
    RegSymbolic,
    /// [`is_cm`] against `a_0 = a_1 = -∞`; only for graphs without
    /// isolated vertices.
    CohenMacaulay,
}

impl Invariant {
    pub fn label(self) -> &'static str {
        match self {
            Invariant::A1 => "a1",
            Invariant::A2 => "a2",
            Invariant::Greg => "greg",
            Invariant::RegSymbolic => "reg_symbolic",
            Invariant::CohenMacaulay => "cm",
        }
    }
}

/// One formula-against-oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CaseRecord {
    pub canonical: CanonicalForm,
    pub graph: String,
    pub n: u32,
    pub invariant: Invariant,
    pub formula: String,
    pub branch: String,
    pub oracle: String,
    pub matches: bool,
}

impl fmt::Display for CaseRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "canon={} graph={} n={} invariant={} formula={} branch={} oracle={} match={}",
            self.canonical,
            self.graph,
            self.n,
            self.invariant.label(),
            self.formula,
            if self.branch.is_empty() { "-" } else { &self.branch },
            self.oracle,
            self.matches
        )
    }
}

/// Result of [`run_verify`]. Wall time is left to the caller so that the
/// rendered report is reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub config: VerifyConfig,
    pub graphs: usize,
    pub records: Vec<CaseRecord>,
}

impl VerificationReport {
    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| !r.matches).count()
    }

    /// One `key=value` line per record, then a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            writeln!(out, "{r}").unwrap();
        }
        writeln!(
            out,
            "summary max_vertices={} max_n={} isolated={} dedupe={} graphs={} cases={} mismatches={}",
            self.config.max_vertices,
            self.config.max_n,
            self.config.with_isolated,
            self.config.dedupe,
            self.graphs,
            self.records.len(),
            self.mismatches()
        )
        .unwrap();
        out
    }
}

fn compare(
    g: &Graph,
    canonical: CanonicalForm,
    n: u32,
    invariant: Invariant,
    formula: Result<FormulaResult>,
    oracle: InvariantValue,
) -> Result<CaseRecord> {
    let f = formula?;
    Ok(CaseRecord {
        canonical,
        graph: g.to_string(),
        n,
        invariant,
        formula: f.value.to_string(),
        branch: f.branch,
        oracle: oracle.to_string(),
        matches: f.value == oracle,
    })
}

/// All comparisons for one graph and one power.
pub fn verify_case(g: &Graph, n: u32) -> Result<Vec<CaseRecord>> {
    let canonical = g.canonical_form();
    let t = OracleTable::compute(&g.stanley_reisner()?.power(n))?;
    let sym = OracleTable::compute(&g.symbolic_power(n)?)?;
    let mut out = vec![
        compare(g, canonical, n, Invariant::A1, a1_formula(g, n), t.a(1))?,
        compare(g, canonical, n, Invariant::A2, a2_formula(g, n), t.a(2))?,
        compare(g, canonical, n, Invariant::Greg, greg_formula(g, n), t.greg())?,
        compare(g, canonical, n, Invariant::RegSymbolic, greg_formula(g, n), sym.reg())?,
    ];
    if g.isolated_vertices().is_empty() {
        let formula = is_cm(g, n)?;
        let oracle = oracle_cm(&t);
        out.push(CaseRecord {
            canonical,
            graph: g.to_string(),
            n,
            invariant: Invariant::CohenMacaulay,
            formula: formula.to_string(),
            branch: String::new(),
            oracle: oracle.to_string(),
            matches: formula == oracle,
        });
    }
    Ok(out)
}

/// Compares every closed form with the oracle on all graphs with
/// `3 <= r <= max_vertices` and all `n <= max_n`.
pub fn run_verify(config: VerifyConfig) -> Result<VerificationReport> {
    if !(3..=7).contains(&config.max_vertices) {
        return Err(Error::InvalidArgument(format!(
            "max-vertices must be between 3 and 7, got {}",
            config.max_vertices
        )));
    }
    if config.max_n == 0 {
        return Err(Error::InvalidArgument("max-n must be positive".into()));
    }
    if config.workers == 0 {
        return Err(Error::InvalidArgument("workers must be positive".into()));
    }
    let mut graphs = Vec::new();
    for r in 3..=config.max_vertices {
        graphs.extend(enumerate_graphs(r, config.with_isolated, config.dedupe)?);
    }
    let cases: Vec<(&Graph, u32)> = graphs
        .iter()
        .flat_map(|g| (1..=config.max_n).map(move |n| (g, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let results: Vec<Result<Vec<CaseRecord>>> =
        pool.install(|| cases.par_iter().map(|&(g, n)| verify_case(g, n)).collect());
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    records.sort();
    Ok(VerificationReport {
        config,
        graphs: graphs.len(),
        records,
    })
}

/// Profile, condition class and matroid verdicts of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyReport {
    pub lines: Vec<(String, String)>,
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl ClassifyReport {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

pub fn run_classify(g: &Graph) -> ClassifyReport {
    let p = g.profile();
    let mut lines: Vec<(String, String)> = vec![
        ("vertices".into(), g.nvertices().to_string()),
        ("edges".into(), g.nedges().to_string()),
        ("girth".into(), p.girth.to_string()),
        ("diameter".into(), p.diameter.to_string()),
        ("max_degree".into(), p.max_degree.to_string()),
        ("connected".into(), p.connected.to_string()),
        ("compact_vertices".into(), p.compact_vertices.to_string()),
        ("isolated_vertices".into(), p.isolated_vertices.to_string()),
    ];
    let class = match condition_class(g) {
        Ok(c) => c.to_string(),
        Err(e) => format!("{NA} ({e})"),
    };
    lines.push(("class".into(), class));
    let verdicts: Vec<Option<bool>> = MatroidMethod::ALL
        .iter()
        .map(|&m| is_matroid(g, m).ok())
        .collect();
    for (m, v) in MatroidMethod::ALL.iter().zip(&verdicts) {
        let text = match (v, m) {
            (Some(b), _) => b.to_string(),
            (None, MatroidMethod::Obstruction) => format!("{NA} (diameter > 2)"),
            (None, _) => NA.to_string(),
        };
        lines.push((format!("matroid.{}", m.label()), text));
    }
    let agree = verdicts.iter().flatten().all_equal();
    lines.push(("matroid.agree".into(), agree.to_string()));
    let obstruction = match find_obstruction(g) {
        Some((kind, set)) => format!("{kind} {set}"),
        None => "none".into(),
    };
    lines.push(("obstruction".into(), obstruction));
    ClassifyReport { lines }
}
