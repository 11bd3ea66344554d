//! Closed forms in `n` for `a_1`, `a_2` and the geometric regularity of
//! `S/I_G^n`, and the recursions that add a cone vertex or a free variable.
//!
//! Each formula reports the table row it used as a branch label such as
//! `C1/3n-3` or `GIRTH4/2n`.
//!
//! Graphs with isolated vertices are handled by [`cone_extend`]: adding an
//! isolated vertex `y` to `G` turns `I_G` into `(I_G, x_1 y, .., x_r y)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::classify::{condition_class, ConditionClass, SmallGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, Length};
use crate::takayama::{AiTable, InvariantValue};

use InvariantValue::{Finite, NegInfinity};

/// A formula value together with the row of the table that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormulaResult {
    pub value: InvariantValue,
    pub branch: String,
}

impl FormulaResult {
    fn new(value: InvariantValue, branch: impl Into<String>) -> Self {
        FormulaResult {
            value,
            branch: branch.into(),
        }
    }
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.value, self.branch)
    }
}

fn check_domain(g: &Graph) -> Result<()> {
    if g.nvertices() < 3 {
        return Err(Error::TooFewVertices(g.nvertices()));
    }
    if g.nedges() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(())
}

fn lin(a: i64, n: u32, b: i64) -> InvariantValue {
    Finite(a * i64::from(n) + b)
}

/// `a_1(S/I_H^n)` for `H` with at least 3 vertices and none isolated.
fn a1_table(h: &Graph, n: u32) -> Result<FormulaResult> {
    if n == 1 {
        return Ok(if h.is_connected() {
            FormulaResult::new(NegInfinity, "N1-CONNECTED/-inf")
        } else {
            FormulaResult::new(Finite(0), "N1-DISCONNECTED/0")
        });
    }
    Ok(match condition_class(h)? {
        ConditionClass::C1 => FormulaResult::new(lin(3, n, -3), "C1/3n-3"),
        ConditionClass::C2 => FormulaResult::new(lin(2, n, -1), "C2/2n-1"),
        ConditionClass::C3 => FormulaResult::new(lin(2, n, -2), "C3/2n-2"),
        ConditionClass::C4 => FormulaResult::new(lin(2, n, -2), "C4/2n-2"),
        ConditionClass::C5(SmallGraph::C5) if n >= 3 => {
            FormulaResult::new(lin(2, n, -2), "C5CYCLE-N3/2n-2")
        }
        ConditionClass::C5(SmallGraph::C5) => FormulaResult::new(NegInfinity, "C5CYCLE-N2/-inf"),
        ConditionClass::C5(s) => FormulaResult::new(NegInfinity, format!("{}/-inf", s.label())),
    })
}

/// `a_2(S/I_H^n)` for `H` with at least 3 vertices and none isolated.
fn a2_table(h: &Graph, n: u32) -> FormulaResult {
    match h.girth() {
        Length::Finite(3) => FormulaResult::new(lin(3, n, -3), "GIRTH3/3n-3"),
        Length::Finite(4) => FormulaResult::new(lin(2, n, -2), "GIRTH4/2n-2"),
        Length::Finite(_) if n >= 2 => FormulaResult::new(lin(2, n, -3), "GIRTH5+/2n-3"),
        Length::Finite(_) => FormulaResult::new(Finite(0), "GIRTH5+-N1/0"),
        Length::Infinite if h.max_degree() >= 2 => FormulaResult::new(lin(2, n, -3), "FOREST/2n-3"),
        Length::Infinite => FormulaResult::new(lin(1, n, -3), "MATCHING/n-3"),
    }
}

/// One application of the cone recursion to the values `base[m-1] = a_i(S/I^m)`.
fn cone_step(base: &[InvariantValue], with_linear_term: bool) -> Vec<InvariantValue> {
    (1..=base.len())
        .map(|m| {
            let shifted = (0..m).map(|t| base[m - t - 1].plus(t as i64));
            let v = InvariantValue::max_of(shifted);
            if with_linear_term {
                v.max(Finite(2 * m as i64 - 2))
            } else {
                v
            }
        })
        .collect()
}

/// Evaluates `a_i` for `G` by stripping isolated vertices, using `table` on
/// what remains and the cone recursion once per isolated vertex.
///
/// A bare edge on two vertices has the zero ideal in `K[x_1, x_2]`, with
/// `a_1 = -∞` and `a_2 = -2` for every power.
fn with_isolated_vertices<T>(g: &Graph, n: u32, i: usize, table: T) -> Result<FormulaResult>
where
    T: Fn(&Graph, u32) -> Result<FormulaResult>,
{
    check_domain(g)?;
    let k = g.isolated_vertices().len();
    let h = g.without_isolated();
    if k == 0 {
        return table(&h, n);
    }
    let (mut values, base_branch) = if h.nvertices() == 2 {
        let v = if i == 1 { NegInfinity } else { Finite(-2) };
        (vec![v; n as usize], "EDGE".to_string())
    } else {
        let values = (1..=n)
            .map(|m| table(&h, m).map(|r| r.value))
            .collect::<Result<Vec<_>>>()?;
        (values, table(&h, n)?.branch)
    };
    for _ in 0..k {
        values = cone_step(&values, i == 1);
    }
    Ok(FormulaResult::new(
        values[n as usize - 1],
        format!("CONE{k}:{base_branch}"),
    ))
}

/// `a_1(S/I_G^n)`. Needs at least 3 vertices and an edge.
pub fn a1_formula(g: &Graph, n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    with_isolated_vertices(g, n, 1, a1_table)
}

/// `a_2(S/I_G^n)`. Needs at least 3 vertices and an edge.
pub fn a2_formula(g: &Graph, n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    with_isolated_vertices(g, n, 2, |h, m| Ok(a2_table(h, m)))
}

/// Geometric regularity of `S/I_G^n`. Isolated vertices are allowed; the
/// table reads only the girth and the maximum degree.
pub fn greg_formula(g: &Graph, n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    check_domain(g)?;
    Ok(match g.girth() {
        Length::Finite(3) => FormulaResult::new(lin(3, n, -1), "GIRTH3/3n-1"),
        Length::Finite(4) => FormulaResult::new(lin(2, n, 0), "GIRTH4/2n"),
        Length::Finite(_) if n >= 2 => FormulaResult::new(lin(2, n, -1), "GIRTH5+/2n-1"),
        Length::Finite(_) => FormulaResult::new(Finite(2), "GIRTH5+-N1/2"),
        Length::Infinite if g.max_degree() >= 2 => FormulaResult::new(lin(2, n, -1), "FOREST/2n-1"),
        Length::Infinite => FormulaResult::new(lin(2, n, -1), "MATCHING/2n-1"),
    })
}

/// `a_i(R/J^n)` for the cone `J = (I, x_1 y, .., x_r y)`, from the values
/// `a_i(S/I^m)`, `1 <= m <= n`, stored in `base`.
///
/// For `i >= 2` this is `max{a_i(S/I^{n-t}) + t : 0 <= t < n}`. For `i = 1`
/// the term `2n - 2` joins the maximum, and the rule needs `√I` to be a
/// proper subideal of the maximal ideal; otherwise [`Error::FullRadical`].
/// `i = 0` is not covered.
pub fn cone_extend(
    base: &AiTable,
    i: usize,
    n: u32,
    has_full_radical: bool,
) -> Result<InvariantValue> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    if i == 0 {
        return Err(Error::UnsupportedIndex);
    }
    if i == 1 && has_full_radical {
        return Err(Error::FullRadical);
    }
    let mut best = if i == 1 {
        Finite(2 * i64::from(n) - 2)
    } else {
        NegInfinity
    };
    for t in 0..n {
        let m = n - t;
        let v = base.get(i, m).ok_or(Error::MissingTableEntry(m as usize))?;
        best = best.max(v.plus(i64::from(t)));
    }
    Ok(best)
}

/// Geometric regularities `n -> g-reg(S/I^n)` for consecutive `n` from 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GregTable(pub BTreeMap<u32, InvariantValue>);

impl GregTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Formula values for `G` at `n = 1..=n_max`.
    pub fn from_formula(g: &Graph, n_max: u32) -> Result<Self> {
        let mut t = GregTable::new();
        for n in 1..=n_max {
            t.insert(n, greg_formula(g, n)?.value);
        }
        Ok(t)
    }

    pub fn insert(&mut self, n: u32, v: InvariantValue) {
        self.0.insert(n, v);
    }

    pub fn get(&self, n: u32) -> Option<InvariantValue> {
        self.0.get(&n).copied()
    }
}

/// `g-reg` of `S[y_1, .., y_k] / (I, y_1, .., y_k)^n`, applying
/// `g(m) -> max{g(i) + m - i : 1 <= i <= m}` once per new variable.
pub fn add_polynomial_variables(base: &GregTable, k: usize, n: u32) -> Result<InvariantValue> {
    let mut values = (1..=n)
        .map(|m| base.get(m).ok_or(Error::MissingTableEntry(m as usize)))
        .collect::<Result<Vec<_>>>()?;
    for _ in 0..k {
        values = (1..=values.len())
            .map(|m| InvariantValue::max_of((1..=m).map(|i| values[i - 1].plus((m - i) as i64))))
            .collect();
    }
    values.last().copied().ok_or(Error::ZeroPower)
}

/// Whether `S/I_G^n` is Cohen–Macaulay, for `G` with at least 3 vertices
/// and no isolated vertices.
///
/// For `n = 1` this holds exactly when `G` is connected. For `n >= 2` it
/// holds for `P_2`, the triangle and `C_4` at every `n`, and for `C_5` at
/// `n = 2` only.
pub fn is_cm(g: &Graph, n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    check_domain(g)?;
    if !g.isolated_vertices().is_empty() {
        return Err(Error::IsolatedVertices);
    }
    if n == 1 {
        return Ok(g.is_connected());
    }
    Ok(match condition_class(g)? {
        ConditionClass::C5(SmallGraph::C5) => n == 2,
        ConditionClass::C5(_) => true,
        _ => false,
    })
}
