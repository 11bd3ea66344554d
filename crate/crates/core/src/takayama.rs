//! Graded pieces of local cohomology of `S/I` for a monomial ideal `I`,
//! computed by brute force from degree complexes.
//!
//! For `a ∈ Z^r` write `G_a = {i : a_i < 0}` and `a_+` for `a` with its
//! negative entries zeroed. The degree complex is
//!
//! ```text
//! Δ_a(I) = { F ⊆ [r] \ G_a : x^{a_+} ∉ I[F ∪ G_a] }
//! ```
//!
//! and `dim H^i_m(S/I)_a = dim H̃_{i-|G_a|-1}(Δ_a(I))` when `x_{G_a} ∉ √I`,
//! and `0` otherwise.
//!
//! # Degree domain
//!
//! Let `D_i` be the largest exponent of `x_i` among the minimal generators.
//! Membership `F ∈ Δ_a(I)` only asks whether some `i ∉ F ∪ G_a` has
//! `a_i < deg_i(u)` for every generator `u`, so `Δ_a` depends on `a` only
//! through `G_a` and `min(a_i, D_i)`. When `a_i >= D_i` the complex is a
//! cone with apex `i` (or void) and every piece vanishes. The sweep therefore
//! visits `a_i ∈ {-1, 0, .., D_i}`: `-1` stands for every negative value
//! (and maximises `|a|` among them), and the top layer `a_i = D_i` is
//! visited only to check that it vanishes. A nonzero piece there is reported
//! as [`Error::CapViolation`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_dims, HomologyDims};
use crate::monomial::MonomialIdeal;
use crate::varset::VarSet;

/// An `a_i`-type invariant: an integer or `-∞` (the maximum of the empty set).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantValue {
    NegInfinity,
    Finite(i64),
}

impl InvariantValue {
    pub fn plus(self, k: i64) -> Self {
        match self {
            InvariantValue::NegInfinity => InvariantValue::NegInfinity,
            InvariantValue::Finite(v) => InvariantValue::Finite(v + k),
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            InvariantValue::NegInfinity => None,
            InvariantValue::Finite(v) => Some(v),
        }
    }

    pub fn is_neg_infinity(self) -> bool {
        self == InvariantValue::NegInfinity
    }

    /// Maximum over an iterator; `-∞` when empty.
    pub fn max_of<I: IntoIterator<Item = InvariantValue>>(it: I) -> Self {
        it.into_iter().max().unwrap_or(InvariantValue::NegInfinity)
    }
}

impl From<i64> for InvariantValue {
    fn from(v: i64) -> Self {
        InvariantValue::Finite(v)
    }
}

/// `-inf` or the integer.
impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::NegInfinity => write!(f, "-inf"),
            InvariantValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl std::str::FromStr for InvariantValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "-inf" {
            return Ok(InvariantValue::NegInfinity);
        }
        s.parse()
            .map(InvariantValue::Finite)
            .map_err(|_| Error::Parse(format!("not an invariant value: {s:?}")))
    }
}

/// A multidegree `a ∈ Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(pub Vec<i32>);

impl DegreeVector {
    pub fn new(entries: Vec<i32>) -> Self {
        DegreeVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `G_a = {i : a_i < 0}`.
    pub fn neg_support(&self) -> VarSet {
        VarSet::from_indices(self.0.iter().enumerate().filter(|(_, &v)| v < 0).map(|(i, _)| i))
    }

    /// `a_+`, the vector with negative entries replaced by zero.
    pub fn pos_part(&self) -> Vec<u32> {
        self.0.iter().map(|&v| v.max(0) as u32).collect()
    }

    /// `|a| = a_1 + .. + a_r`.
    pub fn total(&self) -> i64 {
        self.0.iter().map(|&v| i64::from(v)).sum()
    }
}

impl From<Vec<i32>> for DegreeVector {
    fn from(v: Vec<i32>) -> Self {
        DegreeVector(v)
    }
}

impl From<&[i32]> for DegreeVector {
    fn from(v: &[i32]) -> Self {
        DegreeVector(v.to_vec())
    }
}

/// Minimal "witness" sets: for each generator `u`, the coordinates
/// `i ∉ G_a` with `a_i < deg_i(u)`. A set `F ⊆ [r] \ G_a` is a face of
/// `Δ_a` exactly when it contains none of them.
fn witness_sets(ideal: &MonomialIdeal, a: &[i32], neg: VarSet) -> Vec<VarSet> {
    let mut sets: Vec<VarSet> = ideal
        .generators()
        .iter()
        .map(|u| {
            VarSet::from_indices(
                (0..a.len()).filter(|&i| !neg.contains(i) && i64::from(a[i]) < i64::from(u[i])),
            )
        })
        .collect();
    sets.sort_by_key(|s| s.len());
    let mut minimal: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !minimal.iter().any(|m| m.is_subset(s)) {
            minimal.push(s);
        }
    }
    minimal
}

fn complex_avoiding(ground: usize, free: VarSet, witnesses: &[VarSet]) -> SimplicialComplex {
    if witnesses.iter().any(|w| w.is_empty()) {
        return SimplicialComplex::void(ground);
    }
    let faces = free
        .subsets()
        .filter(|f| witnesses.iter().all(|w| !w.is_subset(*f)));
    SimplicialComplex::from_facets(ground, faces)
}

/// `Δ_a(I)` by the generator-degree test.
pub fn delta_a(ideal: &MonomialIdeal, a: &DegreeVector) -> SimplicialComplex {
    assert_eq!(a.len(), ideal.nvars(), "degree vector length");
    let neg = a.neg_support();
    let free = VarSet::full(ideal.nvars()).difference(neg);
    complex_avoiding(ideal.nvars(), free, &witness_sets(ideal, &a.0, neg))
}

/// `Δ_a(I)` by monomial localization: `F` is a face iff
/// `x^{a_+} ∉ I[F ∪ G_a]`.
pub fn delta_a_by_localization(ideal: &MonomialIdeal, a: &DegreeVector) -> SimplicialComplex {
    assert_eq!(a.len(), ideal.nvars(), "degree vector length");
    let neg = a.neg_support();
    let free = VarSet::full(ideal.nvars()).difference(neg);
    let pos = a.pos_part();
    let faces = free
        .subsets()
        .filter(|&f| !ideal.localize(f.union(neg)).contains(&pos));
    SimplicialComplex::from_facets(ideal.nvars(), faces)
}

/// Whether `G_a` is a face of `Δ(I) = {F : x_F ∉ √I}`.
fn passes_gate(radical: &MonomialIdeal, neg: VarSet) -> bool {
    let x_g: Vec<u32> = (0..radical.nvars()).map(|i| u32::from(neg.contains(i))).collect();
    !radical.contains(&x_g)
}

fn piece_from(dims: &HomologyDims, i: usize, neg: VarSet) -> usize {
    dims.get(i as isize - neg.len() as isize - 1)
}

/// `dim_K H^i_m(S/I)_a`.
pub fn lc_piece_dim(ideal: &MonomialIdeal, i: usize, a: &DegreeVector) -> usize {
    let neg = a.neg_support();
    if !passes_gate(&ideal.radical(), neg) {
        return 0;
    }
    lc_piece_dim_ungated(ideal, i, a)
}

/// `dim H̃_{i-|G_a|-1}(Δ_a(I))` without the `G_a ∈ Δ(I)` condition. Agrees
/// with [`lc_piece_dim`] for powers of squarefree ideals.
pub fn lc_piece_dim_ungated(ideal: &MonomialIdeal, i: usize, a: &DegreeVector) -> usize {
    let dims = reduced_homology_dims(&delta_a(ideal, a));
    piece_from(&dims, i, a.neg_support())
}

/// One visited point of the degree domain.
pub struct SweepPoint<'a> {
    pub degree: &'a [i32],
    pub neg_support: VarSet,
    pub complex: &'a SimplicialComplex,
    pub homology: &'a HomologyDims,
    /// Whether `G_a ∈ Δ(I)`.
    pub gate: bool,
    /// Whether some coordinate sits at its cap `D_i`.
    pub at_cap: bool,
}

impl SweepPoint<'_> {
    pub fn total(&self) -> i64 {
        self.degree.iter().map(|&v| i64::from(v)).sum()
    }

    /// `dim H^i_m(S/I)_a` at this point.
    pub fn piece(&self, i: usize) -> usize {
        if self.gate {
            self.piece_ungated(i)
        } else {
            0
        }
    }

    pub fn piece_ungated(&self, i: usize) -> usize {
        if i < self.neg_support.len() {
            return 0;
        }
        piece_from(self.homology, i, self.neg_support)
    }
}

/// Per-coordinate ranges `-1..=D_i` of the sweep.
pub fn degree_caps(ideal: &MonomialIdeal) -> Vec<i32> {
    ideal.max_exponents().into_iter().map(|d| d as i32).collect()
}

/// Visits every `a` with `-1 <= a_i <= D_i`, in lexicographic order.
pub fn sweep<F>(ideal: &MonomialIdeal, mut visit: F)
where
    F: FnMut(&SweepPoint<'_>),
{
    let r = ideal.nvars();
    let caps = degree_caps(ideal);
    let radical = ideal.radical();
    let full = VarSet::full(r);
    let mut cache: HashMap<SimplicialComplex, HomologyDims> = HashMap::new();
    let mut a: Vec<i32> = vec![-1; r];
    loop {
        let neg = VarSet::from_indices((0..r).filter(|&i| a[i] < 0));
        let witnesses = witness_sets(ideal, &a, neg);
        let complex = complex_avoiding(r, full.difference(neg), &witnesses);
        let homology = cache
            .entry(complex.clone())
            .or_insert_with_key(reduced_homology_dims)
            .clone();
        let point = SweepPoint {
            degree: &a,
            neg_support: neg,
            complex: &complex,
            homology: &homology,
            gate: passes_gate(&radical, neg),
            at_cap: a.iter().zip(&caps).any(|(v, c)| v == c),
        };
        visit(&point);

        // odometer increment, last coordinate fastest
        let mut k = r;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if a[k] < caps[k] {
                a[k] += 1;
                break;
            }
            a[k] = -1;
        }
    }
}

/// All `a_i` and `a_i^j` of `S/I`, from one sweep of the degree domain.
///
/// `a_i^j` is the largest `|a|` with `H^i_m(S/I)_a ≠ 0` and `|G_a| = j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTable {
    nvars: usize,
    /// `refined[i][j]`, for `0 <= i, j <= r`.
    refined: Vec<Vec<InvariantValue>>,
}

impl OracleTable {
    /// Sweeps the degree domain of `ideal`. Fails if a piece at the cap is
    /// nonzero.
    pub fn compute(ideal: &MonomialIdeal) -> Result<Self> {
        Self::compute_visiting(ideal, |_| {})
    }

    /// [`OracleTable::compute`], also handing every sweep point to `visit`.
    pub fn compute_visiting<F>(ideal: &MonomialIdeal, mut visit: F) -> Result<Self>
    where
        F: FnMut(&SweepPoint<'_>),
    {
        let r = ideal.nvars();
        let mut refined = vec![vec![InvariantValue::NegInfinity; r + 1]; r + 1];
        let mut violation: Option<Vec<i32>> = None;
        sweep(ideal, |p| {
            visit(p);
            if !p.gate || p.homology.is_acyclic() {
                return;
            }
            if p.at_cap {
                violation.get_or_insert_with(|| p.degree.to_vec());
                return;
            }
            let j = p.neg_support.len();
            let total = InvariantValue::Finite(p.total());
            for (h, _) in p.homology.nonzero() {
                let i = (h + j as isize + 1) as usize;
                if i <= r && refined[i][j] < total {
                    refined[i][j] = total;
                }
            }
        });
        if let Some(a) = violation {
            return Err(Error::CapViolation(a));
        }
        Ok(OracleTable { nvars: r, refined })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `a_i(S/I)`; `-∞` for `i > r`.
    pub fn a(&self, i: usize) -> InvariantValue {
        match self.refined.get(i) {
            Some(row) => InvariantValue::max_of(row.iter().copied()),
            None => InvariantValue::NegInfinity,
        }
    }

    /// `a_i^j(S/I)`.
    pub fn a_j(&self, i: usize, j: usize) -> InvariantValue {
        self.refined
            .get(i)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or(InvariantValue::NegInfinity)
    }

    /// `max{a_i + i : i > 0}`.
    pub fn greg(&self) -> InvariantValue {
        InvariantValue::max_of((1..=self.nvars).map(|i| self.a(i).plus(i as i64)))
    }

    /// `max{a_i + i : i >= 0}`.
    pub fn reg(&self) -> InvariantValue {
        InvariantValue::max_of((0..=self.nvars).map(|i| self.a(i).plus(i as i64)))
    }
}

pub fn ai_oracle(ideal: &MonomialIdeal, i: usize) -> Result<InvariantValue> {
    if i > ideal.nvars() {
        return Ok(InvariantValue::NegInfinity);
    }
    Ok(OracleTable::compute(ideal)?.a(i))
}

pub fn ai_j_oracle(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<InvariantValue> {
    if i > ideal.nvars() {
        return Ok(InvariantValue::NegInfinity);
    }
    Ok(OracleTable::compute(ideal)?.a_j(i, j))
}

/// Geometric regularity of `S/I`.
pub fn greg_oracle(ideal: &MonomialIdeal) -> Result<InvariantValue> {
    Ok(OracleTable::compute(ideal)?.greg())
}

/// Castelnuovo–Mumford regularity of `S/I`.
pub fn reg_oracle(ideal: &MonomialIdeal) -> Result<InvariantValue> {
    Ok(OracleTable::compute(ideal)?.reg())
}

/// `a_0(S/I)` as the top degree of `(I : m^∞) / I`, found by scanning the box
/// `0 <= u_i < D_i`. A monomial outside `I` with some `u_i >= D_i` stays
/// outside `I` after multiplying by powers of `x_i`, so the box holds all of
/// `(I : m^∞) \ I`.
pub fn a0_by_saturation(ideal: &MonomialIdeal) -> InvariantValue {
    let sat = ideal.saturate();
    let caps = ideal.max_exponents();
    let r = ideal.nvars();
    if caps.contains(&0) && r > 0 {
        // some variable never appears: its box is empty
        return InvariantValue::NegInfinity;
    }
    let mut best = InvariantValue::NegInfinity;
    let mut u = vec![0u32; r];
    loop {
        if sat.contains(&u) && !ideal.contains(&u) {
            best = best.max(InvariantValue::Finite(u.iter().map(|&v| i64::from(v)).sum()));
        }
        let mut k = r;
        loop {
            if k == 0 {
                return best;
            }
            k -= 1;
            if u[k] + 1 < caps[k] {
                u[k] += 1;
                break;
            }
            u[k] = 0;
        }
    }
}

/// `a_i(S/I^m)` (and optionally `a_i^j`) for a range of powers `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AiTable {
    /// When known, indices above it read as `-∞`.
    nvars: Option<usize>,
    values: BTreeMap<(usize, u32), InvariantValue>,
    refined: BTreeMap<(usize, usize, u32), InvariantValue>,
}

impl AiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Oracle values for `I^1, .., I^{n_max}`, every `i` and `j`.
    pub fn from_oracle(ideal: &MonomialIdeal, n_max: u32) -> Result<Self> {
        let mut table = AiTable::new();
        table.nvars = Some(ideal.nvars());
        for m in 1..=n_max {
            let t = OracleTable::compute(&ideal.power(m))?;
            for i in 0..=ideal.nvars() {
                table.insert(i, m, t.a(i));
                for j in 0..=ideal.nvars() {
                    table.insert_refined(i, j, m, t.a_j(i, j));
                }
            }
        }
        Ok(table)
    }

    pub fn insert(&mut self, i: usize, n: u32, v: InvariantValue) {
        self.values.insert((i, n), v);
    }

    pub fn insert_refined(&mut self, i: usize, j: usize, n: u32, v: InvariantValue) {
        self.refined.insert((i, j, n), v);
    }

    pub fn get(&self, i: usize, n: u32) -> Option<InvariantValue> {
        match self.nvars {
            Some(r) if i > r => Some(InvariantValue::NegInfinity),
            _ => self.values.get(&(i, n)).copied(),
        }
    }

    pub fn get_refined(&self, i: usize, j: usize, n: u32) -> Option<InvariantValue> {
        self.refined.get(&(i, j, n)).copied()
    }

    /// Checks `a_i = max_j a_i^j` wherever both are present.
    pub fn is_consistent(&self) -> bool {
        self.values.iter().all(|(&(i, n), &v)| {
            let parts: Vec<InvariantValue> = self
                .refined
                .range((i, 0, 0)..=(i, usize::MAX, u32::MAX))
                .filter(|(&(_, _, m), _)| m == n)
                .map(|(_, &v)| v)
                .collect();
            parts.is_empty() || InvariantValue::max_of(parts).cmp(&v) == Ordering::Equal
        })
    }
}
