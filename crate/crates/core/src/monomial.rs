//! Monomial ideals stored by their minimal generators.
//!
//! A monomial `x^u` is an exponent vector `u` of length `nvars`. Every
//! operation returns an ideal whose generators form an antichain under
//! divisibility and are sorted, so two ideals are equal exactly when their
//! generator lists are equal.
//!
//! The zero ideal has no generators. The unit ideal has the single generator
//! `0` (the monomial `1`).

use std::fmt;

use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARS};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

fn divides(g: &[u32], u: &[u32]) -> bool {
    g.iter().zip(u).all(|(a, b)| a <= b)
}

/// A monomial ideal in `nvars` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Exponents>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only the minimal ones.
    pub fn minimalize<I>(nvars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Exponents>,
    {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let gens: Vec<Exponents> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.len() != nvars) {
            return Err(Error::LengthMismatch {
                expected: nvars,
                found: bad.len(),
            });
        }
        Ok(Self::from_gens_unchecked(nvars, gens))
    }

    fn from_gens_unchecked(nvars: usize, mut gens: Vec<Exponents>) -> Self {
        gens.sort_by_key(|g| g.iter().sum::<u32>());
        let mut kept: Vec<Exponents> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| divides(k, &g)) {
                kept.push(g);
            }
        }
        kept.sort();
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![vec![0; nvars]],
        }
    }

    /// The prime ideal `(x_i : i in vars)`.
    pub fn variables(nvars: usize, vars: VarSet) -> Self {
        let gens = vars
            .iter()
            .map(|i| {
                let mut e = vec![0; nvars];
                e[i] = 1;
                e
            })
            .collect();
        MonomialIdeal { nvars, gens }.canonical()
    }

    /// The maximal ideal `(x_1, .., x_r)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::variables(nvars, VarSet::full(nvars))
    }

    /// Squarefree monomials `x_F`, one per set.
    pub fn squarefree<I: IntoIterator<Item = VarSet>>(nvars: usize, sets: I) -> Self {
        let gens = sets
            .into_iter()
            .map(|s| (0..nvars).map(|i| u32::from(s.contains(i))).collect())
            .collect();
        Self::from_gens_unchecked(nvars, gens)
    }

    fn canonical(mut self) -> Self {
        self.gens.sort();
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    /// Largest exponent of each variable over the minimal generators.
    pub fn max_exponents(&self) -> Exponents {
        let mut out = vec![0; self.nvars];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g) {
                *o = (*o).max(e);
            }
        }
        out
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    fn check_len(&self, u: &[u32]) -> Result<()> {
        if u.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                found: u.len(),
            });
        }
        Ok(())
    }

    /// Whether `x^u` lies in the ideal.
    pub fn contains(&self, u: &[u32]) -> bool {
        debug_assert_eq!(u.len(), self.nvars);
        self.gens.iter().any(|g| divides(g, u))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..n {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// `I ∩ J`, generated by the pairwise least common multiples.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
            }
        }
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    /// `I : x^u`.
    pub fn colon(&self, u: &[u32]) -> Result<Self> {
        self.check_len(u)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().zip(u).map(|(a, b)| a.saturating_sub(*b)).collect())
            .collect();
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    /// `I : x_i^∞`, i.e. the ideal with variable `i` set to `1`.
    pub fn saturate_variable(&self, i: usize) -> Self {
        let mut u = vec![0; self.nvars];
        u[i] = self.max_exponents()[i];
        self.colon(&u).expect("same length")
    }

    /// The saturation `I : m^∞`.
    ///
    /// Computed as the intersection of the per-variable saturations
    /// `I : x_i^{D_i}`, where `D_i` is the largest exponent of `x_i` among the
    /// generators. For monomial ideals `f m^N ⊆ I` for large `N` iff
    /// `f x_i^N ∈ I` for every `i`.
    pub fn saturate(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut acc = Self::unit(self.nvars);
        for i in 0..self.nvars {
            acc = acc
                .intersect(&self.saturate_variable(i))
                .expect("same ring");
        }
        debug_assert!(acc.contains_ideal(self));
        acc
    }

    /// Monomial localization `I[F]`: every `x_i` with `i ∈ F` is sent to `1`.
    /// The result stays in the same `nvars` variables.
    pub fn localize(&self, vars: VarSet) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                g.iter()
                    .enumerate()
                    .map(|(i, &e)| if vars.contains(i) { 0 } else { e })
                    .collect()
            })
            .collect();
        Self::from_gens_unchecked(self.nvars, gens)
    }

    pub fn radical(&self) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().map(|&e| e.min(1)).collect())
            .collect();
        Self::from_gens_unchecked(self.nvars, gens)
    }

    /// Whether `sqrt(I) = (x_1, .., x_r)`.
    pub fn has_full_radical(&self) -> bool {
        let rad = self.radical();
        (0..self.nvars).all(|i| {
            let mut e = vec![0; self.nvars];
            e[i] = 1;
            rad.contains(&e)
        })
    }

    /// Embeds the ideal into a ring with `extra` more variables, appended last.
    pub fn extend(&self, extra: usize) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().copied().chain(std::iter::repeat_n(0, extra)).collect())
            .collect();
        MonomialIdeal {
            nvars: self.nvars + extra,
            gens,
        }
        .canonical()
    }

    /// The cone ideal `(I, x_1 y, .., x_r y)` in `r + 1` variables, `y` last.
    pub fn cone(&self) -> Self {
        let r = self.nvars;
        let mut gens = self.extend(1).gens;
        for i in 0..r {
            let mut e = vec![0; r + 1];
            e[i] = 1;
            e[r] = 1;
            gens.push(e);
        }
        Self::from_gens_unchecked(r + 1, gens)
    }
}

/// Prints generators with 1-based variable names, e.g. `(x1^2*x2, x3)`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let mut first = true;
            for (i, &e) in g.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            if first {
                write!(f, "1")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[{}]{}", self.nvars, self)
    }
}
