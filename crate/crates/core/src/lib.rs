//! Local cohomology and regularity of Stanley–Reisner ideals of graphs and
//! their powers.
//!
//! A graph `G` on `r` vertices is read as a 1-dimensional simplicial complex.
//! Its Stanley–Reisner ideal `I_G ⊂ K[x_1, .., x_r]` is generated by the
//! non-edges and the triangles. This crate computes the invariants
//! `a_i(S/I_G^n)`, the geometric regularity and the regularity of
//! `S/I_G^n` in two independent ways:
//!
//! - [`takayama`] sweeps the degree complexes of the ideal and computes their
//!   reduced homology; this works for any monomial ideal.
//! - [`formulas`] evaluates closed forms in `n` from the shape of the graph.
//!
//! [`verify`] compares the two over all small graphs.
//!
//! Vertices and variables are 0-based in the API; text output is 1-based.

pub mod classify;
pub mod complex;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod homology;
pub mod io;
pub mod monomial;
pub mod takayama;
pub mod varset;
pub mod verify;

pub use classify::{condition_class, is_matroid, ConditionClass, MatroidMethod, SmallGraph};
pub use complex::{ComplexKind, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph, GraphProfile, Length};
pub use homology::{reduced_homology_dims, HomologyDims};
pub use monomial::MonomialIdeal;
pub use takayama::{AiTable, DegreeVector, InvariantValue, OracleTable};
pub use varset::VarSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/monomial-ideals.md")]
    mod monomial_ideals {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/degree-complexes.md")]
    mod degree_complexes {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
