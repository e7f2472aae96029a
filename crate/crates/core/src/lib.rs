//! Segre zeta functions of homogeneous ideals as exact rational functions.
//!
//! The zeta function of an ideal `I ⊆ k[x_0, …, x_n]` is the power series whose
//! coefficients give the pushforward of the Segre classes of the schemes cut out
//! by `I` in every `ℙ^N ⊇ ℙ^n`. It is rational with denominator dividing
//! `∏ (1 + d_i t)` over the generator degrees. This crate builds it from several
//! kinds of input, expands it exactly, and derives projective invariants.

pub mod cli;
pub mod error;
pub mod exact_poly;
pub mod invariants;
pub mod staircase;
pub mod zeta;

pub use error::{Result, ZetaError};
pub use exact_poly::{IntPoly, LinearFactorProduct, PolyFraction, RationalSeries};
pub use invariants::{
    as_complete_intersection, dual_info, lci_consistency_check, polar_degrees, LciReport,
    PolarDegrees,
};
pub use staircase::{monomial2d_zeta, Exponent, MonomialIdeal2D, NewtonBoundary2D, Triangle};
pub use zeta::{
    bootstrap_zeta, ci_zeta, codim_and_degree, linear_system_zeta, splayed_product,
    validate_zeta, SegreClassData, SegreZeta, ValidationReport,
};
