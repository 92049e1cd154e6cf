//! Construction and verification of algebraic Painlevé VI solutions from
//! generating triples of three-dimensional complex reflection groups.
//!
//! The pipeline implemented here runs end to end:
//! braid orbits of trace data → the map from pseudo-reflection data to
//! SL₂(ℂ) trace data → leading asymptotics of each solution branch at t = 0 →
//! Puiseux lifting through the PVI equation → assembly of the integer solution
//! curve F(t, y) → reconstruction of a rank-three Fuchsian system and numeric
//! verification of its monodromy invariants.
//!
//! Modules:
//! - [`numerics`]: arbitrary-precision complex arithmetic, gamma, exact
//!   rationals and polynomials, rational recognition, root finding.
//! - [`charvar`]: SL₂ and pseudo-reflection trace coordinates, braid actions,
//!   the map φ, orbit enumeration.
//! - [`catalog`]: explicit generator triples (Klein, Dubrovin–Mazzocco),
//!   binary-dihedral orbit machinery, genus bookkeeping.
//! - [`jimbo`]: the corrected leading-term formula at t = 0.
//! - [`series`]: truncated Puiseux series and PVI residuals / branch extension.
//! - [`curve`]: symmetric functions, integer curve assembly, exact
//!   parameterization checks, cover monodromy.
//! - [`fuchsian`]: 2×2 and rank-three reconstruction, scalar shift, numeric
//!   monodromy.
//! - [`killing`]: the u-matrix calculus (big-cell factorization, scalar-shift
//!   action, braid action, semisimplification).

pub mod numerics;
pub mod charvar;
pub mod catalog;
pub mod jimbo;
pub mod series;
pub mod curve;
pub mod fuchsian;
pub mod killing;
pub mod jsonio;

pub mod error;

pub use error::Error;

/// Default working precision in bits.
pub const DEFAULT_PREC: u32 = 256;

/// Default dedup / comparison tolerance: 2^(-prec/2).
pub fn default_tol(prec: u32) -> rug::Float {
    numerics::real::two_pow(prec, -((prec / 2) as i64))
}
