//! Arbitrary-precision numerics: complex arithmetic on MPFR floats, the gamma
//! function at complex arguments, exact rational and polynomial algebra,
//! continued-fraction rational recognition and polynomial root finding.

pub mod real;
pub mod complex;
pub mod scalar;
pub mod gamma;
pub mod recognize;
pub mod poly;
pub mod ratfn;
pub mod roots;
pub mod linalg;

pub use complex::BigComplex;
pub use gamma::{gamma_fn, gamma_hat};
pub use poly::Poly;
pub use ratfn::RationalFunction;
pub use recognize::recognize_power_rational;
pub use scalar::Num;

/// Exact rational numbers (canonical form: positive denominator, reduced).
pub type Rational = rug::Rational;
/// Arbitrary-size integers.
pub type Integer = rug::Integer;
/// Arbitrary-precision real numbers.
pub type Real = rug::Float;
