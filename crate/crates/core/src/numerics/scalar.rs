//! A minimal scalar abstraction so that matrix and polynomial code can run
//! either exactly over the rationals or numerically over `BigComplex`.
//!
//! Contextual constructors (`zero_like` etc.) exist because floats carry a
//! precision that must be inherited from an existing value.

use rug::Rational;

use super::complex::BigComplex;

pub trait Num: Clone + std::fmt::Debug {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn from_rat_like(&self, q: &Rational) -> Self;
    /// Exact zero test (bit-level for floats).
    fn is_exactly_zero(&self) -> bool;
    /// Rough magnitude used for pivot selection.
    fn pivot_size(&self) -> f64;
}

impl Num for Rational {
    fn add(&self, o: &Self) -> Self {
        Rational::from(self + o)
    }
    fn sub(&self, o: &Self) -> Self {
        Rational::from(self - o)
    }
    fn mul(&self, o: &Self) -> Self {
        Rational::from(self * o)
    }
    fn div(&self, o: &Self) -> Self {
        Rational::from(self / o)
    }
    fn neg(&self) -> Self {
        Rational::from(-self)
    }
    fn zero_like(&self) -> Self {
        Rational::new()
    }
    fn one_like(&self) -> Self {
        Rational::from(1)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Rational::from(v)
    }
    fn from_rat_like(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn is_exactly_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
    fn pivot_size(&self) -> f64 {
        let f = self.to_f64().abs();
        if f == 0.0 && !self.is_exactly_zero() {
            f64::MIN_POSITIVE
        } else {
            f
        }
    }
}

impl Num for BigComplex {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn zero_like(&self) -> Self {
        BigComplex::zero(self.prec())
    }
    fn one_like(&self) -> Self {
        BigComplex::one(self.prec())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        BigComplex::from_i64(self.prec(), v)
    }
    fn from_rat_like(&self, q: &Rational) -> Self {
        BigComplex::from_rational(self.prec(), q)
    }
    fn is_exactly_zero(&self) -> bool {
        BigComplex::is_exactly_zero(self)
    }
    fn pivot_size(&self) -> f64 {
        let a = self.abs();
        let f = a.to_f64();
        if f == 0.0 && !a.is_zero() {
            f64::MIN_POSITIVE
        } else {
            f
        }
    }
}
