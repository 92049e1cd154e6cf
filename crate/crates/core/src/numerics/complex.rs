//! Arbitrary-precision complex numbers built on `rug::Float`.
//!
//! Values are immutable after construction; every operation allocates its
//! result at the minimum precision of the operands, so precision propagates
//! the way the rest of the crate expects.

use rug::{Float, Rational};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::real;

#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            real::to_decimal_string(&self.re),
            real::to_decimal_string(&self.im)
        )
    }
}

impl BigComplex {
    pub fn new(re: Float, im: Float) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex::new(Float::new(prec), Float::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        BigComplex::from_i64(prec, 1)
    }

    pub fn i(prec: u32) -> Self {
        BigComplex::new(Float::new(prec), Float::with_val(prec, 1))
    }

    pub fn from_i64(prec: u32, v: i64) -> Self {
        BigComplex::new(Float::with_val(prec, v), Float::new(prec))
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        BigComplex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn from_real(re: Float) -> Self {
        let p = re.prec();
        BigComplex::new(re, Float::new(p))
    }

    pub fn from_rational(prec: u32, q: &Rational) -> Self {
        BigComplex::new(Float::with_val(prec, q), Float::new(prec))
    }

    pub fn from_ratio(prec: u32, num: i64, den: i64) -> Self {
        Self::from_rational(prec, &Rational::from((num, den)))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().min(self.im.prec())
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// |z| as a Float.
    pub fn abs(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.hypot_ref(&self.im))
    }

    /// |z|^2.
    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        let rr = Float::with_val(p, &self.re * &self.re);
        let ii = Float::with_val(p, &self.im * &self.im);
        rr + ii
    }

    /// Principal argument in (-π, π].
    pub fn arg(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.im.atan2_ref(&self.re))
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), Float::with_val(self.im.prec(), -&self.im))
    }

    pub fn scale(&self, f: &Float) -> Self {
        let p = self.prec().min(f.prec());
        BigComplex::new(
            Float::with_val(p, &self.re * f),
            Float::with_val(p, &self.im * f),
        )
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        let p = self.prec();
        BigComplex::new(
            Float::with_val(p, &self.re * k),
            Float::with_val(p, &self.im * k),
        )
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let p = self.prec();
        self.scale(&Float::with_val(p, q))
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Self {
        let p = self.prec();
        let n = self.norm_sqr();
        BigComplex::new(
            Float::with_val(p, &self.re / &n),
            Float::with_val(p, -&self.im) / &n,
        )
    }

    /// Integer power by binary exponentiation (negative exponents allowed).
    pub fn powi(&self, k: i64) -> Self {
        let p = self.prec();
        if k == 0 {
            return BigComplex::one(p);
        }
        let mut base = if k < 0 { self.recip() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = BigComplex::one(p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.is_exactly_zero() {
            return BigComplex::zero(p);
        }
        let r = self.abs();
        let re_abs = Float::with_val(p, self.re.abs_ref());
        // u = sqrt((|z| + |re|)/2)
        let u = Float::with_val(p, &r + &re_abs) / 2u32;
        let u = u.sqrt();
        if self.re >= 0 {
            let v = Float::with_val(p, &self.im / &u) / 2u32;
            BigComplex::new(u, v)
        } else {
            let v = Float::with_val(p, self.im.abs_ref()) / &u / 2u32;
            let su = if self.im >= 0 { u } else { -u };
            BigComplex::new(v, su)
        }
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let m = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        BigComplex::new(Float::with_val(p, &c * &m), Float::with_val(p, &s * &m))
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let p = self.prec();
        BigComplex::new(Float::with_val(p, self.abs().ln_ref()), self.arg())
    }

    pub fn sin(&self) -> Self {
        let p = self.prec();
        let (sx, cx) = Float::with_val(p, &self.re).sin_cos(Float::new(p));
        let chy = Float::with_val(p, self.im.cosh_ref());
        let shy = Float::with_val(p, self.im.sinh_ref());
        BigComplex::new(sx * chy, cx * shy)
    }

    pub fn cos(&self) -> Self {
        let p = self.prec();
        let (sx, cx) = Float::with_val(p, &self.re).sin_cos(Float::new(p));
        let chy = Float::with_val(p, self.im.cosh_ref());
        let shy = Float::with_val(p, self.im.sinh_ref());
        BigComplex::new(cx * chy, -(sx * shy))
    }

    /// Principal arccosine: acos(z) = -i log(z + i sqrt(1 - z^2)),
    /// with real part in [0, π].
    pub fn acos(&self) -> Self {
        let p = self.prec();
        let one = BigComplex::one(p);
        let w = (&one - &(self * self)).sqrt();
        let iw = BigComplex::new(
            Float::with_val(p, -&w.im),
            w.re.clone(),
        );
        let l = (self + &iw).ln();
        // -i * l
        BigComplex::new(l.im.clone(), Float::with_val(p, -&l.re))
    }

    /// e^(iπ q) for an exact rational q, evaluated at precision `prec`.
    pub fn exp_i_pi_rational(prec: u32, q: &Rational) -> Self {
        let theta = Float::with_val(prec, q) * real::pi(prec);
        let (s, c) = theta.sin_cos(Float::new(prec));
        BigComplex::new(c, s)
    }

    /// Componentwise distance max(|Δre|, |Δim|) < tol.
    pub fn close_to(&self, other: &Self, tol: &Float) -> bool {
        real::close(&self.re, &other.re, tol) && real::close(&self.im, &other.im, tol)
    }

    /// Numerically zero against the tolerance.
    pub fn is_zero_within(&self, tol: &Float) -> bool {
        self.abs() < *tol
    }
}

macro_rules! binop {
    ($trait:ident, $fn:ident, |$a:ident, $b:ident, $p:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b BigComplex> for &'a BigComplex {
            type Output = BigComplex;
            fn $fn(self, rhs: &'b BigComplex) -> BigComplex {
                let $p = self.prec().min(rhs.prec());
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $fn(self, rhs: BigComplex) -> BigComplex {
                (&self).$fn(&rhs)
            }
        }
        impl<'b> $trait<&'b BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $fn(self, rhs: &'b BigComplex) -> BigComplex {
                (&self).$fn(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b, p| BigComplex::new(
    Float::with_val(p, &a.re + &b.re),
    Float::with_val(p, &a.im + &b.im)
));

binop!(Sub, sub, |a, b, p| BigComplex::new(
    Float::with_val(p, &a.re - &b.re),
    Float::with_val(p, &a.im - &b.im)
));

binop!(Mul, mul, |a, b, p| {
    let rr = Float::with_val(p, &a.re * &b.re);
    let ii = Float::with_val(p, &a.im * &b.im);
    let ri = Float::with_val(p, &a.re * &b.im);
    let ir = Float::with_val(p, &a.im * &b.re);
    BigComplex::new(rr - ii, ri + ir)
});

binop!(Div, div, |a, b, p| {
    let n = b.norm_sqr();
    let rr = Float::with_val(p, &a.re * &b.re);
    let ii = Float::with_val(p, &a.im * &b.im);
    let ir = Float::with_val(p, &a.im * &b.re);
    let ri = Float::with_val(p, &a.re * &b.im);
    BigComplex::new((rr + ii) / &n, (ir - ri) / &n)
});

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        let p = self.prec();
        BigComplex::new(Float::with_val(p, -&self.re), Float::with_val(p, -&self.im))
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_minus_one_is_i() {
        let z = BigComplex::from_i64(128, -1);
        let s = z.sqrt();
        assert!(s.close_to(&BigComplex::i(128), &real::two_pow(128, -100)));
    }

    #[test]
    fn acos_halves() {
        // acos(1/2) = π/3, so 2 cos(π σ) with σ = acos(1/2)/π round-trips.
        let half = BigComplex::from_ratio(256, 1, 2);
        let a = half.acos();
        let third = Float::with_val(256, real::pi(256)) / 3u32;
        assert!(real::close(&a.re, &third, &real::two_pow(256, -200)));
    }

    #[test]
    fn exp_ln_roundtrip() {
        let z = BigComplex::from_f64(256, -1.25, 2.5);
        let w = z.ln().exp();
        assert!(w.close_to(&z, &real::two_pow(256, -200)));
    }
}
