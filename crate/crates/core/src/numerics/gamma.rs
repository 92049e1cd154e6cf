//! Gamma function at complex arguments via the Stirling asymptotic series with
//! exact Bernoulli coefficients and argument raising, plus the reflection
//! formula on the left half-plane. Real arguments delegate to MPFR.

use once_cell::sync::Lazy;
use rug::{Float, Integer, Rational};
use std::sync::Mutex;

use super::complex::BigComplex;
use super::real;
use crate::error::{Error, Result};

/// B_0, B_1, B_2, ... (B_1 = -1/2 convention), extended on demand.
static BERNOULLI: Lazy<Mutex<Vec<Rational>>> =
    Lazy::new(|| Mutex::new(vec![Rational::from(1), Rational::from((-1, 2))]));

/// The n-th Bernoulli number, exactly.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = BERNOULLI.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  solve for B_m
        let mut acc = Rational::new();
        for (j, b) in cache.iter().enumerate() {
            let c = Integer::from(m as u32 + 1).binomial(j as u32);
            acc += Rational::from((c, Integer::from(1))) * b;
        }
        let bm = -acc / Rational::from((m as u32 + 1, 1u32));
        cache.push(bm);
    }
    cache[n].clone()
}

fn is_nonpositive_integer(z: &BigComplex) -> bool {
    z.im.is_zero() && z.re.is_integer() && z.re <= 0
}

/// Γ(z) at the precision carried by `z`.
pub fn gamma_fn(z: &BigComplex) -> Result<BigComplex> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole);
    }
    let prec = z.prec();
    let wp = prec + 64;
    let zw = BigComplex::new(
        Float::with_val(wp, &z.re),
        Float::with_val(wp, &z.im),
    );
    let g = if z.im.is_zero() {
        // MPFR's gamma on the real line.
        BigComplex::from_real(Float::with_val(wp, &zw.re).gamma())
    } else if zw.re.to_f64() < 0.5 {
        // Reflection: Γ(z) = π / (sin(πz) Γ(1-z)).
        let pi = real::pi(wp);
        let piz = zw.scale(&pi);
        let s = piz.sin();
        let one = BigComplex::one(wp);
        let g1 = gamma_stirling(&(&one - &zw), wp);
        BigComplex::from_real(pi) / (s * g1)
    } else {
        gamma_stirling(&zw, wp)
    };
    Ok(BigComplex::new(
        Float::with_val(prec, &g.re),
        Float::with_val(prec, &g.im),
    ))
}

/// Γ̂(x) := Γ(x/2 + 1).
pub fn gamma_hat(x: &BigComplex) -> Result<BigComplex> {
    let p = x.prec();
    let half = x.scale(&real::from_ratio(p, 1, 2));
    gamma_fn(&(&half + &BigComplex::one(p)))
}

/// Γ̂ at an exact rational argument.
pub fn gamma_hat_rational(prec: u32, q: &Rational) -> Result<BigComplex> {
    gamma_hat(&BigComplex::from_rational(prec, q))
}

/// Stirling with argument raising; assumes Re z >= 0.5 (wp precision inputs).
fn gamma_stirling(z: &BigComplex, wp: u32) -> BigComplex {
    // Raise until |z + n| >= R; R scaled with the working precision.
    let r_target = (wp as f64 * 0.42).max(32.0);
    let mut shift: i64 = 0;
    loop {
        let re = z.re.to_f64() + shift as f64;
        let im = z.im.to_f64();
        if (re * re + im * im).sqrt() >= r_target {
            break;
        }
        shift += 1;
    }
    let zs = z.add_i64(shift, wp);

    // lnΓ(zs) = (zs - 1/2) ln zs - zs + ln(2π)/2 + Σ B_{2k} / (2k(2k-1) zs^{2k-1})
    let ln_zs = zs.ln();
    let half = real::from_ratio(wp, 1, 2);
    let mut acc = (&zs - &BigComplex::from_real(half)) * &ln_zs - &zs;
    let two_pi = Float::with_val(wp, real::pi(wp)) * 2u32;
    acc = acc + BigComplex::from_real(two_pi.ln() / 2u32);

    let inv_z = zs.recip();
    let inv_z2 = &inv_z * &inv_z;
    let mut zpow = inv_z.clone(); // zs^{-(2k-1)}
    let eps = real::two_pow(wp, -(wp as i64) - 8);
    for k in 1..200usize {
        let b = bernoulli(2 * k);
        let denom = Rational::from(((2 * k) as u32, 1u32)) * Rational::from(((2 * k - 1) as u32, 1u32));
        let coeff = b / denom;
        let term = zpow.scale(&real::from_rational(wp, &coeff));
        acc = &acc + &term;
        if term.abs() < eps {
            break;
        }
        zpow = &zpow * &inv_z2;
    }

    let mut g = acc.exp();
    // Divide back: Γ(z) = Γ(z + n) / (z (z+1) ... (z+n-1)).
    let mut prod = BigComplex::one(wp);
    for j in 0..shift {
        prod = &prod * &z.add_i64(j, wp);
    }
    g = &g / &prod;
    g
}

impl BigComplex {
    fn add_i64(&self, k: i64, prec: u32) -> BigComplex {
        BigComplex::new(
            Float::with_val(prec, &self.re + k),
            Float::with_val(prec, &self.im),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol(k: i64) -> Float {
        real::two_pow(256, k)
    }

    #[test]
    fn gamma_small_integers() {
        let g1 = gamma_fn(&BigComplex::from_i64(256, 1)).unwrap();
        assert!(g1.close_to(&BigComplex::one(256), &tol(-240)));
        let g5 = gamma_fn(&BigComplex::from_i64(256, 5)).unwrap();
        assert!(g5.close_to(&BigComplex::from_i64(256, 24), &tol(-230)));
    }

    #[test]
    fn gamma_three_halves_matches_sqrt_pi_over_two() {
        // Independent oracle: Γ(3/2) = Γ(1/2)/2 = √π/2 computed from MPFR's π.
        let g = gamma_fn(&BigComplex::from_ratio(256, 3, 2)).unwrap();
        let oracle = real::pi(256).sqrt() / 2u32;
        assert!(real::close(&g.re, &oracle, &tol(-240)));
        assert!(g.im.is_zero());
        let d = g.re.to_f64();
        assert!((d - 0.886226925452758).abs() < 1e-13);
    }

    #[test]
    fn gamma_hat_examples() {
        let one = BigComplex::one(256);
        assert!(gamma_hat(&BigComplex::zero(256)).unwrap().close_to(&one, &tol(-240)));
        assert!(gamma_hat(&BigComplex::from_i64(256, 2)).unwrap().close_to(&one, &tol(-240)));
        let gh1 = gamma_hat(&one).unwrap();
        let g32 = gamma_fn(&BigComplex::from_ratio(256, 3, 2)).unwrap();
        assert!(gh1.close_to(&g32, &tol(-240)));
    }

    #[test]
    fn gamma_pole_errors() {
        assert!(matches!(gamma_fn(&BigComplex::zero(256)), Err(Error::Pole)));
        assert!(matches!(
            gamma_fn(&BigComplex::from_i64(256, -3)),
            Err(Error::Pole)
        ));
    }

    #[test]
    fn complex_gamma_recurrence_spot() {
        // Γ(z+1) = z Γ(z) off the real axis exercises the Stirling path.
        let z = BigComplex::from_f64(256, 0.75, 1.5);
        let g = gamma_fn(&z).unwrap();
        let g1 = gamma_fn(&(&z + &BigComplex::one(256))).unwrap();
        let rel = (&g1 - &(&z * &g)).abs() / g1.abs();
        assert!(rel < tol(-200));
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(2), Rational::from((1, 6)));
        assert_eq!(bernoulli(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
        assert_eq!(bernoulli(3), Rational::new());
    }
}
