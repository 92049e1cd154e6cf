//! Recognition of (powers of) numeric values as exact rationals via
//! continued-fraction convergents with a denominator bound.

use rug::{Float, Integer, Rational};

use super::complex::BigComplex;

/// Best rational p/q with q <= max_den and |x - p/q| < tol, if any.
///
/// The float is converted exactly to a dyadic rational and the continued
/// fraction of that is walked; each convergent is tested exactly.
pub fn recognize_real(x: &Float, max_den: &Integer, tol: &Float) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let exact = x.to_rational()?;
    let tol_r = tol.to_rational()?;

    // Continued-fraction walk with convergent recurrences.
    let mut a = exact.clone();
    let mut p_prev = Integer::from(1);
    let mut q_prev = Integer::from(0);
    let mut p = a.clone().floor().numer().clone();
    let mut q = Integer::from(1);
    for _ in 0..10_000 {
        if &q <= max_den {
            let cand = Rational::from((p.clone(), q.clone()));
            let err = Rational::from(&exact - &cand).abs();
            if err < tol_r {
                return Some(cand);
            }
        } else {
            return None;
        }
        let fl = a.clone().floor();
        let frac = Rational::from(&a - &fl);
        if frac.cmp0() == std::cmp::Ordering::Equal {
            return None;
        }
        a = frac.recip();
        let an = a.clone().floor().numer().clone();
        let p_next = Integer::from(&an * &p) + &p_prev;
        let q_next = Integer::from(&an * &q) + &q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    None
}

/// Recognize c^k as a rational number: requires the imaginary part of c^k to
/// vanish within tol. Absence is a valid result (None).
pub fn recognize_power_rational(
    c: &BigComplex,
    k: i64,
    max_den: &Integer,
    tol: &Float,
) -> Option<Rational> {
    assert!(k >= 1, "power must be a positive integer");
    let w = c.powi(k);
    if !(w.im.clone().abs() < *tol) {
        return None;
    }
    recognize_real(&w.re, max_den, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::real;

    #[test]
    fn exact_small_rationals_recovered() {
        let tol = real::two_pow(256, -128);
        let max_den = Integer::from(1_000_000);
        for &(p, q) in &[(1i64, 3i64), (-7, 81), (-125, 14), (22, 7), (9999, 10000)] {
            let x = real::from_ratio(256, p, q);
            let got = recognize_real(&x, &max_den, &tol).unwrap();
            assert_eq!(got, Rational::from((p, q)));
        }
    }

    #[test]
    fn imaginary_part_blocks_recognition() {
        let tol = real::two_pow(256, -128);
        let c = BigComplex::from_f64(256, 1.0, 0.3);
        assert!(recognize_power_rational(&c, 2, &Integer::from(1000), &tol).is_none());
    }

    #[test]
    fn dense_small_fraction_sweep() {
        // recognize(p/q, 1, q, tol) must return p/q for a grid of small fractions.
        let tol = real::two_pow(256, -128);
        for q in 1i64..=40 {
            for p in -40i64..=40 {
                let g = Integer::from(p).gcd(&Integer::from(q));
                let x = real::from_ratio(256, p, q);
                let got = recognize_real(&x, &Integer::from(q), &tol).unwrap();
                let expect = Rational::from((p, q));
                assert_eq!(got, expect, "p={p} q={q} gcd={g}");
            }
        }
    }

    #[test]
    fn irrational_rejected() {
        let tol = real::two_pow(256, -128);
        let x = Float::with_val(256, 2).sqrt();
        assert!(recognize_real(&x, &Integer::from(1_000_000), &tol).is_none());
    }
}
