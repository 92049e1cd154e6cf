//! Simultaneous polynomial root finding (Durand–Kerner / Weierstrass) at
//! arbitrary precision, plus Newton refinement for warm-started tracking.

use rug::Float;

use super::complex::BigComplex;
use super::poly::Poly;
use super::real;

/// All complex roots of a polynomial with complex coefficients.
/// The polynomial is normalized to be monic internally. Multiple roots
/// converge to clusters at reduced accuracy; callers that need clean
/// separation should pass squarefree input.
pub fn all_roots(p: &Poly<BigComplex>, prec: u32) -> Vec<BigComplex> {
    let deg = match p.degree_numeric(&real::two_pow(prec, -(prec as i64) + 8)) {
        Some(d) => d,
        None => return vec![],
    };
    if deg == 0 {
        return vec![];
    }
    let lead = p.c[deg].clone();
    let monic: Vec<BigComplex> = p.c[..=deg].iter().map(|c| c / &lead).collect();

    // Cauchy bound for |roots|.
    let mut bound = Float::with_val(prec, 0);
    for c in &monic[..deg] {
        let a = c.abs();
        if a > bound {
            bound = a;
        }
    }
    let radius = Float::with_val(prec, &bound + 1u32);

    // Initial guesses on a circle with an asymmetry offset.
    let mut w: Vec<BigComplex> = (0..deg)
        .map(|k| {
            let ang = real::from_ratio(prec, 2 * k as i64, deg as i64) * real::pi(prec)
                + real::from_ratio(prec, 2, 5);
            let (s, c) = ang.sin_cos(Float::new(prec));
            BigComplex::new(c, s).scale(&radius)
        })
        .collect();

    let pp = Poly::new(monic);
    let tol = real::two_pow(prec, -(prec as i64) + 32);
    for _ in 0..prec as usize * 4 {
        let mut max_step = Float::with_val(prec, 0);
        for i in 0..deg {
            let num = pp.eval_c(&w[i]);
            let mut den = BigComplex::one(prec);
            for j in 0..deg {
                if j != i {
                    den = &den * &(&w[i] - &w[j]);
                }
            }
            if den.is_exactly_zero() {
                // nudge coincident iterates apart
                w[i] = &w[i] + &BigComplex::from_f64(prec, 1e-3, 2e-3);
                continue;
            }
            let delta = &num / &den;
            let step = delta.abs();
            if step > max_step {
                max_step = step;
            }
            w[i] = &w[i] - &delta;
        }
        if max_step < tol {
            break;
        }
    }
    w
}

/// One-step Newton refinement toward the nearest root.
pub fn newton_refine(p: &Poly<BigComplex>, dp: &Poly<BigComplex>, x: &BigComplex, iters: usize) -> BigComplex {
    let mut z = x.clone();
    for _ in 0..iters {
        let d = dp.eval_c(&z);
        if d.is_exactly_zero() {
            break;
        }
        z = &z - &(&p.eval_c(&z) / &d);
    }
    z
}

impl Poly<BigComplex> {
    /// Degree with coefficients below tol treated as zero.
    pub fn degree_numeric(&self, tol: &Float) -> Option<usize> {
        self.c.iter().rposition(|c| !(c.abs() < *tol))
    }

    pub fn eval_c(&self, x: &BigComplex) -> BigComplex {
        let prec = x.prec();
        let mut acc = BigComplex::zero(prec);
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_cyclotomic_like() {
        // z^4 - 1: roots are the fourth roots of unity.
        let prec = 192;
        let mut c = vec![BigComplex::zero(prec); 5];
        c[0] = BigComplex::from_i64(prec, -1);
        c[4] = BigComplex::one(prec);
        let roots = all_roots(&Poly::new(c), prec);
        assert_eq!(roots.len(), 4);
        let tol = real::two_pow(prec, -150);
        for r in &roots {
            let pow = r.powi(4);
            assert!(pow.close_to(&BigComplex::one(prec), &tol));
        }
    }

    #[test]
    fn roots_with_scattered_values() {
        // (z-2)(z+3i)(z-1/2)
        let prec = 192;
        let r1 = BigComplex::from_i64(prec, 2);
        let r2 = BigComplex::new(Float::new(prec), Float::with_val(prec, -3));
        let r3 = BigComplex::from_ratio(prec, 1, 2);
        let one = BigComplex::one(prec);
        let lin = |r: &BigComplex| Poly::new(vec![-r, one.clone()]);
        let p = lin(&r1).mul(&lin(&r2)).mul(&lin(&r3));
        let roots = all_roots(&p, prec);
        let tol = real::two_pow(prec, -120);
        for target in [&r1, &r2, &r3] {
            assert!(roots.iter().any(|r| r.close_to(target, &tol)));
        }
    }
}
