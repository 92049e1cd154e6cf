//! Dense univariate polynomials over any `Num` scalar, with the exact
//! (rational-coefficient) operations needed for gcd, interpolation and
//! resultants.

use rug::{Integer, Rational};

use super::scalar::Num;

/// Coefficients in ascending order; `c` may carry trailing zeros only
/// transiently (exact constructors trim them).
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    pub c: Vec<T>,
}

impl<T: Num> Poly<T> {
    pub fn new(c: Vec<T>) -> Self {
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn constant(v: T) -> Self {
        Poly { c: vec![v] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_exactly_zero())
    }

    /// Degree, treating exact zeros as absent. None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.iter().rposition(|x| !x.is_exactly_zero())
    }

    pub fn trim(mut self) -> Self {
        while matches!(self.c.last(), Some(x) if x.is_exactly_zero()) {
            self.c.pop();
        }
        self
    }

    pub fn coeff(&self, k: usize) -> Option<&T> {
        self.c.get(k)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let v = match (self.c.get(k), o.c.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Poly::new(out).trim()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.c.iter().map(|x| x.neg()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.c.is_empty() || o.c.is_empty() {
            return Poly::zero();
        }
        let zero = self.c[0].zero_like();
        let mut out = vec![zero; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_exactly_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out).trim()
    }

    pub fn scale(&self, s: &T) -> Self {
        Poly::new(self.c.iter().map(|x| x.mul(s)).collect()).trim()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = x.zero_like();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (k, a) in self.c.iter().enumerate().skip(1) {
            out.push(a.mul(&a.from_i64_like(k as i64)));
        }
        Poly::new(out).trim()
    }

    /// Monomial shift: self * x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.c.is_empty() {
            return Poly::zero();
        }
        let zero = self.c[0].zero_like();
        let mut out = vec![zero; k];
        out.extend(self.c.iter().cloned());
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor. Field scalars only.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.c[dd].clone();
        let mut rem = self.clone().trim();
        let mut quo: Vec<T> = vec![];
        let self_deg = match rem.degree() {
            Some(n) => n,
            None => return (Poly::zero(), Poly::zero()),
        };
        if self_deg < dd {
            return (Poly::zero(), rem);
        }
        quo.resize(self_deg - dd + 1, lead.zero_like());
        loop {
            let rdeg = match rem.degree() {
                Some(n) if n >= dd => n,
                _ => break,
            };
            let f = rem.c[rdeg].div(&lead);
            quo[rdeg - dd] = f.clone();
            // rem -= f * x^(rdeg-dd) * d
            for (j, b) in d.c.iter().enumerate() {
                let idx = rdeg - dd + j;
                rem.c[idx] = rem.c[idx].sub(&f.mul(b));
            }
            rem.c[rdeg] = lead.zero_like(); // forced cancellation
            rem = rem.trim();
        }
        (Poly::new(quo).trim(), rem)
    }
}

impl Poly<Rational> {
    pub fn from_i64s(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&x| Rational::from(x)).collect()).trim()
    }

    pub fn from_integers(v: &[Integer]) -> Self {
        Poly::new(v.iter().map(|x| Rational::from((x.clone(), Integer::from(1)))).collect()).trim()
    }

    pub fn monic(&self) -> Self {
        match self.degree() {
            None => Poly::zero(),
            Some(d) => {
                let lead = self.c[d].clone();
                self.scale(&lead.recip())
            }
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone().trim();
        let mut b = o.clone().trim();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact Lagrange interpolation through (x_i, y_i) with distinct x_i.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        // Newton's divided differences keep the cost quadratic.
        let n = points.len();
        let mut coef: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                let dx = Rational::from(&points[i].0 - &points[i - j].0);
                let num = Rational::from(&coef[i] - &coef[i - 1]);
                coef[i] = num / dx;
            }
        }
        // Build from Newton form.
        let mut p = Poly::zero();
        for i in (0..n).rev() {
            // p = p * (x - x_i) + coef[i]
            let lin = Poly::new(vec![Rational::from(-&points[i].0), Rational::from(1)]);
            p = p.mul(&lin).add(&Poly::constant(coef[i].clone()));
        }
        p.trim()
    }

    /// Resultant of two rational polynomials via the Euclidean remainder
    /// sequence.
    pub fn resultant(&self, o: &Self) -> Rational {
        let mut a = self.clone().trim();
        let mut b = o.clone().trim();
        let mut acc = Rational::from(1);
        loop {
            let da = match a.degree() {
                None => return Rational::new(),
                Some(d) => d,
            };
            let db = match b.degree() {
                None => return Rational::new(),
                Some(d) => d,
            };
            if db == 0 {
                let mut lead_pow = Rational::from(1);
                for _ in 0..da {
                    lead_pow *= &b.c[0];
                }
                return acc * lead_pow;
            }
            let (_, r) = a.div_rem(&b);
            let dr = r.degree();
            // res(a,b) = (-1)^{da*db} lc(b)^{da - dr} res(b, r)
            let sign = if (da * db) % 2 == 1 { -1 } else { 1 };
            let dr_val = match dr {
                None => {
                    // r = 0 with db > 0: resultant vanishes
                    return Rational::new();
                }
                Some(d) => d,
            };
            let mut lead_pow = Rational::from(1);
            for _ in 0..(da - dr_val) {
                lead_pow *= &b.c[db];
            }
            acc *= lead_pow * Rational::from(sign);
            a = b;
            b = r;
        }
    }

    /// Squarefree part (monic): self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) || g.is_zero() {
            return self.monic();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Clear denominators and content: returns (integer-coefficient poly,
    /// multiplier) with multiplier * self having those integer coefficients.
    pub fn to_integer_primitive(&self) -> (Vec<Integer>, Rational) {
        if self.is_zero() {
            return (vec![], Rational::from(1));
        }
        let mut den_lcm = Integer::from(1);
        for a in &self.c {
            den_lcm = den_lcm.lcm(a.denom());
        }
        let ints: Vec<Integer> = self
            .c
            .iter()
            .map(|a| {
                let v = Rational::from(a * &Rational::from((den_lcm.clone(), Integer::from(1))));
                debug_assert_eq!(*v.denom(), 1);
                v.numer().clone()
            })
            .collect();
        let mut content = Integer::new();
        for z in &ints {
            content = content.gcd(z);
        }
        if content == 0 {
            content = Integer::from(1);
        }
        let prim: Vec<Integer> = ints.iter().map(|z| Integer::from(z / &content)).collect();
        let mult = Rational::from((den_lcm, content));
        (prim, mult)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::from_i64s(v)
    }

    #[test]
    fn div_rem_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let g = a.gcd(&p(&[1, 1]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let target = p(&[2, -3, 0, 5]);
        let pts: Vec<(Rational, Rational)> = (-2i64..=2)
            .map(|x| {
                let xq = Rational::from(x);
                (xq.clone(), target.eval(&xq))
            })
            .collect();
        let got = Poly::interpolate(&pts);
        assert_eq!(got, target);
    }

    #[test]
    fn resultant_of_shared_root_is_zero() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[-2, 1, 1]); // (x-1)(x+2)
        assert_eq!(a.resultant(&b), Rational::new());
        // res(x^2+1, x^2-1) = 4
        let c = p(&[1, 0, 1]);
        let d = p(&[-1, 0, 1]);
        assert_eq!(c.resultant(&d), Rational::from(4));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let sq = p(&[1, 1]).mul(&p(&[1, 1])).mul(&p(&[-3, 1]));
        let sf = sq.squarefree_part();
        assert_eq!(sf, p(&[-3, 1]).mul(&p(&[1, 1])).monic());
    }
}
