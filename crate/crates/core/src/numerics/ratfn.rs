//! Exact rational functions in one variable: reduced fractions of rational
//! polynomials with monic denominators.

use rug::Rational;

use super::poly::Poly;

#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    pub num: Poly<Rational>,
    pub den: Poly<Rational>,
}

impl RationalFunction {
    /// Build and reduce; normalizes the denominator to be monic.
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: Poly::zero(),
                den: Poly::constant(Rational::from(1)),
            };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lead = den.c[den.degree().unwrap()].clone();
        let num = num.scale(&lead.clone().recip());
        let den = den.scale(&lead.recip());
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::constant(Rational::from(1)),
        }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::constant(Rational::from(1)),
        }
    }

    pub fn constant(q: Rational) -> Self {
        Self::from_poly(Poly::constant(q))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::from_i64s(&[0, 1]))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().map_or(true, |d| d == 0) && self.den.degree() == Some(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        RationalFunction::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RationalFunction::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero rational function");
        RationalFunction::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero());
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Derivative by the quotient rule.
    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        RationalFunction::new(n, self.den.mul(&self.den))
    }

    /// Evaluate at an exact rational point; None at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.cmp0() == std::cmp::Ordering::Equal {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Laurent expansion at 0: coefficients of t^lo .. t^(lo+n-1).
    /// lo is the valuation (ord_0 num - ord_0 den).
    pub fn laurent_at_zero(&self, n: usize) -> (i64, Vec<Rational>) {
        assert!(!self.is_zero());
        let vnum = self.num.c.iter().position(|c| c.cmp0() != std::cmp::Ordering::Equal).unwrap();
        let vden = self.den.c.iter().position(|c| c.cmp0() != std::cmp::Ordering::Equal).unwrap();
        let lo = vnum as i64 - vden as i64;
        let a: Vec<Rational> = self.num.c[vnum..].to_vec();
        let b: Vec<Rational> = self.den.c[vden..].to_vec();
        // Power-series division a / b with b[0] != 0.
        let mut out = Vec::with_capacity(n);
        let b0 = b[0].clone();
        for k in 0..n {
            let mut acc = a.get(k).cloned().unwrap_or_default();
            for j in 1..=k.min(b.len() - 1) {
                acc -= Rational::from(&b[j] * &out[k - j]);
            }
            out.push(acc / b0.clone());
        }
        (lo, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_reduction() {
        // (x^2-1)/(x-1) reduces to x+1
        let f = RationalFunction::new(Poly::from_i64s(&[-1, 0, 1]), Poly::from_i64s(&[-1, 1]));
        assert_eq!(f.num, Poly::from_i64s(&[1, 1]));
        assert_eq!(f.den, Poly::from_i64s(&[1]));
    }

    #[test]
    fn derivative_of_inverse() {
        // d/dx (1/x) = -1/x^2
        let f = RationalFunction::new(Poly::from_i64s(&[1]), Poly::from_i64s(&[0, 1]));
        let d = f.derivative();
        assert_eq!(d.num, Poly::from_i64s(&[-1]));
        assert_eq!(d.den, Poly::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn laurent_of_geometric() {
        // 1/(1-t) = 1 + t + t^2 + ...
        let f = RationalFunction::new(Poly::from_i64s(&[1]), Poly::from_i64s(&[1, -1]));
        let (lo, c) = f.laurent_at_zero(5);
        assert_eq!(lo, 0);
        assert!(c.iter().all(|x| *x == Rational::from(1)));
        // (1 + 2t + t^2)/t = t^{-1} + 2 + t
        let g = RationalFunction::new(Poly::from_i64s(&[1, 2, 1]), Poly::from_i64s(&[0, 1]));
        let (lo2, c2) = g.laurent_at_zero(4);
        assert_eq!(lo2, -1);
        assert_eq!(c2, vec![
            Rational::from(1),
            Rational::from(2),
            Rational::from(1),
            Rational::new()
        ]);
    }
}
