//! Dense matrices over a `Num` scalar: exact over the rationals or numeric
//! over `BigComplex`. Sizes here are tiny (2..6), so everything is direct.

use rug::Float;

use super::complex::BigComplex;
use super::poly::Poly;
use super::roots;
use super::scalar::Num;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    pub n: usize,
    pub m: usize,
    pub a: Vec<T>,
}

impl<T: Num> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows[0].len();
        let mut a = Vec::with_capacity(n * m);
        for r in rows {
            assert_eq!(r.len(), m);
            a.extend(r);
        }
        Mat { n, m, a }
    }

    pub fn zeros_like(proto: &T, n: usize, m: usize) -> Self {
        Mat {
            n,
            m,
            a: vec![proto.zero_like(); n * m],
        }
    }

    pub fn identity_like(proto: &T, n: usize) -> Self {
        let mut out = Self::zeros_like(proto, n, n);
        for i in 0..n {
            *out.at_mut(i, i) = proto.one_like();
        }
        out
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.m + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.a[i * self.m + j]
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.m).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.n).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.m, o.n);
        let proto = &self.a[0];
        let mut out = Self::zeros_like(proto, self.n, o.m);
        for i in 0..self.n {
            for k in 0..self.m {
                let aik = self.at(i, k);
                if aik.is_exactly_zero() {
                    continue;
                }
                for j in 0..o.m {
                    let v = out.at(i, j).add(&aik.mul(o.at(k, j)));
                    *out.at_mut(i, j) = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.m, v.len());
        (0..self.n)
            .map(|i| {
                let mut acc = self.a[0].zero_like();
                for j in 0..self.m {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.n, self.m), (o.n, o.m));
        Mat {
            n: self.n,
            m: self.m,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x.add(y)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.n, self.m), (o.n, o.m));
        Mat {
            n: self.n,
            m: self.m,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x.sub(y)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat {
            n: self.n,
            m: self.m,
            a: self.a.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat {
            n: self.n,
            m: self.m,
            a: self.a.iter().map(|x| x.mul(s)).collect(),
        }
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.n, self.m);
        let mut acc = self.a[0].zero_like();
        for i in 0..self.n {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros_like(&self.a[0], self.m, self.n);
        for i in 0..self.n {
            for j in 0..self.m {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// Outer product e ⊗ α (column times row).
    pub fn outer(e: &[T], alpha: &[T]) -> Self {
        let n = e.len();
        let m = alpha.len();
        let mut a = Vec::with_capacity(n * m);
        for x in e {
            for y in alpha {
                a.push(x.mul(y));
            }
        }
        Mat { n, m, a }
    }

    /// Solve A X = B by Gaussian elimination with partial pivoting.
    pub fn solve(&self, b: &Mat<T>) -> Result<Mat<T>> {
        assert_eq!(self.n, self.m);
        assert_eq!(b.n, self.n);
        let n = self.n;
        let mut aug = self.clone();
        let mut rhs = b.clone();
        for col in 0..n {
            let mut piv = col;
            let mut best = aug.at(col, col).pivot_size();
            for r in (col + 1)..n {
                let s = aug.at(r, col).pivot_size();
                if s > best {
                    best = s;
                    piv = r;
                }
            }
            if aug.at(piv, col).is_exactly_zero() {
                return Err(Error::SingularSystem);
            }
            if piv != col {
                for j in 0..n {
                    let tmp = aug.at(col, j).clone();
                    *aug.at_mut(col, j) = aug.at(piv, j).clone();
                    *aug.at_mut(piv, j) = tmp;
                }
                for j in 0..rhs.m {
                    let tmp = rhs.at(col, j).clone();
                    *rhs.at_mut(col, j) = rhs.at(piv, j).clone();
                    *rhs.at_mut(piv, j) = tmp;
                }
            }
            let d = aug.at(col, col).clone();
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = aug.at(r, col).div(&d);
                if f.is_exactly_zero() {
                    continue;
                }
                for j in col..n {
                    let v = aug.at(r, j).sub(&f.mul(aug.at(col, j)));
                    *aug.at_mut(r, j) = v;
                }
                for j in 0..rhs.m {
                    let v = rhs.at(r, j).sub(&f.mul(rhs.at(col, j)));
                    *rhs.at_mut(r, j) = v;
                }
            }
        }
        let mut out = rhs;
        for i in 0..n {
            let d = aug.at(i, i).clone();
            for j in 0..out.m {
                let v = out.at(i, j).div(&d);
                *out.at_mut(i, j) = v;
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.solve(&Self::identity_like(&self.a[0], self.n))
    }

    pub fn det(&self) -> T {
        assert_eq!(self.n, self.m);
        let n = self.n;
        let mut lu = self.clone();
        let mut det = self.a[0].one_like();
        for col in 0..n {
            let mut piv = col;
            let mut best = lu.at(col, col).pivot_size();
            for r in (col + 1)..n {
                let s = lu.at(r, col).pivot_size();
                if s > best {
                    best = s;
                    piv = r;
                }
            }
            if lu.at(piv, col).is_exactly_zero() {
                return self.a[0].zero_like();
            }
            if piv != col {
                det = det.neg();
                for j in 0..n {
                    let tmp = lu.at(col, j).clone();
                    *lu.at_mut(col, j) = lu.at(piv, j).clone();
                    *lu.at_mut(piv, j) = tmp;
                }
            }
            let d = lu.at(col, col).clone();
            det = det.mul(&d);
            for r in (col + 1)..n {
                let f = lu.at(r, col).div(&d);
                if f.is_exactly_zero() {
                    continue;
                }
                for j in col..n {
                    let v = lu.at(r, j).sub(&f.mul(lu.at(col, j)));
                    *lu.at_mut(r, j) = v;
                }
            }
        }
        det
    }

    /// Rank with pivots below tol treated as zero (full pivoting).
    pub fn rank_with_tol(&self, tol_size: f64) -> usize {
        let mut w = self.clone();
        let mut rank = 0;
        let mut used_rows = vec![false; self.n];
        let mut used_cols = vec![false; self.m];
        loop {
            let mut best = tol_size;
            let mut pr = usize::MAX;
            let mut pc = usize::MAX;
            for i in 0..self.n {
                if used_rows[i] {
                    continue;
                }
                for j in 0..self.m {
                    if used_cols[j] {
                        continue;
                    }
                    let s = w.at(i, j).pivot_size();
                    if s > best {
                        best = s;
                        pr = i;
                        pc = j;
                    }
                }
            }
            if pr == usize::MAX {
                return rank;
            }
            rank += 1;
            used_rows[pr] = true;
            used_cols[pc] = true;
            let d = w.at(pr, pc).clone();
            for i in 0..self.n {
                if used_rows[i] {
                    continue;
                }
                let f = w.at(i, pc).div(&d);
                if f.is_exactly_zero() {
                    continue;
                }
                for j in 0..self.m {
                    let v = w.at(i, j).sub(&f.mul(w.at(pr, j)));
                    *w.at_mut(i, j) = v;
                }
            }
        }
    }
}

pub type CMat = Mat<BigComplex>;

impl CMat {
    pub fn czeros(prec: u32, n: usize, m: usize) -> Self {
        Mat::zeros_like(&BigComplex::zero(prec), n, m)
    }

    pub fn cidentity(prec: u32, n: usize) -> Self {
        Mat::identity_like(&BigComplex::zero(prec), n)
    }

    pub fn conj_transpose(&self) -> Self {
        let mut out = self.transpose();
        for x in &mut out.a {
            *x = x.conj();
        }
        out
    }

    pub fn prec(&self) -> u32 {
        self.a.iter().map(|x| x.prec()).min().unwrap_or(64)
    }

    pub fn close_to(&self, o: &Self, tol: &Float) -> bool {
        self.n == o.n
            && self.m == o.m
            && self.a.iter().zip(&o.a).all(|(x, y)| x.close_to(y, tol))
    }

    pub fn max_abs(&self) -> Float {
        let mut best = Float::with_val(self.prec(), 0);
        for x in &self.a {
            let v = x.abs();
            if v > best {
                best = v;
            }
        }
        best
    }

    /// Characteristic polynomial of a small matrix (Faddeev–LeVerrier).
    pub fn char_poly(&self) -> Poly<BigComplex> {
        assert_eq!(self.n, self.m);
        let n = self.n;
        let prec = self.prec();
        // c[n] λ^n + ... ; Faddeev–LeVerrier gives monic with signs.
        let mut coeffs = vec![BigComplex::zero(prec); n + 1];
        coeffs[n] = BigComplex::one(prec);
        let mut mk = CMat::cidentity(prec, n);
        for k in 1..=n {
            mk = self.mul(&mk);
            let c = mk.trace().scale_rational(&rug::Rational::from((-1i64, k as i64)));
            // M_{k+1} base: A (M_k + c_k I)
            for i in 0..n {
                let v = mk.at(i, i).add(&c);
                *mk.at_mut(i, i) = v;
            }
            coeffs[n - k] = c;
        }
        Poly::new(coeffs)
    }

    /// Eigenvalues of a small complex matrix.
    pub fn eigenvalues(&self) -> Vec<BigComplex> {
        roots::all_roots(&self.char_poly(), self.prec())
    }

    /// A kernel vector for a (numerically) singular matrix, via full-pivot
    /// elimination; the smallest pivot is treated as zero.
    pub fn kernel_vector(&self, tol: &Float) -> Option<Vec<BigComplex>> {
        assert_eq!(self.n, self.m);
        let n = self.n;
        let prec = self.prec();
        let mut w = self.clone();
        let mut col_of_step: Vec<usize> = vec![];
        let mut row_used = vec![false; n];
        let mut col_used = vec![false; n];
        for _ in 0..n {
            let mut best: Option<(usize, usize, f64)> = None;
            for i in 0..n {
                if row_used[i] {
                    continue;
                }
                for j in 0..n {
                    if col_used[j] {
                        continue;
                    }
                    let s = w.at(i, j).pivot_size();
                    if best.map_or(true, |(_, _, b)| s > b) {
                        best = Some((i, j, s));
                    }
                }
            }
            let (pi, pj, sz) = best?;
            if Float::with_val(prec, sz) < *tol {
                // pivot ~ 0: the free column pj yields a kernel vector
                break;
            }
            row_used[pi] = true;
            col_used[pj] = true;
            col_of_step.push(pj);
            let d = w.at(pi, pj).clone();
            for i in 0..n {
                if i == pi {
                    continue;
                }
                let f = w.at(i, pj).div(&d);
                if f.is_exactly_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = w.at(i, j).sub(&f.mul(w.at(pi, j)));
                    *w.at_mut(i, j) = v;
                }
            }
            // normalize pivot row
            for j in 0..n {
                let v = w.at(pi, j).div(&d);
                *w.at_mut(pi, j) = v;
            }
            // remember pivot row for this column
            // (store implicitly: the pivot row for column pj is pi)
            if col_of_step.len() == n {
                return None; // full rank
            }
        }
        // free column = first unused column
        let free = (0..n).find(|j| !col_used[*j])?;
        let mut v = vec![BigComplex::zero(prec); n];
        v[free] = BigComplex::one(prec);
        // For each pivot (pi, pj): x_pj = -w[pi, free]
        for i in 0..n {
            if !row_used[i] {
                continue;
            }
            // find this row's pivot column: the unique used column with entry 1
            for j in 0..n {
                if col_used[j] && w.at(i, j).sub(&BigComplex::one(prec)).abs() < real_tol(prec) {
                    v[j] = w.at(i, free).neg();
                    break;
                }
            }
        }
        Some(v)
    }
}

fn real_tol(prec: u32) -> Float {
    super::real::two_pow(prec, -(prec as i64) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    #[test]
    fn exact_solve_and_det() {
        let m = Mat::from_rows(vec![
            vec![Rational::from(2), Rational::from(1)],
            vec![Rational::from(1), Rational::from(3)],
        ]);
        assert_eq!(m.det(), Rational::from(5));
        let b = Mat::from_rows(vec![vec![Rational::from(3)], vec![Rational::from(4)]]);
        let x = m.solve(&b).unwrap();
        assert_eq!(*x.at(0, 0), Rational::from(1));
        assert_eq!(*x.at(1, 0), Rational::from(1));
    }

    #[test]
    fn eigenvalues_of_diagonalizable() {
        let prec = 192;
        let m = CMat::from_rows(vec![
            vec![BigComplex::from_i64(prec, 2), BigComplex::from_i64(prec, 1)],
            vec![BigComplex::zero(prec), BigComplex::from_i64(prec, -1)],
        ]);
        let ev = m.eigenvalues();
        let tol = crate::numerics::real::two_pow(prec, -120);
        assert!(ev.iter().any(|e| e.close_to(&BigComplex::from_i64(prec, 2), &tol)));
        assert!(ev.iter().any(|e| e.close_to(&BigComplex::from_i64(prec, -1), &tol)));
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let prec = 192;
        // rows are multiples: rank 1, kernel dim 2; any returned vector must solve Av≈0.
        let m = CMat::from_rows(vec![
            vec![BigComplex::from_i64(prec, 1), BigComplex::from_i64(prec, 2), BigComplex::from_i64(prec, 3)],
            vec![BigComplex::from_i64(prec, 2), BigComplex::from_i64(prec, 4), BigComplex::from_i64(prec, 6)],
            vec![BigComplex::from_i64(prec, -1), BigComplex::from_i64(prec, -2), BigComplex::from_i64(prec, -3)],
        ]);
        let tol = crate::numerics::real::two_pow(prec, -100);
        let v = m.kernel_vector(&tol).unwrap();
        let image = m.mul_vec(&v);
        for x in image {
            assert!(x.is_zero_within(&tol));
        }
    }
}
