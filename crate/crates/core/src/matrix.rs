//! Dense matrices over the rationals with exact Gauss–Jordan elimination.
//! Problem sizes here top out around 165×81, so dense storage is fine.

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>, // row-major
}

/// Result of reduction to reduced row-echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: RatMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![rat(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged row lengths".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        let mut m = RatMatrix::zero(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rational> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major flattening.
    pub fn to_vec(&self) -> Vec<Rational> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> RatMatrix {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = rat(0);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Lie bracket `[a, b] = ab - ba`.
    pub fn bracket(&self, other: &RatMatrix) -> RatMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        let mut acc = rat(0);
        for i in 0..self.rows.min(self.cols) {
            acc += self.at(i, i);
        }
        acc
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// The unique reduced row-echelon form, with pivot columns and rank.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).recip();
            for j in c..m.cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    let v = m.at(i, j) - &f * m.at(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = RatMatrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                rat(1)
            } else {
                rat(0)
            }
        });
        let rr = aug.rref();
        if rr.pivots.len() != n || rr.pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        Ok(RatMatrix::from_fn(n, n, |r, c| {
            rr.reduced.at(r, n + c).clone()
        }))
    }

    /// One solution of `self * x = rhs` with all free variables set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, rhs.len());
        let aug = RatMatrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                rhs[r].clone()
            }
        });
        let rr = aug.rref();
        if rr.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![rat(0); self.cols];
        for (i, &p) in rr.pivots.iter().enumerate() {
            x[p] = rr.reduced.at(i, self.cols).clone();
        }
        Some(x)
    }

    /// Exact exponential of a nilpotent matrix (the series terminates).
    pub fn exp_nilpotent(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("exp of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut acc = RatMatrix::identity(n);
        let mut term = RatMatrix::identity(n);
        for k in 1..=n {
            term = term.mul(self).scale(&Rational::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&term);
        }
        Err(Error::InvariantViolation(
            "exp_nilpotent called on a non-nilpotent matrix".into(),
        ))
    }
}

/// Solve the Sylvester-type equation `a·x - x·b = c` for `x`, returning the
/// solution with all free coordinates zero, or `NoSolution`.
pub fn sylvester_solve(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix) -> Result<RatMatrix> {
    if !a.is_square() || !b.is_square() || c.rows() != a.rows() || c.cols() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "sylvester shapes {}x{}, {}x{}, {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols(),
            c.rows(),
            c.cols()
        )));
    }
    let (p, q) = (a.rows(), b.rows());
    // unknown x is p×q, flattened row-major; equation (i,j) reads
    // sum_k a[i,k] x[k,j] - sum_k x[i,k] b[k,j] = c[i,j]
    let mut sys = RatMatrix::zero(p * q, p * q);
    for i in 0..p {
        for j in 0..q {
            let row = i * q + j;
            for k in 0..p {
                let v = sys.at(row, k * q + j) + a.at(i, k);
                sys.set(row, k * q + j, v);
            }
            for k in 0..q {
                let v = sys.at(row, i * q + k) - b.at(k, j);
                sys.set(row, i * q + k, v);
            }
        }
    }
    let rhs = c.to_vec();
    match sys.solve(&rhs) {
        Some(x) => RatMatrix::from_flat(p, q, x),
        None => Err(Error::NoSolution),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn rref_proportional_rows() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let rr = m.rref();
        assert_eq!(rr.rank, 1);
        assert_eq!(rr.pivots, vec![0]);
        assert_eq!(rr.reduced.row_vec(0), vec![rat(1), rat(2)]);
    }

    #[test]
    fn rref_identity_fixed() {
        let m = RatMatrix::identity(3);
        let rr = m.rref();
        assert_eq!(rr.reduced, m);
        assert_eq!(rr.rank, 3);
    }

    #[test]
    fn rref_permutation() {
        let m = RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let rr = m.rref();
        assert_eq!(rr.reduced, RatMatrix::identity(2));
        assert_eq!(rr.rank, 2);
    }

    #[test]
    fn rref_idempotent() {
        let m = RatMatrix::from_i64_rows(&[&[2, 4, 1], &[1, 2, 0], &[3, 6, 2]]);
        let once = m.rref().reduced;
        assert_eq!(once.rref().reduced, once);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 5]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        let s = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
    }

    #[test]
    fn solve_prefers_zero_free_vars() {
        let m = RatMatrix::from_i64_rows(&[&[1, 1, 0]]);
        let x = m.solve(&[rat(3)]).unwrap();
        assert_eq!(x, vec![rat(3), rat(0), rat(0)]);
        let bad = RatMatrix::from_i64_rows(&[&[1, 0], &[1, 0]]);
        assert!(bad.solve(&[rat(1), rat(2)]).is_none());
    }

    #[test]
    fn sylvester_one_by_one() {
        // (1-2)x = 5
        let a = RatMatrix::from_i64_rows(&[&[1]]);
        let b = RatMatrix::from_i64_rows(&[&[2]]);
        let c = RatMatrix::from_i64_rows(&[&[5]]);
        assert_eq!(
            sylvester_solve(&a, &b, &c).unwrap(),
            RatMatrix::from_i64_rows(&[&[-5]])
        );
    }

    #[test]
    fn sylvester_zero_system_picks_zero() {
        let i = RatMatrix::identity(2);
        let c = RatMatrix::zero(2, 2);
        assert_eq!(sylvester_solve(&i, &i, &c).unwrap(), RatMatrix::zero(2, 2));
    }

    #[test]
    fn sylvester_componentwise() {
        // a = diag(1,3), b = diag(2), c = (1,1)^T -> x = (-1,1)^T
        let a = RatMatrix::from_i64_rows(&[&[1, 0], &[0, 3]]);
        let b = RatMatrix::from_i64_rows(&[&[2]]);
        let c = RatMatrix::from_i64_rows(&[&[1], &[1]]);
        assert_eq!(
            sylvester_solve(&a, &b, &c).unwrap(),
            RatMatrix::from_i64_rows(&[&[-1], &[1]])
        );
    }

    #[test]
    fn sylvester_inconsistent() {
        // x*0 - 0*x = c with c nonzero has no solution: a = b = 0
        let a = RatMatrix::zero(1, 1);
        let c = RatMatrix::from_i64_rows(&[&[1]]);
        assert_eq!(sylvester_solve(&a, &a, &c), Err(Error::NoSolution));
    }

    #[test]
    fn exp_nilpotent_quadratic() {
        let x = RatMatrix::from_i64_rows(&[&[0, 2], &[0, 0]]);
        assert_eq!(
            x.exp_nilpotent().unwrap(),
            RatMatrix::from_i64_rows(&[&[1, 2], &[0, 1]])
        );
        let bad = RatMatrix::identity(2);
        assert!(bad.exp_nilpotent().is_err());
        let half = RatMatrix::from_rows(vec![vec![rat(0), ratio(1, 2)], vec![rat(0), rat(0)]])
            .unwrap();
        let e = half.exp_nilpotent().unwrap();
        assert_eq!(e.at(0, 1), &ratio(1, 2));
    }
}
