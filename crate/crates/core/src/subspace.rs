//! Linear subspaces of ℚ^N in canonical form: the stored basis is the unique
//! reduced row-echelon basis, so equality of subspaces is structural equality.

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{rat, Rational};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: RatMatrix, // dim × ambient, canonical RREF, no zero rows
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMatrix::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMatrix::identity(ambient),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        for row in &rows {
            if row.len() != ambient {
                return Err(Error::AmbientMismatch(row.len(), ambient));
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let m = RatMatrix::from_rows(rows)?;
        Ok(Subspace::from_span_matrix(&m))
    }

    /// Row space of a matrix, canonicalized.
    pub fn from_span_matrix(m: &RatMatrix) -> Self {
        let rr = m.rref();
        let basis = RatMatrix::from_fn(rr.rank, m.cols(), |r, c| rr.reduced.at(r, c).clone());
        Subspace {
            ambient: m.cols(),
            basis,
        }
    }

    pub fn span_of(vectors: &[Vec<Rational>], ambient: usize) -> Result<Self> {
        Subspace::from_rows(ambient, vectors.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    /// Pivot column of each basis row.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("no zero rows in a canonical basis")
            })
            .collect()
    }

    /// Canonical coset representative: `v` minus its projection onto the
    /// pivot coordinates of the basis. Zero iff `v` lies in the subspace.
    pub fn reduce_mod(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(v.len(), self.ambient));
        }
        let mut out = v.to_vec();
        for (i, p) in self.pivot_columns().into_iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] -= &f * b;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.reduce_mod(v)?.iter().all(|x| x.is_zero()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection by the Zassenhaus block trick.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let n = self.ambient;
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(n));
        }
        let block = RatMatrix::from_fn(a + b, 2 * n, |r, c| {
            if r < a {
                // [A | A]
                self.basis.at(r, c % n).clone()
            } else if c < n {
                // [B | 0]
                other.basis.at(r - a, c).clone()
            } else {
                rat(0)
            }
        });
        let rr = block.rref();
        let mut rows = Vec::new();
        for i in 0..rr.rank {
            let left_zero = (0..n).all(|c| rr.reduced.at(i, c).is_zero());
            if left_zero {
                rows.push((n..2 * n).map(|c| rr.reduced.at(i, c).clone()).collect());
            }
        }
        Subspace::from_rows(n, rows)
    }

    /// `dim(other) - dim(self)`, requiring `self ⊆ other`.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize> {
        if !self.is_subspace_of(other)? {
            return Err(Error::NotContained);
        }
        Ok(other.dim() - self.dim())
    }
}

/// Kernel `{v : m·v = 0}` as a canonical subspace of ℚ^cols.
pub fn nullspace(m: &RatMatrix) -> Subspace {
    let rr = m.rref();
    let n = m.cols();
    let mut rows = Vec::new();
    for j in 0..n {
        if rr.pivots.contains(&j) {
            continue;
        }
        let mut v = vec![rat(0); n];
        v[j] = rat(1);
        for (i, &p) in rr.pivots.iter().enumerate() {
            v[p] = -rr.reduced.at(i, j).clone();
        }
        rows.push(v);
    }
    Subspace::from_rows(n, rows).expect("nullspace rows have ambient length")
}
