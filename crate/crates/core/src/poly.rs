//! Dense univariate polynomials over the rationals. Coefficients are stored
//! in ascending degree order with no trailing zeros; the zero polynomial has
//! an empty coefficient list.

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{rat, Rational};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(rat(1))
    }

    pub fn x() -> Self {
        UniPoly::new(vec![rat(0), rat(1)])
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divmod(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if d.is_zero() {
            return Err(Error::Input("division by the zero polynomial".into()));
        }
        let mut rem = self.clone();
        let mut quo = vec![rat(0); self.coeffs.len().saturating_sub(d.coeffs.len() - 1)];
        let dlead = d.leading().unwrap().clone();
        while !rem.is_zero() && rem.coeffs.len() >= d.coeffs.len() {
            let shift = rem.coeffs.len() - d.coeffs.len();
            let f = rem.leading().unwrap() / &dlead;
            quo[shift] = f.clone();
            let mut new = rem.coeffs.clone();
            for (j, b) in d.coeffs.iter().enumerate() {
                new[shift + j] -= &f * b;
            }
            // the leading term cancels exactly
            new.pop();
            rem = UniPoly::new(new);
        }
        Ok((UniPoly::new(quo), rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns monic `g` and `(u, v)` with `u*self + v*other = g`.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut u1) = (UniPoly::one(), UniPoly::zero());
        let (mut v0, mut v1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        match r0.leading() {
            None => (UniPoly::zero(), UniPoly::zero(), UniPoly::zero()),
            Some(l) => {
                let s = l.recip();
                (r0.scale(&s), u0.scale(&s), v0.scale(&s))
            }
        }
    }

    pub fn lcm(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.divmod(&g).expect("gcd divides");
        q.mul(other).monic()
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    /// `self / gcd(self, self')` — the product of the distinct irreducible
    /// factors, each to the first power.
    pub fn squarefree_part(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) || g.is_zero() {
            return self.monic();
        }
        let (q, _) = self.divmod(&g).expect("gcd divides");
        q.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &RatMatrix) -> RatMatrix {
        let n = m.rows();
        let mut acc = RatMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&RatMatrix::identity(n).scale(c));
        }
        acc
    }

    /// `self(arg) mod modulus`, by Horner in the quotient ring.
    pub fn compose_mod(&self, arg: &UniPoly, modulus: &UniPoly) -> Result<UniPoly> {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(arg).add(&UniPoly::constant(c.clone()));
            let (_, r) = acc.divmod(modulus)?;
            acc = r;
        }
        Ok(acc)
    }

    /// Inverse of `self` modulo `modulus`, when the two are coprime.
    pub fn inverse_mod(&self, modulus: &UniPoly) -> Result<UniPoly> {
        let (g, u, _) = self.ext_gcd(modulus);
        if g.degree() != Some(0) {
            return Err(Error::NoSolution);
        }
        let (_, r) = u.divmod(modulus)?;
        Ok(r)
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn divmod_roundtrip() {
        let a = UniPoly::from_i64(&[2, 0, -3, 1]); // x^3 - 3x^2 + 2
        let b = UniPoly::from_i64(&[-1, 1]); // x - 1
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(r, UniPoly::zero()); // 1 is a root
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = UniPoly::from_i64(&[-1, 0, 1]); // (x-1)(x+1)
        let b = UniPoly::from_i64(&[1, -2, 1]); // (x-1)^2
        assert_eq!(a.gcd(&b), UniPoly::from_i64(&[-1, 1]));
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x-1)^2 (x+2)
        let p = UniPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree_part(), UniPoly::from_i64(&[-2, 1, 1]).monic());
    }

    #[test]
    fn eval_and_inverse_mod() {
        let p = UniPoly::from_i64(&[1, 2, 3]);
        assert_eq!(p.eval(&ratio(1, 2)), ratio(11, 4));
        let m = UniPoly::from_i64(&[-2, 0, 1]); // x^2 - 2
        let inv = UniPoly::x().inverse_mod(&m).unwrap();
        let (_, prod) = UniPoly::x().mul(&inv).divmod(&m).unwrap();
        assert_eq!(prod, UniPoly::one());
    }
}
