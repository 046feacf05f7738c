//! Homogeneous multivariate polynomials over ℚ, stored as a sparse map from
//! exponent vectors to coefficients. The canonical term order is
//! lexicographic on exponent vectors (the natural `BTreeMap` order), which
//! makes serialized output byte-stable.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{rat, Rational};
use num::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    n_vars: usize,
    degree: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Form {
    pub fn zero(n_vars: usize, degree: usize) -> Self {
        Form {
            n_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Single term `c · x^exps`.
    pub fn monomial(n_vars: usize, c: Rational, exps: &[u32]) -> Self {
        assert_eq!(exps.len(), n_vars);
        let degree = exps.iter().map(|&e| e as usize).sum();
        let mut f = Form::zero(n_vars, degree);
        f.add_term(Monomial(exps.to_vec()), c);
        f
    }

    pub fn variable(n_vars: usize, i: usize) -> Self {
        let mut exps = vec![0u32; n_vars];
        exps[i] = 1;
        Form::monomial(n_vars, rat(1), &exps)
    }

    /// Validating constructor for untrusted term lists.
    pub fn try_new(
        n_vars: usize,
        degree: usize,
        terms: Vec<(Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut f = Form::zero(n_vars, degree);
        for (exps, c) in terms {
            if exps.len() != n_vars {
                return Err(Error::ShapeMismatch(format!(
                    "monomial with {} exponents in {} variables",
                    exps.len(),
                    n_vars
                )));
            }
            let m = Monomial(exps);
            if m.total_degree() != degree {
                return Err(Error::ShapeMismatch(format!(
                    "monomial of degree {} in a degree-{} form",
                    m.total_degree(),
                    degree
                )));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.total_degree(), self.degree);
        debug_assert_eq!(m.0.len(), self.n_vars);
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| rat(0))
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.n_vars, other.n_vars);
        assert!(self.is_zero() || other.is_zero() || self.degree == other.degree);
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = Form::zero(self.n_vars, degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form::zero(self.n_vars, self.degree);
        }
        Form {
            n_vars: self.n_vars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Form) -> Form {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = Form::zero(self.n_vars, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Form {
        let mut acc = Form::monomial(self.n_vars, rat(1), &vec![0; self.n_vars]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to variable `j`.
    pub fn partial(&self, j: usize) -> Form {
        let mut out = Form::zero(self.n_vars, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[j] -= 1;
            out.add_term(Monomial(exps), c * rat(e as i64));
        }
        out
    }

    /// Multiply by the variable `i`.
    pub fn mul_variable(&self, i: usize) -> Form {
        let mut out = Form::zero(self.n_vars, self.degree + 1);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps[i] += 1;
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n_vars);
        let mut acc = rat(0);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluate with univariate polynomials substituted for the variables.
    pub fn eval_unipoly(&self, point: &[UniPoly]) -> UniPoly {
        assert_eq!(point.len(), self.n_vars);
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (p, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&p.pow(e as usize));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute a degree-1 form for every variable. Used for linear changes
    /// of coordinates and for pulling a form back along a linear map.
    pub fn substitute_linear(&self, images: &[Form]) -> Form {
        assert_eq!(images.len(), self.n_vars);
        let out_vars = images
            .first()
            .map(|f| f.n_vars())
            .unwrap_or(self.n_vars);
        // cache powers of each image as needed
        let mut powers: Vec<Vec<Form>> = images
            .iter()
            .map(|f| vec![Form::monomial(out_vars, rat(1), &vec![0; out_vars]), f.clone()])
            .collect();
        let mut acc = Form::zero(out_vars, self.degree);
        for (m, c) in &self.terms {
            let mut t = Form::monomial(out_vars, c.clone(), &vec![0; out_vars]);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

/// All monomials of the given total degree, in lexicographic (ascending)
/// order on exponent vectors — the canonical coordinate basis of the space
/// of forms.
pub fn monomial_basis(n_vars: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n_vars];
    fill(&mut out, &mut cur, 0, degree as u32, n_vars);
    return out;

    fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, pos: usize, left: u32, n: usize) {
        if pos == n - 1 {
            cur[pos] = left;
            out.push(Monomial(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            fill(out, cur, pos + 1, left - e, n);
        }
        cur[pos] = 0;
    }
}

/// `C(n_vars + degree - 1, degree)`, the dimension of the space of forms.
pub fn form_space_dim(n_vars: usize, degree: usize) -> usize {
    let mut num = 1usize;
    let mut den = 1usize;
    for i in 0..degree {
        num *= n_vars + i;
        den *= i + 1;
    }
    num / den
}

/// Coefficient vector of `f` over `monomial_basis(n_vars, degree)`.
pub fn form_to_coords(f: &Form) -> Vec<Rational> {
    let basis = monomial_basis(f.n_vars(), f.degree());
    let mut out = vec![rat(0); basis.len()];
    for (i, m) in basis.iter().enumerate() {
        if let Some(c) = f.terms.get(m) {
            out[i] = c.clone();
        }
    }
    out
}

pub fn form_from_coords(n_vars: usize, degree: usize, coords: &[Rational]) -> Form {
    let basis = monomial_basis(n_vars, degree);
    assert_eq!(coords.len(), basis.len());
    let mut f = Form::zero(n_vars, degree);
    for (m, c) in basis.into_iter().zip(coords) {
        f.add_term(m, c.clone());
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz_sq_sum() -> Form {
        // x^2 + y^2 + z^2
        Form::try_new(
            3,
            2,
            vec![
                (vec![2, 0, 0], rat(1)),
                (vec![0, 2, 0], rat(1)),
                (vec![0, 0, 2], rat(1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn homogeneity_is_enforced() {
        let bad = Form::try_new(2, 2, vec![(vec![1, 0], rat(1))]);
        assert!(bad.is_err());
    }

    #[test]
    fn mul_and_partial() {
        let q = xyz_sq_sum();
        let f = q.mul(&q); // (x^2+y^2+z^2)^2
        assert_eq!(f.degree(), 4);
        assert_eq!(f.coeff(&[2, 2, 0]), rat(2));
        assert_eq!(f.coeff(&[4, 0, 0]), rat(1));
        let fx = f.partial(0);
        assert_eq!(fx.coeff(&[3, 0, 0]), rat(4));
        assert_eq!(fx.coeff(&[1, 2, 0]), rat(4));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let q = xyz_sq_sum();
        let z = q.sub(&q);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn basis_is_lex_sorted_and_counted() {
        let b = monomial_basis(3, 2);
        assert_eq!(b.len(), form_space_dim(3, 2));
        assert_eq!(b.len(), 6);
        assert_eq!(b[0], Monomial(vec![0, 0, 2]));
        assert_eq!(b[5], Monomial(vec![2, 0, 0]));
        let mut sorted = b.clone();
        sorted.sort();
        assert_eq!(b, sorted);
        assert_eq!(form_space_dim(9, 3), 165);
    }

    #[test]
    fn coords_roundtrip() {
        let q = xyz_sq_sum();
        let v = form_to_coords(&q);
        assert_eq!(form_from_coords(3, 2, &v), q);
    }

    #[test]
    fn substitution_diagonal() {
        let q = xyz_sq_sum();
        // x -> x, y -> y, z -> 2z
        let images = vec![
            Form::variable(3, 0),
            Form::variable(3, 1),
            Form::variable(3, 2).scale(&rat(2)),
        ];
        let s = q.substitute_linear(&images);
        assert_eq!(s.coeff(&[0, 0, 2]), rat(4));
        assert_eq!(s.coeff(&[2, 0, 0]), rat(1));
    }

    #[test]
    fn eval_unipoly_expansion() {
        // f = x*y at (1 + t, 2t): f = 2t + 2t^2
        let f = Form::try_new(2, 2, vec![(vec![1, 1], rat(1))]).unwrap();
        let p = f.eval_unipoly(&[UniPoly::from_i64(&[1, 1]), UniPoly::from_i64(&[0, 2])]);
        assert_eq!(p, UniPoly::from_i64(&[0, 2, 2]));
    }
}
