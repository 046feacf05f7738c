//! Minimal polynomials, semisimplicity tests and the Jordan–Chevalley
//! decomposition, all inside ℚ. Semisimplicity is detected as squarefreeness
//! of the minimal polynomial; the semisimple part is produced by Newton
//! iteration on the squarefree part, so no factorization is ever needed.

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::poly::UniPoly;
use crate::rational::{rat, Rational};
use crate::subspace::{nullspace, Subspace};
use num::{BigInt, One, Signed, Zero};

/// Monic least-degree polynomial annihilating `a`, by Krylov iteration on
/// the standard basis vectors and lcm of the per-vector annihilators.
pub fn minimal_polynomial(a: &RatMatrix) -> Result<UniPoly> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("minimal polynomial of a non-square matrix".into()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(UniPoly::one());
    }
    let mut result = UniPoly::one();
    for i in 0..n {
        let mut v = vec![rat(0); n];
        v[i] = rat(1);
        let ann = vector_annihilator(a, &v);
        result = result.lcm(&ann);
        if result.degree() == Some(n) {
            break;
        }
    }
    Ok(result)
}

/// Monic annihilator of a single vector: the first monic relation among
/// `v, a·v, a²·v, …`.
fn vector_annihilator(a: &RatMatrix, v: &[Rational]) -> UniPoly {
    let n = v.len();
    let mut krylov: Vec<Vec<Rational>> = vec![v.to_vec()];
    loop {
        let last = krylov.last().unwrap();
        let next = a.mul_vec(last);
        // columns = current Krylov vectors
        let k = krylov.len();
        let m = RatMatrix::from_fn(n, k, |r, c| krylov[c][r].clone());
        if let Some(coeffs) = m.solve(&next) {
            // check it really solves (solve() only fails on inconsistency)
            let mut combo = vec![rat(0); n];
            for (c, col) in coeffs.iter().zip(&krylov) {
                for (j, x) in col.iter().enumerate() {
                    combo[j] += c * x;
                }
            }
            if combo == next {
                // x^k - sum coeffs[j] x^j
                let mut poly = vec![rat(0); k + 1];
                for (j, c) in coeffs.iter().enumerate() {
                    poly[j] = -c.clone();
                }
                poly[k] = rat(1);
                return UniPoly::new(poly);
            }
        }
        krylov.push(next);
    }
}

/// A matrix is semisimple over ℚ̄ iff its minimal polynomial is squarefree.
pub fn is_semisimple(a: &RatMatrix) -> Result<bool> {
    let p = minimal_polynomial(a)?;
    let g = p.gcd(&p.derivative());
    Ok(g.degree() == Some(0))
}

/// Jordan–Chevalley decomposition `a = s + n` with `s` semisimple, `n`
/// nilpotent and `[s, n] = 0`, computed by Newton iteration on the
/// squarefree part of the minimal polynomial.
pub fn jordan_chevalley(a: &RatMatrix) -> Result<(RatMatrix, RatMatrix)> {
    let p = minimal_polynomial(a)?;
    let q = p.squarefree_part();
    if q == p.monic() {
        return Ok((a.clone(), RatMatrix::zero(a.rows(), a.rows())));
    }
    let qd = q.derivative();
    let mut sigma = UniPoly::x();
    // quadratic convergence: the multiplicity is at most deg p
    for _ in 0..64 {
        let r = q.compose_mod(&sigma, &p)?;
        if r.is_zero() {
            break;
        }
        let d = qd.compose_mod(&sigma, &p)?;
        let inv = d.inverse_mod(&p).map_err(|_| {
            Error::InvariantViolation("q'(s) not invertible in Newton step".into())
        })?;
        let (_, next) = sigma.sub(&r.mul(&inv)).divmod(&p)?;
        sigma = next;
    }
    if !q.compose_mod(&sigma, &p)?.is_zero() {
        return Err(Error::InvariantViolation("Newton iteration did not terminate".into()));
    }
    let s = sigma.eval_matrix(a);
    let n = a.sub(&s);
    Ok((s, n))
}

/// All rational eigenvalues (roots of the minimal polynomial), sorted in
/// descending order.
pub fn rational_eigenvalues(a: &RatMatrix) -> Result<Vec<Rational>> {
    let p = minimal_polynomial(a)?;
    let mut roots = rational_roots(&p)?;
    roots.sort();
    roots.reverse();
    Ok(roots)
}

/// Left eigenspace `{v : v·a = λ·v}` as a subspace of row vectors.
pub fn left_eigenspace(a: &RatMatrix, lambda: &Rational) -> Subspace {
    let n = a.rows();
    let shifted = a.transpose().sub(&RatMatrix::identity(n).scale(lambda));
    nullspace(&shifted)
}

/// Rational roots of a rational polynomial, via the rational root theorem on
/// the primitive integer model.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::Input("roots of the zero polynomial".into()));
    }
    let mut work = p.clone();
    let mut roots = Vec::new();
    // strip powers of x
    while work.coeff(0).is_zero() && !work.is_zero() {
        if !roots.contains(&rat(0)) {
            roots.push(rat(0));
        }
        let (q, _) = work.divmod(&UniPoly::x())?;
        work = q;
    }
    if work.degree().unwrap_or(0) == 0 {
        return Ok(roots);
    }
    // integer model
    let mut denom_lcm = BigInt::one();
    for c in work.coeffs() {
        denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = work
        .coeffs()
        .iter()
        .map(|c| c.numer() * &denom_lcm / c.denom())
        .collect();
    let a0 = ints.first().unwrap().abs();
    let alead = ints.last().unwrap().abs();
    let num_divs = divisors(&a0)?;
    let den_divs = divisors(&alead)?;
    for nd in &num_divs {
        for dd in &den_divs {
            for sign in [1i64, -1] {
                let cand = Rational::new(nd * BigInt::from(sign), dd.clone());
                if work.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let v: u128 = n.to_string().parse().map_err(|_| {
        Error::InvariantViolation("coefficient too large for divisor enumeration".into())
    })?;
    if v == 0 {
        return Ok(vec![BigInt::one()]);
    }
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d != v / d {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn minpoly_identity_is_linear() {
        let p = minimal_polynomial(&RatMatrix::identity(3)).unwrap();
        assert_eq!(p, UniPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn minpoly_nilpotent_square() {
        let n = RatMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(minimal_polynomial(&n).unwrap(), UniPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn minpoly_distinct_diagonal() {
        let d = RatMatrix::from_i64_rows(&[&[1, 0], &[0, 2]]);
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(minimal_polynomial(&d).unwrap(), UniPoly::from_i64(&[2, -3, 1]));
    }

    #[test]
    fn semisimplicity_cases() {
        let jordan = RatMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert!(!is_semisimple(&jordan).unwrap());
        let d = RatMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert!(is_semisimple(&d).unwrap());
        // rotation: minpoly x^2 + 1 squarefree over Q, no rational spectrum
        let rot = RatMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        assert!(is_semisimple(&rot).unwrap());
    }

    #[test]
    fn jordan_chevalley_jordan_block() {
        let a = RatMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let (s, n) = jordan_chevalley(&a).unwrap();
        assert_eq!(s, RatMatrix::identity(2));
        assert_eq!(n, RatMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]));
        assert_eq!(s.add(&n), a);
        assert_eq!(s.mul(&n), n.mul(&s));
        assert!(is_semisimple(&s).unwrap());
    }

    #[test]
    fn jordan_chevalley_exactness_bigger() {
        // block with eigenvalue 2 of multiplicity 3 (one Jordan chain) plus 5
        let a = RatMatrix::from_i64_rows(&[
            &[2, 1, 0, 0],
            &[0, 2, 1, 0],
            &[0, 0, 2, 0],
            &[0, 0, 0, 5],
        ]);
        let (s, n) = jordan_chevalley(&a).unwrap();
        assert_eq!(s.add(&n), a);
        assert_eq!(s.mul(&n), n.mul(&s));
        assert!(is_semisimple(&s).unwrap());
        let n4 = n.mul(&n).mul(&n).mul(&n);
        assert!(n4.is_zero());
    }

    #[test]
    fn rational_eigenvalues_sorted_descending() {
        let a = RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(rational_eigenvalues(&a).unwrap(), vec![rat(1), rat(-1)]);
        let half = RatMatrix::from_rows(vec![vec![ratio(1, 2)]]).unwrap();
        assert_eq!(rational_eigenvalues(&half).unwrap(), vec![ratio(1, 2)]);
        let rot = RatMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        assert!(rational_eigenvalues(&rot).unwrap().is_empty());
    }

    #[test]
    fn left_eigenspace_swap() {
        let a = RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let e1 = left_eigenspace(&a, &rat(1));
        assert_eq!(e1.dim(), 1);
        assert!(e1.contains(&[rat(1), rat(1)]).unwrap());
    }
}
