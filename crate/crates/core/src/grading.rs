//! ℤ-gradings induced by a diagonal one-parameter subgroup: weight
//! decompositions of the representation space and of `gl_n`, leading terms,
//! tangents of approach, the parabolic data and the degree-normalized toral
//! element.

use crate::error::{Error, Result};
use crate::forms::monomial_basis;
use crate::matrix::RatMatrix;
use crate::rational::{rat, ratio, Rational};
use crate::rep::{unvectorize, vectorize, Element, Representation};
use crate::subspace::Subspace;
use num::Zero;
use std::collections::BTreeMap;

/// A one-parameter subgroup `λ(t) = diag(t^{w_1}, …, t^{w_n})` in the
/// working basis. Non-diagonal 1-PS are handled by transporting the other
/// data with a change of basis first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePS {
    pub weights: Vec<i64>,
}

impl OnePS {
    pub fn new(weights: Vec<i64>) -> Self {
        OnePS { weights }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVec {
    pub components: BTreeMap<i64, Element>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLie {
    pub components: BTreeMap<i64, RatMatrix>,
}

/// λ-weight of each ambient coordinate of the representation space.
pub fn coordinate_weights(rep: &Representation, w: &OnePS) -> Result<Vec<i64>> {
    if w.n() != rep.group_dim() {
        return Err(Error::ShapeMismatch(format!(
            "1-PS with {} weights for gl_{}",
            w.n(),
            rep.group_dim()
        )));
    }
    Ok(match *rep {
        Representation::FormsDerivation { n_vars, degree } => monomial_basis(n_vars, degree)
            .iter()
            .map(|m| {
                m.0.iter()
                    .zip(&w.weights)
                    .map(|(&e, &wi)| e as i64 * wi)
                    .sum()
            })
            .collect(),
        Representation::LeftMult { rows, cols } => {
            let mut out = Vec::with_capacity(rows * cols);
            for a in 0..rows {
                for _ in 0..cols {
                    out.push(w.weights[a]);
                }
            }
            out
        }
        Representation::Conjugation { n } => {
            let mut out = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    out.push(w.weights[a] - w.weights[b]);
                }
            }
            out
        }
    })
}

/// Integer characters of the coordinates under the full diagonal torus:
/// exponent vectors for forms, `e_a` for left multiplication, `e_a - e_b`
/// for conjugation.
pub fn coordinate_characters(rep: &Representation) -> Vec<Vec<i64>> {
    match *rep {
        Representation::FormsDerivation { n_vars, degree } => monomial_basis(n_vars, degree)
            .iter()
            .map(|m| m.0.iter().map(|&e| e as i64).collect())
            .collect(),
        Representation::LeftMult { rows, cols } => {
            let mut out = Vec::with_capacity(rows * cols);
            for a in 0..rows {
                for _ in 0..cols {
                    let mut chi = vec![0i64; rows];
                    chi[a] = 1;
                    out.push(chi);
                }
            }
            out
        }
        Representation::Conjugation { n } => {
            let mut out = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let mut chi = vec![0i64; n];
                    chi[a] += 1;
                    chi[b] -= 1;
                    out.push(chi);
                }
            }
            out
        }
    }
}

/// Decompose `v` into its λ-weight components. The components sum back to
/// `v` exactly.
pub fn grade_vec(rep: &Representation, w: &OnePS, v: &Element) -> Result<GradedVec> {
    let weights = coordinate_weights(rep, w)?;
    let coords = vectorize(rep, v)?;
    let mut buckets: BTreeMap<i64, Vec<Rational>> = BTreeMap::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        buckets
            .entry(weights[i])
            .or_insert_with(|| vec![rat(0); coords.len()])
            [i] = c.clone();
    }
    let mut components = BTreeMap::new();
    for (deg, coords) in buckets {
        components.insert(deg, unvectorize(rep, &coords)?);
    }
    Ok(GradedVec { components })
}

/// Lowest-degree nonzero component.
pub fn leading_term(gv: &GradedVec) -> Result<(i64, Element)> {
    gv.components
        .iter()
        .next()
        .map(|(d, v)| (*d, v.clone()))
        .ok_or(Error::ZeroVector)
}

/// Second-lowest component, when there is one.
pub fn tangent_of_approach(gv: &GradedVec) -> Option<(i64, Element)> {
    gv.components.iter().nth(1).map(|(d, v)| (*d, v.clone()))
}

/// Decompose a Lie element under the adjoint grading: entry `(a, b)` has
/// degree `w_a - w_b`.
pub fn grade_lie(w: &OnePS, g: &RatMatrix) -> Result<GradedLie> {
    let n = w.n();
    if g.rows() != n || g.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} Lie element for gl_{n}",
            g.rows(),
            g.cols()
        )));
    }
    let mut components: BTreeMap<i64, RatMatrix> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let c = g.at(a, b);
            if c.is_zero() {
                continue;
            }
            components
                .entry(w.weights[a] - w.weights[b])
                .or_insert_with(|| RatMatrix::zero(n, n))
                .set(a, b, c.clone());
        }
    }
    Ok(GradedLie { components })
}

pub fn lie_leading(w: &OnePS, g: &RatMatrix) -> Result<(i64, RatMatrix)> {
    grade_lie(w, g)?
        .components
        .into_iter()
        .next()
        .ok_or(Error::ZeroVector)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parabolic {
    /// Nonnegative adjoint degrees.
    pub p: Subspace,
    /// Degree zero (the Levi).
    pub l: Subspace,
    /// Strictly positive degrees (the unipotent radical).
    pub u: Subspace,
}

/// The parabolic subalgebra of a 1-PS, with its Levi and unipotent radical,
/// as subspaces of `gl_n ≅ ℚ^{n²}` in row-major unit-matrix coordinates.
pub fn parabolic(w: &OnePS) -> Parabolic {
    let n = w.n();
    let pick = |cond: &dyn Fn(i64) -> bool| -> Subspace {
        let mut rows = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if cond(w.weights[a] - w.weights[b]) {
                    let mut v = vec![rat(0); n * n];
                    v[a * n + b] = rat(1);
                    rows.push(v);
                }
            }
        }
        Subspace::from_rows(n * n, rows).expect("unit vectors")
    };
    Parabolic {
        p: pick(&|d| d >= 0),
        l: pick(&|d| d == 0),
        u: pick(&|d| d > 0),
    }
}

/// The toral element `ℓ̄ = diag(w) - (d/c)·I` acting on the weight-`i`
/// component of `V` by `i - d`; `c` is the central character weight and must
/// be nonzero.
pub fn ell_bar(w: &OnePS, leading_degree: i64, central_character: i64) -> Result<RatMatrix> {
    if central_character == 0 {
        return Err(Error::ZeroCharacter);
    }
    let shift = ratio(leading_degree, central_character);
    Ok(RatMatrix::from_fn(w.n(), w.n(), |r, c| {
        if r == c {
            rat(w.weights[r]) - &shift
        } else {
            rat(0)
        }
    }))
}
