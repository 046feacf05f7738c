//! The three built-in rational representations of `gl_n` / `GL_n`:
//! derivations acting on homogeneous forms, left multiplication on
//! rectangular matrices, and conjugation on square matrices.
//!
//! Conventions, pinned once and used everywhere:
//! - Lie action on forms: the matrix entry `(i, j)` acts as `x_i ∂/∂x_j`.
//! - Group action on forms is the substitution `x ↦ gᵀx`, i.e.
//!   `(g·f)(x) = f(gᵀx)`. For diagonal `g` this scales variable `i` by
//!   `g_ii`. For non-abelian subgroups this composes contravariantly (an
//!   anti-action); stabilizers, diagonal 1-PS orbits and leading terms are
//!   insensitive to the distinction.

use crate::error::{Error, Result};
use crate::forms::{form_from_coords, form_space_dim, form_to_coords, Form};
use crate::matrix::RatMatrix;
use crate::rational::{rat, rat_pow, Rational};
use num::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// `gl(n_vars)` acting on homogeneous forms of the given degree.
    FormsDerivation { n_vars: usize, degree: usize },
    /// `gl(rows)` acting on `rows × cols` matrices by left multiplication.
    LeftMult { rows: usize, cols: usize },
    /// `gl(n)` acting on `n × n` matrices by `v ↦ gv - vg` / `v ↦ gvg⁻¹`.
    Conjugation { n: usize },
}

impl Representation {
    /// Size of the acting matrices.
    pub fn group_dim(&self) -> usize {
        match *self {
            Representation::FormsDerivation { n_vars, .. } => n_vars,
            Representation::LeftMult { rows, .. } => rows,
            Representation::Conjugation { n } => n,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match *self {
            Representation::FormsDerivation { n_vars, degree } => form_space_dim(n_vars, degree),
            Representation::LeftMult { rows, cols } => rows * cols,
            Representation::Conjugation { n } => n * n,
        }
    }

    /// Weight of the central character: `tI` acts on `V` by `t^c`.
    pub fn central_character(&self) -> i64 {
        match *self {
            Representation::FormsDerivation { degree, .. } => degree as i64,
            Representation::LeftMult { .. } => 1,
            Representation::Conjugation { .. } => 0,
        }
    }
}

/// An element of the representation space, shaped to match its kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Form(Form),
    Matrix(RatMatrix),
}

impl Element {
    pub fn is_zero(&self) -> bool {
        match self {
            Element::Form(f) => f.is_zero(),
            Element::Matrix(m) => m.is_zero(),
        }
    }

    pub fn as_form(&self) -> Result<&Form> {
        match self {
            Element::Form(f) => Ok(f),
            _ => Err(Error::ShapeMismatch("expected a form".into())),
        }
    }

    pub fn as_matrix(&self) -> Result<&RatMatrix> {
        match self {
            Element::Matrix(m) => Ok(m),
            _ => Err(Error::ShapeMismatch("expected a matrix".into())),
        }
    }
}

pub fn check_shape(rep: &Representation, v: &Element) -> Result<()> {
    match (rep, v) {
        (Representation::FormsDerivation { n_vars, degree }, Element::Form(f)) => {
            if f.n_vars() != *n_vars || (!f.is_zero() && f.degree() != *degree) {
                return Err(Error::ShapeMismatch(format!(
                    "form in {} vars of degree {} against a ({n_vars}, {degree}) space",
                    f.n_vars(),
                    f.degree()
                )));
            }
            Ok(())
        }
        (Representation::LeftMult { rows, cols }, Element::Matrix(m)) => {
            if m.rows() != *rows || m.cols() != *cols {
                return Err(Error::ShapeMismatch(format!(
                    "{}x{} matrix in a {rows}x{cols} space",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(())
        }
        (Representation::Conjugation { n }, Element::Matrix(m)) => {
            if m.rows() != *n || m.cols() != *n {
                return Err(Error::ShapeMismatch(format!(
                    "{}x{} matrix in a {n}x{n} space",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(())
        }
        _ => Err(Error::ShapeMismatch("element kind does not match the representation".into())),
    }
}

fn check_group_shape(rep: &Representation, g: &RatMatrix) -> Result<()> {
    let n = rep.group_dim();
    if g.rows() != n || g.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} acting matrix for gl_{n}",
            g.rows(),
            g.cols()
        )));
    }
    Ok(())
}

/// Lie-algebra action of `g ∈ gl_n` on `v`.
pub fn apply_lie(rep: &Representation, g: &RatMatrix, v: &Element) -> Result<Element> {
    check_group_shape(rep, g)?;
    check_shape(rep, v)?;
    match (rep, v) {
        (Representation::FormsDerivation { n_vars, degree }, Element::Form(f)) => {
            let mut out = Form::zero(*n_vars, *degree);
            for j in 0..*n_vars {
                let pj = f.partial(j);
                if pj.is_zero() {
                    continue;
                }
                for i in 0..*n_vars {
                    let c = g.at(i, j);
                    if c.is_zero() {
                        continue;
                    }
                    out = out.add(&pj.mul_variable(i).scale(c));
                }
            }
            Ok(Element::Form(out))
        }
        (Representation::LeftMult { .. }, Element::Matrix(m)) => Ok(Element::Matrix(g.mul(m))),
        (Representation::Conjugation { .. }, Element::Matrix(m)) => {
            Ok(Element::Matrix(g.mul(m).sub(&m.mul(g))))
        }
        _ => unreachable!("shape already checked"),
    }
}

/// Group action of an invertible `g` on `v`.
pub fn apply_group(rep: &Representation, g: &RatMatrix, v: &Element) -> Result<Element> {
    check_group_shape(rep, g)?;
    check_shape(rep, v)?;
    match (rep, v) {
        (Representation::FormsDerivation { n_vars, .. }, Element::Form(f)) => {
            if !g.is_invertible() {
                return Err(Error::Singular);
            }
            // x_j ↦ sum_i g[i][j] x_i, i.e. f(gᵀx)
            let images: Vec<Form> = (0..*n_vars)
                .map(|j| {
                    let mut img = Form::zero(*n_vars, 1);
                    for i in 0..*n_vars {
                        if !g.at(i, j).is_zero() {
                            img = img.add(&Form::variable(*n_vars, i).scale(g.at(i, j)));
                        }
                    }
                    img
                })
                .collect();
            Ok(Element::Form(f.substitute_linear(&images)))
        }
        (Representation::LeftMult { .. }, Element::Matrix(m)) => {
            if !g.is_invertible() {
                return Err(Error::Singular);
            }
            Ok(Element::Matrix(g.mul(m)))
        }
        (Representation::Conjugation { .. }, Element::Matrix(m)) => {
            let ginv = g.inverse()?;
            Ok(Element::Matrix(g.mul(m).mul(&ginv)))
        }
        _ => unreachable!("shape already checked"),
    }
}

/// `diag(t^{w_1}, …, t^{w_n})` for a nonzero rational `t`.
pub fn exponentiate_onps(weights: &[i64], t: &Rational) -> Result<RatMatrix> {
    if t.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let entries = weights
        .iter()
        .map(|&w| rat_pow(t, w))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatMatrix::diagonal(entries))
}

/// Coordinates of `v` in the canonical basis of the representation space:
/// lex-ordered monomials for forms, row-major entries for matrix kinds.
pub fn vectorize(rep: &Representation, v: &Element) -> Result<Vec<Rational>> {
    check_shape(rep, v)?;
    Ok(match v {
        Element::Form(f) => form_to_coords(f),
        Element::Matrix(m) => m.to_vec(),
    })
}

pub fn unvectorize(rep: &Representation, coords: &[Rational]) -> Result<Element> {
    if coords.len() != rep.ambient_dim() {
        return Err(Error::AmbientMismatch(coords.len(), rep.ambient_dim()));
    }
    Ok(match *rep {
        Representation::FormsDerivation { n_vars, degree } => {
            Element::Form(form_from_coords(n_vars, degree, coords))
        }
        Representation::LeftMult { rows, cols } => {
            Element::Matrix(RatMatrix::from_flat(rows, cols, coords.to_vec())?)
        }
        Representation::Conjugation { n } => {
            Element::Matrix(RatMatrix::from_flat(n, n, coords.to_vec())?)
        }
    })
}

/// Matrix of `v ↦ g·v` on the ambient coordinates (an `ambient × ambient`
/// matrix), for an invertible `g`.
pub fn group_action_matrix(rep: &Representation, g: &RatMatrix) -> Result<RatMatrix> {
    let dim = rep.ambient_dim();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut coords = vec![rat(0); dim];
        coords[j] = rat(1);
        let basis_elem = unvectorize(rep, &coords)?;
        let image = apply_group(rep, g, &basis_elem)?;
        cols.push(vectorize(rep, &image)?);
    }
    Ok(RatMatrix::from_fn(dim, dim, |r, c| cols[c][r].clone()))
}

/// The unit matrix `E_ab` of `gl_n`.
pub fn unit_matrix(n: usize, a: usize, b: usize) -> RatMatrix {
    let mut m = RatMatrix::zero(n, n);
    m.set(a, b, rat(1));
    m
}
