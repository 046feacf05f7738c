//! Stabilizer Lie algebras, orbit tangent spaces, the normal-slice
//! stabilizer, and leading-term algebras. The containments
//! `K̂ ⊆ H_ȳₑ ⊆ H` and `dim K̂ = dim K` are unconditional theorems, so
//! `full_report` raises `InvariantViolation` if a computation ever
//! contradicts them.

use crate::error::{Error, Result};
use crate::grading::{
    coordinate_weights, grade_vec, leading_term, tangent_of_approach, GradedVec, OnePS,
};
use crate::matrix::RatMatrix;
use crate::rational::{rat, Rational};
use crate::rep::{apply_lie, unit_matrix, vectorize, Element, Representation};
use crate::subspace::{nullspace, Subspace};
use num::Zero;

/// `{g ∈ gl_n : g·v = 0}` as a canonical subspace of ℚ^{n²} in row-major
/// unit-matrix coordinates.
pub fn stabilizer_algebra(rep: &Representation, v: &Element) -> Result<Subspace> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = rep.group_dim();
    let dim = rep.ambient_dim();
    let mut m = RatMatrix::zero(dim, n * n);
    for a in 0..n {
        for b in 0..n {
            let col = vectorize(rep, &apply_lie(rep, &unit_matrix(n, a, b), v)?)?;
            for (r, x) in col.into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, a * n + b, x);
                }
            }
        }
    }
    Ok(nullspace(&m))
}

/// Tangent space of the orbit at `v`: the span of `E_ab · v`.
pub fn orbit_tangent(rep: &Representation, v: &Element) -> Result<Subspace> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = rep.group_dim();
    let mut rows = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            rows.push(vectorize(rep, &apply_lie(rep, &unit_matrix(n, a, b), v)?)?);
        }
    }
    Subspace::from_rows(rep.ambient_dim(), rows)
}

/// `{h ∈ G_z : h·y_e ∈ T_z O(z)}` — the stabilizer of the image of the
/// tangent of approach in the normal slice `V / T_z O(z)`, computed as a
/// single combined nullspace.
pub fn normal_slice_stabilizer(
    rep: &Representation,
    z: &Element,
    y_e: &Element,
) -> Result<Subspace> {
    if z.is_zero() {
        return Err(Error::ZeroVector);
    }
    let tangent = orbit_tangent(rep, z)?;
    let n = rep.group_dim();
    let dim = rep.ambient_dim();
    let mut m = RatMatrix::zero(2 * dim, n * n);
    for a in 0..n {
        for b in 0..n {
            let e = unit_matrix(n, a, b);
            let top = vectorize(rep, &apply_lie(rep, &e, z)?)?;
            let bottom = tangent.reduce_mod(&vectorize(rep, &apply_lie(rep, &e, y_e)?)?)?;
            for (r, x) in top.into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, a * n + b, x);
                }
            }
            for (r, x) in bottom.into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(dim + r, a * n + b, x);
                }
            }
        }
    }
    Ok(nullspace(&m))
}

/// Span of the leading terms of all elements of a subspace, for an ambient
/// space graded by `coord_weights`. Implements the filtration construction:
/// intersect with "degree ≥ i", pick complements, keep their degree-`i`
/// components. The result always has the same dimension as the input.
pub fn leading_term_space(s: &Subspace, coord_weights: &[i64]) -> Result<Subspace> {
    let ambient = s.ambient();
    if coord_weights.len() != ambient {
        return Err(Error::AmbientMismatch(coord_weights.len(), ambient));
    }
    let k = s.dim();
    if k == 0 {
        return Ok(Subspace::zero(ambient));
    }
    let basis = s.basis();
    let mut degrees: Vec<i64> = coord_weights.to_vec();
    degrees.sort_unstable();
    degrees.dedup();

    // coefficient vectors c with (c·B) supported in degrees >= w
    let filtration_at = |w: i64| -> Subspace {
        let low: Vec<usize> = (0..ambient).filter(|&j| coord_weights[j] < w).collect();
        if low.is_empty() {
            return Subspace::full(k);
        }
        let m = RatMatrix::from_fn(low.len(), k, |r, c| basis.at(c, low[r]).clone());
        nullspace(&m)
    };

    let mut leads: Vec<Vec<Rational>> = Vec::new();
    for (idx, &w) in degrees.iter().enumerate() {
        let cur = filtration_at(w);
        let next = if idx + 1 < degrees.len() {
            filtration_at(degrees[idx + 1])
        } else {
            Subspace::zero(k)
        };
        if cur.dim() == next.dim() {
            continue;
        }
        // complement of `next` inside `cur`: basis rows of `cur` that grow
        // the span of `next`
        let mut acc = next.clone();
        for row in cur.basis_rows() {
            if acc.contains(&row)? {
                continue;
            }
            let mut rows = acc.basis_rows();
            rows.push(row.clone());
            acc = Subspace::from_rows(k, rows)?;
            // the element c·B has leading degree exactly w; keep that part
            let mut x = vec![rat(0); ambient];
            for (i, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..ambient {
                    if coord_weights[j] == w {
                        x[j] += c * basis.at(i, j);
                    }
                }
            }
            leads.push(x);
        }
    }
    let out = Subspace::from_rows(ambient, leads)?;
    if out.dim() != k {
        return Err(Error::InvariantViolation(format!(
            "leading-term space dimension {} != input dimension {k}",
            out.dim()
        )));
    }
    Ok(out)
}

/// Leading-term algebra of a subspace of `gl_n` under the adjoint grading of
/// a 1-PS.
pub fn leading_term_algebra(l: &Subspace, w: &OnePS) -> Result<Subspace> {
    let n = w.n();
    if l.ambient() != n * n {
        return Err(Error::AmbientMismatch(l.ambient(), n * n));
    }
    let mut weights = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            weights.push(w.weights[a] - w.weights[b]);
        }
    }
    leading_term_space(l, &weights)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketCheck {
    pub closed: bool,
    /// First pair of basis indices whose bracket escapes the span.
    pub witness: Option<(usize, usize)>,
}

/// Is the subspace of `gl_n` closed under the Lie bracket?
pub fn bracket_closed(l: &Subspace) -> Result<BracketCheck> {
    let ambient = l.ambient();
    let n = (1..=ambient)
        .find(|&k| k * k == ambient)
        .ok_or_else(|| Error::ShapeMismatch(format!("ambient {ambient} is not a square")))?;
    let mats: Vec<RatMatrix> = l
        .basis_rows()
        .into_iter()
        .map(|row| RatMatrix::from_flat(n, n, row).expect("row length n^2"))
        .collect();
    for i in 0..mats.len() {
        for j in (i + 1)..mats.len() {
            let br = mats[i].bracket(&mats[j]);
            if !l.contains(&br.to_vec())? {
                return Ok(BracketCheck {
                    closed: false,
                    witness: Some((i, j)),
                });
            }
        }
    }
    Ok(BracketCheck {
        closed: true,
        witness: None,
    })
}

/// Everything the leading-term analysis attaches to a degeneration
/// `y ⟶ z` along `λ`.
#[derive(Debug, Clone)]
pub struct StabReport {
    pub grading: GradedVec,
    pub leading_degree: i64,
    pub z: Element,
    pub tangent_degree: Option<i64>,
    pub y_e: Option<Element>,
    /// Stabilizer of `y`.
    pub k: Subspace,
    /// Stabilizer of `z`.
    pub h: Subspace,
    /// Normal-slice stabilizer of the tangent of approach.
    pub hye: Subspace,
    /// Leading-term algebra of `k`.
    pub khat: Subspace,
    /// `T_z O(z)`.
    pub tangent: Subspace,
}

impl StabReport {
    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.k.dim(), self.h.dim(), self.hye.dim(), self.khat.dim())
    }
}

/// Compute the full chain for `y` under `w` and assert the containment
/// theorems. When `λ(t)y` has a single component the normal-slice stabilizer
/// defaults to all of `H`.
pub fn full_report(rep: &Representation, y: &Element, w: &OnePS) -> Result<StabReport> {
    if y.is_zero() {
        return Err(Error::ZeroVector);
    }
    let grading = grade_vec(rep, w, y)?;
    let (d, z) = leading_term(&grading)?;
    let tangent_pair = tangent_of_approach(&grading);
    let k = stabilizer_algebra(rep, y)?;
    let h = stabilizer_algebra(rep, &z)?;
    let tangent = orbit_tangent(rep, &z)?;
    let khat = leading_term_algebra(&k, w)?;
    let hye = match &tangent_pair {
        Some((_, y_e)) => normal_slice_stabilizer(rep, &z, y_e)?,
        None => h.clone(),
    };
    if khat.dim() != k.dim() {
        return Err(Error::InvariantViolation(format!(
            "dim K̂ = {} but dim K = {}",
            khat.dim(),
            k.dim()
        )));
    }
    if !khat.is_subspace_of(&hye)? {
        return Err(Error::InvariantViolation("K̂ ⊄ H_ye".into()));
    }
    if !hye.is_subspace_of(&h)? {
        return Err(Error::InvariantViolation("H_ye ⊄ H".into()));
    }
    let check = bracket_closed(&khat)?;
    if !check.closed {
        return Err(Error::InvariantViolation(format!(
            "K̂ not bracket-closed, witness {:?}",
            check.witness
        )));
    }
    Ok(StabReport {
        grading,
        leading_degree: d,
        z,
        tangent_degree: tangent_pair.as_ref().map(|(e, _)| *e),
        y_e: tangent_pair.map(|(_, v)| v),
        k,
        h,
        hye,
        khat,
        tangent,
    })
}

/// Smallest `K`-submodule containing the given vectors: close the span
/// under the action of a basis of `k`.
pub fn module_closure(
    rep: &Representation,
    k: &Subspace,
    generators: &[Element],
) -> Result<Subspace> {
    let n = rep.group_dim();
    if k.ambient() != n * n {
        return Err(Error::AmbientMismatch(k.ambient(), n * n));
    }
    let k_mats: Vec<RatMatrix> = k
        .basis_rows()
        .into_iter()
        .map(|row| RatMatrix::from_flat(n, n, row).expect("row length n^2"))
        .collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in generators {
        rows.push(vectorize(rep, g)?);
    }
    let mut space = Subspace::from_rows(rep.ambient_dim(), rows)?;
    loop {
        let mut grew = false;
        let mut rows = space.basis_rows();
        for row in space.basis_rows() {
            let v = crate::rep::unvectorize(rep, &row)?;
            for km in &k_mats {
                let image = vectorize(rep, &apply_lie(rep, km, &v)?)?;
                if !space.contains(&image)? {
                    rows.push(image);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(space);
        }
        space = Subspace::from_rows(rep.ambient_dim(), rows)?;
    }
}

/// Weights of the ambient coordinates of `rep` under `w` (re-exported here
/// because leading-term computations on `V`-subspaces need them).
pub fn ambient_weights(rep: &Representation, w: &OnePS) -> Result<Vec<i64>> {
    coordinate_weights(rep, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Form;
    use crate::rational::rat;

    fn forms_rep() -> Representation {
        Representation::FormsDerivation { n_vars: 3, degree: 4 }
    }

    fn sphere_quartic() -> Element {
        let q = Form::try_new(
            3,
            2,
            vec![
                (vec![2, 0, 0], rat(1)),
                (vec![0, 2, 0], rat(1)),
                (vec![0, 0, 2], rat(1)),
            ],
        )
        .unwrap();
        Element::Form(q.mul(&q))
    }

    fn degenerate_quartic() -> Element {
        let q = Form::try_new(
            3,
            2,
            vec![(vec![2, 0, 0], rat(1)), (vec![0, 2, 0], rat(1))],
        )
        .unwrap();
        Element::Form(q.mul(&q))
    }

    // gl_3 unit coordinates: index (a,b) -> 3a + b
    fn gl3_vec(entries: &[((usize, usize), i64)]) -> Vec<Rational> {
        let mut v = vec![rat(0); 9];
        for &((a, b), c) in entries {
            v[3 * a + b] = rat(c);
        }
        v
    }

    #[test]
    fn quartic_stabilizer_is_rotation_algebra() {
        let k = stabilizer_algebra(&forms_rep(), &sphere_quartic()).unwrap();
        assert_eq!(k.dim(), 3);
        // antisymmetric pattern: a(E12 - E21) + b(E13 - E31) + c(E23 - E32)
        let expected = Subspace::from_rows(
            9,
            vec![
                gl3_vec(&[((0, 1), 1), ((1, 0), -1)]),
                gl3_vec(&[((0, 2), 1), ((2, 0), -1)]),
                gl3_vec(&[((1, 2), 1), ((2, 1), -1)]),
            ],
        )
        .unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn degenerate_quartic_stabilizer_dim_four() {
        let h = stabilizer_algebra(&forms_rep(), &degenerate_quartic()).unwrap();
        assert_eq!(h.dim(), 4);
        // contains the whole last column
        for col_entry in [(0usize, 2usize), (1, 2), (2, 2)] {
            assert!(h.contains(&gl3_vec(&[(col_entry, 1)])).unwrap());
        }
    }

    #[test]
    fn orbit_tangent_dimension_complement() {
        let rep = forms_rep();
        let v = sphere_quartic();
        let k = stabilizer_algebra(&rep, &v).unwrap();
        let t = orbit_tangent(&rep, &v).unwrap();
        assert_eq!(t.dim(), 9 - k.dim());
        // tangent of the degenerate quartic contains (x^2+y^2)(2bxz+2cyz)
        let g = degenerate_quartic();
        let tg = orbit_tangent(&rep, &g).unwrap();
        let dir = Form::try_new(
            3,
            4,
            vec![(vec![3, 0, 1], rat(2)), (vec![1, 2, 1], rat(2))],
        )
        .unwrap();
        assert!(tg
            .contains(&vectorize(&rep, &Element::Form(dir)).unwrap())
            .unwrap());
    }

    #[test]
    fn popov_orbit_tangent() {
        let rep = Representation::LeftMult { rows: 4, cols: 3 };
        let mut z = RatMatrix::zero(4, 3);
        z.set(0, 0, rat(1));
        let t = orbit_tangent(&rep, &Element::Matrix(z)).unwrap();
        // all matrices [v, 0, 0]
        assert_eq!(t.dim(), 4);
        for a in 0..4 {
            let mut m = RatMatrix::zero(4, 3);
            m.set(a, 0, rat(1));
            assert!(t.contains(&m.to_vec()).unwrap());
        }
    }

    #[test]
    fn quartic_full_report_dims_and_hatk() {
        let w = OnePS::new(vec![0, 0, 1]);
        let report = full_report(&forms_rep(), &sphere_quartic(), &w).unwrap();
        assert_eq!(report.dims(), (3, 4, 3, 3));
        // K̂ = span{E13, E23, E12 - E21}
        let expected = Subspace::from_rows(
            9,
            vec![
                gl3_vec(&[((0, 1), 1), ((1, 0), -1)]),
                gl3_vec(&[((0, 2), 1)]),
                gl3_vec(&[((1, 2), 1)]),
            ],
        )
        .unwrap();
        assert_eq!(report.khat, expected);
        // the full normal-slice stabilizer coincides with K̂ here
        assert_eq!(report.hye, expected);
    }

    #[test]
    fn popov_full_report_dims() {
        let rep = Representation::LeftMult { rows: 4, cols: 3 };
        let mut y = RatMatrix::zero(4, 3);
        y.set(0, 0, rat(1));
        y.set(1, 1, rat(1));
        y.set(2, 2, rat(1));
        let w = OnePS::new(vec![0, 1, 2, 2]);
        let report = full_report(&rep, &Element::Matrix(y), &w).unwrap();
        assert_eq!(report.dims(), (4, 12, 8, 4));
        // K = K̂ = the last column of gl_4
        assert_eq!(report.k, report.khat);
    }

    #[test]
    fn homogeneous_vector_has_no_tangent() {
        let rep = forms_rep();
        let w = OnePS::new(vec![0, 0, 0]);
        let report = full_report(&rep, &sphere_quartic(), &w).unwrap();
        assert!(report.y_e.is_none());
        assert_eq!(report.hye, report.h);
    }

    #[test]
    fn bracket_closed_examples() {
        // span{E12, E21} in gl_2 is not closed: [E12, E21] = diag(1, -1)
        let s = Subspace::from_rows(
            4,
            vec![
                vec![rat(0), rat(1), rat(0), rat(0)],
                vec![rat(0), rat(0), rat(1), rat(0)],
            ],
        )
        .unwrap();
        let check = bracket_closed(&s).unwrap();
        assert!(!check.closed);
        assert_eq!(check.witness, Some((0, 1)));
        assert!(bracket_closed(&Subspace::full(9)).unwrap().closed);
    }

    #[test]
    fn leading_term_space_preserves_dim_randomized() {
        use crate::sample::{rand_int, rand_subspace, rng_from_seed};
        let mut rng = rng_from_seed(41);
        for _ in 0..100 {
            let s = rand_subspace(&mut rng, 6);
            let weights: Vec<i64> = (0..6).map(|_| rand_int(&mut rng, 2)).collect();
            let hat = leading_term_space(&s, &weights).unwrap();
            assert_eq!(hat.dim(), s.dim());
        }
    }

    #[test]
    fn stabilizer_leading_containment() {
        // leading terms of the stabilizer annihilate the leading term
        let rep = forms_rep();
        let w = OnePS::new(vec![0, 0, 1]);
        let report = full_report(&rep, &sphere_quartic(), &w).unwrap();
        for row in report.khat.basis_rows() {
            let g = RatMatrix::from_flat(3, 3, row).unwrap();
            let out = apply_lie(&rep, &g, &report.z).unwrap();
            assert!(out.is_zero());
        }
    }

    #[test]
    fn module_closure_and_leading_dims() {
        // K-module generated by the leading quartic inside Sym^4
        let rep = forms_rep();
        let k = stabilizer_algebra(&rep, &sphere_quartic()).unwrap();
        let n = module_closure(&rep, &k, &[sphere_quartic()]).unwrap();
        assert!(n.dim() >= 1);
        let w = OnePS::new(vec![0, 0, 1]);
        let weights = ambient_weights(&rep, &w).unwrap();
        let nhat = leading_term_space(&n, &weights).unwrap();
        assert_eq!(nhat.dim(), n.dim());
        // and N̂ is a K̂-module
        let khat = leading_term_algebra(&k, &w).unwrap();
        for krow in khat.basis_rows() {
            let g = RatMatrix::from_flat(3, 3, krow).unwrap();
            for nrow in nhat.basis_rows() {
                let v = crate::rep::unvectorize(&rep, &nrow).unwrap();
                let image = vectorize(&rep, &apply_lie(&rep, &g, &v).unwrap()).unwrap();
                assert!(nhat.contains(&image).unwrap());
            }
        }
    }
}
