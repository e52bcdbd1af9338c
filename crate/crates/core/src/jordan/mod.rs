//! Jordan element operations: inverses, powers, idempotents, Peirce
//! decompositions and the cubic norm of Albert-type algebras.

use crate::algebra::{AlgebraTable, Element};
use crate::constructions::{cd_norm, cd_trace, AlbertData};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Matrix, Scalar, Subspace};

fn require_jordan_shape(t: &AlgebraTable, x: &[Scalar]) -> Result<Element> {
    t.check_coords(x)?;
    let unit = t.require_unit()?;
    if !t.is_commutative() {
        return Err(Error::NotCommutative);
    }
    Ok(unit)
}

/// Some `y` with `x y = 1` and `x² y = x`, if one exists.
pub fn jordan_inverse(t: &AlgebraTable, x: &[Scalar]) -> Result<Option<Element>> {
    let order: Vec<usize> = (0..t.dim()).collect();
    jordan_inverse_with_order(t, x, &order)
}

/// As [`jordan_inverse`], eliminating the unknowns in the given order. The
/// inverse is unique when it exists, so every order must agree.
pub fn jordan_inverse_with_order(t: &AlgebraTable, x: &[Scalar], order: &[usize]) -> Result<Option<Element>> {
    let unit = require_jordan_shape(t, x)?;
    let n = t.dim();
    if order.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: order.len() });
    }
    let x2 = t.mul_raw(x, x);
    let stacked = t.left_mult(x)?.vstack(&t.left_mult(&x2)?)?;
    // permute columns: new column c is old unknown order[c]
    let mut permuted = Matrix::zeros(t.field(), 2 * n, n);
    for r in 0..2 * n {
        for (c, &o) in order.iter().enumerate() {
            permuted.set(r, c, stacked.get(r, o).clone());
        }
    }
    let mut rhs = unit.coords().to_vec();
    rhs.extend_from_slice(x);
    let Some(z) = permuted.solve(&rhs)? else {
        return Ok(None);
    };
    let mut y = vector::zero_vec(t.field(), n);
    for (c, &o) in order.iter().enumerate() {
        y[o] = z[c].clone();
    }
    if t.mul_raw(x, &y) != unit.coords() || t.mul_raw(&x2, &y) != x {
        return Err(Error::InvariantViolation("Jordan inverse fails re-verification".into()));
    }
    Ok(Some(Element::new(y)))
}

/// `x⁰ = 1`, `x^k = x^(k-1) x`.
pub fn power(t: &AlgebraTable, x: &[Scalar], k: u32) -> Result<Element> {
    t.check_coords(x)?;
    let mut acc = t.require_unit()?.into_coords();
    for _ in 0..k {
        acc = t.mul_raw(&acc, x);
    }
    Ok(Element::new(acc))
}

pub fn is_idempotent(t: &AlgebraTable, e: &[Scalar]) -> Result<bool> {
    t.check_coords(e)?;
    Ok(t.mul_raw(e, e) == e)
}

/// Named components of a Peirce decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceDecomposition {
    pub idempotents: Vec<Element>,
    pub components: Vec<(String, Subspace)>,
}

impl PeirceDecomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|(_, s)| s.dim()).collect()
    }

    pub fn component(&self, name: &str) -> Option<&Subspace> {
        self.components.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

fn eigenspace(l: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    let shifted = l.sub(&Matrix::identity(l.field(), l.rows()).scale(lambda))?;
    Ok(shifted.nullspace())
}

fn check_spanning(n: usize, parts: &[&Subspace]) -> Result<()> {
    let total: usize = parts.iter().map(|s| s.dim()).sum();
    let mut sum = Subspace::zero(parts[0].field(), n);
    for p in parts {
        sum = sum.sum(p)?;
    }
    if total != n || !sum.is_full() {
        return Err(Error::IncompletePeirce);
    }
    Ok(())
}

/// Eigenspaces of `L_e` for `1`, `½`, `0`, labelled `"1"`, `"1/2"`, `"0"`.
pub fn peirce_single(t: &AlgebraTable, e: &[Scalar]) -> Result<PeirceDecomposition> {
    if !is_idempotent(t, e)? {
        return Err(Error::NotIdempotent);
    }
    let f = t.field();
    let l = t.left_mult(e)?;
    let one = eigenspace(&l, &f.one())?;
    let half = eigenspace(&l, &f.from_ratio(1, 2)?)?;
    let zero = eigenspace(&l, &f.zero())?;
    check_spanning(t.dim(), &[&one, &half, &zero])?;
    Ok(PeirceDecomposition {
        idempotents: vec![Element::new(e.to_vec())],
        components: vec![("1".into(), one), ("1/2".into(), half), ("0".into(), zero)],
    })
}

/// `J_ii` and `J_ij` relative to the three diagonal idempotents of an
/// Albert-type table, as joint eigenspaces; checked against the components
/// recorded at construction.
pub fn peirce_frame(t: &AlgebraTable) -> Result<PeirceDecomposition> {
    let data = t.albert().ok_or(Error::NotAlbertType)?;
    let singles: Vec<PeirceDecomposition> =
        data.idempotents.iter().map(|e| peirce_single(t, e)).collect::<Result<_>>()?;
    let mut components = Vec::new();
    for i in 0..3 {
        components.push((format!("J{}{}", i + 1, i + 1), singles[i].component("1").expect("named").clone()));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let a = singles[i].component("1/2").expect("named");
        let b = singles[j].component("1/2").expect("named");
        components.push((format!("J{}{}", i + 1, j + 1), a.intersect(b)?));
    }
    let parts: Vec<&Subspace> = components.iter().map(|(_, s)| s).collect();
    check_spanning(t.dim(), &parts)?;
    if components != data.peirce {
        return Err(Error::InvariantViolation("computed Peirce components differ from construction labels".into()));
    }
    Ok(PeirceDecomposition {
        idempotents: data.idempotents.iter().cloned().map(Element::new).collect(),
        components,
    })
}

/// `α₁, α₂, α₃` and the octonions `c = X₁₂`, `a = X₂₃`, `b = X₃₁` of an
/// Albert-type element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlbertCoords {
    pub alpha: [Scalar; 3],
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
    pub c: Vec<Scalar>,
}

pub fn albert_coords(t: &AlgebraTable, x: &[Scalar]) -> Result<AlbertCoords> {
    let data = t.albert().ok_or(Error::NotAlbertType)?;
    t.check_coords(x)?;
    let m = data.matrix_of(x);
    let slice = |i: usize, j: usize| m[AlbertData::c3_index(i, j, 0)..AlbertData::c3_index(i, j, 8)].to_vec();
    let alpha = [0, 1, 2].map(|i| m[AlbertData::c3_index(i, i, 0)].clone());
    Ok(AlbertCoords { alpha, c: slice(0, 1), a: slice(1, 2), b: slice(2, 0) })
}

/// `n(A) = α₁α₂α₃ − α₁γ₃⁻¹γ₂ n(a) − α₂γ₁⁻¹γ₃ n(b) − α₃γ₂⁻¹γ₁ n(c) + t((ca)b)`.
pub fn albert_norm(t: &AlgebraTable, x: &[Scalar]) -> Result<Scalar> {
    let data = t.albert().ok_or(Error::NotAlbertType)?;
    let AlbertCoords { alpha, a, b, c } = albert_coords(t, x)?;
    let g = data.gamma.gamma();
    let inv = |s: &Scalar| s.inv().expect("gamma entries nonzero");
    let (o, conj) = (&data.octonions, &data.conj);
    let mut n = &(&alpha[0] * &alpha[1]) * &alpha[2];
    n = n - &(&(&alpha[0] * &inv(&g[2])) * &g[1]) * &cd_norm(o, conj, &a)?;
    n = n - &(&(&alpha[1] * &inv(&g[0])) * &g[2]) * &cd_norm(o, conj, &b)?;
    n = n - &(&(&alpha[2] * &inv(&g[1])) * &g[0]) * &cd_norm(o, conj, &c)?;
    n += &cd_trace(o, conj, &o.mul_raw(&o.mul_raw(&c, &a), &b))?;
    Ok(n)
}

/// `N(α + v) = α² − f(v, v)`, cross-checked against the linear-system
/// inverse.
pub fn spin_norm(t: &AlgebraTable, x: &[Scalar]) -> Result<Scalar> {
    let g = t.spin_form().ok_or(Error::NotSpinFactor)?;
    t.check_coords(x)?;
    let n = &x[0] * &x[0] - vector::bilinear(g, &x[1..], &x[1..]);
    if n.is_zero() == jordan_inverse(t, x)?.is_some() {
        return Err(Error::InvariantViolation(format!("spin norm {n} disagrees with the inverse solver")));
    }
    Ok(n)
}
