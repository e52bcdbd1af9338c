//! Factories for the Jordan-algebra families: plus algebras, hermitian
//! subalgebras, spin factors, Cayley–Dickson algebras, coefficient matrix
//! algebras and the 27-dimensional Albert-type algebras.

mod albert;
mod cayley_dickson;
mod matrices;

pub use albert::{albert_type, AlbertData, GammaParams};
pub use cayley_dickson::{cayley_dickson, cd_norm, cd_trace, CdParams};
pub use matrices::{gamma_involution, matrix_algebra, symplectic_involution, transpose_involution};

use crate::algebra::{AlgebraTable, Family, LinearMap};
use crate::error::{Error, Result};
use crate::exactmath::{vector, FieldSpec, Matrix, Scalar, Subspace};

/// `F` as a one-dimensional algebra.
pub fn field_algebra(field: FieldSpec) -> AlgebraTable {
    AlgebraTable::from_constants(field, 1, [(0, 0, 0, field.one())])
        .and_then(|t| t.with_unit(vec![field.one()]))
        .and_then(|t| t.with_labels(vec!["1".into()]))
        .expect("one-dimensional field table")
}

/// `A⁽⁺⁾`: same space, product `½(ab + ba)`.
pub fn plus_algebra(a: &AlgebraTable) -> AlgebraTable {
    let f = a.field();
    let half = f.from_ratio(1, 2).expect("characteristic is not 2");
    let n = a.dim();
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut v = vector::zero_vec(f, n);
            for (k, c) in a.product(i, j).iter().chain(a.product(j, i)) {
                v[*k] += c;
            }
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    constants.push((i, j, k, &c * &half));
                }
            }
        }
    }
    let mut t = AlgebraTable::from_constants(f, n, constants).expect("indices in range");
    if let Some(l) = a.labels() {
        t = t.with_labels(l.to_vec()).expect("same dimension");
    }
    if let Some(u) = a.unit() {
        t = t.with_unit(u.into_coords()).expect("unit of A is a unit of A+");
    }
    t
}

/// `σ² = id` and `σ(xy) = σ(y)σ(x)` on basis pairs.
pub fn involution_check(a: &AlgebraTable, sigma: &LinearMap) -> Result<bool> {
    sigma.check_for(a)?;
    if sigma.compose(sigma)? != LinearMap::identity(a.field(), a.dim()) {
        return Ok(false);
    }
    let images: Vec<Vec<Scalar>> = (0..a.dim()).map(|j| sigma.image_of_basis(j)).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = sigma.apply(&a.mul_raw(&a.basis_element(i), &a.basis_element(j)));
            let rhs = a.mul_raw(&images[j], &images[i]);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `H(A, σ)` with the product of `A⁽⁺⁾`.
#[derive(Clone, Debug)]
pub struct Hermitian {
    pub table: AlgebraTable,
    /// `dim A x dim H`; column `j` is basis vector `j` of `H` in `A`.
    pub embedding: Matrix,
    pub fixed: Subspace,
}

pub fn hermitian_subalgebra(a: &AlgebraTable, sigma: &LinearMap) -> Result<Hermitian> {
    if !involution_check(a, sigma)? {
        return Err(Error::NotAnInvolution);
    }
    let f = a.field();
    let n = a.dim();
    let fixed = sigma.matrix().sub(&Matrix::identity(f, n))?.nullspace();
    let basis = fixed.basis().to_vec();
    let half = f.from_ratio(1, 2)?;
    let mut closed = true;
    let table = AlgebraTable::from_products(f, basis.len(), |i, j| {
        let mut s = a.mul_raw(&basis[i], &basis[j]);
        let ts = a.mul_raw(&basis[j], &basis[i]);
        vector::axpy(&mut s, &f.one(), &ts);
        let s = vector::scale_vec(&half, &s);
        fixed.coordinates(&s).unwrap_or_else(|| {
            closed = false;
            vector::zero_vec(f, basis.len())
        })
    })?;
    if !closed {
        return Err(Error::NotClosed);
    }
    let mut table = table;
    if let Some(u) = a.unit() {
        if let Some(c) = fixed.coordinates(&u) {
            table = table.with_unit(c)?;
        }
    }
    let embedding = Matrix::from_columns(f, n, &basis)?;
    Ok(Hermitian { table, embedding, fixed })
}

/// `J(V, f) = F ⊕ V` with `(α + v)(β + u) = αβ + f(v,u) + αu + βv`, basis
/// `(1, v₁, …, vₙ)`.
pub fn spin_factor(g: &Matrix) -> Result<AlgebraTable> {
    if !g.is_square() || !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    if n == 0 {
        return Err(Error::BadParams("spin factor needs dim V >= 1".into()));
    }
    let f = g.field();
    let mut constants = vec![(0, 0, 0, f.one())];
    for i in 1..=n {
        constants.push((0, i, i, f.one()));
        constants.push((i, 0, i, f.one()));
        for j in 1..=n {
            let c = g.get(i - 1, j - 1);
            if !c.is_zero() {
                constants.push((i, j, 0, c.clone()));
            }
        }
    }
    let labels = std::iter::once("1".to_string()).chain((1..=n).map(|i| format!("v{i}"))).collect();
    Ok(AlgebraTable::from_constants(f, n + 1, constants)?
        .with_unit(vector::unit_vec(f, n + 1, 0))?
        .with_labels(labels)?
        .with_family(Family::Spin { form: g.clone() }))
}
