use super::GammaParams;
use crate::algebra::{AlgebraTable, LinearMap};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Matrix, Scalar};

/// `n x n` matrices over a unital (possibly nonassociative) coefficient
/// algebra `A`. Basis `a_k E_ij` sits at index `(i*n + j)*dim A + k`.
pub fn matrix_algebra(a: &AlgebraTable, n: usize) -> Result<AlgebraTable> {
    let unit_a = a.require_unit()?;
    if n == 0 {
        return Err(Error::BadParams("matrix size must be positive".into()));
    }
    let m = a.dim();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * m + k;
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for (k1, k2, k3, c) in a.constants() {
                    constants.push((idx(i, j, k1), idx(j, l, k2), idx(i, l, k3), c.clone()));
                }
            }
        }
    }
    let mut unit = vector::zero_vec(a.field(), n * n * m);
    for i in 0..n {
        for (k, c) in unit_a.iter().enumerate() {
            unit[idx(i, i, k)] = c.clone();
        }
    }
    let mut labels = Vec::with_capacity(n * n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                labels.push(if m == 1 {
                    format!("E{}{}", i + 1, j + 1)
                } else {
                    format!("{}_E{}{}", a.label(k), i + 1, j + 1)
                });
            }
        }
    }
    AlgebraTable::from_constants(a.field(), n * n * m, constants)?.with_unit(unit)?.with_labels(labels)
}

/// `X ↦ (c_ij conj(X_ji))`, the coefficientwise-conjugated transpose scaled
/// entrywise by `c_ij`.
fn scaled_conjugate_transpose<F>(dim: usize, n: usize, conj: &LinearMap, coeff: F) -> Result<LinearMap>
where
    F: Fn(usize, usize) -> Scalar,
{
    let m = conj.dim();
    if dim != n * n * m {
        return Err(Error::DimensionMismatch { expected: n * n * m, found: dim });
    }
    let f = conj.field();
    let mut images = Vec::with_capacity(dim);
    for r in 0..n {
        for s in 0..n {
            for k in 0..m {
                // e_k at (r, s) lands at (s, r)
                let mut v = vector::zero_vec(f, dim);
                let c = coeff(s, r);
                for (kk, x) in conj.image_of_basis(k).into_iter().enumerate() {
                    v[(s * n + r) * m + kk] = &c * &x;
                }
                images.push(v);
            }
        }
    }
    LinearMap::from_images(f, &images)
}

/// Transpose on `M_n(F)` (or coefficientwise identity times transpose on
/// `M_n(A)`).
pub fn transpose_involution(mat: &AlgebraTable, n: usize) -> Result<LinearMap> {
    let m = mat.dim() / (n * n).max(1);
    let f = mat.field();
    scaled_conjugate_transpose(mat.dim(), n, &LinearMap::identity(f, m), |_, _| f.one())
}

/// `X^{*γ} = γ⁻¹ X̄ᵀ γ` on `C₃`, i.e. `(X*)_ij = γ_i⁻¹ conj(X_ji) γ_j`.
pub fn gamma_involution(c3: &AlgebraTable, gamma: &GammaParams, conj: &LinearMap) -> Result<LinearMap> {
    let g = gamma.gamma();
    let sigma = scaled_conjugate_transpose(c3.dim(), 3, conj, |i, j| {
        &g[i].inv().expect("gamma entries nonzero") * &g[j]
    })?;
    if !super::involution_check(c3, &sigma)? {
        return Err(Error::NotAnInvolution);
    }
    Ok(sigma)
}

/// `X ↦ s⁻¹ Xᵀ s` on `M_{2k}(F)`, `s = [[0, I], [−I, 0]]`.
pub fn symplectic_involution(mat: &AlgebraTable) -> Result<LinearMap> {
    let f = mat.field();
    let n = (1..=mat.dim()).find(|n| n * n == mat.dim()).filter(|n| n % 2 == 0).ok_or_else(|| {
        Error::BadParams(format!("dimension {} is not that of M_n(F) with n even", mat.dim()))
    })?;
    let h = n / 2;
    let mut s = Matrix::zeros(f, n, n);
    for i in 0..h {
        s.set(i, h + i, f.one());
        s.set(h + i, i, -f.one());
    }
    let s_inv = s.inverse().expect("standard skew form is invertible");
    let mut images = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e_t = Matrix::zeros(f, n, n);
            e_t.set(j, i, f.one());
            let img = s_inv.mul(&e_t)?.mul(&s)?;
            images.push((0..n).flat_map(|r| img.row(r).to_vec()).collect());
        }
    }
    let sigma = LinearMap::from_images(f, &images)?;
    if !super::involution_check(mat, &sigma)? {
        return Err(Error::NotAnInvolution);
    }
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Identity;
    use crate::constructions::{cayley_dickson, field_algebra, CdParams};
    use crate::exactmath::FieldSpec;

    #[test]
    fn m2_over_field() {
        let f = FieldSpec::prime(3).unwrap();
        let m2 = matrix_algebra(&field_algebra(f), 2).unwrap();
        assert_eq!(m2.dim(), 4);
        assert_eq!(m2.constants().count(), 8);
        assert!(m2.check_identity(Identity::Associative).unwrap());
        assert_eq!(m2.unit().unwrap().coords(), &[f.one(), f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn octonion_matrices_and_gamma() {
        let f = FieldSpec::prime(5).unwrap();
        let (c, conj) =
            cayley_dickson(f, &CdParams::new([f.from_i64(4), f.from_i64(4), f.from_i64(4)]).unwrap(), 3).unwrap();
        let c3 = matrix_algebra(&c, 3).unwrap();
        assert_eq!(c3.dim(), 72);
        assert!(!c3.check_identity(Identity::Associative).unwrap());
        for g in [[1, 1, 1], [1, 2, 3]] {
            let gamma = GammaParams::new(g.map(|x| f.from_i64(x))).unwrap();
            let sigma = gamma_involution(&c3, &gamma, &conj).unwrap();
            assert!(sigma.compose(&sigma).unwrap() == LinearMap::identity(f, 72));
            let fixed = sigma.matrix().sub(&Matrix::identity(f, 72)).unwrap().nullspace();
            assert_eq!(fixed.dim(), 27);
        }
    }
}
