//! Derivation algebras and derivations with invertible values: membership,
//! the Leibniz nullspace, DIV verdicts, spin-factor criterion and
//! construction, the Albert witness recipe, kernel-ideal reduction and
//! exhaustive search.

mod div;
mod reduce;
mod spin;

use rayon::prelude::*;

pub use div::{albert_div_witness, has_invertible_values, DivReport, Method, Verdict};
pub use reduce::{div_reduction, extend_derivation, induced_map, largest_ideal_in_kernel, Reduction, Simplicity};
pub use spin::{construct_spin_div, find_isotropic, spin_div_criterion, Isotropy, SpinCriterion};

use crate::algebra::{AlgebraTable, Element, Identity, LinearMap, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::exactmath::{vector, EchelonBuilder, Matrix, Scalar};

/// Search limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Projective points or elements enumerated in one exhaustive check.
    pub enumeration: u64,
    /// Derivations enumerated by [`div_search`].
    pub derivations: u64,
    /// Largest absolute integer coordinate tried in rational searches.
    pub height: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { enumeration: DEFAULT_CAP, derivations: DEFAULT_CAP, height: 50 }
    }
}

/// `D(b_i b_j) = D(b_i) b_j + b_i D(b_j)` on all basis pairs.
pub fn is_derivation(t: &AlgebraTable, d: &LinearMap) -> Result<bool> {
    d.check_for(t)?;
    let images: Vec<Vec<Scalar>> = (0..t.dim()).map(|j| d.image_of_basis(j)).collect();
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            if t.is_commutative() && j < i {
                continue;
            }
            let (bi, bj) = (t.basis_element(i), t.basis_element(j));
            let lhs = d.apply(&t.mul_raw(&bi, &bj));
            let mut rhs = t.mul_raw(&images[i], &bj);
            vector::axpy(&mut rhs, &t.field().one(), &t.mul_raw(&bi, &images[j]));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn require_derivation(t: &AlgebraTable, d: &LinearMap) -> Result<()> {
    if !is_derivation(t, d)? {
        return Err(Error::NotADerivation);
    }
    Ok(())
}

/// A basis of `Der(J)`.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub basis: Vec<LinearMap>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_i D_i`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Result<LinearMap> {
        let first = self.basis.first().ok_or(Error::DimensionMismatch { expected: 1, found: 0 })?;
        let mut m = Matrix::zeros(first.field(), first.dim(), first.dim());
        for (c, d) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&d.matrix().scale(c))?;
            }
        }
        LinearMap::new(m)
    }
}

/// Nullspace of the Leibniz system. Unknown `l*n + k` is the coefficient of
/// `b_k` in `D(b_l)`; each `(i, j, m)` gives
/// `Σ_k c_ij^k D[m,k] − Σ_k c_kj^m D[k,i] − Σ_k c_ik^m D[k,j] = 0`.
pub fn derivation_space(t: &AlgebraTable) -> Result<DerivationSpace> {
    let n = t.dim();
    let f = t.field();
    let unknown = |row: usize, col: usize| col * n + row;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !t.is_commutative() || i <= j)
        .collect();
    // rows for one pair, built in parallel; elimination stays sequential
    let rows: Vec<Vec<Vec<(usize, Scalar)>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut per_m: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
            for (k, c) in t.product(i, j) {
                for (m, row) in per_m.iter_mut().enumerate() {
                    row.push((unknown(m, *k), c.clone()));
                }
            }
            for k in 0..n {
                for (m, c) in t.product(k, j) {
                    per_m[*m].push((unknown(k, i), -c));
                }
                for (m, c) in t.product(i, k) {
                    per_m[*m].push((unknown(k, j), -c));
                }
            }
            per_m.into_iter().map(merge).filter(|r| !r.is_empty()).collect()
        })
        .collect();
    let mut b = EchelonBuilder::new(f, n * n);
    for group in rows {
        for row in group {
            if b.rank() == n * n {
                break;
            }
            b.push(&row);
        }
    }
    let basis = b
        .nullspace_basis()
        .into_iter()
        .map(|v| {
            let cols: Vec<Vec<Scalar>> = v.chunks(n).map(<[Scalar]>::to_vec).collect();
            LinearMap::from_images(f, &cols)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DerivationSpace { basis })
}

/// Sorts by column and sums repeats, dropping zeros.
fn merge(mut row: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `x ↦ a x − x a` on an associative table.
pub fn inner_assoc_derivation(t: &AlgebraTable, a: &[Scalar]) -> Result<LinearMap> {
    if !t.check_identity(Identity::Associative)? {
        return Err(Error::NotAssociative);
    }
    let d = LinearMap::new(t.left_mult(a)?.sub(&t.right_mult(a)?)?)?;
    if !is_derivation(t, &d)? {
        return Err(Error::InvariantViolation("inner map of an associative table fails Leibniz".into()));
    }
    Ok(d)
}

/// Every nonzero DIV derivation of a table over GF(p), by enumerating all
/// coordinate tuples on a basis of `Der(J)`. Ordered by tuple index.
pub fn div_search(t: &AlgebraTable, caps: &Caps) -> Result<Vec<DivReport>> {
    let p = t.field().modulus().ok_or(Error::NotFinite)?;
    t.require_unit()?;
    let space = derivation_space(t)?;
    let k = space.dim();
    let total = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > caps.derivations as u128 {
        return Err(Error::CapExceeded { needed: total, cap: caps.derivations });
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let reports: Vec<Option<DivReport>> = (1..total as u64)
        .into_par_iter()
        .map(|idx| {
            let coeffs = vector::vector_from_index(t.field(), k, idx);
            let d = space.combine(&coeffs)?;
            let r = has_invertible_values(t, &d, caps)?;
            Ok((r.verdict == Verdict::Div).then_some(r))
        })
        .collect::<Result<_>>()?;
    Ok(reports.into_iter().flatten().collect())
}

/// Some `x` with `D(x) = w`.
pub(crate) fn preimage(d: &LinearMap, w: &[Scalar]) -> Result<Element> {
    d.preimage(w)
        .map(Element::new)
        .ok_or_else(|| Error::InvariantViolation("image vector has no preimage".into()))
}
