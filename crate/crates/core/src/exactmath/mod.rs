//! Exact field arithmetic over ℚ and GF(p), dense and sparse exact linear
//! algebra, subspace lattice operations and symmetric-form diagonalization.

mod echelon;
mod form;
mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use echelon::{EchelonBuilder, SparseRow};
pub use form::{diagonalize_symmetric_form, Diagonalization};
pub use matrix::{Matrix, Rref};
pub use scalar::{scalar_arith, ArithOp, FieldSpec, Modulus, Scalar};
pub use subspace::Subspace;

use crate::error::Result;

/// Every subspace of `F_p^n`, enumerated through reduced echelon forms.
///
/// Used as a brute-force oracle for ideal lattices; the count grows like
/// `p^(n^2/4)`, so callers keep `n` small.
pub fn all_subspaces(field: FieldSpec, n: usize) -> Result<Vec<Subspace>> {
    let p = field.modulus().ok_or(crate::error::Error::NotFinite)?;
    let mut out = Vec::new();
    // choose pivot sets as bitmasks
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        // free slots: for row r with pivot c, columns j > c not in pivots
        let mut slots = Vec::new();
        for (r, &c) in pivots.iter().enumerate() {
            for j in c + 1..n {
                if mask & (1 << j) == 0 {
                    slots.push((r, j));
                }
            }
        }
        let total = (p as u128).pow(slots.len() as u32);
        for idx in 0..total {
            let mut rows: Vec<Vec<Scalar>> = pivots.iter().map(|&c| vector::unit_vec(field, n, c)).collect();
            let mut rest = idx;
            for &(r, j) in &slots {
                rows[r][j] = field.residue((rest % p as u128) as u64);
                rest /= p as u128;
            }
            out.push(Subspace::span(field, n, &rows)?);
        }
    }
    Ok(out)
}
