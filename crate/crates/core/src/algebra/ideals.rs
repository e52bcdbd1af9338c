use super::{AlgebraTable, Identity};
use crate::error::{Error, Result};
use crate::exactmath::{all_subspaces, vector, Subspace};

/// `span{a b : a in A, b in B}`.
pub fn product_space(t: &AlgebraTable, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim() != t.dim() || b.ambient_dim() != t.dim() {
        return Err(Error::AmbientMismatch(a.ambient_dim(), t.dim()));
    }
    let mut vecs = Vec::with_capacity(a.dim() * b.dim());
    for x in a.basis() {
        for y in b.basis() {
            vecs.push(t.mul_raw(x, y));
        }
    }
    Subspace::span(t.field(), t.dim(), &vecs)
}

/// `S J ⊆ S` and `J S ⊆ S`.
pub fn is_ideal(t: &AlgebraTable, s: &Subspace) -> Result<bool> {
    if s.ambient_dim() != t.dim() {
        return Err(Error::AmbientMismatch(s.ambient_dim(), t.dim()));
    }
    for w in s.basis() {
        for j in 0..t.dim() {
            let b = vector::unit_vec(t.field(), t.dim(), j);
            if !s.contains_vector(&t.mul_raw(w, &b))? {
                return Ok(false);
            }
            if !t.is_commutative() && !s.contains_vector(&t.mul_raw(&b, w))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest ideal containing `s`: `W <- W + WJ + JW` until stable.
pub fn ideal_closure(t: &AlgebraTable, s: &Subspace) -> Result<Subspace> {
    if s.ambient_dim() != t.dim() {
        return Err(Error::AmbientMismatch(s.ambient_dim(), t.dim()));
    }
    let full = Subspace::full(t.field(), t.dim());
    let mut w = s.clone();
    loop {
        let mut next = w.sum(&product_space(t, &w, &full)?)?;
        if !t.is_commutative() {
            next = next.sum(&product_space(t, &full, &w)?)?;
        }
        if next.dim() == w.dim() {
            return Ok(w);
        }
        w = next;
    }
}

/// `(I I) I`. In Jordan and associative algebras the cube of an ideal is an
/// ideal again; that is re-checked here.
pub fn ideal_cube(t: &AlgebraTable, ideal: &Subspace) -> Result<Subspace> {
    if !is_ideal(t, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let square = product_space(t, ideal, ideal)?;
    let cube = product_space(t, &square, ideal)?;
    let structured = t.check_identity(Identity::Jordan).unwrap_or(false)
        || t.check_identity(Identity::Associative).unwrap_or(false);
    if structured && !is_ideal(t, &cube)? {
        return Err(Error::InvariantViolation("cube of an ideal is not an ideal".into()));
    }
    Ok(cube)
}

/// Every ideal of a table over GF(p), by testing every subspace.
pub fn brute_force_ideals(t: &AlgebraTable) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for s in all_subspaces(t.field(), t.dim())? {
        if is_ideal(t, &s)? {
            out.push(s);
        }
    }
    Ok(out)
}
