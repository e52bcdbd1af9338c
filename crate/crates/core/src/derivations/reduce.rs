use rayon::prelude::*;

use super::{has_invertible_values, is_derivation, require_derivation, Caps, Verdict};
use crate::algebra::{ideal_closure, is_ideal, quotient_algebra, AlgebraTable, LinearMap, Quotient, SplitNull};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Matrix, Scalar, Subspace};

/// `{w ∈ W : R w ∈ W}` for each map `R`, intersected with `W`.
fn stable_part(w: &Subspace, maps: &[Matrix]) -> Result<Subspace> {
    let ann = w.annihilator();
    let n = w.ambient_dim();
    let mut rows = ann.clone();
    for r in maps {
        for a in &ann {
            // row a·R
            rows.push((0..n).map(|c| vector::dot(a, &r.column(c))).collect());
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::full(w.field(), n));
    }
    Ok(Matrix::from_rows(w.field(), rows)?.nullspace())
}

/// The sum of all ideals inside `ker D`: shrink `W = ker D` to
/// `{w ∈ W : w J ⊆ W, J w ⊆ W}` until it stops moving.
pub fn largest_ideal_in_kernel(t: &AlgebraTable, d: &LinearMap) -> Result<Subspace> {
    require_derivation(t, d)?;
    let n = t.dim();
    let mut maps = Vec::with_capacity(2 * n);
    for j in 0..n {
        let b = t.basis_element(j);
        maps.push(t.right_mult(&b)?);
        if !t.is_commutative() {
            maps.push(t.left_mult(&b)?);
        }
    }
    let kernel = d.kernel();
    let mut w = kernel.clone();
    loop {
        let next = stable_part(&w, &maps)?;
        if next.dim() == w.dim() {
            break;
        }
        w = next;
    }
    if !is_ideal(t, &w)? || !kernel.contains_subspace(&w)? {
        return Err(Error::InvariantViolation("kernel ideal fails its own definition".into()));
    }
    Ok(w)
}

/// `D̄(j + I) = D(j) + I` on the quotient; needs `D(I) ⊆ I`.
pub fn induced_map(q: &Quotient, d: &LinearMap) -> Result<LinearMap> {
    for v in q.ideal.basis() {
        if !q.ideal.contains_vector(&d.apply(v))? {
            return Err(Error::InvariantViolation("map does not preserve the ideal".into()));
        }
    }
    let images: Vec<Vec<Scalar>> = q.complement.iter().map(|&c| q.project(&d.image_of_basis(c))).collect();
    LinearMap::from_images(q.table.field(), &images)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// Every line generates the whole quotient.
    Simple,
    /// Basis vectors and their pairwise sums generate the whole quotient.
    ProbablySimple,
}

impl Simplicity {
    pub fn as_str(self) -> &'static str {
        match self {
            Simplicity::Simple => "simple",
            Simplicity::ProbablySimple => "probably_simple",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub m: Subspace,
    pub quotient: Quotient,
    pub induced: LinearMap,
    /// Verdict for `D`; the induced map is checked only when this is `Div`.
    pub verdict: Verdict,
    pub induced_verdict: Option<Verdict>,
    pub simplicity: Option<Simplicity>,
}

/// `J̄ = J/M` with `M` the largest ideal in `ker D`, and the induced `D̄`.
///
/// When `D` is DIV, `D̄` must be DIV as well and `J̄` must have no proper
/// nonzero ideal generated by one element; both are checked where the
/// enumeration is affordable.
pub fn div_reduction(t: &AlgebraTable, d: &LinearMap, caps: &Caps) -> Result<Reduction> {
    t.require_unit()?;
    let m = largest_ideal_in_kernel(t, d)?;
    let quotient = quotient_algebra(t, &m)?;
    let induced = induced_map(&quotient, d)?;
    if !is_derivation(&quotient.table, &induced)? {
        return Err(Error::InvariantViolation("induced map is not a derivation".into()));
    }
    let verdict = has_invertible_values(t, d, caps)?.verdict;
    let mut red = Reduction { m, quotient, induced, verdict, induced_verdict: None, simplicity: None };
    if verdict != Verdict::Div {
        return Ok(red);
    }
    let qv = has_invertible_values(&red.quotient.table, &red.induced, caps)?.verdict;
    if qv == Verdict::NotDiv {
        return Err(Error::InvariantViolation("induced map of a DIV derivation has a non-invertible value".into()));
    }
    red.induced_verdict = Some(qv);
    red.simplicity = Some(check_simple(&red.quotient.table, caps)?);
    Ok(red)
}

fn check_simple(t: &AlgebraTable, caps: &Caps) -> Result<Simplicity> {
    let n = t.dim();
    let f = t.field();
    let generates_all = |x: &[Scalar]| -> Result<bool> {
        Ok(ideal_closure(t, &Subspace::span(f, n, &[x.to_vec()])?)?.is_full())
    };
    let fail = || Error::InvariantViolation("quotient has a proper nonzero ideal".into());
    if let Some(p) = f.modulus() {
        let count = vector::projective_count(p, n);
        if count <= caps.enumeration as u128 {
            let ok = (0..count)
                .into_par_iter()
                .map(|i| generates_all(&vector::projective_point(f, n, i)))
                .collect::<Result<Vec<bool>>>()?;
            return if ok.into_iter().all(|b| b) { Ok(Simplicity::Simple) } else { Err(fail()) };
        }
    }
    for i in 0..n {
        for j in i..n {
            let mut x = vector::unit_vec(f, n, i);
            if j != i {
                x[j] = f.one();
            }
            if !generates_all(&x)? {
                return Err(fail());
            }
        }
    }
    Ok(Simplicity::ProbablySimple)
}

/// `D(a + bε) = d₀(a) + (d₀(b) + λb)ε` on a split null extension.
pub fn extend_derivation(ext: &SplitNull, d0: &LinearMap) -> Result<LinearMap> {
    let n = ext.base_dim;
    if d0.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: d0.dim() });
    }
    let f = d0.field();
    let mut m = Matrix::zeros(f, 2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let v = d0.matrix().get(r, c).clone();
            m.set(r, c, v.clone());
            m.set(n + r, n + c, v);
        }
        let diag = m.get(n + r, n + r) + &ext.lambda;
        m.set(n + r, n + r, diag);
    }
    LinearMap::new(m)
}
