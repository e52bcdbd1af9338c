use rayon::prelude::*;

use super::{has_invertible_values, is_derivation, Caps, Verdict};
use crate::algebra::{AlgebraTable, LinearMap};
use crate::error::{Error, Result};
use crate::exactmath::{diagonalize_symmetric_form, vector, FieldSpec, Matrix, Scalar};

/// Isotropy of a diagonal form `Σ d_i x_i²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isotropy {
    /// A nonzero vector with form value zero.
    Vector(Vec<Scalar>),
    Anisotropic,
    /// Rational search exhausted its height bound.
    Unknown,
}

/// Looks for a nonzero isotropic vector of `Σ d_i x_i²`.
///
/// Exact except over ℚ for three or more nonzero entries of mixed sign,
/// where integer triples of height at most `height` are tried.
pub fn find_isotropic(d: &[Scalar], height: u64) -> Isotropy {
    let r = d.len();
    if r == 0 {
        return Isotropy::Anisotropic;
    }
    let field = d[0].field();
    if let Some(i) = d.iter().position(Scalar::is_zero) {
        return Isotropy::Vector(vector::unit_vec(field, r, i));
    }
    let with = |entries: &[(usize, Scalar)]| {
        let mut v = vector::zero_vec(field, r);
        for (i, s) in entries {
            v[*i] = s.clone();
        }
        Isotropy::Vector(v)
    };
    // a d_i x² + d_j = 0 has a solution iff −d_j/d_i is a square
    for i in 0..r {
        for j in i + 1..r {
            let ratio = -(&d[j] * &d[i].inv().expect("nonzero"));
            if let Some(s) = ratio.sqrt() {
                return with(&[(i, s), (j, field.one())]);
            }
        }
    }
    if r < 3 {
        return Isotropy::Anisotropic;
    }
    if field.is_finite() {
        // d₀x² + d₁y² = −d₂ always has a solution over a finite field
        let elems = field.elements().expect("finite");
        for x in &elems {
            let rest = -(&d[2] + &(&d[0] * &(x * x)));
            let y2 = &rest * &d[1].inv().expect("nonzero");
            if let Some(y) = y2.sqrt() {
                return with(&[(0, x.clone()), (1, y), (2, field.one())]);
            }
        }
        unreachable!("every ternary form over a finite field is isotropic");
    }
    let signs: Vec<i32> = d.iter().map(|s| s.signum().expect("rational")).collect();
    if signs.iter().all(|&s| s == signs[0]) {
        return Isotropy::Anisotropic;
    }
    let h = height as i64;
    for i in 0..r {
        for j in i + 1..r {
            for k in j + 1..r {
                if signs[i] == signs[j] && signs[j] == signs[k] {
                    continue;
                }
                let kinv = d[k].inv().expect("nonzero");
                for x in -h..=h {
                    for y in 0..=h {
                        if x == 0 && y == 0 {
                            continue;
                        }
                        let (xs, ys) = (field.from_i64(x), field.from_i64(y));
                        let s = &(&d[i] * &(&xs * &xs)) + &(&d[j] * &(&ys * &ys));
                        if let Some(z) = (-(&s * &kinv)).sqrt() {
                            return with(&[(i, xs), (j, ys), (k, z)]);
                        }
                    }
                }
            }
        }
    }
    Isotropy::Unknown
}

/// Outcome of the search for `x, y ∈ V` with `f(x,x) ≠ 0`, `f(y,y) ≠ 0`,
/// `f(x,y) = 0` and `−f(y,y)/f(x,x)` not a square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinCriterion {
    Pair { x: Vec<Scalar>, y: Vec<Scalar> },
    /// Exhaustive search found none.
    NoPair,
    /// Bounded search found none.
    Inconclusive,
}

fn ratio_ok(g: &Matrix, x: &[Scalar], y: &[Scalar]) -> bool {
    let fxx = vector::bilinear(g, x, x);
    let fyy = vector::bilinear(g, y, y);
    if fxx.is_zero() || fyy.is_zero() || !vector::bilinear(g, x, y).is_zero() {
        return false;
    }
    !(-(&fyy * &fxx.inv().expect("nonzero"))).is_square()
}

/// Diagonal pairs first; then, over GF(p), every pair of lines (the pair may
/// need vectors outside any orthogonal basis); over ℚ, small integer vectors.
pub fn spin_div_criterion(g: &Matrix, caps: &Caps) -> Result<SpinCriterion> {
    let dz = diagonalize_symmetric_form(g)?;
    let n = g.rows();
    let field = g.field();
    for i in 0..n {
        for j in 0..n {
            if i == j || dz.d[i].is_zero() || dz.d[j].is_zero() {
                continue;
            }
            if !(-(&dz.d[j] * &dz.d[i].inv().expect("nonzero"))).is_square() {
                return Ok(SpinCriterion::Pair { x: dz.p.column(i), y: dz.p.column(j) });
            }
        }
    }
    let candidates: Vec<Vec<Scalar>> = match field.modulus() {
        Some(p) => {
            let count = vector::projective_count(p, n);
            if count.saturating_mul(count) > caps.enumeration as u128 {
                return Ok(SpinCriterion::Inconclusive);
            }
            (0..count).map(|i| vector::projective_point(field, n, i)).collect()
        }
        None => small_integer_vectors(field, n, caps),
    };
    let hit = candidates
        .par_iter()
        .map(|x| candidates.iter().find(|y| ratio_ok(g, x, y)).map(|y| (x.clone(), y.clone())))
        .find_first(Option::is_some)
        .flatten();
    Ok(match hit {
        Some((x, y)) => SpinCriterion::Pair { x, y },
        None if field.is_finite() => SpinCriterion::NoPair,
        None => SpinCriterion::Inconclusive,
    })
}

/// Nonzero integer vectors with entries in `[−h, h]`, `h` chosen so the
/// pair search stays within the enumeration cap.
fn small_integer_vectors(field: FieldSpec, n: usize, caps: &Caps) -> Vec<Vec<Scalar>> {
    let budget = (caps.enumeration as f64).sqrt() as u128;
    let mut h = 0i64;
    while (h as u64) < caps.height && ((2 * (h + 1) + 1) as u128).pow(n as u32) <= budget.max(1) {
        h += 1;
    }
    let side = (2 * h + 1) as u64;
    let total = side.pow(n as u32);
    (1..total)
        .map(|idx| {
            let mut rest = idx;
            (0..n)
                .map(|_| {
                    let c = (rest % side) as i64 - h;
                    rest /= side;
                    field.from_i64(c)
                })
                .collect::<Vec<_>>()
        })
        .filter(|v| !vector::is_zero_vec(v))
        .collect()
}

/// `d(x) = y`, `d(y) = −(f(y,y)/f(x,x)) x`, `d(U) = 0` on the orthogonal
/// complement `U` of `span{x, y}`, and `d(1) = 0`.
pub fn construct_spin_div(t: &AlgebraTable, x: &[Scalar], y: &[Scalar], caps: &Caps) -> Result<LinearMap> {
    let g = t.spin_form().ok_or(Error::NotSpinFactor)?;
    let n = g.rows();
    let field = t.field();
    if x.len() != n || y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: x.len().min(y.len()) });
    }
    if !ratio_ok(g, x, y) {
        return Err(Error::CriterionNotSatisfied);
    }
    let fx = g.mul_vec(x)?;
    let fy = g.mul_vec(y)?;
    let u = Matrix::from_rows(field, vec![fx, fy])?.nullspace();
    let mut cols = vec![x.to_vec(), y.to_vec()];
    cols.extend(u.basis().iter().cloned());
    if cols.len() != n {
        return Err(Error::DegenerateSplit);
    }
    let change_inv = Matrix::from_columns(field, n, &cols)?.inverse().ok_or(Error::DegenerateSplit)?;
    let ratio = &vector::bilinear(g, y, y) * &vector::bilinear(g, x, x).inv().expect("nonzero");
    let mut images = vec![y.to_vec(), vector::scale_vec(&-ratio, x)];
    images.extend((2..n).map(|_| vector::zero_vec(field, n)));
    let on_v = Matrix::from_columns(field, n, &images)?.mul(&change_inv)?;
    let mut full = Matrix::zeros(field, n + 1, n + 1);
    for r in 0..n {
        for c in 0..n {
            full.set(r + 1, c + 1, on_v.get(r, c).clone());
        }
    }
    let d = LinearMap::new(full)?;
    if !is_derivation(t, &d)? {
        return Err(Error::InvariantViolation("constructed spin map is not a derivation".into()));
    }
    if field.is_finite() {
        let r = has_invertible_values(t, &d, caps)?;
        if r.method != super::Method::CapExceeded && r.verdict != Verdict::Div {
            return Err(Error::InvariantViolation("constructed spin map has a non-invertible value".into()));
        }
    }
    Ok(d)
}
