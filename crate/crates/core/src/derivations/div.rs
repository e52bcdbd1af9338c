use rayon::prelude::*;

use super::spin::{find_isotropic, Isotropy};
use super::{preimage, require_derivation, Caps};
use crate::algebra::{inverse_of, AlgebraTable, Element, LinearMap};
use crate::error::{Error, Result};
use crate::exactmath::{diagonalize_symmetric_form, vector, Matrix, Scalar, Subspace};
use crate::jordan::albert_norm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Div,
    NotDiv,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Div => "div",
            Verdict::NotDiv => "not_div",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    SpinNorm,
    AlbertRecipe,
    CapExceeded,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::SpinNorm => "spin_norm",
            Method::AlbertRecipe => "albert_recipe",
            Method::CapExceeded => "cap_exceeded",
        }
    }
}

/// Outcome of [`has_invertible_values`].
#[derive(Clone, Debug)]
pub struct DivReport {
    pub map: LinearMap,
    pub is_derivation: bool,
    pub kernel: Subspace,
    pub image: Subspace,
    pub verdict: Verdict,
    /// For `NotDiv`: `x` with `D(x) ≠ 0` and `D(x)` not invertible.
    pub witness: Option<Element>,
    pub method: Method,
    pub note: Option<String>,
}

/// Decides whether every nonzero value of `D` is invertible. The values of
/// `D` are exactly its image `W`, so only `W` is examined:
///
/// 1. over GF(p), every line of `W` when their number is within the cap;
/// 2. on spin factors, isotropy of `N(α + v) = α² − f(v,v)` restricted to `W`;
/// 3. on Albert-type tables, the Peirce witness recipe;
/// 4. otherwise `Unknown`.
///
/// The zero map is `NotDiv` without a witness: it has no nonzero values, and
/// DIV derivations are nonzero by definition.
pub fn has_invertible_values(t: &AlgebraTable, d: &LinearMap, caps: &Caps) -> Result<DivReport> {
    t.require_unit()?;
    require_derivation(t, d)?;
    let kernel = d.kernel();
    let image = d.image();
    let mut report = DivReport {
        map: d.clone(),
        is_derivation: true,
        kernel,
        image,
        verdict: Verdict::Unknown,
        witness: None,
        method: Method::CapExceeded,
        note: None,
    };
    if d.is_zero() {
        report.verdict = Verdict::NotDiv;
        report.method = Method::Exhaustive;
        report.note = Some("zero map: derivations with invertible values are nonzero".into());
        return Ok(report);
    }

    let w = &report.image;
    if let Some(p) = t.field().modulus() {
        let count = vector::projective_count(p, w.dim());
        if count <= caps.enumeration as u128 {
            let bad = (0..count)
                .into_par_iter()
                .map(|idx| {
                    let c = vector::projective_point(t.field(), w.dim(), idx);
                    let v = w.combine(&c);
                    inverse_of(t, &v).map(|inv| inv.is_none().then_some(v))
                })
                .find_first(|r| !matches!(r, Ok(None)));
            report.method = Method::Exhaustive;
            match bad {
                None => report.verdict = Verdict::Div,
                Some(r) => {
                    let v = r?.expect("find_first filters invertible values");
                    return finish_not_div(t, report, &v);
                }
            }
            return Ok(report);
        }
    }

    if let Some(g) = t.spin_form() {
        report.method = Method::SpinNorm;
        let n = t.dim();
        let mut q = Matrix::zeros(t.field(), n, n);
        q.set(0, 0, t.field().one());
        for i in 0..n - 1 {
            for j in 0..n - 1 {
                q.set(i + 1, j + 1, -g.get(i, j));
            }
        }
        let basis = Matrix::from_columns(t.field(), n, w.basis())?;
        let restricted = basis.transpose().mul(&q)?.mul(&basis)?;
        let dz = diagonalize_symmetric_form(&restricted)?;
        match find_isotropic(&dz.d, caps.height) {
            Isotropy::Anisotropic => report.verdict = Verdict::Div,
            Isotropy::Vector(c) => {
                let v = basis.mul_vec(&dz.p.mul_vec(&c)?)?;
                return finish_not_div(t, report, &v);
            }
            Isotropy::Unknown => {
                report.note = Some(format!("no isotropic vector of height <= {} found in the image", caps.height));
            }
        }
        return Ok(report);
    }

    if t.albert().is_some() {
        report.method = Method::AlbertRecipe;
        if let Some(x) = albert_div_witness(t, d)? {
            let v = d.apply(&x);
            return finish_not_div(t, report, &v);
        }
        return Ok(report);
    }

    report.note = Some("image too large to enumerate and no structural shortcut applies".into());
    Ok(report)
}

/// Records `NotDiv` with a preimage of the non-invertible value `v`, after
/// re-checking it independently of how `v` was found.
fn finish_not_div(t: &AlgebraTable, mut report: DivReport, v: &[Scalar]) -> Result<DivReport> {
    let x = preimage(&report.map, v)?;
    let value = report.map.apply(&x);
    if vector::is_zero_vec(&value) || inverse_of(t, &value)?.is_some() {
        return Err(Error::InvariantViolation("witness fails re-verification".into()));
    }
    report.verdict = Verdict::NotDiv;
    report.witness = Some(x);
    Ok(report)
}

/// Follows the Peirce argument: a derivation moves `e_ii` into the
/// off-diagonal components of `e_ii`, and once it kills all three `e_ii` it
/// preserves every `J_ij`; both kinds of value have norm zero. Returns the
/// first basis element with a nonzero value, or `None` for `D = 0`.
pub fn albert_div_witness(t: &AlgebraTable, d: &LinearMap) -> Result<Option<Element>> {
    let data = t.albert().ok_or(Error::NotAlbertType)?;
    require_derivation(t, d)?;
    let comp = |name: &str| data.component(name).expect("construction records all components");
    let check = |v: &[Scalar], space: &Subspace, what: &str| -> Result<()> {
        if !space.contains_vector(v)? {
            return Err(Error::RecipeFailure(format!("value of {what} leaves its Peirce component")));
        }
        let n = albert_norm(t, v)?;
        if !n.is_zero() {
            return Err(Error::RecipeFailure(format!("value of {what} has norm {n}")));
        }
        Ok(())
    };
    let off = [("J12", "J13"), ("J12", "J23"), ("J13", "J23")];
    for (i, e) in data.idempotents.iter().enumerate() {
        let v = d.apply(e);
        if !vector::is_zero_vec(&v) {
            let space = comp(off[i].0).sum(comp(off[i].1))?;
            check(&v, &space, &format!("e{}{}", i + 1, i + 1))?;
            return Ok(Some(Element::new(e.clone())));
        }
    }
    for name in ["J12", "J13", "J23"] {
        let space = comp(name);
        for a in space.basis() {
            let v = d.apply(a);
            if !vector::is_zero_vec(&v) {
                check(&v, space, name)?;
                return Ok(Some(Element::new(a.clone())));
            }
        }
    }
    Ok(None)
}
