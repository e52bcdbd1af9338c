use super::field_algebra;
use crate::algebra::{AlgebraTable, LinearMap};
use crate::error::{Error, Result};
use crate::exactmath::{vector, FieldSpec, Scalar};

/// Doubling parameters `μ₁, μ₂, μ₃`, all nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdParams {
    mu: [Scalar; 3],
}

impl CdParams {
    pub fn new(mu: [Scalar; 3]) -> Result<Self> {
        if mu.iter().any(Scalar::is_zero) {
            return Err(Error::BadParams("doubling parameters must be nonzero".into()));
        }
        let f = mu[0].field();
        if mu.iter().any(|m| m.field() != f) {
            return Err(Error::FieldMismatch);
        }
        Ok(CdParams { mu })
    }

    pub fn mu(&self) -> &[Scalar; 3] {
        &self.mu
    }

    pub fn field(&self) -> FieldSpec {
        self.mu[0].field()
    }
}

/// One doubling step: `(a,b)(c,d) = (ac + μ d̄b, da + bc̄)`, `(a,b)‾ = (ā, −b)`.
fn double(a: &AlgebraTable, conj: &LinearMap, mu: &Scalar) -> Result<(AlgebraTable, LinearMap)> {
    let f = a.field();
    let m = a.dim();
    let split = |v: &[Scalar]| (v[..m].to_vec(), v[m..].to_vec());
    let table = AlgebraTable::from_products(f, 2 * m, |i, j| {
        let (x0, x1) = split(&vector::unit_vec(f, 2 * m, i));
        let (y0, y1) = split(&vector::unit_vec(f, 2 * m, j));
        let mut first = a.mul_raw(&x0, &y0);
        vector::axpy(&mut first, mu, &a.mul_raw(&conj.apply(&y1), &x1));
        let mut second = a.mul_raw(&y1, &x0);
        vector::axpy(&mut second, &f.one(), &a.mul_raw(&x1, &conj.apply(&y0)));
        first.extend(second);
        first
    })?;
    let images: Vec<Vec<Scalar>> = (0..2 * m)
        .map(|j| {
            let (x0, x1) = split(&vector::unit_vec(f, 2 * m, j));
            let mut v = conj.apply(&x0);
            v.extend(x1.iter().map(|s| -s));
            v
        })
        .collect();
    let new_conj = LinearMap::from_images(f, &images)?;
    let unit = {
        let mut u = a.require_unit()?.into_coords();
        u.extend(vector::zero_vec(f, m));
        u
    };
    Ok((table.with_unit(unit)?, new_conj))
}

/// Iterated Cayley–Dickson doubling of `F`: stages 1, 2, 3 give dimensions 2,
/// 4, 8. Basis index `i` is labelled `e{i}` (`1` for the unit); at each stage
/// the first half is the previous algebra and the second half its multiple of
/// the new generator.
pub fn cayley_dickson(field: FieldSpec, params: &CdParams, stages: usize) -> Result<(AlgebraTable, LinearMap)> {
    if !(1..=3).contains(&stages) {
        return Err(Error::BadParams(format!("stages must be 1..3, got {stages}")));
    }
    if params.field() != field {
        return Err(Error::FieldMismatch);
    }
    let mut a = field_algebra(field);
    let mut conj = LinearMap::identity(field, 1);
    for mu in &params.mu[..stages] {
        (a, conj) = double(&a, &conj, mu)?;
    }
    let labels = (0..a.dim()).map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") }).collect();
    Ok((a.with_labels(labels)?, conj))
}

fn scalar_part(v: &[Scalar]) -> Result<Scalar> {
    if v[1..].iter().any(|s| !s.is_zero()) {
        return Err(Error::NotScalar);
    }
    Ok(v[0].clone())
}

/// `t(x)`: coefficient of `x + x̄` on 1.
pub fn cd_trace(c: &AlgebraTable, conj: &LinearMap, x: &[Scalar]) -> Result<Scalar> {
    c.check_coords(x)?;
    conj.check_for(c)?;
    scalar_part(&vector::add_vec(x, &conj.apply(x)))
}

/// `n(x)`: coefficient of `x x̄` on 1.
pub fn cd_norm(c: &AlgebraTable, conj: &LinearMap, x: &[Scalar]) -> Result<Scalar> {
    c.check_coords(x)?;
    conj.check_for(c)?;
    scalar_part(&c.mul_raw(x, &conj.apply(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Identity;
    use crate::constructions::involution_check;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn octonions(f: FieldSpec, mu: [i64; 3]) -> (AlgebraTable, LinearMap) {
        let p = CdParams::new(mu.map(|m| f.from_i64(m))).unwrap();
        cayley_dickson(f, &p, 3).unwrap()
    }

    #[test]
    fn stage_dimensions_and_profiles() {
        let f = FieldSpec::prime(7).unwrap();
        let p = CdParams::new([f.from_i64(3), f.from_i64(5), f.from_i64(6)]).unwrap();
        for (s, d) in [(1, 2), (2, 4), (3, 8)] {
            let (c, conj) = cayley_dickson(f, &p, s).unwrap();
            assert_eq!(c.dim(), d);
            assert!(involution_check(&c, &conj).unwrap());
            assert_eq!(c.check_identity(Identity::Associative).unwrap(), s < 3);
            assert_eq!(c.check_identity(Identity::Commutative).unwrap(), s < 2);
        }
        assert!(cayley_dickson(f, &p, 4).is_err());
        assert!(CdParams::new([f.zero(), f.one(), f.one()]).is_err());
    }

    #[test]
    fn adjoined_generator() {
        let f = FieldSpec::Rationals;
        let (c, conj) = octonions(f, [2, 3, 5]);
        let e = c.basis_element(1);
        assert_eq!(c.multiply(&e, &e).unwrap().coords()[0], f.from_i64(2));
        assert_eq!(cd_trace(&c, &conj, &e).unwrap(), f.zero());
        assert_eq!(cd_norm(&c, &conj, &e).unwrap(), f.from_i64(-2));
        let one = c.basis_element(0);
        assert_eq!(cd_trace(&c, &conj, &one).unwrap(), f.from_i64(2));
        assert_eq!(cd_norm(&c, &conj, &one).unwrap(), f.one());
    }

    #[test]
    fn octonion_units_anticommute_and_associator_nonzero() {
        let f = FieldSpec::prime(5).unwrap();
        let (c, _) = octonions(f, [-1, -1, -1]);
        let (e1, e2, e4) = (c.basis_element(1), c.basis_element(2), c.basis_element(4));
        let a = c.multiply(&e1, &e2).unwrap();
        let b = c.multiply(&e2, &e1).unwrap();
        assert_eq!(a, b.scale(&f.from_i64(-1)));
        assert!(!a.is_zero());
        assert!(!c.associator(&e1, &e2, &e4).unwrap().is_zero());
    }

    #[test]
    fn norm_is_multiplicative_and_trace_scalar() {
        let f = FieldSpec::prime(11).unwrap();
        let (c, conj) = octonions(f, [2, 7, 3]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let x = c.random_element(&mut rng);
            let y = c.random_element(&mut rng);
            let xy = c.multiply(&x, &y).unwrap();
            let lhs = cd_norm(&c, &conj, &xy).unwrap();
            let rhs = &cd_norm(&c, &conj, &x).unwrap() * &cd_norm(&c, &conj, &y).unwrap();
            assert_eq!(lhs, rhs);
            cd_trace(&c, &conj, &x).unwrap();
        }
    }
}
