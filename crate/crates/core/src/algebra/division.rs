use rayon::prelude::*;

use super::{AlgebraTable, Element};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Scalar};
use crate::jordan::jordan_inverse;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionVerdict {
    Yes,
    /// A nonzero element without an inverse.
    No(Element),
    Unknown,
}

impl DivisionVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            DivisionVerdict::Yes => "yes",
            DivisionVerdict::No(_) => "no",
            DivisionVerdict::Unknown => "unknown",
        }
    }
}

/// Two-sided inverse: `x y = y x = 1`.
fn two_sided_inverse(t: &AlgebraTable, x: &[Scalar]) -> Result<Option<Element>> {
    let unit = t.require_unit()?;
    let stacked = t.left_mult(x)?.vstack(&t.right_mult(x)?)?;
    let mut rhs = unit.coords().to_vec();
    rhs.extend_from_slice(unit.coords());
    let Some(y) = stacked.solve(&rhs)? else {
        return Ok(None);
    };
    if t.mul_raw(x, &y) != unit.coords() || t.mul_raw(&y, x) != unit.coords() {
        return Err(Error::InvariantViolation("solved inverse fails re-verification".into()));
    }
    Ok(Some(Element::new(y)))
}

/// Inverse of `x`: the Jordan inverse on commutative tables, the two-sided
/// inverse otherwise.
pub fn inverse_of(t: &AlgebraTable, x: &[Scalar]) -> Result<Option<Element>> {
    t.check_coords(x)?;
    if t.is_commutative() {
        jordan_inverse(t, x)
    } else {
        two_sided_inverse(t, x)
    }
}

/// Decides whether every nonzero element is invertible by testing one
/// representative of each line, over GF(p) within `cap`.
pub fn is_division_algebra(t: &AlgebraTable, cap: u64) -> Result<DivisionVerdict> {
    t.require_unit()?;
    let Some(p) = t.field().modulus() else {
        return Ok(DivisionVerdict::Unknown);
    };
    let count = vector::projective_count(p, t.dim());
    if count > cap as u128 {
        return Ok(DivisionVerdict::Unknown);
    }
    let bad = (0..count)
        .into_par_iter()
        .map(|idx| {
            let x = vector::projective_point(t.field(), t.dim(), idx);
            inverse_of(t, &x).map(|inv| if inv.is_none() { Some(x) } else { None })
        })
        .find_first(|r| !matches!(r, Ok(None)));
    match bad {
        None => Ok(DivisionVerdict::Yes),
        Some(Ok(Some(x))) => Ok(DivisionVerdict::No(Element::new(x))),
        Some(Err(e)) => Err(e),
        Some(Ok(None)) => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_CAP;
    use crate::constructions::{field_algebra, matrix_algebra};
    use crate::exactmath::FieldSpec;

    #[test]
    fn prime_field_is_division() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(is_division_algebra(&field_algebra(f), DEFAULT_CAP).unwrap(), DivisionVerdict::Yes);
    }

    #[test]
    fn matrices_are_not_division() {
        let f = FieldSpec::prime(3).unwrap();
        let m2 = matrix_algebra(&field_algebra(f), 2).unwrap();
        let DivisionVerdict::No(x) = is_division_algebra(&m2, DEFAULT_CAP).unwrap() else {
            panic!("M2 has zero divisors");
        };
        assert!(!x.is_zero());
        assert!(inverse_of(&m2, &x).unwrap().is_none());
        let e12 = m2.basis_element(1);
        assert!(inverse_of(&m2, &e12).unwrap().is_none());
    }

    #[test]
    fn quadratic_extension_of_gf3() {
        // F_3[t]/(t^2 - 2): basis 1, t
        let f = FieldSpec::prime(3).unwrap();
        let t = AlgebraTable::from_constants(
            f,
            2,
            [(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one()), (1, 1, 0, f.from_i64(2))],
        )
        .unwrap()
        .with_found_unit();
        assert_eq!(is_division_algebra(&t, DEFAULT_CAP).unwrap(), DivisionVerdict::Yes);
        // oracle: each of the 8 nonzero elements has a partner with product 1
        for idx in 1..9u64 {
            let x = vector::vector_from_index(f, 2, idx);
            let found = (0..9u64).any(|j| {
                let y = vector::vector_from_index(f, 2, j);
                t.mul_raw(&x, &y) == vec![f.one(), f.zero()]
            });
            assert!(found);
        }
    }

    #[test]
    fn capped_or_rational_is_unknown() {
        let f = FieldSpec::prime(3).unwrap();
        let m2 = matrix_algebra(&field_algebra(f), 2).unwrap();
        assert_eq!(is_division_algebra(&m2, 3).unwrap(), DivisionVerdict::Unknown);
        let q = field_algebra(FieldSpec::Rationals);
        assert_eq!(is_division_algebra(&q, DEFAULT_CAP).unwrap(), DivisionVerdict::Unknown);
        let z = AlgebraTable::from_constants(f, 1, []).unwrap();
        assert_eq!(is_division_algebra(&z, DEFAULT_CAP), Err(Error::NotUnital));
    }
}
