use super::{is_ideal, AlgebraTable};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Matrix, Scalar, Subspace};

/// `J / I` on the standard basis vectors not pivotal in `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: AlgebraTable,
    /// `q x n`; column `j` is the class of `b_j`.
    pub projection: Matrix,
    /// Indices of the ambient basis vectors kept as quotient basis.
    pub complement: Vec<usize>,
    pub ideal: Subspace,
}

impl Quotient {
    pub fn project(&self, x: &[Scalar]) -> Vec<Scalar> {
        let reduced = self.ideal.reduce(x);
        self.complement.iter().map(|&c| reduced[c].clone()).collect()
    }

    /// The representative of a quotient vector inside the complement.
    pub fn lift(&self, y: &[Scalar]) -> Vec<Scalar> {
        let mut v = vector::zero_vec(self.table.field(), self.ideal.ambient_dim());
        for (&c, s) in self.complement.iter().zip(y) {
            v[c] = s.clone();
        }
        v
    }
}

pub fn quotient_algebra(j: &AlgebraTable, ideal: &Subspace) -> Result<Quotient> {
    if ideal.field() != j.field() {
        return Err(Error::FieldMismatch);
    }
    if !is_ideal(j, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let complement = ideal.complement_indices();
    let q = complement.len();
    let n = j.dim();
    let project = |x: &[Scalar]| -> Vec<Scalar> {
        let reduced = ideal.reduce(x);
        complement.iter().map(|&c| reduced[c].clone()).collect()
    };
    let table = AlgebraTable::from_products(j.field(), q, |a, b| {
        let x = vector::unit_vec(j.field(), n, complement[a]);
        let y = vector::unit_vec(j.field(), n, complement[b]);
        project(&j.mul_raw(&x, &y))
    })?;
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| project(&vector::unit_vec(j.field(), n, i))).collect();
    let projection = Matrix::from_columns(j.field(), q, &cols)?;
    let mut table = match j.labels() {
        Some(l) => table.with_labels(complement.iter().map(|&c| l[c].clone()).collect())?,
        None => table,
    };
    if let Some(u) = j.unit() {
        if q > 0 {
            table = table.with_unit(project(&u))?;
        }
    }
    Ok(Quotient { table, projection, complement, ideal: ideal.clone() })
}

/// `A ⊕ B` with componentwise product.
pub fn direct_sum(a: &AlgebraTable, b: &AlgebraTable) -> Result<AlgebraTable> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let (m, n) = (a.dim(), b.dim());
    let mut constants = Vec::new();
    for (i, j, k, c) in a.constants() {
        constants.push((i, j, k, c.clone()));
    }
    for (i, j, k, c) in b.constants() {
        constants.push((m + i, m + j, m + k, c.clone()));
    }
    let mut t = AlgebraTable::from_constants(a.field(), m + n, constants)?;
    if a.labels().is_some() || b.labels().is_some() {
        let labels = (0..m).map(|i| a.label(i)).chain((0..n).map(|i| format!("{}'", b.label(i)))).collect();
        t = t.with_labels(labels)?;
    }
    if let (Some(ua), Some(ub)) = (a.unit(), b.unit()) {
        let mut u = ua.into_coords();
        u.extend(ub.into_coords());
        t = t.with_unit(u)?;
    }
    Ok(t)
}

/// `J ⊕ Jε` with `(a + bε)(a' + b'ε) = aa' + (ab' + ba')ε`.
#[derive(Clone, Debug)]
pub struct SplitNull {
    pub table: AlgebraTable,
    /// The `ε` half; squares to zero.
    pub radical: Subspace,
    /// Shift used by the extended derivation `d₀ + λ id` on the radical.
    pub lambda: Scalar,
    pub base_dim: usize,
}

pub fn split_null_extension(j: &AlgebraTable, lambda: &Scalar) -> Result<SplitNull> {
    if lambda.field() != j.field() {
        return Err(Error::FieldMismatch);
    }
    let n = j.dim();
    let mut constants = Vec::new();
    for (i, jj, k, c) in j.constants() {
        constants.push((i, jj, k, c.clone()));
        constants.push((i, n + jj, n + k, c.clone()));
        constants.push((n + i, jj, n + k, c.clone()));
    }
    let mut t = AlgebraTable::from_constants(j.field(), 2 * n, constants)?;
    let labels = (0..n).map(|i| j.label(i)).chain((0..n).map(|i| format!("{}_eps", j.label(i)))).collect();
    t = t.with_labels(labels)?;
    if let Some(u) = j.unit() {
        let mut coords = u.into_coords();
        coords.extend(vector::zero_vec(j.field(), n));
        t = t.with_unit(coords)?;
    }
    let radical_basis: Vec<Vec<Scalar>> = (n..2 * n).map(|i| vector::unit_vec(j.field(), 2 * n, i)).collect();
    let radical = Subspace::span(j.field(), 2 * n, &radical_basis)?;
    if !super::product_space(&t, &radical, &radical)?.is_zero() {
        return Err(Error::InvariantViolation("radical of a split null extension squares to nonzero".into()));
    }
    Ok(SplitNull { table: t, radical, lambda: lambda.clone(), base_dim: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Identity;
    use crate::constructions::{field_algebra, matrix_algebra, spin_factor};
    use crate::exactmath::FieldSpec;

    #[test]
    fn quotient_by_zero_is_identity() {
        let f = FieldSpec::prime(5).unwrap();
        let j = spin_factor(&Matrix::from_i64(f, &[&[1, 0], &[0, 3]])).unwrap();
        let q = quotient_algebra(&j, &Subspace::zero(f, 3)).unwrap();
        assert!(q.table.same_constants(&j));
        assert_eq!(q.table.unit(), j.unit());
        assert_eq!(q.projection, Matrix::identity(f, 3));
    }

    #[test]
    fn split_null_quotient_recovers_base() {
        let f = FieldSpec::prime(3).unwrap();
        let j = spin_factor(&Matrix::from_i64(f, &[&[1, 0], &[0, 1]])).unwrap();
        let ext = split_null_extension(&j, &f.one()).unwrap();
        assert!(ext.table.check_identity(Identity::Jordan).unwrap());
        let q = quotient_algebra(&ext.table, &ext.radical).unwrap();
        assert!(q.table.same_constants(&j));
        assert_eq!(q.complement, vec![0, 1, 2]);
        assert_eq!(q.table.unit(), j.unit());
        // projection is multiplicative on basis pairs
        for a in 0..6 {
            for b in 0..6 {
                let x = ext.table.basis_element(a);
                let y = ext.table.basis_element(b);
                let lhs = q.project(&ext.table.mul_raw(&x, &y));
                let rhs = q.table.mul_raw(&q.project(&x), &q.project(&y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let f = FieldSpec::prime(3).unwrap();
        let j = spin_factor(&Matrix::from_i64(f, &[&[1, 0], &[0, 1]])).unwrap();
        let s = Subspace::span(f, 3, &[j.basis_element(1).into_coords()]).unwrap();
        assert!(matches!(quotient_algebra(&j, &s), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn direct_sum_of_fields() {
        let f = FieldSpec::prime(5).unwrap();
        let s = direct_sum(&field_algebra(f), &field_algebra(f)).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.unit().unwrap().coords(), &[f.one(), f.one()]);
        assert!(s.check_identity(Identity::Associative).unwrap());
        let m2 = matrix_algebra(&field_algebra(f), 2).unwrap();
        assert!(direct_sum(&m2, &field_algebra(FieldSpec::Rationals)).is_err());
    }
}
