use super::echelon::EchelonBuilder;
use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `F^n`, stored by its reduced echelon basis.
///
/// The reduced basis is unique, so two equal subspaces have identical stored
/// bases and derived `PartialEq` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut b = EchelonBuilder::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
            }
            if v.iter().any(|x| x.field() != field) {
                return Err(Error::FieldMismatch);
            }
            b.push_dense(v);
        }
        Ok(Self::from_builder(field, &b))
    }

    fn from_builder(field: FieldSpec, b: &EchelonBuilder) -> Self {
        Subspace { field, ambient: b.cols(), basis: b.dense_rows(), pivots: b.pivots() }
    }

    fn builder(&self) -> EchelonBuilder {
        let mut b = EchelonBuilder::new(self.field, self.ambient);
        for v in &self.basis {
            b.push_dense(v);
        }
        b
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard-basis indices that are not pivots: the canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// `v` minus its component along the stored basis, read off the pivots.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    o.sub_mul(&c, r);
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, v.len()));
        }
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient || !self.reduce(v).iter().all(Scalar::is_zero) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the stored basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    o.add_mul(c, r);
                }
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = self.builder();
        for v in &other.basis {
            b.push_dense(v);
        }
        Ok(Self::from_builder(self.field, &b))
    }

    /// Rows `k` with `k . v = 0` exactly for the members `v` of this space.
    pub fn annihilator(&self) -> Vec<Vec<Scalar>> {
        self.builder().nullspace_basis()
    }

    /// Intersection as the kernel of both annihilators stacked.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = EchelonBuilder::new(self.field, self.ambient);
        for k in self.annihilator().iter().chain(other.annihilator().iter()) {
            b.push_dense(k);
        }
        Subspace::span(self.field, self.ambient, &b.nullspace_basis())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in &other.basis {
            if !self.contains_vector(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis == other.basis)
    }
}
