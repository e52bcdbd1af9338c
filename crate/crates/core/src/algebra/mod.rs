//! Finite-dimensional algebras given by structure constants.

mod division;
mod extend;
mod identities;
mod ideals;

use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, OnceLock};

pub use division::{inverse_of, is_division_algebra, DivisionVerdict};
pub use extend::{direct_sum, quotient_algebra, split_null_extension, Quotient, SplitNull};
pub use identities::{jordan_defect, Identity};
pub use ideals::{brute_force_ideals, ideal_closure, ideal_cube, is_ideal, product_space};

use crate::constructions::AlbertData;
use crate::error::{Error, Result};
use crate::exactmath::{vector, FieldSpec, Matrix, Scalar, Subspace};

/// Default bound on exhaustive enumerations.
pub const DEFAULT_CAP: u64 = 1_000_000;

pub type SparseVec = Vec<(usize, Scalar)>;

/// Extra structure remembered by the factories that know it.
#[derive(Clone, Debug, Default)]
pub enum Family {
    #[default]
    Generic,
    /// `F + V` with the Gram matrix of `f` on `V`.
    Spin { form: Matrix },
    Albert(Arc<AlbertData>),
}

/// Structure constants `c_ij^k`: `b_i * b_j = sum_k c_ij^k b_k`.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    field: FieldSpec,
    dim: usize,
    products: Vec<SparseVec>,
    labels: Option<Vec<String>>,
    unit: Option<Vec<Scalar>>,
    family: Family,
    commutative: bool,
    associative: OnceLock<bool>,
    jordan: OnceLock<std::result::Result<bool, Error>>,
}

impl PartialEq for AlgebraTable {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.products == other.products
            && self.labels == other.labels
            && self.unit == other.unit
    }
}

/// Coordinates of an algebra element in the basis order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Element(vector::zero_vec(field, dim))
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero_vec(&self.0)
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element(vector::scale_vec(s, &self.0))
    }

    pub fn add(&self, other: &Element) -> Element {
        Element(vector::add_vec(&self.0, &other.0))
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element(vector::sub_vec(&self.0, &other.0))
    }
}

impl Deref for Element {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl From<Vec<Scalar>> for Element {
    fn from(v: Vec<Scalar>) -> Self {
        Element(v)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn normalize(field: FieldSpec, dense: Vec<Scalar>) -> SparseVec {
    let _ = field;
    dense.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

impl AlgebraTable {
    /// Builds a table from `(i, j, k, c)` entries (0-based); repeated
    /// entries are summed.
    pub fn from_constants<I>(field: FieldSpec, dim: usize, constants: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut dense = vec![vector::zero_vec(field, dim); dim * dim];
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: i.max(j).max(k) + 1 });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            dense[i * dim + j][k] += &c;
        }
        Ok(Self::from_dense(field, dim, dense))
    }

    /// Builds a table from a product rule on basis indices.
    pub fn from_products<F>(field: FieldSpec, dim: usize, mut rule: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Vec<Scalar>,
    {
        let mut dense = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = rule(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
                }
                dense.push(v);
            }
        }
        Ok(Self::from_dense(field, dim, dense))
    }

    fn from_dense(field: FieldSpec, dim: usize, dense: Vec<Vec<Scalar>>) -> Self {
        let products: Vec<SparseVec> = dense.into_iter().map(|v| normalize(field, v)).collect();
        let commutative =
            (0..dim).all(|i| (i + 1..dim).all(|j| products[i * dim + j] == products[j * dim + i]));
        AlgebraTable {
            field,
            dim,
            products,
            labels: None,
            unit: None,
            family: Family::Generic,
            commutative,
            associative: OnceLock::new(),
            jordan: OnceLock::new(),
        }
    }

    /// Attaches a unit after verifying `u b_j = b_j u = b_j` for every basis
    /// vector.
    pub fn with_unit(mut self, unit: Vec<Scalar>) -> Result<Self> {
        self.check_coords(&unit)?;
        for j in 0..self.dim {
            let b = vector::unit_vec(self.field, self.dim, j);
            if self.mul_raw(&unit, &b) != b || self.mul_raw(&b, &unit) != b {
                return Err(Error::BadUnit);
            }
        }
        self.unit = Some(unit);
        Ok(self)
    }

    /// Attaches the unit found by [`AlgebraTable::find_unit`], if any.
    pub fn with_found_unit(self) -> Self {
        match self.find_unit() {
            Some(u) => self.with_unit(u.into_coords()).expect("found unit verified"),
            None => self,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("b{}", i + 1),
        }
    }

    pub fn unit(&self) -> Option<Element> {
        self.unit.clone().map(Element)
    }

    pub fn require_unit(&self) -> Result<Element> {
        self.unit().ok_or(Error::NotUnital)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn albert(&self) -> Option<&AlbertData> {
        match &self.family {
            Family::Albert(a) => Some(a),
            _ => None,
        }
    }

    pub fn spin_form(&self) -> Option<&Matrix> {
        match &self.family {
            Family::Spin { form } => Some(form),
            _ => None,
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// `b_i * b_j` as a sparse vector.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero constants in `(i, j, k)` order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        (0..self.dim).flat_map(move |i| {
            (0..self.dim).flat_map(move |j| self.product(i, j).iter().map(move |(k, c)| (i, j, *k, c)))
        })
    }

    /// Structure constants agree (labels, unit and family ignored).
    pub fn same_constants(&self, other: &AlgebraTable) -> bool {
        self.field == other.field && self.dim == other.dim && self.products == other.products
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element(vector::unit_vec(self.field, self.dim, i))
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.field, self.dim)
    }

    pub fn check_coords(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::AlgebraMismatch);
        }
        if x.iter().any(|s| s.field() != self.field) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Product of coordinate vectors without validation.
    pub(crate) fn mul_raw(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zero_vec(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let prod = self.product(i, j);
                if prod.is_empty() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in prod {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Element> {
        self.check_coords(x)?;
        self.check_coords(y)?;
        Ok(Element(self.mul_raw(x, y)))
    }

    /// `(xy)z - x(yz)`
    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Element> {
        let xy_z = self.multiply(&self.multiply(x, y)?, z)?;
        let x_yz = self.multiply(x, &self.multiply(y, z)?)?;
        Ok(xy_z.sub(&x_yz))
    }

    /// Matrix of `y -> x y`; column `j` is `x b_j`.
    pub fn left_mult(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_coords(x)?;
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|j| self.mul_raw(x, &vector::unit_vec(self.field, self.dim, j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_coords(x)?;
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|j| self.mul_raw(&vector::unit_vec(self.field, self.dim, j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Solves `u b_j = b_j = b_j u` for all `j`; the solution is unique when
    /// it exists.
    pub fn find_unit(&self) -> Option<Element> {
        let n = self.dim;
        if n == 0 {
            return None;
        }
        // unknown u_i; row for (side, j, k)
        let mut m = Matrix::zeros(self.field, 2 * n * n, n);
        let mut rhs = vector::zero_vec(self.field, 2 * n * n);
        for j in 0..n {
            for i in 0..n {
                for (k, c) in self.product(i, j) {
                    let r = j * n + k;
                    let v = m.get(r, i) + c;
                    m.set(r, i, v);
                }
                for (k, c) in self.product(j, i) {
                    let r = n * n + j * n + k;
                    let v = m.get(r, i) + c;
                    m.set(r, i, v);
                }
            }
            rhs[j * n + j] = self.field.one();
            rhs[n * n + j * n + j] = self.field.one();
        }
        let u = m.solve(&rhs).ok()??;
        for j in 0..n {
            let b = vector::unit_vec(self.field, n, j);
            if self.mul_raw(&u, &b) != b || self.mul_raw(&b, &u) != b {
                return None;
            }
        }
        Some(Element(u))
    }

    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Element {
        Element((0..self.dim).map(|_| self.field.random(rng)).collect())
    }
}

/// A linear endomorphism of an algebra's underlying space; column `j` is the
/// image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        Ok(LinearMap { matrix })
    }

    /// Map with the given images of the basis vectors.
    pub fn from_images(field: FieldSpec, images: &[Vec<Scalar>]) -> Result<Self> {
        LinearMap::new(Matrix::from_columns(field, images.len(), images)?)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        LinearMap { matrix: Matrix::zeros(field, dim, dim) }
    }

    pub fn identity(field: FieldSpec, dim: usize) -> Self {
        LinearMap { matrix: Matrix::identity(field, dim) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn check_for(&self, table: &AlgebraTable) -> Result<()> {
        if self.dim() != table.dim() {
            return Err(Error::DimensionMismatch { expected: table.dim(), found: self.dim() });
        }
        if self.field() != table.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x).expect("map and vector dimensions agree")
    }

    pub fn image_of_basis(&self, j: usize) -> Vec<Scalar> {
        self.matrix.column(j)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        LinearMap::new(self.matrix.mul(&other.matrix)?)
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(s) }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        LinearMap::new(self.matrix.add(&other.matrix)?)
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.nullspace()
    }

    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.matrix.column(j)).collect();
        Subspace::span(self.field(), self.dim(), &cols).expect("columns fit")
    }

    /// Some preimage of `v`, if any.
    pub fn preimage(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.matrix.solve(v).ok().flatten()
    }
}
