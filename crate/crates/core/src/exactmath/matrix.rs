use std::fmt;

use super::echelon::EchelonBuilder;
use super::scalar::{FieldSpec, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch { expected: ncols, found: row.len() });
            }
            if row.iter().any(|x| x.field() != field) {
                return Err(Error::FieldMismatch);
            }
            data.extend(row);
        }
        Ok(Matrix { field, rows: nrows, cols: ncols, data })
    }

    /// Convenience for tests and literals.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, rows).expect("rectangular literal")
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, nrows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Matrix::zeros(field, nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::DimensionMismatch { expected: nrows, found: col.len() });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn diagonal(field: FieldSpec, entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(field, entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "matrix entries share one field");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    o.add_mul(a, x);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: rhs.rows * rhs.cols });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn echelon(&self) -> EchelonBuilder {
        let mut b = EchelonBuilder::new(self.field, self.cols);
        for i in 0..self.rows {
            b.push_dense(self.row(i));
        }
        b
    }

    /// Reduced row-echelon form. The result is unique, so the elimination
    /// order does not affect it.
    pub fn rref(&self) -> Rref {
        let b = self.echelon();
        let pivots = b.pivots();
        let mut rows = b.dense_rows();
        rows.resize(self.rows, vec![self.field.zero(); self.cols]);
        let mut matrix = Matrix::zeros(self.field, self.rows, self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                matrix.data[i * self.cols + j] = x;
            }
        }
        Rref { matrix, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// `{v : self * v = 0}` in canonical form.
    pub fn nullspace(&self) -> Subspace {
        let basis = self.echelon().nullspace_basis();
        Subspace::span(self.field, self.cols, &basis).expect("kernel vectors fit the ambient space")
    }

    /// One solution of `self * v = b` with free variables set to zero, or
    /// `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut builder = EchelonBuilder::new(self.field, self.cols + 1);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(b[i].clone());
            builder.push_dense(&row);
        }
        let pivots = builder.pivots();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in builder.dense_rows().iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![self.field.zero(); n];
            e[j] = self.field.one();
            cols.push(self.solve(&e).ok()??);
        }
        Matrix::from_columns(self.field, n, &cols).ok()
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }
}

impl fmt::Display for Matrix {
    /// Row-major, whitespace separated, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let q = FieldSpec::Rationals;
        let id = Matrix::identity(q, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let f3 = gf(3);
        let m = Matrix::from_i64(f3, &[&[1, 2], &[2, 1]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(f3, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);

        let z = Matrix::zeros(q, 2, 3);
        assert_eq!(z.rref().matrix, z);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn nullspace_examples() {
        let q = FieldSpec::Rationals;
        assert_eq!(Matrix::identity(q, 3).nullspace().dim(), 0);
        assert_eq!(Matrix::zeros(q, 2, 2).nullspace().dim(), 2);
        let ns = Matrix::from_i64(q, &[&[1, 1]]).nullspace();
        assert_eq!(ns.basis(), &[vec![q.from_i64(1), q.from_i64(-1)]]);
    }

    #[test]
    fn solve_examples() {
        let q = FieldSpec::Rationals;
        let b = vec![q.from_i64(3), q.from_ratio(-1, 2).unwrap()];
        assert_eq!(Matrix::identity(q, 2).solve(&b).unwrap(), Some(b.clone()));
        let m = Matrix::from_i64(q, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&[q.from_i64(1), q.from_i64(2)]).unwrap(), None);
        let f5 = gf(5);
        let m = Matrix::from_i64(f5, &[&[2]]);
        assert_eq!(m.solve(&[f5.from_i64(3)]).unwrap(), Some(vec![f5.from_i64(4)]));
        assert!(m.solve(&[]).is_err());
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let q = FieldSpec::Rationals;
        let m = Matrix::from_i64(q, &[&[1, 1, 0]]);
        assert_eq!(m.solve(&[q.from_i64(5)]).unwrap(), Some(vec![q.from_i64(5), q.zero(), q.zero()]));
    }

    #[test]
    fn inverse_round_trip() {
        let f7 = gf(7);
        let m = Matrix::from_i64(f7, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f7, 2));
        assert!(Matrix::from_i64(f7, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
