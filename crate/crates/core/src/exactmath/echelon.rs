//! Incremental, fully reduced row echelon form over sparse rows.
//!
//! Rows are fed one at a time; the builder keeps a reduced echelon basis of
//! their span. Because stored rows are fully reduced, eliminating a new row
//! only ever introduces entries in non-pivot columns, so a single pass over
//! the incoming row's support suffices. This keeps the Leibniz systems of the
//! 27-dimensional algebras (hundreds of unknowns, thousands of equations)
//! tractable over ℚ.

use super::scalar::{FieldSpec, Scalar};

pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    field: FieldSpec,
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
    scratch: Vec<Scalar>,
    touched: Vec<usize>,
    marked: Vec<bool>,
}

fn find(row: &SparseRow, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `target - coeff * other`, both sorted by column.
fn sub_scaled(target: &SparseRow, coeff: &Scalar, other: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < other.len() {
        let take_target = j >= other.len() || (i < target.len() && target[i].0 < other[j].0);
        let take_other = i >= target.len() || (j < other.len() && other[j].0 < target[i].0);
        if take_target {
            out.push(target[i].clone());
            i += 1;
        } else if take_other {
            out.push((other[j].0, -(coeff * &other[j].1)));
            j += 1;
        } else {
            let mut v = target[i].1.clone();
            v.sub_mul(coeff, &other[j].1);
            if !v.is_zero() {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl EchelonBuilder {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        EchelonBuilder {
            field,
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
            scratch: vec![field.zero(); cols],
            touched: Vec::new(),
            marked: vec![false; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn touch(&mut self, c: usize) {
        if !self.marked[c] {
            self.marked[c] = true;
            self.touched.push(c);
        }
    }

    /// Reduces `row` against the stored basis, leaving the remainder in the
    /// scratch buffer; returns the remainder as a sorted sparse row.
    fn remainder(&mut self, row: &[(usize, Scalar)]) -> SparseRow {
        for (c, v) in row {
            if v.is_zero() {
                continue;
            }
            self.scratch[*c] += v;
            self.touch(*c);
        }
        for (c, _) in row {
            let Some(r) = self.pivot_row[*c] else { continue };
            let coeff = self.scratch[*c].clone();
            if coeff.is_zero() {
                continue;
            }
            let pivot = std::mem::take(&mut self.rows[r]);
            for (k, val) in &pivot {
                self.scratch[*k].sub_mul(&coeff, val);
                self.touch(*k);
            }
            self.rows[r] = pivot;
        }
        let mut touched = std::mem::take(&mut self.touched);
        touched.sort_unstable();
        let zero = self.field.zero();
        let mut out = Vec::new();
        for &c in &touched {
            self.marked[c] = false;
            let v = std::mem::replace(&mut self.scratch[c], zero.clone());
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        touched.clear();
        self.touched = touched;
        out
    }

    /// Adds a row given as `(column, value)` pairs (any order, duplicates
    /// summed). Returns whether the rank grew.
    pub fn push(&mut self, row: &[(usize, Scalar)]) -> bool {
        let rem = self.remainder(row);
        let Some((pivot, lead)) = rem.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        let new_row: SparseRow = rem.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        for r in 0..self.rows.len() {
            if let Some(a) = find(&self.rows[r], pivot).cloned() {
                self.rows[r] = sub_scaled(&self.rows[r], &a, &new_row);
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(new_row);
        true
    }

    pub fn push_dense(&mut self, row: &[Scalar]) -> bool {
        let sparse: SparseRow =
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect();
        self.push(&sparse)
    }

    /// Remainder of `v` modulo the current row space, as a dense vector.
    pub fn reduce_dense(&mut self, v: &[Scalar]) -> Vec<Scalar> {
        let sparse: SparseRow =
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect();
        let rem = self.remainder(&sparse);
        let mut out = vec![self.field.zero(); self.cols];
        for (c, x) in rem {
            out[c] = x;
        }
        out
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// The reduced rows ordered by pivot column, densified.
    pub fn dense_rows(&self) -> Vec<Vec<Scalar>> {
        self.pivots()
            .into_iter()
            .map(|c| {
                let mut out = vec![self.field.zero(); self.cols];
                for (k, v) in &self.rows[self.pivot_row[c].unwrap()] {
                    out[*k] = v.clone();
                }
                out
            })
            .collect()
    }

    /// Standard kernel basis of the row space: one vector per free column
    /// `f`, equal to `e_f` minus the pivot-column entries of column `f`.
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        let free: Vec<usize> = (0..self.cols).filter(|&c| self.pivot_row[c].is_none()).collect();
        let mut index_of_free = vec![usize::MAX; self.cols];
        for (i, &f) in free.iter().enumerate() {
            index_of_free[f] = i;
        }
        let mut basis: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                v
            })
            .collect();
        for (p, r) in self.pivot_row.iter().enumerate() {
            let Some(r) = r else { continue };
            for (c, v) in &self.rows[*r] {
                if *c != p {
                    basis[index_of_free[*c]][p] = -v;
                }
            }
        }
        basis
    }
}
