use rayon::prelude::*;

use super::{AlgebraTable, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Commutative,
    Associative,
    Jordan,
}

impl std::str::FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commutative" => Ok(Identity::Commutative),
            "associative" => Ok(Identity::Associative),
            "jordan" => Ok(Identity::Jordan),
            _ => Err(Error::Parse { line: 0, message: format!("unknown identity `{s}`") }),
        }
    }
}

/// Sparse vector times basis element `j`, accumulated into `out`.
fn acc_times_basis(t: &AlgebraTable, x: &[Scalar], j: usize, out: &mut [Scalar]) {
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (k, c) in t.product(i, j) {
            out[k.to_owned()].add_mul(xi, c);
        }
    }
}

fn dense(t: &AlgebraTable, i: usize, j: usize) -> Vec<Scalar> {
    let mut v = vector::zero_vec(t.field(), t.dim());
    for (k, c) in t.product(i, j) {
        v[*k] = c.clone();
    }
    v
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// The fully linearized Jordan expression
/// `sum_s ((x_s1 x_s2) y) x_s3 - (x_s1 x_s2)(y x_s3)` on basis indices.
fn linearized_jordan(t: &AlgebraTable, xs: [usize; 3], y: usize) -> Vec<Scalar> {
    let n = t.dim();
    let mut total = vector::zero_vec(t.field(), n);
    let mut uy = vector::zero_vec(t.field(), n);
    for perm in PERMS {
        let (a, b, c) = (xs[perm[0]], xs[perm[1]], xs[perm[2]]);
        let u = dense(t, a, b);
        if vector::is_zero_vec(&u) {
            continue;
        }
        uy.iter_mut().for_each(|s| *s = t.field().zero());
        acc_times_basis(t, &u, y, &mut uy);
        acc_times_basis(t, &uy, c, &mut total);
        let yc = dense(t, y, c);
        let u_yc = t.mul_raw(&u, &yc);
        for (s, v) in total.iter_mut().zip(&u_yc) {
            *s -= v;
        }
    }
    total
}

/// `(x^2, y, x)` for concrete elements.
pub fn jordan_defect(t: &AlgebraTable, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    let x2 = t.multiply(x, x)?;
    Ok(t.associator(&x2, y, x)?.into_coords())
}

impl AlgebraTable {
    pub fn check_identity(&self, which: Identity) -> Result<bool> {
        self.check_identity_with_cap(which, DEFAULT_CAP)
    }

    /// Commutativity and associativity are checked on basis pairs and
    /// triples. The Jordan identity is checked through its full
    /// linearization on basis 4-tuples when 6 is invertible; over GF(3) the
    /// linearization loses information, so the identity is instead checked
    /// on every element `x` against every basis `y`, provided `3^dim` stays
    /// within `cap`.
    pub fn check_identity_with_cap(&self, which: Identity, cap: u64) -> Result<bool> {
        match which {
            Identity::Commutative => Ok(self.commutative),
            Identity::Associative => Ok(*self.associative.get_or_init(|| self.compute_associative())),
            Identity::Jordan => {
                if !self.commutative {
                    return Ok(false);
                }
                self.jordan.get_or_init(|| self.compute_jordan(cap)).clone()
            }
        }
    }

    fn compute_associative(&self) -> bool {
        let n = self.dim;
        (0..n).into_par_iter().all(|i| {
            let mut lhs = vector::zero_vec(self.field, n);
            let mut rhs = vector::zero_vec(self.field, n);
            for j in 0..n {
                let bij = dense(self, i, j);
                for k in 0..n {
                    lhs.iter_mut().for_each(|s| *s = self.field.zero());
                    acc_times_basis(self, &bij, k, &mut lhs);
                    let bjk = dense(self, j, k);
                    rhs.iter_mut().for_each(|s| *s = self.field.zero());
                    for (m, c) in bjk.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (l, d) in self.product(i, m) {
                            rhs[*l].add_mul(c, d);
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            true
        })
    }

    fn compute_jordan(&self, cap: u64) -> Result<bool> {
        let n = self.dim;
        if self.field.char_above_three() {
            let triples: Vec<[usize; 3]> = (0..n)
                .flat_map(|a| (a..n).flat_map(move |b| (b..n).map(move |c| [a, b, c])))
                .collect();
            return Ok(triples
                .par_iter()
                .all(|&xs| (0..n).all(|y| vector::is_zero_vec(&linearized_jordan(self, xs, y)))));
        }
        let p = self.field.modulus().expect("finite when characteristic is 3");
        let count = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if count > cap as u128 {
            return Err(Error::Undecidable(format!(
                "characteristic {p}: exhaustive Jordan check needs {count} elements, cap {cap}"
            )));
        }
        Ok((0..count as u64).into_par_iter().all(|idx| {
            let x = vector::vector_from_index(self.field, n, idx);
            let x2 = self.mul_raw(&x, &x);
            (0..n).all(|y| {
                let b = vector::unit_vec(self.field, n, y);
                let lhs = self.mul_raw(&self.mul_raw(&x2, &b), &x);
                let rhs = self.mul_raw(&x2, &self.mul_raw(&b, &x));
                lhs == rhs
            })
        }))
    }
}
