//! Small helpers on coordinate vectors (`&[Scalar]`).

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};

pub fn zero_vec(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            yi.add_mul(a, xi);
        }
    }
}

pub fn scale_vec(a: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|xi| a * xi).collect()
}

pub fn add_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut acc = x.first().map(|s| s.field().zero()).unwrap_or_else(|| FieldSpec::Rationals.zero());
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc.add_mul(a, b);
        }
    }
    acc
}

/// `x^T G y`
pub fn bilinear(g: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let gy = g.mul_vec(y).expect("form and vector dimensions agree");
    let mut acc = g.field().zero();
    for (a, b) in x.iter().zip(&gy) {
        if !a.is_zero() && !b.is_zero() {
            acc.add_mul(a, b);
        }
    }
    acc
}

/// Mixed-radix enumeration of `F_p^n`: the `index`-th vector, least
/// significant coordinate last.
pub fn vector_from_index(field: FieldSpec, n: usize, mut index: u64) -> Vec<Scalar> {
    let p = field.modulus().expect("enumeration needs a finite field");
    let mut v = zero_vec(field, n);
    for slot in v.iter_mut().rev() {
        *slot = field.residue(index % p);
        index /= p;
    }
    v
}

/// Number of projective points of `F_p^n`, saturating.
pub fn projective_count(p: u64, n: usize) -> u128 {
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..n {
        total = total.saturating_add(power);
        power = power.saturating_mul(p as u128);
    }
    total
}

/// The `index`-th projective point of `F_p^n` (first nonzero coordinate 1),
/// ordered by the position of the leading 1 and then by the tail.
pub fn projective_point(field: FieldSpec, n: usize, mut index: u128) -> Vec<Scalar> {
    let p = field.modulus().expect("enumeration needs a finite field") as u128;
    for lead in 0..n {
        let block = p.pow((n - lead - 1) as u32);
        if index < block {
            let tail = vector_from_index(field, n - lead - 1, index as u64);
            let mut v = zero_vec(field, n);
            v[lead] = field.one();
            for (i, x) in tail.into_iter().enumerate() {
                v[lead + 1 + i] = x;
            }
            return v;
        }
        index -= block;
    }
    panic!("projective index out of range")
}
