use super::matrix::Matrix;
use super::scalar::Scalar;
use super::vector::{axpy, bilinear};
use crate::error::{Error, Result};

/// Orthogonal basis of a symmetric bilinear form: `P^T G P = D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonalization {
    /// Columns are the new basis vectors.
    pub p: Matrix,
    pub d: Vec<Scalar>,
}

/// Diagonalizes a symmetric form by repeated orthogonal projection.
///
/// At each step the pivot is the first remaining vector `b` with
/// `f(b, b) != 0`; failing that, `u + v` for the first pair with
/// `f(u, v) != 0` (then `u` leaves the pool). Every other remaining vector
/// `b` is replaced by `b - f(b, w)/f(w, w) w`. When the form vanishes on the
/// pool, the pool is appended with zero diagonal entries.
pub fn diagonalize_symmetric_form(g: &Matrix) -> Result<Diagonalization> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let field = g.field();
    let n = g.rows();
    let mut pool: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            e
        })
        .collect();
    let mut chosen = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);

    while !pool.is_empty() {
        let single = pool.iter().position(|b| !bilinear(g, b, b).is_zero());
        let (w, remove) = match single {
            Some(i) => (pool[i].clone(), i),
            None => {
                let mut pair = None;
                'outer: for i in 0..pool.len() {
                    for j in i + 1..pool.len() {
                        if !bilinear(g, &pool[i], &pool[j]).is_zero() {
                            pair = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match pair {
                    Some((i, j)) => {
                        let mut w = pool[i].clone();
                        axpy(&mut w, &field.one(), &pool[j]);
                        (w, i)
                    }
                    None => {
                        for b in pool.drain(..) {
                            chosen.push(b);
                            diag.push(field.zero());
                        }
                        break;
                    }
                }
            }
        };
        pool.remove(remove);
        let fww = bilinear(g, &w, &w);
        let inv = fww.inv().expect("pivot has nonzero norm");
        for b in pool.iter_mut() {
            let coeff = &bilinear(g, b, &w) * &inv;
            if !coeff.is_zero() {
                axpy(b, &-coeff, &w);
            }
        }
        chosen.push(w);
        diag.push(fww);
    }
    let p = Matrix::from_columns(field, n, &chosen)?;
    Ok(Diagonalization { p, d: diag })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FieldSpec;

    fn check(g: &Matrix) -> Diagonalization {
        let dz = diagonalize_symmetric_form(g).unwrap();
        let lhs = dz.p.transpose().mul(g).unwrap().mul(&dz.p).unwrap();
        assert_eq!(lhs, Matrix::diagonal(g.field(), &dz.d));
        assert_eq!(dz.p.rank(), g.rows());
        assert_eq!(dz.d.iter().filter(|x| !x.is_zero()).count(), g.rank());
        dz
    }

    #[test]
    fn identity_form_is_already_diagonal() {
        let q = FieldSpec::Rationals;
        let dz = check(&Matrix::identity(q, 2));
        assert_eq!(dz.p, Matrix::identity(q, 2));
        assert_eq!(dz.d, vec![q.one(), q.one()]);
    }

    #[test]
    fn hyperbolic_plane_over_gf3() {
        let f = FieldSpec::prime(3).unwrap();
        let dz = check(&Matrix::from_i64(f, &[&[0, 1], &[1, 0]]));
        assert_eq!(dz.d, vec![f.from_i64(2), f.from_i64(1)]);
        assert_eq!(dz.p, Matrix::from_i64(f, &[&[1, 1], &[1, 2]]));
    }

    #[test]
    fn hyperbolic_plane_over_q() {
        let q = FieldSpec::Rationals;
        let dz = check(&Matrix::from_i64(q, &[&[0, 1], &[1, 0]]));
        // (1,1) then (-1/2, 1/2): same square classes as diag(2, -2).
        assert_eq!(dz.d, vec![q.from_i64(2), q.from_ratio(-1, 2).unwrap()]);
        assert!((&dz.d[1] * &q.from_i64(-2)).is_square());
    }

    #[test]
    fn degenerate_and_rejects_asymmetric() {
        let q = FieldSpec::Rationals;
        check(&Matrix::from_i64(q, &[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]));
        check(&Matrix::zeros(q, 3, 3));
        let bad = Matrix::from_i64(q, &[&[0, 1], &[2, 0]]);
        assert_eq!(diagonalize_symmetric_form(&bad), Err(Error::NotSymmetric));
    }
}
