//! Exact field elements: arbitrary-precision rationals and residues modulo a
//! prime.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// A prime modulus `p` with `2 < p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn get(self) -> u64 {
        self.0
    }
}

/// The scalar field an object lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(Modulus),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// GF(p). Characteristic 2 is rejected outright since every construction
    /// here divides by 2. Characteristic 3 is admitted; operations whose
    /// correctness needs 6 to be invertible fall back to enumeration there.
    pub fn prime(p: u64) -> Result<Self> {
        if p <= 2 || p >= (1 << 32) {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(Modulus(p)))
    }

    /// 0 for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(m) => m.0,
        }
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(m) => Some(m.0),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// True when 2 and 3 are both invertible.
    pub fn char_above_three(self) -> bool {
        self.characteristic() == 0 || self.characteristic() > 3
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::Prime(m) => {
                let p = m.0 as i64;
                Scalar(Repr::Mod { value: n.rem_euclid(p) as u64, modulus: m.0 })
            }
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar(Repr::Rat(BigRational::from_integer(n.clone()))),
            FieldSpec::Prime(m) => {
                let p = BigInt::from(m.0);
                let r = ((n % &p) + &p) % &p;
                let (_, digits) = r.to_u64_digits();
                Scalar(Repr::Mod { value: digits.first().copied().unwrap_or(0), modulus: m.0 })
            }
        }
    }

    /// `num / den` in this field.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// The `index`-th element in the canonical enumeration of GF(p)
    /// (the residue `index`).
    pub fn residue(self, index: u64) -> Scalar {
        match self {
            FieldSpec::Rationals => self.from_i64(index as i64),
            FieldSpec::Prime(m) => Scalar(Repr::Mod { value: index % m.0, modulus: m.0 }),
        }
    }

    /// All elements of a finite field in residue order; `None` over ℚ.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(|i| self.residue(i)).collect())
    }

    /// Uniform over GF(p); integers in `[-3, 3]` over ℚ.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Rationals => self.from_i64(rng.gen_range(-3..=3)),
            FieldSpec::Prime(m) => self.residue(rng.gen_range(0..m.0)),
        }
    }

    /// Parses `n`, `p/q` (ℚ) or an integer residue (GF(p)); negative
    /// integers and fractions are reduced into GF(p) as well.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let bad = || Error::Parse { line: 0, message: format!("bad scalar `{text}`") };
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let num = self.from_bigint(&num);
        match den {
            None => Ok(num),
            Some(d) => {
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                num.checked_div(&self.from_bigint(&d)).map_err(|_| bad())
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(m) => write!(f, "GF:{}", m.0),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    /// `Q` or `GF:p` (also `GF p`, `GF(p)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = s
            .strip_prefix("GF")
            .ok_or_else(|| Error::Parse { line: 0, message: format!("bad field `{s}`") })?;
        let digits = rest.trim_matches(|c: char| c == ':' || c == '(' || c == ')' || c.is_whitespace());
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse { line: 0, message: format!("bad field `{s}`") })?;
        FieldSpec::prime(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

/// An element of ℚ (lowest terms, positive denominator) or of GF(p)
/// (residue in `[0, p)`).
///
/// The arithmetic operators panic when the operands come from different
/// fields; use [`scalar_arith`] or the `checked_*` methods for a fallible
/// version.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic with explicit error reporting.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => return a.checked_div(b),
    })
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Tonelli–Shanks; `a` must be a nonzero quadratic residue mod odd prime `p`.
fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    r
}

fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rat(_) => FieldSpec::Rationals,
            Repr::Mod { modulus, .. } => FieldSpec::Prime(Modulus(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod { value, .. } => *value == 1,
        }
    }

    /// The residue in `[0, p)`, over GF(p).
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Mod { value, .. } => Some(*value),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            Repr::Mod { .. } => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(r.recip())),
            Repr::Mod { value, modulus } => {
                Scalar(Repr::Mod { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus })
            }
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if self.field() != rhs.field() {
            return Err(Error::FieldMismatch);
        }
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(num_traits::pow(r.clone(), exp as usize))),
            Repr::Mod { value, modulus } => {
                Scalar(Repr::Mod { value: pow_mod(*value, exp as u64, *modulus), modulus: *modulus })
            }
        }
    }

    /// Whether some field element squares to `self`; 0 counts as a square.
    pub fn is_square(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => {
                perfect_sqrt(r.numer()).is_some() && perfect_sqrt(r.denom()).is_some()
            }
            Repr::Mod { value, modulus } => {
                *value == 0 || pow_mod(*value, (modulus - 1) / 2, *modulus) == 1
            }
        }
    }

    /// A square root when one exists: the smaller residue of the two roots
    /// over GF(p), the nonnegative root over ℚ.
    pub fn sqrt(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Rat(r) => {
                let n = perfect_sqrt(r.numer())?;
                let d = perfect_sqrt(r.denom())?;
                Some(Scalar(Repr::Rat(BigRational::new(n, d))))
            }
            Repr::Mod { value, modulus } => {
                if *value == 0 {
                    return Some(self.clone());
                }
                if !self.is_square() {
                    return None;
                }
                let r = tonelli_shanks(*value, *modulus);
                let r = r.min(modulus - r);
                Some(Scalar(Repr::Mod { value: r, modulus: *modulus }))
            }
        }
    }

    /// Sign over ℚ (`-1`, `0`, `1`); `None` over GF(p).
    pub fn signum(&self) -> Option<i32> {
        match &self.0 {
            Repr::Rat(r) => Some(match r.numer().sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            }),
            Repr::Mod { .. } => None,
        }
    }

    fn mismatch() -> ! {
        panic!("scalar arithmetic across different fields")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                Scalar(Repr::Mod { value: (a + b) % p, modulus: *p })
            }
            _ => Scalar::mismatch(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a - b)),
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                Scalar(Repr::Mod { value: (a + p - b) % p, modulus: *p })
            }
            _ => Scalar::mismatch(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                Scalar(Repr::Mod { value: a * b % p, modulus: *p })
            }
            _ => Scalar::mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rat(a) => Scalar(Repr::Rat(-a)),
            Repr::Mod { value, modulus } => {
                Scalar(Repr::Mod { value: (modulus - value) % modulus, modulus: *modulus })
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => *a += b,
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                *a = (*a + b) % *p
            }
            _ => Scalar::mismatch(),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => *a -= b,
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                *a = (*a + *p - b) % *p
            }
            _ => Scalar::mismatch(),
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        match (&mut self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => *a *= b,
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                *a = *a * b % *p
            }
            _ => Scalar::mismatch(),
        }
    }
}

impl Scalar {
    /// `self += a * b`, the inner loop of every elimination.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut self.0, &a.0, &b.0) {
            (Repr::Mod { value: s, modulus: p }, Repr::Mod { value: x, .. }, Repr::Mod { value: y, .. }) => {
                *s = (*s + x * y % *p) % *p
            }
            _ => *self += &(a * b),
        }
    }

    /// `self -= a * b`.
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut self.0, &a.0, &b.0) {
            (Repr::Mod { value: s, modulus: p }, Repr::Mod { value: x, .. }, Repr::Mod { value: y, .. }) => {
                *s = (*s + *p - x * y % *p) % *p
            }
            _ => *self -= &(a * b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn residue_and_rational_arithmetic() {
        let f5 = gf(5);
        assert_eq!(&f5.from_i64(3) * &f5.from_i64(4), f5.from_i64(2));
        let q = FieldSpec::Rationals;
        let sum = &q.from_ratio(1, 2).unwrap() + &q.from_ratio(1, 3).unwrap();
        assert_eq!(sum, q.from_ratio(5, 6).unwrap());
        let f7 = gf(7);
        assert_eq!(f7.from_i64(3).checked_div(&f7.from_i64(5)).unwrap(), f7.from_i64(2));
    }

    #[test]
    fn arith_errors() {
        let f5 = gf(5);
        let q = FieldSpec::Rationals;
        assert_eq!(scalar_arith(&f5.one(), &q.one(), ArithOp::Add), Err(Error::FieldMismatch));
        assert_eq!(scalar_arith(&f5.one(), &f5.zero(), ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(q.one().checked_div(&q.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_construction() {
        assert!(matches!(FieldSpec::prime(2), Err(Error::UnsupportedCharacteristic(2))));
        assert!(matches!(FieldSpec::prime(9), Err(Error::NotPrime(9))));
        assert!(FieldSpec::prime(3).is_ok());
        assert!(!gf(3).char_above_three());
        assert!(gf(5).char_above_three());
        assert_eq!("GF:7".parse::<FieldSpec>().unwrap(), gf(7));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
    }

    #[test]
    fn squares() {
        assert!(!gf(3).from_i64(2).is_square());
        assert!(gf(5).from_i64(4).is_square());
        assert!(!FieldSpec::Rationals.from_i64(-1).is_square());
        assert!(gf(7).zero().is_square());
        assert_eq!(gf(5).from_i64(4).sqrt(), Some(gf(5).from_i64(2)));
        let q = FieldSpec::Rationals;
        assert_eq!(q.from_ratio(9, 4).unwrap().sqrt(), Some(q.from_ratio(3, 2).unwrap()));
        assert_eq!(gf(7).from_i64(3).sqrt(), None);
        assert!(!q.from_ratio(2, 9).unwrap().is_square());
    }

    #[test]
    fn tonelli_shanks_agrees_with_brute_force() {
        for p in [5u64, 7, 11, 13, 17, 41, 97, 113] {
            let f = gf(p);
            for a in 0..p {
                let s = f.residue(a);
                let roots: Vec<u64> = (0..p).filter(|r| r * r % p == a).collect();
                match s.sqrt() {
                    Some(r) => assert_eq!(r.residue(), roots.first().copied(), "p={p} a={a}"),
                    None => assert!(roots.is_empty()),
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("-6/4").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse("7").unwrap().to_string(), "7");
        assert_eq!(gf(5).parse("-1").unwrap().to_string(), "4");
        assert_eq!(gf(7).parse("1/2").unwrap().to_string(), "4");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }
}
