use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    /// Integers modulo the given prime.
    Modular(u64),
}

impl ScalarKind {
    /// Characteristic of the field: 0 for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            ScalarKind::Rational => 0,
            ScalarKind::Modular(p) => p,
        }
    }

    /// Rejects prime fields whose characteristic does not exceed `order`.
    pub fn check_characteristic(self, order: usize) -> Result<()> {
        match self {
            ScalarKind::Rational => Ok(()),
            ScalarKind::Modular(p) if p > order as u64 => Ok(()),
            ScalarKind::Modular(p) => Err(Error::CharacteristicTooSmall { modulus: p, order }),
        }
    }
}

/// An exact field element: a reduced rational or a residue modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldScalar {
    pub fn int(v: i64) -> Self {
        FieldScalar::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        FieldScalar::Rational(BigRational::from_integer(v))
    }

    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldScalar::Rational(BigRational::new(
            num.into(),
            den.into(),
        )))
    }

    pub fn from_rational(r: BigRational) -> Self {
        FieldScalar::Rational(r)
    }

    /// `value mod modulus`; the modulus must be prime.
    pub fn residue(value: i64, modulus: u64) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::InvalidModulus(modulus));
        }
        let v = (value as i128).rem_euclid(modulus as i128) as u64;
        Ok(FieldScalar::Residue { value: v, modulus })
    }

    /// The image of an integer in the field of kind `kind`.
    pub fn integer_in(kind: ScalarKind, v: i64) -> Self {
        match kind {
            ScalarKind::Rational => FieldScalar::int(v),
            ScalarKind::Modular(p) => FieldScalar::Residue {
                value: (v as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            FieldScalar::Rational(_) => ScalarKind::Rational,
            FieldScalar::Residue { modulus, .. } => ScalarKind::Modular(*modulus),
        }
    }

    pub fn zero_like(&self) -> Self {
        FieldScalar::integer_in(self.kind(), 0)
    }

    pub fn one_like(&self) -> Self {
        FieldScalar::integer_in(self.kind(), 1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldScalar::Rational(r) => Some(r),
            FieldScalar::Residue { .. } => None,
        }
    }

    /// Integer value of a rational scalar with denominator 1.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            FieldScalar::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    fn same_kind(&self, other: &Self) -> Result<()> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(Error::KindMismatch(format!(
                "{:?} vs {:?}",
                self.kind(),
                other.kind()
            )))
        }
    }

    fn residue_op(&self, other: &Self, f: impl Fn(u128, u128, u128) -> u128) -> Result<Self> {
        self.same_kind(other)?;
        match (self, other) {
            (FieldScalar::Residue { value: a, modulus }, FieldScalar::Residue { value: b, .. }) => {
                Ok(FieldScalar::Residue {
                    value: f(*a as u128, *b as u128, *modulus as u128) as u64,
                    modulus: *modulus,
                })
            }
            _ => unreachable!("kinds checked"),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => {
                Ok(FieldScalar::Rational(a + b))
            }
            _ => self.residue_op(other, |a, b, p| (a + b) % p),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => {
                Ok(FieldScalar::Rational(a - b))
            }
            _ => self.residue_op(other, |a, b, p| (a + p - b) % p),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => {
                Ok(FieldScalar::Rational(a * b))
            }
            _ => self.residue_op(other, |a, b, p| (a * b) % p),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Residue { value, modulus } => FieldScalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldScalar::Rational(a) => Ok(FieldScalar::Rational(a.recip())),
            FieldScalar::Residue { value, modulus } => {
                // Fermat: v^(p-2)
                Ok(FieldScalar::Residue {
                    value: pow_mod(*value, modulus - 2, *modulus),
                    modulus: *modulus,
                })
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same kind");
            }
            base = base.mul(&base).expect("same kind");
            exp >>= 1;
        }
        acc
    }

    /// Multiplies by a machine integer embedded in the same field.
    pub fn scale(&self, k: i64) -> Self {
        self.mul(&FieldScalar::integer_in(self.kind(), k))
            .expect("same kind")
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl From<i64> for FieldScalar {
    fn from(v: i64) -> Self {
        FieldScalar::int(v)
    }
}

impl From<u8> for FieldScalar {
    fn from(v: u8) -> Self {
        FieldScalar::int(v as i64)
    }
}

impl From<BigInt> for FieldScalar {
    fn from(v: BigInt) -> Self {
        FieldScalar::from_bigint(v)
    }
}

impl From<BigRational> for FieldScalar {
    fn from(v: BigRational) -> Self {
        FieldScalar::from_rational(v)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            FieldScalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            FieldScalar::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl FromStr for FieldScalar {
    type Err = Error;

    /// Accepts `"p"`, `"p/q"` and `"v mod p"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((v, p)) = s.split_once(" mod ") {
            let v: i64 = v.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            let p: u64 = p.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            return FieldScalar::residue(v, p);
        }
        parse_rational(s).map(FieldScalar::Rational)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    FieldScalar::Rational(r.clone()).to_string()
}

/// Least common multiple of the denominators of a rational slice.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Small helper for tests and callers holding machine integers.
pub fn rational_to_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let half = FieldScalar::ratio(1, 2).unwrap();
        let third = FieldScalar::ratio(1, 3).unwrap();
        assert_eq!(half.add(&third).unwrap(), FieldScalar::ratio(5, 6).unwrap());
        assert_eq!(half.inv().unwrap(), FieldScalar::int(2));
        assert_eq!(FieldScalar::ratio(2, -4).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn residue_arithmetic() {
        let a = FieldScalar::residue(3, 7).unwrap();
        let b = FieldScalar::residue(5, 7).unwrap();
        assert_eq!(a.mul(&b).unwrap(), FieldScalar::residue(1, 7).unwrap());
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!(a.sub(&b).unwrap().to_string(), "5 mod 7");
        assert_eq!(FieldScalar::residue(-1, 7).unwrap().to_string(), "6 mod 7");
    }

    #[test]
    fn errors() {
        let zero = FieldScalar::int(0);
        assert_eq!(FieldScalar::int(1).div(&zero), Err(Error::DivisionByZero));
        let r = FieldScalar::residue(1, 5).unwrap();
        assert!(matches!(
            r.add(&FieldScalar::int(1)),
            Err(Error::KindMismatch(_))
        ));
        let s = FieldScalar::residue(1, 7).unwrap();
        assert!(matches!(r.mul(&s), Err(Error::KindMismatch(_))));
        assert_eq!(FieldScalar::residue(1, 9), Err(Error::InvalidModulus(9)));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-3", "5/6", "-7/2", "4 mod 11"] {
            let x: FieldScalar = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert_eq!("4/2".parse::<FieldScalar>().unwrap().to_string(), "2");
        assert!("1/0".parse::<FieldScalar>().is_err());
        assert!("x".parse::<FieldScalar>().is_err());
    }

    #[test]
    fn characteristic_guard() {
        assert!(ScalarKind::Modular(7).check_characteristic(7).is_err());
        assert!(ScalarKind::Modular(11).check_characteristic(7).is_ok());
        assert!(ScalarKind::Rational.check_characteristic(1000).is_ok());
    }
}
