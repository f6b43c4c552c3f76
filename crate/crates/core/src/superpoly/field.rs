//! Exact scalars: arbitrary-precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues satisfy `0 <= value < modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl FieldElem {
    pub fn from_int(n: i64, characteristic: u64) -> Self {
        if characteristic == 0 {
            FieldElem::Rational(BigRational::from_integer(BigInt::from(n)))
        } else {
            let p = characteristic as i128;
            let v = (n as i128).rem_euclid(p) as u64;
            FieldElem::Modular { value: v, modulus: characteristic }
        }
    }

    pub fn zero(characteristic: u64) -> Self {
        Self::from_int(0, characteristic)
    }

    pub fn one(characteristic: u64) -> Self {
        Self::from_int(1, characteristic)
    }

    /// Builds `num/den` in the given characteristic; `den` must be invertible.
    pub fn from_ratio(num: &BigInt, den: &BigInt, characteristic: u64) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Unsupported("zero denominator".into()));
        }
        if characteristic == 0 {
            return Ok(FieldElem::Rational(BigRational::new(num.clone(), den.clone())));
        }
        let p = BigInt::from(characteristic);
        let n = num.mod_floor(&p).to_u64().unwrap();
        let d = den.mod_floor(&p).to_u64().unwrap();
        if d == 0 {
            return Err(Error::Unsupported(format!(
                "denominator {den} is not invertible modulo {characteristic}"
            )));
        }
        let n = FieldElem::Modular { value: n, modulus: characteristic };
        let d = FieldElem::Modular { value: d, modulus: characteristic };
        Ok(&n * &d.inv())
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldElem::Rational(_) => 0,
            FieldElem::Modular { modulus, .. } => *modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_one(),
            FieldElem::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldElem::Rational(r) => FieldElem::Rational(r.recip()),
            FieldElem::Modular { value, modulus } => FieldElem::Modular {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// True when the printed form would start with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_negative(),
            FieldElem::Modular { .. } => false,
        }
    }

    pub fn negate_sign(&self, negative: bool) -> Self {
        if negative {
            -self
        } else {
            self.clone()
        }
    }

    /// Parses an integer or `n/d` literal into the given characteristic.
    pub fn parse(s: &str, characteristic: u64) -> Result<Self> {
        let bad = || Error::Parse { pos: 0, msg: format!("bad coefficient `{s}`") };
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (
                BigInt::from_str(a.trim()).map_err(|_| bad())?,
                BigInt::from_str(b.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s.trim()).map_err(|_| bad())?, BigInt::one()),
        };
        Self::from_ratio(&num, &den, characteristic)
    }
}

fn check_same(a: &FieldElem, b: &FieldElem) -> u64 {
    let (ca, cb) = (a.characteristic(), b.characteristic());
    assert_eq!(ca, cb, "mixing scalars of characteristic {ca} and {cb}");
    ca
}

impl<'a> Add for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &'a FieldElem) -> FieldElem {
        check_same(self, rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Modular { value: a, modulus }, FieldElem::Modular { value: b, .. }) => {
                FieldElem::Modular { value: (a + b) % modulus, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &'a FieldElem) -> FieldElem {
        check_same(self, rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a - b),
            (FieldElem::Modular { value: a, modulus }, FieldElem::Modular { value: b, .. }) => {
                FieldElem::Modular { value: (a + modulus - b) % modulus, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        check_same(self, rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Modular { value: a, modulus }, FieldElem::Modular { value: b, .. }) => {
                FieldElem::Modular {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Modular { value, modulus } => {
                FieldElem::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElem::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let a = FieldElem::parse("6/-4", 0).unwrap();
        assert_eq!(a.to_string(), "-3/2");
        let b = FieldElem::parse("3/2", 0).unwrap();
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn modular_arithmetic() {
        let a = FieldElem::from_int(-1, 5);
        assert_eq!(a, FieldElem::Modular { value: 4, modulus: 5 });
        assert!((&a * &a).is_one());
        let third = FieldElem::parse("1/3", 5).unwrap();
        assert_eq!((&third * &FieldElem::from_int(3, 5)), FieldElem::one(5));
        assert!(FieldElem::parse("1/5", 5).is_err());
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 7, 101] {
            for v in 1..p.min(20) {
                let x = FieldElem::from_int(v as i64, p);
                assert!((&x * &x.inv()).is_one());
            }
        }
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
    }
}
