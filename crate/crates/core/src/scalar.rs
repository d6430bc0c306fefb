//! Exact field elements over Q and GF(p).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field of every object in a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Builds a prime field, rejecting composite or out-of-range moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::Parse(format!("characteristic {p} is not a supported prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Modular { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = *p as i128;
                let v = ((n as i128 % p) + p) % p;
                Scalar::Modular { value: v as u64, modulus: p as u64 }
            }
        }
    }

    /// Parses `"3/2"`, `"-1"`, `"0"`; over GF(p) a denominator is inverted mod p.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad scalar {text:?}")))?;
        let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad scalar {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = BigInt::from(*p);
                    (((x % &m) + &m) % &m).to_u64().expect("reduced below modulus")
                };
                let n = Scalar::Modular { value: reduce(&num), modulus: *p };
                let d = Scalar::Modular { value: reduce(&den), modulus: *p };
                if d.is_zero() {
                    return Err(Error::Parse(format!("denominator of {text:?} vanishes mod {p}")));
                }
                Ok(&n / &d)
            }
        }
    }

    /// Matches the JSON field description: `{"kind": "Q"}` or `{"kind": "GF", "p": 2}`.
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(p) => format!("GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of Q (arbitrary precision, normalized) or of GF(p) (canonical representative).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => None,
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Modular { value: 0, .. } => None,
            Scalar::Modular { value, modulus } => Some(Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    /// `self += a * b`, the inner loop of every elimination.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, .. },
                Scalar::Modular { value: y, .. },
            ) => {
                *value = ((*value as u128 + *x as u128 * *y as u128) % *modulus as u128) as u64;
            }
            (Scalar::Rational(q), Scalar::Rational(x), Scalar::Rational(y)) => {
                if x.is_integer() && y.is_integer() && q.is_integer() {
                    let v = q.numer() + x.numer() * y.numer();
                    *q = BigRational::from_integer(v);
                } else {
                    *q += x * y;
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
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

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modular:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (
                        Scalar::Modular { value: a, modulus },
                        Scalar::Modular { value: b, modulus: m2 },
                    ) => {
                        debug_assert_eq!(modulus, m2);
                        Scalar::Modular { value: $modular(*a, *b, *modulus), modulus: *modulus }
                    }
                    _ => panic!("scalar field mismatch"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, m: u64| ((a as u128 + b as u128) % m as u128) as u64
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, m: u64| ((a as u128 + m as u128 - b as u128) % m as u128) as u64
);
binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, m: u64| ((a as u128 * b as u128) % m as u128) as u64
);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inverse().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Modular { value, modulus }, Scalar::Modular { value: b, .. }) => {
                *value = ((*value as u128 + *b as u128) % *modulus as u128) as u64;
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        let neg = -rhs;
        *self += &neg;
    }
}

impl Scalar {
    /// Absolute size of the numerator and denominator, used to pick small pivots.
    pub(crate) fn weight(&self) -> u64 {
        match self {
            Scalar::Rational(q) => {
                let n = q.numer().abs().bits();
                let d = q.denom().bits();
                n + d
            }
            Scalar::Modular { .. } => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_negatives() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("3/6").unwrap().to_string(), "1/2");
        assert_eq!(q.parse("-4").unwrap().to_string(), "-4");
        assert!(q.parse("1/0").is_err());
        let f5 = FieldSpec::prime(5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(f5.parse("1/2").unwrap().to_string(), "3");
        assert_eq!(f5.parse("-1").unwrap().to_string(), "4");
        assert!(f5.parse("1/5").is_err());
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }

    #[test]
    fn modular_inverse() {
        let f7 = FieldSpec::prime(7).unwrap();
        for n in 1..7 {
            let x = f7.from_i64(n);
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
        assert!(f7.zero().inverse().is_none());
    }

    #[test]
    fn add_product_matches_operators() {
        let q = FieldSpec::Rationals;
        let mut acc = q.parse("1/3").unwrap();
        let a = q.parse("2/5").unwrap();
        let b = q.parse("-7").unwrap();
        let expected = &acc + &(&a * &b);
        acc.add_product(&a, &b);
        assert_eq!(acc, expected);
    }
}
