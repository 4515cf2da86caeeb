//! Exact ground fields: the rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// The ground field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::Input(format!(
                "characteristic must be 0 or prime (got {p})"
            )))
        }
    }

    /// Parses a characteristic: `0` means the rationals.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(FieldSpec::Rationals)
        } else {
            Self::prime_field(c)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Fp(n.rem_euclid(*p as i64) as u64, *p),
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    return Err(Error::Input("zero denominator".into()));
                }
                Ok(Scalar::Q(BigRational::new(num.clone(), den.clone())))
            }
            FieldSpec::PrimeField(p) => {
                let pb = BigInt::from(*p);
                let n = num.mod_floor(&pb).to_u64().unwrap_or(0);
                let d = den.mod_floor(&pb).to_u64().unwrap_or(0);
                if d == 0 {
                    return Err(Error::Input(format!(
                        "denominator {den} vanishes in characteristic {p}"
                    )));
                }
                let n = Scalar::Fp(n, *p);
                let d = Scalar::Fp(d, *p);
                Ok(&n * &d.inv().expect("nonzero"))
            }
        }
    }

    /// Parses `a`, `-a` or `a/b`.
    pub fn parse_scalar(&self, token: &str) -> Result<Scalar> {
        let bad = || Error::Input(format!("malformed scalar `{token}`"));
        let (n, d) = match token.split_once('/') {
            Some((n, d)) => (n, d),
            None => (token, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        self.from_ratio(&n, &d)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp {p}"),
        }
    }
}

/// An exact field element. Elements of different fields never mix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    /// `(value, p)` with `value < p`.
    Fp(u64, u64),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp(_, p) => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    pub fn zero_like(&self) -> Scalar {
        self.field().zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.field().one()
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp(v, p) => Scalar::Fp(pow_mod(*v, *p - 2, *p), *p),
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `(-1)^k` in the field of `self`.
    pub fn sign_like(&self, k: usize) -> Scalar {
        if k % 2 == 0 {
            self.one_like()
        } else {
            -self.one_like()
        }
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp(v, _) => write!(f, "{v}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalars from different fields: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => {
                Scalar::Fp(((*a as u128 + *b as u128) % *p as u128) as u64, *p)
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => {
                Scalar::Fp(((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64, *p)
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => {
                Scalar::Fp(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(0, p) => Scalar::Fp(0, p),
            Scalar::Fp(a, p) => Scalar::Fp(p - a, p),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Scalar {
    /// Numerator and denominator for rationals; `None` otherwise.
    pub fn as_ratio(&self) -> Option<(&BigInt, &BigInt)> {
        match self {
            Scalar::Q(q) => Some((q.numer(), q.denom())),
            Scalar::Fp(..) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp(..) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime_field(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(&a + &b, f.from_i64(2));
        assert_eq!(&a * &b, f.from_i64(2));
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        assert_eq!(-f.from_i64(1), f.from_i64(4));
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(FieldSpec::from_characteristic(4).is_err());
        assert_eq!(FieldSpec::from_characteristic(0).unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::from_characteristic(7).is_ok());
    }

    #[test]
    fn parse_rationals() {
        let q = FieldSpec::Rationals;
        let half = q.parse_scalar("1/2").unwrap();
        assert_eq!(&half + &half, q.one());
        assert_eq!(q.parse_scalar("-3").unwrap(), q.from_i64(-3));
        assert!(q.parse_scalar("x").is_err());
        let f2 = FieldSpec::PrimeField(2);
        assert!(f2.parse_scalar("1/2").is_err());
        assert_eq!(f2.parse_scalar("-1").unwrap(), f2.one());
    }
}
