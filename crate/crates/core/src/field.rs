//! Coefficient fields: the rationals and prime fields of machine-word size.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    /// Integers modulo a prime `p`; representatives live in `[0, p)`.
    PrimeField(u64),
}

/// A field element. Which variant is valid is decided by the owning
/// [`CoefficientField`]; mixing variants is a logic error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular(u64),
}

impl CoefficientField {
    /// Checked constructor for a prime field.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoefficientField::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::zero()),
            CoefficientField::PrimeField(_) => Coeff::Modular(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::one()),
            CoefficientField::PrimeField(_) => Coeff::Modular(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::from_integer(v.clone())),
            CoefficientField::PrimeField(p) => Coeff::Modular(reduce_bigint(v, *p)),
        }
    }

    /// Maps `num / den` into the field. Fails when the denominator vanishes
    /// in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        let invalid = || Error::InvalidCoefficient(format!("{}/{}", num, den));
        match self {
            CoefficientField::Rationals => {
                if den.is_zero() {
                    return Err(invalid());
                }
                Ok(Coeff::Rational(BigRational::new(num.clone(), den.clone())))
            }
            CoefficientField::PrimeField(p) => {
                let d = reduce_bigint(den, *p);
                let inv = inv_mod(d, *p).ok_or_else(invalid)?;
                Ok(Coeff::Modular(mul_mod(reduce_bigint(num, *p), inv, *p)))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Modular(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (_, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (CoefficientField::PrimeField(p), Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular(add_mod(*x, *y, *p))
            }
            _ => panic!("coefficient variant does not match field {:?}", self),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (_, Coeff::Rational(x)) => Coeff::Rational(-x),
            (CoefficientField::PrimeField(p), Coeff::Modular(x)) => {
                Coeff::Modular(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("coefficient variant does not match field {:?}", self),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (_, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (CoefficientField::PrimeField(p), Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular(mul_mod(*x, *y, *p))
            }
            _ => panic!("coefficient variant does not match field {:?}", self),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match (self, a) {
            (_, Coeff::Rational(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Coeff::Rational(x.recip()))
                }
            }
            (CoefficientField::PrimeField(p), Coeff::Modular(x)) => inv_mod(*x, *p).map(Coeff::Modular),
            _ => panic!("coefficient variant does not match field {:?}", self),
        }
    }

    /// Whether `a` is a valid canonical element of this field.
    pub fn contains(&self, a: &Coeff) -> bool {
        match (self, a) {
            (CoefficientField::Rationals, Coeff::Rational(q)) => q.denom().is_positive(),
            (CoefficientField::PrimeField(p), Coeff::Modular(v)) => v < p,
            _ => false,
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::PrimeField(p) => write!(f, "GF({})", p),
        }
    }
}

impl Coeff {
    /// Sign used when printing: `true` if the element prints with a leading minus.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_negative(),
            Coeff::Modular(_) => false,
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rational(q) => Coeff::Rational(q.abs()),
            Coeff::Modular(v) => Coeff::Modular(*v),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Modular(v) => write!(f, "{}", v),
        }
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((v % &m) + &m) % &m;
    match r.sign() {
        Sign::Minus => unreachable!(),
        _ => r.to_u64().expect("residue fits in u64"),
    }
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
