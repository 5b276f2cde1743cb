//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Coefficients are always carried as [`BigRational`]. Over `F_p` they are kept
//! as the canonical integer representative in `0..p`, so structural equality of
//! coefficients coincides with equality in the field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::PolyError;

pub type Coeff = BigRational;

/// The coefficient field `K` of `K[x_1..x_v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Field {
    Rationals,
    PrimeField { p: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, PolyError> {
        if is_prime(p) {
            Ok(Field::PrimeField { p })
        } else {
            Err(PolyError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::PrimeField { p } => *p,
        }
    }

    /// Maps an arbitrary rational into the field.
    ///
    /// Fails over `F_p` when the denominator is divisible by `p`.
    pub fn element(&self, c: &BigRational) -> Result<Coeff, PolyError> {
        match self {
            Field::Rationals => Ok(c.clone()),
            Field::PrimeField { p } => {
                let pb = BigInt::from(*p);
                let num = c.numer().mod_floor(&pb).to_u64().unwrap();
                let den = c.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(PolyError::NotInField(c.to_string(), *p));
                }
                let v = mul_mod(num, inv_mod(den, *p), *p);
                Ok(BigRational::from_integer(BigInt::from(v)))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        self.element(&BigRational::from_integer(BigInt::from(n)))
            .expect("integers always map into a field")
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a + b,
            Field::PrimeField { p } => residue((res(a) + res(b)) % p),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a - b,
            Field::PrimeField { p } => residue((res(a) + p - res(b)) % p),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a * b,
            Field::PrimeField { p } => residue(mul_mod(res(a), res(b), *p)),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match self {
            Field::Rationals => -a,
            Field::PrimeField { p } => residue((p - res(a)) % p),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::PrimeField { p } => Some(residue(inv_mod(res(a), *p))),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    pub fn one(&self) -> Coeff {
        BigRational::one()
    }

    /// Whether `a` renders with a leading minus sign. Never true over `F_p`.
    pub fn is_negative(&self, a: &Coeff) -> bool {
        matches!(self, Field::Rationals) && a.is_negative()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::PrimeField { p } => write!(f, "F{p}"),
        }
    }
}

fn res(a: &Coeff) -> u64 {
    a.numer().to_u64().expect("prime field residue out of range")
}

fn residue(v: u64) -> Coeff {
    BigRational::from_integer(BigInt::from(v))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}
