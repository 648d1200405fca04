//! Exact coefficient rings.
//!
//! Every scalar is stored as a [`BigRational`]; the [`Ring`] value decides
//! which rationals are legal and how results are normalized. Integers keep
//! denominator one, prime fields keep a canonical representative in `0..p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// A commutative, associative, unital coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if p < 2 || !is_prime(p) {
            return Err(Error::BadInput(format!("F_{p}: modulus is not prime")));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::Integers | Ring::Rationals => 0,
            Ring::PrimeField(p) => *p,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.reduce(Scalar::from_integer(BigInt::from(v)))
    }

    /// Brings a rational into canonical form for this ring.
    ///
    /// Panics for an integer ring fed a non-integral rational, or a prime
    /// field fed a denominator divisible by `p`; both are programming errors
    /// since every public entry point validates with [`Ring::check`].
    pub fn reduce(&self, x: Scalar) -> Scalar {
        match self {
            Ring::Rationals => x,
            Ring::Integers => {
                assert!(x.is_integer(), "non-integral value {x} in Z");
                x
            }
            Ring::PrimeField(p) => {
                let p = BigInt::from(*p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                assert!(!den.is_zero(), "denominator divisible by the characteristic");
                let inv = mod_inverse(&den, &p);
                Scalar::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    /// Validates and normalizes an externally supplied value.
    pub fn check(&self, x: Scalar) -> Result<Scalar> {
        match self {
            Ring::Integers if !x.is_integer() => {
                Err(Error::BadInput(format!("{x} is not an integer")))
            }
            Ring::PrimeField(p) if (x.denom() % BigInt::from(*p)).is_zero() => Err(
                Error::BadInput(format!("{x} has denominator divisible by {p}")),
            ),
            _ => Ok(self.reduce(x)),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    /// Multiplicative inverse when it exists in the ring.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Ring::Integers => (a.abs().is_one()).then(|| a.clone()),
            Ring::Rationals => Some(a.recip()),
            Ring::PrimeField(_) => Some(self.reduce(a.recip())),
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        self.inv(a).is_some()
    }

    /// Image of the cyclic phase group of order `r` inside the ring's units.
    ///
    /// `r = 1` works everywhere; `r = 2` maps the generator to `-1` and needs
    /// characteristic other than two; larger `r` needs a prime field with
    /// `r | p - 1`, the generator going to a primitive `r`-th root of unity.
    pub fn phase_embedding(&self, r: u32) -> Result<PhaseEmbedding> {
        if r == 0 {
            return Err(Error::BadInput("phase order must be at least 1".into()));
        }
        let generator = match (self, r) {
            (_, 1) => self.one(),
            (Ring::PrimeField(2), _) => {
                return Err(Error::RingIncompatible(
                    "F_2 cannot host a nontrivial phase group".into(),
                ))
            }
            (_, 2) => self.from_i64(-1),
            (Ring::PrimeField(p), r) if (p - 1) % r as u64 == 0 => {
                let g = primitive_root(*p);
                let e = (p - 1) / r as u64;
                Scalar::from_integer(BigInt::from(pow_mod(g, e, *p)))
            }
            (ring, r) => {
                return Err(Error::RingIncompatible(format!(
                    "{ring} has no primitive {r}-th root of unity"
                )))
            }
        };
        let mut powers = Vec::with_capacity(r as usize);
        let mut acc = self.one();
        for _ in 0..r {
            powers.push(acc.clone());
            acc = self.mul(&acc, &generator);
        }
        Ok(PhaseEmbedding { powers })
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let cleaned = s.trim().replace('\u{2212}', "-");
        let value = Scalar::from_str(&cleaned)
            .map_err(|_| Error::BadInput(format!("cannot parse scalar {s:?}")))?;
        self.check(value)
    }

    /// Integer view of a scalar, used by the Smith normal form path.
    pub fn to_integer(&self, a: &Scalar) -> Option<BigInt> {
        a.is_integer().then(|| a.to_integer())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        match s.trim() {
            "Z" => Ok(Ring::Integers),
            "Q" => Ok(Ring::Rationals),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .or_else(|| other.strip_prefix('F'))
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::BadInput(format!("unknown ring {other:?}")))?;
                Ring::prime_field(p)
            }
        }
    }
}

/// The embedding χ of the phase group into the ring, tabulated by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseEmbedding {
    powers: Vec<Scalar>,
}

impl PhaseEmbedding {
    pub fn order(&self) -> u32 {
        self.powers.len() as u32
    }

    pub fn chi(&self, exponent: u32) -> &Scalar {
        &self.powers[exponent as usize % self.powers.len()]
    }
}

/// Canonical exact string for a scalar, e.g. `-3/2` or `5`.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn scalar_to_i64(x: &Scalar) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let egcd = a.extended_gcd(p);
    egcd.x.mod_floor(p)
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let p = p as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u64
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut n = phi;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, phi / q, p) != 1))
        .expect("every prime field has a primitive root")
}
