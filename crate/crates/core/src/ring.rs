//! Exact scalar arithmetic: `Z_n` with `n >= 2`, or arbitrary-precision
//! rationals.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient ring every structure lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExactRing {
    /// Integers modulo `n`, `n >= 2`.
    Zn(u64),
    /// Exact rationals (arbitrary precision).
    Rationals,
}

/// A single scalar, always kept in canonical form: reduced mod `n` for
/// `Zn`, lowest terms for rationals (`BigRational` normalizes itself).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(u64),
    Rat(BigRational),
}

impl ExactRing {
    pub fn zn(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("modulus must be >= 2, got {n}")));
        }
        Ok(ExactRing::Zn(n))
    }

    pub fn is_field(&self) -> bool {
        match self {
            ExactRing::Rationals => true,
            ExactRing::Zn(n) => is_prime(*n),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            ExactRing::Zn(_) => Scalar::Int(0),
            ExactRing::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            ExactRing::Zn(_) => Scalar::Int(1),
            ExactRing::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            ExactRing::Zn(n) => {
                let m = v.rem_euclid(*n as i64) as u64;
                Scalar::Int(m)
            }
            ExactRing::Rationals => Scalar::Rat(BigRational::from(BigInt::from(v))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ExactRing::Zn(n), Scalar::Int(x), Scalar::Int(y)) => {
                Scalar::Int((x + y) % n)
            }
            (ExactRing::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to ring"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ExactRing::Zn(n), Scalar::Int(x), Scalar::Int(y)) => {
                Scalar::Int(((*x as u128 * *y as u128) % (*n as u128)) as u64)
            }
            (ExactRing::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to ring"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (ExactRing::Zn(n), Scalar::Int(x)) => Scalar::Int((n - x % n) % n),
            (ExactRing::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to ring"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    /// Multiplicative inverse; only defined over fields.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if !self.is_field() {
            return Err(Error::SplitUnsupported);
        }
        match (self, a) {
            (ExactRing::Zn(n), Scalar::Int(x)) => {
                if *x == 0 {
                    return Err(Error::Invalid("division by zero".into()));
                }
                Ok(Scalar::Int(mod_inverse(*x, *n)))
            }
            (ExactRing::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    return Err(Error::Invalid("division by zero".into()));
                }
                Ok(Scalar::Rat(x.recip()))
            }
            _ => panic!("scalar does not belong to ring"),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }
}

impl Scalar {
    pub fn rational(numer: i64, denom: i64) -> Scalar {
        Scalar::Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Render as a plain integer or `p/q`.
    pub fn render(&self) -> String {
        match self {
            Scalar::Int(x) => x.to_string(),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else if x.denom().is_negative() {
                    // BigRational keeps denominators positive, but be safe.
                    format!("{}/{}", -x.numer(), -x.denom())
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: u64, n: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (a % n) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "element not invertible");
    t.rem_euclid(n as i128) as u64
}
