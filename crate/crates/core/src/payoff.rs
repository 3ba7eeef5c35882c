//! Exact rational utilities.
//!
//! Every equilibrium notion in this crate distinguishes `>=` from `<`, so payoffs are kept as
//! arbitrary-precision rationals. Integer, decimal and `a/b` literals all normalize to the same
//! value.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// A dimensionless utility value with exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Payoff(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid numeric literal `{0}`")]
pub struct ParsePayoffError(pub String);

impl Payoff {
    pub fn zero() -> Self {
        Payoff(BigRational::zero())
    }

    pub fn from_integer(value: i64) -> Self {
        Payoff(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom`, reduced. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Payoff(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Lossy conversion, for display and reporting only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for Payoff {
    fn from(value: BigRational) -> Self {
        Payoff(value)
    }
}

impl From<i64> for Payoff {
    fn from(value: i64) -> Self {
        Payoff::from_integer(value)
    }
}

/// Denominator-1 values print as integers, everything else as `a/b`.
impl fmt::Display for Payoff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts an optional sign followed by an integer (`12`), a decimal (`-16.25`, `.5`, `3.`)
/// or a quotient of integers (`-65/4`).
impl FromStr for Payoff {
    type Err = ParsePayoffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParsePayoffError(s.to_string());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        if body.is_empty() {
            return Err(err());
        }

        let value = if let Some((numer, denom)) = body.split_once('/') {
            let numer = parse_digits(numer).ok_or_else(err)?;
            let denom = parse_digits(denom).ok_or_else(err)?;
            if denom.is_zero() {
                return Err(err());
            }
            BigRational::new(numer, denom)
        } else if let Some((whole, frac)) = body.split_once('.') {
            if whole.is_empty() && frac.is_empty() {
                return Err(err());
            }
            let whole = if whole.is_empty() {
                BigInt::zero()
            } else {
                parse_digits(whole).ok_or_else(err)?
            };
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let frac = if frac.is_empty() {
                BigInt::zero()
            } else {
                parse_digits(frac).ok_or_else(err)?
            };
            BigRational::new(whole * &scale + frac, scale)
        } else {
            BigRational::from_integer(parse_digits(body).ok_or_else(err)?)
        };

        Ok(Payoff(if negative { -value } else { value }))
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Payoff {
            type Output = Payoff;
            fn $method(self, rhs: Payoff) -> Payoff {
                Payoff(self.0.$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Payoff> for &'a Payoff {
            type Output = Payoff;
            fn $method(self, rhs: &'a Payoff) -> Payoff {
                Payoff((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Payoff> for Payoff {
    fn add_assign(&mut self, rhs: &Payoff) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Payoff {
    fn add_assign(&mut self, rhs: Payoff) {
        self.0 += rhs.0;
    }
}

impl Neg for Payoff {
    type Output = Payoff;
    fn neg(self) -> Payoff {
        Payoff(-self.0)
    }
}

impl Sum for Payoff {
    fn sum<I: Iterator<Item = Payoff>>(iter: I) -> Payoff {
        iter.fold(Payoff::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a Payoff> for Payoff {
    fn sum<I: Iterator<Item = &'a Payoff>>(iter: I) -> Payoff {
        let mut acc = Payoff::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl One for Payoff {
    fn one() -> Self {
        Payoff(BigRational::one())
    }
}

impl Zero for Payoff {
    fn zero() -> Self {
        Payoff::zero()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}
