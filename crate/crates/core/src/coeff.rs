//! Arbitrary-precision integer coefficients with an inline fast path.
//!
//! Polynomial coefficients are almost always machine-word sized; keeping
//! them inline avoids an allocation per arithmetic operation. Every
//! operation checks for overflow and promotes to a heap [`BigInt`] instead
//! of wrapping, so the arithmetic is exact at any size. The representation
//! is canonical: `Big` only ever holds values outside the `i64` range,
//! which makes derived equality and hashing value-equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(Box<BigInt>),
}

use Coeff::{Big, Small};

impl Coeff {
    pub fn zero() -> Self {
        Small(0)
    }

    pub fn one() -> Self {
        Small(1)
    }

    fn norm(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Small(v),
            None => Big(Box::new(b)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Small(v) => *v < 0,
            Big(b) => b.is_negative(),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Small(v) => BigInt::from(*v),
            Big(b) => (**b).clone(),
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Small(a), Small(b)) => match a.checked_add(*b) {
                Some(v) => Small(v),
                None => Self::norm(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Self::norm(self.to_bigint() + other.to_bigint()),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Small(a), Small(b)) => match a.checked_sub(*b) {
                Some(v) => Small(v),
                None => Self::norm(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Self::norm(self.to_bigint() - other.to_bigint()),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Small(a), Small(b)) => match a.checked_mul(*b) {
                Some(v) => Small(v),
                None => Self::norm(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Self::norm(self.to_bigint() * other.to_bigint()),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Small(v) => match v.checked_neg() {
                Some(n) => Small(n),
                None => Self::norm(-BigInt::from(*v)),
            },
            Big(b) => Self::norm(-(**b).clone()),
        }
    }

    pub fn add_assign(&mut self, other: &Coeff) {
        if let (Small(a), Small(b)) = (&mut *self, other) {
            if let Some(v) = a.checked_add(*b) {
                *a = v;
                return;
            }
        }
        *self = self.add(other);
    }

    pub fn sub_assign(&mut self, other: &Coeff) {
        if let (Small(a), Small(b)) = (&mut *self, other) {
            if let Some(v) = a.checked_sub(*b) {
                *a = v;
                return;
            }
        }
        *self = self.sub(other);
    }

    /// Truncating division with remainder.
    pub fn div_rem(&self, other: &Coeff) -> (Coeff, Coeff) {
        match (self, other) {
            (Small(a), Small(b)) if *b != 0 => match (a.checked_div(*b), a.checked_rem(*b)) {
                (Some(q), Some(r)) => (Small(q), Small(r)),
                _ => {
                    let (q, r) = BigInt::from(*a).div_rem(&BigInt::from(*b));
                    (Self::norm(q), Self::norm(r))
                }
            },
            _ => {
                let (q, r) = self.to_bigint().div_rem(&other.to_bigint());
                (Self::norm(q), Self::norm(r))
            }
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Small(a), Small(b)) => a.cmp(b),
            (Big(a), Big(b)) => a.cmp(b),
            // Big values lie outside the i64 range, so their sign decides.
            (Small(_), Big(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Big(a), Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Small(v)
    }
}

impl From<i32> for Coeff {
    fn from(v: i32) -> Self {
        Small(v as i64)
    }
}

impl From<BigInt> for Coeff {
    fn from(b: BigInt) -> Self {
        Self::norm(b)
    }
}

impl FromStr for Coeff {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Self::norm(BigInt::from_str(s)?))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Small(v) => write!(f, "{v}"),
            Big(b) => write!(f, "{b}"),
        }
    }
}
