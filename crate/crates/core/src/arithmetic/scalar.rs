use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{to_f64, Rational};
use crate::error::{Error, Result};

/// Value domain of every spectral quantity: exact, floating, or a pole.
///
/// `Finite(0)` is a genuine zero and is distinct from `Pole`. Multiplying a
/// pole by a nonzero finite value stays a pole; multiplying it by zero is
/// indeterminate and surfaces as [`Error::Indeterminate`].
#[derive(Debug, Clone, PartialEq)]
pub enum ExtendedScalar {
    Finite(Rational),
    FiniteFloat(f64),
    Pole,
}

impl ExtendedScalar {
    pub fn one() -> Self {
        Self::Finite(Rational::one())
    }

    pub fn zero() -> Self {
        Self::Finite(Rational::zero())
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, Self::Pole)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Finite(x) => x.is_zero(),
            Self::FiniteFloat(x) => *x == 0.0,
            Self::Pole => false,
        }
    }

    /// The exact value, if this is `Finite`.
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Self::Finite(x) => Some(x),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Finite(x) => to_f64(x),
            Self::FiniteFloat(x) => *x,
            Self::Pole => f64::INFINITY,
        }
    }

    /// Reciprocal: zero maps to a pole and a pole maps to zero.
    pub fn recip(&self) -> Self {
        match self {
            Self::Finite(x) if x.is_zero() => Self::Pole,
            Self::Finite(x) => Self::Finite(x.recip()),
            Self::FiniteFloat(x) if *x == 0.0 => Self::Pole,
            Self::FiniteFloat(x) => Self::FiniteFloat(x.recip()),
            Self::Pole => Self::zero(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        use ExtendedScalar::*;
        Ok(match (self, other) {
            (Pole, Pole) => Pole,
            (Pole, x) | (x, Pole) => {
                if x.is_zero() {
                    return Err(Error::Indeterminate("pole times zero".into()));
                }
                Pole
            }
            (Finite(a), Finite(b)) => Finite(a * b),
            (a, b) => FiniteFloat(a.to_f64() * b.to_f64()),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Indeterminate("zero over zero".into()));
        }
        if self.is_pole() && other.is_pole() {
            return Err(Error::Indeterminate("pole over pole".into()));
        }
        self.mul(&other.recip())
    }

    pub fn neg(&self) -> Self {
        match self {
            Self::Finite(x) => Self::Finite(-x),
            Self::FiniteFloat(x) => Self::FiniteFloat(-x),
            Self::Pole => Self::Pole,
        }
    }

    /// Quotient `num / den` of two exact values with the pole conventions.
    pub fn quotient(num: Rational, den: Rational) -> Result<Self> {
        match (num.is_zero(), den.is_zero()) {
            (true, true) => Err(Error::Indeterminate("0/0 quotient".into())),
            (false, true) => Ok(Self::Pole),
            _ => Ok(Self::Finite(num / den)),
        }
    }

    /// Floating counterpart of [`Self::quotient`].
    pub fn quotient_f64(num: f64, den: f64) -> Result<Self> {
        match (num == 0.0, den == 0.0) {
            (true, true) => Err(Error::Indeterminate("0/0 quotient".into())),
            (false, true) => Ok(Self::Pole),
            _ => Ok(Self::FiniteFloat(num / den)),
        }
    }
}

impl From<Rational> for ExtendedScalar {
    fn from(x: Rational) -> Self {
        Self::Finite(x)
    }
}

impl fmt::Display for ExtendedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(x) => write!(f, "{x}"),
            Self::FiniteFloat(x) => write!(f, "{x:.17e}"),
            Self::Pole => f.write_str("pole"),
        }
    }
}

/// Serialized as a string: `"num/den"`, a fixed-format float, or `"pole"`.
impl Serialize for ExtendedScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
