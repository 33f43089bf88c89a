use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{to_f64, Rational};

/// Exact value `coeff * sqrt(radicand)`.
///
/// A negative radicand denotes an imaginary value (`sqrt(-x) = i sqrt(x)`).
/// Equality compares values, not representations, so `2·√3` equals `1·√12`.
#[derive(Debug, Clone, Serialize)]
pub struct Radical {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub coeff: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub radicand: Rational,
}

impl Radical {
    pub fn new(coeff: Rational, radicand: Rational) -> Self {
        Self { coeff, radicand }
    }

    pub fn rational(coeff: Rational) -> Self {
        Self::new(coeff, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero() || self.radicand.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        !self.is_zero() && self.radicand.is_negative()
    }

    /// The exact square `coeff² · radicand`.
    pub fn square(&self) -> Rational {
        &self.coeff * &self.coeff * &self.radicand
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(&self.coeff * factor, self.radicand.clone())
    }

    /// Product, with `i·i = -1` for two imaginary factors.
    pub fn mul(&self, other: &Self) -> Self {
        let mut coeff = &self.coeff * &other.coeff;
        if self.radicand.is_negative() && other.radicand.is_negative() {
            coeff = -coeff;
        }
        Self::new(coeff, &self.radicand * &other.radicand)
    }

    /// Ratio of two radicals; `None` when dividing by zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        // 1/(c√x) = (1/(cx))√x, also for x < 0
        let inv = Self::new((&other.coeff * &other.radicand).recip(), other.radicand.clone());
        Some(self.mul(&inv))
    }

    /// Real value, when the radical is real.
    pub fn to_f64(&self) -> Option<f64> {
        if self.is_zero() {
            return Some(0.0);
        }
        (!self.radicand.is_negative())
            .then(|| to_f64(&self.coeff) * to_f64(&self.radicand).sqrt())
    }

    fn phase(&self) -> (bool, i8) {
        let sign = if self.coeff.is_positive() { 1 } else { -1 };
        (self.radicand.is_negative(), sign)
    }
}

impl PartialEq for Radical {
    fn eq(&self, other: &Self) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => self.phase() == other.phase() && self.square() == other.square(),
            _ => false,
        }
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() || self.is_zero() {
            let c = if self.is_zero() { Rational::zero() } else { self.coeff.clone() };
            write!(f, "{c}")
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

/// A radical or a pole.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum RadicalValue {
    Finite(Radical),
    Pole,
}

impl RadicalValue {
    pub fn finite(&self) -> Option<&Radical> {
        match self {
            Self::Finite(x) => Some(x),
            Self::Pole => None,
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        match self {
            Self::Finite(x) => x.to_f64(),
            Self::Pole => Some(f64::INFINITY),
        }
    }
}

impl fmt::Display for RadicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(x) => write!(f, "{x}"),
            Self::Pole => f.write_str("pole"),
        }
    }
}
