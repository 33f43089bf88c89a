//! Exact and floating scalar arithmetic.
//!
//! All half-integer spectral data (J', J, s, ...) lives in [`Rational`], an
//! arbitrary-precision fraction. Gamma quotients whose arguments differ by an
//! integer reduce to rising factorials and stay exact; everything else goes
//! through a sign-tracking log-gamma.

mod gamma;
mod radical;
mod scalar;

pub use gamma::{
    gamma_ratio, gamma_ratio_continued, gamma_ratio_numeric, gamma_ratio_numeric_with,
    ln_gamma_signed, rising_factorial, DEFAULT_POLE_EPS,
};
pub use radical::{Radical, RadicalValue};
pub use scalar::ExtendedScalar;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Lossy conversion for display and floating cross-checks.
pub fn to_f64(x: &Rational) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        // huge numerators/denominators: scale down before dividing
        _ => {
            let bits = x.numer().bits().max(x.denom().bits()) as i64 - 900;
            let shift = bits.max(0) as usize;
            let n = (x.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (x.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Returns the integer value if `x` is an integer.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

/// `true` when `x` is one of 0, -1, -2, ... (a pole of the gamma function).
pub fn is_nonpositive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_positive()
}

/// (-1)^n for a possibly negative integer exponent.
pub fn sign_power(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Exact product of a slice of rationals.
pub fn product<'a>(factors: impl IntoIterator<Item = &'a Rational>) -> Rational {
    factors
        .into_iter()
        .fold(Rational::one(), |acc, f| acc * f)
}
