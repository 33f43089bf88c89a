use std::f64::consts::PI;

use num_traits::{One, Zero};

use super::{int, is_nonpositive_integer, Rational};
use crate::arithmetic::ExtendedScalar;
use crate::error::{Error, Result};

/// Default distance from a nonpositive integer at which a floating gamma
/// argument is treated as sitting on a pole.
pub const DEFAULT_POLE_EPS: f64 = 1e-8;

/// Pochhammer symbol z(z+1)...(z+m-1); 1 for m = 0.
pub fn rising_factorial(z: &Rational, m: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = z.clone();
    for _ in 0..m {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Exact Γ((x+r)/2) / Γ((x-r)/2) for integer `r`.
///
/// A pole of the numerator gamma gives `Pole`, a pole of the denominator
/// gives `Finite(0)`. Both at once is reported as indeterminate: the limit
/// depends on the direction of approach.
pub fn gamma_ratio(x: &Rational, r: i64) -> Result<ExtendedScalar> {
    let (num_arg, den_arg) = gamma_args(x, r);
    match (
        is_nonpositive_integer(&num_arg),
        is_nonpositive_integer(&den_arg),
    ) {
        (true, true) => Err(Error::Indeterminate(format!(
            "gamma({num_arg})/gamma({den_arg}) has poles in numerator and denominator"
        ))),
        (true, false) => Ok(ExtendedScalar::Pole),
        (false, true) => Ok(ExtendedScalar::zero()),
        (false, false) => Ok(ExtendedScalar::Finite(pochhammer_quotient(
            &num_arg, &den_arg, r,
        ))),
    }
}

/// Γ((x+r)/2) / Γ((x-r)/2) continued through double poles by the rising
/// factorial, i.e. the limit taken in `x` at fixed integer `r`.
///
/// This is the value a differential operator (integer order) actually takes:
/// the spectrum is polynomial in x. For r < 0 a zero rising factorial turns
/// into a `Pole`.
pub fn gamma_ratio_continued(x: &Rational, r: i64) -> ExtendedScalar {
    let (num_arg, den_arg) = gamma_args(x, r);
    if r >= 0 {
        ExtendedScalar::Finite(rising_factorial(&den_arg, r as u32))
    } else {
        let den = rising_factorial(&num_arg, r.unsigned_abs() as u32);
        if den.is_zero() {
            ExtendedScalar::Pole
        } else {
            ExtendedScalar::Finite(den.recip())
        }
    }
}

fn gamma_args(x: &Rational, r: i64) -> (Rational, Rational) {
    let two = int(2);
    let r = int(r);
    ((x + &r) / &two, (x - &r) / two)
}

fn pochhammer_quotient(num_arg: &Rational, den_arg: &Rational, r: i64) -> Rational {
    if r >= 0 {
        rising_factorial(den_arg, r as u32)
    } else {
        rising_factorial(num_arg, r.unsigned_abs() as u32).recip()
    }
}

/// Floating Γ((x+r)/2) / Γ((x-r)/2) with the default pole tolerance.
pub fn gamma_ratio_numeric(x: f64, r: f64) -> Result<ExtendedScalar> {
    gamma_ratio_numeric_with(x, r, DEFAULT_POLE_EPS)
}

/// Floating gamma quotient with an explicit pole tolerance `eps`.
pub fn gamma_ratio_numeric_with(x: f64, r: f64, eps: f64) -> Result<ExtendedScalar> {
    let num_arg = 0.5 * (x + r);
    let den_arg = 0.5 * (x - r);
    if r == 0.0 {
        return Ok(ExtendedScalar::FiniteFloat(1.0));
    }
    match (near_pole(num_arg, eps), near_pole(den_arg, eps)) {
        (true, true) => Err(Error::PoleProximity {
            argument: num_arg,
            tolerance: eps,
        }),
        (true, false) => Ok(ExtendedScalar::Pole),
        (false, true) => Ok(ExtendedScalar::FiniteFloat(0.0)),
        (false, false) => {
            let (ln_num, sign_num) = ln_gamma_signed(num_arg);
            let (ln_den, sign_den) = ln_gamma_signed(den_arg);
            Ok(ExtendedScalar::FiniteFloat(
                sign_num * sign_den * (ln_num - ln_den).exp(),
            ))
        }
    }
}

fn near_pole(z: f64, eps: f64) -> bool {
    let nearest = z.round();
    nearest <= 0.0 && (z - nearest).abs() < eps
}

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `(ln|Γ(x)|, sign Γ(x))`.
///
/// Arguments below 1/2 go through the reflection formula
/// Γ(x)Γ(1-x) = π / sin(πx), which carries the sign. At a pole the result
/// is `(+inf, NaN)`.
pub fn ln_gamma_signed(x: f64) -> (f64, f64) {
    if x < 0.5 {
        let s = sin_pi(x);
        if s == 0.0 {
            return (f64::INFINITY, f64::NAN);
        }
        let (ln_reflected, _) = ln_gamma_signed(1.0 - x);
        (PI.ln() - s.abs().ln() - ln_reflected, s.signum())
    } else {
        let z = x - 1.0;
        let t = z + LANCZOS_G + 0.5;
        let series = LANCZOS_COEF
            .iter()
            .enumerate()
            .skip(1)
            .fold(LANCZOS_COEF[0], |acc, (i, c)| acc + c / (z + i as f64));
        (
            0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + series.ln(),
            1.0,
        )
    }
}

/// sin(πx) with the argument reduced to [-1/2, 1/2] first.
fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let f = x - n;
    let s = (PI * f).sin();
    if n.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::{rat, to_f64};

    fn finite(v: ExtendedScalar) -> Rational {
        v.exact().cloned().expect("finite exact value")
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&rat(1, 2), 1), rat(1, 2));
        assert_eq!(rising_factorial(&rat(7, 3), 0), rat(1, 1));
        assert_eq!(rising_factorial(&rat(-3, 2), 4), rat(9, 16));
    }

    #[test]
    fn rising_factorial_matches_log_gamma() {
        // (-3/2)_4 = Γ(5/2)/Γ(-3/2)
        let (a, sa) = ln_gamma_signed(2.5);
        let (b, sb) = ln_gamma_signed(-1.5);
        let float = sa * sb * (a - b).exp();
        assert!((float - 9.0 / 16.0).abs() < 1e-14);
    }

    #[test]
    fn gamma_ratio_examples() {
        assert_eq!(finite(gamma_ratio(&rat(3, 1), 1).unwrap()), rat(1, 1));
        assert_eq!(finite(gamma_ratio(&rat(2, 1), 1).unwrap()), rat(1, 2));
        assert_eq!(finite(gamma_ratio(&rat(17, 3), 0).unwrap()), rat(1, 1));
        assert_eq!(gamma_ratio(&rat(1, 1), 3).unwrap(), ExtendedScalar::zero());
    }

    #[test]
    fn gamma_ratio_poles_and_indeterminate() {
        // Γ(-1)/Γ(1): numerator pole
        assert_eq!(gamma_ratio(&rat(0, 1), -2).unwrap(), ExtendedScalar::Pole);
        // Γ(-1)/Γ(-2): both poles
        assert!(matches!(
            gamma_ratio(&rat(-3, 1), 1),
            Err(Error::Indeterminate(_))
        ));
        // continuation picks the rising factorial (-2)_1
        assert_eq!(
            gamma_ratio_continued(&rat(-3, 1), 1),
            ExtendedScalar::Finite(rat(-2, 1))
        );
    }

    #[test]
    fn negative_r_is_reciprocal() {
        let up = finite(gamma_ratio(&rat(7, 2), 3).unwrap());
        let down = finite(gamma_ratio(&rat(7, 2), -3).unwrap());
        assert_eq!(up * down, rat(1, 1));
    }

    #[test]
    fn numeric_examples() {
        let v = gamma_ratio_numeric(3.0, 1.0).unwrap().to_f64();
        assert!((v - 1.0).abs() < 1e-12);
        assert_eq!(gamma_ratio_numeric(2.0, 0.0).unwrap().to_f64(), 1.0);
        // Γ(1.25)/Γ(0.75), 30-digit reference
        let v = gamma_ratio_numeric(2.0, 0.5).unwrap().to_f64();
        assert!((v - 0.739_668_779_797_159_7).abs() < 1e-14);
    }

    #[test]
    fn numeric_negative_arguments() {
        // Γ(-2.3)/Γ(-4.1), 30-digit reference 3.97586343337323517672
        let v = gamma_ratio_numeric(-6.4, 1.8).unwrap().to_f64();
        assert!((v - 3.975_863_433_373_235).abs() < 1e-12);
        // Γ(9.75)/Γ(-2.25), reference -118979.131959378719
        let v = gamma_ratio_numeric(7.5, 12.0).unwrap().to_f64();
        assert!(((v + 118_979.131_959_378_72) / 118_979.131_959_378_72).abs() < 1e-12);
    }

    #[test]
    fn numeric_pole_handling() {
        // numerator Γ(0), denominator Γ(-1.5)
        assert_eq!(
            gamma_ratio_numeric(-1.5, 1.5).unwrap(),
            ExtendedScalar::Pole
        );
        // denominator Γ(-1), numerator Γ(1)
        assert_eq!(
            gamma_ratio_numeric(0.0, 2.0).unwrap(),
            ExtendedScalar::FiniteFloat(0.0)
        );
        assert!(matches!(
            gamma_ratio_numeric(-2.0, 2.0),
            Err(Error::PoleProximity { .. })
        ));
        // a looser tolerance catches near-poles
        assert_eq!(
            gamma_ratio_numeric_with(-1.5, 1.5 + 1e-6, 1e-4).unwrap(),
            ExtendedScalar::Pole
        );
    }

    #[test]
    fn exact_and_numeric_agree_on_half_integers() {
        let x = rat(11, 2);
        let exact = to_f64(&finite(gamma_ratio(&x, 5).unwrap()));
        let float = gamma_ratio_numeric(5.5, 5.0).unwrap().to_f64();
        assert!(((exact - float) / exact).abs() < 1e-12);
    }
}
