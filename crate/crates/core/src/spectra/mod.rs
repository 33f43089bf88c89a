//! K-type bookkeeping and the closed-form spectral function.
//!
//! A K-type on S^{p-1}×S^{q-1} is a wedge of Hodge summands, one per sphere
//! factor. The intertwinor of order `r` acts on the multiplicity-1 types by
//! gamma quotients in J' and J, and on the multiplicity-2 types by a 2×2
//! block whose determinant is again a gamma quotient.

pub mod harmonics;

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arithmetic::{
    gamma_ratio, gamma_ratio_continued, gamma_ratio_numeric, half, int, ExtendedScalar, Radical, RadicalValue, Rational,
};
use crate::error::{Error, Result};
use harmonics::{form_exists, HodgeType};

/// Geometry (p, q) and form bidegree: k-forms split as (k-a) on S^{p-1}
/// and a on S^{q-1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BundleParams {
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub a: i64,
}

impl BundleParams {
    pub fn new(p: i64, q: i64, k: i64, a: i64) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidParams(format!("p = {p}, q = {q}: both must be >= 2")));
        }
        if a < 0 || a > k {
            return Err(Error::InvalidParams(format!("need 0 <= a <= k, got a = {a}, k = {k}")));
        }
        if k - a > p - 1 {
            return Err(Error::InvalidParams(format!(
                "k - a = {} exceeds dim S^(p-1) = {}",
                k - a,
                p - 1
            )));
        }
        if a > q - 1 {
            return Err(Error::InvalidParams(format!(
                "a = {a} exceeds dim S^(q-1) = {}",
                q - 1
            )));
        }
        Ok(Self { p, q, k, a })
    }

    /// s = (p+q-2-2k)/2.
    pub fn s(&self) -> Rational {
        int(self.p + self.q - 2 - 2 * self.k) * half()
    }

    /// Dimension of the first sphere factor.
    pub fn n0(&self) -> i64 {
        self.p - 1
    }

    /// Dimension of the second sphere factor.
    pub fn n1(&self) -> i64 {
        self.q - 1
    }

    /// Same geometry with the split degree moved to `a`, if valid.
    pub fn with_a(&self, a: i64) -> Result<Self> {
        Self::new(self.p, self.q, self.k, a)
    }
}

impl fmt::Display for BundleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} q={} k={} a={}", self.p, self.q, self.k, self.a)
    }
}

/// The three K-type families.
///
/// * `M1Delta`: E'_{k-a,δ',j'} ∧ E_{a,δ,j}
/// * `M1D`: E'_{k-a,d',j'} ∧ E_{a,d,j}
/// * `M2`: E'_{k-a,δ',j'} ∧ E_{a,d,j} ⊕ E'_{k-a+1,d',j'} ∧ E_{a-1,δ,j}
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KTypeFamily {
    #[serde(rename = "m1-delta")]
    M1Delta,
    #[serde(rename = "m1-d")]
    M1D,
    #[serde(rename = "m2")]
    M2,
}

impl KTypeFamily {
    pub const ALL: [KTypeFamily; 3] = [Self::M1Delta, Self::M1D, Self::M2];
    pub const M1: [KTypeFamily; 2] = [Self::M1Delta, Self::M1D];

    pub fn name(&self) -> &'static str {
        match self {
            Self::M1Delta => "m1-delta",
            Self::M1D => "m1-d",
            Self::M2 => "m2",
        }
    }
}

impl fmt::Display for KTypeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KTypeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m1-delta" => Ok(Self::M1Delta),
            "m1-d" => Ok(Self::M1D),
            "m2" => Ok(Self::M2),
            other => Err(Error::Unsupported(format!(
                "family '{other}' (expected m1-delta, m1-d or m2)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KTypeLabel {
    pub family: KTypeFamily,
    pub jp: i64,
    pub j: i64,
}

impl KTypeLabel {
    pub fn new(family: KTypeFamily, jp: i64, j: i64) -> Self {
        Self { family, jp, j }
    }

    pub fn shifted(&self, dir: Direction) -> Self {
        Self::new(self.family, self.jp + dir.djp as i64, self.j + dir.dj as i64)
    }
}

/// A single wedge summand E'_{m',ty',j'} ∧ E_{m,ty,j}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WedgeSummand {
    pub ty0: HodgeType,
    pub m0: i64,
    pub j0: i64,
    pub ty1: HodgeType,
    pub m1: i64,
    pub j1: i64,
}

impl WedgeSummand {
    pub fn exists(&self, params: &BundleParams) -> bool {
        form_exists(params.n0(), self.m0, self.ty0, self.j0)
            && form_exists(params.n1(), self.m1, self.ty1, self.j1)
    }

    /// Eigenvalue of the Bochner Laplacian of the Riemannian product.
    pub fn bochner(&self, params: &BundleParams) -> Rational {
        harmonics::bochner_eigenvalue(params.n0(), self.m0, self.ty0, self.j0)
            + harmonics::bochner_eigenvalue(params.n1(), self.m1, self.ty1, self.j1)
    }
}

/// The wedge summands making up a label (one for multiplicity 1, two for M2).
pub fn summands(params: &BundleParams, label: &KTypeLabel) -> Vec<WedgeSummand> {
    use HodgeType::*;
    let (kp, a) = (params.k - params.a, params.a);
    let w = |ty0, m0, ty1, m1| WedgeSummand { ty0, m0, j0: label.jp, ty1, m1, j1: label.j };
    match label.family {
        KTypeFamily::M1Delta => vec![w(Coexact, kp, Coexact, a)],
        KTypeFamily::M1D => vec![w(Exact, kp, Exact, a)],
        KTypeFamily::M2 => vec![w(Coexact, kp, Exact, a), w(Exact, kp + 1, Coexact, a - 1)],
    }
}

/// Whether every summand of the label is a nonempty harmonic space.
pub fn ktype_exists(params: &BundleParams, label: &KTypeLabel) -> bool {
    summands(params, label).iter().all(|w| w.exists(params))
}

/// The half-integers (J', J) attached to degree labels (j', j).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpectralPoint {
    /// J' = j' + (p-2)/2
    #[serde(serialize_with = "crate::report::ser_display")]
    pub jp: Rational,
    /// J = j + (q-2)/2
    #[serde(serialize_with = "crate::report::ser_display")]
    pub j: Rational,
}

impl SpectralPoint {
    pub fn new(jp: Rational, j: Rational) -> Self {
        Self { jp, j }
    }

    /// X = J' + J.
    pub fn sum(&self) -> Rational {
        &self.jp + &self.j
    }

    /// Y = J' - J.
    pub fn diff(&self) -> Rational {
        &self.jp - &self.j
    }

    pub fn shifted(&self, dir: Direction) -> Self {
        Self::new(&self.jp + int(dir.djp as i64), &self.j + int(dir.dj as i64))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (crate::arithmetic::to_f64(&self.jp), crate::arithmetic::to_f64(&self.j))
    }
}

/// (J', J) from degree labels. Only nonnegativity is checked here; use
/// [`ktype_exists`] for the harmonic-space constraints.
pub fn spectral_point(params: &BundleParams, jp: i64, j: i64) -> Result<SpectralPoint> {
    if jp < 0 || j < 0 {
        return Err(Error::NonexistentKType(format!("(j'={jp}, j={j})")));
    }
    Ok(SpectralPoint::new(
        int(jp) + int(params.p - 2) * half(),
        int(j) + int(params.q - 2) * half(),
    ))
}

/// One arrow of the diamond diagrams: (j', j) -> (j'+djp, j+dj).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Direction {
    pub djp: i8,
    pub dj: i8,
}

impl Direction {
    pub const UP_RIGHT: Self = Self { djp: 1, dj: 1 };
    pub const UP_LEFT: Self = Self { djp: -1, dj: 1 };
    pub const DOWN_LEFT: Self = Self { djp: -1, dj: -1 };
    pub const DOWN_RIGHT: Self = Self { djp: 1, dj: -1 };
    pub const ALL: [Self; 4] = [Self::UP_RIGHT, Self::UP_LEFT, Self::DOWN_LEFT, Self::DOWN_RIGHT];

    /// x = dj'·X_J' + dj·J, the linear form in the transition quantities.
    fn linear(&self, pt: &SpectralPoint) -> Rational {
        int(self.djp as i64) * &pt.jp + int(self.dj as i64) * &pt.j
    }

    pub fn name(&self) -> &'static str {
        match (self.djp, self.dj) {
            (1, 1) => "up-right",
            (-1, 1) => "up-left",
            (-1, -1) => "down-left",
            _ => "down-right",
        }
    }
}

fn product(factors: &[ExtendedScalar]) -> Result<ExtendedScalar> {
    factors.iter().try_fold(ExtendedScalar::one(), |acc, f| acc.mul(f))
}

/// Multiplicity-1 transition (x+r)/(x-r), x = dj'J' + djJ + 1.
pub fn m1_transition(pt: &SpectralPoint, r: i64, dir: Direction) -> Result<ExtendedScalar> {
    let x = dir.linear(pt) + int(1);
    ExtendedScalar::quotient(&x + int(r), x - int(r))
}

/// Γ-quotient eigenvalue on the multiplicity-1 types:
/// G(J'+J+1, r)·G(J'-J+1, r) with G(x, r) = Γ((x+r)/2)/Γ((x-r)/2).
pub fn m1_eigenvalue(pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
    let one = int(1);
    product(&[gamma_ratio(&(pt.sum() + &one), r)?, gamma_ratio(&(pt.diff() + one), r)?])
}

/// [`m1_eigenvalue`] continued through double poles by the rising
/// factorials, the value a differential operator takes at integer r.
pub fn m1_eigenvalue_continued(pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
    let one = int(1);
    product(&[
        gamma_ratio_continued(&(pt.sum() + &one), r),
        gamma_ratio_continued(&(pt.diff() + one), r),
    ])
}

/// Transition (s-r)/(s+r) from the δ-family to the d-family.
pub fn cross_type_quotient(params: &BundleParams, r: i64) -> Result<ExtendedScalar> {
    let s = params.s();
    ExtendedScalar::quotient(&s - int(r), s + int(r))
}

/// Multiplicity-2 transition (x+r)(x+2+r)/((x-r)(x+2-r)), x = dj'J' + djJ.
pub fn m2_transition(pt: &SpectralPoint, r: i64, dir: Direction) -> Result<ExtendedScalar> {
    let x = dir.linear(pt);
    let r = int(r);
    let two = int(2);
    let num = (&x + &r) * (&x + &two + &r);
    let den = (&x - &r) * (&x + &two - &r);
    if num.is_zero() && den.is_zero() {
        // a zero and a pole in separate factors: resolve factor-wise
        let a = ExtendedScalar::quotient(&x + &r, &x - &r)?;
        let b = ExtendedScalar::quotient(&x + &two + &r, &x + &two - &r)?;
        return a.mul(&b);
    }
    ExtendedScalar::quotient(num, den)
}

/// Determinant on the multiplicity-2 types:
/// G(X, r)·G(X+2, r)·G(Y, r)·G(Y+2, r).
pub fn m2_det(pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
    let two = int(2);
    let (x, y) = (pt.sum(), pt.diff());
    product(&[
        gamma_ratio(&x, r)?,
        gamma_ratio(&(&x + &two), r)?,
        gamma_ratio(&y, r)?,
        gamma_ratio(&(&y + &two), r)?,
    ])
}

/// G(J'+J+2, r)·G(J'-J, r), the gamma pair whose square fixes t1².
pub fn gamma_pair_for_t1(pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
    product(&[gamma_ratio(&(pt.sum() + int(2)), r)?, gamma_ratio(&pt.diff(), r)?])
}

/// Radicand of the normalization: (s+r)/(s-r) on the δ-family,
/// (s-r)/(s+r) on the d-family.
pub fn normalization_radicand(family: KTypeFamily, params: &BundleParams, r: i64) -> Result<Rational> {
    let s = params.s();
    let (plus, minus) = (&s + int(r), &s - int(r));
    if plus.is_zero() || minus.is_zero() {
        return Err(Error::DegenerateNormalization { s: s.to_string(), r });
    }
    match family {
        KTypeFamily::M1Delta => Ok(plus / minus),
        KTypeFamily::M1D => Ok(minus / plus),
        KTypeFamily::M2 => Err(Error::Unsupported(
            "normalized eigenvalue on a multiplicity-2 type; use the block determinant".into(),
        )),
    }
}

/// The normalized intertwinor on a multiplicity-1 type:
/// √((s+r)/(s-r))·m1_eigenvalue on the δ-family, √((s-r)/(s+r))·m1_eigenvalue
/// on the d-family.
///
/// When |s| < |r| both radicals are imaginary. The δ-family factor is then
/// taken as the reciprocal of the d-family one, `1/√((s-r)/(s+r))`, so the
/// quotient of the two families stays (s-r)/(s+r) on every branch.
pub fn theorem1_eigenvalue(
    family: KTypeFamily,
    params: &BundleParams,
    pt: &SpectralPoint,
    r: i64,
) -> Result<RadicalValue> {
    normalize(family, params, r, m1_eigenvalue(pt, r)?)
}

/// [`theorem1_eigenvalue`] built on [`m1_eigenvalue_continued`].
pub fn theorem1_eigenvalue_continued(
    family: KTypeFamily,
    params: &BundleParams,
    pt: &SpectralPoint,
    r: i64,
) -> Result<RadicalValue> {
    normalize(family, params, r, m1_eigenvalue_continued(pt, r)?)
}

fn normalize(family: KTypeFamily, params: &BundleParams, r: i64, m1: ExtendedScalar) -> Result<RadicalValue> {
    let radicand = normalization_radicand(family, params, r)?;
    Ok(match m1 {
        ExtendedScalar::Finite(c) if family == KTypeFamily::M1Delta && radicand.is_negative() => {
            RadicalValue::Finite(Radical::new(c * &radicand, radicand.recip()))
        }
        ExtendedScalar::Finite(c) => RadicalValue::Finite(Radical::new(c, radicand)),
        ExtendedScalar::Pole => RadicalValue::Pole,
        ExtendedScalar::FiniteFloat(_) => unreachable!("exact path"),
    })
}

fn product_f64(factors: &[ExtendedScalar]) -> Result<ExtendedScalar> {
    factors.iter().try_fold(ExtendedScalar::FiniteFloat(1.0), |acc, f| acc.mul(f))
}

/// Floating [`m1_transition`] for real r.
pub fn m1_transition_numeric(jp: f64, j: f64, r: f64, dir: Direction) -> Result<ExtendedScalar> {
    let x = dir.djp as f64 * jp + dir.dj as f64 * j + 1.0;
    ExtendedScalar::quotient_f64(x + r, x - r)
}

/// Floating [`m1_eigenvalue`] for real r.
pub fn m1_eigenvalue_numeric(jp: f64, j: f64, r: f64) -> Result<ExtendedScalar> {
    product_f64(&[
        gamma_ratio_numeric(jp + j + 1.0, r)?,
        gamma_ratio_numeric(jp - j + 1.0, r)?,
    ])
}

/// Floating [`m2_det`] for real r.
pub fn m2_det_numeric(jp: f64, j: f64, r: f64) -> Result<ExtendedScalar> {
    let (x, y) = (jp + j, jp - j);
    product_f64(&[
        gamma_ratio_numeric(x, r)?,
        gamma_ratio_numeric(x + 2.0, r)?,
        gamma_ratio_numeric(y, r)?,
        gamma_ratio_numeric(y + 2.0, r)?,
    ])
}

/// Floating [`theorem1_eigenvalue`]; the radical must be real.
pub fn theorem1_eigenvalue_numeric(
    family: KTypeFamily,
    params: &BundleParams,
    jp: f64,
    j: f64,
    r: f64,
) -> Result<ExtendedScalar> {
    let s = crate::arithmetic::to_f64(&params.s());
    let (plus, minus) = (s + r, s - r);
    if plus == 0.0 || minus == 0.0 {
        return Err(Error::DegenerateNormalization { s: params.s().to_string(), r: r as i64 });
    }
    let radicand = match family {
        KTypeFamily::M1Delta => plus / minus,
        KTypeFamily::M1D => minus / plus,
        KTypeFamily::M2 => {
            return Err(Error::Unsupported("normalized eigenvalue on a multiplicity-2 type".into()))
        }
    };
    if radicand < 0.0 {
        return Err(Error::Unsupported(format!(
            "imaginary normalization sqrt({radicand}) in floating mode"
        )));
    }
    m1_eigenvalue_numeric(jp, j, r)?.mul(&ExtendedScalar::FiniteFloat(radicand.sqrt()))
}
