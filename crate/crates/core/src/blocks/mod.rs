//! Multiplicity-2 matrix data and the even-order operators D_{2r,k}.
//!
//! On a multiplicity-2 type the intertwinor is a 2×2 matrix in the basis
//! (E'_{k-a,δ'} ∧ E_{a,d}, E'_{k-a+1,d'} ∧ E_{a-1,δ}). Its entries depend on
//! the compressed Laplacians m1 = h0 - J'² (from δ'd' under the
//! pseudo-metric) and m2 = J² - h3 (from dδ), and on a scale t1 fixed by a
//! neighbouring multiplicity-1 eigenvalue.

mod poly;

pub use poly::Poly2;

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arithmetic::{half, int, sign_power, ExtendedScalar, Radical, RadicalValue, Rational};
use crate::error::{Error, Result};
use crate::spectra::harmonics::HodgeType;
use crate::spectra::{
    gamma_pair_for_t1, theorem1_eigenvalue, BundleParams, Direction, KTypeFamily, KTypeLabel,
    SpectralPoint, WedgeSummand,
};

/// Constants for a conformal vector field acting on E_{k,·,j}
/// over S^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaConstants {
    pub mu: Rational,
    pub nu: Rational,
    pub alpha: Rational,
    pub beta: Rational,
}

pub fn lemma_constants(n: i64, k: i64, j: i64) -> LemmaConstants {
    LemmaConstants {
        mu: int(j + k),
        nu: int(n - 1 - k + j),
        alpha: int(j - 1 + k),
        beta: int(n - k + j),
    }
}

fn ratio(num: Rational, den: &Rational) -> Option<Rational> {
    (!den.is_zero()).then(|| num / den)
}

impl LemmaConstants {
    /// d w⁺ φ = ((μ+1)/μ) w⁺ dφ on coexact φ.
    pub fn d_raise(&self) -> Option<Rational> {
        ratio(&self.mu + int(1), &self.mu)
    }

    /// d w⁻ φ = ((ν-1)/ν) w⁻ dφ on coexact φ.
    pub fn d_lower(&self) -> Option<Rational> {
        ratio(&self.nu - int(1), &self.nu)
    }

    /// δ w⁺ ψ = ((β+1)/β) w⁺ δψ on exact ψ.
    pub fn delta_raise(&self) -> Option<Rational> {
        ratio(&self.beta + int(1), &self.beta)
    }

    /// δ w⁻ ψ = ((α-1)/α) w⁻ δψ on exact ψ.
    pub fn delta_lower(&self) -> Option<Rational> {
        ratio(&self.alpha - int(1), &self.alpha)
    }
}

/// Compressed Laplacian data on the multiplicity-2 type at (J', J).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianEigen {
    pub h0: Rational,
    pub h1: Rational,
    pub h2: Rational,
    pub h3: Rational,
    /// -δ'd' on E'_{k-a,δ',j'} is J'² - h0; under the pseudo-metric the
    /// block sees δ'd' ↦ h0 - J'².
    pub m1: Rational,
    /// dδ on E_{a,d,j}.
    pub m2: Rational,
}

impl LaplacianEigen {
    pub fn new(params: &BundleParams, pt: &SpectralPoint) -> Self {
        let sq = |x: Rational| &x * &x;
        let hp = int(params.p - 2) * half();
        let hq = int(params.q - 2) * half();
        let (k, a) = (params.k, params.a);
        let h0 = sq(&hp - int(k - a));
        let h1 = sq(&hq - int(a));
        let h2 = sq(&hq - int(a - 2));
        let h3 = sq(&hq - int(a - 1));
        let m1 = &h0 - &pt.jp * &pt.jp;
        let m2 = &pt.j * &pt.j - &h3;
        Self { h0, h1, h2, h3, m1, m2 }
    }
}

/// Differences of Bochner-Laplacian eigenvalues, target minus source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirShift {
    /// N on E'_{k-a+1,d',j'}∧E_{a-1,δ,j} minus N on E'_{k-a+1,δ',j'}∧E_{a-1,δ,j+1}
    pub n1: Rational,
    /// N on E'_{k-a,δ',j'}∧E_{a,d,j} minus N on E'_{k-a,d',j'}∧E_{a,d,j+1}
    pub n2: Rational,
}

impl CasimirShift {
    /// The two shifts entering the interface equations at the
    /// multiplicity-2 type V(j', j).
    pub fn interface(params: &BundleParams, jp: i64, j: i64) -> Self {
        use HodgeType::*;
        let (kp, a) = (params.k - params.a, params.a);
        let w = |ty0, m0, ty1, m1, j1| WedgeSummand { ty0, m0, j0: jp, ty1, m1, j1 };
        let n1 = w(Exact, kp + 1, Coexact, a - 1, j).bochner(params)
            - w(Coexact, kp + 1, Coexact, a - 1, j + 1).bochner(params);
        let n2 = w(Coexact, kp, Exact, a, j).bochner(params)
            - w(Exact, kp, Exact, a, j + 1).bochner(params);
        Self { n1, n2 }
    }

    /// N_c for one diamond step on a multiplicity-1 type.
    pub fn m1_step(params: &BundleParams, label: &KTypeLabel, dir: Direction) -> Result<Rational> {
        if label.family == KTypeFamily::M2 {
            return Err(Error::Unsupported("m1_step on a multiplicity-2 label".into()));
        }
        let source = &crate::spectra::summands(params, label)[0];
        let target = &crate::spectra::summands(params, &label.shifted(dir))[0];
        Ok(target.bochner(params) - source.bochner(params))
    }
}

/// A 2×2 matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoByTwo {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub e11: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub e12: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub e21: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub e22: Rational,
}

impl TwoByTwo {
    pub fn new(e11: Rational, e12: Rational, e21: Rational, e22: Rational) -> Self {
        Self { e11, e12, e21, e22 }
    }

    pub fn trace(&self) -> Rational {
        &self.e11 + &self.e22
    }

    pub fn det(&self) -> Rational {
        &self.e11 * &self.e22 - &self.e12 * &self.e21
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.e11 * c, &self.e12 * c, &self.e21 * c, &self.e22 * c)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for TwoByTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.e11, self.e12, self.e21, self.e22)
    }
}

/// (-1)^{k-a+1}
pub fn block_sign(params: &BundleParams) -> Rational {
    sign_power(params.k - params.a + 1)
}

/// The matrix 𝓑 compressed to (J', J): the interface entries with t = 1.
pub fn unit_block(params: &BundleParams, pt: &SpectralPoint, r: i64) -> TwoByTwo {
    let lap = LaplacianEigen::new(params, pt);
    let s = params.s();
    let r = int(r);
    let (sp, sm) = (&s + &r, &s - &r);
    let ss = &sp * &sm;
    let c = int(params.q - params.p) * half() + int(params.k - 2 * params.a + 1);
    let sigma = block_sign(params);
    let off = &sigma * int(2) * &r;
    TwoByTwo::new(
        &sp * &lap.m1 + &sm * &lap.m2 + &ss * (&c - &r),
        off.clone(),
        off * &lap.m1 * &lap.m2,
        &sm * &lap.m1 + &sp * &lap.m2 + &ss * (&c + &r),
    )
}

/// t / t1 = -1/((J'+J+r)(J'-J-r)(s+r)).
pub fn interface_scale(params: &BundleParams, pt: &SpectralPoint, r: i64) -> Result<Rational> {
    let r = int(r);
    let factors = [
        ("J'+J+r", pt.sum() + &r),
        ("J'-J-r", pt.diff() - &r),
        ("s+r", params.s() + &r),
    ];
    for (name, f) in &factors {
        if f.is_zero() {
            return Err(Error::DegenerateDenominator(name));
        }
    }
    Ok(-(factors.iter().fold(Rational::one(), |acc, (_, f)| acc * f)).recip())
}

/// The multiplicity-2 intertwinor block, stored as t1 times a rational
/// matrix so that exact identities never touch the square root.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterfaceBlock {
    pub t1: Radical,
    /// Entries divided by t1.
    pub per_t1: TwoByTwo,
}

impl InterfaceBlock {
    pub fn entries(&self) -> [Radical; 4] {
        let m = &self.per_t1;
        [&m.e11, &m.e12, &m.e21, &m.e22].map(|e| self.t1.scale(e))
    }

    /// det = det(per_t1)·t1², exactly.
    pub fn det(&self) -> Rational {
        self.per_t1.det() * self.t1.square()
    }

    pub fn trace(&self) -> Radical {
        self.t1.scale(&self.per_t1.trace())
    }
}

/// Entries A11..A22 of the multiplicity-2 block for a given t1.
pub fn interface_entries(
    params: &BundleParams,
    pt: &SpectralPoint,
    r: i64,
    t1: &Radical,
) -> Result<InterfaceBlock> {
    let t = interface_scale(params, pt, r)?;
    Ok(InterfaceBlock { t1: t1.clone(), per_t1: unit_block(params, pt, r).scale(&t) })
}

/// t1² = (s+r)/(s-r)·[G(J'+J+2, r)·G(J'-J, r)]².
pub fn t1_squared(params: &BundleParams, pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
    let s = params.s();
    let lead = ExtendedScalar::quotient(&s + int(r), &s - int(r))?;
    let g = gamma_pair_for_t1(pt, r)?;
    lead.mul(&g.mul(&g)?)
}

/// t1: the normalized eigenvalue on E'_{k-a+1,δ',j'} ∧ E_{a-1,δ,j+1}.
pub fn t1_value(params: &BundleParams, pt: &SpectralPoint, r: i64) -> Result<RadicalValue> {
    let up = SpectralPoint::new(pt.jp.clone(), &pt.j + int(1));
    theorem1_eigenvalue(KTypeFamily::M1Delta, params, &up, r)
}

/// t2 = (s-r)/(s+r)·t1.
pub fn t2_from_t1(params: &BundleParams, r: i64, t1: &Radical) -> Result<Radical> {
    let s = params.s();
    let den = &s + int(r);
    if den.is_zero() {
        return Err(Error::DegenerateNormalization { s: s.to_string(), r });
    }
    Ok(t1.scale(&((s - int(r)) / den)))
}

/// ∏_{i=0}^{m-1} (v - (m-1) + 2i) = v(v±2)... or (v±1)(v±3)..., m factors.
pub fn centered_product(v: &Rational, m: u32) -> Rational {
    let m = m as i64;
    (0..m).fold(Rational::one(), |acc, i| acc * (v - int(m - 1) + int(2 * i)))
}

fn centered_product_poly(v: &Poly2, m: u32) -> Poly2 {
    let m = m as i64;
    (0..m).fold(Poly2::constant(Rational::one()), |acc, i| {
        acc.mul(&v.add_const(&int(2 * i - (m - 1))))
    })
}

fn m1_prefactor(family: KTypeFamily, params: &BundleParams, r: i64) -> Result<Rational> {
    match family {
        KTypeFamily::M1Delta => Ok(params.s() + int(r)),
        KTypeFamily::M1D => Ok(params.s() - int(r)),
        KTypeFamily::M2 => Err(Error::Unsupported(
            "scalar value on a multiplicity-2 type; use the block".into(),
        )),
    }
}

/// Second-order operator D_{2,k} on a multiplicity-1 type:
/// (s±1)(J+J')(J-J').
pub fn d2k_m1(family: KTypeFamily, params: &BundleParams, pt: &SpectralPoint) -> Result<Rational> {
    Ok(m1_prefactor(family, params, 1)? * (&pt.j + &pt.jp) * (&pt.j - &pt.jp))
}

/// D_{2,k} on a multiplicity-2 type, off-diagonals in the convention of
/// the intertwinor block.
pub fn d2k_block(params: &BundleParams, pt: &SpectralPoint) -> TwoByTwo {
    unit_block(params, pt, 1)
}

/// D_{2r,k} on a multiplicity-1 type.
///
/// r odd: (s±r)·X·Y·∏(X²-4l²)(Y²-4l²); r even: (s±r)·∏(X²-(2l-1)²)(Y²-(2l-1)²),
/// with X = J'+J, Y = J'-J.
pub fn d2rk_eigenvalue(
    family: KTypeFamily,
    params: &BundleParams,
    pt: &SpectralPoint,
    r: u32,
) -> Result<Rational> {
    if r == 0 {
        return Err(Error::Unsupported("D_{2r,k} needs r >= 1".into()));
    }
    Ok(m1_prefactor(family, params, r as i64)?
        * centered_product(&pt.sum(), r)
        * centered_product(&pt.diff(), r))
}

/// D_{2r,k} on a multiplicity-2 type: -(C'/C product)·𝓑.
pub fn d2rk_block(params: &BundleParams, pt: &SpectralPoint, r: u32) -> Result<TwoByTwo> {
    if r == 0 {
        return Err(Error::Unsupported("D_{2r,k} needs r >= 1".into()));
    }
    let c = centered_product(&pt.sum(), r - 1) * centered_product(&pt.diff(), r - 1);
    Ok(unit_block(params, pt, r as i64).scale(&-c))
}

/// (P_op, P_sym) on a multiplicity-1 family.
///
/// P_op is the D_{2r,k} eigenvalue as a polynomial in (J', J). P_sym is the
/// compressed eigenvalue of (s+r)(δd)^r + (s-r)(dδ)^r on the same family,
/// with the pseudo-metric sign on the first factor.
pub fn leading_symbol_polynomials(
    family: KTypeFamily,
    params: &BundleParams,
    r: u32,
) -> Result<(Poly2, Poly2)> {
    if r == 0 {
        return Err(Error::Unsupported("leading symbol needs r >= 1".into()));
    }
    let pre = m1_prefactor(family, params, r as i64)?;
    let (x, y) = (Poly2::x(), Poly2::y());
    let p_op = centered_product_poly(&x.add(&y), r)
        .mul(&centered_product_poly(&x.sub(&y), r))
        .scale(&pre);
    let sq = |v: Rational| &v * &v;
    let hp = int(params.p - 2) * half();
    let hq = int(params.q - 2) * half();
    let (k, a) = (params.k, params.a);
    // constants of the coexact (δ-family) or exact (d-family) summands
    let (c0, c1) = match family {
        KTypeFamily::M1Delta => (sq(&hp - int(k - a)), sq(&hq - int(a))),
        _ => (sq(&hp - int(k - a) + int(1)), sq(&hq - int(a - 1))),
    };
    // δ'd' or d'δ' ↦ c0 - J'², δd or dδ ↦ J² - c1
    let base = x.pow(2).scale(&-Rational::one()).add(&y.pow(2)).add_const(&(c0 - c1));
    let p_sym = base.pow(r).scale(&pre);
    Ok((p_op, p_sym))
}
