//! The intertwining relation realized on a truncated Fourier basis of
//! S¹×S¹ (p = q = 2), with angles τ on the first factor and ρ on the second.
//!
//! Basis ordering: the vector for `e^{i j' τ} e^{i j ρ}` times component `c`
//! sits at index `((j'+M)(2M+1) + (j+M))·ncomp + c`. Components are `{1}` for
//! k = 0, `{dτ, dρ}` (c = 0, 1) for k = 1 and `{dτ∧dρ}` for k = 2.
//!
//! Sign conventions for the pseudo-metric −dτ² + dρ²:
//!
//! | operator | convention |
//! |----------|------------|
//! | ϕ        | cos τ cos ρ |
//! | T        | sin τ cos ρ ∂τ + cos τ sin ρ ∂ρ |
//! | N        | −∂τ² − ∂ρ² on each component |
//! | δ, k = 1 | f dτ + g dρ ↦ ∂τ f − ∂ρ g |
//! | δ, k = 2 | h dτ∧dρ ↦ ∂ρ h dτ + ∂τ h dρ |
//! | P, k = 1 | f dτ + g dρ ↦ sin τ sin ρ (g dτ + f dρ) |
//!
//! On k = 1 the multiplicity-2 block acts on (dρ, dτ) at each mode; the
//! K-type frame differs from the Fourier frame by the factor −j'j on the dρ
//! slot ([`BasisConvention::Standard`]).

mod matrix;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

pub use matrix::{Column, OperatorMatrix};

use crate::arithmetic::{gamma_ratio_continued, half, int, rat, rising_factorial, ExtendedScalar, Rational};
use crate::blocks::unit_block;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::spectra::{BundleParams, SpectralPoint};
use crate::verify::Status;

/// Exact complex entry.
pub type Entry = Complex<Rational>;

pub const DTAU: usize = 0;
pub const DRHO: usize = 1;

/// Fourier modes |j'|, |j| ≤ M of k-forms on the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusBasis {
    pub m: i64,
    pub k: u8,
}

impl TorusBasis {
    pub fn new(m: i64, k: u8) -> Result<Self> {
        if k > 2 {
            return Err(Error::Unsupported(format!("form degree {k} on a 2-torus")));
        }
        if m < 2 {
            return Err(Error::InvalidParams(format!("truncation M = {m} leaves no interior modes")));
        }
        Ok(Self { m, k })
    }

    pub fn components(&self) -> usize {
        if self.k == 1 {
            2
        } else {
            1
        }
    }

    pub fn side(&self) -> usize {
        (2 * self.m + 1) as usize
    }

    pub fn dim(&self) -> usize {
        self.side() * self.side() * self.components()
    }

    pub fn index(&self, jp: i64, j: i64, c: usize) -> Option<usize> {
        if jp.abs() > self.m || j.abs() > self.m || c >= self.components() {
            return None;
        }
        let side = self.side();
        Some((((jp + self.m) as usize) * side + (j + self.m) as usize) * self.components() + c)
    }

    /// `(j', j, component)` of a basis index.
    pub fn mode(&self, idx: usize) -> (i64, i64, usize) {
        let (cell, c) = (idx / self.components(), idx % self.components());
        let side = self.side();
        ((cell / side) as i64 - self.m, (cell % side) as i64 - self.m, c)
    }

    /// Both mode numbers at least two away from the cutoff.
    pub fn is_interior(&self, idx: usize) -> bool {
        let (jp, j, _) = self.mode(idx);
        jp.abs() <= self.m - 2 && j.abs() <= self.m - 2
    }

    pub fn with_degree(&self, k: u8) -> Result<Self> {
        Self::new(self.m, k)
    }
}

/// Operators the lab can assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusOperator {
    PhiMult,
    P,
    N,
    NablaT,
    D,
    Delta,
    InteriorT,
    LieT,
}

impl TorusOperator {
    pub const ALL: [TorusOperator; 8] = [
        Self::PhiMult,
        Self::P,
        Self::N,
        Self::NablaT,
        Self::D,
        Self::Delta,
        Self::InteriorT,
        Self::LieT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::PhiMult => "phi-mult",
            Self::P => "P",
            Self::N => "N",
            Self::NablaT => "nabla_T",
            Self::D => "d",
            Self::Delta => "delta",
            Self::InteriorT => "iota_T",
            Self::LieT => "L_T",
        }
    }

    /// Form degree of the image of a k-form.
    pub fn target_degree(self, k: u8) -> Result<u8> {
        match self {
            Self::D if k == 2 => Err(Error::Unsupported("d on 2-forms of a surface".into())),
            Self::D => Ok(k + 1),
            Self::Delta | Self::InteriorT if k == 0 => {
                Err(Error::Unsupported(format!("{} on functions", self.name())))
            }
            Self::Delta | Self::InteriorT => Ok(k - 1),
            _ => Ok(k),
        }
    }
}

impl FromStr for TorusOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown torus operator '{s}'")))
    }
}

impl fmt::Display for TorusOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn re(x: Rational) -> Entry {
    Complex::new(x, Rational::zero())
}

fn im(x: Rational) -> Entry {
    Complex::new(Rational::zero(), x)
}

/// Image of one basis vector: `((j', j, component), coefficient)` pairs.
type Image = Vec<((i64, i64, usize), Entry)>;

const SHIFTS: [(i64, i64); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

/// Multiplication by a product of first-order trigonometric factors, given
/// its coefficient on each diagonal shift (a, b).
fn shifted(jp: i64, j: i64, c: usize, coef: impl Fn(i64, i64) -> Entry) -> Image {
    SHIFTS.iter().map(|&(a, b)| ((jp + a, j + b, c), coef(a, b))).collect()
}

// sin τ cos ρ and cos τ sin ρ on the shift (a, b): -ia/4 and -ib/4
fn t_tau(a: i64, _b: i64) -> Entry {
    im(rat(-a, 4))
}

fn t_rho(_a: i64, b: i64) -> Entry {
    im(rat(-b, 4))
}

/// Exact matrix of `op` on k-forms of the basis.
pub fn assemble(op: TorusOperator, basis: &TorusBasis) -> Result<OperatorMatrix<Entry>> {
    let k = basis.k;
    let target = basis.with_degree(op.target_degree(k)?)?;
    let name = op.name();
    let build = |f: &dyn Fn(i64, i64, usize) -> Image| {
        OperatorMatrix::from_images(name, *basis, target, f)
    };
    Ok(match op {
        TorusOperator::PhiMult => build(&|jp, j, c| shifted(jp, j, c, |_, _| re(rat(1, 4)))),
        TorusOperator::N => build(&|jp, j, c| vec![((jp, j, c), re(int(jp * jp + j * j)))]),
        TorusOperator::NablaT => {
            build(&|jp, j, c| shifted(jp, j, c, |a, b| re(rat(a * jp + b * j, 4))))
        }
        TorusOperator::P if k == 1 => build(&|jp, j, c| shifted(jp, j, 1 - c, |a, b| re(rat(-a * b, 4)))),
        TorusOperator::P => OperatorMatrix::zero(name, *basis, target),
        TorusOperator::D => match k {
            0 => build(&|jp, j, _| vec![((jp, j, DTAU), im(int(jp))), ((jp, j, DRHO), im(int(j)))]),
            _ => build(&|jp, j, c| {
                let v = if c == DTAU { im(int(-j)) } else { im(int(jp)) };
                vec![((jp, j, 0), v)]
            }),
        },
        TorusOperator::Delta => match k {
            1 => build(&|jp, j, c| {
                let v = if c == DTAU { im(int(jp)) } else { im(int(-j)) };
                vec![((jp, j, 0), v)]
            }),
            _ => build(&|jp, j, _| vec![((jp, j, DTAU), im(int(j))), ((jp, j, DRHO), im(int(jp)))]),
        },
        TorusOperator::InteriorT => match k {
            1 => build(&|jp, j, c| {
                if c == DTAU {
                    shifted(jp, j, 0, t_tau)
                } else {
                    shifted(jp, j, 0, t_rho)
                }
            }),
            // ι_T(h dτ∧dρ) = h (T^τ dρ − T^ρ dτ)
            _ => build(&|jp, j, _| {
                let mut out = shifted(jp, j, DRHO, t_tau);
                out.extend(shifted(jp, j, DTAU, |a, b| -t_rho(a, b)));
                out
            }),
        },
        TorusOperator::LieT => {
            // Cartan: L_T = ι_T d + d ι_T
            let mut terms = Vec::new();
            if k < 2 {
                let d = assemble(TorusOperator::D, basis)?;
                terms.push(assemble(TorusOperator::InteriorT, &d.codomain)?.compose(&d));
            }
            if k > 0 {
                let iota = assemble(TorusOperator::InteriorT, basis)?;
                terms.push(assemble(TorusOperator::D, &iota.codomain)?.compose(&iota));
            }
            let first = terms.remove(0);
            terms.iter().fold(first, |acc, t| acc.add(t)).rename(name)
        }
    })
}

/// ½[N, ϕ] − P, the operator in the intertwining relation.
pub fn conformal_part(basis: &TorusBasis) -> Result<OperatorMatrix<Entry>> {
    let n = assemble(TorusOperator::N, basis)?;
    let phi = assemble(TorusOperator::PhiMult, basis)?;
    let p = assemble(TorusOperator::P, basis)?;
    Ok(n.compose(&phi).sub(&phi.compose(&n)).scale(&re(half())).sub(&p).rename("[N,phi]/2-P"))
}

/// How the K-type frame of the k = 1 multiplicity-2 block maps onto the
/// Fourier components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum BasisConvention {
    /// Off-diagonal factor −j'j, as forced by δ'(f dτ) = ∂τ f.
    #[default]
    Standard,
    /// Off-diagonal factor +j'j; a deliberately wrong frame for controls.
    Reflected,
}

impl FromStr for BasisConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Self::Standard),
            "reflected" => Ok(Self::Reflected),
            _ => Err(Error::Unsupported(format!("unknown basis convention '{s}'"))),
        }
    }
}

fn continued(x: &Rational, r: i64, jp: i64, j: i64) -> Result<Rational> {
    match gamma_ratio_continued(x, r) {
        ExtendedScalar::Finite(v) => Ok(v),
        _ => Err(Error::PoleOnMode { jp, j }),
    }
}

/// The intertwinor A as a Fourier-space matrix, from the spectral formulas
/// at p = q = 2 with J' = |j'|, J = |j|. The global normalization radical is
/// dropped; it does not affect the relation.
pub fn spectral_a(basis: &TorusBasis, r: i64, convention: BasisConvention) -> Result<OperatorMatrix<Entry>> {
    let mut cols: Vec<Image> = vec![Vec::new(); basis.dim()];
    let side = basis.side() as i64;
    for cell in 0..side * side {
        let (jp, j) = (cell / side - basis.m, cell % side - basis.m);
        let (big_jp, big_j) = (int(jp.abs()), int(j.abs()));
        let (x, y) = (&big_jp + &big_j, &big_jp - &big_j);
        let idx = |c| basis.index(jp, j, c).expect("mode in range");
        if basis.k != 1 || r == 0 {
            let v = continued(&(&x + int(1)), r, jp, j)? * continued(&(&y + int(1)), r, jp, j)?;
            for c in 0..basis.components() {
                cols[idx(c)].push(((jp, j, c), re(v.clone())));
            }
            continue;
        }
        let block = k1_block(&big_jp, &big_j, r).ok_or(Error::PoleOnMode { jp, j })?;
        let cfac = match convention {
            BasisConvention::Standard => int(-jp * j),
            BasisConvention::Reflected => int(jp * j),
        };
        let [a11, a12, a21, a22] = block;
        let a21 = if cfac.is_zero() { Rational::zero() } else { a21 / &cfac };
        // columns: image of dρ and of dτ
        cols[idx(DRHO)].extend([((jp, j, DRHO), re(a11)), ((jp, j, DTAU), re(a21))]);
        cols[idx(DTAU)].extend([((jp, j, DRHO), re(cfac * a12)), ((jp, j, DTAU), re(a22))]);
    }
    let image = |jp: i64, j: i64, c: usize| cols[basis.index(jp, j, c).expect("in range")].clone();
    Ok(OperatorMatrix::from_images(&format!("A(r={r})"), *basis, *basis, image))
}

/// The k = 1 block t·𝓑 at p = q = 2, k = 1, a = 1 (s = 0), with the common
/// radical of t1 dropped and t = t1/(−(X+r)(Y−r)(s+r)) simplified through
/// Γ((Y+r)/2)/Γ((Y−r)/2) = (Y−r)/2 · ((Y−r)/2+1)_{r−1}. Requires r ≥ 1.
fn k1_block(big_jp: &Rational, big_j: &Rational, r: i64) -> Option<[Rational; 4]> {
    if r < 1 {
        return None;
    }
    let params = BundleParams::new(2, 2, 1, 1).expect("torus bundle");
    let (x, y) = (big_jp + big_j, big_jp - big_j);
    let rr = int(r);
    let g_x2 = gamma_ratio_continued(&(&x + int(2)), r).exact()?.clone();
    let g_y_over = rising_factorial(&((&y - &rr) * half() + int(1)), (r - 1) as u32) * half();
    let t = -(g_x2 * g_y_over) / ((&x + &rr) * (params.s() + &rr));
    let b = unit_block(&params, &SpectralPoint::new(big_jp.clone(), big_j.clone()), r).scale(&t);
    Some([b.e11, b.e12, b.e21, b.e22])
}

fn exact_size(v: &Entry) -> Rational {
    let (a, b) = (v.re.abs(), v.im.abs());
    if a > b {
        a
    } else {
        b
    }
}

fn float_entry(v: &Entry) -> Complex<f64> {
    Complex::new(v.re.to_f64().unwrap_or(f64::NAN), v.im.to_f64().unwrap_or(f64::NAN))
}

/// Residual of A(Q − rϕ) − (Q + rϕ)A, Q = ½[N,ϕ] − P, on interior modes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub k: u8,
    pub r: i64,
    pub m: i64,
    pub convention: BasisConvention,
    pub interior_vectors: usize,
    /// Largest |Re|, |Im| of the exact residual.
    #[serde(serialize_with = "crate::report::ser_display")]
    pub exact: Rational,
    /// Floating residual with A scaled to unit max entry.
    pub float: f64,
    pub tol: f64,
    pub status: Status,
}

fn interior_max<T>(basis: &TorusBasis, col: &[(usize, T)], size: impl Fn(&T) -> f64) -> f64 {
    col.iter().filter(|(i, _)| basis.is_interior(*i)).map(|(_, v)| size(v)).fold(0.0, f64::max)
}

/// Exact and floating intertwining residual on the interior modes.
pub fn intertwining_residual(
    basis: &TorusBasis,
    r: i64,
    convention: BasisConvention,
    tol: f64,
) -> Result<ResidualReport> {
    let a = spectral_a(basis, r, convention)?;
    let q = conformal_part(basis)?;
    let phi = assemble(TorusOperator::PhiMult, basis)?.scale(&re(int(r)));
    let (left, right) = (q.sub(&phi), q.add(&phi));

    let a_max = a.entries().map(|(_, _, v)| float_entry(v).norm()).fold(0.0, f64::max);
    let af = a.map(|v| float_entry(v) / a_max);
    let (lf, rf) = (left.map(float_entry), right.map(float_entry));

    let interior: Vec<usize> = (0..basis.dim()).filter(|&i| basis.is_interior(i)).collect();
    let mut exact = Rational::zero();
    let mut float = 0.0f64;
    for &col in &interior {
        let lhs = a.apply(left.column(col));
        let rhs = right.apply(a.column(col));
        let diff = OperatorMatrix::<Entry>::combine(&lhs, &rhs);
        for (i, v) in &diff {
            if basis.is_interior(*i) {
                let size = exact_size(v);
                if size > exact {
                    exact = size;
                }
            }
        }
        let lhs = af.apply(lf.column(col));
        let rhs = rf.apply(af.column(col));
        float = float.max(interior_max(basis, &OperatorMatrix::<Complex<f64>>::combine(&lhs, &rhs), |v| v.norm()));
    }
    let status = if exact.is_zero() && float < tol { Status::Pass } else { Status::Fail };
    Ok(ResidualReport {
        k: basis.k,
        r,
        m: basis.m,
        convention,
        interior_vectors: interior.len(),
        exact,
        float,
        tol,
        status,
    })
}

/// Residuals for every (k, r) pair, one job each.
pub fn residual_sweep(
    m: i64,
    ks: &[u8],
    rs: &[i64],
    convention: BasisConvention,
    tol: f64,
    exec: Execution,
) -> Result<Vec<ResidualReport>> {
    let jobs: Vec<(u8, i64)> = ks.iter().flat_map(|&k| rs.iter().map(move |&r| (k, r))).collect();
    exec.map(jobs, |(k, r)| intertwining_residual(&TorusBasis::new(m, k)?, r, convention, tol))
        .into_iter()
        .collect()
}

/// An exact operator identity on the whole truncated space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub k: u8,
    pub m: i64,
    pub holds: bool,
    pub nonzero_entries: usize,
}

fn identity_report(identity: &str, basis: &TorusBasis, diff: &OperatorMatrix<Entry>) -> IdentityReport {
    IdentityReport {
        identity: identity.to_string(),
        k: basis.k,
        m: basis.m,
        holds: diff.nnz() == 0,
        nonzero_entries: diff.nnz(),
    }
}

/// ½[N, ϕ] = ∇_T + ϕ.
pub fn bl_identity(basis: &TorusBasis) -> Result<IdentityReport> {
    let n = assemble(TorusOperator::N, basis)?;
    let phi = assemble(TorusOperator::PhiMult, basis)?;
    let nabla = assemble(TorusOperator::NablaT, basis)?;
    let lhs = n.compose(&phi).sub(&phi.compose(&n)).scale(&re(half()));
    Ok(identity_report("[N,phi]/2 = nabla_T + phi", basis, &lhs.sub(&nabla.add(&phi))))
}

/// L_T − ∇_T = kϕ − P, with L_T from Cartan's formula.
pub fn p_identity(basis: &TorusBasis) -> Result<IdentityReport> {
    let lie = assemble(TorusOperator::LieT, basis)?;
    let nabla = assemble(TorusOperator::NablaT, basis)?;
    let phi = assemble(TorusOperator::PhiMult, basis)?;
    let p = assemble(TorusOperator::P, basis)?;
    let rhs = phi.scale(&re(int(basis.k as i64))).sub(&p);
    Ok(identity_report("L_T - nabla_T = k phi - P", basis, &lie.sub(&nabla).sub(&rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(m: i64, k: u8) -> TorusBasis {
        TorusBasis::new(m, k).unwrap()
    }

    #[test]
    fn indexing_round_trips() {
        let b = basis(3, 1);
        assert_eq!(b.dim(), 98);
        for i in 0..b.dim() {
            let (jp, j, c) = b.mode(i);
            assert_eq!(b.index(jp, j, c), Some(i));
        }
        assert_eq!(b.index(4, 0, 0), None);
    }

    #[test]
    fn phi_and_n_entries() {
        let b = basis(4, 0);
        let phi = assemble(TorusOperator::PhiMult, &b).unwrap();
        let col = b.index(1, 2, 0).unwrap();
        assert_eq!(phi.column(col).len(), 4);
        assert_eq!(phi.get(b.index(2, 1, 0).unwrap(), col), re(rat(1, 4)));
        let n = assemble(TorusOperator::N, &b).unwrap();
        assert_eq!(n.get(col, col), re(int(5)));
    }

    #[test]
    fn d_squares_to_zero() {
        let b = basis(3, 0);
        let d0 = assemble(TorusOperator::D, &b).unwrap();
        let d1 = assemble(TorusOperator::D, &d0.codomain).unwrap();
        assert_eq!(d1.compose(&d0).nnz(), 0);
        let b2 = basis(3, 2);
        let e2 = assemble(TorusOperator::Delta, &b2).unwrap();
        let e1 = assemble(TorusOperator::Delta, &e2.codomain).unwrap();
        assert_eq!(e1.compose(&e2).nnz(), 0);
    }

    #[test]
    fn identities_hold_exactly() {
        for k in 0..3 {
            let b = basis(5, k);
            assert!(bl_identity(&b).unwrap().holds);
            assert!(p_identity(&b).unwrap().holds, "k = {k}");
        }
    }

    #[test]
    fn r_zero_is_identity() {
        let b = basis(3, 1);
        let a = spectral_a(&b, 0, BasisConvention::Standard).unwrap();
        assert!(a.entries().all(|(i, j, v)| i == j && *v == re(int(1))));
        assert!(intertwining_residual(&b, 0, BasisConvention::Standard, 1e-9).unwrap().exact.is_zero());
    }

    #[test]
    fn residual_vanishes_at_small_truncation() {
        for k in 0..3 {
            for r in 1..4 {
                let rep = intertwining_residual(&basis(6, k), r, BasisConvention::Standard, 1e-9).unwrap();
                assert_eq!(rep.status, Status::Pass, "{rep:?}");
            }
        }
    }

    #[test]
    fn k1_block_is_a_multiple_of_d2k() {
        let params = BundleParams::new(2, 2, 1, 1).unwrap();
        for (jp, j) in [(1, 1), (3, 2), (2, 5), (0, 4)] {
            let (a, b) = (int(jp), int(j));
            let block = k1_block(&a, &b, 1).unwrap();
            let d2k = crate::blocks::d2k_block(&params, &SpectralPoint::new(a, b)).scale(&rat(-1, 4));
            assert_eq!(block, [d2k.e11, d2k.e12, d2k.e21, d2k.e22]);
        }
    }

    #[test]
    fn reflected_frame_fails() {
        let rep = intertwining_residual(&basis(6, 1), 1, BasisConvention::Reflected, 1e-9).unwrap();
        assert_eq!(rep.status, Status::Fail);
        assert!(rep.float > 1e-3);
    }
}
