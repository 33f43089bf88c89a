//! Deliberately broken models, one per verify suite.
#![allow(dead_code)]

use intertwine::arithmetic::int;
use intertwine::blocks::{self, CasimirShift, Poly2};
use intertwine::spectra::{self, BundleParams, Direction, KTypeFamily, SpectralPoint};
use intertwine::verify::{self, CheckReport, GridSpec, SpectralModel};
use intertwine::{Execution, ExtendedScalar, Rational, Result};

/// Doubles every finite nonzero multiplicity-1 transition quantity.
pub struct DoubledTransition;

impl SpectralModel for DoubledTransition {
    fn m1_transition(&self, pt: &SpectralPoint, r: i64, dir: Direction) -> Result<ExtendedScalar> {
        spectra::m1_transition(pt, r, dir)?.mul(&ExtendedScalar::Finite(int(2)))
    }
}

/// Shifts N1 by one.
pub struct ShiftedCasimir;

impl SpectralModel for ShiftedCasimir {
    fn casimir_interface(&self, params: &BundleParams, jp: i64, j: i64) -> CasimirShift {
        let mut c = CasimirShift::interface(params, jp, j);
        c.n1 += int(1);
        c
    }
}

/// det A with a stray factor J'+J+1.
pub struct StrayDetFactor;

impl SpectralModel for StrayDetFactor {
    fn m2_det(&self, pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
        spectra::m2_det(pt, r)?.mul(&ExtendedScalar::Finite(pt.sum() + int(1)))
    }
}

/// Doubles the d-family D_{2r,k} and adds a top-degree term to P_sym.
pub struct SkewedOperator;

impl SpectralModel for SkewedOperator {
    fn d2rk_eigenvalue(&self, family: KTypeFamily, params: &BundleParams, pt: &SpectralPoint, r: u32) -> Result<Rational> {
        let v = blocks::d2rk_eigenvalue(family, params, pt, r)?;
        Ok(if family == KTypeFamily::M1D { v * int(2) } else { v })
    }

    fn leading_symbol_polynomials(&self, family: KTypeFamily, params: &BundleParams, r: u32) -> Result<(Poly2, Poly2)> {
        let (op, sym) = blocks::leading_symbol_polynomials(family, params, r)?;
        Ok((op, sym.add(&Poly2::monomial(int(1), 2 * r, 0))))
    }
}

/// D_{2,k} off by one on the δ-family.
pub struct OffsetD2k;

impl SpectralModel for OffsetD2k {
    fn d2k_m1(&self, family: KTypeFamily, params: &BundleParams, pt: &SpectralPoint) -> Result<Rational> {
        Ok(blocks::d2k_m1(family, params, pt)? + int(1))
    }
}

/// A small grid that still reaches every code path.
pub fn small_grid() -> GridSpec {
    GridSpec { p: 2..=5, q: 2..=5, jp: 0..=5, j: 0..=5, r: 0..=3, ..GridSpec::default() }
}

/// Each suite run against its broken model.
pub fn control_reports(grid: &GridSpec, exec: Execution) -> Vec<CheckReport> {
    vec![
        verify::run_diamond_checks_with(&DoubledTransition, grid, exec),
        verify::run_interface_checks_with(&ShiftedCasimir, grid, exec),
        verify::run_det_checks_with(&StrayDetFactor, grid, exec),
        verify::run_d2rk_checks_with(&SkewedOperator, grid, exec),
        verify::run_scalar_reduction_with(&OffsetD2k, grid, exec),
    ]
}
