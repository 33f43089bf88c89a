use crate::arithmetic::{ExtendedScalar, Radical, RadicalValue, Rational};
use crate::blocks::{self, CasimirShift, InterfaceBlock, Poly2, TwoByTwo};
use crate::error::Result;
use crate::spectra::{self, BundleParams, Direction, KTypeFamily, SpectralPoint};

/// The formulas under test. Every suite evaluates through this trait; the
/// default methods are the library implementation, and test fixtures
/// override single methods to inject deliberate errors.
pub trait SpectralModel: Sync {
    fn m1_transition(&self, pt: &SpectralPoint, r: i64, dir: Direction) -> Result<ExtendedScalar> {
        spectra::m1_transition(pt, r, dir)
    }

    fn m1_eigenvalue(&self, pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
        spectra::m1_eigenvalue(pt, r)
    }

    fn m2_transition(&self, pt: &SpectralPoint, r: i64, dir: Direction) -> Result<ExtendedScalar> {
        spectra::m2_transition(pt, r, dir)
    }

    fn m2_det(&self, pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
        spectra::m2_det(pt, r)
    }

    fn cross_type_quotient(&self, params: &BundleParams, r: i64) -> Result<ExtendedScalar> {
        spectra::cross_type_quotient(params, r)
    }

    fn theorem1_eigenvalue(
        &self,
        family: KTypeFamily,
        params: &BundleParams,
        pt: &SpectralPoint,
        r: i64,
    ) -> Result<RadicalValue> {
        spectra::theorem1_eigenvalue(family, params, pt, r)
    }

    fn interface_entries(
        &self,
        params: &BundleParams,
        pt: &SpectralPoint,
        r: i64,
        t1: &Radical,
    ) -> Result<InterfaceBlock> {
        blocks::interface_entries(params, pt, r, t1)
    }

    fn t1_squared(&self, params: &BundleParams, pt: &SpectralPoint, r: i64) -> Result<ExtendedScalar> {
        blocks::t1_squared(params, pt, r)
    }

    fn t1_value(&self, params: &BundleParams, pt: &SpectralPoint, r: i64) -> Result<RadicalValue> {
        blocks::t1_value(params, pt, r)
    }

    fn casimir_interface(&self, params: &BundleParams, jp: i64, j: i64) -> CasimirShift {
        CasimirShift::interface(params, jp, j)
    }

    fn d2k_m1(&self, family: KTypeFamily, params: &BundleParams, pt: &SpectralPoint) -> Result<Rational> {
        blocks::d2k_m1(family, params, pt)
    }

    fn d2k_block(&self, params: &BundleParams, pt: &SpectralPoint) -> TwoByTwo {
        blocks::d2k_block(params, pt)
    }

    fn d2rk_eigenvalue(
        &self,
        family: KTypeFamily,
        params: &BundleParams,
        pt: &SpectralPoint,
        r: u32,
    ) -> Result<Rational> {
        blocks::d2rk_eigenvalue(family, params, pt, r)
    }

    fn d2rk_block(&self, params: &BundleParams, pt: &SpectralPoint, r: u32) -> Result<TwoByTwo> {
        blocks::d2rk_block(params, pt, r)
    }

    fn leading_symbol_polynomials(
        &self,
        family: KTypeFamily,
        params: &BundleParams,
        r: u32,
    ) -> Result<(Poly2, Poly2)> {
        blocks::leading_symbol_polynomials(family, params, r)
    }
}

/// The library formulas.
#[derive(Debug, Clone, Copy, Default)]
pub struct Standard;

impl SpectralModel for Standard {}
