//! Consistency suites over parameter grids, in exact arithmetic.
//!
//! Each suite returns one [`CheckRecord`] per grid point, in lexicographic
//! order of (p, q, k, a, family, j', j, r) regardless of how the sweep was
//! executed. Points where every identity is undefined (poles, vanishing
//! normalizations) are reported as skipped, never as failures.

mod grid;
mod model;
mod record;
mod suites;

pub use grid::GridSpec;
pub use model::{SpectralModel, Standard};
pub use record::{CheckRecord, CheckReport, Status, Summary, Witness};
pub use suites::{
    run_d2rk_checks, run_d2rk_checks_with, run_det_checks, run_det_checks_with,
    run_diamond_checks, run_diamond_checks_with, run_interface_checks, run_interface_checks_with,
    run_scalar_reduction, run_scalar_reduction_with,
};

/// The five exact suites on one grid.
pub fn run_all(grid: &GridSpec, exec: crate::Execution) -> Vec<CheckReport> {
    let m = &Standard;
    vec![
        run_diamond_checks_with(m, grid, exec),
        run_interface_checks_with(m, grid, exec),
        run_det_checks_with(m, grid, exec),
        run_d2rk_checks_with(m, grid, exec),
        run_scalar_reduction_with(m, grid, exec),
    ]
}
