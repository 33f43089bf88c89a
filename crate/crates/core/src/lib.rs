//! Exact spectra of conformal intertwinors on differential-form bundles
//! over S^{p-1}×S^{q-1}, the even-order operators D_{2r,k}, consistency
//! suites over parameter grids, and an explicit torus realization.
//!
//! ```
//! use intertwine::arithmetic::{rat, ExtendedScalar};
//! use intertwine::spectra::{m1_eigenvalue, SpectralPoint};
//!
//! // Γ(2)/Γ(1) · Γ(3/2)/Γ(1/2)
//! let pt = SpectralPoint::new(rat(3, 2), rat(1, 2));
//! assert_eq!(m1_eigenvalue(&pt, 1).unwrap(), ExtendedScalar::Finite(rat(1, 2)));
//! ```

pub mod arithmetic;
pub mod blocks;
pub mod error;
pub mod exec;
pub mod report;
pub mod spectra;
pub mod torus;
pub mod verify;

pub use arithmetic::{ExtendedScalar, Radical, RadicalValue, Rational};
pub use error::{Error, Result};
pub use exec::Execution;
