use thiserror::Error;

/// Errors raised by the spectral machinery.
///
/// Poles are not errors: they are carried as [`crate::ExtendedScalar::Pole`].
/// Only configurations without a well-defined value end up here.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A 0/0 or pole-times-zero configuration.
    #[error("indeterminate value: {0}")]
    Indeterminate(String),

    /// A floating gamma argument sits within the pole tolerance of a
    /// nonpositive integer on both sides of a quotient.
    #[error("gamma argument {argument} is within {tolerance:e} of a pole")]
    PoleProximity { argument: f64, tolerance: f64 },

    #[error("invalid bundle parameters: {0}")]
    InvalidParams(String),

    #[error("K-type {0} does not exist for these parameters")]
    NonexistentKType(String),

    /// Multiplicity-1 normalization with s = ±r.
    #[error("normalization degenerates at s = {s}, r = {r}")]
    DegenerateNormalization { s: String, r: i64 },

    /// A named factor in a denominator vanished.
    #[error("degenerate denominator: {0} = 0")]
    DegenerateDenominator(&'static str),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A pole landed on a retained torus mode.
    #[error("pole at mode (j'={jp}, j={j})")]
    PoleOnMode { jp: i64, j: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
