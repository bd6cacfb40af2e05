use crate::coin::BasisTag;
use crate::linalg::C64;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The coin family is defined on the open interval 0 < rho < 1.
    #[error("coin parameter must satisfy 0 < rho < 1, got {value}")]
    InvalidCoinParameter { value: f64 },

    /// The two-state coin requires 0 < |gamma| < 1.
    #[error("two-state coin requires 0 < |gamma| < 1, got |gamma| = {magnitude}")]
    InvalidTwoStateCoin { magnitude: f64 },

    /// A vector or operator was supplied in the wrong basis.
    #[error("basis mismatch: expected {expected:?}, found {found:?}")]
    BasisMismatch { expected: BasisTag, found: BasisTag },

    /// Initial coin states must be unit vectors.
    #[error("coin state must be normalized, got squared norm {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    /// The Stieltjes function has a pole at z = 1.
    #[error("generating function is singular at z = {z}")]
    SingularPoint { z: C64 },

    /// The momentum-integral evaluator requires |z| < 1.
    #[error("point z = {z} lies outside the open unit disk")]
    OutsideDisk { z: C64 },

    /// A closed-form denominator (g, or g - v) fell below tolerance.
    #[error("near-singular denominator at z = {z}")]
    NearSingular { z: C64 },

    /// A resolution or count parameter was below its documented minimum.
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    /// A series argument did not have the required structure.
    #[error("invalid matrix series: {reason}")]
    InvalidSeries { reason: &'static str },

    /// Bisection requires a sign change of S - P on the given bracket.
    #[error("no sign change of S - P on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
