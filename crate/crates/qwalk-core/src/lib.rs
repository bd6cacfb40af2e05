//! Monitored recurrence of a one-parameter family of three-state quantum
//! walks on the line.
//!
//! The crate has two independent routes to every quantity of interest:
//!
//! * [`simulate`] evolves the walker wavefunction exactly (sparse window,
//!   no truncation) and extracts survival probabilities, first-return
//!   probabilities, and the Taylor coefficients of the return and
//!   first-return generating functions. This is the ground-truth oracle.
//! * [`genfun`] evaluates the closed-form generating functions (Stieltjes
//!   function, first-return function, boundary values on the unit circle),
//!   and [`recurrence`] turns them into recurrence probabilities by
//!   closed-form evaluation or boundary quadrature.
//!
//! The two routes are checked against each other in the test suite; the
//! `acceptance` integration test of the CLI crate runs the full set of
//! cross-checks.

pub mod coin;
pub mod error;
pub mod genfun;
pub mod linalg;
pub mod quad;
pub mod recurrence;
pub mod simulate;

pub use coin::{
    build_alpha_basis, build_coin, build_transition, change_operator_basis, change_vector_basis,
    BasisTag, CoinOperator, CoinParameter, CoinVector, Direction, TwoStateCoin,
};
pub use error::{Error, Result};
pub use linalg::{c64, Mat2, Mat3, Vec3, C64};
