//! Coin construction and basis handling for the three-state walk.
//!
//! The walk is driven by a one-parameter family of real symmetric coins
//! C(rho), 0 < rho < 1, acting on the coin space spanned by {R, S, L}
//! (move right / stay / move left). The analysis of return probabilities
//! is simplest in the orthonormal basis {alpha1, alpha2, alpha3} where
//! alpha1 = C|S> is the state that returns to the origin with certainty.
//! Vectors and operators carry a runtime [`BasisTag`] so the two pictures
//! cannot be mixed up silently.

use crate::error::{Error, Result};
use crate::linalg::{c64, C64, Mat2, Mat3, Vec3, ONE, ZERO};

/// Coin-family parameter rho, restricted to the open interval (0, 1).
///
/// The endpoints are degenerate (the walk decouples or never moves) and the
/// closed-form return probabilities are singular at rho = 1, so construction
/// rejects them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoinParameter {
    rho: f64,
}

impl CoinParameter {
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho > 0.0 && rho < 1.0) {
            return Err(Error::InvalidCoinParameter { value: rho });
        }
        Ok(CoinParameter { rho })
    }

    /// rho = 1/sqrt(3), for which the coin is the 3x3 Grover matrix.
    pub fn grover() -> Self {
        CoinParameter {
            rho: 1.0 / 3.0_f64.sqrt(),
        }
    }

    pub fn get(&self) -> f64 {
        self.rho
    }
}

/// Which orthonormal coin basis a vector's or operator's components refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisTag {
    /// The movement basis {R, S, L}.
    Standard,
    /// The basis {alpha1, alpha2, alpha3} adapted to returns at the origin.
    Alpha,
}

impl std::fmt::Display for BasisTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisTag::Standard => write!(f, "standard"),
            BasisTag::Alpha => write!(f, "alpha"),
        }
    }
}

/// A coin-space vector together with the basis its components refer to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoinVector {
    components: Vec3,
    basis: BasisTag,
}

impl CoinVector {
    /// Wraps components without a normalization requirement (leaked origin
    /// amplitudes and intermediate results are generally subnormalized).
    pub fn new(components: Vec3, basis: BasisTag) -> Self {
        CoinVector { components, basis }
    }

    /// An initial coin state: must be normalized within 1e-12.
    pub fn state(components: Vec3, basis: BasisTag) -> Result<Self> {
        let n = components.norm_sqr();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized { norm_sqr: n });
        }
        Ok(CoinVector { components, basis })
    }

    pub fn components(&self) -> Vec3 {
        self.components
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn norm_sqr(&self) -> f64 {
        self.components.norm_sqr()
    }

    /// Hermitian inner product; both vectors must live in the same basis.
    pub fn inner(&self, other: &CoinVector) -> Result<C64> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: other.basis,
            });
        }
        Ok(self.components.inner(&other.components))
    }

    /// |R>: move right.
    pub fn right() -> Self {
        CoinVector::new(Vec3([ONE, ZERO, ZERO]), BasisTag::Standard)
    }

    /// |S>: stay put.
    pub fn stay() -> Self {
        CoinVector::new(Vec3([ZERO, ONE, ZERO]), BasisTag::Standard)
    }

    /// |L>: move left.
    pub fn left() -> Self {
        CoinVector::new(Vec3([ZERO, ZERO, ONE]), BasisTag::Standard)
    }
}

/// A coin-space operator together with the basis its entries refer to.
///
/// Besides the unitary coin, transition, and momentum-picture evolution
/// matrices this type also houses non-unitary operator values (Stieltjes,
/// first-return, and return-probability operators), so no unitarity is
/// enforced at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoinOperator {
    matrix: Mat3,
    basis: BasisTag,
}

impl CoinOperator {
    pub fn new(matrix: Mat3, basis: BasisTag) -> Self {
        CoinOperator { matrix, basis }
    }

    pub fn matrix(&self) -> Mat3 {
        self.matrix
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    /// Applies the operator to a vector in the same basis.
    pub fn apply(&self, v: &CoinVector) -> Result<CoinVector> {
        if self.basis != v.basis() {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: v.basis(),
            });
        }
        Ok(CoinVector::new(self.matrix * v.components(), self.basis))
    }

    /// max |(M^dagger M - I)_{ij}|.
    pub fn unitarity_defect(&self) -> f64 {
        self.matrix.unitarity_defect()
    }
}

/// The three-state coin C(rho) in the standard {R, S, L} basis.
///
/// Real, symmetric, and an involution: C^2 = I. At rho = 1/sqrt(3) it is the
/// Grover matrix (diagonal -1/3, off-diagonal 2/3).
pub fn build_coin(rho: CoinParameter) -> CoinOperator {
    let r = rho.get();
    let r2 = r * r;
    let e = r * (2.0 * (1.0 - r2)).sqrt();
    CoinOperator::new(
        Mat3::from_real([
            [-r2, e, 1.0 - r2],
            [e, 2.0 * r2 - 1.0, e],
            [1.0 - r2, e, -r2],
        ]),
        BasisTag::Standard,
    )
}

/// The return-adapted orthonormal basis (alpha1, alpha2, alpha3), each given
/// by its standard-basis components.
///
/// alpha1 = C|S> is mapped to |S> by the coin (C is an involution), so a
/// walker started in alpha1 is found at the origin after one step with
/// certainty. alpha2 completes the span of {alpha1, |S>}; alpha3 = (|R> -
/// |L>)/sqrt(2) is orthogonal to that plane.
pub fn build_alpha_basis(rho: CoinParameter) -> [CoinVector; 3] {
    let r = rho.get();
    let r2 = r * r;
    let e = r * (2.0 * (1.0 - r2)).sqrt();
    let d = 2.0 * r2 - 1.0;
    let s = 1.0 / 2.0_f64.sqrt();
    [
        CoinVector::new(Vec3::from_real([e, d, e]), BasisTag::Standard),
        CoinVector::new(
            Vec3::from_real([d * s, -2.0 * r * (1.0 - r2).sqrt(), d * s]),
            BasisTag::Standard,
        ),
        CoinVector::new(Vec3::from_real([s, 0.0, -s]), BasisTag::Standard),
    ]
}

/// The unitary transition matrix T whose rows are alpha1, alpha2, alpha3.
///
/// T maps standard components to alpha components: T alpha_i = e_i. Its
/// entries are real, so T^dagger = T^T.
pub fn build_transition(rho: CoinParameter) -> CoinOperator {
    let [a1, a2, a3] = build_alpha_basis(rho);
    CoinOperator::new(
        Mat3::from_rows(a1.components(), a2.components(), a3.components()),
        BasisTag::Standard,
    )
}

/// Direction of a basis change.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    StandardToAlpha,
    AlphaToStandard,
}

impl Direction {
    fn source(self) -> BasisTag {
        match self {
            Direction::StandardToAlpha => BasisTag::Standard,
            Direction::AlphaToStandard => BasisTag::Alpha,
        }
    }

    fn target(self) -> BasisTag {
        match self {
            Direction::StandardToAlpha => BasisTag::Alpha,
            Direction::AlphaToStandard => BasisTag::Standard,
        }
    }
}

/// Re-expresses a vector's components in the other basis: v -> Tv going
/// standard -> alpha, v -> T^dagger v going back.
pub fn change_vector_basis(
    v: &CoinVector,
    transition: &CoinOperator,
    direction: Direction,
) -> Result<CoinVector> {
    if v.basis() != direction.source() {
        return Err(Error::BasisMismatch {
            expected: direction.source(),
            found: v.basis(),
        });
    }
    let t = transition.matrix();
    let out = match direction {
        Direction::StandardToAlpha => t * v.components(),
        Direction::AlphaToStandard => t.adjoint() * v.components(),
    };
    Ok(CoinVector::new(out, direction.target()))
}

/// Re-expresses an operator in the other basis: M -> T M T^dagger going
/// standard -> alpha, M -> T^dagger M T going back.
pub fn change_operator_basis(
    m: &CoinOperator,
    transition: &CoinOperator,
    direction: Direction,
) -> Result<CoinOperator> {
    if m.basis() != direction.source() {
        return Err(Error::BasisMismatch {
            expected: direction.source(),
            found: m.basis(),
        });
    }
    let t = transition.matrix();
    let out = match direction {
        Direction::StandardToAlpha => t * m.matrix() * t.adjoint(),
        Direction::AlphaToStandard => t.adjoint() * m.matrix() * t,
    };
    Ok(CoinOperator::new(out, direction.target()))
}

/// The two-state (right/left) coin, kept around for its exactly known return
/// probability; see [`crate::recurrence::polya_two_state`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoStateCoin {
    gamma: C64,
}

impl TwoStateCoin {
    /// Requires 0 < |gamma| < 1; the endpoints give a trivial walk.
    pub fn new(gamma: C64) -> Result<Self> {
        let g = gamma.norm();
        if !(g > 0.0 && g < 1.0) {
            return Err(Error::InvalidTwoStateCoin { magnitude: g });
        }
        Ok(TwoStateCoin { gamma })
    }

    pub fn gamma(&self) -> C64 {
        self.gamma
    }

    /// The derived diagonal entry sqrt(1 - |gamma|^2).
    pub fn rho(&self) -> f64 {
        (1.0 - self.gamma.norm_sqr()).sqrt()
    }

    pub fn matrix(&self) -> Mat2 {
        let r = c64(self.rho(), 0.0);
        Mat2([[r, -self.gamma], [self.gamma.conj(), r]])
    }
}
