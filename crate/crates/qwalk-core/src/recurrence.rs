//! Return probabilities: the site recurrence (Polya) number via closed form
//! and quadrature, the exactly solvable two-state walk, and the scalar
//! state-recurrence pipeline.
//!
//! Site recurrence asks whether the monitored walker is ever detected back
//! at the origin site; state recurrence monitors the rank-one projector onto
//! the full initial state and is generally smaller. Both reduce to boundary
//! integrals of first-return generating functions over the unit circle.

use crate::coin::{
    build_transition, change_vector_basis, BasisTag, CoinOperator, CoinParameter, CoinVector,
    Direction, TwoStateCoin,
};
use crate::error::{Error, Result};
use crate::genfun::{branch_intervals, rz_product, stieltjes_boundary, stieltjes_closed, CirclePoint};
use crate::linalg::{c64, C64, Mat3};
use crate::quad::composite_nodes;
use std::f64::consts::PI;

/// Gauss-Legendre order of one panel in the branch-split composite rules.
const QUAD_ORDER: usize = 32;

/// How a recurrence probability was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Quadrature,
    SeriesPartialSum,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::ClosedForm => write!(f, "closed"),
            Method::Quadrature => write!(f, "quadrature"),
            Method::SeriesPartialSum => write!(f, "series"),
        }
    }
}

/// A recurrence probability with provenance: the method that produced it,
/// its resolution (quadrature points or series terms; 0 for closed forms),
/// and an error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecurrenceResult {
    pub value: f64,
    pub method: Method,
    /// n_points for quadrature, n_terms for partial sums, 0 for closed forms.
    pub resolution: usize,
    pub error_estimate: f64,
}

fn ensure_state(psi: &CoinVector) -> Result<()> {
    let n = psi.norm_sqr();
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::NotNormalized { norm_sqr: n });
    }
    Ok(())
}

fn to_alpha(rho: CoinParameter, psi: &CoinVector) -> Result<CoinVector> {
    match psi.basis() {
        BasisTag::Alpha => Ok(*psi),
        BasisTag::Standard => {
            change_vector_basis(psi, &build_transition(rho), Direction::StandardToAlpha)
        }
    }
}

/// Quadrature nodes for one trip around the circle, split at the branch
/// angles and allocated proportionally to arc length, with `QUAD_ORDER`-point
/// Gauss-Legendre panels inside each arc.
fn branch_split_nodes(rho: CoinParameter, n_points: usize) -> Vec<(f64, f64)> {
    let mut nodes = Vec::with_capacity(n_points + 3 * QUAD_ORDER);
    for (a, b) in branch_intervals(rho) {
        let share = (n_points as f64 * (b - a) / (2.0 * PI)).round() as usize;
        nodes.extend(composite_nodes(a, b, share.max(QUAD_ORDER), QUAD_ORDER));
    }
    nodes
}

/// Closed-form recurrence probability Q shared by every initial coin state
/// orthogonal to alpha1:
///
/// Q = [2 rho (2 rho^2 + 1) sqrt(1 - rho^2) + (1 - 4 rho^2) arccos(2 rho^2 - 1)]
///     / [pi (rho^2 - 1)^2]
///
/// Q decreases from 1 (rho -> 0) to 0 (rho -> 1).
pub fn q_closed(rho: CoinParameter) -> f64 {
    let r = rho.get();
    let r2 = r * r;
    let numerator = 2.0 * r * (2.0 * r2 + 1.0) * (1.0 - r2).sqrt()
        + (1.0 - 4.0 * r2) * (2.0 * r2 - 1.0).acos();
    numerator / (PI * (r2 - 1.0) * (r2 - 1.0))
}

/// The return-probability operator R = mean over the circle of
/// a_c^dagger a_c, by branch-split quadrature with at least `n_points` nodes
/// (minimum 128). Equals diag(1, Q, Q) in the alpha basis.
pub fn recurrence_operator_quadrature(
    rho: CoinParameter,
    n_points: usize,
) -> Result<CoinOperator> {
    if n_points < 128 {
        return Err(Error::TooSmall {
            what: "n_points",
            min: 128,
            got: n_points,
        });
    }
    let mut acc = Mat3::zero();
    for (t, w) in branch_split_nodes(rho, n_points) {
        let r = rz_product(rho, CirclePoint::new(t))?;
        acc = acc + r.matrix().scale(c64(w / (2.0 * PI), 0.0));
    }
    Ok(CoinOperator::new(acc, BasisTag::Alpha))
}

/// Weight p1 = |<alpha1|psi>|^2 of the certainly-returning component.
pub fn alpha1_weight(rho: CoinParameter, psi: &CoinVector) -> Result<f64> {
    ensure_state(psi)?;
    let alpha = to_alpha(rho, psi)?;
    Ok(alpha.components().0[0].norm_sqr())
}

/// Site recurrence probability P(psi) = p1 + Q (1 - p1), closed form.
pub fn polya_number(rho: CoinParameter, psi: &CoinVector) -> Result<RecurrenceResult> {
    let p1 = alpha1_weight(rho, psi)?;
    let q = q_closed(rho);
    Ok(RecurrenceResult {
        value: p1 + q * (1.0 - p1),
        method: Method::ClosedForm,
        resolution: 0,
        error_estimate: 0.0,
    })
}

/// Site recurrence via quadrature of the return-probability operator:
/// <psi|R|psi> with R from [`recurrence_operator_quadrature`]. The error
/// estimate compares against a half-resolution run.
pub fn polya_quadrature(
    rho: CoinParameter,
    psi: &CoinVector,
    n_points: usize,
) -> Result<RecurrenceResult> {
    ensure_state(psi)?;
    if n_points < 128 {
        return Err(Error::TooSmall {
            what: "n_points",
            min: 128,
            got: n_points,
        });
    }
    let alpha = to_alpha(rho, psi)?;
    let expectation = |points: usize| -> Result<f64> {
        let mut acc = Mat3::zero();
        for (t, w) in branch_split_nodes(rho, points) {
            let r = rz_product(rho, CirclePoint::new(t))?;
            acc = acc + r.matrix().scale(c64(w / (2.0 * PI), 0.0));
        }
        Ok(alpha.components().inner(&(acc * alpha.components())).re)
    };
    let full = expectation(n_points)?;
    let half = expectation((n_points / 2).max(QUAD_ORDER))?;
    Ok(RecurrenceResult {
        value: full,
        method: Method::Quadrature,
        resolution: n_points,
        error_estimate: (full - half).abs(),
    })
}

/// Site recurrence as a partial sum of simulated first-return probabilities
/// sum_{n<=n_terms} q_n; a lower bound converging to P(psi) from below. The
/// last summand is reported as the error estimate.
pub fn polya_series(
    rho: CoinParameter,
    psi: &CoinVector,
    n_terms: usize,
) -> Result<RecurrenceResult> {
    let series = crate::simulate::survival_series(rho, psi, n_terms)?;
    let value: f64 = series.iter().map(|p| p.first_return).sum();
    let last = series.last().map(|p| p.first_return).unwrap_or(0.0);
    Ok(RecurrenceResult {
        value,
        method: Method::SeriesPartialSum,
        resolution: n_terms,
        error_estimate: last,
    })
}

/// Exact site recurrence probability of the two-state walk:
///
/// P = 2 (|gamma| sqrt(1 - |gamma|^2) - (1 - 2 |gamma|^2) arcsin |gamma|)
///     / (pi |gamma|^2)
///
/// For |gamma| < 1e-4 the two-term expansion (8x/3 + 4x^3/15)/pi is used to
/// avoid the 0/0 cancellation at the ballistic limit.
pub fn polya_two_state(coin: TwoStateCoin) -> f64 {
    let x = coin.gamma().norm();
    if x < 1e-4 {
        return (8.0 * x / 3.0 + 4.0 * x * x * x / 15.0) / PI;
    }
    2.0 * (x * (1.0 - x * x).sqrt() - (1.0 - 2.0 * x * x) * x.asin()) / (PI * x * x)
}

/// Scalar Stieltjes matrix element mu_psi(z) = <psi| mu_c(z) |psi>.
pub fn mu_state(rho: CoinParameter, psi: &CoinVector, z: C64) -> Result<C64> {
    ensure_state(psi)?;
    let alpha = to_alpha(rho, psi)?;
    let image = stieltjes_closed(rho, z)?.apply(&alpha)?;
    alpha.inner(&image)
}

/// State recurrence probability plus quadrature diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateRecurrence {
    pub result: RecurrenceResult,
    /// Number of quadrature nodes where |mu_psi| fell below 1e-12 and the
    /// node had to be offset by 1e-9 in t.
    pub warnings: usize,
}

fn state_integral(rho: CoinParameter, alpha: &CoinVector, n_points: usize) -> Result<(f64, usize)> {
    let mut acc = 0.0;
    let mut warnings = 0usize;
    let psi = alpha.components();
    let mu_at = |t: f64| -> Result<C64> {
        let mu = stieltjes_boundary(rho, CirclePoint::new(t))?;
        Ok(psi.inner(&(mu.matrix() * psi)))
    };
    for (t, w) in branch_split_nodes(rho, n_points) {
        let mut mu = mu_at(t);
        if matches!(&mu, Ok(m) if m.norm() < 1e-12) || mu.is_err() {
            warnings += 1;
            mu = mu_at(t + 1e-9);
        }
        let mu = mu?;
        let a = c64(1.0, 0.0) - c64(1.0, 0.0) / mu;
        acc += w / (2.0 * PI) * a.norm_sqr();
    }
    Ok((acc, warnings))
}

/// State recurrence S(psi): the mean of |1 - 1/mu_psi|^2 over the circle,
/// by branch-split quadrature with at least `n_points` nodes (minimum 512).
///
/// The value is clamped to [0, 1]; the error estimate combines the
/// half-resolution difference with any clamped excess.
pub fn state_recurrence(
    rho: CoinParameter,
    psi: &CoinVector,
    n_points: usize,
) -> Result<StateRecurrence> {
    ensure_state(psi)?;
    if n_points < 512 {
        return Err(Error::TooSmall {
            what: "n_points",
            min: 512,
            got: n_points,
        });
    }
    let alpha = to_alpha(rho, psi)?;
    let (raw, warnings) = state_integral(rho, &alpha, n_points)?;
    let (half, _) = state_integral(rho, &alpha, n_points / 2)?;
    let value = raw.clamp(0.0, 1.0);
    Ok(StateRecurrence {
        result: RecurrenceResult {
            value,
            method: Method::Quadrature,
            resolution: n_points,
            error_estimate: (raw - half).abs() + (raw - value).abs(),
        },
        warnings,
    })
}

/// One row of the site-vs-state recurrence comparison for the superposition
/// state rho |alpha1> - sqrt(1 - rho^2) |alpha2>.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParadoxPoint {
    pub rho: f64,
    /// State recurrence S(psi).
    pub state: f64,
    /// Site recurrence P(psi) = rho^2 + Q (1 - rho^2).
    pub site: f64,
}

fn paradox_state(rho: CoinParameter) -> CoinVector {
    let r = rho.get();
    CoinVector::new(
        crate::linalg::Vec3::from_real([r, -(1.0 - r * r).sqrt(), 0.0]),
        BasisTag::Alpha,
    )
}

/// Evaluates (rho, S, P) for the superposition state on a parameter grid.
/// S exceeds P for small rho and drops below it near rho ~ 0.79.
pub fn paradox_scan(rho_grid: &[CoinParameter], n_points: usize) -> Result<Vec<ParadoxPoint>> {
    rho_grid
        .iter()
        .map(|&rho| {
            let psi = paradox_state(rho);
            let s = state_recurrence(rho, &psi, n_points)?.result.value;
            let p = polya_number(rho, &psi)?.value;
            Ok(ParadoxPoint {
                rho: rho.get(),
                state: s,
                site: p,
            })
        })
        .collect()
}

/// Locates the rho where S - P changes sign for the superposition state, by
/// bisection to 1e-4. Errors when S - P has the same sign at both ends of
/// the bracket.
pub fn paradox_crossover(lo: CoinParameter, hi: CoinParameter, n_points: usize) -> Result<f64> {
    let diff = |rho: CoinParameter| -> Result<f64> {
        let psi = paradox_state(rho);
        let s = state_recurrence(rho, &psi, n_points)?.result.value;
        let p = polya_number(rho, &psi)?.value;
        Ok(s - p)
    };
    let (mut a, mut b) = (lo.get(), hi.get());
    let mut fa = diff(lo)?;
    let fb = diff(hi)?;
    if fa * fb > 0.0 {
        return Err(Error::NoSignChange { lo: a, hi: b });
    }
    while b - a > 1e-4 {
        let mid = 0.5 * (a + b);
        let fm = diff(CoinParameter::new(mid)?)?;
        if fa * fm <= 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    Ok(0.5 * (a + b))
}
