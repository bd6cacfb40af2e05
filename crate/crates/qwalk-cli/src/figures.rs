//! Data sweeps behind the survey figures, emitted as CSV documents.
//!
//! Each function returns the full document (header plus rows) so callers
//! can route it to stdout or a file. Rows are ordered by the outer grid
//! variable, then the inner one; all grids are inclusive of both endpoints.

use crate::output::{csv_document, fmt15, CliError};
use qwalk_core::recurrence::{paradox_scan, polya_number, q_closed, state_recurrence};
use qwalk_core::{c64, BasisTag, CoinParameter, CoinVector, Vec3, C64};
use std::f64::consts::TAU;

/// `n` evenly spaced points on [lo, hi], endpoints included.
pub fn lin_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|k| lo + step * k as f64).collect()
}

fn ensure_grid(what: &'static str, n: usize) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("{what} must be at least 2, got {n}")));
    }
    Ok(())
}

fn rho_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<CoinParameter>, CliError> {
    ensure_grid("rho-points", n)?;
    // non-finite bounds fall through to the per-point coin parameter check
    if lo >= hi {
        return Err(CliError::Usage(format!(
            "rho-min must be below rho-max, got {lo} and {hi}"
        )));
    }
    lin_grid(lo, hi, n)
        .into_iter()
        .map(|r| CoinParameter::new(r).map_err(CliError::from))
        .collect()
}

fn alpha_state(components: [C64; 3]) -> qwalk_core::Result<CoinVector> {
    CoinVector::state(Vec3(components), BasisTag::Alpha)
}

/// Site recurrence over the (p1, rho) plane: p1 is the weight on alpha1, so
/// P = p1 + Q(rho)(1 - p1). Columns: p1, rho, P.
pub fn fig1(
    p1_points: usize,
    rho_min: f64,
    rho_max: f64,
    rho_points: usize,
) -> Result<String, CliError> {
    ensure_grid("p1-points", p1_points)?;
    let rhos = rho_grid(rho_min, rho_max, rho_points)?;
    let mut rows = Vec::with_capacity(p1_points * rhos.len());
    for p1 in lin_grid(0.0, 1.0, p1_points) {
        let psi = alpha_state([c64(p1.sqrt(), 0.0), c64((1.0 - p1).sqrt(), 0.0), C64::default()])?;
        for &rho in &rhos {
            let p = polya_number(rho, &psi)?.value;
            rows.push(format!("{},{},{}", fmt15(p1), fmt15(rho.get()), fmt15(p)));
        }
    }
    Ok(csv_document("p1,rho,P", &rows))
}

/// The closed-form return probability Q of the non-alpha1 sector against
/// rho. Columns: rho, Q.
pub fn fig2(rho_min: f64, rho_max: f64, rho_points: usize) -> Result<String, CliError> {
    let rows: Vec<String> = rho_grid(rho_min, rho_max, rho_points)?
        .into_iter()
        .map(|rho| format!("{},{}", fmt15(rho.get()), fmt15(q_closed(rho))))
        .collect();
    Ok(csv_document("rho,Q", &rows))
}

/// State recurrence of the three alpha basis states against rho. Columns:
/// rho, S_alpha1, S_alpha2, S_alpha3.
pub fn fig3(
    rho_min: f64,
    rho_max: f64,
    rho_points: usize,
    n_points: usize,
) -> Result<String, CliError> {
    let mut rows = Vec::with_capacity(rho_points);
    for rho in rho_grid(rho_min, rho_max, rho_points)? {
        let mut row = fmt15(rho.get());
        for slot in 0..3 {
            let mut components = [C64::default(); 3];
            components[slot] = c64(1.0, 0.0);
            let s = state_recurrence(rho, &alpha_state(components)?, n_points)?;
            row.push(',');
            row.push_str(&fmt15(s.result.value));
        }
        rows.push(row);
    }
    Ok(csv_document("rho,S_alpha1,S_alpha2,S_alpha3", &rows))
}

/// State recurrence of (alpha1 + e^{i phi} alpha2)/sqrt(2) at the Grover
/// point, over one full period of phi. Columns: phi, S.
pub fn fig5(phi_points: usize, n_points: usize) -> Result<String, CliError> {
    ensure_grid("phi-points", phi_points)?;
    let rho = CoinParameter::grover();
    let half = std::f64::consts::FRAC_1_SQRT_2;
    let mut rows = Vec::with_capacity(phi_points);
    for phi in lin_grid(0.0, TAU, phi_points) {
        let psi = alpha_state([c64(half, 0.0), C64::from_polar(half, phi), C64::default()])?;
        let s = state_recurrence(rho, &psi, n_points)?;
        rows.push(format!("{},{}", fmt15(phi), fmt15(s.result.value)));
    }
    Ok(csv_document("phi,S", &rows))
}

/// State recurrence of the three real two-state superpositions
/// a alpha_i + sqrt(1-a^2) alpha_j at the Grover point. Columns: a,
/// S_alpha1_alpha2, S_alpha1_alpha3, S_alpha2_alpha3.
pub fn fig6(a_points: usize, n_points: usize) -> Result<String, CliError> {
    ensure_grid("a-points", a_points)?;
    let rho = CoinParameter::grover();
    let mut rows = Vec::with_capacity(a_points);
    for a in lin_grid(0.0, 1.0, a_points) {
        let b = (1.0 - a * a).sqrt();
        let (a, b) = (c64(a, 0.0), c64(b, 0.0));
        let zero = C64::default();
        let mut row = fmt15(a.re);
        for components in [[a, b, zero], [a, zero, b], [zero, a, b]] {
            let s = state_recurrence(rho, &alpha_state(components)?, n_points)?;
            row.push(',');
            row.push_str(&fmt15(s.result.value));
        }
        rows.push(row);
    }
    Ok(csv_document("a,S_alpha1_alpha2,S_alpha1_alpha3,S_alpha2_alpha3", &rows))
}

/// State vs site recurrence of the superposition rho alpha1 -
/// sqrt(1-rho^2) alpha2 against rho; the two curves cross near rho ~ 0.79.
/// Columns: rho, S, P.
pub fn fig7(
    rho_min: f64,
    rho_max: f64,
    rho_points: usize,
    n_points: usize,
) -> Result<String, CliError> {
    let grid = rho_grid(rho_min, rho_max, rho_points)?;
    let rows: Vec<String> = paradox_scan(&grid, n_points)?
        .into_iter()
        .map(|pt| format!("{},{},{}", fmt15(pt.rho), fmt15(pt.state), fmt15(pt.site)))
        .collect();
    Ok(csv_document("rho,S,P", &rows))
}
