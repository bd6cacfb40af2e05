//! Quadrature helpers: Gauss-Legendre panels for interval integrals,
//! the uniform periodic rule for momentum integrals, and Cauchy-integral
//! extraction of Taylor coefficients.
//!
//! The boundary integrands of this crate are smooth except for square-root
//! kinks at the branch angles, so the interval integrators split at those
//! angles (done by the caller) and apply fixed-order Gauss-Legendre panels
//! inside each piece.

use crate::linalg::{c64, C64, Mat3};
use std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on [-1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes the n-point rule by Newton iteration on the Legendre
    /// polynomial from the Chebyshev initial guess; exact for polynomials of
    /// degree 2n-1.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "quadrature order must be positive");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for k in 0..n {
            let mut x = (PI * (k as f64 + 0.75) / (nf + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[k] = x;
            weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        // Newton starts from the largest root; store ascending.
        nodes.reverse();
        weights.reverse();
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node/weight pairs affinely mapped to [a, b].
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        self.nodes
            .iter()
            .zip(self.weights.iter())
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for j in 2..=n {
        let jf = j as f64;
        let p_next = ((2.0 * jf - 1.0) * x * p - (jf - 1.0) * p_prev) / jf;
        p_prev = p;
        p = p_next;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Splits [a, b] into equal panels of `order`-point Gauss-Legendre rules so
/// that at least `n_points` nodes are used; returns all (node, weight) pairs.
pub fn composite_nodes(a: f64, b: f64, n_points: usize, order: usize) -> Vec<(f64, f64)> {
    let panels = n_points.div_ceil(order).max(1);
    let rule = GaussLegendre::new(order);
    let width = (b - a) / panels as f64;
    let mut out = Vec::with_capacity(panels * order);
    for p in 0..panels {
        let lo = a + p as f64 * width;
        out.extend(rule.mapped(lo, lo + width));
    }
    out
}

/// Uniform angles t_k = 2 pi k / n, the nodes of the periodic rectangle rule.
/// Averaging f over them approximates the mean of f over the circle with
/// spectral accuracy for smooth periodic f.
pub fn periodic_angles(n: usize) -> impl Iterator<Item = f64> {
    let step = 2.0 * PI / n as f64;
    (0..n).map(move |k| k as f64 * step)
}

/// Taylor coefficients of an analytic matrix function via the Cauchy integral
/// on |z| = radius, orders 0..=n_max, sampled at 4 * n_max points (at least
/// 16).
///
/// The alias error of order n is sum_{m>=1} c_{n+mN} radius^{mN}, so a radius
/// well inside the domain of analyticity makes the extraction accurate to
/// near machine precision.
pub fn taylor_from_circle<F: FnMut(C64) -> Mat3>(
    mut f: F,
    n_max: usize,
    radius: f64,
) -> Vec<Mat3> {
    let n_samples = (4 * n_max).max(16);
    let samples: Vec<Mat3> = periodic_angles(n_samples)
        .map(|t| f(C64::from_polar(radius, t)))
        .collect();
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = Mat3::zero();
        for (k, m) in samples.iter().enumerate() {
            let phase = -2.0 * PI * (n * k % n_samples) as f64 / n_samples as f64;
            acc = acc + m.scale(C64::from_polar(1.0, phase));
        }
        let scale = 1.0 / (n_samples as f64 * radius.powi(n as i32));
        coeffs.push(acc.scale(c64(scale, 0.0)));
    }
    coeffs
}
