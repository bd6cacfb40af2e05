//! Closed-form generating functions of the walk in the alpha basis.
//!
//! The momentum-picture evolution operator, the Stieltjes operator mu_c(z),
//! the first-return operator a_c(z), and the scalar helper functions
//! u, v, w, g, j they are built from. All operator values are produced in
//! the alpha basis, where the first-return structure is block diagonal:
//! a 2x2 block coupling (alpha1, alpha2) and a scalar block for alpha3.
//!
//! Branch bookkeeping: g(z) = sqrt(1 + 2(1-2 rho^2) z + z^2) is taken as the
//! principal square root of the radicand, which is analytic on the open disk
//! and equals 1 at z = 0 (the radicand never crosses the negative real axis
//! for |z| < 1; its two roots sit on the unit circle at angles +-t* with
//! t* = arccos(2 rho^2 - 1)). On the circle itself the explicit piecewise
//! boundary expression [`g_boundary`] is used.

use crate::coin::{BasisTag, CoinOperator, CoinParameter};
use crate::error::{Error, Result};
use crate::linalg::{c64, C64, Mat3, ZERO};
use crate::quad::periodic_angles;
use std::f64::consts::PI;

/// A point of the open unit disk, the domain of the generating functions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiskPoint {
    z: C64,
}

impl DiskPoint {
    pub fn new(z: C64) -> Result<Self> {
        // the comparison is written so that NaN components are rejected too
        if z.norm() < 1.0 {
            Ok(DiskPoint { z })
        } else {
            Err(Error::OutsideDisk { z })
        }
    }

    pub fn get(&self) -> C64 {
        self.z
    }
}

/// An angle t on the unit circle, wrapped into [0, 2 pi); stands for z = e^{it}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CirclePoint {
    t: f64,
}

impl CirclePoint {
    pub fn new(t: f64) -> Self {
        CirclePoint {
            t: t.rem_euclid(2.0 * PI),
        }
    }

    pub fn angle(&self) -> f64 {
        self.t
    }

    pub fn z(&self) -> C64 {
        C64::from_polar(1.0, self.t)
    }
}

/// The scalar building blocks of the closed forms, evaluated at one z.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalarHelpers {
    /// z^2 (1 - 2 rho^2) - 1
    pub u: C64,
    /// 1 - 2 rho^2 + z
    pub v: C64,
    /// z (2 rho^2 - 1) - 1
    pub w: C64,
    /// sqrt(1 + 2 (1 - 2 rho^2) z + z^2), branch with g(0) = 1
    pub g: C64,
    /// 1 - 2 rho^2 z + z^2 + (z - 1) g
    pub j: C64,
}

/// Evaluates the helpers with the disk branch of g (principal square root).
pub fn helpers(rho: CoinParameter, z: C64) -> ScalarHelpers {
    let r2 = rho.get() * rho.get();
    let one = c64(1.0, 0.0);
    let g = (one + z * (2.0 * (1.0 - 2.0 * r2)) + z * z).sqrt();
    ScalarHelpers {
        u: z * z * (1.0 - 2.0 * r2) - one,
        v: z + (1.0 - 2.0 * r2),
        w: z * (2.0 * r2 - 1.0) - one,
        g,
        j: j_from_g(r2, z, g),
    }
}

/// Evaluates the helpers on the circle, with g from the piecewise boundary
/// expression.
pub fn helpers_boundary(rho: CoinParameter, t: CirclePoint) -> ScalarHelpers {
    let z = t.z();
    let mut h = helpers(rho, z);
    h.g = g_boundary(rho, t);
    h.j = j_from_g(rho.get() * rho.get(), z, h.g);
    h
}

fn j_from_g(r2: f64, z: C64, g: C64) -> C64 {
    c64(1.0, 0.0) - z * (2.0 * r2) + z * z + (z - 1.0) * g
}

/// Boundary values of g on the unit circle.
///
/// For cos t >= 2 rho^2 - 1 (the arc containing z = 1) the value is
/// e^{it/2} sgn(sin t) sqrt(2 (cos t + 1 - 2 rho^2)); on the complementary
/// arc it is -i e^{it/2} sqrt(-2 (cos t + 1 - 2 rho^2)). The convention
/// sgn(0) = +1 fixes the measure-zero angles t = 0 and t = pi; at the branch
/// points t = +-t* the value is 0.
pub fn g_boundary(rho: CoinParameter, t: CirclePoint) -> C64 {
    let r2 = rho.get() * rho.get();
    let angle = t.angle();
    let c = angle.cos() + 1.0 - 2.0 * r2;
    let half = C64::from_polar(1.0, 0.5 * angle);
    if angle.cos() >= 2.0 * r2 - 1.0 {
        let sign = if angle.sin() >= 0.0 { 1.0 } else { -1.0 };
        half * (sign * (2.0 * c).max(0.0).sqrt())
    } else {
        c64(0.0, -1.0) * half * (-2.0 * c).max(0.0).sqrt()
    }
}

/// The branch-point angle t* = arccos(2 rho^2 - 1) in (0, pi); the radicand
/// of g vanishes at e^{+-it*}.
pub fn branch_angle(rho: CoinParameter) -> f64 {
    (2.0 * rho.get() * rho.get() - 1.0).acos()
}

/// The three arcs of [0, 2 pi] cut at the branch angles: [0, t*],
/// [t*, 2 pi - t*], [2 pi - t*, 2 pi]. Boundary integrands are smooth inside
/// each arc but have square-root kinks at the cuts.
pub fn branch_intervals(rho: CoinParameter) -> [(f64, f64); 3] {
    let ts = branch_angle(rho);
    [(0.0, ts), (ts, 2.0 * PI - ts), (2.0 * PI - ts, 2.0 * PI)]
}

/// The momentum-picture one-step evolution operator in the alpha basis, the
/// conjugation by T of (shift phase) x (coin) at momentum p. Unitary for
/// every p.
pub fn evolution_fourier(rho: CoinParameter, p: f64) -> CoinOperator {
    let r = rho.get();
    let r2 = r * r;
    let e = 2.0 * r * (1.0 - r2).sqrt();
    let d = 2.0 * r2 - 1.0;
    let (sp, cp) = p.sin_cos();
    CoinOperator::new(
        Mat3([
            [c64(d, 0.0), c64(-e * cp, 0.0), c64(0.0, -e * sp)],
            [c64(-e, 0.0), c64(-d * cp, 0.0), c64(0.0, -d * sp)],
            [ZERO, c64(0.0, -sp), c64(-cp, 0.0)],
        ]),
        BasisTag::Alpha,
    )
}

/// Entries of the Stieltjes operator at z given a branch value of g; shared
/// by the disk and boundary evaluators so the two cannot drift apart.
fn stieltjes_entries(rho: CoinParameter, z: C64, g: C64) -> Result<Mat3> {
    if (z - 1.0).norm() < 1e-14 {
        return Err(Error::SingularPoint { z });
    }
    if g.norm() < 1e-12 {
        return Err(Error::NearSingular { z });
    }
    let r = rho.get();
    let r2 = r * r;
    let s = (1.0 - r2).sqrt();
    let v = z + (1.0 - 2.0 * r2);
    let w = z * (2.0 * r2 - 1.0) - 1.0;
    let pre = c64(1.0, 0.0) / ((z - 1.0) * g);
    let m11 = z * (2.0 * (1.0 - r2)) - g;
    let m12 = (g + w) * (s / r);
    let m21 = z * (g - v) * (s / r);
    let m22 = w * (g - v) / (2.0 * r2);
    let m33 = (v * g - 1.0 - z * (z + 2.0 - 4.0 * r2)) / (2.0 * r2);
    Ok(Mat3([
        [pre * m11, pre * m12, ZERO],
        [pre * m21, pre * m22, ZERO],
        [ZERO, ZERO, pre * m33],
    ]))
}

/// Closed-form Stieltjes operator mu_c(z) in the alpha basis.
///
/// Defined for z in the closed unit disk except z = 1 (simple pole of the
/// prefactor) and the two branch points of g, where the formula divides by
/// zero. z = 0 returns the identity directly (the analytic limit mu_0).
pub fn stieltjes_closed(rho: CoinParameter, z: C64) -> Result<CoinOperator> {
    if z.norm() > 1.0 + 1e-12 {
        return Err(Error::OutsideDisk { z });
    }
    if z.norm() == 0.0 {
        return Ok(CoinOperator::new(Mat3::identity(), BasisTag::Alpha));
    }
    let g = helpers(rho, z).g;
    Ok(CoinOperator::new(
        stieltjes_entries(rho, z, g)?,
        BasisTag::Alpha,
    ))
}

/// Stieltjes operator on the circle, using the piecewise boundary branch of g.
pub fn stieltjes_boundary(rho: CoinParameter, t: CirclePoint) -> Result<CoinOperator> {
    let g = g_boundary(rho, t);
    Ok(CoinOperator::new(
        stieltjes_entries(rho, t.z(), g)?,
        BasisTag::Alpha,
    ))
}

/// Quadrature Stieltjes operator: the mean over momentum of
/// (I - z U(p))^{-1} on a uniform periodic grid of `n_points` angles.
///
/// Independent of the closed form (it never touches g or the block formulas),
/// so agreement between the two validates the residue-derived expressions.
/// Requires |z| < 1 strictly, which keeps the integrand regular, and
/// n_points >= 64.
pub fn stieltjes_numeric(rho: CoinParameter, z: C64, n_points: usize) -> Result<CoinOperator> {
    let z = DiskPoint::new(z)?.get();
    if n_points < 64 {
        return Err(Error::TooSmall {
            what: "n_points",
            min: 64,
            got: n_points,
        });
    }
    let mut acc = Mat3::zero();
    for p in periodic_angles(n_points) {
        let u = evolution_fourier(rho, p).matrix();
        let m = (Mat3::identity() - u.scale(z))
            .inverse()
            .ok_or(Error::SingularPoint { z })?;
        acc = acc + m;
    }
    Ok(CoinOperator::new(
        acc.scale(c64(1.0 / n_points as f64, 0.0)),
        BasisTag::Alpha,
    ))
}

/// Entries of the first-return operator at z given a branch value of g.
fn first_return_entries(rho: CoinParameter, z: C64, g: C64) -> Result<Mat3> {
    let r = rho.get();
    let r2 = r * r;
    let s = (1.0 - r2).sqrt();
    let v = z + (1.0 - 2.0 * r2);
    let gv = g - v;
    // (g - v)(g + v) = 4 rho^2 (1 - rho^2), so gv is bounded away from zero
    // on the closed disk; this check is defensive.
    if gv.norm() < 1e-12 {
        return Err(Error::NearSingular { z });
    }
    let zm1 = z - 1.0;
    let a11 = z * (2.0 * r2 - 1.0);
    let a12 = -zm1 * (4.0 * r2 * r * s) / gv - 2.0 * r * s;
    let a21 = z * (-2.0 * r * s);
    let a22 = zm1 * (2.0 * r2 * (1.0 - 2.0 * r2)) / gv + (1.0 - 2.0 * r2);
    let a33 = -j_from_g(r2, z, g) / (2.0 * (r2 - 1.0));
    Ok(Mat3([
        [a11, a12, ZERO],
        [a21, a22, ZERO],
        [ZERO, ZERO, a33],
    ]))
}

/// Closed-form first-return operator a_c(z) in the alpha basis; satisfies the
/// renewal identity a_c(z) = I - mu_c(z)^{-1} and vanishes at z = 0.
pub fn first_return_closed(rho: CoinParameter, z: C64) -> Result<CoinOperator> {
    if z.norm() > 1.0 + 1e-12 {
        return Err(Error::OutsideDisk { z });
    }
    let g = helpers(rho, z).g;
    Ok(CoinOperator::new(
        first_return_entries(rho, z, g)?,
        BasisTag::Alpha,
    ))
}

/// First-return operator on the circle, using the boundary branch of g.
pub fn first_return_boundary(rho: CoinParameter, t: CirclePoint) -> Result<CoinOperator> {
    let g = g_boundary(rho, t);
    Ok(CoinOperator::new(
        first_return_entries(rho, t.z(), g)?,
        BasisTag::Alpha,
    ))
}

/// The integrand of the return-probability operator: r(t) =
/// a_c(e^{it})^dagger a_c(e^{it}).
///
/// Diagonal with (1,1) entry exactly 1 and lower entries
/// |j|^2 / (4 (rho^2 - 1)^2). If the defensive near-singular check of the
/// entries fires (only conceivable at a branch point), the angle is nudged by
/// 1e-9; the integrand is bounded, so a measure-zero shift cannot move the
/// integral.
pub fn rz_product(rho: CoinParameter, t: CirclePoint) -> Result<CoinOperator> {
    let a = match first_return_boundary(rho, t) {
        Ok(a) => a,
        Err(Error::NearSingular { .. }) => {
            first_return_boundary(rho, CirclePoint::new(t.angle() + 1e-9))?
        }
        Err(e) => return Err(e),
    };
    let m = a.matrix();
    Ok(CoinOperator::new(m.adjoint() * m, BasisTag::Alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::{build_coin, build_transition};
    use approx::assert_abs_diff_eq;

    const DISK_PTS: [(f64, f64); 8] = [
        (0.3, 0.2),
        (-0.5, 0.1),
        (0.1, -0.6),
        (-0.2, -0.4),
        (0.7, 0.0),
        (0.0, 0.55),
        (-0.45, -0.3),
        (0.25, 0.6),
    ];

    fn rhos() -> Vec<CoinParameter> {
        [0.2, 1.0 / 3.0_f64.sqrt(), 0.5, 0.8]
            .iter()
            .map(|&r| CoinParameter::new(r).unwrap())
            .collect()
    }

    #[test]
    fn helpers_at_zero() {
        for rho in rhos() {
            let h = helpers(rho, c64(0.0, 0.0));
            let r2 = rho.get() * rho.get();
            assert!((h.g - c64(1.0, 0.0)).norm() < 1e-15);
            assert!((h.u - c64(-1.0, 0.0)).norm() < 1e-15);
            assert!((h.v - c64(1.0 - 2.0 * r2, 0.0)).norm() < 1e-15);
            assert!((h.w - c64(-1.0, 0.0)).norm() < 1e-15);
            assert!(h.j.norm() < 1e-15);
        }
    }

    #[test]
    fn g_squares_to_radicand_on_disk() {
        for rho in rhos() {
            let r2 = rho.get() * rho.get();
            for &(re, im) in &DISK_PTS {
                let z = c64(re, im);
                let h = helpers(rho, z);
                let radicand = c64(1.0, 0.0) + z * (2.0 * (1.0 - 2.0 * r2)) + z * z;
                assert!((h.g * h.g - radicand).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn g_minus_v_product_identity() {
        // (g - v)(g + v) = 4 rho^2 (1 - rho^2) everywhere
        for rho in rhos() {
            let r2 = rho.get() * rho.get();
            for &(re, im) in &DISK_PTS {
                let h = helpers(rho, c64(re, im));
                let prod = (h.g - h.v) * (h.g + h.v);
                assert!((prod - c64(4.0 * r2 * (1.0 - r2), 0.0)).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn g_boundary_special_angles() {
        for rho in rhos() {
            let r = rho.get();
            // z = -1 lies on the outer arc: g(-1) = 2 rho
            let gm1 = g_boundary(rho, CirclePoint::new(PI));
            assert!((gm1 - c64(2.0 * r, 0.0)).norm() < 1e-13, "rho={r}");
            // branch points: radicand vanishes
            let ts = branch_angle(rho);
            assert!(g_boundary(rho, CirclePoint::new(ts)).norm() < 1e-7);
            assert!(g_boundary(rho, CirclePoint::new(2.0 * PI - ts)).norm() < 1e-7);
            // t = 0, i.e. z = 1: g = 2 sqrt(1 - rho^2) with the sgn(0)=+1 convention
            let g1 = g_boundary(rho, CirclePoint::new(0.0));
            assert!((g1 - c64(2.0 * (1.0 - r * r).sqrt(), 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn g_boundary_matches_radial_limit() {
        let r_in = 1.0 - 1e-8;
        for rho in rhos() {
            let mut worst = 0.0_f64;
            for k in 0..1000 {
                let t = (k as f64 + 0.5) * 2.0 * PI / 1000.0;
                let inside = helpers(rho, C64::from_polar(r_in, t)).g;
                let boundary = g_boundary(rho, CirclePoint::new(t));
                worst = worst.max((inside - boundary).norm());
            }
            assert!(worst < 1e-6, "worst radial-limit gap {worst} at rho={}", rho.get());
        }
    }

    #[test]
    fn j_has_constant_modulus_on_inner_arc() {
        for rho in rhos() {
            let r2 = rho.get() * rho.get();
            let expected = 4.0 * (r2 - 1.0) * (r2 - 1.0);
            let ts = branch_angle(rho);
            for k in 1..40 {
                let t = ts * k as f64 / 40.0;
                for &angle in &[t, 2.0 * PI - t] {
                    let h = helpers_boundary(rho, CirclePoint::new(angle));
                    assert_abs_diff_eq!(h.j.norm_sqr(), expected, epsilon = 1e-10);
                }
            }
        }
    }

    #[test]
    fn evolution_fourier_matches_factored_construction() {
        for rho in rhos() {
            let t = build_transition(rho).matrix();
            let c = build_coin(rho).matrix();
            for k in 0..17 {
                let p = -PI + k as f64 * (2.0 * PI / 16.0);
                let direct = evolution_fourier(rho, p).matrix();
                let phases = Mat3::diag(
                    C64::from_polar(1.0, p),
                    c64(1.0, 0.0),
                    C64::from_polar(1.0, -p),
                );
                let factored = t * phases * c * t.adjoint();
                assert!(direct.max_abs_diff(&factored) < 1e-12, "p={p}");
                assert!(direct.unitarity_defect() < 1e-12);
            }
        }
    }

    #[test]
    fn evolution_fourier_third_row_at_zero_momentum() {
        let u = evolution_fourier(CoinParameter::grover(), 0.0).matrix();
        assert!(u.0[2][0].norm() < 1e-15);
        assert!(u.0[2][1].norm() < 1e-15);
        assert!((u.0[2][2] - c64(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn stieltjes_at_zero_is_identity() {
        let m = stieltjes_closed(CoinParameter::grover(), c64(0.0, 0.0)).unwrap();
        assert_eq!(m.basis(), BasisTag::Alpha);
        assert!(m.matrix().max_abs_diff(&Mat3::identity()) == 0.0);
    }

    #[test]
    fn stieltjes_formula_is_continuous_at_zero() {
        // the z = 0 special case must agree with nearby formula values
        for rho in rhos() {
            let near = stieltjes_closed(rho, c64(1e-9, -1e-9)).unwrap();
            assert!(near.matrix().max_abs_diff(&Mat3::identity()) < 1e-8);
        }
    }

    #[test]
    fn stieltjes_rejects_pole_and_exterior() {
        let rho = CoinParameter::grover();
        assert!(matches!(
            stieltjes_closed(rho, c64(1.0, 0.0)),
            Err(Error::SingularPoint { .. })
        ));
        assert!(matches!(
            stieltjes_closed(rho, c64(1.3, 0.4)),
            Err(Error::OutsideDisk { .. })
        ));
    }

    #[test]
    fn stieltjes_block_pattern() {
        for rho in rhos() {
            for &(re, im) in &DISK_PTS {
                let m = stieltjes_closed(rho, c64(re, im)).unwrap().matrix();
                for (i, j) in [(0, 2), (2, 0), (1, 2), (2, 1)] {
                    assert_eq!(m.0[i][j], ZERO);
                }
            }
        }
    }

    #[test]
    fn numeric_stieltjes_is_identity_at_zero() {
        let m = stieltjes_numeric(CoinParameter::grover(), c64(0.0, 0.0), 64).unwrap();
        assert!(m.matrix().max_abs_diff(&Mat3::identity()) < 1e-14);
    }

    #[test]
    fn numeric_stieltjes_agrees_with_closed_form() {
        let rho = CoinParameter::grover();
        let z = C64::from_polar(0.5, PI / 3.0);
        let numeric = stieltjes_numeric(rho, z, 512).unwrap();
        let closed = stieltjes_closed(rho, z).unwrap();
        assert!(numeric.matrix().max_abs_diff(&closed.matrix()) < 1e-9);
    }

    #[test]
    fn numeric_stieltjes_validates_inputs() {
        let rho = CoinParameter::grover();
        assert!(matches!(
            stieltjes_numeric(rho, c64(0.0, 1.0), 128),
            Err(Error::OutsideDisk { .. })
        ));
        assert!(matches!(
            stieltjes_numeric(rho, c64(0.2, 0.0), 32),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn first_return_vanishes_at_zero() {
        for rho in rhos() {
            let a = first_return_closed(rho, c64(0.0, 0.0)).unwrap();
            assert!(a.matrix().max_abs() < 1e-14);
        }
    }

    #[test]
    fn renewal_identity_on_disk() {
        // a_c = I - mu_c^{-1}  and  mu_c a_c = mu_c - I
        for rho in rhos() {
            for &(re, im) in &DISK_PTS {
                let z = c64(re, im);
                let mu = stieltjes_closed(rho, z).unwrap().matrix();
                let a = first_return_closed(rho, z).unwrap().matrix();
                let from_mu = Mat3::identity() - mu.inverse().expect("mu regular on disk");
                assert!(a.max_abs_diff(&from_mu) < 1e-10, "z={z} rho={}", rho.get());
                assert!((mu * a).max_abs_diff(&(mu - Mat3::identity())) < 1e-10);
            }
        }
    }

    #[test]
    fn rz_product_is_diagonal_with_unit_leading_entry() {
        for rho in rhos() {
            let ts = branch_angle(rho);
            for k in 0..60 {
                let t = (k as f64 + 0.5) * 2.0 * PI / 60.0;
                let r = rz_product(rho, CirclePoint::new(t)).unwrap().matrix();
                assert!(r.max_off_diagonal() < 1e-9, "t={t}");
                assert!((r.0[0][0] - c64(1.0, 0.0)).norm() < 1e-12);
                // lower entries agree and equal |j|^2 / (4 (rho^2-1)^2)
                assert!((r.0[1][1] - r.0[2][2]).norm() < 1e-10);
                if t < ts || t > 2.0 * PI - ts {
                    assert!((r.0[1][1] - c64(1.0, 0.0)).norm() < 1e-9, "inner arc t={t}");
                }
            }
        }
    }

    #[test]
    fn rz_product_survives_branch_points() {
        let rho = CoinParameter::grover();
        let ts = branch_angle(rho);
        let r = rz_product(rho, CirclePoint::new(ts)).unwrap().matrix();
        assert!(r.max_off_diagonal() < 1e-8);
        assert!(r.max_abs() <= 1.0 + 1e-9);
    }

    #[test]
    fn boundary_stieltjes_rejects_z_equal_one() {
        assert!(matches!(
            stieltjes_boundary(CoinParameter::grover(), CirclePoint::new(0.0)),
            Err(Error::SingularPoint { .. })
        ));
    }

    #[test]
    fn circle_point_wraps_angles() {
        let t = CirclePoint::new(-0.25);
        assert_abs_diff_eq!(t.angle(), 2.0 * PI - 0.25, epsilon = 1e-14);
        let full = CirclePoint::new(2.0 * PI);
        assert_abs_diff_eq!(full.angle(), 0.0, epsilon = 1e-14);
        assert!((t.z() - C64::from_polar(1.0, -0.25)).norm() < 1e-14);
    }
}
