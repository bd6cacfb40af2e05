//! Cross-validation of the closed-form generating functions against the
//! exact simulation oracle: Taylor coefficients, renewal recursion, the
//! three-way Stieltjes agreement, and probability bookkeeping over long runs.

use qwalk_core::genfun::{first_return_closed, stieltjes_closed, stieltjes_numeric};
use qwalk_core::linalg::{c64, Vec3, C64};
use qwalk_core::quad::taylor_from_circle;
use qwalk_core::simulate::{
    a_series_renewal, first_return_operator_oracle, mu_series_oracle, step, survival_series,
    WalkState,
};
use qwalk_core::{build_coin, BasisTag, CoinParameter, CoinVector};

fn rho_grid() -> Vec<CoinParameter> {
    [0.2, 1.0 / 3.0_f64.sqrt(), 0.5, 0.8]
        .iter()
        .map(|&r| CoinParameter::new(r).unwrap())
        .collect()
}

#[test]
fn renewal_recursion_equals_direct_monitored_oracle() {
    for rho in rho_grid() {
        let mu = mu_series_oracle(rho, 30).unwrap();
        let a = a_series_renewal(&mu).unwrap();
        for n in 1..=30 {
            let direct = first_return_operator_oracle(rho, n).unwrap();
            let gap = a.coefficient(n).unwrap().max_abs_diff(&direct.matrix());
            assert!(
                gap < 1e-10,
                "renewal/direct mismatch {gap:.2e} at n={n}, rho={}",
                rho.get()
            );
        }
    }
}

#[test]
fn closed_first_return_taylor_matches_simulation() {
    for rho in rho_grid() {
        let coeffs = taylor_from_circle(
            |z| first_return_closed(rho, z).unwrap().matrix(),
            30,
            0.7,
        );
        assert!(coeffs[0].max_abs() < 1e-8, "a(z) must have no constant term");
        let mu = mu_series_oracle(rho, 30).unwrap();
        let a = a_series_renewal(&mu).unwrap();
        for n in 1..=30 {
            let gap = coeffs[n].max_abs_diff(a.coefficient(n).unwrap());
            assert!(
                gap < 1e-8,
                "closed-form Taylor off by {gap:.2e} at n={n}, rho={}",
                rho.get()
            );
        }
    }
}

#[test]
fn closed_stieltjes_taylor_matches_simulation() {
    for &r in &[0.2, 1.0 / 3.0_f64.sqrt(), 0.8] {
        let rho = CoinParameter::new(r).unwrap();
        let coeffs = taylor_from_circle(
            |z| stieltjes_closed(rho, z).unwrap().matrix(),
            30,
            0.7,
        );
        let mu = mu_series_oracle(rho, 30).unwrap();
        for n in 0..=30 {
            let gap = coeffs[n].max_abs_diff(mu.coefficient(n).unwrap());
            assert!(gap < 1e-8, "mu Taylor off by {gap:.2e} at n={n}, rho={r}");
        }
    }
}

#[test]
fn stieltjes_triple_agreement_at_interior_points() {
    let rho = CoinParameter::grover();
    let mu = mu_series_oracle(rho, 200).unwrap();
    for k in 0..20 {
        let radius = 0.15 + 0.6 * k as f64 / 19.0;
        let angle = 0.37 + 2.0 * std::f64::consts::PI * k as f64 / 20.0;
        let z = C64::from_polar(radius, angle);
        let closed = stieltjes_closed(rho, z).unwrap().matrix();
        let numeric = stieltjes_numeric(rho, z, 2048).unwrap().matrix();
        let series = mu.eval(z);
        let cn = closed.max_abs_diff(&numeric);
        let cs = closed.max_abs_diff(&series);
        assert!(cn < 1e-6, "closed vs numeric {cn:.2e} at z={z}");
        assert!(cs < 1e-6, "closed vs series {cs:.2e} at z={z}");
    }
}

#[test]
fn unitarity_holds_over_a_thousand_steps() {
    let rho = CoinParameter::new(0.6).unwrap();
    let coin = build_coin(rho);
    let raw = Vec3([c64(0.31, -0.42), c64(-0.15, 0.55), c64(0.6, 0.11)]);
    let psi = CoinVector::state(raw.scale(c64(1.0 / raw.norm(), 0.0)), BasisTag::Standard).unwrap();
    let mut state = WalkState::from_origin(&psi).unwrap();
    for _ in 0..1000 {
        state = step(&state, &coin).unwrap();
    }
    assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
    let (lo, hi) = state.support().unwrap();
    assert!(lo >= -1000 && hi <= 1000);
}

#[test]
fn partial_sums_are_monotone_and_bounded_by_closed_form() {
    let rho = CoinParameter::grover();
    let states = [
        CoinVector::right(),
        CoinVector::stay(),
        CoinVector::state(Vec3::from_real([0.6, 0.0, 0.8]), BasisTag::Standard).unwrap(),
        CoinVector::state(
            Vec3([c64(0.5, 0.5), c64(0.0, -0.5), c64(0.5, 0.0)]),
            BasisTag::Standard,
        )
        .unwrap(),
    ];
    for psi in &states {
        let p = qwalk_core::recurrence::polya_number(rho, psi).unwrap().value;
        let series = survival_series(rho, psi, 1500).unwrap();
        let mut partial = 0.0;
        for pt in &series {
            let next = partial + pt.first_return;
            assert!(next + 1e-15 >= partial, "partial sums must not decrease");
            partial = next;
            assert!(
                partial <= p + 1e-6,
                "partial sum {partial} exceeded closed form {p} at n={}",
                pt.n
            );
        }
        assert!(p - partial < 5e-2, "1500 terms should nearly exhaust P");
    }
}
