//! Exact wavefunction evolution of the walk, monitored evolution with a
//! projective measurement at the origin, and the series-coefficient oracle.
//!
//! Everything in this module is brute force on purpose: it evolves the full
//! wavefunction with no truncation, so its output serves as ground truth for
//! the closed-form generating functions in [`crate::genfun`]. One step costs
//! O(window); a run to n_max costs O(n_max^2).

use crate::coin::{
    build_coin, build_transition, change_operator_basis, change_vector_basis, BasisTag,
    CoinOperator, CoinParameter, CoinVector, Direction,
};
use crate::error::{Error, Result};
use crate::linalg::{C64, Mat3, Vec3, ZERO};

/// The walker wavefunction: one coin 3-vector per occupied lattice site,
/// standard basis.
///
/// Stored as a contiguous window `[left, left + amps.len())`; the window grows
/// by one site per side per step, which is exactly the light cone, so the
/// evolution is exact rather than truncated. Reads outside the window return
/// the zero vector, so the type behaves like a sparse site map.
#[derive(Clone, Debug)]
pub struct WalkState {
    left: i64,
    amps: Vec<[C64; 3]>,
    step_count: u64,
}

impl WalkState {
    /// Walker localized at the origin with coin state `psi` (standard basis).
    pub fn from_origin(psi: &CoinVector) -> Result<Self> {
        if psi.basis() != BasisTag::Standard {
            return Err(Error::BasisMismatch {
                expected: BasisTag::Standard,
                found: psi.basis(),
            });
        }
        Ok(WalkState {
            left: 0,
            amps: vec![psi.components().0],
            step_count: 0,
        })
    }

    /// Coin amplitude at `site`; zero vector outside the support window.
    pub fn amplitude(&self, site: i64) -> CoinVector {
        let idx = site - self.left;
        let v = if idx >= 0 && (idx as usize) < self.amps.len() {
            Vec3(self.amps[idx as usize])
        } else {
            Vec3::zero()
        };
        CoinVector::new(v, BasisTag::Standard)
    }

    /// Amplitude at the origin.
    pub fn at_origin(&self) -> CoinVector {
        self.amplitude(0)
    }

    /// Sites with a nonzero amplitude, ascending.
    pub fn occupied_sites(&self) -> Vec<i64> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| a.iter().any(|c| c.norm_sqr() > 0.0))
            .map(|(i, _)| self.left + i as i64)
            .collect()
    }

    /// Inclusive window `[min, max]` that contains all occupied sites, or
    /// `None` for the zero wavefunction.
    pub fn support(&self) -> Option<(i64, i64)> {
        let occ = self.occupied_sites();
        match (occ.first(), occ.last()) {
            (Some(&a), Some(&b)) => Some((a, b)),
            _ => None,
        }
    }

    /// Total probability weight currently in the wavefunction.
    pub fn norm_sqr(&self) -> f64 {
        self.amps
            .iter()
            .map(|a| a.iter().map(|c| c.norm_sqr()).sum::<f64>())
            .sum()
    }

    /// Number of evolution steps applied since construction.
    pub fn step_count(&self) -> u64 {
        self.step_count
    }
}

/// One step of the walk: coin at every occupied site, then the shift that
/// moves the R component one site right and the L component one site left.
///
/// The coin must be given in the standard basis (the shift is site-diagonal
/// only there).
pub fn step(state: &WalkState, coin: &CoinOperator) -> Result<WalkState> {
    if coin.basis() != BasisTag::Standard {
        return Err(Error::BasisMismatch {
            expected: BasisTag::Standard,
            found: coin.basis(),
        });
    }
    let m = coin.matrix();
    let n = state.amps.len();
    let mut out = vec![[ZERO; 3]; n + 2];
    for (i, amp) in state.amps.iter().enumerate() {
        if amp.iter().all(|c| c.norm_sqr() == 0.0) {
            continue;
        }
        let w = m * Vec3(*amp);
        // old site left+i sits at index i+1 of the new window
        out[i + 2][0] += w.0[0];
        out[i + 1][1] += w.0[1];
        out[i][2] += w.0[2];
    }
    Ok(WalkState {
        left: state.left - 1,
        amps: out,
        step_count: state.step_count + 1,
    })
}

/// One monitored step: evolve, then project the origin component out of the
/// wavefunction and return it as `leaked` (unnormalized, standard basis).
///
/// `leaked` after the n-th monitored step applied to psi is exactly the
/// first-return amplitude, so its squared norm is q_n.
pub fn monitored_step(state: &WalkState, coin: &CoinOperator) -> Result<(WalkState, CoinVector)> {
    let mut next = step(state, coin)?;
    let idx = -next.left;
    let leaked = if idx >= 0 && (idx as usize) < next.amps.len() {
        let amp = std::mem::replace(&mut next.amps[idx as usize], [ZERO; 3]);
        Vec3(amp)
    } else {
        Vec3::zero()
    };
    Ok((next, CoinVector::new(leaked, BasisTag::Standard)))
}

/// Survival and first-return probabilities at one step index.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurvivalPoint {
    /// Step index, starting at 1.
    pub n: usize,
    /// s_n: probability that the walker has not yet been found at the origin.
    pub survival: f64,
    /// q_n: probability of first return at exactly step n.
    pub first_return: f64,
}

/// Monitored evolution from `|0> (x) psi`, reporting (s_n, q_n) for
/// n = 1..=n_max.
///
/// `psi` must be normalized within 1e-12; an alpha-basis state is converted
/// before the run. The outputs satisfy s_n = 1 - sum_{k<=n} q_k to machine
/// precision by construction of the monitored step.
pub fn survival_series(
    rho: CoinParameter,
    psi: &CoinVector,
    n_max: usize,
) -> Result<Vec<SurvivalPoint>> {
    if n_max < 1 {
        return Err(Error::TooSmall {
            what: "n_max",
            min: 1,
            got: n_max,
        });
    }
    let n = psi.norm_sqr();
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::NotNormalized { norm_sqr: n });
    }
    let standard = match psi.basis() {
        BasisTag::Standard => *psi,
        BasisTag::Alpha => {
            change_vector_basis(psi, &build_transition(rho), Direction::AlphaToStandard)?
        }
    };
    let coin = build_coin(rho);
    let mut state = WalkState::from_origin(&standard)?;
    let mut out = Vec::with_capacity(n_max);
    let mut absorbed = 0.0_f64;
    for n in 1..=n_max {
        let (next, leaked) = monitored_step(&state, &coin)?;
        let q = leaked.norm_sqr();
        absorbed += q;
        out.push(SurvivalPoint {
            n,
            survival: 1.0 - absorbed,
            first_return: q,
        });
        state = next;
    }
    Ok(out)
}

/// Which generating function a coefficient list belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMeaning {
    /// mu(z) = sum_{n>=0} mu_n z^n; coefficient 0 is the identity.
    Mu,
    /// a(z) = sum_{n>=1} a_n z^n; there is no order-0 coefficient.
    FirstReturn,
}

impl SeriesMeaning {
    fn min_order(self) -> usize {
        match self {
            SeriesMeaning::Mu => 0,
            SeriesMeaning::FirstReturn => 1,
        }
    }
}

/// Ordered Taylor coefficients of an operator-valued generating function.
#[derive(Clone, Debug)]
pub struct MatrixSeries {
    meaning: SeriesMeaning,
    basis: BasisTag,
    coeffs: Vec<Mat3>,
}

impl MatrixSeries {
    /// `coeffs[i]` is the coefficient of order `min_order + i`, where
    /// min_order is 0 for [`SeriesMeaning::Mu`] and 1 for
    /// [`SeriesMeaning::FirstReturn`]. A Mu series must lead with the
    /// identity.
    pub fn new(meaning: SeriesMeaning, basis: BasisTag, coeffs: Vec<Mat3>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries {
                reason: "empty coefficient list",
            });
        }
        if meaning == SeriesMeaning::Mu
            && coeffs[0].max_abs_diff(&Mat3::identity()) > 1e-10
        {
            return Err(Error::InvalidSeries {
                reason: "order-0 coefficient of a mu series must be the identity",
            });
        }
        Ok(MatrixSeries {
            meaning,
            basis,
            coeffs,
        })
    }

    pub fn meaning(&self) -> SeriesMeaning {
        self.meaning
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn min_order(&self) -> usize {
        self.meaning.min_order()
    }

    pub fn max_order(&self) -> usize {
        self.min_order() + self.coeffs.len() - 1
    }

    /// Coefficient of z^order, or `None` outside the stored range (in
    /// particular order 0 of a first-return series).
    pub fn coefficient(&self, order: usize) -> Option<&Mat3> {
        order
            .checked_sub(self.min_order())
            .and_then(|i| self.coeffs.get(i))
    }

    /// Partial sum of the series at z.
    pub fn eval(&self, z: C64) -> Mat3 {
        let mut acc = Mat3::zero();
        let mut zn = C64::new(1.0, 0.0);
        for _ in 0..self.min_order() {
            zn *= z;
        }
        for c in &self.coeffs {
            acc = acc + c.scale(zn);
            zn *= z;
        }
        acc
    }

    /// Conjugates every coefficient by the transition matrix.
    pub fn change_basis(
        &self,
        transition: &CoinOperator,
        direction: Direction,
    ) -> Result<MatrixSeries> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut basis = self.basis;
        for c in &self.coeffs {
            let op = change_operator_basis(&CoinOperator::new(*c, self.basis), transition, direction)?;
            basis = op.basis();
            coeffs.push(op.matrix());
        }
        Ok(MatrixSeries {
            meaning: self.meaning,
            basis,
            coeffs,
        })
    }
}

/// Evolves each standard coin basis state without monitoring and reads the
/// origin amplitude after every step; coefficient n collects those three
/// columns into mu_n. Orders 0..=n_max, reported in the alpha basis.
pub fn mu_series_oracle(rho: CoinParameter, n_max: usize) -> Result<MatrixSeries> {
    let coin = build_coin(rho);
    let mut states = [
        WalkState::from_origin(&CoinVector::right())?,
        WalkState::from_origin(&CoinVector::stay())?,
        WalkState::from_origin(&CoinVector::left())?,
    ];
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            for s in states.iter_mut() {
                *s = step(s, &coin)?;
            }
        }
        let cols: Vec<Vec3> = states.iter().map(|s| s.at_origin().components()).collect();
        coeffs.push(Mat3::from_cols(cols[0], cols[1], cols[2]));
    }
    let standard = MatrixSeries::new(SeriesMeaning::Mu, BasisTag::Standard, coeffs)?;
    standard.change_basis(&build_transition(rho), Direction::StandardToAlpha)
}

/// Monitored evolution of each standard coin basis state; the leaked origin
/// amplitude of the n-th step is column j of a_n. Reported in the alpha
/// basis.
pub fn first_return_operator_oracle(rho: CoinParameter, n: usize) -> Result<CoinOperator> {
    if n < 1 {
        return Err(Error::TooSmall {
            what: "n",
            min: 1,
            got: n,
        });
    }
    let coin = build_coin(rho);
    let mut cols = [Vec3::zero(); 3];
    for (j, e) in [CoinVector::right(), CoinVector::stay(), CoinVector::left()]
        .iter()
        .enumerate()
    {
        let mut state = WalkState::from_origin(e)?;
        let mut last = Vec3::zero();
        for _ in 0..n {
            let (next, leaked) = monitored_step(&state, &coin)?;
            last = leaked.components();
            state = next;
        }
        cols[j] = last;
    }
    let standard = CoinOperator::new(Mat3::from_cols(cols[0], cols[1], cols[2]), BasisTag::Standard);
    change_operator_basis(&standard, &build_transition(rho), Direction::StandardToAlpha)
}

/// Solves the renewal equation mu(z) a(z) = mu(z) - I coefficient by
/// coefficient: a_n = mu_n - sum_{k=1}^{n-1} mu_{n-k} a_k.
///
/// The result carries the basis of the input series and runs over orders
/// 1..=max_order(mu).
pub fn a_series_renewal(mu: &MatrixSeries) -> Result<MatrixSeries> {
    if mu.meaning() != SeriesMeaning::Mu {
        return Err(Error::InvalidSeries {
            reason: "renewal recursion needs a mu series",
        });
    }
    let n_max = mu.max_order();
    if n_max < 1 {
        return Err(Error::InvalidSeries {
            reason: "need at least order 1 to build a first-return series",
        });
    }
    let mut a: Vec<Mat3> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = *mu.coefficient(n).expect("order within range");
        for k in 1..n {
            let mu_nk = mu.coefficient(n - k).expect("order within range");
            acc = acc - (*mu_nk * a[k - 1]);
        }
        a.push(acc);
    }
    MatrixSeries::new(SeriesMeaning::FirstReturn, mu.basis(), a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::build_alpha_basis;
    use crate::linalg::{c64, Mat3};
    use approx::assert_abs_diff_eq;

    fn grover() -> CoinParameter {
        CoinParameter::grover()
    }

    #[test]
    fn step_from_alpha1_concentrates_at_origin_in_stay() {
        let rho = CoinParameter::new(0.6).unwrap();
        let a1 = build_alpha_basis(rho)[0];
        let state = WalkState::from_origin(&a1).unwrap();
        let next = step(&state, &build_coin(rho)).unwrap();
        let origin = next.at_origin().components();
        assert!(origin.max_abs_diff(&CoinVector::stay().components()) < 1e-12);
        assert_abs_diff_eq!(next.norm_sqr(), 1.0, epsilon = 1e-12);
        // nothing anywhere else (up to rounding dust in the moving components)
        assert!(next.amplitude(1).norm_sqr() < 1e-28);
        assert!(next.amplitude(-1).norm_sqr() < 1e-28);
    }

    #[test]
    fn identity_coin_is_a_pure_shift() {
        let id = CoinOperator::new(Mat3::identity(), BasisTag::Standard);
        let state = WalkState::from_origin(&CoinVector::right()).unwrap();
        let next = step(&state, &id).unwrap();
        assert_eq!(next.support(), Some((1, 1)));
        let amp = next.amplitude(1).components();
        assert!(amp.max_abs_diff(&CoinVector::right().components()) < 1e-15);
    }

    #[test]
    fn step_preserves_norm_of_superposition() {
        let rho = CoinParameter::new(0.37).unwrap();
        let raw = Vec3([c64(0.3, 0.4), c64(0.0, -0.5), c64(0.1, 0.7)]);
        let psi = CoinVector::state(raw.scale(c64(1.0 / raw.norm(), 0.0)), BasisTag::Standard)
            .unwrap();
        let mut state = WalkState::from_origin(&psi).unwrap();
        let coin = build_coin(rho);
        for _ in 0..50 {
            state = step(&state, &coin).unwrap();
        }
        assert_abs_diff_eq!(state.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn step_rejects_alpha_basis_coin() {
        let op = CoinOperator::new(Mat3::identity(), BasisTag::Alpha);
        let state = WalkState::from_origin(&CoinVector::stay()).unwrap();
        assert!(step(&state, &op).is_err());
    }

    #[test]
    fn monitored_step_absorbs_alpha1_completely() {
        let rho = grover();
        let a1 = build_alpha_basis(rho)[0];
        let state = WalkState::from_origin(&a1).unwrap();
        let (survivor, leaked) = monitored_step(&state, &build_coin(rho)).unwrap();
        assert_abs_diff_eq!(leaked.norm_sqr(), 1.0, epsilon = 1e-12);
        assert!(leaked
            .components()
            .max_abs_diff(&CoinVector::stay().components())
            < 1e-12);
        assert!(survivor.norm_sqr() < 1e-24);
    }

    #[test]
    fn monitored_step_leaks_nothing_when_origin_stays_empty() {
        let id = CoinOperator::new(Mat3::identity(), BasisTag::Standard);
        let state = WalkState::from_origin(&CoinVector::right()).unwrap();
        let (_, leaked) = monitored_step(&state, &id).unwrap();
        assert_eq!(leaked.norm_sqr(), 0.0);
    }

    #[test]
    fn monitored_step_splits_probability_exactly() {
        let rho = CoinParameter::new(0.81).unwrap();
        let coin = build_coin(rho);
        let mut state = WalkState::from_origin(&CoinVector::left()).unwrap();
        for _ in 0..20 {
            let before = state.norm_sqr();
            let (next, leaked) = monitored_step(&state, &coin).unwrap();
            assert_abs_diff_eq!(
                next.norm_sqr() + leaked.norm_sqr(),
                before,
                epsilon = 1e-12
            );
            state = next;
        }
    }

    #[test]
    fn survival_series_for_alpha1_is_one_shot() {
        let rho = CoinParameter::new(0.45).unwrap();
        let a1 = build_alpha_basis(rho)[0];
        let series = survival_series(rho, &a1, 10).unwrap();
        assert_abs_diff_eq!(series[0].first_return, 1.0, epsilon = 1e-12);
        assert!(series[0].survival.abs() < 1e-12);
        for p in &series[1..] {
            assert!(p.first_return.abs() < 1e-24);
        }
    }

    #[test]
    fn survival_series_stay_state_first_return() {
        for &r in &[0.2, 0.5, 0.8] {
            let rho = CoinParameter::new(r).unwrap();
            let series = survival_series(rho, &CoinVector::stay(), 1).unwrap();
            let expected = (2.0 * r * r - 1.0) * (2.0 * r * r - 1.0);
            assert_abs_diff_eq!(series[0].first_return, expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn survival_series_bookkeeping() {
        let rho = grover();
        let psi = CoinVector::right();
        let series = survival_series(rho, &psi, 200).unwrap();
        let mut total = 0.0;
        let mut prev_s = 1.0;
        for p in &series {
            total += p.first_return;
            assert!(p.first_return >= 0.0);
            assert!(p.survival <= prev_s + 1e-15);
            assert_abs_diff_eq!(p.survival + total, 1.0, epsilon = 1e-10);
            prev_s = p.survival;
        }
        assert!(total <= 1.0 + 1e-12);
    }

    #[test]
    fn survival_series_accepts_alpha_basis_input() {
        let rho = grover();
        let a2_standard = build_alpha_basis(rho)[1];
        let a2_alpha = CoinVector::new(Vec3::from_real([0.0, 1.0, 0.0]), BasisTag::Alpha);
        let s1 = survival_series(rho, &a2_standard, 30).unwrap();
        let s2 = survival_series(rho, &a2_alpha, 30).unwrap();
        for (a, b) in s1.iter().zip(s2.iter()) {
            assert_abs_diff_eq!(a.first_return, b.first_return, epsilon = 1e-13);
        }
    }

    #[test]
    fn survival_series_rejects_bad_input() {
        let rho = grover();
        let unnormalized = CoinVector::new(Vec3::from_real([0.5, 0.0, 0.0]), BasisTag::Standard);
        assert!(survival_series(rho, &unnormalized, 5).is_err());
        assert!(survival_series(rho, &CoinVector::stay(), 0).is_err());
    }

    #[test]
    fn light_cone_bounds_support() {
        let rho = CoinParameter::new(0.7).unwrap();
        let coin = build_coin(rho);
        let mut state = WalkState::from_origin(&CoinVector::stay()).unwrap();
        for n in 1..=40i64 {
            state = step(&state, &coin).unwrap();
            let (lo, hi) = state.support().unwrap();
            assert!(lo >= -n && hi <= n, "support escaped the light cone at n={n}");
        }
        assert_eq!(state.step_count(), 40);
    }

    #[test]
    fn mu_series_starts_with_identity() {
        let series = mu_series_oracle(grover(), 3).unwrap();
        assert_eq!(series.min_order(), 0);
        assert_eq!(series.max_order(), 3);
        assert_eq!(series.basis(), BasisTag::Alpha);
        assert!(series
            .coefficient(0)
            .unwrap()
            .max_abs_diff(&Mat3::identity())
            < 1e-13);
    }

    #[test]
    fn mu_order_one_is_stay_projector_times_coin() {
        // mu_1 = |S><S| C in the standard basis; compare after converting back.
        let rho = CoinParameter::new(0.55).unwrap();
        let series = mu_series_oracle(rho, 1).unwrap();
        let back = series
            .change_basis(&build_transition(rho), Direction::AlphaToStandard)
            .unwrap();
        let stay = CoinVector::stay().components();
        let expected = stay.outer(&stay) * build_coin(rho).matrix();
        assert!(back.coefficient(1).unwrap().max_abs_diff(&expected) < 1e-13);
    }

    #[test]
    fn mu_columns_are_contractions() {
        let series = mu_series_oracle(grover(), 12).unwrap();
        for n in 0..=12 {
            let m = series.coefficient(n).unwrap();
            for j in 0..3 {
                assert!(m.col(j).norm_sqr() <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn renewal_low_orders_match_hand_recursion() {
        let rho = CoinParameter::new(0.3).unwrap();
        let mu = mu_series_oracle(rho, 4).unwrap();
        let a = a_series_renewal(&mu).unwrap();
        assert_eq!(a.min_order(), 1);
        assert!(a.coefficient(0).is_none());
        let mu1 = *mu.coefficient(1).unwrap();
        let mu2 = *mu.coefficient(2).unwrap();
        assert!(a.coefficient(1).unwrap().max_abs_diff(&mu1) < 1e-14);
        let want_a2 = mu2 - mu1 * mu1;
        assert!(a.coefficient(2).unwrap().max_abs_diff(&want_a2) < 1e-14);
    }

    #[test]
    fn first_return_oracle_order_one_equals_mu_one() {
        let rho = CoinParameter::new(0.62).unwrap();
        let a1 = first_return_operator_oracle(rho, 1).unwrap();
        let mu = mu_series_oracle(rho, 1).unwrap();
        assert!(a1.matrix().max_abs_diff(mu.coefficient(1).unwrap()) < 1e-13);
        assert!(first_return_operator_oracle(rho, 0).is_err());
    }

    #[test]
    fn first_return_operator_reproduces_q_n() {
        let rho = grover();
        let psi = CoinVector::state(
            Vec3::from_real([0.6, 0.0, 0.8]),
            BasisTag::Standard,
        )
        .unwrap();
        let series = survival_series(rho, &psi, 12).unwrap();
        let t = build_transition(rho);
        let psi_alpha = change_vector_basis(&psi, &t, Direction::StandardToAlpha).unwrap();
        for n in 1..=12 {
            let a_n = first_return_operator_oracle(rho, n).unwrap();
            let image = a_n.apply(&psi_alpha).unwrap();
            assert_abs_diff_eq!(
                image.norm_sqr(),
                series[n - 1].first_return,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn alpha3_walker_leaks_back_as_alpha3() {
        // Observed numerically: started in alpha3, every returning amplitude
        // is again proportional to alpha3.
        let rho = CoinParameter::new(0.44).unwrap();
        let a3 = build_alpha_basis(rho)[2];
        let coin = build_coin(rho);
        let mut state = WalkState::from_origin(&a3).unwrap();
        for _ in 1..=50 {
            let (next, leaked) = monitored_step(&state, &coin).unwrap();
            let l = leaked.components();
            let overlap = a3.components().inner(&l);
            let residual = (l - a3.components().scale(overlap)).norm_sqr();
            assert!(residual < 1e-20, "leak has a component outside alpha3");
            state = next;
        }
    }

    #[test]
    fn series_eval_sums_partial_series() {
        let rho = grover();
        let mu = mu_series_oracle(rho, 6).unwrap();
        let z = c64(0.3, 0.2);
        let direct = mu.eval(z);
        let mut acc = Mat3::zero();
        let mut zn = c64(1.0, 0.0);
        for n in 0..=6 {
            acc = acc + mu.coefficient(n).unwrap().scale(zn);
            zn *= z;
        }
        assert!(direct.max_abs_diff(&acc) < 1e-14);
    }

    #[test]
    fn mu_series_constructor_rejects_bad_leading_coefficient() {
        let bad = vec![Mat3::zero()];
        assert!(MatrixSeries::new(SeriesMeaning::Mu, BasisTag::Alpha, bad).is_err());
        assert!(MatrixSeries::new(SeriesMeaning::Mu, BasisTag::Alpha, vec![]).is_err());
    }
}
