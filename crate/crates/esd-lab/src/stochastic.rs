//! Stochastic-trajectory cross-check of the Kraus channels.
//!
//! Each noise realization applies a random diagonal unitary built from the
//! accumulated field phase; averaging `U ρ U†` over realizations must
//! reproduce the channel output. Because the Hamiltonian commutes with
//! itself at different times, only the total phase `φ = μ∫B dt` enters the
//! unitary, and for white noise that phase is exactly Gaussian with variance
//! `Γ·t` — so the default sampler draws it in one shot with no
//! time-discretization error. An Euler–Maruyama path integrator is kept
//! around solely to cross-check that normalization.
//!
//! Trajectory `k`'s generator is derived from `(seed, k)` alone, and the
//! reduction runs in fixed trajectory order with compensated summation, so
//! results are bit-identical for a given `(seed, N)` no matter how the work
//! would be scheduled.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;

use crate::channels::DephasingRates;
use crate::error::{Error, Result};
use crate::qmat::{DensityMatrix, Mat4, C64};

/// Elements whose standard error sits below this are deterministic by
/// construction and are compared absolutely instead of by z-score.
pub const DETERMINISTIC_STDERR_FLOOR: f64 = 1e-15;
/// Absolute tolerance for deterministic elements.
pub const DETERMINISTIC_ABS_TOL: f64 = 1e-12;
/// z-score at which a stochastic comparison fails. At ~32 compared
/// quantities this keeps false failures around once per thousand suites.
pub const Z_THRESHOLD: f64 = 5.0;

/// Monte Carlo run configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StochasticConfig {
    /// Gyromagnetic ratio. It cancels from every observable — the phase
    /// variance is `Γ·t` regardless — and is kept only so path-mode sampling
    /// can demonstrate the cancellation.
    pub mu: f64,
    pub rates: DephasingRates,
    pub trajectories: usize,
    pub seed: u64,
}

impl StochasticConfig {
    pub fn new(rates: DephasingRates, trajectories: usize, seed: u64) -> Result<Self> {
        Self::with_mu(1.0, rates, trajectories, seed)
    }

    pub fn with_mu(mu: f64, rates: DephasingRates, trajectories: usize, seed: u64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::NonFinite {
                context: "gyromagnetic ratio",
            });
        }
        if mu <= 0.0 {
            return Err(Error::Domain {
                what: "gyromagnetic ratio must be positive",
                value: mu,
            });
        }
        if trajectories == 0 {
            return Err(Error::Domain {
                what: "trajectory count must be at least 1",
                value: 0.0,
            });
        }
        Ok(Self {
            mu,
            rates,
            trajectories,
            seed,
        })
    }
}

/// Deterministic per-trajectory seed: a splitmix-style mix of `(seed, k)`,
/// so a trajectory's draws never depend on how many ran before it.
fn trajectory_seed(seed: u64, index: u64) -> u64 {
    let mut x = seed
        ^ index
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(0x243F_6A88_85A3_08D3);
    x ^= x >> 30;
    x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^= x >> 31;
    x
}

/// One exact draw of the accumulated phase `φ = μ∫₀ᵗ B dt'`: Gaussian with
/// mean 0 and variance `Γ·t`.
pub fn sample_phase<R: Rng + ?Sized>(rate: f64, t: f64, rng: &mut R) -> f64 {
    debug_assert!(rate >= 0.0 && t >= 0.0);
    let noise: f64 = rng.sample(StandardNormal);
    (rate * t).sqrt() * noise
}

/// The same phase via Euler–Maruyama integration of the field path with
/// step `Γ·dt = 1e-3`, so the field amplitude (and hence `μ`) appears
/// explicitly and visibly cancels. Used only to cross-check the exact
/// sampler's normalization; distributionally identical.
pub fn sample_phase_path<R: Rng + ?Sized>(rate: f64, t: f64, mu: f64, rng: &mut R) -> f64 {
    debug_assert!(rate >= 0.0 && t >= 0.0 && mu > 0.0);
    if rate == 0.0 || t == 0.0 {
        return 0.0;
    }
    let dt = 1e-3 / rate;
    let mut phi = 0.0;
    let mut remaining = t;
    while remaining > 0.0 {
        let h = dt.min(remaining);
        // ⟨B B⟩ = (Γ/μ²)δ: the window average over h has variance Γ/(μ²h).
        let noise: f64 = rng.sample(StandardNormal);
        let field = (rate / (mu * mu * h)).sqrt() * noise;
        phi += mu * field * h;
        remaining -= h;
    }
    phi
}

/// Collective-field trajectory unitary, `diag(e^{iφ}, 1, 1, e^{−iφ})`:
/// `σ_z^A + σ_z^B` has eigenvalues (2, 0, 0, −2) in the product basis.
pub fn trajectory_unitary_global(phi: f64) -> Mat4 {
    let u = C64::from_polar(1.0, phi);
    Mat4::from_diag([u, C64::new(1.0, 0.0), C64::new(1.0, 0.0), u.conj()])
}

/// Local-fields trajectory unitary,
/// `diag(e^{i(φ_A+φ_B)/2}, e^{i(φ_A−φ_B)/2}, e^{−i(φ_A−φ_B)/2}, e^{−i(φ_A+φ_B)/2})`.
pub fn trajectory_unitary_local(phi_a: f64, phi_b: f64) -> Mat4 {
    let sum = C64::from_polar(1.0, 0.5 * (phi_a + phi_b));
    let diff = C64::from_polar(1.0, 0.5 * (phi_a - phi_b));
    Mat4::from_diag([sum, diff, diff.conj(), sum.conj()])
}

/// Accumulated phase(s) of one noise realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseRealization {
    Global { phi: f64 },
    Local { phi_a: f64, phi_b: f64 },
}

impl PhaseRealization {
    pub fn sample<R: Rng + ?Sized>(rates: &DephasingRates, t: f64, rng: &mut R) -> Self {
        match *rates {
            DephasingRates::Global { gamma } => Self::Global {
                phi: sample_phase(gamma, t, rng),
            },
            DephasingRates::Local { gamma_a, gamma_b } => Self::Local {
                phi_a: sample_phase(gamma_a, t, rng),
                phi_b: sample_phase(gamma_b, t, rng),
            },
        }
    }

    pub fn unitary(&self) -> Mat4 {
        match *self {
            Self::Global { phi } => trajectory_unitary_global(phi),
            Self::Local { phi_a, phi_b } => trajectory_unitary_local(phi_a, phi_b),
        }
    }

    /// Diagonal of the unitary; enough to apply it to a state.
    fn diagonal(&self) -> [C64; 4] {
        match *self {
            Self::Global { phi } => {
                let u = C64::from_polar(1.0, phi);
                [u, C64::new(1.0, 0.0), C64::new(1.0, 0.0), u.conj()]
            }
            Self::Local { phi_a, phi_b } => {
                let sum = C64::from_polar(1.0, 0.5 * (phi_a + phi_b));
                let diff = C64::from_polar(1.0, 0.5 * (phi_a - phi_b));
                [sum, diff, diff.conj(), sum.conj()]
            }
        }
    }
}

/// Standard error of one matrix element, real and imaginary parts tracked
/// separately.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ElementStderr {
    pub re: f64,
    pub im: f64,
}

/// Ensemble average of `U ρ U†` over `N` trajectories.
///
/// The diagonal is carried over from the initial state untouched (each
/// trajectory preserves it exactly), and off-diagonal accumulation happens
/// on the upper triangle with the lower mirrored, so the mean is Hermitian
/// with unit trace by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleEstimate {
    mean: Mat4,
    stderr: [[ElementStderr; 4]; 4],
    trajectories: usize,
}

impl EnsembleEstimate {
    pub fn mean(&self) -> &Mat4 {
        &self.mean
    }

    pub fn stderr(&self, row: usize, col: usize) -> ElementStderr {
        self.stderr[row][col]
    }

    pub fn trajectories(&self) -> usize {
        self.trajectories
    }
}

/// Compensated (Kahan) scalar accumulator; keeps the fixed-order reduction
/// at roundoff-level error independent of N.
#[derive(Debug, Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, value: f64) {
        let y = value - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

const UPPER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Monte Carlo estimate of the dephased state at time `t`:
/// `mean = (1/N)·Σ U_k ρ0 U_k†` over `N` independent phase realizations.
///
/// Deterministic for a fixed `(seed, N)`: trajectory k's randomness depends
/// only on `(seed, k)` and the reduction order is fixed. What is accumulated
/// per element is the *deviation* from ρ0, so elements the noise cannot
/// touch (diagonal always; ρ23 under the global model) come out exactly
/// equal to their initial values.
pub fn ensemble_evolve(
    rho0: &DensityMatrix,
    t: f64,
    cfg: &StochasticConfig,
) -> Result<EnsembleEstimate> {
    if !t.is_finite() {
        return Err(Error::NonFinite {
            context: "evolution time",
        });
    }
    if t < 0.0 {
        return Err(Error::Domain {
            what: "evolution time must be nonnegative",
            value: t,
        });
    }

    let n = cfg.trajectories;
    let mut sum_re = [Kahan::default(); 6];
    let mut sum_im = [Kahan::default(); 6];
    let mut sumsq_re = [Kahan::default(); 6];
    let mut sumsq_im = [Kahan::default(); 6];

    let rho = rho0.matrix();
    for k in 0..n {
        let mut rng = StdRng::seed_from_u64(trajectory_seed(cfg.seed, k as u64));
        let diag = PhaseRealization::sample(&cfg.rates, t, &mut rng).diagonal();
        for (slot, (i, j)) in UPPER_PAIRS.iter().enumerate() {
            let factor = diag[*i] * diag[*j].conj();
            let dev = (factor - C64::new(1.0, 0.0)) * rho[(*i, *j)];
            sum_re[slot].add(dev.re);
            sum_im[slot].add(dev.im);
            sumsq_re[slot].add(dev.re * dev.re);
            sumsq_im[slot].add(dev.im * dev.im);
        }
    }

    let inv_n = 1.0 / n as f64;
    let mut mean = *rho;
    let mut stderr = [[ElementStderr::default(); 4]; 4];
    for (slot, (i, j)) in UPPER_PAIRS.iter().enumerate() {
        let mean_dev = C64::new(sum_re[slot].sum * inv_n, sum_im[slot].sum * inv_n);
        let value = rho[(*i, *j)] + mean_dev;
        mean[(*i, *j)] = value;
        mean[(*j, *i)] = value.conj();

        let err = ElementStderr {
            re: stderr_from_sums(sum_re[slot].sum, sumsq_re[slot].sum, n),
            im: stderr_from_sums(sum_im[slot].sum, sumsq_im[slot].sum, n),
        };
        stderr[*i][*j] = err;
        stderr[*j][*i] = err;
    }

    Ok(EnsembleEstimate {
        mean,
        stderr,
        trajectories: n,
    })
}

fn stderr_from_sums(sum: f64, sumsq: f64, n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let nf = n as f64;
    let variance = ((sumsq - sum * sum / nf) / (nf - 1.0)).max(0.0);
    (variance / nf).sqrt()
}

/// One compared quantity: the real or imaginary part of one element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonEntry {
    pub row: usize,
    pub col: usize,
    /// `"re"` or `"im"`.
    pub part: &'static str,
    pub estimate: f64,
    pub predicted: f64,
    pub stderr: f64,
    /// `None` for deterministic elements (stderr below the floor), which are
    /// compared absolutely at [`DETERMINISTIC_ABS_TOL`] instead.
    pub z: Option<f64>,
    pub pass: bool,
}

/// Elementwise agreement report between an ensemble estimate and a channel
/// prediction: 32 entries in fixed (row, col, part) order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub entries: Vec<ComparisonEntry>,
    /// Largest z-score among stochastic entries.
    pub max_z: f64,
    /// True iff every stochastic z ≤ [`Z_THRESHOLD`] and every deterministic
    /// element matches within [`DETERMINISTIC_ABS_TOL`].
    pub pass: bool,
}

pub fn compare_to_channel(est: &EnsembleEstimate, predicted: &DensityMatrix) -> ComparisonReport {
    let mut entries = Vec::with_capacity(32);
    let mut max_z = 0.0f64;
    let mut pass = true;
    for i in 0..4 {
        for j in 0..4 {
            let e = est.mean()[(i, j)];
            let p = predicted.matrix()[(i, j)];
            let err = est.stderr(i, j);
            for (part, est_v, pred_v, se) in
                [("re", e.re, p.re, err.re), ("im", e.im, p.im, err.im)]
            {
                let diff = (est_v - pred_v).abs();
                let (z, entry_pass) = if se < DETERMINISTIC_STDERR_FLOOR {
                    (None, diff <= DETERMINISTIC_ABS_TOL)
                } else {
                    let z = diff / se;
                    max_z = max_z.max(z);
                    (Some(z), z <= Z_THRESHOLD)
                };
                pass &= entry_pass;
                entries.push(ComparisonEntry {
                    row: i,
                    col: j,
                    part,
                    estimate: est_v,
                    predicted: pred_v,
                    stderr: se,
                    z,
                    pass: entry_pass,
                });
            }
        }
    }
    ComparisonReport {
        entries,
        max_z,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{apply_channel, global_kraus, local_kraus};
    use crate::qmat::{sudden_death_demo, validate_density, XState};
    use crate::sampling::random_density_matrix;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// An X state with every parameter exercised, z included.
    fn busy_x_state() -> XState {
        XState::new(
            0.35,
            0.20,
            0.25,
            0.20,
            C64::from_polar(0.8 * (0.35f64 * 0.20).sqrt(), 0.7),
            C64::from_polar(0.6 * (0.20f64 * 0.25).sqrt(), -1.1),
        )
        .unwrap()
    }

    #[test]
    fn phase_at_zero_time_is_zero() {
        let mut rng = StdRng::seed_from_u64(1);
        assert_eq!(sample_phase(1.3, 0.0, &mut rng), 0.0);
    }

    #[test]
    fn phase_moments_match_the_white_noise_normalization() {
        let mut rng = StdRng::seed_from_u64(2);
        let n = 100_000;
        let (rate, t) = (2.0, 1.0); // Var = 2
        let samples: Vec<f64> = (0..n).map(|_| sample_phase(rate, t, &mut rng)).collect();
        let mean = samples.iter().sum::<f64>() / n as f64;
        let var = samples.iter().map(|p| (p - mean) * (p - mean)).sum::<f64>() / (n - 1) as f64;
        let target = rate * t;
        // mean: SE = σ/√n; variance: SE ≈ σ²√(2/n)
        assert!(mean.abs() < 5.0 * (target / n as f64).sqrt(), "mean {mean}");
        assert!(
            (var - target).abs() < 5.0 * target * (2.0 / n as f64).sqrt(),
            "var {var}"
        );
    }

    #[test]
    fn path_sampler_agrees_with_exact_sampler() {
        // Same Gaussian by construction; check the variance normalization
        // (and the μ cancellation) statistically at one configuration.
        let (rate, t, mu) = (1.0, 0.5, 3.7);
        let n = 10_000;
        let mut rng = StdRng::seed_from_u64(3);
        let var_path = (0..n)
            .map(|_| sample_phase_path(rate, t, mu, &mut rng))
            .map(|p| p * p)
            .sum::<f64>()
            / n as f64;
        let target = rate * t;
        assert!(
            (var_path - target).abs() < 5.0 * target * (2.0 / n as f64).sqrt(),
            "path variance {var_path}, want ≈ {target}"
        );
        assert_eq!(sample_phase_path(0.0, 1.0, mu, &mut rng), 0.0);
    }

    #[test]
    fn global_unitary_values() {
        assert_eq!(trajectory_unitary_global(0.0), Mat4::identity());
        let pi = trajectory_unitary_global(std::f64::consts::PI);
        assert!((pi[(0, 0)] - c(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(pi[(1, 1)], c(1.0, 0.0));
        assert_eq!(pi[(2, 2)], c(1.0, 0.0));
        assert!((pi[(3, 3)] - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn local_unitary_with_silent_b_acts_on_a_only() {
        let phi_a = 0.9;
        let u = trajectory_unitary_local(phi_a, 0.0);
        let ha = C64::from_polar(1.0, 0.5 * phi_a);
        assert_eq!(u[(0, 0)], ha);
        assert_eq!(u[(1, 1)], ha);
        assert_eq!(u[(2, 2)], ha.conj());
        assert_eq!(u[(3, 3)], ha.conj());
    }

    #[test]
    fn trajectory_unitaries_are_unitary() {
        let mut rng = StdRng::seed_from_u64(4);
        for _ in 0..100 {
            let u = trajectory_unitary_global(rng.gen::<f64>() * 20.0 - 10.0);
            assert!((u * u.adjoint()).max_abs_diff(&Mat4::identity()) < 1e-14);
            let u = trajectory_unitary_local(rng.gen::<f64>() * 10.0, rng.gen::<f64>() * 10.0);
            assert!((u * u.adjoint()).max_abs_diff(&Mat4::identity()) < 1e-14);
        }
    }

    #[test]
    fn zero_time_ensemble_returns_the_input_exactly() {
        let rho = busy_x_state().embed();
        let cfg = StochasticConfig::new(DephasingRates::global(1.0).unwrap(), 1, 42).unwrap();
        let est = ensemble_evolve(&rho, 0.0, &cfg).unwrap();
        assert_eq!(est.mean().max_abs_diff(rho.matrix()), 0.0);
    }

    #[test]
    fn ensemble_mean_is_hermitian_with_exact_diagonal() {
        let rho = random_density_matrix(&mut StdRng::seed_from_u64(5));
        let cfg =
            StochasticConfig::new(DephasingRates::local(1.0, 0.5).unwrap(), 5_000, 7).unwrap();
        let est = ensemble_evolve(&rho, 0.8, &cfg).unwrap();
        assert_eq!(est.mean().hermiticity_defect(), 0.0);
        for i in 0..4 {
            assert_eq!(est.mean()[(i, i)], rho.matrix()[(i, i)]);
        }
        assert!((est.mean().trace() - c(1.0, 0.0)).norm() <= 1e-12);
    }

    #[test]
    fn protected_coherence_has_exactly_zero_deviation() {
        // Under the collective field ρ23 is identical in every trajectory.
        let rho = busy_x_state().embed();
        let cfg = StochasticConfig::new(DephasingRates::global(1.0).unwrap(), 2_000, 11).unwrap();
        let est = ensemble_evolve(&rho, 0.7, &cfg).unwrap();
        assert_eq!(est.mean()[(1, 2)], rho.matrix()[(1, 2)]);
        assert_eq!(est.stderr(1, 2), ElementStderr { re: 0.0, im: 0.0 });
    }

    #[test]
    fn gaussian_moment_identity_drives_the_decay() {
        // ⟨e^{iφ}⟩ → e^{−Γt/2}, the mechanism behind the channel's γ.
        let mut rng = StdRng::seed_from_u64(6);
        let (rate, t) = (1.0, 0.8);
        let n = 100_000;
        let mut acc = C64::new(0.0, 0.0);
        let mut sq = 0.0;
        for _ in 0..n {
            let v = C64::from_polar(1.0, sample_phase(rate, t, &mut rng));
            acc += v;
            sq += v.re * v.re;
        }
        let mean_re = acc.re / n as f64;
        let var_re = (sq / n as f64 - mean_re * mean_re).max(0.0);
        let se = (var_re / n as f64).sqrt();
        let target = (-0.5 * rate * t).exp();
        assert!(
            (mean_re - target).abs() <= 5.0 * se,
            "⟨cos φ⟩ = {mean_re}, want {target} ± {se}"
        );
    }

    #[test]
    fn ensemble_matches_the_global_channel() {
        let rho = sudden_death_demo().embed();
        let t = 0.5 * std::f64::consts::LN_2;
        let cfg =
            StochasticConfig::new(DephasingRates::global(1.0).unwrap(), 200_000, 2024).unwrap();
        let est = ensemble_evolve(&rho, t, &cfg).unwrap();
        let predicted = apply_channel(&global_kraus(t, 1.0).unwrap(), &rho).unwrap();
        let report = compare_to_channel(&est, &predicted);
        assert!(report.pass, "max z = {}", report.max_z);
        // ⟨e^{2iφ}⟩ = e^{−2Γt} = 1/2 here, so ρ14 lands on 1/6.
        let se = est.stderr(0, 3).re;
        assert!((est.mean()[(0, 3)].re - 1.0 / 6.0).abs() <= 5.0 * se);
    }

    #[test]
    fn ensemble_tracks_the_channel_along_the_whole_decay() {
        let rho = sudden_death_demo().embed();
        for (i, gt) in [0.1, 0.2, 0.35, 0.5, 1.0].into_iter().enumerate() {
            let cfg =
                StochasticConfig::new(DephasingRates::global(1.0).unwrap(), 200_000, 31 + i as u64)
                    .unwrap();
            let est = ensemble_evolve(&rho, gt, &cfg).unwrap();
            let predicted = apply_channel(&global_kraus(gt, 1.0).unwrap(), &rho).unwrap();
            let report = compare_to_channel(&est, &predicted);
            assert!(report.pass, "Γt = {gt}: max z = {}", report.max_z);
        }
    }

    #[test]
    fn ensemble_matches_the_local_channel() {
        let rho = random_density_matrix(&mut StdRng::seed_from_u64(8));
        let (t, ra, rb) = (1.0, 1.0, 1.0);
        let cfg =
            StochasticConfig::new(DephasingRates::local(ra, rb).unwrap(), 200_000, 77).unwrap();
        let est = ensemble_evolve(&rho, t, &cfg).unwrap();
        let predicted = apply_channel(&local_kraus(t, ra, rb).unwrap(), &rho).unwrap();
        let report = compare_to_channel(&est, &predicted);
        assert!(report.pass, "max z = {}", report.max_z);
        assert!(validate_density(predicted.matrix()).valid);
    }

    #[test]
    fn identical_seed_and_n_reproduce_bit_identical_estimates() {
        let rho = busy_x_state().embed();
        let cfg =
            StochasticConfig::new(DephasingRates::local(0.9, 0.3).unwrap(), 10_000, 5).unwrap();
        let a = ensemble_evolve(&rho, 1.3, &cfg).unwrap();
        let b = ensemble_evolve(&rho, 1.3, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn perturbed_prediction_fails_loudly() {
        let rho = sudden_death_demo().embed();
        let cfg = StochasticConfig::new(DephasingRates::global(1.0).unwrap(), 50_000, 9).unwrap();
        let est = ensemble_evolve(&rho, 0.35, &cfg).unwrap();
        let honest = apply_channel(&global_kraus(0.35, 1.0).unwrap(), &rho).unwrap();
        assert!(compare_to_channel(&est, &honest).pass);

        // Shift the predicted ρ14 by 0.05 ≫ its stderr (~1e-3).
        let mut wrong = *honest.matrix();
        wrong[(0, 3)] += c(0.05, 0.0);
        wrong[(3, 0)] += c(0.05, 0.0);
        let report = compare_to_channel(&est, &DensityMatrix::new(wrong).unwrap());
        assert!(!report.pass);
        assert!(report.max_z > 20.0, "max z = {}", report.max_z);
    }

    #[test]
    fn config_rejects_bad_parameters() {
        let rates = DephasingRates::global(1.0).unwrap();
        assert!(matches!(
            StochasticConfig::new(rates, 0, 1),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            StochasticConfig::with_mu(0.0, rates, 10, 1),
            Err(Error::Domain { .. })
        ));
    }
}
