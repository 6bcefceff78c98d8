//! Acceptance suite: one test per release criterion.
//!
//! Every tolerance is pinned here, in code. Each test prints a PASS line
//! with the measured numbers (visible under `--nocapture`):
//!
//! ```bash
//! cargo test -p esd-lab --test acceptance -- --nocapture
//! ```

use std::time::{Duration, Instant};

use esd_lab::{
    apply_channel, compare_to_channel, concurrence_general, concurrence_x_state, ensemble_evolve,
    esd_time_global, esd_time_local, esd_time_numeric, evolve_global_closed_form,
    evolve_local_closed_form, evolve_local_x_state, global_kraus, is_separable, local_kraus,
    negativity, random_density_matrix, random_x_state, validate_density, Classification,
    DensityMatrix, DephasingRates, StochasticConfig, XState, C64,
};
use esd_lab::{asymptotic_decay_demo, bell_state, sudden_death_demo, werner_state, BellState};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const LN_2: f64 = std::f64::consts::LN_2;

/// X state with all six parameters nonzero; its z coherence makes the
/// decoherence-free subspace check meaningful.
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
fn criterion_01_global_sudden_death_time() {
    let start = Instant::now();
    let x = sudden_death_demo();

    let analytic = esd_time_global(&x, 1.0).unwrap();
    assert_eq!(analytic.classification, Classification::FiniteDeath);
    let t_c = analytic.t_c.unwrap();
    let exact = 0.5 * LN_2;
    assert!(
        (t_c - exact).abs() <= 1e-12,
        "analytic Γt_c = {t_c}, want {exact}"
    );

    let numeric = esd_time_numeric(
        |t| concurrence_x_state(&evolve_global_closed_form(&x, t, 1.0).unwrap()),
        10.0,
        1e-6,
    )
    .unwrap();
    assert_eq!(numeric.classification, Classification::FiniteDeath);
    let t_num = numeric.t_c.unwrap();
    assert!((t_num - exact).abs() <= 1e-6, "bisection Γt_c = {t_num}");

    let at_04 = concurrence_x_state(&evolve_global_closed_form(&x, 0.4, 1.0).unwrap()).value;
    assert_eq!(at_04, 0.0, "concurrence at Γt = 0.4 must be exactly zero");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_millis(100), "took {elapsed:?}");
    println!(
        "[PASS] criterion 1: Γt_c = {t_c:.15} (= ln2/2 to 1e-12), bisection {t_num:.8}, \
         C(0.4) = 0 exactly, {elapsed:?}"
    );
}

#[test]
fn criterion_02_exponential_decay_curve() {
    let start = Instant::now();
    let x = asymptotic_decay_demo();

    let mut worst = 0.0f64;
    for i in 0..=400 {
        let t = 2.0 * i as f64 / 400.0;
        let c = concurrence_x_state(&evolve_global_closed_form(&x, t, 1.0).unwrap()).value;
        let reference = (1.0 / 3.0) * (-2.0 * t).exp();
        worst = worst.max((c - reference).abs());
    }
    assert!(worst <= 1e-12, "max pointwise deviation {worst}");

    let report = esd_time_global(&x, 1.0).unwrap();
    assert_eq!(report.classification, Classification::AsymptoticOnly);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_millis(100), "took {elapsed:?}");
    println!(
        "[PASS] criterion 2: C(Γt) = (1/3)e^(−2Γt) on 401 points, max |Δ| = {worst:.2e}, \
         classified asymptotic_only, {elapsed:?}"
    );
}

#[test]
fn criterion_03_kraus_completeness_over_ten_decades() {
    let mut worst = 0.0f64;
    for i in 0..100 {
        let exponent = -6.0 + i as f64 * (50f64.log10() + 6.0) / 99.0;
        let gt = 10f64.powf(exponent);
        let g = global_kraus(gt, 1.0).unwrap().completeness_defect();
        let l = local_kraus(gt, 1.0, 0.37).unwrap().completeness_defect();
        worst = worst.max(g).max(l);
        assert!(
            g <= 1e-12 && l <= 1e-12,
            "defect at Γt = {gt}: {g:.2e}/{l:.2e}"
        );
    }
    println!(
        "[PASS] criterion 3: Σ K K† = I within 1e-12 at 100 log-spaced Γt in [1e-6, 50] \
         for both models (worst defect {worst:.2e})"
    );
}

#[test]
fn criterion_04_channel_equals_closed_form() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x0401);

    let mut worst_global = 0.0f64;
    for _ in 0..1000 {
        let x = random_x_state(&mut rng);
        let t = rng.gen::<f64>() * 3.0;
        let via_channel = apply_channel(&global_kraus(t, 1.0).unwrap(), &x.embed()).unwrap();
        let via_closed = evolve_global_closed_form(&x, t, 1.0).unwrap().embed();
        worst_global = worst_global.max(via_channel.matrix().max_abs_diff(via_closed.matrix()));
    }
    assert!(worst_global <= 1e-12, "global max deviation {worst_global}");

    let mut worst_local = 0.0f64;
    for _ in 0..1000 {
        let rho = random_density_matrix(&mut rng);
        let (ra, rb) = (rng.gen::<f64>() * 2.0, rng.gen::<f64>() * 2.0);
        let t = rng.gen::<f64>() * 3.0;
        let via_channel = apply_channel(&local_kraus(t, ra, rb).unwrap(), &rho).unwrap();
        let via_closed = evolve_local_closed_form(&rho, t, ra, rb).unwrap();
        worst_local = worst_local.max(via_channel.matrix().max_abs_diff(via_closed.matrix()));
    }
    assert!(worst_local <= 1e-12, "local max deviation {worst_local}");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!(
        "[PASS] criterion 4: operator sum ≡ closed form on 1000+1000 random states \
         (max |Δ| global {worst_global:.2e}, local {worst_local:.2e}), {elapsed:?}"
    );
}

#[test]
fn criterion_05_concurrence_oracle_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x0501);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let x = random_x_state(&mut rng);
        let general = concurrence_general(&x.embed()).unwrap().value;
        let closed = concurrence_x_state(&x).value;
        worst = worst.max((general - closed).abs());
    }
    assert!(worst <= 1e-8, "max |ΔC| = {worst}");
    println!(
        "[PASS] criterion 5: eigenvalue route ≡ closed form on 1000 random X states, \
         max |ΔC| = {worst:.2e}"
    );
}

#[test]
fn criterion_06_measure_independence_of_the_zero_set() {
    let mut rng = StdRng::seed_from_u64(0x0501); // same states as criterion 5
    let mut entangled_count = 0;
    for i in 0..1000 {
        let x = random_x_state(&mut rng);
        let rho = x.embed();
        let by_concurrence = concurrence_x_state(&x).value > 1e-9;
        let by_negativity = negativity(&rho).unwrap() > 1e-9;
        let by_ppt = !is_separable(&rho).unwrap();
        assert_eq!(
            by_concurrence, by_negativity,
            "state {i}: concurrence vs negativity disagree"
        );
        assert_eq!(
            by_concurrence, by_ppt,
            "state {i}: concurrence vs PPT disagree"
        );
        entangled_count += by_concurrence as usize;
    }
    println!(
        "[PASS] criterion 6: concurrence, negativity, and PPT agree on all 1000 zero-set \
         verdicts ({entangled_count} entangled)"
    );
}

#[test]
fn criterion_07_monte_carlo_matches_the_channels() {
    let start = Instant::now();
    let times = [0.1, 0.35, 1.0];

    // Global model on a state with z ≠ 0: the protected coherence must come
    // out exact, everything else within 5 standard errors.
    let x = busy_x_state();
    let rho_g = x.embed();
    let mut max_z_global = 0.0f64;
    for (i, &t) in times.iter().enumerate() {
        let cfg = StochasticConfig::new(
            DephasingRates::Global { gamma: 1.0 },
            200_000,
            1001 + i as u64,
        )
        .unwrap();
        let est = ensemble_evolve(&rho_g, t, &cfg).unwrap();
        let predicted = apply_channel(&global_kraus(t, 1.0).unwrap(), &rho_g).unwrap();
        let report = compare_to_channel(&est, &predicted);
        assert!(report.pass, "global Γt = {t}: max z = {}", report.max_z);
        max_z_global = max_z_global.max(report.max_z);

        let dev = est.mean()[(1, 2)] - predicted.matrix()[(1, 2)];
        assert_eq!(
            dev,
            C64::new(0.0, 0.0),
            "ρ23 deviation must be exactly zero"
        );
    }

    // Local model on a generic full matrix.
    let rho_l = random_density_matrix(&mut StdRng::seed_from_u64(0x0701));
    let mut max_z_local = 0.0f64;
    for (i, &t) in times.iter().enumerate() {
        let cfg = StochasticConfig::new(
            DephasingRates::Local {
                gamma_a: 1.0,
                gamma_b: 0.6,
            },
            200_000,
            2001 + i as u64,
        )
        .unwrap();
        let est = ensemble_evolve(&rho_l, t, &cfg).unwrap();
        let predicted = apply_channel(&local_kraus(t, 1.0, 0.6).unwrap(), &rho_l).unwrap();
        let report = compare_to_channel(&est, &predicted);
        assert!(report.pass, "local Γt = {t}: max z = {}", report.max_z);
        max_z_local = max_z_local.max(report.max_z);
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "[PASS] criterion 7: 6 × 2·10⁵ trajectories within 5σ of the channels \
         (max z: global {max_z_global:.2}, local {max_z_local:.2}), protected ρ23 exact, \
         {elapsed:?}"
    );
}

#[test]
fn criterion_08_one_sided_local_noise_death_times() {
    let x = sudden_death_demo();

    let one_sided = esd_time_local(&x, 1.0, 0.0).unwrap();
    assert_eq!(one_sided.classification, Classification::FiniteDeath);
    let t_one = one_sided.t_c.unwrap();
    assert!(
        (t_one - 2.0 * LN_2).abs() <= 1e-12,
        "one-sided Γ_A·t_c = {t_one}, want 2ln2"
    );

    let numeric = esd_time_numeric(
        |t| concurrence_x_state(&evolve_local_x_state(&x, t, 1.0, 0.0).unwrap()),
        10.0,
        1e-6,
    )
    .unwrap();
    assert!((numeric.t_c.unwrap() - 2.0 * LN_2).abs() <= 1e-6);

    let symmetric = esd_time_local(&x, 1.0, 1.0).unwrap();
    let t_sym = symmetric.t_c.unwrap();
    assert!(
        (t_sym - LN_2).abs() <= 1e-12,
        "symmetric Γ·t_c = {t_sym}, want ln2"
    );

    // Local death is finite but slower than under the collective field.
    let t_global = esd_time_global(&x, 1.0).unwrap().t_c.unwrap();
    assert!(t_global < t_sym && t_sym < t_one);
    println!(
        "[PASS] criterion 8: Γ_A·t_c = {t_one:.12} (= 2ln2), symmetric {t_sym:.12} (= ln2), \
         both slower than collective {t_global:.12} (= ln2/2)"
    );
}

#[test]
fn criterion_09_evolved_states_stay_physical() {
    let mut rng = StdRng::seed_from_u64(0x0901);
    let mut states: Vec<DensityMatrix> = vec![
        sudden_death_demo().embed(),
        asymptotic_decay_demo().embed(),
        busy_x_state().embed(),
        bell_state(BellState::PhiPlus).embed(),
        werner_state(0.7).unwrap().embed(),
    ];
    for _ in 0..50 {
        states.push(random_x_state(&mut rng).embed());
    }
    for _ in 0..20 {
        states.push(random_density_matrix(&mut rng));
    }

    let times = [0.0, 0.1, 0.35, 1.0, 5.0];
    let mut checked = 0usize;
    for rho in &states {
        for &t in &times {
            for evolved in [
                apply_channel(&global_kraus(t, 1.0).unwrap(), rho).unwrap(),
                apply_channel(&local_kraus(t, 1.0, 0.6).unwrap(), rho).unwrap(),
                evolve_local_closed_form(rho, t, 1.0, 0.6).unwrap(),
            ] {
                let report = validate_density(evolved.matrix());
                assert!(
                    report.valid,
                    "invalid evolved state at t = {t}: trace defect {:.2e}, min eig {:.2e}",
                    report.trace_defect, report.min_eigenvalue
                );
                checked += 1;
            }
        }
    }
    println!(
        "[PASS] criterion 9: {checked} evolved states all Hermitian, unit-trace (1e-12), \
         and PSD (≥ −1e-10)"
    );
}

#[test]
fn criterion_10_validate_reports_are_byte_identical() {
    let args: Vec<String> = [
        "validate",
        "--model",
        "global",
        "--gamma",
        "1",
        "--t",
        "0.35",
        "--trajectories",
        "20000",
        "--seed",
        "41",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();

    let run_once = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = esd_lab::cli::run(&args, &mut out, &mut err);
        (code, out, err)
    };
    let (code_a, out_a, err_a) = run_once();
    let (code_b, out_b, err_b) = run_once();

    assert_eq!(code_a, 0, "validate must PASS");
    assert_eq!(code_a, code_b);
    assert_eq!(out_a, out_b, "stdout must be byte-identical across runs");
    assert_eq!(err_a, err_b);
    assert!(String::from_utf8(out_a).unwrap().contains("PASS"));
    println!(
        "[PASS] criterion 10: identical (seed, N) ⇒ byte-identical validate report \
         ({} bytes), exit 0",
        out_b.len()
    );
}
