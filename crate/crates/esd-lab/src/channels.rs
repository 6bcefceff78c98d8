//! Exact dephasing channels for one collective field or two independent
//! local fields, as Kraus operator sets and as closed-form maps.
//!
//! Both channels are diagonal in the product basis: populations are frozen
//! and each coherence is multiplied by a scalar. Under the **global** field
//! the inner coherence ρ23 is untouched for all time (the |+−⟩, |−+⟩
//! subspace is decoherence-free) while ρ14 decays as `e^(−2Γt)`. Under
//! **local** fields nothing is protected: single-qubit coherences decay with
//! their qubit's amplitude `γ_A` or `γ_B` and the two-qubit coherences with
//! the product `γ_A·γ_B`.
//!
//! Every Kraus operator here is real diagonal, so `K = K†` and the
//! operator-sum `Σ K ρ K†` is insensitive to which side carries the dagger;
//! the conventional ordering is used throughout.

use crate::error::{Error, Result};
use crate::qmat::{tensor_product, DensityMatrix, Mat2, Mat4, XState};

/// Max allowed |Σ K K† − I| before a Kraus set is rejected.
pub const COMPLETENESS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseModel {
    /// One collective stochastic field acting on both qubits.
    Global,
    /// Two statistically independent fields, one per qubit.
    Local,
}

/// Dephasing rate(s) of a noise model. `Γ = 0` is legal and degenerates to
/// the identity channel at every time; no reciprocal is ever taken
/// internally, so the infinite-T2 case costs nothing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DephasingRates {
    Global { gamma: f64 },
    Local { gamma_a: f64, gamma_b: f64 },
}

impl DephasingRates {
    pub fn global(gamma: f64) -> Result<Self> {
        check_rate(gamma, "global dephasing rate")?;
        Ok(Self::Global { gamma })
    }

    pub fn local(gamma_a: f64, gamma_b: f64) -> Result<Self> {
        check_rate(gamma_a, "local dephasing rate for qubit A")?;
        check_rate(gamma_b, "local dephasing rate for qubit B")?;
        Ok(Self::Local { gamma_a, gamma_b })
    }

    pub fn model(&self) -> NoiseModel {
        match self {
            Self::Global { .. } => NoiseModel::Global,
            Self::Local { .. } => NoiseModel::Local,
        }
    }
}

/// Phase relaxation time `T2 = 1/Γ`, infinite for a vanishing rate.
pub fn t2_time(rate: f64) -> f64 {
    if rate == 0.0 {
        f64::INFINITY
    } else {
        1.0 / rate
    }
}

fn check_rate(rate: f64, what: &'static str) -> Result<()> {
    if !rate.is_finite() {
        return Err(Error::NonFinite { context: what });
    }
    if rate < 0.0 {
        return Err(Error::Domain {
            what: "dephasing rate must be nonnegative",
            value: rate,
        });
    }
    Ok(())
}

fn check_time(t: f64) -> Result<()> {
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
    Ok(())
}

/// Scalar parameters of the collective-noise Kraus set at a given time:
/// `γ = e^(−Γt/2)`, `ω1 = √(1 − e^(−Γt))`, `ω2 = −ω1·e^(−Γt)`,
/// `ω3 = ω1²·√(1 + e^(−Γt))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalKrausParams {
    pub gamma: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub omega3: f64,
}

impl GlobalKrausParams {
    pub fn at(t: f64, rate: f64) -> Result<Self> {
        check_time(t)?;
        check_rate(rate, "global dephasing rate")?;
        let u = rate * t;
        let decay = (-u).exp();
        // 1 − e^(−u) through expm1 keeps ω1 accurate for tiny Γt.
        let omega1 = (-(-u).exp_m1()).sqrt();
        Ok(Self {
            gamma: (-0.5 * u).exp(),
            omega1,
            omega2: -omega1 * decay,
            omega3: omega1 * omega1 * (1.0 + decay).sqrt(),
        })
    }
}

/// Scalar parameters of the local-noise Kraus set at a given time:
/// `γ_X = e^(−Γ_X·t/2)`, `ω_X = √(1 − e^(−Γ_X·t))` for X ∈ {A, B}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalKrausParams {
    pub gamma_a: f64,
    pub gamma_b: f64,
    pub omega_a: f64,
    pub omega_b: f64,
}

impl LocalKrausParams {
    pub fn at(t: f64, rate_a: f64, rate_b: f64) -> Result<Self> {
        check_time(t)?;
        check_rate(rate_a, "local dephasing rate for qubit A")?;
        check_rate(rate_b, "local dephasing rate for qubit B")?;
        let ua = rate_a * t;
        let ub = rate_b * t;
        Ok(Self {
            gamma_a: (-0.5 * ua).exp(),
            gamma_b: (-0.5 * ub).exp(),
            omega_a: (-(-ua).exp_m1()).sqrt(),
            omega_b: (-(-ub).exp_m1()).sqrt(),
        })
    }
}

/// An ordered set of 4×4 Kraus operators for one noise model at one time,
/// satisfying `Σ K K† = I` within [`COMPLETENESS_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    ops: Vec<Mat4>,
    model: NoiseModel,
    time: f64,
}

impl KrausSet {
    pub fn ops(&self) -> &[Mat4] {
        &self.ops
    }

    pub fn model(&self) -> NoiseModel {
        self.model
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// `max |Σ K K† − I|`, elementwise.
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = Mat4::zeros();
        for k in &self.ops {
            sum = sum + *k * k.adjoint();
        }
        sum.max_abs_diff(&Mat4::identity())
    }
}

/// The three diagonal Kraus operators of the collective-field channel:
/// `D1 = diag(γ, 1, 1, γ)`, `D2 = diag(ω1, 0, 0, ω2)`, `D3 = diag(0, 0, 0, ω3)`.
pub fn global_kraus(t: f64, rate: f64) -> Result<KrausSet> {
    let p = GlobalKrausParams::at(t, rate)?;
    Ok(KrausSet {
        ops: vec![
            Mat4::from_real_diag([p.gamma, 1.0, 1.0, p.gamma]),
            Mat4::from_real_diag([p.omega1, 0.0, 0.0, p.omega2]),
            Mat4::from_real_diag([0.0, 0.0, 0.0, p.omega3]),
        ],
        model: NoiseModel::Global,
        time: t,
    })
}

/// Single-qubit dephasing factors `(diag(1, γ), diag(0, ω))` for one qubit
/// with rate `rate`; padding them with the identity on the other qubit gives
/// the local-channel Kraus operators.
pub fn local_factor_ops(t: f64, rate: f64) -> Result<(Mat2, Mat2)> {
    check_time(t)?;
    check_rate(rate, "local dephasing rate")?;
    let u = rate * t;
    let gamma = (-0.5 * u).exp();
    let omega = (-(-u).exp_m1()).sqrt();
    Ok((
        Mat2::from_real_diag(1.0, gamma),
        Mat2::from_real_diag(0.0, omega),
    ))
}

/// The four composite Kraus operators `E_μ·F_ν` of the two-local-fields
/// channel, in the order `E1F1, E1F2, E2F1, E2F2`:
///
/// ```text
/// E1F1 = diag(1,  γ_B, γ_A, γ_A γ_B)    E1F2 = diag(0, ω_B, 0, γ_A ω_B)
/// E2F1 = diag(0, 0, ω_A, ω_A γ_B)       E2F2 = diag(0, 0, 0, ω_A ω_B)
/// ```
///
/// The composites are exposed (rather than the 2+2 single-qubit factors)
/// because the channel sums over the composite index; the factors remain
/// available through [`local_factor_ops`].
pub fn local_kraus(t: f64, rate_a: f64, rate_b: f64) -> Result<KrausSet> {
    let (e1, e2) = local_factor_ops(t, rate_a)?;
    let (f1, f2) = local_factor_ops(t, rate_b)?;
    let id = Mat2::identity();
    // E acts on qubit A (first tensor slot), F on qubit B (second slot).
    let e1_full = tensor_product(&e1, &id);
    let e2_full = tensor_product(&e2, &id);
    let f1_full = tensor_product(&id, &f1);
    let f2_full = tensor_product(&id, &f2);
    Ok(KrausSet {
        ops: vec![
            e1_full * f1_full,
            e1_full * f2_full,
            e2_full * f1_full,
            e2_full * f2_full,
        ],
        model: NoiseModel::Local,
        time: t,
    })
}

/// Operator-sum action `ρ → Σ K ρ K†`, re-Hermitized and validated.
///
/// Rejects Kraus sets whose completeness defect exceeds
/// [`COMPLETENESS_TOL`]; trace is preserved within 1e-12.
pub fn apply_channel(kraus: &KrausSet, rho: &DensityMatrix) -> Result<DensityMatrix> {
    let defect = kraus.completeness_defect();
    if defect > COMPLETENESS_TOL {
        return Err(Error::KrausIncomplete { defect });
    }
    let mut out = Mat4::zeros();
    for k in kraus.ops() {
        out = out + *k * *rho.matrix() * k.adjoint();
    }
    DensityMatrix::new(out.hermitize())
}

/// Closed form of the collective-field channel on a standard-form state:
/// populations and the inner coherence `z` are untouched, the outer
/// coherence decays as `w → e^(−2Γt)·w`.
pub fn evolve_global_closed_form(x: &XState, t: f64, rate: f64) -> Result<XState> {
    check_time(t)?;
    check_rate(rate, "global dephasing rate")?;
    let factor = (-2.0 * rate * t).exp();
    Ok(x.with_coherences(x.w() * factor, x.z()))
}

/// Closed form of the two-local-fields channel on a general state:
/// diagonals fixed, `ρ12, ρ34 → γ_B·`, `ρ13, ρ24 → γ_A·`,
/// `ρ14, ρ23 → γ_A γ_B·`, conjugates mirrored.
pub fn evolve_local_closed_form(
    rho: &DensityMatrix,
    t: f64,
    rate_a: f64,
    rate_b: f64,
) -> Result<DensityMatrix> {
    let p = LocalKrausParams::at(t, rate_a, rate_b)?;
    let (ga, gb) = (p.gamma_a, p.gamma_b);
    let gab = ga * gb;
    let factors = [
        [1.0, gb, ga, gab],
        [gb, 1.0, gab, ga],
        [ga, gab, 1.0, gb],
        [gab, ga, gb, 1.0],
    ];
    let mut out = *rho.matrix();
    for (i, row) in factors.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            out[(i, j)] *= *f;
        }
    }
    DensityMatrix::new(out)
}

/// The local channel restricted to standard-form states: both coherences
/// pick up the same factor `γ_A γ_B = e^(−(Γ_A+Γ_B)t/2)`.
pub fn evolve_local_x_state(x: &XState, t: f64, rate_a: f64, rate_b: f64) -> Result<XState> {
    check_time(t)?;
    check_rate(rate_a, "local dephasing rate for qubit A")?;
    check_rate(rate_b, "local dephasing rate for qubit B")?;
    let factor = (-0.5 * (rate_a + rate_b) * t).exp();
    Ok(x.with_coherences(x.w() * factor, x.z() * factor))
}
