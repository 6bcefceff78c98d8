//! Entanglement measures, separability tests, and death-time analysis.
//!
//! The concurrence of a two-qubit state ρ is
//! `C = max(0, √λ1 − √λ2 − √λ3 − √λ4)` over the decreasing eigenvalues λ_i of
//! `ζ = ρ·(σ_y⊗σ_y)·ρ*·(σ_y⊗σ_y)`, with the conjugation taken entrywise in
//! the fixed product basis. For standard-form states this collapses to the
//! closed form `C = 2·max{0, |w| − √(bc), |z| − √(ad)}`, which doubles as an
//! independent oracle for the eigenvalue route.
//!
//! Separability is decided by the partial transpose: for two qubits a state
//! is separable exactly when its partial transpose has no negative
//! eigenvalue, so concurrence, negativity, and the PPT test must share one
//! zero set. Death times are where the concurrence of an evolving state
//! first reaches zero and stays there.

use crate::error::{Error, Result};
use crate::qmat::{
    eigenvalues, hermitian_eigenvalues, sigma_y, tensor_product, DensityMatrix, Mat4, XState,
};

/// Eigenvalues of ζ below this are treated as roundoff and clamped to zero;
/// anything more negative means the input was not a physical state.
pub const LAMBDA_CLAMP_FLOOR: f64 = -1e-10;
/// Max tolerated |Im λ| for the (analytically real) spectrum of ζ.
pub const LAMBDA_IMAG_TOL: f64 = 1e-9;
/// The partial transpose counts as positive down to this floor.
pub const PPT_EIG_FLOOR: f64 = -1e-10;
/// Concurrence at or below this value counts as dead in the numeric
/// death-time search.
pub const DEATH_THRESHOLD: f64 = 1e-12;

/// Which coherence bound a standard-form concurrence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Outer coherence against the inner diagonal: `|w| − √(bc)`.
    W,
    /// Inner coherence against the outer diagonal: `|z| − √(ad)`.
    Z,
}

#[derive(Debug, Clone, Copy)]
pub struct ConcurrenceResult {
    /// `max(0, √λ1 − √λ2 − √λ3 − √λ4)`, in [0, 1].
    pub value: f64,
    /// The four √λ_i in decreasing order.
    pub lambdas: [f64; 4],
    /// Active closed-form branch; `None` when the state is separable or the
    /// value came from the general eigenvalue route.
    pub branch: Option<Branch>,
}

/// Concurrence of an arbitrary state via the spectrum of
/// `ζ = ρ(σ_y⊗σ_y)ρ*(σ_y⊗σ_y)`.
///
/// ζ is not Hermitian but has a real nonnegative spectrum for physical ρ, so
/// the eigenvalues are computed directly with the general solver, imaginary
/// parts below [`LAMBDA_IMAG_TOL`] are discarded, and negatives above
/// [`LAMBDA_CLAMP_FLOOR`] are clamped to zero. No matrix square root is ever
/// taken.
pub fn concurrence_general(rho: &DensityMatrix) -> Result<ConcurrenceResult> {
    let yy = tensor_product(&sigma_y(), &sigma_y());
    let zeta = *rho.matrix() * yy * rho.matrix().conj() * yy;
    let eig = eigenvalues(&zeta)?;

    let mut lambdas = [0.0f64; 4];
    for (slot, value) in lambdas.iter_mut().zip(eig) {
        if value.im.abs() > LAMBDA_IMAG_TOL {
            return Err(Error::ComplexSpectrum {
                max_imag: value.im.abs(),
            });
        }
        if value.re < LAMBDA_CLAMP_FLOOR {
            return Err(Error::NegativeSpectrum { value: value.re });
        }
        *slot = value.re.max(0.0).sqrt();
    }
    lambdas.sort_by(|x, y| y.total_cmp(x));
    let value = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0);
    Ok(ConcurrenceResult {
        value,
        lambdas,
        branch: None,
    })
}

/// Closed-form concurrence of a standard-form state,
/// `C = 2·max{0, |w| − √(bc), |z| − √(ad)}`.
///
/// The √λ_i of ζ are available directly here: the outer block contributes
/// `√(ad) ± |w|`, the inner block `√(bc) ± |z|`.
pub fn concurrence_x_state(x: &XState) -> ConcurrenceResult {
    let sqrt_ad = (x.a() * x.d()).sqrt();
    let sqrt_bc = (x.b() * x.c()).sqrt();
    let w_mod = x.w().norm();
    let z_mod = x.z().norm();

    let w_term = w_mod - sqrt_bc;
    let z_term = z_mod - sqrt_ad;
    let value = 2.0 * w_term.max(z_term).max(0.0);
    let branch = if value > 0.0 {
        Some(if w_term >= z_term {
            Branch::W
        } else {
            Branch::Z
        })
    } else {
        None
    };

    let mut lambdas = [
        sqrt_ad + w_mod,
        (sqrt_ad - w_mod).abs(),
        sqrt_bc + z_mod,
        (sqrt_bc - z_mod).abs(),
    ];
    lambdas.sort_by(|x, y| y.total_cmp(x));
    ConcurrenceResult {
        value,
        lambdas,
        branch,
    }
}

/// Partial transpose over qubit B: each 2×2 block of the 4×4 matrix is
/// transposed in place.
pub fn partial_transpose_b(m: &Mat4) -> Mat4 {
    let mut out = *m;
    for bi in [0usize, 2] {
        for bj in [0usize, 2] {
            let tmp = out[(bi, bj + 1)];
            out[(bi, bj + 1)] = out[(bi + 1, bj)];
            out[(bi + 1, bj)] = tmp;
        }
    }
    out
}

/// Peres–Horodecki test, exact for two qubits: separable iff the partial
/// transpose has minimum eigenvalue ≥ [`PPT_EIG_FLOOR`].
pub fn is_separable(rho: &DensityMatrix) -> Result<bool> {
    let eig = hermitian_eigenvalues(&partial_transpose_b(rho.matrix()))?;
    Ok(eig[0] >= PPT_EIG_FLOOR)
}

/// Sum of |negative eigenvalues| of the partial transpose. Zero exactly on
/// the separable states, so it provides a measure-independent check on the
/// concurrence zero set.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let eig = hermitian_eigenvalues(&partial_transpose_b(rho.matrix()))?;
    Ok(eig.iter().map(|&l| (-l).max(0.0)).sum())
}

/// How an evolving state's entanglement ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Concurrence is already zero at t = 0.
    AlreadySeparable,
    /// Concurrence reaches exactly zero at a finite positive time.
    FiniteDeath,
    /// Concurrence decays but never reaches zero in finite time.
    AsymptoticOnly,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EsdReport {
    pub classification: Classification,
    /// Death time; present exactly for [`Classification::FiniteDeath`].
    pub t_c: Option<f64>,
    /// The branch that decides the outcome: the last to die for a finite
    /// death, the undying one for asymptotic decay.
    pub binding_branch: Option<Branch>,
}

/// Death time under the collective field, `t_c = ln(|w|/√(bc)) / 2Γ`.
///
/// Requires `z = 0`: the inner coherence is untouched by the collective
/// field, so a state with `z ≠ 0` keeps that branch forever and no finite
/// death time exists there.
pub fn esd_time_global(x: &XState, rate: f64) -> Result<EsdReport> {
    if !rate.is_finite() {
        return Err(Error::NonFinite {
            context: "global dephasing rate",
        });
    }
    if rate <= 0.0 {
        return Err(Error::Domain {
            what: "death-time analysis needs a positive dephasing rate",
            value: rate,
        });
    }
    let z_mod = x.z().norm();
    if z_mod > 0.0 {
        return Err(Error::DecoherenceFreeBranch { z_mod });
    }
    let w_mod = x.w().norm();
    let sqrt_bc = (x.b() * x.c()).sqrt();
    if w_mod <= sqrt_bc {
        return Ok(EsdReport {
            classification: Classification::AlreadySeparable,
            t_c: None,
            binding_branch: None,
        });
    }
    if sqrt_bc == 0.0 {
        return Ok(EsdReport {
            classification: Classification::AsymptoticOnly,
            t_c: None,
            binding_branch: Some(Branch::W),
        });
    }
    Ok(EsdReport {
        classification: Classification::FiniteDeath,
        t_c: Some((w_mod / sqrt_bc).ln() / (2.0 * rate)),
        binding_branch: Some(Branch::W),
    })
}

/// Death time under two local fields.
///
/// Both coherences decay as `e^(−(Γ_A+Γ_B)t/2)`, so each entangled branch
/// crosses zero at `ln(coherence/threshold) · 2/(Γ_A+Γ_B)` and the state
/// dies when the later branch does. A branch whose threshold is zero
/// (`bc = 0` with `|w| > 0`, or `ad = 0` with `|z| > 0`) never crosses and
/// the decay is only asymptotic.
pub fn esd_time_local(x: &XState, rate_a: f64, rate_b: f64) -> Result<EsdReport> {
    for rate in [rate_a, rate_b] {
        if !rate.is_finite() {
            return Err(Error::NonFinite {
                context: "local dephasing rate",
            });
        }
        if rate < 0.0 {
            return Err(Error::Domain {
                what: "dephasing rate must be nonnegative",
                value: rate,
            });
        }
    }
    let rate_sum = rate_a + rate_b;
    if rate_sum <= 0.0 {
        return Err(Error::Domain {
            what: "death-time analysis needs Γ_A + Γ_B > 0",
            value: rate_sum,
        });
    }

    // (initial coherence, death threshold) per branch
    let branches = [
        (Branch::W, x.w().norm(), (x.b() * x.c()).sqrt()),
        (Branch::Z, x.z().norm(), (x.a() * x.d()).sqrt()),
    ];

    let mut latest: Option<(Branch, f64)> = None;
    for (branch, coherence, threshold) in branches {
        if coherence <= threshold {
            continue; // never positive, dead from the start
        }
        if threshold == 0.0 {
            return Ok(EsdReport {
                classification: Classification::AsymptoticOnly,
                t_c: None,
                binding_branch: Some(branch),
            });
        }
        let t = 2.0 * (coherence / threshold).ln() / rate_sum;
        if latest.is_none_or(|(_, best)| t > best) {
            latest = Some((branch, t));
        }
    }

    Ok(match latest {
        None => EsdReport {
            classification: Classification::AlreadySeparable,
            t_c: None,
            binding_branch: None,
        },
        Some((branch, t_c)) => EsdReport {
            classification: Classification::FiniteDeath,
            t_c: Some(t_c),
            binding_branch: Some(branch),
        },
    })
}

/// Numeric death-time search on an arbitrary concurrence curve, independent
/// of the analytic formulas it cross-checks.
///
/// Assumes `C(t)` is non-increasing (true for both dephasing models on
/// standard-form states). If the curve is still strictly positive at
/// `t_max` the decay is classified asymptotic within the horizon; otherwise
/// bisection brackets the first `t` with `C(t) ≤` [`DEATH_THRESHOLD`] to
/// within `±tol`.
pub fn esd_time_numeric<F>(curve: F, t_max: f64, tol: f64) -> Result<EsdReport>
where
    F: Fn(f64) -> ConcurrenceResult,
{
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::Domain {
            what: "search horizon must be positive",
            value: t_max,
        });
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain {
            what: "bisection tolerance must be positive",
            value: tol,
        });
    }

    if curve(0.0).value <= DEATH_THRESHOLD {
        return Ok(EsdReport {
            classification: Classification::AlreadySeparable,
            t_c: None,
            binding_branch: None,
        });
    }
    if curve(t_max).value > 0.0 {
        return Ok(EsdReport {
            classification: Classification::AsymptoticOnly,
            t_c: None,
            binding_branch: None,
        });
    }

    // Invariant: alive at lo, dead at hi.
    let (mut lo, mut hi) = (0.0f64, t_max);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if curve(mid).value <= DEATH_THRESHOLD {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(EsdReport {
        classification: Classification::FiniteDeath,
        t_c: Some(0.5 * (lo + hi)),
        binding_branch: None,
    })
}
