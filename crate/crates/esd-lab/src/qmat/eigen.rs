//! Eigenvalues of general 4×4 complex matrices.
//!
//! Householder reduction to upper Hessenberg form followed by an explicit
//! single-shift QR iteration with Wilkinson shifts and deflation. A closed
//! quartic formula would be shorter but is numerically fragile near repeated
//! roots; the shifted QR iteration stays well-conditioned there and costs
//! nothing at this size.

// Index arithmetic matches the textbook formulation of the transforms.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::qmat::mat::{Mat4, C64};

const N: usize = 4;
/// Total QR sweeps allowed before reporting a convergence failure. The usual
/// budget is ~30 per eigenvalue.
const MAX_SWEEPS: usize = 120;

/// All four eigenvalues of a general complex matrix, in no particular order.
///
/// Accuracy is at machine-precision level for well-conditioned spectra; for
/// Hermitian inputs the imaginary parts land far below 1e-10.
pub fn eigenvalues(m: &Mat4) -> Result<[C64; 4]> {
    if !m.is_finite() {
        return Err(Error::NonFinite {
            context: "eigenvalue input matrix",
        });
    }
    let mut h = *m.entries();
    hessenberg(&mut h);
    qr_eigenvalues(&mut h)
}

/// Eigenvalues of a Hermitian matrix as plain reals, ascending.
///
/// Runs the general solver and drops the imaginary parts, which are pure
/// roundoff for Hermitian input.
pub fn hermitian_eigenvalues(m: &Mat4) -> Result<[f64; 4]> {
    let eig = eigenvalues(m)?;
    let mut out = eig.map(|v| v.re);
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// In-place unitary similarity reduction to upper Hessenberg form.
fn hessenberg(h: &mut [[C64; 4]; N]) {
    for k in 0..N - 2 {
        let norm_x: f64 = (k + 1..N).map(|i| h[i][k].norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        // Reflect the column onto −sign(x₀)·‖x‖·e₁ so the leading element of
        // v = x − αe₁ never cancels.
        let x0 = h[k + 1][k];
        let alpha = if x0.norm() > 0.0 {
            -(x0 / x0.norm()) * norm_x
        } else {
            C64::new(-norm_x, 0.0)
        };
        let mut v = [C64::new(0.0, 0.0); N];
        v[0] = x0 - alpha;
        for i in k + 2..N {
            v[i - k - 1] = h[i][k];
        }
        let vnorm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let tau = 2.0 / vnorm2;

        // H·A on rows k+1..N
        for j in 0..N {
            let mut s = C64::new(0.0, 0.0);
            for i in 0..N - k - 1 {
                s += v[i].conj() * h[k + 1 + i][j];
            }
            s *= tau;
            for i in 0..N - k - 1 {
                h[k + 1 + i][j] -= s * v[i];
            }
        }
        // A·H on columns k+1..N
        for row in h.iter_mut() {
            let mut s = C64::new(0.0, 0.0);
            for (i, vi) in v.iter().enumerate().take(N - k - 1) {
                s += row[k + 1 + i] * vi;
            }
            s *= tau;
            for (i, vi) in v.iter().enumerate().take(N - k - 1) {
                row[k + 1 + i] -= s * vi.conj();
            }
        }
        // The reflected column is now α·e₁ by construction.
        h[k + 1][k] = alpha;
        for i in k + 2..N {
            h[i][k] = C64::new(0.0, 0.0);
        }
    }
}

/// Shifted QR iteration on an upper Hessenberg matrix.
fn qr_eigenvalues(h: &mut [[C64; 4]; N]) -> Result<[C64; 4]> {
    let hnorm: f64 = h
        .iter()
        .flatten()
        .map(|c| c.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);

    let mut eig = [C64::new(0.0, 0.0); N];
    let mut n = N;
    let mut sweeps = 0usize;
    let mut since_deflation = 0usize;

    while n > 0 {
        // Scan the active window bottom-up for a negligible subdiagonal.
        let mut l = n - 1;
        while l > 0 {
            let scale = {
                let s = h[l - 1][l - 1].norm() + h[l][l].norm();
                if s == 0.0 {
                    hnorm
                } else {
                    s
                }
            };
            if h[l][l - 1].norm() <= f64::EPSILON * scale {
                h[l][l - 1] = C64::new(0.0, 0.0);
                break;
            }
            l -= 1;
        }

        if l == n - 1 {
            eig[n - 1] = h[n - 1][n - 1];
            n -= 1;
            since_deflation = 0;
            continue;
        }
        if l == n - 2 {
            let (e1, e2) = eig_2x2(h[l][l], h[l][l + 1], h[l + 1][l], h[l + 1][l + 1]);
            eig[n - 2] = e1;
            eig[n - 1] = e2;
            n -= 2;
            since_deflation = 0;
            continue;
        }

        sweeps += 1;
        since_deflation += 1;
        if sweeps > MAX_SWEEPS {
            return Err(Error::EigenConvergence);
        }

        let shift = if since_deflation.is_multiple_of(12) {
            // Exceptional shift to break rare symmetric cycles.
            h[n - 1][n - 1] + C64::new(0.75 * h[n - 1][n - 2].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[n - 2][n - 2],
                h[n - 2][n - 1],
                h[n - 1][n - 2],
                h[n - 1][n - 1],
            )
        };
        qr_step(h, l, n, shift);
    }
    Ok(eig)
}

/// Eigenvalues of a complex 2×2 block. The smaller root is recovered from the
/// product of roots to avoid cancellation.
fn eig_2x2(a: C64, b: C64, c: C64, d: C64) -> (C64, C64) {
    let half_tr = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (half_tr * half_tr - det).sqrt();
    let r1 = half_tr + disc;
    let r2 = half_tr - disc;
    let big = if r1.norm() >= r2.norm() { r1 } else { r2 };
    if big.norm() == 0.0 {
        (big, big)
    } else {
        (big, det / big)
    }
}

/// Eigenvalue of the trailing 2×2 closest to its bottom-right entry.
fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let (e1, e2) = eig_2x2(a, b, c, d);
    if (e1 - d).norm() <= (e2 - d).norm() {
        e1
    } else {
        e2
    }
}

/// One explicit shifted QR sweep on the window `[l, n)`:
/// `H ← Q†(H − σI)Q + σI` via a chain of Givens rotations.
fn qr_step(h: &mut [[C64; 4]; N], l: usize, n: usize, shift: C64) {
    for i in l..n {
        h[i][i] -= shift;
    }

    let mut rotations = [(0.0f64, C64::new(0.0, 0.0)); N - 1];
    for i in l..n - 1 {
        let (cos, sin) = givens(h[i][i], h[i + 1][i]);
        rotations[i] = (cos, sin);
        for j in i..n {
            let top = h[i][j];
            let bot = h[i + 1][j];
            h[i][j] = top * cos + bot * sin;
            h[i + 1][j] = bot * cos - top * sin.conj();
        }
    }
    for i in l..n - 1 {
        let (cos, sin) = rotations[i];
        let last_row = (i + 1).min(n - 1);
        for r in l..=last_row {
            let left = h[r][i];
            let right = h[r][i + 1];
            h[r][i] = left * cos + right * sin.conj();
            h[r][i + 1] = right * cos - left * sin;
        }
    }

    for i in l..n {
        h[i][i] += shift;
    }
}

/// Complex Givens rotation zeroing `g` against `f`:
/// `[c s; −s̄ c]·[f; g] = [r; 0]` with real `c` and `c² + |s|² = 1`.
fn givens(f: C64, g: C64) -> (f64, C64) {
    let fn_ = f.norm();
    let gn = g.norm();
    if gn == 0.0 {
        (1.0, C64::new(0.0, 0.0))
    } else if fn_ == 0.0 {
        (0.0, g.conj() / gn)
    } else {
        let t = (fn_ * fn_ + gn * gn).sqrt();
        let cos = fn_ / t;
        let sin = (f / fn_) * g.conj() / t;
        (cos, sin)
    }
}
