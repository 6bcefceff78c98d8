//! Standard-form ("X") states and the canonical state factories.
//!
//! An X state has population on the diagonal and coherence only on the
//! anti-diagonal:
//!
//! ```text
//!         ⎛ a  0  0  w ⎞
//!     ρ = ⎜ 0  b  z  0 ⎟
//!         ⎜ 0  z* c  0 ⎟
//!         ⎝ w* 0  0  d ⎠
//! ```
//!
//! The class is closed under both dephasing channels: populations are frozen
//! and each coherence only picks up a scalar factor, so states that start in
//! this form stay in it for all time.

use crate::error::{Error, Result};
use crate::qmat::density::DensityMatrix;
use crate::qmat::mat::{Mat4, C64};

/// Allowed overshoot in the normalization and positivity inequalities.
pub const X_STATE_TOL: f64 = 1e-12;

/// Six-parameter standard-form state: diagonal probabilities `a, b, c, d` and
/// anti-diagonal coherences `w` (outer block) and `z` (inner block).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    w: C64,
    z: C64,
}

impl XState {
    /// Validates the standard-form invariants:
    /// nonnegative diagonal summing to 1, `|w|² ≤ ad`, `|z|² ≤ bc`.
    pub fn new(a: f64, b: f64, c: f64, d: f64, w: C64, z: C64) -> Result<Self> {
        for (value, name) in [(a, "a"), (b, "b"), (c, "c"), (d, "d")] {
            if !value.is_finite() {
                return Err(Error::NonFinite {
                    context: "X-state diagonal",
                });
            }
            if value < 0.0 {
                return Err(Error::Positivity {
                    detail: format!("diagonal probability {name} = {value} is negative"),
                });
            }
        }
        if !(w.re.is_finite() && w.im.is_finite() && z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite {
                context: "X-state coherence",
            });
        }
        let sum = a + b + c + d;
        if (sum - 1.0).abs() > X_STATE_TOL {
            return Err(Error::Normalization { sum });
        }
        if w.norm_sqr() > a * d + X_STATE_TOL {
            return Err(Error::Positivity {
                detail: format!(
                    "|w|² = {:.6e} exceeds a·d = {:.6e} (w branch)",
                    w.norm_sqr(),
                    a * d
                ),
            });
        }
        if z.norm_sqr() > b * c + X_STATE_TOL {
            return Err(Error::Positivity {
                detail: format!(
                    "|z|² = {:.6e} exceeds b·c = {:.6e} (z branch)",
                    z.norm_sqr(),
                    b * c
                ),
            });
        }
        Ok(Self { a, b, c, d, w, z })
    }

    /// For internal evolutions that can only shrink coherences.
    pub(crate) fn new_unchecked(a: f64, b: f64, c: f64, d: f64, w: C64, z: C64) -> Self {
        Self { a, b, c, d, w, z }
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }
    pub fn w(&self) -> C64 {
        self.w
    }
    pub fn z(&self) -> C64 {
        self.z
    }

    /// Replaces the coherences; pure scaling during dephasing keeps the
    /// invariants intact.
    pub(crate) fn with_coherences(&self, w: C64, z: C64) -> Self {
        Self { w, z, ..*self }
    }

    /// The full 4×4 matrix: `ρ11..ρ44 = a,b,c,d`, `ρ14 = w`, `ρ23 = z`,
    /// conjugates mirrored, every other entry exactly zero.
    pub fn embed(&self) -> DensityMatrix {
        let mut m = Mat4::from_real_diag([self.a, self.b, self.c, self.d]);
        m[(0, 3)] = self.w;
        m[(3, 0)] = self.w.conj();
        m[(1, 2)] = self.z;
        m[(2, 1)] = self.z.conj();
        DensityMatrix::new_unchecked(m)
    }
}

/// The four maximally entangled Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellState {
    /// (|++⟩ + |−−⟩)/√2
    PhiPlus,
    /// (|++⟩ − |−−⟩)/√2
    PhiMinus,
    /// (|+−⟩ + |−+⟩)/√2
    PsiPlus,
    /// (|+−⟩ − |−+⟩)/√2
    PsiMinus,
}

/// Bell states as X states: Φ± carry the outer-block coherence w = ±1/2,
/// Ψ± the inner-block coherence z = ±1/2.
pub fn bell_state(kind: BellState) -> XState {
    let half = C64::new(0.5, 0.0);
    match kind {
        BellState::PhiPlus => XState::new_unchecked(0.5, 0.0, 0.0, 0.5, half, C64::new(0.0, 0.0)),
        BellState::PhiMinus => XState::new_unchecked(0.5, 0.0, 0.0, 0.5, -half, C64::new(0.0, 0.0)),
        BellState::PsiPlus => XState::new_unchecked(0.0, 0.5, 0.5, 0.0, C64::new(0.0, 0.0), half),
        BellState::PsiMinus => XState::new_unchecked(0.0, 0.5, 0.5, 0.0, C64::new(0.0, 0.0), -half),
    }
}

/// `p·|Ψ−⟩⟨Ψ−| + (1−p)·I/4` for `p ∈ [0, 1]`.
///
/// Separable for `p ≤ 1/3`, entangled above.
pub fn werner_state(p: f64) -> Result<XState> {
    if !p.is_finite() {
        return Err(Error::NonFinite {
            context: "Werner mixing parameter",
        });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain {
            what: "Werner mixing parameter must lie in [0, 1]",
            value: p,
        });
    }
    let outer = (1.0 - p) / 4.0;
    let inner = (1.0 + p) / 4.0;
    Ok(XState::new_unchecked(
        outer,
        inner,
        inner,
        outer,
        C64::new(0.0, 0.0),
        C64::new(-p / 2.0, 0.0),
    ))
}

/// Canonical mixed state whose entanglement dies at a finite time under the
/// collective field: `a = d = 1/3, b = c = 1/6, w = 1/3, z = 0`.
pub fn sudden_death_demo() -> XState {
    XState::new_unchecked(
        1.0 / 3.0,
        1.0 / 6.0,
        1.0 / 6.0,
        1.0 / 3.0,
        C64::new(1.0 / 3.0, 0.0),
        C64::new(0.0, 0.0),
    )
}

/// Canonical mixed state whose entanglement only decays exponentially under
/// the collective field (`b = 0` empties the inner block, so the concurrence
/// threshold sits at zero): `a = c = d = 1/3, b = 0, w = 1/6, z = 0`.
pub fn asymptotic_decay_demo() -> XState {
    XState::new_unchecked(
        1.0 / 3.0,
        0.0,
        1.0 / 3.0,
        1.0 / 3.0,
        C64::new(1.0 / 6.0, 0.0),
        C64::new(0.0, 0.0),
    )
}
