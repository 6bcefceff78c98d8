//! On-disk state format.
//!
//! A state file is a JSON document with exactly one of two shapes:
//!
//! ```json
//! { "x_state": { "a": 0.3333, "b": 0.1666, "c": 0.1666, "d": 0.3333,
//!                "w": { "re": 0.3333, "im": 0.0 },
//!                "z": { "re": 0.0, "im": 0.0 } } }
//! ```
//!
//! or a full matrix in the fixed product basis, row-major:
//!
//! ```json
//! { "matrix": [ [ { "re": 0.25, "im": 0.0 }, ... ], ... ] }
//! ```
//!
//! Parsed states are validated immediately; a rejected file names the
//! violated invariant. Numbers are emitted with enough digits to round-trip
//! the exact binary value.

use serde::{Deserialize, Serialize};

use crate::qmat::{DensityMatrix, Mat4, XState, C64};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ComplexSpec {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for ComplexSpec {
    fn from(v: C64) -> Self {
        Self { re: v.re, im: v.im }
    }
}

impl From<ComplexSpec> for C64 {
    fn from(v: ComplexSpec) -> Self {
        C64::new(v.re, v.im)
    }
}

/// Wire form of a state file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateSpecFile {
    XState {
        a: f64,
        b: f64,
        c: f64,
        d: f64,
        w: ComplexSpec,
        z: ComplexSpec,
    },
    Matrix([[ComplexSpec; 4]; 4]),
}

/// A validated state, remembering whether the standard-form fast paths
/// (closed-form evolution, closed-form concurrence, analytic death times)
/// apply.
#[derive(Debug, Clone)]
pub enum ParsedState {
    X(XState),
    General(DensityMatrix),
}

impl ParsedState {
    pub fn density(&self) -> DensityMatrix {
        match self {
            Self::X(x) => x.embed(),
            Self::General(rho) => *rho,
        }
    }

    pub fn as_x_state(&self) -> Option<&XState> {
        match self {
            Self::X(x) => Some(x),
            Self::General(_) => None,
        }
    }
}

/// Parses and validates a state file; the error string names the defect.
pub fn parse_state(text: &str) -> Result<ParsedState, String> {
    let spec: StateSpecFile =
        serde_json::from_str(text).map_err(|e| format!("could not parse state file: {e}"))?;
    match spec {
        StateSpecFile::XState { a, b, c, d, w, z } => XState::new(a, b, c, d, w.into(), z.into())
            .map(ParsedState::X)
            .map_err(|e| format!("invalid x_state: {e}")),
        StateSpecFile::Matrix(rows) => {
            let mut m = Mat4::zeros();
            for (i, row) in rows.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    m[(i, j)] = (*v).into();
                }
            }
            let rho = DensityMatrix::new(m).map_err(|e| format!("invalid matrix state: {e}"))?;
            Ok(promote_to_x(rho))
        }
    }
}

/// A matrix that is exactly standard-form (zeros off the two diagonals,
/// real diagonal) is promoted so the closed-form machinery applies to it.
fn promote_to_x(rho: DensityMatrix) -> ParsedState {
    let m = rho.matrix();
    let zero = C64::new(0.0, 0.0);
    let off_x = [
        (0, 1),
        (0, 2),
        (1, 0),
        (1, 3),
        (2, 0),
        (2, 3),
        (3, 1),
        (3, 2),
    ];
    let x_shaped =
        off_x.iter().all(|&(i, j)| m[(i, j)] == zero) && (0..4).all(|i| m[(i, i)].im == 0.0);
    if x_shaped {
        // The X-form positivity tolerance is tighter than the matrix PSD
        // floor; matrices in the sliver between them stay on the general path.
        if let Ok(x) = XState::new(
            m[(0, 0)].re,
            m[(1, 1)].re,
            m[(2, 2)].re,
            m[(3, 3)].re,
            m[(0, 3)],
            m[(1, 2)],
        ) {
            return ParsedState::X(x);
        }
    }
    ParsedState::General(rho)
}

/// Wire form of a density matrix (always the `matrix` shape).
pub fn density_to_spec(rho: &DensityMatrix) -> StateSpecFile {
    let m = rho.matrix();
    let mut rows = [[ComplexSpec { re: 0.0, im: 0.0 }; 4]; 4];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = m[(i, j)].into();
        }
    }
    StateSpecFile::Matrix(rows)
}

pub fn to_pretty_json(spec: &StateSpecFile) -> String {
    serde_json::to_string_pretty(spec).expect("state specs always serialize")
}
