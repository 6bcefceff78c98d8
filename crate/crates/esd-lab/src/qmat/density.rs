//! Density-matrix validation.

use crate::error::{Error, Result};
use crate::qmat::eigen::hermitian_eigenvalues;
use crate::qmat::mat::Mat4;

/// Max elementwise |M − M†| allowed in a physical state.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Allowed |tr M − 1|.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues may dip this far below zero before a state counts as
/// non-positive. Closed-form evolutions in double precision stay well above
/// this floor while genuine violations fall far below it.
pub const MIN_EIGENVALUE_FLOOR: f64 = -1e-10;

/// Outcome of [`validate_density`]: the measured defects plus the verdict.
#[derive(Debug, Clone, Copy)]
pub struct ValidityReport {
    /// max elementwise |M − M†|
    pub hermiticity_defect: f64,
    /// |tr M − 1|
    pub trace_defect: f64,
    /// Smallest eigenvalue (real part).
    pub min_eigenvalue: f64,
    /// True iff every defect is within tolerance.
    pub valid: bool,
}

/// Checks Hermiticity, unit trace, and positive semidefiniteness.
///
/// Report-style: never fails. Non-finite entries and (unreachable for
/// Hermitian input) eigensolver breakdown surface as infinite defects.
pub fn validate_density(m: &Mat4) -> ValidityReport {
    if !m.is_finite() {
        return ValidityReport {
            hermiticity_defect: f64::INFINITY,
            trace_defect: f64::INFINITY,
            min_eigenvalue: f64::NEG_INFINITY,
            valid: false,
        };
    }
    let hermiticity_defect = m.hermiticity_defect();
    let trace_defect = (m.trace() - num_complex::Complex64::new(1.0, 0.0)).norm();
    let min_eigenvalue = match hermitian_eigenvalues(m) {
        Ok(eig) => eig[0],
        Err(_) => f64::NEG_INFINITY,
    };
    let valid = hermiticity_defect <= HERMITICITY_TOL
        && trace_defect <= TRACE_TOL
        && min_eigenvalue >= MIN_EIGENVALUE_FLOOR;
    ValidityReport {
        hermiticity_defect,
        trace_defect,
        min_eigenvalue,
        valid,
    }
}

/// A physical two-qubit state: Hermitian, unit trace, positive semidefinite
/// within the module tolerances, in the fixed product basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    m: Mat4,
}

impl DensityMatrix {
    /// Validates and wraps a matrix; the error carries the full defect report.
    pub fn new(m: Mat4) -> Result<Self> {
        let report = validate_density(&m);
        if report.valid {
            Ok(Self { m })
        } else {
            Err(Error::InvalidDensity { report })
        }
    }

    /// Wraps without re-validating. For internal paths whose outputs are
    /// physical by construction.
    pub(crate) fn new_unchecked(m: Mat4) -> Self {
        debug_assert!(m.is_finite());
        Self { m }
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    /// I/4.
    pub fn maximally_mixed() -> Self {
        Self {
            m: Mat4::identity().scale(0.25),
        }
    }
}
