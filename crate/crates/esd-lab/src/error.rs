use crate::qmat::ValidityReport;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A NaN or infinity reached a public constructor.
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    /// Diagonal probabilities of a standard-form state do not sum to one.
    #[error("state is not normalized: a+b+c+d = {sum}, must equal 1 within 1e-12")]
    Normalization { sum: f64 },

    /// A coherence exceeds the bound set by the diagonal, so the matrix has a
    /// negative eigenvalue.
    #[error("state is not positive semidefinite: {detail}")]
    Positivity { detail: String },

    /// An argument is outside its domain (negative time or rate, probability
    /// outside [0, 1], non-positive tolerance, ...).
    #[error("{what}: got {value}")]
    Domain { what: &'static str, value: f64 },

    /// The QR iteration failed to converge. Never silent: callers see this
    /// instead of garbage eigenvalues.
    #[error("eigenvalue iteration failed to converge")]
    EigenConvergence,

    /// Eigenvalues that must be real (up to roundoff) came back with a large
    /// imaginary part, indicating an invalid input matrix.
    #[error("spectrum has unexpected imaginary parts (max |Im| = {max_imag:.3e})")]
    ComplexSpectrum { max_imag: f64 },

    /// Eigenvalues that must be nonnegative came back clearly negative.
    #[error("spectrum has an unexpected negative eigenvalue ({value:.3e})")]
    NegativeSpectrum { value: f64 },

    /// A Kraus set does not satisfy the completeness relation Σ K K† = I.
    #[error("Kraus set violates completeness: max |ΣKK† − I| = {defect:.3e}")]
    KrausIncomplete { defect: f64 },

    /// A matrix failed density-matrix validation.
    #[error(
        "not a valid density matrix: hermiticity defect {defect:.3e}, \
         trace defect {trace:.3e}, min eigenvalue {min_eig:.3e}",
        defect = report.hermiticity_defect,
        trace = report.trace_defect,
        min_eig = report.min_eigenvalue
    )]
    InvalidDensity { report: ValidityReport },

    /// The global-noise death-time analysis requires z = 0: the z coherence
    /// lives in a decoherence-free subspace of the collective field and never
    /// decays, so no finite death time exists on that branch.
    #[error("state has z = {z_mod:.3e} ≠ 0: the z coherence is immune to the collective field")]
    DecoherenceFreeBranch { z_mod: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
