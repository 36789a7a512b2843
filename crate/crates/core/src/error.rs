//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// Quadrature exhausted its node budget. Carries the best value reached
    /// and the error estimate at that point so callers can degrade gracefully.
    #[error("quadrature did not converge: best={value:.6e}, err_est={err_est:.3e}, nodes={nodes}")]
    QuadratureNonConvergence {
        value: f64,
        err_est: f64,
        nodes: usize,
    },

    #[error("operator assembly is not Hermitian (max asymmetry {0:.3e})")]
    NonHermitian(f64),

    #[error("eigensolver failure: {0}")]
    Eigen(String),

    #[error("inadmissible field: {0}")]
    Inadmissible(String),

    #[error("input is not frequency-localized: {0}")]
    NotLocalized(String),

    #[error("evaluation point within {margin:.3e} of the light cone t^2 = |x-y|^2 (t={t}, |x-y|={dist})")]
    OnCone { t: f64, dist: f64, margin: f64 },

    #[error("radial truncation domain too small: {0}")]
    Truncation(String),

    /// The two region-III representations of the per-mode wave kernel
    /// disagreed beyond their combined error estimates.
    #[error("representation mismatch: {0}")]
    RepresentationMismatch(String),

    #[error("mode sum tail not converged: partial={partial:.6e}, tail_bound={tail:.3e}")]
    TailNotConverged { partial: f64, tail: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
