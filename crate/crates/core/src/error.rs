//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by parameter validation, evaluation and certification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `alpha` must be finite and exceed -1.
    #[error("alpha must be finite and exceed -1, got {0}")]
    AlphaOutOfDomain(f64),
    /// `beta` must be finite and exceed -1.
    #[error("beta must be finite and exceed -1, got {0}")]
    BetaOutOfDomain(f64),
    /// `lambda` must be finite and exceed -1/2.
    #[error("lambda must be finite and exceed -1/2, got {0}")]
    LambdaOutOfDomain(f64),
    /// Parameter magnitude guard: |alpha|, |beta|, |lambda| <= 1e4.
    #[error("parameter magnitude {0} exceeds the guard 1e4")]
    MagnitudeGuard(f64),
    /// Degree guard: 1 <= n <= 10000.
    #[error("degree must satisfy 1 <= n <= 10000, got {0}")]
    DegreeOutOfRange(u64),
    /// Derivative order outside the supported range.
    #[error("derivative order q={q} out of range for degree n={n} (need 0 <= q <= n+2)")]
    DerivativeOrder { n: u32, q: u32 },
    /// Differential-equation order outside the supported range.
    #[error("ode residual order q={q} out of range for degree n={n} (need 0 <= q <= n-2)")]
    OdeOrder { n: u32, q: u32 },
    /// Evaluation point outside the required interval.
    #[error("evaluation point x={0} outside [-1, 1]")]
    PointOutOfRange(f64),
    /// Evaluation point must be finite.
    #[error("evaluation point must be finite, got {0}")]
    NonFinitePoint(f64),
    /// Coefficient expansion degree guard.
    #[error("coefficient expansion limited to n <= {max}, got n={n}")]
    CoefficientOverflow { n: u32, max: u32 },
    /// A bound id was applied to parameters of the wrong family.
    #[error("bound `{id}` does not accept {family} parameters")]
    FamilyMismatch {
        id: &'static str,
        family: &'static str,
    },
    /// Unknown bound name on the CLI/report surface.
    #[error("unknown bound `{0}`; valid ids: {1}")]
    UnknownBound(String, String),
    /// A sweep grid with no points.
    #[error("grid is empty: need at least one (n, alpha, beta) or (n, lambda) point")]
    EmptyGrid,
    /// Proof traces need at least a quadratic.
    #[error("proof trace requires degree n >= 2, got {0}")]
    TraceDegree(u32),
    /// Conversion requested for a constraint marked not applicable.
    #[error("constraint `{0}` is not applicable; no zero interval can be derived")]
    NotApplicable(&'static str),
    /// Internal fault in the zero oracle. Must not occur for guarded inputs.
    #[error("zero oracle fault: {0}")]
    OracleFault(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
