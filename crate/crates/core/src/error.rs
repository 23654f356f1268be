//! Error types shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Log-gamma pole at a nonpositive integer.
    #[error("ln_gamma pole at z = {re}")]
    GammaPole { re: f64 },

    /// Argument outside the domain of the requested function.
    #[error("{what}: argument t = {t} out of domain")]
    Domain { what: &'static str, t: f64 },

    /// Riemann-Siegel backend requested below its validity range.
    #[error("Riemann-Siegel backend requires t >= 2*pi, got t = {t}")]
    BackendRange { t: f64 },

    /// e^{i theta} zeta(1/2+it) came out with a non-negligible imaginary part.
    #[error("conjugate symmetry violated at t = {t}: |Im| = {imag:e}")]
    ConjugateResidual { t: f64, imag: f64 },

    /// S(t) is undefined where zeta vanishes.
    #[error("S(t) indeterminate at t = {t}: |zeta| = {modulus:e} below tolerance")]
    IndeterminateAtZero { t: f64, modulus: f64 },

    /// Newton-map multiplier needs a nonvanishing first derivative.
    #[error("Z'(t) vanishes at t = {t} (|Z'| = {deriv:e})")]
    DerivativeVanishes { t: f64, deriv: f64 },

    /// Multiplicity formula 1/(1-lambda) is indeterminate at lambda = 1.
    #[error("multiplicity indeterminate at t = {t}: lambda_N = {lambda}")]
    MultiplicityIndeterminate { t: f64, lambda: f64 },

    /// Earlier zeros y_1..y_{n-1} are required before computing y_n.
    #[error("zero index {n} requires {required} earlier zeros, only {available} available")]
    MissingPrerequisite {
        n: u32,
        required: usize,
        available: usize,
    },

    /// Iteration hit the max_iterations backstop.
    #[error("iteration for zero {n} did not converge after {iterations} steps (t = {last_t})")]
    NonConvergence { n: u32, iterations: u32, last_t: f64 },

    /// Converged, but to something that is not the n-th zero.
    #[error("misconvergence for zero {n} at y = {y}: {reason}")]
    Misconvergence { n: u32, y: f64, reason: String },

    /// Trajectory left the t > e iteration domain.
    #[error("trajectory left the iteration domain t > e at t = {t}")]
    LeftIterationDomain { t: f64 },

    /// Lipschitz-estimate scan found no qualifying bracket endpoint.
    #[error("no qualifying bracket point for c_{n} within the scan range")]
    BracketNotFound { n: u32 },

    /// Exact-equation target fell outside [F(y-eps), F(y+eps)].
    #[error("exact-equation bracket violated for n = {n}: target {target} outside [{lower}, {upper}]")]
    BracketViolation {
        n: u32,
        lower: f64,
        upper: f64,
        target: f64,
    },

    /// Reference-table line failed to parse.
    #[error("reference table parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Reference-table entries must be strictly increasing.
    #[error("reference table ordering violated on line {line}: {value} <= {previous}")]
    Ordering {
        line: usize,
        value: f64,
        previous: f64,
    },

    /// Zero store content is not a contiguous ascending sequence from n = 1.
    #[error("zero store invalid at record {index}: {msg}")]
    InvalidStore { index: usize, msg: String },

    /// Invalid precision configuration.
    #[error("invalid configuration: {msg}")]
    Config { msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("store record parse error on line {line}: {msg}")]
    StoreParse { line: usize, msg: String },
}
