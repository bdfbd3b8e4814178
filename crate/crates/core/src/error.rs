use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error: the inputs
/// were outside an operation's envelope or a numerical routine gave up.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid space: k = {k}, rho = {rho} (need k >= 1, rho > 0)")]
    InvalidSpace { k: u32, rho: f64 },

    #[error("point not strictly inside the ball: |m| = {eta}, rho = {rho}")]
    OutsideBall { eta: f64, rho: f64 },

    #[error("boundary point off the sphere: |u| = {norm}, rho = {rho}")]
    OffSphere { norm: f64, rho: f64 },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("quadrature did not converge after {refinements} refinements (last estimates {previous} and {last})")]
    QuadratureNotConverged {
        refinements: usize,
        previous: Complex64,
        last: Complex64,
    },

    #[error("step size underflow at r = {at} (h = {step:e})")]
    StepUnderflow { at: f64, step: f64 },

    #[error("integrator exceeded {max_steps} steps at r = {at}")]
    MaxSteps { max_steps: usize, at: f64 },

    #[error("series radius exceeded: r = {r}, validated up to {limit}")]
    SeriesRadius { r: f64, limit: f64 },

    #[error("Newton iteration failed after {iterations} iterations; best iterate {best} with |g| = {residual:e}")]
    NewtonFailed {
        iterations: usize,
        best: Complex64,
        residual: f64,
    },

    #[error("evaluation methods disagree at r = {r}: kernel {kernel} vs ode {ode} (scaled difference {difference:e})")]
    MethodDisagreement {
        r: f64,
        kernel: Complex64,
        ode: Complex64,
        difference: f64,
    },

    #[error("eigenvalues must differ (mu = nu = {0})")]
    EqualEigenvalues(Complex64),

    #[error("no nontrivial collision found from {seeds} seeds{}", describe_best(.best))]
    NoCollision {
        seeds: usize,
        /// Closest nontrivial attempt (β, |g|), if any iterate got that far.
        best: Option<(Complex64, f64)>,
    },

    #[error("collision at beta = {beta} (r0 = {r0}) lies inside the uniqueness strip |Im| <= {bound}")]
    BoundContradiction { beta: Complex64, r0: f64, bound: f64 },

    #[error("unknown method `{0}`")]
    UnknownMethod(String),
}

fn describe_best(best: &Option<(Complex64, f64)>) -> String {
    match best {
        Some((beta, residual)) => format!("; best residual {residual:e} at beta = {beta}"),
        None => "; every iterate converged to a trivial root or diverged".to_string(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
