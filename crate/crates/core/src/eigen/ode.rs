//! Adaptive integration of φ'' + (k/ρ)coth(r/ρ)φ' + μφ = 0 seeded by the
//! series at r_switch, where the 1/r coefficient is still benign.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::Space;
use crate::numerics::rk::{rk_integrate, IntegratorConfig, State};

use super::series::{eval_series, DEFAULT_ORDER};

/// Series/integrator hand-over point, as a multiple of ρ.
pub const SWITCH_FACTOR: f64 = 1e-2;

pub fn r_switch(space: &Space) -> f64 {
    SWITCH_FACTOR * space.rho()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeValue {
    pub value: Complex64,
    pub derivative: Complex64,
    /// Integrator global estimate plus the seeding truncation term.
    pub error_estimate: f64,
    pub steps: usize,
}

pub fn default_config() -> IntegratorConfig {
    IntegratorConfig { rel_tol: 1e-10, abs_tol: 1e-14, max_steps: 500_000, initial_step: 1e-3 }
}

pub fn eval_ode(space: &Space, mu: Complex64, r: f64) -> Result<OdeValue> {
    eval_ode_with(space, mu, r, &default_config())
}

pub fn eval_ode_with(space: &Space, mu: Complex64, r: f64, cfg: &IntegratorConfig) -> Result<OdeValue> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::InvalidArgument(format!("radius {r} must be finite and >= 0")));
    }
    let r0 = r_switch(space);
    let seed = eval_series(space, mu, r.min(r0), DEFAULT_ORDER)?;
    if r <= r0 {
        return Ok(OdeValue {
            value: seed.value,
            derivative: seed.derivative,
            error_estimate: seed.truncation,
            steps: 0,
        });
    }
    let rho = space.rho();
    let k_over_rho = space.kf() / rho;
    let field = |t: f64, y: &State| {
        let coth = 1.0 / (t / rho).tanh();
        [y[1], -(y[1] * (k_over_rho * coth)) - mu * y[0]]
    };
    let out = rk_integrate(field, (r0, r), [seed.value, seed.derivative], cfg)?;
    Ok(OdeValue {
        value: out.y[0],
        derivative: out.y[1],
        error_estimate: out.error_estimate + seed.truncation,
        steps: out.steps,
    })
}
