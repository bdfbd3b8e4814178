//! Dormand–Prince 5(4) with PI step-size control over a complex 2-vector.
//!
//! The field is written over complex values; internally each component is
//! just a pair of reals and the error norm uses the complex modulus.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type State = [Complex64; 2];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_steps: usize,
    pub initial_step: f64,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_steps: 200_000,
            initial_step: 1e-3,
        }
    }
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol >= 1e-13) || !(self.abs_tol > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "integrator tolerances rel={} abs={} (need rel >= 1e-13, abs > 0)",
                self.rel_tol, self.abs_tol
            )));
        }
        if self.max_steps == 0 || !(self.initial_step > 0.0) {
            return Err(Error::InvalidArgument(
                "integrator needs max_steps > 0 and initial_step > 0".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integration {
    pub y: State,
    /// Sum of accepted local error estimates (absolute, max-component).
    pub error_estimate: f64,
    pub steps: usize,
}

// Dormand–Prince tableau.
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// b - b* (fifth minus fourth order weights).
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn axpy(y: &State, terms: &[(f64, &State)], h: f64) -> State {
    let mut out = *y;
    for (c, k) in terms {
        for i in 0..2 {
            out[i] += k[i] * (h * c);
        }
    }
    out
}

struct Step {
    y: State,
    err: State,
    k_last: State,
}

fn dopri_step<F: FnMut(f64, &State) -> State>(f: &mut F, t: f64, y: &State, k1: &State, h: f64) -> Step {
    let k2 = f(t + C2 * h, &axpy(y, &[(A21, k1)], h));
    let k3 = f(t + C3 * h, &axpy(y, &[(A31, k1), (A32, &k2)], h));
    let k4 = f(t + C4 * h, &axpy(y, &[(A41, k1), (A42, &k2), (A43, &k3)], h));
    let k5 = f(
        t + C5 * h,
        &axpy(y, &[(A51, k1), (A52, &k2), (A53, &k3), (A54, &k4)], h),
    );
    let k6 = f(
        t + h,
        &axpy(y, &[(A61, k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)], h),
    );
    let y_new = axpy(y, &[(A71, k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)], h);
    let k7 = f(t + h, &y_new);
    let mut err = [Complex64::new(0.0, 0.0); 2];
    for i in 0..2 {
        err[i] = (k1[i] * E1 + k3[i] * E3 + k4[i] * E4 + k5[i] * E5 + k6[i] * E6 + k7[i] * E7) * h;
    }
    Step { y: y_new, err, k_last: k7 }
}

/// Adaptive integration of y' = f(t, y) from `span.0` to `span.1`.
pub fn rk_integrate<F: FnMut(f64, &State) -> State>(
    mut f: F,
    span: (f64, f64),
    y0: State,
    cfg: &IntegratorConfig,
) -> Result<Integration> {
    cfg.validate()?;
    let (t0, t1) = span;
    if !(t0 < t1) {
        return Err(Error::InvalidArgument(format!(
            "integration span ({t0}, {t1}) must be increasing"
        )));
    }
    const SAFETY: f64 = 0.9;
    const ALPHA: f64 = 0.7 / 5.0;
    const BETA: f64 = 0.4 / 5.0;
    const MIN_FACTOR: f64 = 0.2;
    const MAX_FACTOR: f64 = 10.0;

    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut h = cfg.initial_step.min(t1 - t0);
    let mut err_prev: f64 = 1e-4;
    let mut total_err = 0.0;
    let mut steps = 0usize;
    let mut rejected_last = false;

    while t < t1 {
        if steps >= cfg.max_steps {
            return Err(Error::MaxSteps { max_steps: cfg.max_steps, at: t });
        }
        let last = t + h >= t1;
        if last {
            h = t1 - t;
        }
        if h <= 16.0 * f64::EPSILON * t.abs().max(1.0) && !last {
            return Err(Error::StepUnderflow { at: t, step: h });
        }
        let step = dopri_step(&mut f, t, &y, &k1, h);
        let mut err_norm: f64 = 0.0;
        let mut err_abs: f64 = 0.0;
        for ((y0, y1), e) in y.iter().zip(&step.y).zip(&step.err) {
            let sc = cfg.abs_tol + cfg.rel_tol * y0.norm().max(y1.norm());
            err_norm = err_norm.max(e.norm() / sc);
            err_abs = err_abs.max(e.norm());
        }
        if !err_norm.is_finite() {
            h *= MIN_FACTOR;
            rejected_last = true;
            continue;
        }
        if err_norm <= 1.0 {
            steps += 1;
            t = if last { t1 } else { t + h };
            y = step.y;
            k1 = step.k_last;
            total_err += err_abs;
            let mut factor = if err_norm == 0.0 {
                MAX_FACTOR
            } else {
                SAFETY * err_norm.powf(-ALPHA) * err_prev.powf(BETA)
            };
            factor = factor.clamp(MIN_FACTOR, MAX_FACTOR);
            if rejected_last {
                factor = factor.min(1.0);
            }
            h *= factor;
            err_prev = err_norm.max(1e-4);
            rejected_last = false;
        } else {
            let factor = (SAFETY * err_norm.powf(-ALPHA)).max(MIN_FACTOR);
            h *= factor;
            rejected_last = true;
            if h <= 16.0 * f64::EPSILON * t.abs().max(1.0) {
                return Err(Error::StepUnderflow { at: t, step: h });
            }
        }
    }
    Ok(Integration { y, error_estimate: total_err, steps })
}

/// Fixed-step fifth-order Dormand–Prince; used to check the convergence order.
pub fn rk_fixed<F: FnMut(f64, &State) -> State>(
    mut f: F,
    span: (f64, f64),
    y0: State,
    n_steps: usize,
) -> State {
    let h = (span.1 - span.0) / n_steps as f64;
    let mut y = y0;
    let mut t = span.0;
    for _ in 0..n_steps {
        let k1 = f(t, &y);
        y = dopri_step(&mut f, t, &y, &k1, h).y;
        t += h;
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const I: Complex64 = Complex64::new(0.0, 1.0);
    const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    const ONE: Complex64 = Complex64::new(1.0, 0.0);

    #[test]
    fn complex_exponential_half_turn() {
        let out = rk_integrate(|_, y| [I * y[0], ZERO], (0.0, PI), [ONE, ZERO], &IntegratorConfig::default())
            .unwrap();
        assert!((out.y[0] + ONE).norm() < 1e-9, "{:?}", out.y[0]);
    }

    #[test]
    fn constant_field_has_zero_error() {
        let y0 = [Complex64::new(2.0, -1.0), Complex64::new(0.5, 0.0)];
        let out = rk_integrate(|_, _| [ZERO, ZERO], (0.0, 3.0), y0, &IntegratorConfig::default()).unwrap();
        assert_eq!(out.y, y0);
        assert_eq!(out.error_estimate, 0.0);
    }

    #[test]
    fn harmonic_oscillator_energy_drift() {
        let cfg = IntegratorConfig { rel_tol: 1e-10, ..Default::default() };
        let out = rk_integrate(|_, y| [y[1], -y[0]], (0.0, 10.0), [ONE, ZERO], &cfg).unwrap();
        let energy = out.y[0].norm_sqr() + out.y[1].norm_sqr();
        assert!((energy - 1.0).abs() < 1e-8, "drift {}", energy - 1.0);
    }

    #[test]
    fn fifth_order_convergence() {
        // y' = (-1 + 2i) y, y(1) = e^{-1}(cos 2 + i sin 2)
        let exact = Complex64::new(-1.0, 2.0).exp();
        let g = |_: f64, y: &State| [y[0] * Complex64::new(-1.0, 2.0), ZERO];
        let err = |n: usize| (rk_fixed(g, (0.0, 1.0), [ONE, ZERO], n)[0] - exact).norm();
        let ratio = err(20) / err(40);
        assert!((25.0..40.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn rejects_backward_span_and_bad_tolerance() {
        let f = |_: f64, y: &State| *y;
        assert!(rk_integrate(f, (1.0, 0.0), [ONE, ZERO], &IntegratorConfig::default()).is_err());
        let cfg = IntegratorConfig { rel_tol: 1e-14, ..Default::default() };
        assert!(rk_integrate(f, (0.0, 1.0), [ONE, ZERO], &cfg).is_err());
    }

    #[test]
    fn max_steps_reported() {
        let cfg = IntegratorConfig { max_steps: 3, ..Default::default() };
        let err = rk_integrate(|_, y| [I * y[0] * 50.0, ZERO], (0.0, 10.0), [ONE, ZERO], &cfg).unwrap_err();
        assert!(matches!(err, Error::MaxSteps { .. }));
    }
}
