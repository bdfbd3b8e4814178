//! Damped Newton iteration for a complex scalar equation with a
//! central-difference derivative.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonConfig {
    pub tol: f64,
    pub max_iter: usize,
    /// Finite-difference step for g'(z).
    pub fd_step: f64,
    /// Iterates farther than this from the start are treated as divergent.
    pub max_distance: f64,
}

impl Default for NewtonConfig {
    fn default() -> Self {
        Self { tol: 1e-11, max_iter: 60, fd_step: 1e-6, max_distance: 1e3 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonRoot {
    pub z: Complex64,
    pub residual: f64,
    pub iterations: usize,
}

/// Central difference of an analytic function along the real axis.
pub fn central_difference<G: FnMut(Complex64) -> Complex64>(g: &mut G, z: Complex64, h: f64) -> Complex64 {
    (g(z + h) - g(z - h)) / (2.0 * h)
}

/// Solve g(z) = 0 from `z0`. Steps are halved (up to 20 times) until the
/// residual decreases; failure carries the best iterate seen.
pub fn newton_complex<G: FnMut(Complex64) -> Complex64>(
    mut g: G,
    z0: Complex64,
    cfg: &NewtonConfig,
) -> Result<NewtonRoot> {
    if !(cfg.tol >= 1e-12) {
        return Err(Error::InvalidArgument(format!("Newton tolerance {} below 1e-12", cfg.tol)));
    }
    let mut z = z0;
    let mut gz = g(z);
    let mut best = NewtonRoot { z, residual: gz.norm(), iterations: 0 };
    let fail = |best: NewtonRoot, iterations| Error::NewtonFailed {
        iterations,
        best: best.z,
        residual: best.residual,
    };
    for iter in 0..=cfg.max_iter {
        let res = gz.norm();
        if !res.is_finite() {
            return Err(fail(best, iter));
        }
        if res < best.residual {
            best = NewtonRoot { z, residual: res, iterations: iter };
        }
        if res < cfg.tol {
            return Ok(NewtonRoot { z, residual: res, iterations: iter });
        }
        if iter == cfg.max_iter {
            break;
        }
        let d = central_difference(&mut g, z, cfg.fd_step);
        if d.norm() == 0.0 || !d.is_finite() {
            return Err(fail(best, iter));
        }
        let full = gz / d;
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..20 {
            let trial = z - full * lambda;
            let gt = g(trial);
            if gt.is_finite() && gt.norm() < res {
                z = trial;
                gz = gt;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            // Stagnated: roundoff floor or a local minimum of |g|.
            return Err(fail(best, iter));
        }
        if (z - z0).norm() > cfg.max_distance {
            return Err(fail(best, iter));
        }
    }
    Err(fail(best, cfg.max_iter))
}
