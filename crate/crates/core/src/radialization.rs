//! Radialization V_α(η) of ω^α over the Euclidean sphere S^k(η).
//!
//! By rotational symmetry about the axis through the pole u₀ the sphere
//! average reduces to one polar angle:
//!
//! ```text
//! V_α(η) = ∫₀^π w(θ)^α sin^{k-1}θ dθ / ∫₀^π sin^{k-1}θ dθ
//! w(θ)   = (ρ² - η²) / (ρ² - 2ρη cos θ + η²)
//!        = 1 / (e^{-L} + 2 sinh(L) sin²(θ/2)),   L = r/ρ = 2 atanh(η/ρ)
//! ```
//!
//! The second form is used so that points close to the boundary keep full
//! relative precision. w > 0, so w^α = exp(α ln w) with the real logarithm.
//!
//! [`mc_radialize`] averages ω^α over uniformly drawn sphere points and is
//! the independent check of the reduction.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{omega, r_to_eta, BallPoint, Space};
use crate::numerics::quadrature::{bisect_panels, gauss_legendre, integrate_panels};
use crate::spectral::phi;

pub const DEFAULT_ORDER: usize = 32;
pub const QUAD_REL_TOL: f64 = 1e-11;
pub const MAX_REFINEMENTS: usize = 10;
/// Beyond η = GRADING_ETA·ρ the panels are graded toward θ = 0.
pub const GRADING_ETA: f64 = 0.9;
pub const MIN_MC_SAMPLES: usize = 1000;

const MC_CHUNK: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadializationRequest {
    pub space: Space,
    pub alpha: Complex64,
    eta: f64,
    /// r/ρ, kept separately so it is exact when the request comes from r.
    depth: f64,
    pub quadrature_order: usize,
}

impl RadializationRequest {
    pub fn new(space: Space, alpha: Complex64, eta: f64, quadrature_order: usize) -> Result<Self> {
        space.check_eta(eta)?;
        let depth = 2.0 * (eta / space.rho()).atanh();
        Ok(Self { space, alpha, eta, depth, quadrature_order })
    }

    /// Request for the sphere at hyperbolic distance r from the origin.
    pub fn at_distance(space: Space, alpha: Complex64, r: f64, quadrature_order: usize) -> Result<Self> {
        let eta = r_to_eta(&space, r)?;
        space.check_eta(eta)?;
        Ok(Self { space, alpha, eta, depth: r / space.rho(), quadrature_order })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn with_alpha(self, alpha: Complex64) -> Self {
        Self { alpha, ..self }
    }

    pub fn with_order(self, quadrature_order: usize) -> Self {
        Self { quadrature_order, ..self }
    }
}

/// ln w(θ) from the depth L = r/ρ.
fn log_weight(depth: f64, theta: f64) -> f64 {
    let s = (0.5 * theta).sin();
    // e^{-L}(1 + (e^{2L} - 1) sin²) inverted
    depth - ((2.0 * depth).exp_m1() * s * s).ln_1p()
}

/// ∫₀^π sin^n θ dθ.
pub fn sine_power_integral(n: u32) -> f64 {
    let (mut value, start) = if n.is_multiple_of(2) { (PI, 2) } else { (2.0, 3) };
    let mut j = start;
    while j <= n {
        value *= (j - 1) as f64 / j as f64;
        j += 2;
    }
    value
}

fn initial_breakpoints(req: &RadializationRequest) -> Vec<f64> {
    if req.eta > GRADING_ETA * req.space.rho() {
        // The peak of w at θ = 0 has width ~ e^{-L}.
        let mut pts = vec![0.0];
        let mut x = (-req.depth).exp();
        while x < 0.5 * PI {
            pts.push(x);
            x *= 2.0;
        }
        pts.push(PI);
        pts
    } else {
        vec![0.0, 0.5 * PI, PI]
    }
}

/// Quadrature estimate together with the last refinement difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Radialization {
    pub value: Complex64,
    pub error_estimate: f64,
    pub panels: usize,
}

/// V_α(η) by composite Gauss–Legendre with panel doubling until two
/// successive refinements agree to 1e-11 relative (or to the roundoff
/// floor set by ∫|integrand|).
pub fn radialize_detailed(req: &RadializationRequest) -> Result<Radialization> {
    let rule = gauss_legendre(req.quadrature_order)?;
    let k = req.space.k();
    let norm = sine_power_integral(k - 1);
    if req.alpha == Complex64::new(0.0, 0.0) || req.eta == 0.0 {
        return Ok(Radialization { value: Complex64::new(1.0, 0.0), error_estimate: 0.0, panels: 0 });
    }
    let alpha = req.alpha;
    let depth = req.depth;
    let integrand = |theta: f64| {
        let weight = if k == 1 { 1.0 } else { theta.sin().powi(k as i32 - 1) };
        (alpha * log_weight(depth, theta)).exp() * weight
    };
    let mut breaks = initial_breakpoints(req);
    let (mut prev, _) = integrate_panels(&rule, &breaks, integrand);
    for _ in 0..MAX_REFINEMENTS {
        breaks = bisect_panels(&breaks);
        let (cur, abs) = integrate_panels(&rule, &breaks, integrand);
        let diff = (cur - prev).norm();
        if diff <= QUAD_REL_TOL * cur.norm() + 64.0 * f64::EPSILON * abs {
            return Ok(Radialization {
                value: cur / norm,
                error_estimate: diff / norm,
                panels: breaks.len() - 1,
            });
        }
        prev = cur;
    }
    let (last, _) = integrate_panels(&rule, &breaks, integrand);
    Err(Error::QuadratureNotConverged {
        refinements: MAX_REFINEMENTS,
        previous: prev / norm,
        last: last / norm,
    })
}

pub fn radialize(req: &RadializationRequest) -> Result<Complex64> {
    radialize_detailed(req).map(|r| r.value)
}

/// Monte-Carlo estimate and its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: Complex64,
    pub standard_error: f64,
}

/// Sphere average of ω^α(u₀, ·) over uniformly drawn points of S^k(η).
pub fn mc_radialize(req: &RadializationRequest, samples: usize, seed: u64) -> Result<McEstimate> {
    mc_radialize_at(req, &req.space.pole(), samples, seed)
}

/// As [`mc_radialize`] with an arbitrary boundary point `u`, |u| = ρ.
///
/// Samples are drawn in fixed-size chunks, each from its own ChaCha stream,
/// so the result depends only on (`samples`, `seed`) and not on threading.
pub fn mc_radialize_at(req: &RadializationRequest, u: &[f64], samples: usize, seed: u64) -> Result<McEstimate> {
    if samples < MIN_MC_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "Monte-Carlo needs at least {MIN_MC_SAMPLES} samples, got {samples}"
        )));
    }
    let space = req.space;
    let eta = req.eta;
    let alpha = req.alpha;
    // validates u
    omega(&space, u, &BallPoint::new(&space, vec![0.0; space.dim()])?)?;
    if alpha == Complex64::new(0.0, 0.0) {
        return Ok(McEstimate { estimate: Complex64::new(1.0, 0.0), standard_error: 0.0 });
    }
    let rho = space.rho();
    let dim = space.dim();
    let n_chunks = samples.div_ceil(MC_CHUNK);
    let partials: Vec<(Complex64, f64)> = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk as u64);
            let count = MC_CHUNK.min(samples - chunk * MC_CHUNK);
            let mut sum = Complex64::new(0.0, 0.0);
            let mut sum_sq = 0.0;
            let mut g = vec![0.0; dim];
            for _ in 0..count {
                let mut n2: f64 = 0.0;
                for c in g.iter_mut() {
                    *c = StandardNormal.sample(&mut rng);
                    n2 += *c * *c;
                }
                let scale = eta / n2.sqrt();
                let mut d2 = 0.0;
                for (c, uc) in g.iter().zip(u) {
                    let diff = uc - c * scale;
                    d2 += diff * diff;
                }
                let w = (rho - eta) * (rho + eta) / d2;
                let v = (alpha * w.ln()).exp();
                sum += v;
                sum_sq += v.norm_sqr();
            }
            (sum, sum_sq)
        })
        .collect();
    let (sum, sum_sq) = partials
        .iter()
        .fold((Complex64::new(0.0, 0.0), 0.0), |(s, q), (a, b)| (s + a, q + b));
    let n = samples as f64;
    let mean = sum / n;
    let var = ((sum_sq - n * mean.norm_sqr()) / (n - 1.0)).max(0.0);
    Ok(McEstimate { estimate: mean, standard_error: (var / n).sqrt() })
}

/// Central-difference residual of φ'' + (k/ρ)coth(r/ρ)φ' + μφ at r, with
/// φ(r) = V_α(η(r)) and μ = Φ(α).
pub fn ode_residual(space: &Space, alpha: Complex64, r: f64, h: f64) -> Result<Complex64> {
    ode_residual_with_order(space, alpha, r, h, DEFAULT_ORDER)
}

pub fn ode_residual_with_order(space: &Space, alpha: Complex64, r: f64, h: f64, order: usize) -> Result<Complex64> {
    if !(r > 0.0) {
        return Err(Error::InvalidArgument(format!("residual radius {r} must be positive")));
    }
    let scale = r.max(1.0);
    if !(h >= 1e-5 * scale && h <= 0.1 * scale) || !(h < r) {
        return Err(Error::InvalidArgument(format!(
            "finite-difference step {h} outside [1e-5, 0.1]·max(1, r) or not below r = {r}"
        )));
    }
    let at = |x: f64| RadializationRequest::at_distance(*space, alpha, x, order).and_then(|q| radialize(&q));
    let plus = at(r + h)?;
    let mid = at(r)?;
    let minus = at(r - h)?;
    let rho = space.rho();
    let d2 = (plus - mid * 2.0 + minus) / (h * h);
    let d1 = (plus - minus) / (2.0 * h);
    let coth = 1.0 / (r / rho).tanh();
    Ok(d2 + d1 * (space.kf() / rho * coth) + phi(space, alpha) * mid)
}
