//! One-radius uniqueness: separation scans of two origin-normalized
//! eigenfunctions below the threshold πρ/(2p), and the search for distinct
//! exponents whose sphere averages collide at a given radius.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::eigen::evaluate;
use crate::error::{Error, Result};
use crate::geometry::Space;
use crate::numerics::{newton_complex, NewtonConfig};
use crate::radialization::{radialize, RadializationRequest, DEFAULT_ORDER};
use crate::spectral::{certifying_halfwidth, phi, threshold};

/// Scans of an unbounded threshold stop at SCAN_CLIP·ρ.
pub const SCAN_CLIP: f64 = 20.0;
/// The grid starts at GRID_START·T_clip.
pub const GRID_START: f64 = 1e-4;
/// Absolute part of the PASS floor.
pub const FLOOR_ABS: f64 = 1e-9;
/// Multiple of the evaluator error estimate in the PASS floor.
pub const FLOOR_ERROR_FACTOR: f64 = 10.0;
/// Roots closer than this are merged.
pub const ROOT_MERGE: f64 = 1e-6;
pub const MIN_COLLISION_TOL: f64 = 1e-11;

#[derive(Debug, Clone, PartialEq)]
pub struct SeparationScan {
    pub mu: Complex64,
    pub nu: Complex64,
    pub space: Space,
    pub grid: Vec<f64>,
    pub separations: Vec<f64>,
    /// Larger of the two evaluator error estimates at each grid point.
    pub errors: Vec<f64>,
    pub min_separation: f64,
    pub argmin_r: f64,
    pub argmin_index: usize,
}

/// `n` points from GRID_START·t to t, equally spaced in log r; the last is t.
pub fn geometric_grid(t_clip: f64, n: usize) -> Vec<f64> {
    let lo = (GRID_START * t_clip).ln();
    let hi = t_clip.ln();
    let mut grid: Vec<f64> = (0..n)
        .map(|j| (lo + (hi - lo) * j as f64 / (n - 1) as f64).exp())
        .collect();
    grid[n - 1] = t_clip;
    grid
}

/// |φ_μ(r) - φ_ν(r)| on a geometric grid in (0, t_clip].
pub fn scan_separation(space: &Space, mu: Complex64, nu: Complex64, n_grid: usize, t_clip: f64) -> Result<SeparationScan> {
    let t = threshold(space, mu, nu)?;
    if n_grid < 2 {
        return Err(Error::InvalidArgument(format!("scan grid needs at least 2 points, got {n_grid}")));
    }
    if !(t_clip > 0.0) || !t_clip.is_finite() {
        return Err(Error::InvalidArgument(format!("scan limit {t_clip} must be positive and finite")));
    }
    if t_clip > t * (1.0 + 1e-12) {
        return Err(Error::InvalidArgument(format!("scan limit {t_clip} exceeds the threshold {t}")));
    }
    let grid = geometric_grid(t_clip, n_grid);
    let points: Vec<(f64, f64)> = grid
        .par_iter()
        .map(|&r| {
            let a = evaluate(space, mu, r)?;
            let b = evaluate(space, nu, r)?;
            Ok(((a.value - b.value).norm(), a.error_estimate.max(b.error_estimate)))
        })
        .collect::<Result<_>>()?;
    let (separations, errors): (Vec<f64>, Vec<f64>) = points.into_iter().unzip();
    let (argmin_index, &min_separation) = separations
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("grid is non-empty");
    Ok(SeparationScan {
        mu,
        nu,
        space: *space,
        argmin_r: grid[argmin_index],
        grid,
        separations,
        errors,
        min_separation,
        argmin_index,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertifyReport {
    /// πρ/(2p); infinite on the real ray.
    pub threshold: f64,
    /// Whether the scan stopped short of the threshold.
    pub clipped: bool,
    pub scan_limit: f64,
    pub scan: SeparationScan,
    pub floor: f64,
    pub verdict: Verdict,
}

/// Scan (0, min(T, 20ρ)] and compare the smallest separation with the
/// numeric floor max(1e-9, 10·error estimate at the minimizer).
pub fn certify_one_radius(space: &Space, mu: Complex64, nu: Complex64, n_grid: usize) -> Result<CertifyReport> {
    let t = threshold(space, mu, nu)?;
    let cap = SCAN_CLIP * space.rho();
    let (scan_limit, clipped) = if t > cap { (cap, true) } else { (t, false) };
    let scan = scan_separation(space, mu, nu, n_grid, scan_limit)?;
    let floor = FLOOR_ABS.max(FLOOR_ERROR_FACTOR * scan.errors[scan.argmin_index]);
    let verdict = if scan.min_separation > floor { Verdict::Pass } else { Verdict::Inconclusive };
    Ok(CertifyReport { threshold: t, clipped, scan_limit, scan, floor, verdict })
}

/// Rectangle of Newton starting points in the β-plane, optionally mirrored
/// across the real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeedGrid {
    pub re: (f64, f64),
    pub im: (f64, f64),
    pub n_re: usize,
    pub n_im: usize,
    pub conjugate: bool,
}

impl SeedGrid {
    /// 11×11 seeds over Re β ∈ [-2k, 3k], Im β ∈ [p_min, p_min + 5] and the
    /// mirrored band, with p_min = πρ/(2r₀) the edge of the uniqueness strip.
    pub fn default_for(space: &Space, r0: f64) -> Self {
        let k = space.kf();
        let p_min = certifying_halfwidth(space, r0);
        Self { re: (-2.0 * k, 3.0 * k), im: (p_min, p_min + 5.0), n_re: 11, n_im: 11, conjugate: true }
    }

    pub fn seeds(&self) -> Vec<Complex64> {
        let lin = |(a, b): (f64, f64), n: usize, j: usize| {
            if n == 1 {
                0.5 * (a + b)
            } else {
                a + (b - a) * j as f64 / (n - 1) as f64
            }
        };
        let mut out = Vec::with_capacity(self.n_re * self.n_im * 2);
        for i in 0..self.n_im {
            let im = lin(self.im, self.n_im, i);
            for j in 0..self.n_re {
                let re = lin(self.re, self.n_re, j);
                out.push(Complex64::new(re, im));
                if self.conjugate {
                    out.push(Complex64::new(re, -im));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Collision {
    pub beta: Complex64,
    pub alpha: Complex64,
    pub r0: f64,
    /// |V_β - V_α| at η(r₀) from the doubled-order re-check.
    pub residual: f64,
    /// |V_β - V_α| at the Newton exit.
    pub newton_residual: f64,
    pub im_beta: f64,
    /// Φ(β), the eigenvalue of the colliding eigenfunction.
    pub nu: Complex64,
}

fn sort_key(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Nontrivial β with V_β(η(r₀)) = V_α(η(r₀)), found by damped Newton from
/// every seed. Roots are merged within 1e-6, the trivial β ∈ {α, k - α}
/// removed (within max(1e-6, 100·√tol)), and each survivor re-verified at
/// doubled quadrature order (residual < 10·tol). Output is sorted by Re β, then Im β.
pub fn find_collision(space: &Space, alpha: Complex64, r0: f64, seeds: &SeedGrid, tol: f64) -> Result<Vec<Collision>> {
    if !(r0 > 0.0) || !r0.is_finite() {
        return Err(Error::InvalidArgument(format!("collision radius r0 = {r0} must be positive")));
    }
    if !(tol >= MIN_COLLISION_TOL) {
        return Err(Error::InvalidArgument(format!("collision tolerance {tol} below {MIN_COLLISION_TOL}")));
    }
    let base = RadializationRequest::at_distance(*space, alpha, r0, DEFAULT_ORDER)?;
    let target = radialize(&base)?;
    let g = |beta: Complex64| match radialize(&base.with_alpha(beta)) {
        Ok(v) => v - target,
        Err(_) => Complex64::new(f64::NAN, f64::NAN),
    };
    let cfg = NewtonConfig { tol, max_iter: 80, fd_step: 1e-6, max_distance: 50.0 };
    let starts = seeds.seeds();
    let outcomes: Vec<_> = starts.par_iter().map(|&z0| newton_complex(g, z0, &cfg)).collect();

    let mut best = (Complex64::new(f64::NAN, f64::NAN), f64::INFINITY);
    let mut roots = Vec::new();
    for out in &outcomes {
        match out {
            Ok(root) => roots.push(*root),
            Err(Error::NewtonFailed { best: z, residual, .. }) if *residual < best.1 => best = (*z, *residual),
            Err(_) => {}
        }
    }
    roots.sort_by(|a, b| sort_key(&a.z, &b.z));
    let partner = space.kf() - alpha;
    // At α = k/2 the trivial roots merge into a double root, which Newton
    // only resolves to ~√tol.
    let trivial_radius = ROOT_MERGE.max(100.0 * tol.sqrt());
    let mut distinct: Vec<crate::numerics::NewtonRoot> = Vec::new();
    for root in roots {
        if (root.z - alpha).norm() <= trivial_radius || (root.z - partner).norm() <= trivial_radius {
            continue;
        }
        if distinct.iter().any(|d| (d.z - root.z).norm() <= ROOT_MERGE) {
            continue;
        }
        distinct.push(root);
    }

    let check = base.with_order(2 * DEFAULT_ORDER);
    let check_target = radialize(&check)?;
    let bound = certifying_halfwidth(space, r0);
    let mut found = Vec::new();
    for root in distinct {
        if root.residual < best.1 {
            best = (root.z, root.residual);
        }
        let verified = match radialize(&check.with_alpha(root.z)) {
            Ok(v) => (v - check_target).norm(),
            Err(_) => continue,
        };
        if !(verified < 10.0 * tol) {
            continue;
        }
        if alpha.im.abs().max(root.z.im.abs()) <= bound {
            return Err(Error::BoundContradiction { beta: root.z, r0, bound });
        }
        found.push(Collision {
            beta: root.z,
            alpha,
            r0,
            residual: verified,
            newton_residual: root.residual,
            im_beta: root.z.im,
            nu: phi(space, root.z),
        });
    }
    if found.is_empty() {
        let best = best.1.is_finite().then_some(best);
        return Err(Error::NoCollision { seeds: starts.len(), best });
    }
    Ok(found)
}

/// (π/2) / ln((ρ+η)/(ρ-η)) expressed through η; equals πρ/(2r).
pub fn strip_bound_at_eta(space: &Space, eta: f64) -> f64 {
    let rho = space.rho();
    0.5 * PI / ((rho + eta) / (rho - eta)).ln()
}
