//! Ball and half-space models of hyperbolic space H^{k+1} with curvature
//! -1/rho², the Cayley transform between them, and the kernel
//! ω(u, m) = (rho² - |m|²) / |u - m|².

use crate::error::{Error, Result};

/// Points with |m| > rho·(1 - BOUNDARY_MARGIN) are rejected.
pub const BOUNDARY_MARGIN: f64 = 1e-9;

/// Tolerance on |u| = rho for boundary points, relative to rho.
pub const SPHERE_TOL: f64 = 1e-12;

/// The ambient space: geodesic spheres are S^k, curvature radius is rho.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Space {
    k: u32,
    rho: f64,
}

impl Space {
    pub fn new(k: u32, rho: f64) -> Result<Self> {
        if k < 1 || !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::InvalidSpace { k, rho });
        }
        Ok(Self { k, rho })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// k as a float, for formulas.
    pub fn kf(&self) -> f64 {
        self.k as f64
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// Sectional curvature, always -1/rho².
    pub fn kappa(&self) -> f64 {
        -1.0 / (self.rho * self.rho)
    }

    /// Dimension of the ambient space (k + 1).
    pub fn dim(&self) -> usize {
        self.k as usize + 1
    }

    /// Largest Euclidean radius accepted as interior.
    pub fn max_eta(&self) -> f64 {
        self.rho * (1.0 - BOUNDARY_MARGIN)
    }

    /// The boundary point (0, ..., 0, rho) used by the Cayley transform.
    pub fn pole(&self) -> Vec<f64> {
        let mut u = vec![0.0; self.dim()];
        u[self.k as usize] = self.rho;
        u
    }

    pub(crate) fn check_eta(&self, eta: f64) -> Result<()> {
        if !(eta >= 0.0) || eta > self.max_eta() {
            return Err(Error::OutsideBall { eta, rho: self.rho });
        }
        Ok(())
    }
}

/// A point of the ball model, strictly inside |m| < rho.
#[derive(Debug, Clone, PartialEq)]
pub struct BallPoint {
    coords: Vec<f64>,
    eta: f64,
}

impl BallPoint {
    pub fn new(space: &Space, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::Dimension { expected: space.dim(), got: coords.len() });
        }
        let eta = norm(&coords);
        space.check_eta(eta)?;
        Ok(Self { coords, eta })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean distance to the origin.
    pub fn eta(&self) -> f64 {
        self.eta
    }
}

/// A point (x, t) of the upper half-space model, t > 0.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpacePoint {
    pub x: Vec<f64>,
    pub t: f64,
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

fn check_boundary(space: &Space, u: &[f64]) -> Result<()> {
    if u.len() != space.dim() {
        return Err(Error::Dimension { expected: space.dim(), got: u.len() });
    }
    let n = norm(u);
    if (n - space.rho()).abs() > SPHERE_TOL * space.rho() {
        return Err(Error::OffSphere { norm: n, rho: space.rho() });
    }
    Ok(())
}

/// ω(u, m) for a boundary point u and an interior point m.
pub fn omega(space: &Space, u: &[f64], m: &BallPoint) -> Result<f64> {
    check_boundary(space, u)?;
    let rho = space.rho();
    let dist2: f64 = u.iter().zip(m.coords()).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok((rho - m.eta()) * (rho + m.eta()) / dist2)
}

/// Cayley transform from the ball to the half-space, sending the pole
/// (0, ..., 0, rho) to infinity and the origin to (0, 1).
pub fn cayley(space: &Space, m: &BallPoint) -> Result<HalfSpacePoint> {
    let rho = space.rho();
    let k = space.k() as usize;
    let (xs, tt) = m.coords().split_at(k);
    let big_t = tt[0];
    let x2: f64 = xs.iter().map(|c| c * c).sum();
    let denom = x2 + (big_t - rho) * (big_t - rho);
    if denom == 0.0 {
        return Err(Error::OutsideBall { eta: m.eta(), rho });
    }
    let x = xs.iter().map(|c| 2.0 * rho * c / denom).collect();
    let t = (rho - m.eta()) * (rho + m.eta()) / denom;
    Ok(HalfSpacePoint { x, t })
}

/// Euclidean radius of the sphere at hyperbolic distance r from the origin.
pub fn r_to_eta(space: &Space, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::InvalidArgument(format!("hyperbolic distance {r} must be >= 0")));
    }
    let rho = space.rho();
    Ok(rho * (r / (2.0 * rho)).tanh())
}

/// Hyperbolic distance from the origin of a point at Euclidean radius eta.
pub fn eta_to_r(space: &Space, eta: f64) -> Result<f64> {
    space.check_eta(eta)?;
    let rho = space.rho();
    // rho·ln((rho+eta)/(rho-eta)) = 2·rho·atanh(eta/rho)
    Ok(2.0 * rho * (eta / rho).atanh())
}
