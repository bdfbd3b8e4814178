//! The map Φ(α) = -κ(αk - α²) from kernel exponents to eigenvalues, its
//! inverse, and the parabolic region that is the image of the strip
//! |Im α| ≤ p.
//!
//! Writing α = k/2 + t gives Φ(α) = -κ(k²/4 - t²), so Φ is even in t and
//! both preimages of μ are k/2 ± s with s² = k²/4 + μ/κ. The strip
//! half-width of μ is |Im s|.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::Space;

/// Absolute slack on the defining inequality of the closed parabolic region.
pub const REGION_SLACK: f64 = 1e-12;

/// A kernel exponent together with its eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    pub alpha: Complex64,
    pub mu: Complex64,
    pub space: Space,
}

impl SpectralPoint {
    pub fn from_alpha(space: Space, alpha: Complex64) -> Self {
        Self { alpha, mu: phi(&space, alpha), space }
    }

    /// Uses the principal preimage (see [`phi_inverse`]).
    pub fn from_mu(space: Space, mu: Complex64) -> Self {
        Self { alpha: phi_inverse(&space, mu).0, mu, space }
    }

    /// The other exponent with the same eigenvalue, k - α.
    pub fn partner(&self) -> Self {
        Self {
            alpha: self.space.kf() - self.alpha,
            mu: self.mu,
            space: self.space,
        }
    }

    pub fn strip_halfwidth(&self) -> f64 {
        self.alpha.im.abs()
    }
}

/// The horizontal strip |Im α| ≤ p in the exponent plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripRegion {
    p: f64,
}

impl StripRegion {
    pub fn new(p: f64) -> Result<Self> {
        if !(p >= 0.0) {
            return Err(Error::InvalidArgument(format!("strip half-width {p} must be >= 0")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn contains_alpha(&self, alpha: Complex64) -> bool {
        alpha.im.abs() <= self.p
    }

    /// Whether Φ⁻¹(μ) lies in the strip; dispatches to the real ray at p = 0.
    pub fn contains_mu(&self, space: &Space, mu: Complex64) -> bool {
        if self.p == 0.0 {
            in_real_ray(space, mu)
        } else {
            in_parabola(space, mu, self.p).unwrap_or(false)
        }
    }
}

pub fn phi(space: &Space, alpha: Complex64) -> Complex64 {
    let k = space.kf();
    (alpha * k - alpha * alpha) * (-space.kappa())
}

/// Half-difference s of the two preimages, with Re s ≥ 0.
fn half_gap(space: &Space, mu: Complex64) -> Complex64 {
    let k = space.kf();
    (Complex64::new(k * k / 4.0, 0.0) + mu / space.kappa()).sqrt()
}

/// Both roots of α² - kα - μ/κ = 0. The first has Re ≤ k/2; when the real
/// parts tie, the first has Im ≥ 0. The roots sum to k.
pub fn phi_inverse(space: &Space, mu: Complex64) -> (Complex64, Complex64) {
    let half_k = Complex64::new(space.kf() / 2.0, 0.0);
    let s = half_gap(space, mu);
    let a = half_k - s;
    let b = half_k + s;
    if a.re < b.re || (a.re == b.re && a.im >= b.im) {
        (a, b)
    } else {
        (b, a)
    }
}

/// |Im α| for either preimage of μ.
pub fn strip_halfwidth(space: &Space, mu: Complex64) -> f64 {
    half_gap(space, mu).im.abs()
}

/// Vertex of the parabola for half-width p: -κ(k²/4 + p²).
pub fn parabola_vertex(space: &Space, p: f64) -> f64 {
    let k = space.kf();
    -space.kappa() * (k * k / 4.0 + p * p)
}

/// Membership in the closed region Re μ ≤ -κ(p² + k²/4) + (Im μ)²/(4κp²).
pub fn in_parabola(space: &Space, mu: Complex64, p: f64) -> Result<bool> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "parabola parameter p = {p} must be positive; use in_real_ray for p = 0"
        )));
    }
    let kappa = space.kappa();
    let bound = parabola_vertex(space, p) + mu.im * mu.im / (4.0 * kappa * p * p);
    Ok(mu.re <= bound + REGION_SLACK)
}

/// The degenerate region for p = 0: real μ ≤ -κk²/4.
pub fn in_real_ray(space: &Space, mu: Complex64) -> bool {
    mu.im == 0.0 && mu.re <= parabola_vertex(space, 0.0) + REGION_SLACK
}

/// One sample of the parabola boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySample {
    /// Offset along the line α = k/2 ± ip + a₁.
    pub a1: f64,
    pub mu: Complex64,
}

/// Φ on the boundary line α = k/2 + i·p·sign + a₁ (sign = ±1).
pub fn boundary_point(space: &Space, p: f64, a1: f64, upper: bool) -> Complex64 {
    let im = if upper { p } else { -p };
    phi(space, Complex64::new(space.kf() / 2.0 + a1, im))
}

/// |a₁| at which the boundary crosses the imaginary μ axis: √(p² + k²/4).
pub fn axis_crossing_offset(space: &Space, p: f64) -> f64 {
    let k = space.kf();
    (p * p + k * k / 4.0).sqrt()
}

/// `n` samples of the boundary, with a₁ spread evenly over twice the
/// axis-crossing offset on each side.
pub fn parabola_boundary(space: &Space, p: f64, n: usize) -> Result<Vec<BoundarySample>> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!("parabola parameter p = {p} must be positive")));
    }
    if n < 3 {
        return Err(Error::InvalidArgument(format!("need at least 3 boundary samples, got {n}")));
    }
    let span = 2.0 * axis_crossing_offset(space, p);
    Ok((0..n)
        .map(|j| {
            let a1 = -span + 2.0 * span * j as f64 / (n - 1) as f64;
            BoundarySample { a1, mu: boundary_point(space, p, a1, true) }
        })
        .collect())
}

/// The three axis crossings of the boundary: the vertex on the real axis and
/// the two points on the imaginary axis (lower, upper by imaginary part).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaAnchors {
    pub vertex: Complex64,
    pub lower: Complex64,
    pub upper: Complex64,
}

pub fn parabola_anchors(space: &Space, p: f64) -> Result<ParabolaAnchors> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!("parabola parameter p = {p} must be positive")));
    }
    let c = axis_crossing_offset(space, p);
    let vertex = boundary_point(space, p, 0.0, true);
    let a = boundary_point(space, p, c, true);
    let b = boundary_point(space, p, -c, true);
    let (lower, upper) = if a.im <= b.im { (a, b) } else { (b, a) };
    Ok(ParabolaAnchors { vertex, lower, upper })
}

/// πρ/(2p) with p the larger strip half-width of μ and ν; infinite when both
/// are on the real ray.
pub fn threshold(space: &Space, mu: Complex64, nu: Complex64) -> Result<f64> {
    if mu == nu {
        return Err(Error::EqualEigenvalues(mu));
    }
    let p = strip_halfwidth(space, mu).max(strip_halfwidth(space, nu));
    Ok(threshold_for_halfwidth(space, p))
}

pub fn threshold_for_halfwidth(space: &Space, p: f64) -> f64 {
    if p == 0.0 {
        f64::INFINITY
    } else {
        PI * space.rho() / (2.0 * p)
    }
}

/// Largest half-width p with r ≤ πρ/(2p), i.e. πρ/(2r).
pub fn certifying_halfwidth(space: &Space, r: f64) -> f64 {
    PI * space.rho() / (2.0 * r)
}
