//! Taylor series of the regular solution about r = 0.
//!
//! With x = r/ρ and λ = μρ² the equation becomes
//! ψ'' + k coth(x) ψ' + λψ = 0. Expanding x·coth x = Σ b_j x^{2j} and
//! matching the coefficient of x^{n-2} gives, for ψ = Σ c_n x^n,
//!
//! ```text
//! n(n - 1 + k) c_n = -λ c_{n-2} - k Σ_{j≥1} b_j (n - 2j) c_{n-2j}
//! ```
//!
//! with c_0 = 1 and c_1 = 0. Odd coefficients therefore vanish.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::Space;

pub const MAX_ORDER: usize = 40;
pub const DEFAULT_ORDER: usize = 20;
/// Series evaluation is accepted for r ≤ VALIDATED_RADIUS·ρ (the coth pole
/// at x = iπ bounds the radius of convergence).
pub const VALIDATED_RADIUS: f64 = 1.0;

/// Coefficients b_j of x·coth(x) = Σ b_j x^{2j}, j = 0..=n.
///
/// From cosh x = (x coth x)(sinh x / x):
/// 1/(2m)! = Σ_{j≤m} b_j / (2(m-j)+1)!.
pub fn xcoth_coefficients(n: usize) -> Vec<f64> {
    let mut b = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut v = inv_factorial(2 * m);
        for (j, bj) in b.iter().enumerate() {
            v -= bj * inv_factorial(2 * (m - j) + 1);
        }
        b.push(v);
    }
    b
}

fn inv_factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc / i as f64)
}

/// Coefficients c_0..=c_order of ψ(x) = Σ c_n x^n (all powers, odd ones
/// included so the vanishing can be checked).
pub fn series_coefficients(space: &Space, mu: Complex64, order: usize) -> Vec<Complex64> {
    let k = space.kf();
    let lambda = mu * (space.rho() * space.rho());
    let b = xcoth_coefficients(order / 2 + 1);
    let mut c = vec![Complex64::new(0.0, 0.0); order + 1];
    c[0] = Complex64::new(1.0, 0.0);
    for n in 2..=order {
        let mut rhs = -lambda * c[n - 2];
        let mut j = 1;
        while 2 * j < n {
            rhs -= c[n - 2 * j] * (k * b[j] * (n - 2 * j) as f64);
            j += 1;
        }
        c[n] = rhs / (n as f64 * (n as f64 - 1.0 + k));
    }
    c
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    /// dφ/dr
    pub derivative: Complex64,
    /// Magnitude of the last retained term.
    pub truncation: f64,
}

/// φ_μ(r) from the even Taylor series through r^order.
pub fn eval_series(space: &Space, mu: Complex64, r: f64, order: usize) -> Result<SeriesValue> {
    if order < 2 || order % 2 == 1 || order > MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "series order {order} must be even and in [2, {MAX_ORDER}]"
        )));
    }
    if !(r >= 0.0) {
        return Err(Error::InvalidArgument(format!("radius {r} must be >= 0")));
    }
    let limit = VALIDATED_RADIUS * space.rho();
    if r > limit {
        return Err(Error::SeriesRadius { r, limit });
    }
    let c = series_coefficients(space, mu, order);
    let rho = space.rho();
    let x = r / rho;
    let x2 = x * x;
    let mut value = Complex64::new(0.0, 0.0);
    let mut dvalue = Complex64::new(0.0, 0.0);
    // Horner over even powers.
    for n in (0..=order).rev().step_by(2) {
        value = value * x2 + c[n];
        if n >= 2 {
            dvalue = dvalue * x2 + c[n] * n as f64;
        }
    }
    let last = (c[order] * x.powi(order as i32)).norm();
    // dvalue holds Σ n c_n x^{n-2}; dψ/dx = x·dvalue, dφ/dr = dψ/dx / ρ.
    Ok(SeriesValue { value, derivative: dvalue * x / rho, truncation: last })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn xcoth_known_terms() {
        let b = xcoth_coefficients(3);
        assert!((b[0] - 1.0).abs() < 1e-16);
        assert!((b[1] - 1.0 / 3.0).abs() < 1e-16);
        assert!((b[2] + 1.0 / 45.0).abs() < 1e-16);
        assert!((b[3] - 2.0 / 945.0).abs() < 1e-16);
    }

    #[test]
    fn xcoth_series_sums_to_function() {
        let b = xcoth_coefficients(25);
        let x: f64 = 1.3;
        let sum: f64 = b.iter().enumerate().map(|(j, bj)| bj * x.powi(2 * j as i32)).sum();
        assert!((sum - x / x.tanh()).abs() < 1e-12);
    }

    #[test]
    fn zero_eigenvalue_is_constant() {
        let s = Space::new(2, 1.0).unwrap();
        for order in [2, 10, 40] {
            for r in [0.0, 0.3, 1.0] {
                let v = eval_series(&s, c(0.0, 0.0), r, order).unwrap();
                assert_eq!(v.value, c(1.0, 0.0));
                assert_eq!(v.derivative, c(0.0, 0.0));
            }
        }
    }

    #[test]
    fn leading_coefficient() {
        for (k, rho) in [(1, 1.0), (2, 2.0), (3, 0.5)] {
            let s = Space::new(k, rho).unwrap();
            let mu = c(1.7, -0.4);
            let coeffs = series_coefficients(&s, mu, 4);
            // c₂ in powers of r is c[2]/ρ².
            let c2 = coeffs[2] / (rho * rho);
            let expect = -mu / (2.0 * (k as f64 + 1.0));
            assert!((c2 - expect).norm() < 1e-15, "k={k}");
        }
    }

    #[test]
    fn odd_coefficients_vanish() {
        let s = Space::new(3, 1.3).unwrap();
        let coeffs = series_coefficients(&s, c(-4.0, 2.5), 40);
        for n in (1..=40).step_by(2) {
            assert_eq!(coeffs[n], c(0.0, 0.0));
        }
    }

    #[test]
    fn value_at_origin_is_exactly_one() {
        let s = Space::new(1, 1.0).unwrap();
        assert_eq!(eval_series(&s, c(3.0, 1.0), 0.0, 20).unwrap().value, c(1.0, 0.0));
    }

    #[test]
    fn k2_closed_form() {
        // k = 2, ρ = 1: φ(r) = sinh(s r) / (s sinh r), s = √(1 - μ).
        let s = Space::new(2, 1.0).unwrap();
        for mu in [c(1.0, 0.0), c(-3.0, 0.0), c(2.0, 1.5)] {
            let sq = (Complex64::new(1.0, 0.0) - mu).sqrt();
            for r in [0.1f64, 0.5, 1.0] {
                let exact = if sq.norm() == 0.0 {
                    Complex64::new(r / r.sinh(), 0.0)
                } else {
                    (sq * r).sinh() / (sq * r.sinh())
                };
                let v = eval_series(&s, mu, r, 40).unwrap();
                assert!((v.value - exact).norm() < 1e-13, "mu={mu} r={r}: {} vs {exact}", v.value);
            }
        }
    }

    #[test]
    fn derivative_matches_difference() {
        let s = Space::new(3, 1.0).unwrap();
        let mu = c(2.0, -1.0);
        let h = 1e-5;
        let r = 0.4;
        let d = eval_series(&s, mu, r, 40).unwrap().derivative;
        let fd = (eval_series(&s, mu, r + h, 40).unwrap().value - eval_series(&s, mu, r - h, 40).unwrap().value) / (2.0 * h);
        assert!((d - fd).norm() < 1e-9);
    }

    #[test]
    fn rejects_bad_order_and_radius() {
        let s = Space::new(2, 1.0).unwrap();
        assert!(eval_series(&s, c(1.0, 0.0), 0.1, 3).is_err());
        assert!(eval_series(&s, c(1.0, 0.0), 0.1, 42).is_err());
        assert!(eval_series(&s, c(1.0, 0.0), 0.1, 0).is_err());
        assert!(matches!(eval_series(&s, c(1.0, 0.0), 1.5, 20), Err(Error::SeriesRadius { .. })));
    }
}
