//! φ_μ(r) as the radialization V_α(η(r)) with μ = Φ(α).

use num_complex::Complex64;

use crate::error::Result;
use crate::geometry::Space;
use crate::radialization::{radialize_detailed, Radialization, RadializationRequest, DEFAULT_ORDER};
use crate::spectral::phi_inverse;

pub fn eval_kernel(space: &Space, mu: Complex64, r: f64) -> Result<Complex64> {
    eval_kernel_detailed(space, mu, r, DEFAULT_ORDER).map(|q| q.value)
}

/// Uses the principal preimage of μ; the other root gives the same value.
pub fn eval_kernel_detailed(space: &Space, mu: Complex64, r: f64, order: usize) -> Result<Radialization> {
    let (alpha, _) = phi_inverse(space, mu);
    eval_kernel_with_alpha(space, alpha, r, order)
}

pub fn eval_kernel_with_alpha(space: &Space, alpha: Complex64, r: f64, order: usize) -> Result<Radialization> {
    let req = RadializationRequest::at_distance(*space, alpha, r, order)?;
    radialize_detailed(&req)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::ode::eval_ode;
    use crate::geometry::r_to_eta;
    use crate::radialization::radialize;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn origin_is_one() {
        let s = Space::new(3, 1.0).unwrap();
        assert_eq!(eval_kernel(&s, c(4.0, -2.0), 0.0).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn root_choice_is_immaterial() {
        let s = Space::new(2, 1.5).unwrap();
        for mu in [c(0.3, 0.0), c(2.0, 1.0), c(-3.0, -0.5)] {
            let (a, b) = phi_inverse(&s, mu);
            for r in [0.4, 2.0, 4.5] {
                let va = eval_kernel_with_alpha(&s, a, r, DEFAULT_ORDER).unwrap().value;
                let vb = eval_kernel_with_alpha(&s, b, r, DEFAULT_ORDER).unwrap().value;
                assert!((va - vb).norm() < 1e-10 * va.norm().max(1.0), "mu={mu} r={r}");
            }
        }
    }

    #[test]
    fn agrees_with_ode_at_bottom_of_spectrum() {
        let s = Space::new(2, 1.0).unwrap();
        let v = eval_kernel(&s, c(1.0, 0.0), 1.0).unwrap();
        let eta = r_to_eta(&s, 1.0).unwrap();
        assert!((eta - 0.5f64.tanh()).abs() < 1e-16);
        let req = RadializationRequest::new(s, c(1.0, 0.0), eta, DEFAULT_ORDER).unwrap();
        assert!((radialize(&req).unwrap() - v).norm() < 1e-13);
        let o = eval_ode(&s, c(1.0, 0.0), 1.0).unwrap().value;
        assert!((v - o).norm() < 1e-8);
    }

    #[test]
    fn agrees_with_ode_at_r2() {
        let s = Space::new(2, 1.0).unwrap();
        let v = eval_kernel(&s, c(1.0, 0.0), 2.0).unwrap();
        let o = eval_ode(&s, c(1.0, 0.0), 2.0).unwrap().value;
        assert!((v - o).norm() < 1e-7);
    }
}
