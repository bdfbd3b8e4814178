//! Radial eigenfunctions of the Laplacian on hyperbolic space H^{k+1} of
//! curvature -1/ρ², normalized by φ(0) = 1.
//!
//! The crate evaluates φ_μ(r) three independent ways (Taylor series, adaptive
//! ODE integration, and the sphere average of a Poisson-type kernel), maps
//! between kernel exponents and eigenvalues, and checks numerically that two
//! distinct eigenfunctions cannot meet on (0, πρ/(2p)] while they can meet
//! beyond it.
//!
//! ```
//! use num_complex::Complex64;
//! use radial_eigen::{eigen::evaluate, geometry::Space};
//!
//! let space = Space::new(2, 1.0).unwrap();
//! let report = evaluate(&space, Complex64::new(1.0, 0.0), 1.0).unwrap();
//! // k = 2, μ = 1: φ(r) = r / sinh r
//! assert!((report.value.re - 1.0 / 1f64.sinh()).abs() < 1e-10);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod eigen;
pub mod error;
pub mod geometry;
pub mod numerics;
pub mod one_radius;
pub mod radialization;
pub mod spectral;

pub use error::{Error, Result};
pub use geometry::Space;
