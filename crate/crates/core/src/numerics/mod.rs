//! Shared numerical kernels.

pub mod newton;
pub mod quadrature;
pub mod rk;

pub use newton::{central_difference, newton_complex, NewtonConfig, NewtonRoot};
pub use quadrature::{gauss_legendre, QuadratureRule};
pub use rk::{rk_fixed, rk_integrate, Integration, IntegratorConfig, State};
