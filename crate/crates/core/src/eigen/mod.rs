//! Evaluation of the origin-normalized radial eigenfunction φ_μ(r).
//!
//! Each route is a [`Method`] behind a common trait and is looked up by name
//! in a [`MethodRegistry`]:
//!
//! | name         | route                                                 |
//! |--------------|-------------------------------------------------------|
//! | `series`     | even Taylor series of the regular solution            |
//! | `ode`        | Dormand–Prince from r_switch, seeded by the series    |
//! | `kernel`     | radialization of ω^α with α a preimage of μ           |
//! | `reconciled` | kernel value, checked against the ODE route           |

pub mod kernel;
pub mod ode;
pub mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::Space;
use crate::radialization;

pub use kernel::{eval_kernel, eval_kernel_detailed};
pub use ode::{eval_ode, eval_ode_with, r_switch, OdeValue};
pub use series::{eval_series, series_coefficients, SeriesValue};

/// Scaled kernel/ODE difference above which [`evaluate`] fails.
pub const DISAGREEMENT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodKind {
    Series,
    Ode,
    Kernel,
    Reconciled,
}

impl MethodKind {
    pub const ALL: [MethodKind; 4] = [Self::Series, Self::Ode, Self::Kernel, Self::Reconciled];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Series => "series",
            Self::Ode => "ode",
            Self::Kernel => "kernel",
            Self::Reconciled => "reconciled",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

/// φ_μ(r) as produced by one route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalReport {
    pub r: f64,
    pub mu: Complex64,
    pub value: Complex64,
    pub method: MethodKind,
    pub error_estimate: f64,
}

/// One way of computing φ_μ(r).
pub trait Method: Send + Sync {
    fn kind(&self) -> MethodKind;

    fn evaluate(&self, space: &Space, mu: Complex64, r: f64) -> Result<EvalReport>;

    fn name(&self) -> &'static str {
        self.kind().as_str()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SeriesMethod {
    pub order: usize,
}

impl Default for SeriesMethod {
    fn default() -> Self {
        Self { order: series::DEFAULT_ORDER }
    }
}

impl Method for SeriesMethod {
    fn kind(&self) -> MethodKind {
        MethodKind::Series
    }

    fn evaluate(&self, space: &Space, mu: Complex64, r: f64) -> Result<EvalReport> {
        let v = eval_series(space, mu, r, self.order)?;
        Ok(EvalReport { r, mu, value: v.value, method: self.kind(), error_estimate: v.truncation })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OdeMethod {
    pub config: crate::numerics::IntegratorConfig,
}

impl Default for OdeMethod {
    fn default() -> Self {
        Self { config: ode::default_config() }
    }
}

impl Method for OdeMethod {
    fn kind(&self) -> MethodKind {
        MethodKind::Ode
    }

    fn evaluate(&self, space: &Space, mu: Complex64, r: f64) -> Result<EvalReport> {
        let v = eval_ode_with(space, mu, r, &self.config)?;
        Ok(EvalReport { r, mu, value: v.value, method: self.kind(), error_estimate: v.error_estimate })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct KernelMethod {
    pub quadrature_order: usize,
}

impl Default for KernelMethod {
    fn default() -> Self {
        Self { quadrature_order: radialization::DEFAULT_ORDER }
    }
}

impl Method for KernelMethod {
    fn kind(&self) -> MethodKind {
        MethodKind::Kernel
    }

    fn evaluate(&self, space: &Space, mu: Complex64, r: f64) -> Result<EvalReport> {
        if !(r >= 0.0) {
            return Err(Error::InvalidArgument(format!("radius {r} must be >= 0")));
        }
        let q = eval_kernel_detailed(space, mu, r, self.quadrature_order)?;
        Ok(EvalReport { r, mu, value: q.value, method: self.kind(), error_estimate: q.error_estimate })
    }
}

/// Kernel value with the kernel/ODE difference as its error estimate.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReconciledMethod {
    pub kernel: KernelMethod,
    pub ode: OdeMethod,
}

impl Method for ReconciledMethod {
    fn kind(&self) -> MethodKind {
        MethodKind::Reconciled
    }

    fn evaluate(&self, space: &Space, mu: Complex64, r: f64) -> Result<EvalReport> {
        let kernel = self.kernel.evaluate(space, mu, r)?.value;
        let ode = self.ode.evaluate(space, mu, r)?.value;
        let diff = (kernel - ode).norm();
        let scaled = diff / kernel.norm().max(1.0);
        if !(scaled <= DISAGREEMENT_TOL) {
            return Err(Error::MethodDisagreement { r, kernel, ode, difference: scaled });
        }
        Ok(EvalReport { r, mu, value: kernel, method: self.kind(), error_estimate: diff })
    }
}

/// Name-keyed collection of evaluation methods.
pub struct MethodRegistry {
    methods: BTreeMap<&'static str, Box<dyn Method>>,
}

impl MethodRegistry {
    pub fn empty() -> Self {
        Self { methods: BTreeMap::new() }
    }

    /// All four routes with default settings.
    pub fn with_defaults() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(SeriesMethod::default()));
        reg.register(Box::new(OdeMethod::default()));
        reg.register(Box::new(KernelMethod::default()));
        reg.register(Box::new(ReconciledMethod::default()));
        reg
    }

    /// Adds or replaces the method under its name.
    pub fn register(&mut self, method: Box<dyn Method>) {
        self.methods.insert(method.name(), method);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Method> {
        self.methods
            .get(name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.methods.keys().copied()
    }

    pub fn evaluate(&self, name: &str, space: &Space, mu: Complex64, r: f64) -> Result<EvalReport> {
        self.get(name)?.evaluate(space, mu, r)
    }
}

impl Default for MethodRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

/// φ_μ(r) by the kernel route, cross-checked against the ODE route.
pub fn evaluate(space: &Space, mu: Complex64, r: f64) -> Result<EvalReport> {
    ReconciledMethod::default().evaluate(space, mu, r)
}
