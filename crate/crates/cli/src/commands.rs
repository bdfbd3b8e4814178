use num_complex::Complex64;
use radial_eigen::eigen::{MethodKind, MethodRegistry};
use radial_eigen::one_radius::{certify_one_radius, find_collision, SeedGrid};
use radial_eigen::spectral::{certifying_halfwidth, parabola_anchors, parabola_boundary, strip_halfwidth};
use radial_eigen::{Error, Space};
use serde::Serialize;

use crate::config::{Job, JobConfig, RegionFormat};
use crate::output::{num, short};
use crate::parse::RadiusSpec;
use crate::svg;

pub const EVAL_HEADER: &str = "r,re_phi,im_phi,err";
pub const REGION_HEADER: &str = "a1,re_mu,im_mu";
pub const CERTIFY_SCHEMA: &str = "radial-eigen/certify/v1";
pub const COLLIDE_SCHEMA: &str = "radial-eigen/collide/v1";
pub const REGION_SCHEMA: &str = "radial-eigen/region/v1";

/// What a command produced: the document and a one-line summary.
pub struct Outcome {
    pub body: String,
    pub summary: Option<String>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for JsonComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Debug, Serialize)]
struct JsonSpace {
    k: u32,
    rho: f64,
}

impl From<&Space> for JsonSpace {
    fn from(s: &Space) -> Self {
        Self { k: s.k(), rho: s.rho() }
    }
}

pub fn run(config: &JobConfig) -> Result<Outcome, Error> {
    let space = &config.space;
    match &config.job {
        Job::Eval { mu, radii, method } => cmd_eval(space, *mu, radii, *method),
        Job::Region { p, samples, format } => cmd_region(space, *p, *samples, *format),
        Job::Certify { mu, nu, grid } => cmd_certify(space, *mu, *nu, *grid),
        Job::Collide { alpha, r0, tol, seeds } => cmd_collide(space, *alpha, *r0, *tol, seeds),
    }
}

pub fn cmd_eval(space: &Space, mu: Complex64, radii: &RadiusSpec, method: MethodKind) -> Result<Outcome, Error> {
    let registry = MethodRegistry::with_defaults();
    let method = registry.get(method.as_str())?;
    let mut body = String::from(EVAL_HEADER);
    body.push('\n');
    for r in radii.points() {
        let rep = method.evaluate(space, mu, r)?;
        body.push_str(&format!("{},{},{},{}\n", num(r), num(rep.value.re), num(rep.value.im), num(rep.error_estimate)));
    }
    Ok(Outcome { body, summary: None })
}

#[derive(Serialize)]
struct RegionSample {
    a1: f64,
    mu: JsonComplex,
}

#[derive(Serialize)]
struct RegionAnchors {
    vertex: JsonComplex,
    lower: JsonComplex,
    upper: JsonComplex,
}

#[derive(Serialize)]
struct RegionReport {
    schema: &'static str,
    space: JsonSpace,
    p: f64,
    anchors: RegionAnchors,
    boundary: Vec<RegionSample>,
}

pub fn cmd_region(space: &Space, p: f64, samples: usize, format: RegionFormat) -> Result<Outcome, Error> {
    let boundary = parabola_boundary(space, p, samples)?;
    let anchors = parabola_anchors(space, p)?;
    let body = match format {
        RegionFormat::Csv => {
            let mut s = String::from(REGION_HEADER);
            s.push('\n');
            for b in &boundary {
                s.push_str(&format!("{},{},{}\n", num(b.a1), num(b.mu.re), num(b.mu.im)));
            }
            s
        }
        RegionFormat::Json => {
            let report = RegionReport {
                schema: REGION_SCHEMA,
                space: space.into(),
                p,
                anchors: RegionAnchors {
                    vertex: anchors.vertex.into(),
                    lower: anchors.lower.into(),
                    upper: anchors.upper.into(),
                },
                boundary: boundary.iter().map(|b| RegionSample { a1: b.a1, mu: b.mu.into() }).collect(),
            };
            to_json(&report)
        }
        RegionFormat::Svg => svg::region(space, p, &boundary, &anchors),
    };
    Ok(Outcome { body, summary: None })
}

/// `"inf"` for an unbounded threshold, otherwise the number.
#[derive(Serialize)]
#[serde(untagged)]
enum Threshold {
    Finite(f64),
    Infinite(&'static str),
}

#[derive(Serialize)]
struct CertifyJson {
    schema: &'static str,
    space: JsonSpace,
    mu: JsonComplex,
    nu: JsonComplex,
    #[serde(rename = "T")]
    t: Threshold,
    clipped: bool,
    scan_limit: f64,
    n_grid: usize,
    min_separation: f64,
    argmin_r: f64,
    floor: f64,
    verdict: &'static str,
}

pub fn cmd_certify(space: &Space, mu: Complex64, nu: Complex64, grid: usize) -> Result<Outcome, Error> {
    let rep = certify_one_radius(space, mu, nu, grid)?;
    let t = if rep.threshold.is_finite() { Threshold::Finite(rep.threshold) } else { Threshold::Infinite("inf") };
    let json = CertifyJson {
        schema: CERTIFY_SCHEMA,
        space: space.into(),
        mu: mu.into(),
        nu: nu.into(),
        t,
        clipped: rep.clipped,
        scan_limit: rep.scan_limit,
        n_grid: grid,
        min_separation: rep.scan.min_separation,
        argmin_r: rep.scan.argmin_r,
        floor: rep.floor,
        verdict: rep.verdict.as_str(),
    };
    let summary = format!(
        "{}: min separation {} at r = {} (floor {}) on (0, {}]",
        rep.verdict.as_str(),
        short(rep.scan.min_separation),
        short(rep.scan.argmin_r),
        short(rep.floor),
        short(rep.scan_limit),
    );
    Ok(Outcome { body: to_json(&json), summary: Some(summary) })
}

#[derive(Serialize)]
struct CollisionJson {
    beta: JsonComplex,
    nu: JsonComplex,
    residual: f64,
    newton_residual: f64,
    strip_halfwidth_nu: f64,
}

#[derive(Serialize)]
struct SeedGridJson {
    re: (f64, f64),
    im: (f64, f64),
    n_re: usize,
    n_im: usize,
    conjugate: bool,
}

#[derive(Serialize)]
struct CollideJson {
    schema: &'static str,
    space: JsonSpace,
    alpha: JsonComplex,
    mu: JsonComplex,
    r0: f64,
    tol: f64,
    /// Largest half-width p whose threshold still covers r0.
    certifying_p: f64,
    seeds: SeedGridJson,
    collisions: Vec<CollisionJson>,
    note: Option<String>,
}

pub fn cmd_collide(space: &Space, alpha: Complex64, r0: f64, tol: f64, seeds: &SeedGrid) -> Result<Outcome, Error> {
    let (collisions, note) = match find_collision(space, alpha, r0, seeds, tol) {
        Ok(found) => (found, None),
        Err(e @ Error::NoCollision { .. }) => (Vec::new(), Some(format!("search failure: {e}"))),
        Err(e) => return Err(e),
    };
    let p = certifying_halfwidth(space, r0);
    let json = CollideJson {
        schema: COLLIDE_SCHEMA,
        space: space.into(),
        alpha: alpha.into(),
        mu: radial_eigen::spectral::phi(space, alpha).into(),
        r0,
        tol,
        certifying_p: p,
        seeds: SeedGridJson { re: seeds.re, im: seeds.im, n_re: seeds.n_re, n_im: seeds.n_im, conjugate: seeds.conjugate },
        collisions: collisions
            .iter()
            .map(|c| CollisionJson {
                beta: c.beta.into(),
                nu: c.nu.into(),
                residual: c.residual,
                newton_residual: c.newton_residual,
                strip_halfwidth_nu: strip_halfwidth(space, c.nu),
            })
            .collect(),
        note,
    };
    let summary = match collisions.first() {
        Some(c) => format!(
            "{} collision(s); first beta = {} {} {}i, residual {}",
            collisions.len(),
            short(c.beta.re),
            if c.beta.im < 0.0 { '-' } else { '+' },
            short(c.beta.im.abs()),
            short(c.residual)
        ),
        None => "no collision found".to_string(),
    };
    Ok(Outcome { body: to_json(&json), summary: Some(summary) })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
