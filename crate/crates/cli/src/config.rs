//! Command-line arguments and their validation into a [`JobConfig`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use radial_eigen::eigen::MethodKind;
use radial_eigen::one_radius::{SeedGrid, MIN_COLLISION_TOL};
use radial_eigen::Space;

use crate::parse::{parse_complex, parse_radius, RadiusSpec};

#[derive(Debug, Parser)]
#[command(name = "radial-eigen", version, about = "Radial eigenfunctions of the hyperbolic Laplacian")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Sphere dimension; the space is H^{k+1}.
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    /// Curvature radius (curvature -1/rho²).
    #[arg(long, default_value_t = 1.0)]
    pub rho: f64,
    /// Output file; relative paths go under $RADIAL_EIGEN_OUT_DIR if set. Stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate φ_μ(r) as CSV.
    Eval(EvalArgs),
    /// Boundary of the parabolic region for half-width p.
    Region(RegionArgs),
    /// Check that φ_μ and φ_ν stay apart below the threshold radius.
    Certify(CertifyArgs),
    /// Search for exponents β whose sphere averages match α's at r0.
    Collide(CollideArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub mu: Complex64,
    /// A radius or start:stop:count.
    #[arg(long)]
    pub r: String,
    #[arg(long, default_value = "reconciled")]
    pub method: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub p: f64,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = RegionFormat::Svg)]
    pub format: RegionFormat,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub mu: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub nu: Complex64,
    /// Scan grid size.
    #[arg(long, default_value_t = 200)]
    pub grid: usize,
}

#[derive(Debug, Args)]
pub struct CollideArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Complex64,
    #[arg(long, allow_hyphen_values = true)]
    pub r0: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Seed rectangle; defaults cover the band just outside the uniqueness strip.
    #[arg(long, allow_hyphen_values = true)]
    pub re_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub re_max: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub im_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub im_max: Option<f64>,
    #[arg(long)]
    pub n_re: Option<usize>,
    #[arg(long)]
    pub n_im: Option<usize>,
    /// Skip the mirrored seed band.
    #[arg(long)]
    pub no_conjugate: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Job {
    Eval { mu: Complex64, radii: RadiusSpec, method: MethodKind },
    Region { p: f64, samples: usize, format: RegionFormat },
    Certify { mu: Complex64, nu: Complex64, grid: usize },
    Collide { alpha: Complex64, r0: f64, tol: f64, seeds: SeedGrid },
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub space: Space,
    pub job: Job,
    pub output: Option<PathBuf>,
}

fn space_of(args: &CommonArgs) -> Result<Space, String> {
    Space::new(args.k, args.rho).map_err(|e| e.to_string())
}

impl TryFrom<Command> for JobConfig {
    type Error = String;

    fn try_from(cmd: Command) -> Result<Self, String> {
        let (common, job) = match cmd {
            Command::Eval(a) => {
                let radii = parse_radius(&a.r)?;
                let method: MethodKind = a.method.parse().map_err(|e: radial_eigen::Error| e.to_string())?;
                (a.common, Job::Eval { mu: a.mu, radii, method })
            }
            Command::Region(a) => {
                if !(a.p > 0.0) || !a.p.is_finite() {
                    return Err(format!("p = {} must be positive", a.p));
                }
                if a.samples < 3 {
                    return Err(format!("need at least 3 samples, got {}", a.samples));
                }
                (a.common, Job::Region { p: a.p, samples: a.samples, format: a.format })
            }
            Command::Certify(a) => {
                if a.mu == a.nu {
                    return Err(format!("mu and nu must differ (both {})", a.mu));
                }
                if a.grid < 2 {
                    return Err(format!("grid needs at least 2 points, got {}", a.grid));
                }
                (a.common, Job::Certify { mu: a.mu, nu: a.nu, grid: a.grid })
            }
            Command::Collide(a) => {
                if !(a.r0 > 0.0) || !a.r0.is_finite() {
                    return Err(format!("r0 = {} must be positive", a.r0));
                }
                if !(a.tol >= MIN_COLLISION_TOL) || !a.tol.is_finite() {
                    return Err(format!("tol = {} must be at least {MIN_COLLISION_TOL}", a.tol));
                }
                let space = space_of(&a.common)?;
                let d = SeedGrid::default_for(&space, a.r0);
                let seeds = SeedGrid {
                    re: (a.re_min.unwrap_or(d.re.0), a.re_max.unwrap_or(d.re.1)),
                    im: (a.im_min.unwrap_or(d.im.0), a.im_max.unwrap_or(d.im.1)),
                    n_re: a.n_re.unwrap_or(d.n_re),
                    n_im: a.n_im.unwrap_or(d.n_im),
                    conjugate: !a.no_conjugate,
                };
                let finite = [seeds.re.0, seeds.re.1, seeds.im.0, seeds.im.1].iter().all(|v| v.is_finite());
                if !finite || seeds.re.0 > seeds.re.1 || seeds.im.0 > seeds.im.1 {
                    return Err("seed rectangle bounds must be finite and ordered".into());
                }
                if seeds.n_re == 0 || seeds.n_im == 0 {
                    return Err("seed grid needs at least one node per axis".into());
                }
                (a.common, Job::Collide { alpha: a.alpha, r0: a.r0, tol: a.tol, seeds })
            }
        };
        Ok(JobConfig { space: space_of(&common)?, job, output: common.output })
    }
}
