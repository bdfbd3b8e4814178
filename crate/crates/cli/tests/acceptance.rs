//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Random cases use fixed ChaCha seeds.

use std::f64::consts::PI;
use std::process::{Command, ExitCode, Stdio};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use radial_eigen::eigen::{eval_kernel, eval_ode, eval_series, series};
use radial_eigen::geometry::{cayley, omega, BallPoint};
use radial_eigen::one_radius::{certify_one_radius, find_collision, SeedGrid, Verdict};
use radial_eigen::radialization::{mc_radialize, ode_residual, radialize, RadializationRequest, DEFAULT_ORDER};
use radial_eigen::spectral::{
    axis_crossing_offset, certifying_halfwidth, in_parabola, parabola_boundary, phi, phi_inverse, strip_halfwidth,
};
use radial_eigen::Space;

const BIN: &str = env!("CARGO_BIN_EXE_radial-eigen");

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut g = rng(1);
    let mut worst = 0.0f64;
    for i in 0..200 {
        let k = 1 + (i % 3) as u32;
        let kf = k as f64;
        let space = Space::new(k, g.gen_range(0.5..2.0)).unwrap();
        let alpha = c(g.gen_range(-2.0..kf + 2.0), g.gen_range(-3.0..3.0));
        let eta = g.gen_range(0.0..=0.95) * space.rho();
        let req = RadializationRequest::new(space, alpha, eta, DEFAULT_ORDER).unwrap();
        let a = radialize(&req).unwrap();
        let b = radialize(&req.with_alpha(kf - alpha)).unwrap();
        worst = worst.max((a - b).norm() / (1.0 + a.norm()));
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: worst < 1e-10 && secs < 30.0,
        detail: format!("max scaled |V_a - V_(k-a)| = {worst:.2e} (< 1e-10), 200 cases in {secs:.2} s (< 30 s)"),
    }
}

fn criterion_2() -> Outcome {
    let mut g = rng(2);
    let mut worst = 0.0f64;
    let mut fails = 0;
    for k in 1..=3u32 {
        let kf = k as f64;
        for j in 0..20 {
            let space = Space::new(k, g.gen_range(0.5..2.0)).unwrap();
            let alpha = c(g.gen_range(-1.0..kf + 1.0), g.gen_range(-2.0..2.0));
            let eta = g.gen_range(0.0..0.8) * space.rho();
            let req = RadializationRequest::new(space, alpha, eta, DEFAULT_ORDER).unwrap();
            let quad = radialize(&req).unwrap();
            let mc = mc_radialize(&req, 1_000_000, 1000 + 20 * k as u64 + j).unwrap();
            let z = if mc.standard_error > 0.0 { (quad - mc.estimate).norm() / mc.standard_error } else { 0.0 };
            worst = worst.max(z);
            if z > 3.0 {
                fails += 1;
            }
        }
    }
    Outcome {
        pass: fails == 0,
        detail: format!("60 cases at 1e6 samples, worst |quad - mc| = {worst:.2} standard errors (<= 3), {fails} outside"),
    }
}

fn criterion_3() -> Outcome {
    let mut g = rng(3);
    let mut worst = 0.0f64;
    let mut series_cases = 0;
    for i in 0..100 {
        let k = 1 + (i % 3) as u32;
        let space = Space::new(k, 1.0).unwrap();
        let radius = 10.0 * g.gen::<f64>().sqrt();
        let angle = g.gen_range(-PI..PI);
        let mu = Complex64::from_polar(radius, angle);
        let r = g.gen_range(0.0..=5.0);
        let kernel = eval_kernel(&space, mu, r).unwrap();
        let ode = eval_ode(&space, mu, r).unwrap().value;
        let scale = kernel.norm().max(1.0);
        let mut d = (kernel - ode).norm() / scale;
        if r <= series::VALIDATED_RADIUS * space.rho() {
            series_cases += 1;
            let s = eval_series(&space, mu, r, series::MAX_ORDER).unwrap().value;
            d = d.max((s - kernel).norm() / scale).max((s - ode).norm() / scale);
        }
        worst = worst.max(d);
    }
    Outcome {
        pass: worst < 1e-7,
        detail: format!(
            "100 cases, max pairwise difference / max(1, |phi|) = {worst:.2e} (< 1e-7); series in {series_cases} cases with r <= rho"
        ),
    }
}

fn criterion_4() -> Outcome {
    let mut g = rng(4);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let k = 1 + (i % 3) as u32;
        let space = Space::new(k, 1.0).unwrap();
        // The stencil's own h²·φ''''/12 term passes 1e-5 once |μ| nears 10.
        let radius = 2.0 * g.gen::<f64>().sqrt();
        let mu = Complex64::from_polar(radius, g.gen_range(-PI..PI));
        let r = g.gen_range(0.1..=3.0);
        let (alpha, _) = phi_inverse(&space, mu);
        let res = ode_residual(&space, alpha, r, 1e-3).unwrap();
        worst = worst.max(res.norm());
    }
    Outcome {
        pass: worst < 1e-5,
        detail: format!("50 cases, |mu| <= 2, r in [0.1, 3]: max |central-difference residual| = {worst:.2e} at h = 1e-3 (< 1e-5)"),
    }
}

fn criterion_5() -> Outcome {
    let mut worst = 0.0f64;
    for (k, rho, p) in [(2u32, 1.0, 1.0), (3, 2.0, 0.5)] {
        let space = Space::new(k, rho).unwrap();
        let kappa = -1.0 / (rho * rho);
        let kf = k as f64;
        let vertex = c(-kappa * (kf * kf / 4.0 + p * p), 0.0);
        let crossing = 2.0 * kappa * p * (p * p + kf * kf / 4.0).sqrt();
        let n = 401;
        let samples = parabola_boundary(&space, p, n).unwrap();
        let off = axis_crossing_offset(&space, p);
        // a₁ = 0 and a₁ = ∓offset sit at these indices when n = 4m + 1.
        for (idx, a1, want) in [(n / 2, 0.0, vertex), (n / 4, -off, c(0.0, -crossing)), (3 * n / 4, off, c(0.0, crossing))] {
            let s = samples[idx];
            worst = worst.max((s.a1 - a1).abs());
            worst = worst.max((s.mu - want).norm() / want.norm().max(1.0));
        }
    }
    Outcome {
        pass: worst < 1e-12,
        detail: format!("vertex and axis crossings for (2,1,1), (3,2,0.5): max error {worst:.2e} (< 1e-12)"),
    }
}

fn criterion_6() -> Outcome {
    let mut g = rng(6);
    let mut mismatches = 0;
    let mut near = 0;
    for i in 0..10_000 {
        let k = 1 + (i % 3) as u32;
        let space = Space::new(k, g.gen_range(0.5..2.0)).unwrap();
        let p = 5.0 * (1.0 - g.gen::<f64>());
        let mu = c(g.gen_range(-40.0..40.0), g.gen_range(-40.0..40.0));
        let hw = strip_halfwidth(&space, mu);
        if in_parabola(&space, mu, p).unwrap() != (hw <= p) {
            if (hw - p).abs() > 1e-12 * p.max(1.0) {
                mismatches += 1;
            } else {
                near += 1;
            }
        }
    }
    Outcome {
        pass: mismatches == 0,
        detail: format!("10^4 points: {mismatches} mismatches beyond slack, {near} within it"),
    }
}

fn criterion_7() -> Outcome {
    let space = Space::new(2, 1.0).unwrap();
    let mut g = rng(7);
    let draw = |g: &mut ChaCha8Rng| loop {
        let a = c(1.0 + g.gen_range(-3.0..3.0), g.gen_range(-1.0..1.0));
        let mu = phi(&space, a);
        if in_parabola(&space, mu, 1.0).unwrap() {
            return mu;
        }
    };
    let mut passes = 0;
    let mut failures = Vec::new();
    let mut tightest = f64::INFINITY;
    for _ in 0..20 {
        let mu = draw(&mut g);
        let nu = draw(&mut g);
        let rep = certify_one_radius(&space, mu, nu, 200).unwrap();
        let covers = rep.scan_limit >= PI / 2.0 * (1.0 - 1e-12);
        tightest = tightest.min(rep.scan.min_separation / rep.floor);
        if rep.verdict == Verdict::Pass && covers {
            passes += 1;
        } else {
            failures.push(format!("mu={mu:.3} nu={nu:.3} min={:.2e} floor={:.2e}", rep.scan.min_separation, rep.floor));
        }
    }
    let mut detail = format!("{passes}/20 pairs PASS on (0, T] with T >= pi/2; smallest separation/floor ratio {tightest:.2}");
    if !failures.is_empty() {
        detail.push_str(&format!("; not certified: {}", failures.join("; ")));
    }
    Outcome { pass: passes == 20, detail }
}

fn criterion_8() -> Outcome {
    let mut g = rng(8);
    let mut passes = 0;
    let mut tightest = f64::INFINITY;
    for i in 0..10 {
        let k = 1 + (i % 3) as u32;
        let space = Space::new(k, 1.0).unwrap();
        let edge = (k * k) as f64 / 4.0;
        let mu = c(edge - g.gen_range(0.0..10.0), 0.0);
        let nu = c(edge - g.gen_range(0.0..10.0), 0.0);
        let rep = certify_one_radius(&space, mu, nu, 200).unwrap();
        tightest = tightest.min(rep.scan.min_separation / rep.floor);
        if rep.verdict == Verdict::Pass && rep.clipped && rep.scan_limit == 20.0 {
            passes += 1;
        }
    }
    Outcome {
        pass: passes == 10,
        detail: format!("{passes}/10 real pairs PASS on (0, 20 rho]; smallest separation/floor ratio {tightest:.2}"),
    }
}

fn criterion_9() -> Outcome {
    let space = Space::new(2, 1.0).unwrap();
    let alpha = c(1.0, 0.0);
    let p = certifying_halfwidth(&space, 1.0);
    match find_collision(&space, alpha, 1.0, &SeedGrid::default_for(&space, 1.0), 1e-10) {
        Ok(found) => {
            let good: Vec<_> = found
                .iter()
                .filter(|col| col.residual < 1e-9 && strip_halfwidth(&space, col.nu) > p)
                .collect();
            let first = found[0];
            Outcome {
                pass: !good.is_empty() && good.len() == found.len(),
                detail: format!(
                    "{} collisions, {} verified with residual < 1e-9 and nu outside Omega({p:.4}); e.g. beta = {:.6}",
                    found.len(),
                    good.len(),
                    first.beta
                ),
            }
        }
        Err(e) => Outcome { pass: false, detail: format!("search failed: {e}") },
    }
}

fn criterion_10() -> Outcome {
    let mut g = rng(10);
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let k = 1 + (i % 3) as u32;
        let space = Space::new(k, g.gen_range(0.5..2.0)).unwrap();
        let dir: Vec<f64> = (0..space.dim()).map(|_| g.sample::<f64, _>(StandardNormal)).collect();
        let n = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
        let eta = g.gen_range(0.0..0.999) * space.rho();
        let m = BallPoint::new(&space, dir.iter().map(|x| x * eta / n).collect()).unwrap();
        let t = cayley(&space, &m).unwrap().t;
        let w = omega(&space, &space.pole(), &m).unwrap();
        worst = worst.max((t - w).abs() / w.abs());
    }
    Outcome {
        pass: worst < 1e-12,
        detail: format!("1000 interior points, max |t - omega(u0, m)| / omega = {worst:.2e} (< 1e-12)"),
    }
}

fn run_twice(args: &[&str]) -> Result<bool, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.json"));
        let status = Command::new(BIN)
            .args(args)
            .arg("--output")
            .arg(&path)
            .stderr(Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("{args:?} exited with {status}"));
        }
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    Ok(outputs[0] == outputs[1] && !outputs[0].is_empty())
}

fn criterion_11() -> Outcome {
    let certify = run_twice(&["certify", "--k", "2", "--rho", "1", "--mu", "2", "--nu", "1"]);
    let collide = run_twice(&["collide", "--k", "2", "--rho", "1", "--alpha", "1", "--r0", "1"]);
    match (certify, collide) {
        (Ok(a), Ok(b)) => Outcome {
            pass: a && b,
            detail: format!("certify identical: {a}, collide identical: {b}"),
        },
        (a, b) => Outcome { pass: false, detail: format!("certify: {a:?}, collide: {b:?}") },
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("exponent reflection symmetry", criterion_1),
        ("radialization vs Monte-Carlo", criterion_2),
        ("three-route agreement", criterion_3),
        ("eigen-equation residual", criterion_4),
        ("parabola anchors", criterion_5),
        ("region equivalence", criterion_6),
        ("one-radius certification", criterion_7),
        ("real-ray certification", criterion_8),
        ("non-uniqueness collision", criterion_9),
        ("Cayley identity", criterion_10),
        ("CLI determinism", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {name}: {} [{:.2} s]", i + 1, out.detail, start.elapsed().as_secs_f64());
        if !out.pass {
            failed += 1;
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
