//! Value parsers for complex numbers and r-ranges.

use num_complex::Complex64;

/// Accepts `3`, `-1.5`, `2i`, `-i`, `1+2i`, `1-0.5i`, `1e-3+2e1i` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    if let Some((re, im)) = t.split_once(',') {
        let re = parse_real(re)?;
        let im = parse_real(im)?;
        return Ok(Complex64::new(re, im));
    }
    let Some(body) = t.strip_suffix('i') else {
        return parse_real(t).map(|re| Complex64::new(re, 0.0));
    };
    // Split at the last sign that is not part of an exponent.
    let bytes = body.as_bytes();
    let mut split = None;
    for j in (1..bytes.len()).rev() {
        if (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E') {
            split = Some(j);
            break;
        }
    }
    let (re, im) = match split {
        Some(j) => (parse_real(&body[..j])?, imag_part(&body[j..])?),
        None => (0.0, imag_part(body)?),
    };
    Ok(Complex64::new(re, im))
}

fn imag_part(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s),
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("cannot parse `{s}` as a number"))?;
    if !v.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(v)
}

/// Radii to evaluate: a single value or `start:stop:count`.
#[derive(Debug, Clone, PartialEq)]
pub enum RadiusSpec {
    Single(f64),
    Range { start: f64, stop: f64, count: usize },
}

impl RadiusSpec {
    pub fn points(&self) -> Vec<f64> {
        match *self {
            RadiusSpec::Single(r) => vec![r],
            RadiusSpec::Range { start, stop, count } => {
                let mut pts: Vec<f64> = (0..count)
                    .map(|j| start + (stop - start) * j as f64 / (count - 1) as f64)
                    .collect();
                pts[count - 1] = stop;
                pts
            }
        }
    }
}

pub fn parse_radius(s: &str) -> Result<RadiusSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [r] => {
            let r = parse_real(r)?;
            if r < 0.0 {
                return Err(format!("radius {r} must be >= 0"));
            }
            Ok(RadiusSpec::Single(r))
        }
        [a, b, n] => {
            let start = parse_real(a)?;
            let stop = parse_real(b)?;
            let count: usize = n.trim().parse().map_err(|_| format!("cannot parse `{n}` as a point count"))?;
            if start < 0.0 {
                return Err(format!("range start {start} must be >= 0"));
            }
            if !(stop > start) {
                return Err(format!("range `{s}` must be increasing"));
            }
            if count < 2 {
                return Err(format!("range `{s}` needs at least 2 points"));
            }
            Ok(RadiusSpec::Range { start, stop, count })
        }
        _ => Err(format!("expected `r` or `start:stop:count`, got `{s}`")),
    }
}
