//! Schematic of the parabolic region in the μ-plane.

use std::fmt::Write;

use radial_eigen::spectral::{BoundarySample, ParabolaAnchors};
use radial_eigen::Space;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const PAD: f64 = 48.0;

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        PAD + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2.0 * PAD)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - PAD - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2.0 * PAD)
    }
}

/// Up to 6 significant digits, trailing zeros dropped.
fn label(x: f64) -> String {
    let digits = (5 - x.abs().log10().floor().max(-6.0) as i32).clamp(0, 12) as usize;
    let s = format!("{x:.digits$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" { "0".into() } else { s }
}

pub fn region(space: &Space, p: f64, boundary: &[BoundarySample], anchors: &ParabolaAnchors) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for b in boundary {
        x0 = x0.min(b.mu.re);
        x1 = x1.max(b.mu.re);
        y0 = y0.min(b.mu.im);
        y1 = y1.max(b.mu.im);
    }
    let mx = 0.08 * (x1 - x0);
    let my = 0.08 * (y1 - y0);
    let f = Frame { x0: x0 - mx, x1: x1 + mx, y0: y0 - my, y1: y1 + my };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(s, "<metadata>radial-eigen/region/v1 k={} rho={} p={}</metadata>", space.k(), space.rho(), p);
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);

    let pts: Vec<String> = boundary.iter().map(|b| format!("{:.2},{:.2}", f.px(b.mu.re), f.py(b.mu.im))).collect();
    let pts = pts.join(" ");
    let _ = writeln!(s, r##"<polygon points="{pts}" fill="#cfe0f3" stroke="none"/>"##);

    let (ax, ay) = (f.px(0.0), f.py(0.0));
    let _ = writeln!(s, r##"<g stroke="#555" stroke-width="1">"##);
    let _ = writeln!(s, r#"<line x1="{PAD}" y1="{ay:.2}" x2="{:.2}" y2="{ay:.2}"/>"#, WIDTH - PAD);
    let _ = writeln!(s, r#"<line x1="{ax:.2}" y1="{:.2}" x2="{ax:.2}" y2="{PAD}"/>"#, HEIGHT - PAD);
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">Re μ</text>"#, WIDTH - PAD - 30.0, ay - 6.0);
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">Im μ</text>"#, ax + 6.0, PAD - 8.0);

    let _ = writeln!(s, r##"<polyline points="{pts}" fill="none" stroke="#1f4e8c" stroke-width="2"/>"##);

    let marks = [
        ("vertex", anchors.vertex, label(anchors.vertex.re)),
        ("upper", anchors.upper, format!("{}i", label(anchors.upper.im))),
        ("lower", anchors.lower, format!("{}i", label(anchors.lower.im))),
    ];
    for (id, z, text) in marks {
        let (cx, cy) = (f.px(z.re), f.py(z.im));
        let _ = writeln!(s, r##"<circle id="{id}" cx="{cx:.2}" cy="{cy:.2}" r="4" fill="#c0392b"/>"##);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{text}</text>"#, cx + 7.0, cy - 7.0);
    }
    let _ = writeln!(
        s,
        r#"<text x="{PAD}" y="24">Ω(p): k = {}, ρ = {}, p = {}</text>"#,
        space.k(),
        label(space.rho()),
        label(p)
    );
    s.push_str("</svg>\n");
    s
}
