//! SVG drawings of motions: one document per frame, or a single document
//! animated with SMIL. Coordinates are fitted into a 512x512 view box;
//! spatial motions are drawn in an oblique projection.

use std::fmt::Write;

use crate::motion::Motion;
use crate::nac::Color;

const SIZE: f64 = 512.0;
const MARGIN: f64 = 32.0;
const RED: &str = "#d62728";
const BLUE: &str = "#1f77b4";
const PLAIN: &str = "#444444";
/// Seconds per full animation cycle.
const CYCLE_SECONDS: f64 = 6.0;

fn project(p: &[f64]) -> (f64, f64) {
    match p {
        [x, y] => (*x, *y),
        [x, y, z] => (x + 0.5 * y, z + 0.3 * y),
        _ => (0.0, 0.0),
    }
}

/// Maps motion coordinates into the view box, flipping y so it points up.
struct Viewport {
    min: (f64, f64),
    scale: f64,
    offset: (f64, f64),
}

impl Viewport {
    fn fit(m: &Motion) -> Viewport {
        let pts = m.frames.iter().flat_map(|f| f.positions.iter().map(|p| project(p)));
        let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
        for (x, y) in pts {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if !lo.0.is_finite() {
            lo = (0.0, 0.0);
            hi = (1.0, 1.0);
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
        let scale = (SIZE - 2.0 * MARGIN) / span;
        let offset = (
            MARGIN + ((SIZE - 2.0 * MARGIN) - (hi.0 - lo.0) * scale) / 2.0,
            MARGIN + ((SIZE - 2.0 * MARGIN) - (hi.1 - lo.1) * scale) / 2.0,
        );
        Viewport { min: lo, scale, offset }
    }

    fn map(&self, p: &[f64]) -> (f64, f64) {
        let (x, y) = project(p);
        (
            self.offset.0 + (x - self.min.0) * self.scale,
            SIZE - (self.offset.1 + (y - self.min.1) * self.scale),
        )
    }
}

fn stroke(m: &Motion, edge: usize) -> &'static str {
    match m.coloring.as_ref().map(|c| c.color(edge)) {
        Some(Color::Red) => RED,
        Some(Color::Blue) => BLUE,
        None => PLAIN,
    }
}

fn header(out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

/// A static drawing of frame `k`.
pub fn frame_svg(m: &Motion, k: usize) -> String {
    let vp = Viewport::fit(m);
    let pos: Vec<(f64, f64)> = m.frames[k].positions.iter().map(|p| vp.map(p)).collect();
    let mut out = String::new();
    header(&mut out);
    for (i, e) in m.graph.edges().iter().enumerate() {
        let (a, b) = (pos[e.u], pos[e.v]);
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}" stroke-width="3"/>"#,
            a.0,
            a.1,
            b.0,
            b.1,
            stroke(m, i)
        );
    }
    for p in &pos {
        let _ = writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="5" fill="black"/>"#, p.0, p.1);
    }
    out.push_str("</svg>\n");
    out
}

/// All frames in one document, looping through the parameter values.
pub fn animated_svg(m: &Motion) -> String {
    let vp = Viewport::fit(m);
    let frames: Vec<Vec<(f64, f64)>> = m
        .frames
        .iter()
        .map(|f| f.positions.iter().map(|p| vp.map(p)).collect())
        .collect();
    let track = |v: usize, coord: fn(&(f64, f64)) -> f64| {
        let mut vals: Vec<String> = frames.iter().map(|f| format!("{:.3}", coord(&f[v]))).collect();
        if let Some(first) = vals.first().cloned() {
            vals.push(first);
        }
        vals.join(";")
    };
    let animate = |attr: &str, values: String| {
        format!(
            r#"<animate attributeName="{attr}" values="{values}" dur="{CYCLE_SECONDS}s" repeatCount="indefinite"/>"#
        )
    };
    let xs: fn(&(f64, f64)) -> f64 = |p| p.0;
    let ys: fn(&(f64, f64)) -> f64 = |p| p.1;
    let mut out = String::new();
    header(&mut out);
    for (i, e) in m.graph.edges().iter().enumerate() {
        let (a, b) = (frames[0][e.u], frames[0][e.v]);
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}" stroke-width="3">"#,
            a.0,
            a.1,
            b.0,
            b.1,
            stroke(m, i)
        );
        for (attr, v, f) in [("x1", e.u, xs), ("y1", e.u, ys), ("x2", e.v, xs), ("y2", e.v, ys)] {
            let _ = writeln!(out, "{}", animate(attr, track(v, f)));
        }
        out.push_str("</line>\n");
    }
    for (v, &p) in frames[0].iter().enumerate() {
        let _ = writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="5" fill="black">"#, p.0, p.1);
        let _ = writeln!(out, "{}", animate("cx", track(v, xs)));
        let _ = writeln!(out, "{}", animate("cy", track(v, ys)));
        out.push_str("</circle>\n");
    }
    out.push_str("</svg>\n");
    out
}
