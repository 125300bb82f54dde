use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::RunConfig;
use crate::geometry::CurveSample;

/// Version tag of the JSON layout.
pub const SCHEMA: &str = "shifted-hyp/report/v1";

/// Top-level JSON document of every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: String,
    pub tool_version: String,
    pub config: RunConfig,
    pub pass: bool,
    pub report: T,
    /// `(phase, milliseconds)`, present only with `--timing`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<Vec<(String, f64)>>,
}

pub(crate) fn json<T: Serialize>(cfg: &RunConfig, report: &T, pass: bool, timing: Vec<(String, f64)>) -> String {
    let env = Envelope {
        schema: SCHEMA.into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        config: cfg.clone(),
        pass,
        report,
        timing_ms: cfg.timing.then_some(timing),
    };
    let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
    s.push('\n');
    s
}

const SIZE: f64 = 640.0;

/// Square world window `[x0, x0 + span] x [y0, y0 + span]`.
struct Window {
    x0: f64,
    y0: f64,
    span: f64,
}

impl Window {
    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.x0) / self.span * SIZE, (self.y0 + self.span - y) / self.span * SIZE)
    }

    fn point(&self, x: f64, y: f64) -> String {
        let (u, v) = self.px(x, y);
        format!("{u:.3},{v:.3}")
    }
}

/// The closed image curve, the sector with apex `B` and the asymptotic line
/// `y = tan(πδ/2)(x - B)`.
pub fn svg_figure(curve: &CurveSample) -> String {
    let apex = curve.b_const;
    let phi = std::f64::consts::FRAC_PI_2 * curve.params.delta;
    // frame the bulk of the curve; the ends near θ = 0 run off to infinity
    let bulk: Vec<(f64, f64)> = (0..curve.len()).filter(|&i| curve.theta[i] >= 0.2).map(|i| (curve.x[i], curve.y[i])).collect();
    let mut xs: Vec<f64> = bulk.iter().map(|p| p.0).chain([apex, 0.0]).collect();
    let mut ys: Vec<f64> = bulk.iter().flat_map(|p| [p.1, -p.1]).chain([0.0]).collect();
    xs.retain(|v| v.is_finite());
    ys.retain(|v| v.is_finite());
    let (xl, xh) = xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
    let (yl, yh) = ys.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
    let span = ((xh - xl).max(yh - yl) * 1.3).max(1e-6);
    let w = Window { x0: (xl + xh - span) / 2.0, y0: (yl + yh - span) / 2.0, span };

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    // axes
    let (ax0, ay) = w.px(w.x0, 0.0);
    let (ax1, _) = w.px(w.x0 + span, 0.0);
    let (axx, ay0) = w.px(0.0, w.y0 + span);
    let (_, ay1) = w.px(0.0, w.y0);
    let _ = writeln!(s, r##"<line x1="{ax0:.3}" y1="{ay:.3}" x2="{ax1:.3}" y2="{ay:.3}" stroke="#bbb"/>"##);
    let _ = writeln!(s, r##"<line x1="{axx:.3}" y1="{ay0:.3}" x2="{axx:.3}" y2="{ay1:.3}" stroke="#bbb"/>"##);
    // asymptotic line through the apex, both directions
    let reach = 4.0 * span;
    let (lx0, ly0) = w.px(apex - reach * phi.cos(), -reach * phi.sin());
    let (lx1, ly1) = w.px(apex + reach * phi.cos(), reach * phi.sin());
    let _ = writeln!(
        s,
        r##"<line x1="{lx0:.3}" y1="{ly0:.3}" x2="{lx1:.3}" y2="{ly1:.3}" stroke="#d62728" stroke-dasharray="6,4"/>"##
    );
    // sector rays
    for sign in [1.0, -1.0] {
        let (rx, ry) = w.px(apex + reach * phi.cos(), sign * reach * phi.sin());
        let (bx, by) = w.px(apex, 0.0);
        let _ = writeln!(s, r##"<line x1="{bx:.3}" y1="{by:.3}" x2="{rx:.3}" y2="{ry:.3}" stroke="#2ca02c"/>"##);
    }
    // the curve: upper half from θ = θ_min to π, then its mirror image back
    let upper: Vec<String> = (0..curve.len()).map(|i| w.point(curve.x[i], curve.y[i])).collect();
    let lower: Vec<String> = (0..curve.len()).rev().map(|i| w.point(curve.x[i], -curve.y[i])).collect();
    let _ = writeln!(
        s,
        r##"<polyline fill="none" stroke="#1f77b4" stroke-width="1.5" points="{} {}"/>"##,
        upper.join(" "),
        lower.join(" ")
    );
    let (bx, by) = w.px(apex, 0.0);
    let _ = writeln!(s, r##"<circle cx="{bx:.3}" cy="{by:.3}" r="3" fill="#2ca02c"/>"##);
    let _ = writeln!(
        s,
        r##"<text x="8" y="20" font-family="sans-serif" font-size="13">a={} b={} c={}  B={:.6}  delta={}</text>"##,
        curve.params.a, curve.params.b, curve.params.c, apex, curve.params.delta
    );
    s.push_str("</svg>\n");
    s
}

/// Right-aligned numeric table with a header row.
pub(crate) fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            width[i] = width[i].max(c.len());
        }
    }
    let mut s = String::new();
    let line = |cells: Vec<&str>, s: &mut String| {
        let parts: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{c:>w$}", w = width[i])).collect();
        let _ = writeln!(s, "  {}", parts.join("  "));
    };
    line(header.to_vec(), &mut s);
    for r in rows {
        line(r.iter().map(String::as_str).collect(), &mut s);
    }
    s
}

pub(crate) fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
