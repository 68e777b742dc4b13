//! Deterministic SVG plot of a one-dimensional interpolation.
//!
//! Left panel: A1, A*, A2. Right panel: B1, B2 and the conclusion drawn as
//! the raw polyline through (y1,0) (y2,1) (y3,1) (y4,0), so an inverted
//! conclusion shows as a crossing.

use std::fmt::Write as _;

use crate::fuzzy::TrapezoidSet;
use crate::kh::{ConclusionPoints, Observation, Rule};
use crate::render::format_number;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 300.0;
const MARGIN: f64 = 30.0;
const PANEL_WIDTH: f64 = WIDTH / 2.0;

struct Panel {
    left: f64,
    lo: f64,
    hi: f64,
}

impl Panel {
    fn new(index: usize, xs: impl Iterator<Item = f64>) -> Self {
        let (mut lo, mut hi) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
        if hi - lo < 1e-9 {
            lo -= 1.0;
            hi += 1.0;
        }
        let pad = (hi - lo) * 0.05;
        Panel {
            left: index as f64 * PANEL_WIDTH,
            lo: lo - pad,
            hi: hi + pad,
        }
    }

    fn x(&self, v: f64) -> f64 {
        self.left + MARGIN + (v - self.lo) / (self.hi - self.lo) * (PANEL_WIDTH - 2.0 * MARGIN)
    }

    fn y(&self, grade: f64) -> f64 {
        HEIGHT - MARGIN - grade * (HEIGHT - 2.0 * MARGIN)
    }
}

fn coord(v: f64) -> String {
    format_number(v, 2)
}

fn polyline(out: &mut String, panel: &Panel, pts: &[(f64, f64)], stroke: &str, dashed: bool, label: &str) {
    let path: Vec<String> = pts
        .iter()
        .map(|&(x, g)| format!("{},{}", coord(panel.x(x)), coord(panel.y(g))))
        .collect();
    let dash = if dashed { " stroke-dasharray=\"6 3\"" } else { "" };
    let _ = writeln!(
        out,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"2\"{dash}><title>{label}</title></polyline>",
        path.join(" ")
    );
    let (x, _) = pts[1];
    let _ = writeln!(
        out,
        "  <text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"{stroke}\" text-anchor=\"middle\">{label}</text>",
        coord(panel.x(x)),
        coord(panel.y(1.0) - 6.0)
    );
}

fn trapezoid(s: &TrapezoidSet) -> Vec<(f64, f64)> {
    let p = s.points();
    vec![(p[0], 0.0), (p[1], 1.0), (p[2], 1.0), (p[3], 0.0)]
}

fn axes(out: &mut String, panel: &Panel, title: &str) {
    let y0 = coord(panel.y(0.0));
    let _ = writeln!(
        out,
        "  <line x1=\"{}\" y1=\"{y0}\" x2=\"{}\" y2=\"{y0}\" stroke=\"#444\"/>",
        coord(panel.left + MARGIN),
        coord(panel.left + PANEL_WIDTH - MARGIN)
    );
    for v in [panel.lo, panel.hi] {
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\">{}</text>",
            coord(panel.x(v)),
            coord(panel.y(0.0) + 14.0),
            format_number(v, 2)
        );
    }
    let _ = writeln!(
        out,
        "  <text x=\"{}\" y=\"16\" font-size=\"13\" text-anchor=\"middle\">{title}</text>",
        coord(panel.left + PANEL_WIDTH / 2.0)
    );
}

/// Renders the plot. Only the first antecedent dimension is drawn.
pub fn render_svg(lower: &Rule, upper: &Rule, obs: &Observation, conclusion: &ConclusionPoints) -> String {
    let a1 = &lower.antecedents()[0];
    let a2 = &upper.antecedents()[0];
    let astar = &obs.sets()[0];
    let b1 = lower.consequent();
    let b2 = upper.consequent();

    let left = Panel::new(0, [a1, astar, a2].iter().flat_map(|s| s.points()));
    let right = Panel::new(1, b1.points().into_iter().chain(b2.points()).chain(conclusion.0));

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = WIDTH,
        h = HEIGHT
    );
    let _ = writeln!(out, "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");
    axes(&mut out, &left, "antecedents");
    axes(&mut out, &right, "consequents");
    polyline(&mut out, &left, &trapezoid(a1), "#1f77b4", false, "A1");
    polyline(&mut out, &left, &trapezoid(a2), "#2ca02c", false, "A2");
    polyline(&mut out, &left, &trapezoid(astar), "#d62728", true, "A*");
    polyline(&mut out, &right, &trapezoid(b1), "#1f77b4", false, "B1");
    polyline(&mut out, &right, &trapezoid(b2), "#2ca02c", false, "B2");
    let y = conclusion.0;
    let raw = [(y[0], 0.0), (y[1], 1.0), (y[2], 1.0), (y[3], 0.0)];
    polyline(&mut out, &right, &raw, "#d62728", true, "B*");
    out.push_str("</svg>\n");
    out
}
