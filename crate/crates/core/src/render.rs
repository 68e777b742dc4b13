//! Text rendering of numbers and reports.
//!
//! Displayed numbers are rounded half-to-even at a fixed number of decimals
//! (4 by default) with trailing zeros trimmed, so `6.80` prints as `6.8`.
//! CSV output keeps full `f64` precision.

use std::fmt::Write as _;

use rust_decimal::prelude::FromPrimitive;
use rust_decimal::{Decimal, RoundingStrategy};

use crate::benchmark::{BenchmarkReport, CaseReport, Check, CheckValue};
use crate::cnf::{NormalityReport, SegmentReport, Verdict};
use crate::kh::{Conclusion, ConclusionPoints};

pub const DEFAULT_DECIMALS: u32 = 4;

/// Formats `v` rounded half-to-even at `decimals` places, trailing zeros
/// trimmed. Negative zero prints as `0`.
pub fn format_number(v: f64, decimals: u32) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    match Decimal::from_f64(v) {
        Some(d) => {
            let r = d
                .round_dp_with_strategy(decimals, RoundingStrategy::MidpointNearestEven)
                .normalize();
            if r.is_zero() {
                "0".to_owned()
            } else {
                r.to_string()
            }
        }
        // Outside Decimal's range; fall back to plain formatting.
        None => format!("{v:.*}", decimals as usize),
    }
}

pub fn format_points(p: &[f64], decimals: u32) -> String {
    let parts: Vec<String> = p.iter().map(|v| format_number(*v, decimals)).collect();
    format!("[{}]", parts.join(" "))
}

fn format_option(v: Option<f64>, decimals: u32) -> String {
    v.map_or_else(|| "undefined".to_owned(), |v| format_number(v, decimals))
}

/// `LTB: GENERAL, 30.15 > 6.8, PROBLEM`
pub fn length_line(s: &SegmentReport, decimals: u32) -> String {
    let l = &s.length;
    let rel = if l.verdict == Verdict::Normal { "<=" } else { ">" };
    format!(
        "{}: {}, {} {} {}, {}",
        s.segment.label(),
        l.path.label(),
        format_number(l.length1, decimals),
        rel,
        format_number(l.length2, decimals),
        l.verdict.label()
    )
}

/// `The length (Core) is (PROBLEM)`
pub fn verdict_line(s: &SegmentReport) -> String {
    format!("The length ({}) is ({})", s.segment.label(), s.length.verdict.label())
}

pub fn ratio_line(s: &SegmentReport, decimals: u32) -> String {
    let r = &s.ratio;
    format!(
        "{} ratios: {}, {} ({})",
        s.segment.label(),
        format_option(r.ratio1, decimals),
        format_option(r.ratio2, decimals),
        r.verdict.label()
    )
}

pub fn conclusion_shape(points: &ConclusionPoints, decimals: u32) -> String {
    match crate::kh::assemble_conclusion(points) {
        Conclusion::Normal(set) => format!("normal trapezoid {}", format_points(&set.points(), decimals)),
        Conclusion::Abnormal(_) => "ABNORMAL".to_owned(),
    }
}

/// Full diagnostics for one conclusion.
pub fn normality_report(report: &NormalityReport, decimals: u32) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "points: {}", format_points(&report.points.0, decimals));
    let _ = writeln!(out, "shape: {}", conclusion_shape(&report.points, decimals));
    for s in &report.segments {
        let _ = writeln!(out, "{}", length_line(s, decimals));
    }
    for s in &report.segments {
        let _ = writeln!(out, "{}", ratio_line(s, decimals));
    }
    for s in &report.segments {
        let _ = writeln!(out, "{}", verdict_line(s));
    }
    let tag = if report.cases.is_empty() { "-".to_owned() } else { report.cases.to_string() };
    let _ = writeln!(out, "cases: {tag}");
    for s in &report.segments {
        if s.length.verdict == Verdict::Problem {
            let _ = writeln!(out, "{}: PROBLEM", s.segment.label());
        }
    }
    let _ = writeln!(out, "overall: {}", report.overall.label());
    out
}

fn check_value(v: &CheckValue, decimals: u32) -> String {
    match v {
        CheckValue::Number(n) => format_number(*n, decimals),
        other => other.to_string(),
    }
}

fn check_line(c: &Check, decimals: u32) -> String {
    format!(
        "  {} {} {}: computed {}, expected {}{}",
        if c.pass { "ok  " } else { "FAIL" },
        c.segment,
        c.metric,
        check_value(&c.computed, decimals),
        check_value(&c.expected, decimals),
        c.deviation.map_or(String::new(), |d| format!(" (deviation {})", format_number(d, decimals.max(6)))),
    )
}

pub fn case_report(c: &CaseReport, decimals: u32) -> String {
    let mut out = String::new();
    let status = if c.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "Example {}: {} [{status}]", c.id, c.name);
    if let Some(err) = &c.error {
        let _ = writeln!(out, "  error: {err}");
        return out;
    }
    if let Some(r) = &c.report {
        for line in normality_report(r, decimals).lines() {
            let _ = writeln!(out, "  {line}");
        }
    }
    for r in &c.references {
        let shown = r
            .computed
            .map_or_else(|| "-".to_owned(), |p| format_points(&p.0, decimals));
        let _ = writeln!(out, "  {}: {} (reference {})", r.method, shown, r.reference_text);
    }
    if let Some(s) = &c.sweep {
        let _ = writeln!(
            out,
            "  sweep: min gap {} at level {}, inf monotone {}, sup monotone {}",
            format_number(s.min_gap, decimals),
            format_number(s.gap_argmin, decimals),
            s.inf_monotone,
            s.sup_monotone
        );
    }
    for check in c.failures() {
        let _ = writeln!(out, "{}", check_line(check, decimals));
    }
    out
}

pub fn benchmark_report(report: &BenchmarkReport, decimals: u32) -> String {
    let mut out = String::new();
    for c in &report.cases {
        out.push_str(&case_report(c, decimals));
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "{} passed, {} failed of {} cases",
        report.passed(),
        report.failed(),
        report.cases.len()
    );
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn csv_value(v: &CheckValue) -> String {
    match v {
        CheckValue::Number(n) => format!("{n:?}"),
        CheckValue::Label(s) => csv_field(s),
        CheckValue::Missing => String::new(),
    }
}

/// One row per comparison:
/// `case_id,segment,metric,computed,expected,deviation,pass`.
pub fn benchmark_csv(report: &BenchmarkReport) -> String {
    let mut out = String::from("case_id,segment,metric,computed,expected,deviation,pass\n");
    for c in &report.cases {
        for check in &c.checks {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                c.id,
                csv_field(&check.segment),
                csv_field(&check.metric),
                csv_value(&check.computed),
                csv_value(&check.expected),
                check.deviation.map_or(String::new(), |d| format!("{d:?}")),
                check.pass
            );
        }
        if let Some(err) = &c.error {
            let _ = writeln!(out, "{},case,error,{},,,false", c.id, csv_field(err));
        }
    }
    out
}
