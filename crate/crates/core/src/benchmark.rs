//! The nine-case KH normality benchmark.
//!
//! Each case carries the printed conclusion, the printed length and ratio
//! diagnostics, the expected verdicts and, for the cases where other methods
//! were compared, the method comparison rows. Printed values are rounded to
//! two or three decimals and are compared at [`PRINTED_TOL`]; values derived
//! exactly from the reconstructed inputs are compared at [`EXACT_TOL`].

use std::fmt;

use crate::cnf::{full_report, LengthPath, NormalityReport, Segment, Verdict};
use crate::error::Result;
use crate::fuzzy::TrapezoidSet;
use crate::kh::{
    assemble_conclusion, kh_alpha_profile, kh_characteristic_points, khstab_points, ConclusionPoints, Observation,
    Rule, RuleBase, DEFAULT_LEVELS,
};
use crate::TOL;

/// Tolerance against values printed with two or three decimals.
pub const PRINTED_TOL: f64 = 0.011;
/// Tolerance against exactly derived values.
pub const EXACT_TOL: f64 = 1e-9;

/// Printed diagnostics of one segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectedSegment {
    pub length1: f64,
    pub length2: f64,
    pub ratio1: f64,
    pub ratio2: f64,
    /// The length form whose output matches the printed pair.
    pub path: LengthPath,
    pub verdict: Verdict,
}

/// One comparison-table row. Only the KH and KHstab rows are computed; the
/// remaining methods are kept as reference text.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceRow {
    pub method: &'static str,
    pub text: &'static str,
    pub points: Option<[f64; 4]>,
}

impl ReferenceRow {
    pub fn is_computed(&self) -> bool {
        matches!(self.method, "KH" | "KHstab")
    }

    /// Whether the reference text labels the conclusion as abnormal.
    pub fn claims_abnormal(&self) -> bool {
        self.text.starts_with("Abnormality")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkCase {
    pub id: u8,
    pub name: &'static str,
    pub lower: Rule,
    pub upper: Rule,
    pub observation: Observation,
    /// Printed conclusion.
    pub expected_points: [f64; 4],
    /// Exact conclusion of the reconstructed inputs (cases 5 and 9).
    pub exact_points: Option<[f64; 4]>,
    pub expected_segments: [ExpectedSegment; 3],
    pub expected_overall: Verdict,
    pub reference_rows: Vec<ReferenceRow>,
    pub provenance_note: &'static str,
}

impl BenchmarkCase {
    pub fn expected(&self, seg: Segment) -> &ExpectedSegment {
        &self.expected_segments[seg as usize]
    }

    pub fn rule_base(&self) -> RuleBase {
        RuleBase::new(vec![self.lower.clone(), self.upper.clone()]).expect("benchmark rules are ordered")
    }
}

fn set(p: [f64; 4]) -> TrapezoidSet {
    TrapezoidSet::from_points(p).expect("benchmark sets are ordered")
}

fn seg(length1: f64, length2: f64, ratio1: f64, ratio2: f64, path: LengthPath, verdict: Verdict) -> ExpectedSegment {
    ExpectedSegment {
        length1,
        length2,
        ratio1,
        ratio2,
        path,
        verdict,
    }
}

fn row(method: &'static str, text: &'static str, points: Option<[f64; 4]>) -> ReferenceRow {
    ReferenceRow { method, text, points }
}

struct CaseSpec {
    id: u8,
    name: &'static str,
    a1: [f64; 4],
    a2: [f64; 4],
    b1: [f64; 4],
    b2: [f64; 4],
    x: [f64; 4],
    points: [f64; 4],
    exact: Option<[f64; 4]>,
    segments: [ExpectedSegment; 3],
    overall: Verdict,
    rows: Vec<ReferenceRow>,
    note: &'static str,
}

impl From<CaseSpec> for BenchmarkCase {
    fn from(c: CaseSpec) -> Self {
        BenchmarkCase {
            id: c.id,
            name: c.name,
            lower: Rule::single(set(c.a1), set(c.b1)),
            upper: Rule::single(set(c.a2), set(c.b2)),
            observation: Observation::single(set(c.x)),
            expected_points: c.points,
            exact_points: c.exact,
            expected_segments: c.segments,
            expected_overall: c.overall,
            reference_rows: c.rows,
            provenance_note: c.note,
        }
    }
}

/// The nine benchmark cases, ordered by id.
pub fn builtin_cases() -> Vec<BenchmarkCase> {
    use LengthPath::{General as G, UniformNonzero as UN, UniformZero as UZ};
    use Verdict::{Normal as N, Problem as P};

    let specs = vec![
        CaseSpec {
            id: 1,
            name: "triangular antecedents, singleton consequents (case 1)",
            a1: [1.0, 2.0, 2.0, 3.0],
            a2: [7.0, 8.0, 8.0, 9.0],
            b1: [2.0; 4],
            b2: [8.0; 4],
            x: [4.0, 5.0, 5.0, 6.0],
            points: [5.0; 4],
            exact: None,
            segments: [
                seg(0.0, 0.0, 1.20, 1.25, UN, N),
                seg(0.0, 0.0, 1.0, 1.0, UZ, N),
                seg(0.0, 0.0, 1.20, 1.25, UN, N),
            ],
            overall: N,
            rows: vec![],
            note: "printed verbatim; triangles [1 2 3], [7 8 9] and singletons [2 2 2], [8 8 8] widened to four points",
        },
        CaseSpec {
            id: 2,
            name: "triangular sets with equal lengths (case 2)",
            a1: [1.0, 2.5, 2.5, 4.0],
            a2: [6.0, 7.5, 7.5, 9.0],
            b1: [1.0, 2.5, 2.5, 4.0],
            b2: [6.0, 7.5, 7.5, 9.0],
            x: [4.5, 5.0, 5.0, 5.5],
            points: [4.5, 5.0, 5.0, 5.5],
            exact: None,
            segments: [
                seg(3.5, 6.0, 1.0, 1.16, UN, N),
                seg(0.0, 0.0, 1.0, 1.0, UZ, N),
                seg(3.5, 6.0, 1.0, 1.16, UN, N),
            ],
            overall: N,
            rows: vec![],
            note: "printed verbatim; observation and conclusion [4.5 5 5.5] widened to four points",
        },
        CaseSpec {
            id: 3,
            name: "trapezoidal sets with equal lengths (case 2)",
            a1: [1.0, 2.0, 3.0, 4.0],
            a2: [6.0, 7.0, 8.0, 9.0],
            b1: [1.0, 2.0, 3.0, 4.0],
            b2: [6.0, 7.0, 8.0, 9.0],
            x: [4.0, 4.8, 5.2, 6.0],
            points: [4.0, 4.8, 5.2, 6.0],
            exact: None,
            segments: [
                seg(0.8, 4.8, 1.0, 1.25, UN, N),
                seg(2.4, 4.4, 1.0, 1.11, UN, N),
                seg(0.8, 4.8, 1.0, 1.25, UN, N),
            ],
            overall: N,
            rows: vec![],
            note: "printed verbatim",
        },
        CaseSpec {
            id: 4,
            name: "wider consequents, singleton observation (case 3)",
            a1: [1.5, 2.0, 2.0, 2.5],
            a2: [6.5, 7.0, 7.0, 7.5],
            b1: [1.0, 2.0, 3.0, 4.0],
            b2: [6.0, 7.0, 8.0, 9.0],
            x: [4.5; 4],
            points: [4.0, 4.5, 5.5, 6.0],
            exact: None,
            segments: [
                seg(2.0, 4.5, 0.88, 1.0, UZ, N),
                seg(0.0, 5.0, 0.80, 1.0, UZ, N),
                seg(2.0, 4.5, 0.88, 1.0, UZ, N),
            ],
            overall: N,
            rows: vec![],
            note: "printed verbatim",
        },
        CaseSpec {
            id: 5,
            name: "singleton antecedents, trapezoidal consequents (case 3)",
            a1: [2.0; 4],
            a2: [8.0; 4],
            b1: [1.0, 2.0, 3.0, 4.0],
            b2: [6.0, 7.0, 8.0, 9.0],
            x: [4.5, 5.0, 5.0, 5.5],
            points: [3.08, 4.5, 5.5, 6.916],
            exact: Some([37.0 / 12.0, 4.5, 5.5, 83.0 / 12.0]),
            segments: [
                seg(-2.0, 6.5, 0.66, 1.09, UN, N),
                seg(0.0, 6.0, 0.66, 1.0, UZ, N),
                seg(-2.0, 6.5, 0.66, 1.09, UN, N),
            ],
            overall: N,
            rows: vec![],
            note: "observation reconstructed: printed as [4.5 5 5 5], which cannot yield the printed right support \
                   6.916; a right support of 5.5 reproduces it and every printed diagnostic",
        },
        CaseSpec {
            id: 6,
            name: "core inversion",
            a1: [1.0, 2.0, 3.0, 4.0],
            a2: [6.0, 7.0, 8.0, 9.0],
            b1: [1.5, 2.5, 2.5, 3.8],
            b2: [6.5, 7.5, 7.5, 9.0],
            x: [4.2, 5.2, 5.2, 6.7],
            points: [4.7, 5.7, 4.7, 6.6],
            exact: None,
            segments: [
                seg(0.0, 5.0, 1.0, 1.33, UN, N),
                seg(5.0, 0.0, 1.25, 1.0, UZ, P),
                seg(-9.25, 17.28, 0.92, 1.6, G, N),
            ],
            overall: P,
            rows: vec![
                row("KH", "Abnormality [4.7 5.7 4.7 6.6]", Some([4.7, 5.7, 4.7, 6.6])),
                row("KHstab", "Abnormality [4.7 5.7 4.7 6.6]", Some([4.7, 5.7, 4.7, 6.6])),
                row("MACI", "Normal [4.2 5.2 5.2 6.6]", None),
                row("VKK", "Normal [4.6 5.2 5.2 6.66]", None),
                row("CRF", "Normal [3.9 5.25 5.25 6.75]", None),
            ],
            note: "printed verbatim",
        },
        CaseSpec {
            id: 7,
            name: "left boundary inversion",
            a1: [1.0, 2.5, 2.5, 4.0],
            a2: [5.5, 7.5, 7.5, 9.0],
            b1: [1.0, 2.0, 3.0, 4.5],
            b2: [6.5, 7.0, 8.0, 9.5],
            x: [4.5, 4.9, 5.1, 5.5],
            points: [5.27, 4.4, 5.6, 6.0],
            exact: None,
            segments: [
                seg(30.15, 6.80, 1.5, 1.15, G, P),
                seg(-0.8, 5.2, 0.8, 1.04, UN, N),
                seg(3.85, 5.85, 1.0, 1.12, UN, N),
            ],
            overall: P,
            rows: vec![
                row("KH", "Abnormality [5.27 4.4 5.6 6.0]", Some([5.27, 4.4, 5.6, 6.0])),
                row("KHstab", "Abnormality [5.27 4.4 5.6 6.0]", Some([5.27, 4.4, 5.6, 6.0])),
                row("MACI", "Normal [3.8 4.5 5.5 7]", None),
                row("VKK", "Abnormality [out range]", None),
                row("CRF", "Normal [4.5 4.9 5.0 5.1]", None),
            ],
            note: "printed verbatim",
        },
        CaseSpec {
            id: 8,
            name: "right boundary inversion",
            a1: [1.5, 2.5, 2.5, 4.3],
            a2: [6.5, 7.5, 7.5, 8.8],
            b1: [1.0, 2.0, 3.0, 3.5],
            b2: [6.0, 7.0, 8.0, 8.9],
            x: [4.5, 4.9, 5.1, 5.5],
            points: [4.0, 4.4, 5.6, 4.94],
            exact: None,
            segments: [
                seg(2.4, 4.4, 1.0, 1.11, UN, N),
                seg(-0.8, 5.2, 0.80, 1.04, UN, N),
                seg(25.65, 6.76, 1.40, 1.14, G, P),
            ],
            overall: P,
            rows: vec![],
            note: "printed verbatim",
        },
        CaseSpec {
            id: 9,
            name: "core and boundary inversion",
            a1: [2.0, 2.0, 2.5, 3.0],
            a2: [6.0, 7.5, 8.0, 8.0],
            b1: [2.0; 4],
            b2: [8.0; 4],
            x: [5.0; 4],
            points: [6.5, 5.27, 4.72, 4.4],
            exact: Some([6.5, 58.0 / 11.0, 52.0 / 11.0, 4.4]),
            segments: [
                seg(27.0, 0.0, 1.5, 1.0, G, P),
                seg(3.0, 0.0, 1.2, 1.0, UZ, P),
                seg(9.0, 0.0, 1.2, 1.0, G, P),
            ],
            overall: P,
            rows: vec![
                row("KH", "Abnormality [6.5 5.27 4.72 4.4]", Some([6.5, 5.27, 4.72, 4.4])),
                row("KHstab", "Abnormality [6.5 5.27 4.72 4.4]", Some([6.5, 5.27, 4.72, 4.4])),
                row("MACI", "Normal [5 5 5]", None),
                row("VKK", "Abnormality [5.3 5.5 5.3]", None),
                row("CRF", "Normal [5 5 5]", None),
            ],
            note: "antecedents reconstructed: printed as [2 2 2 5 3] and [6 7 5 8 8]; A1 = [2 2 2.5 3] and \
                   A2 = [6 7.5 8 8] reproduce all four conclusion points and all printed diagnostics",
        },
    ];
    specs.into_iter().map(BenchmarkCase::from).collect()
}

/// Dense α-sweep summary of a KH conclusion.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOracleResult {
    /// Smallest `sup − inf` over the sampled levels; values within
    /// tolerance of zero are reported as zero.
    pub min_gap: f64,
    /// Level attaining `min_gap`; ties go to the highest level.
    pub gap_argmin: f64,
    pub inf_monotone: bool,
    pub sup_monotone: bool,
    /// Levels whose interval is inverted.
    pub abnormal_levels: Vec<f64>,
}

impl SweepOracleResult {
    /// Inverted level or non-monotone endpoint curve.
    pub fn shows_abnormality(&self) -> bool {
        self.min_gap < 0.0 || !self.inf_monotone || !self.sup_monotone
    }
}

pub fn sweep_oracle(r1: &Rule, r2: &Rule, obs: &Observation, n_levels: usize) -> Result<SweepOracleResult> {
    let profile = kh_alpha_profile(r1, r2, obs, n_levels)?;
    let levels = profile.levels();
    let snap = |g: f64| if g.abs() <= TOL { 0.0 } else { g };

    let mut min_gap = f64::INFINITY;
    let mut gap_argmin = 0.0;
    for l in levels {
        let g = snap(l.gap());
        if g <= min_gap {
            min_gap = g;
            gap_argmin = l.level;
        }
    }
    let abnormal_levels = levels
        .iter()
        .filter(|l| snap(l.gap()) < 0.0)
        .map(|l| l.level)
        .collect();
    Ok(SweepOracleResult {
        min_gap,
        gap_argmin,
        inf_monotone: levels.windows(2).all(|w| w[1].inf >= w[0].inf - TOL),
        sup_monotone: levels.windows(2).all(|w| w[1].sup <= w[0].sup + TOL),
        abnormal_levels,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum CheckValue {
    Number(f64),
    Label(String),
    Missing,
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Number(v) => write!(f, "{v}"),
            CheckValue::Label(s) => f.write_str(s),
            CheckValue::Missing => f.write_str("-"),
        }
    }
}

/// One compared field.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    /// `conclusion`, `LTB`, `Core`, `RTB`, `overall`, or a method name.
    pub segment: String,
    pub metric: String,
    pub computed: CheckValue,
    pub expected: CheckValue,
    pub deviation: Option<f64>,
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Check {
    fn number(segment: &str, metric: &str, computed: Option<f64>, expected: f64, tolerance: f64) -> Self {
        let deviation = computed.map(|c| (c - expected).abs());
        Check {
            segment: segment.to_owned(),
            metric: metric.to_owned(),
            computed: computed.map_or(CheckValue::Missing, CheckValue::Number),
            expected: CheckValue::Number(expected),
            deviation,
            tolerance: Some(tolerance),
            pass: deviation.is_some_and(|d| d <= tolerance),
        }
    }

    fn label(segment: &str, metric: &str, computed: &str, expected: &str) -> Self {
        Check {
            segment: segment.to_owned(),
            metric: metric.to_owned(),
            computed: CheckValue::Label(computed.to_owned()),
            expected: CheckValue::Label(expected.to_owned()),
            deviation: None,
            tolerance: None,
            pass: computed == expected,
        }
    }
}

/// Outcome of comparing one method-comparison row.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceComparison {
    pub method: &'static str,
    pub reference_text: &'static str,
    /// `None` for rows kept as reference text only.
    pub computed: Option<ConclusionPoints>,
    pub max_deviation: Option<f64>,
    pub pass: Option<bool>,
}

/// Computes the KH and KHstab rows of a case and compares them with the
/// reference table; other methods are passed through as text.
pub fn compare_reference(c: &BenchmarkCase) -> Result<Vec<ReferenceComparison>> {
    let mut out = Vec::with_capacity(c.reference_rows.len());
    for r in &c.reference_rows {
        let computed = match r.method {
            "KH" => Some(kh_characteristic_points(&c.lower, &c.upper, &c.observation)?),
            "KHstab" => Some(khstab_points(&c.rule_base(), &c.observation, 1.0)?),
            _ => None,
        };
        let (max_deviation, pass) = match (computed, r.points) {
            (Some(p), Some(expected)) => {
                let dev = p.0.iter().zip(expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                let label_ok = assemble_conclusion(&p).is_normal() != r.claims_abnormal();
                (Some(dev), Some(dev <= PRINTED_TOL && label_ok))
            }
            _ => (None, None),
        };
        out.push(ReferenceComparison {
            method: r.method,
            reference_text: r.text,
            computed,
            max_deviation,
            pass,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub id: u8,
    pub name: &'static str,
    pub report: Option<NormalityReport>,
    pub references: Vec<ReferenceComparison>,
    pub sweep: Option<SweepOracleResult>,
    pub checks: Vec<Check>,
    /// Engine error, if the case could not be evaluated.
    pub error: Option<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkReport {
    pub cases: Vec<CaseReport>,
}

impl BenchmarkReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

const POINT_NAMES: [&str; 4] = ["y1", "y2", "y3", "y4"];

pub fn run_case(c: &BenchmarkCase) -> CaseReport {
    run_case_with(c, None)
}

/// Evaluates a case; `sweep_levels` additionally runs the α-sweep oracle.
pub fn run_case_with(c: &BenchmarkCase, sweep_levels: Option<usize>) -> CaseReport {
    let mut out = CaseReport {
        id: c.id,
        name: c.name,
        report: None,
        references: Vec::new(),
        sweep: None,
        checks: Vec::new(),
        error: None,
    };
    let evaluated = full_report(&c.lower, &c.upper, &c.observation).and_then(|report| {
        let refs = compare_reference(c)?;
        let sweep = sweep_levels
            .map(|n| sweep_oracle(&c.lower, &c.upper, &c.observation, n))
            .transpose()?;
        Ok((report, refs, sweep))
    });
    let (report, refs, sweep) = match evaluated {
        Ok(v) => v,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };

    let y = report.points.0;
    for j in 0..4 {
        out.checks.push(Check::number("conclusion", POINT_NAMES[j], Some(y[j]), c.expected_points[j], PRINTED_TOL));
    }
    if let Some(exact) = c.exact_points {
        for j in 0..4 {
            let metric = format!("{}_exact", POINT_NAMES[j]);
            out.checks.push(Check::number("conclusion", &metric, Some(y[j]), exact[j], EXACT_TOL));
        }
    }
    for s in &report.segments {
        let e = c.expected(s.segment);
        let name = s.segment.label();
        out.checks.push(Check::number(name, "length1", Some(s.length.length1), e.length1, PRINTED_TOL));
        out.checks.push(Check::number(name, "length2", Some(s.length.length2), e.length2, PRINTED_TOL));
        out.checks.push(Check::number(name, "ratio1", s.ratio.ratio1, e.ratio1, PRINTED_TOL));
        out.checks.push(Check::number(name, "ratio2", s.ratio.ratio2, e.ratio2, PRINTED_TOL));
        out.checks.push(Check::label(name, "path", s.length.path.label(), e.path.label()));
        out.checks.push(Check::label(name, "verdict", s.length.verdict.label(), e.verdict.label()));
    }
    out.checks.push(Check::label("overall", "verdict", report.overall.label(), c.expected_overall.label()));

    for r in &refs {
        if let (Some(p), Some(expected)) = (r.computed, c.reference_rows.iter().find(|row| row.method == r.method)) {
            if let Some(ep) = expected.points {
                for j in 0..4 {
                    out.checks.push(Check::number(r.method, POINT_NAMES[j], Some(p.0[j]), ep[j], PRINTED_TOL));
                }
            }
            let computed_label = if assemble_conclusion(&p).is_normal() { "Normal" } else { "Abnormality" };
            let expected_label = if expected.claims_abnormal() { "Abnormality" } else { "Normal" };
            out.checks.push(Check::label(r.method, "shape", computed_label, expected_label));
        }
    }

    out.report = Some(report);
    out.references = refs;
    out.sweep = sweep;
    out
}

/// Runs every builtin case in id order.
pub fn run_all() -> BenchmarkReport {
    run_selected(None, None)
}

/// Runs the builtin cases, optionally restricted to one id and with the
/// α-sweep oracle at `sweep_levels`.
pub fn run_selected(case: Option<u8>, sweep_levels: Option<usize>) -> BenchmarkReport {
    let cases = builtin_cases()
        .iter()
        .filter(|c| case.map_or(true, |id| c.id == id))
        .map(|c| run_case_with(c, sweep_levels))
        .collect();
    BenchmarkReport { cases }
}

/// [`sweep_oracle`] at the default resolution.
pub fn sweep_case(c: &BenchmarkCase) -> Result<SweepOracleResult> {
    sweep_oracle(&c.lower, &c.upper, &c.observation, DEFAULT_LEVELS)
}
