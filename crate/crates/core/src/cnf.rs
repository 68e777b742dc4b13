//! Normality diagnostics for two-rule, one-dimensional KH interpolation.
//!
//! The conclusion is examined segment by segment: the left boundary (points
//! 1–2), the core (points 2–3) and the right boundary (points 3–4). For each
//! segment the length parameters of the antecedents, consequents and
//! observation are extracted and fed to the length conditions (general and
//! uniform forms) and to the length-ratio conditions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{FriError, Result};
use crate::kh::{kh_characteristic_points, ConclusionPoints, Observation, Rule};
use crate::fuzzy::TrapezoidSet;
use crate::TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Segment {
    /// Left boundary, points 1–2.
    Ltb,
    Core,
    /// Right boundary, points 3–4.
    Rtb,
}

impl Segment {
    pub const ALL: [Segment; 3] = [Segment::Ltb, Segment::Core, Segment::Rtb];

    /// Zero-based indices of the characteristic points bounding the segment.
    pub fn indices(self) -> (usize, usize) {
        match self {
            Segment::Ltb => (0, 1),
            Segment::Core => (1, 2),
            Segment::Rtb => (2, 3),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Segment::Ltb => "LTB",
            Segment::Core => "Core",
            Segment::Rtb => "RTB",
        }
    }

    /// Name used in the tabular verdict lines.
    pub fn table_name(self) -> &'static str {
        match self {
            Segment::Ltb => "LFBound",
            Segment::Core => "Core",
            Segment::Rtb => "RFBound",
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Normal,
    Problem,
}

impl Verdict {
    fn from_le(lhs: f64, rhs: f64) -> Self {
        if lhs <= rhs + TOL {
            Verdict::Normal
        } else {
            Verdict::Problem
        }
    }

    pub fn is_normal(self) -> bool {
        self == Verdict::Normal
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Normal => "NORMAL",
            Verdict::Problem => "PROBLEM",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Length parameters of one segment.
///
/// For a segment bounded by points `(i, j)`: `ka1`, `ka2`, `kb1`, `kb2`,
/// `kastar` are the segment lengths (point `j` minus point `i`) of the
/// lower/upper antecedent, lower/upper consequent and observation; `da1` is
/// the gap from the lower antecedent's point `j` to the observation's point
/// `i`, `da2` from the observation's point `j` to the upper antecedent's
/// point `i`, `db` from the lower consequent's point `j` to the upper
/// consequent's point `i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentParams {
    pub segment: Segment,
    pub ka1: f64,
    pub ka2: f64,
    pub kb1: f64,
    pub kb2: f64,
    pub kastar: f64,
    pub da1: f64,
    pub da2: f64,
    pub db: f64,
    /// Gap between the two antecedents over the segment, `a2[i] − a1[j]`.
    pub da: f64,
    pub uniform_a: bool,
    pub uniform_b: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthPath {
    General,
    UniformNonzero,
    UniformZero,
}

impl LengthPath {
    pub fn label(self) -> &'static str {
        match self {
            LengthPath::General => "GENERAL",
            LengthPath::UniformNonzero => "UNIFORM_NONZERO",
            LengthPath::UniformZero => "UNIFORM_ZERO",
        }
    }
}

impl fmt::Display for LengthPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LengthDiagnostics {
    pub length1: f64,
    pub length2: f64,
    pub path: LengthPath,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioVerdict {
    Normal,
    Problem,
    /// A denominator vanished; defer to the length condition.
    Undefined,
}

impl RatioVerdict {
    pub fn label(self) -> &'static str {
        match self {
            RatioVerdict::Normal => "NORMAL",
            RatioVerdict::Problem => "PROBLEM",
            RatioVerdict::Undefined => "UNDEFINED",
        }
    }
}

impl fmt::Display for RatioVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioDiagnostics {
    pub ratio1: Option<f64>,
    pub ratio2: Option<f64>,
    pub verdict: RatioVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    Case1,
    Case2,
    Case3,
    UniformCore,
}

impl CaseLabel {
    pub fn label(self) -> &'static str {
        match self {
            CaseLabel::Case1 => "CASE1",
            CaseLabel::Case2 => "CASE2",
            CaseLabel::Case3 => "CASE3",
            CaseLabel::UniformCore => "UNIFORM_CORE",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Set of case hypotheses that hold for a configuration; may be empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseTag(BTreeSet<CaseLabel>);

impl CaseTag {
    pub fn contains(&self, label: CaseLabel) -> bool {
        self.0.contains(&label)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = CaseLabel> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<CaseLabel> for CaseTag {
    fn from_iter<I: IntoIterator<Item = CaseLabel>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("{}");
        }
        let names: Vec<_> = self.0.iter().map(|c| c.label()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Direct verdicts from the ordering of the conclusion's characteristic points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentVerdicts {
    pub ltb: Verdict,
    pub core: Verdict,
    pub rtb: Verdict,
}

impl SegmentVerdicts {
    pub fn get(&self, seg: Segment) -> Verdict {
        match seg {
            Segment::Ltb => self.ltb,
            Segment::Core => self.core,
            Segment::Rtb => self.rtb,
        }
    }

    pub fn all_normal(&self) -> bool {
        self.ltb.is_normal() && self.core.is_normal() && self.rtb.is_normal()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SegmentReport {
    pub segment: Segment,
    pub params: SegmentParams,
    pub length: LengthDiagnostics,
    pub ratio: RatioDiagnostics,
    pub direct: Verdict,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalityReport {
    pub points: ConclusionPoints,
    pub segments: [SegmentReport; 3],
    pub cases: CaseTag,
    /// Conjunction of the three length-condition verdicts.
    pub overall: Verdict,
}

impl NormalityReport {
    pub fn segment(&self, seg: Segment) -> &SegmentReport {
        &self.segments[seg as usize]
    }

    pub fn direct_verdicts(&self) -> SegmentVerdicts {
        SegmentVerdicts {
            ltb: self.segments[0].direct,
            core: self.segments[1].direct,
            rtb: self.segments[2].direct,
        }
    }
}

fn single_dim(rule: &Rule) -> Result<&TrapezoidSet> {
    match rule.antecedents() {
        [a] => Ok(a),
        other => Err(FriError::Dimension(other.len())),
    }
}

fn single_obs(obs: &Observation) -> Result<&TrapezoidSet> {
    match obs.sets() {
        [x] => Ok(x),
        other => Err(FriError::Dimension(other.len())),
    }
}

struct Sets<'a> {
    a1: &'a TrapezoidSet,
    a2: &'a TrapezoidSet,
    b1: &'a TrapezoidSet,
    b2: &'a TrapezoidSet,
    x: &'a TrapezoidSet,
}

fn sets<'a>(r1: &'a Rule, r2: &'a Rule, obs: &'a Observation) -> Result<Sets<'a>> {
    Ok(Sets {
        a1: single_dim(r1)?,
        a2: single_dim(r2)?,
        b1: r1.consequent(),
        b2: r2.consequent(),
        x: single_obs(obs)?,
    })
}

/// Length parameters of `seg` for the configuration `r1, r2, obs`.
pub fn extract_segment_params(r1: &Rule, r2: &Rule, obs: &Observation, seg: Segment) -> Result<SegmentParams> {
    let s = sets(r1, r2, obs)?;
    let (i, j) = seg.indices();
    let len = |t: &TrapezoidSet| t.point(j) - t.point(i);
    let (ka1, ka2, kb1, kb2) = (len(s.a1), len(s.a2), len(s.b1), len(s.b2));
    Ok(SegmentParams {
        segment: seg,
        ka1,
        ka2,
        kb1,
        kb2,
        kastar: len(s.x),
        da1: s.x.point(i) - s.a1.point(j),
        da2: s.a2.point(i) - s.x.point(j),
        db: s.b2.point(i) - s.b1.point(j),
        da: s.a2.point(i) - s.a1.point(j),
        uniform_a: (ka1 - ka2).abs() <= TOL,
        uniform_b: (kb1 - kb2).abs() <= TOL,
    })
}

/// The general length pair, valid for any segment lengths:
///
/// ```text
/// length1 = db·((ka1+da1)(ka2+da2) − (ka*+da1)(ka*+da2))
/// length2 = (ka1+da1)(da1+ka*)·kb2 + (ka2+da2)(da2+ka*)·kb1
/// ```
pub fn general_lengths(p: &SegmentParams) -> (f64, f64) {
    let length1 = p.db * ((p.ka1 + p.da1) * (p.ka2 + p.da2) - (p.kastar + p.da1) * (p.kastar + p.da2));
    let length2 = (p.ka1 + p.da1) * (p.da1 + p.kastar) * p.kb2 + (p.ka2 + p.da2) * (p.da2 + p.kastar) * p.kb1;
    (length1, length2)
}

/// Length condition for one segment. The uniform shortcuts apply when both
/// antecedent and consequent lengths are uniform; otherwise the general form.
pub fn length_condition(p: &SegmentParams) -> LengthDiagnostics {
    let (length1, length2, path) = if p.uniform_a && p.uniform_b {
        let length1 = p.db * (p.ka1 - p.kastar);
        if p.kastar.abs() > TOL {
            (length1, p.kb1 * (p.da1 + p.da2 + 2.0 * p.kastar), LengthPath::UniformNonzero)
        } else {
            (length1, p.kb1 * p.da, LengthPath::UniformZero)
        }
    } else {
        let (l1, l2) = general_lengths(p);
        (l1, l2, LengthPath::General)
    };
    LengthDiagnostics {
        length1,
        length2,
        path,
        verdict: Verdict::from_le(length1, length2),
    }
}

/// Length-ratio condition for one segment bounded by points `(i, j)`:
///
/// ```text
/// ratio1 = (b2[i] − b1[j]) / (a2[i] − a1[j])
/// ratio2 = (a2[i] − a1[j]) / ((x[i] − a1[j]) + (a2[i] − x[j]))
/// ```
pub fn ratio_condition(r1: &Rule, r2: &Rule, obs: &Observation, seg: Segment) -> Result<RatioDiagnostics> {
    let s = sets(r1, r2, obs)?;
    let (i, j) = seg.indices();
    let gap_a = s.a2.point(i) - s.a1.point(j);
    let gap_b = s.b2.point(i) - s.b1.point(j);
    let gap_obs = (s.x.point(i) - s.a1.point(j)) + (s.a2.point(i) - s.x.point(j));
    let div = |num: f64, den: f64| if den.abs() <= TOL { None } else { Some(num / den) };
    let ratio1 = div(gap_b, gap_a);
    let ratio2 = div(gap_a, gap_obs);
    let verdict = match (ratio1, ratio2) {
        (Some(r1), Some(r2)) if r1 <= r2 + TOL => RatioVerdict::Normal,
        (Some(_), Some(_)) => RatioVerdict::Problem,
        _ => RatioVerdict::Undefined,
    };
    Ok(RatioDiagnostics { ratio1, ratio2, verdict })
}

/// Which case hypotheses hold.
///
/// * `CASE1`: uniform antecedent lengths and `ka* >= ka` on every segment;
/// * `CASE2`: uniform antecedent and consequent lengths with `ka == kb`;
/// * `CASE3`: uniform antecedent and consequent lengths with `kb > ka`;
/// * `UNIFORM_CORE`: both antecedents and both consequents share one positive
///   core length.
pub fn classify_case(r1: &Rule, r2: &Rule, obs: &Observation) -> Result<CaseTag> {
    let params = Segment::ALL
        .iter()
        .map(|&seg| extract_segment_params(r1, r2, obs, seg))
        .collect::<Result<Vec<_>>>()?;
    let mut tags = BTreeSet::new();
    if params.iter().all(|p| p.uniform_a && p.kastar >= p.ka1 - TOL) {
        tags.insert(CaseLabel::Case1);
    }
    if params.iter().all(|p| p.uniform_a && p.uniform_b && (p.ka1 - p.kb1).abs() <= TOL) {
        tags.insert(CaseLabel::Case2);
    }
    if params.iter().all(|p| p.uniform_a && p.uniform_b && p.kb1 > p.ka1 + TOL) {
        tags.insert(CaseLabel::Case3);
    }
    let core = &params[1];
    if core.uniform_a && core.uniform_b && (core.ka1 - core.kb1).abs() <= TOL && core.ka1 > TOL {
        tags.insert(CaseLabel::UniformCore);
    }
    Ok(CaseTag(tags))
}

/// Per-segment verdicts straight from the characteristic points:
/// `y1 <= y2`, `y2 <= y3`, `y3 <= y4`.
pub fn direct_normality(p: &ConclusionPoints) -> SegmentVerdicts {
    let y = p.0;
    SegmentVerdicts {
        ltb: Verdict::from_le(y[0], y[1]),
        core: Verdict::from_le(y[1], y[2]),
        rtb: Verdict::from_le(y[2], y[3]),
    }
}

/// Interpolates and runs every diagnostic.
pub fn full_report(r1: &Rule, r2: &Rule, obs: &Observation) -> Result<NormalityReport> {
    // Dimension first so multi-dimensional input reports the right error.
    sets(r1, r2, obs)?;
    let points = kh_characteristic_points(r1, r2, obs)?;
    let direct = direct_normality(&points);
    let mut segments = Vec::with_capacity(3);
    for seg in Segment::ALL {
        let params = extract_segment_params(r1, r2, obs, seg)?;
        segments.push(SegmentReport {
            segment: seg,
            params,
            length: length_condition(&params),
            ratio: ratio_condition(r1, r2, obs, seg)?,
            direct: direct.get(seg),
        });
    }
    let overall = if segments.iter().all(|s| s.length.verdict.is_normal()) {
        Verdict::Normal
    } else {
        Verdict::Problem
    };
    let segments: [SegmentReport; 3] = segments.try_into().expect("three segments");
    Ok(NormalityReport {
        points,
        segments,
        cases: classify_case(r1, r2, obs)?,
        overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(a1: [f64; 4], a2: [f64; 4], b1: [f64; 4], b2: [f64; 4], x: [f64; 4]) -> (Rule, Rule, Observation) {
        let s = |p| TrapezoidSet::from_points(p).unwrap();
        (Rule::single(s(a1), s(b1)), Rule::single(s(a2), s(b2)), Observation::single(s(x)))
    }

    fn example1() -> (Rule, Rule, Observation) {
        config([1.0, 2.0, 2.0, 3.0], [7.0, 8.0, 8.0, 9.0], [2.0; 4], [8.0; 4], [4.0, 5.0, 5.0, 6.0])
    }

    fn example3() -> (Rule, Rule, Observation) {
        config(
            [1.0, 2.0, 3.0, 4.0],
            [6.0, 7.0, 8.0, 9.0],
            [1.0, 2.0, 3.0, 4.0],
            [6.0, 7.0, 8.0, 9.0],
            [4.0, 4.8, 5.2, 6.0],
        )
    }

    fn example6() -> (Rule, Rule, Observation) {
        config(
            [1.0, 2.0, 3.0, 4.0],
            [6.0, 7.0, 8.0, 9.0],
            [1.5, 2.5, 2.5, 3.8],
            [6.5, 7.5, 7.5, 9.0],
            [4.2, 5.2, 5.2, 6.7],
        )
    }

    fn example7() -> (Rule, Rule, Observation) {
        config(
            [1.0, 2.5, 2.5, 4.0],
            [5.5, 7.5, 7.5, 9.0],
            [1.0, 2.0, 3.0, 4.5],
            [6.5, 7.0, 8.0, 9.5],
            [4.5, 4.9, 5.1, 5.5],
        )
    }

    fn example9() -> (Rule, Rule, Observation) {
        config([2.0, 2.0, 2.5, 3.0], [6.0, 7.5, 8.0, 8.0], [2.0; 4], [8.0; 4], [5.0; 4])
    }

    fn near(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9
    }

    #[test]
    fn params_left_boundary_example7() {
        let (r1, r2, x) = example7();
        let p = extract_segment_params(&r1, &r2, &x, Segment::Ltb).unwrap();
        for (got, want) in [
            (p.ka1, 1.5),
            (p.ka2, 2.0),
            (p.kb1, 1.0),
            (p.kb2, 0.5),
            (p.kastar, 0.4),
            (p.da1, 2.0),
            (p.da2, 0.6),
            (p.db, 4.5),
        ] {
            assert!(near(got, want), "{got} != {want}");
        }
        assert!(!p.uniform_a && !p.uniform_b);
    }

    #[test]
    fn params_core_example3_and_rtb_example9() {
        let (r1, r2, x) = example3();
        let p = extract_segment_params(&r1, &r2, &x, Segment::Core).unwrap();
        assert!(near(p.ka1, 1.0) && near(p.ka2, 1.0) && near(p.kb1, 1.0) && near(p.kb2, 1.0));
        assert!(near(p.kastar, 0.4) && near(p.da1, 1.8) && near(p.da2, 1.8) && near(p.db, 4.0));

        let (r1, r2, x) = example9();
        let p = extract_segment_params(&r1, &r2, &x, Segment::Rtb).unwrap();
        assert!(near(p.ka1, 0.5) && near(p.ka2, 0.0) && near(p.kb1, 0.0) && near(p.kb2, 0.0));
        assert!(near(p.kastar, 0.0) && near(p.da1, 2.0) && near(p.da2, 3.0) && near(p.db, 6.0));
    }

    #[test]
    fn params_reject_multidimensional_rules() {
        let s = |v| TrapezoidSet::singleton(v).unwrap();
        let r1 = Rule::new(vec![s(1.0), s(1.0)], s(0.0)).unwrap();
        let r2 = Rule::new(vec![s(9.0), s(9.0)], s(1.0)).unwrap();
        let x = Observation::new(vec![s(5.0), s(5.0)]).unwrap();
        assert_eq!(extract_segment_params(&r1, &r2, &x, Segment::Core), Err(FriError::Dimension(2)));
        assert_eq!(full_report(&r1, &r2, &x).unwrap_err(), FriError::Dimension(2));
    }

    #[test]
    fn length_paths() {
        let (r1, r2, x) = example7();
        let d = length_condition(&extract_segment_params(&r1, &r2, &x, Segment::Ltb).unwrap());
        assert_eq!(d.path, LengthPath::General);
        assert!(near(d.length1, 30.15) && near(d.length2, 6.8));
        assert_eq!(d.verdict, Verdict::Problem);

        let (r1, r2, x) = example6();
        let d = length_condition(&extract_segment_params(&r1, &r2, &x, Segment::Rtb).unwrap());
        assert_eq!(d.path, LengthPath::General);
        assert!(near(d.length1, -9.25) && near(d.length2, 17.282));
        assert_eq!(d.verdict, Verdict::Normal);

        let (r1, r2, x) = example9();
        let core = extract_segment_params(&r1, &r2, &x, Segment::Core).unwrap();
        let d = length_condition(&core);
        assert_eq!(d.path, LengthPath::UniformZero);
        assert!(near(d.length1, 3.0) && near(d.length2, 0.0));
        assert_eq!(d.verdict, Verdict::Problem);
        // the general form evaluated on the same parameters
        let (g1, _) = general_lengths(&core);
        assert!(near(g1, 16.5));
    }

    #[test]
    fn equality_is_normal() {
        let (r1, r2, x) = example1();
        let d = length_condition(&extract_segment_params(&r1, &r2, &x, Segment::Ltb).unwrap());
        assert_eq!((d.length1, d.length2), (0.0, 0.0));
        assert_eq!(d.verdict, Verdict::Normal);
    }

    #[test]
    fn ratios() {
        let (r1, r2, x) = example6();
        let r = ratio_condition(&r1, &r2, &x, Segment::Core).unwrap();
        assert!(near(r.ratio1.unwrap(), 1.25) && near(r.ratio2.unwrap(), 1.0));
        assert_eq!(r.verdict, RatioVerdict::Problem);

        let (r1, r2, x) = example1();
        let r = ratio_condition(&r1, &r2, &x, Segment::Ltb).unwrap();
        assert!(near(r.ratio1.unwrap(), 1.2) && near(r.ratio2.unwrap(), 1.25));
        assert_eq!(r.verdict, RatioVerdict::Normal);
    }

    #[test]
    fn zero_denominator_ratio_is_undefined() {
        // Lower antecedent's point 2 equals the upper antecedent's point 1:
        // the left-boundary antecedent gap vanishes.
        let (r1, r2, x) = config(
            [0.0, 4.0, 4.0, 4.5],
            [4.0, 9.0, 9.0, 10.0],
            [0.0, 1.0, 1.0, 2.0],
            [5.0, 6.0, 6.0, 7.0],
            [2.0, 5.0, 5.0, 6.0],
        );
        let r = ratio_condition(&r1, &r2, &x, Segment::Ltb).unwrap();
        assert_eq!(r.ratio1, None);
        assert_eq!(r.verdict, RatioVerdict::Undefined);
    }

    #[test]
    fn case_classification() {
        let (r1, r2, x) = example1();
        assert_eq!(classify_case(&r1, &r2, &x).unwrap(), [CaseLabel::Case1].into_iter().collect());
        let (r1, r2, x) = example3();
        assert_eq!(
            classify_case(&r1, &r2, &x).unwrap(),
            [CaseLabel::Case2, CaseLabel::UniformCore].into_iter().collect()
        );
        let (r1, r2, x) = example6();
        assert!(classify_case(&r1, &r2, &x).unwrap().is_empty());
    }

    #[test]
    fn direct_verdicts() {
        let v = direct_normality(&ConclusionPoints([5.2778, 4.4, 5.6, 6.0]));
        assert_eq!((v.ltb, v.core, v.rtb), (Verdict::Problem, Verdict::Normal, Verdict::Normal));
        let v = direct_normality(&ConclusionPoints([6.5, 5.2727, 4.7272, 4.4]));
        assert_eq!((v.ltb, v.core, v.rtb), (Verdict::Problem, Verdict::Problem, Verdict::Problem));
        assert!(direct_normality(&ConclusionPoints([4.0, 4.5, 5.5, 6.0])).all_normal());
    }

    #[test]
    fn reports() {
        let (r1, r2, x) = example1();
        let rep = full_report(&r1, &r2, &x).unwrap();
        assert_eq!(rep.overall, Verdict::Normal);
        assert!(rep.segments.iter().all(|s| s.length.verdict == Verdict::Normal));

        let (r1, r2, x) = example6();
        let rep = full_report(&r1, &r2, &x).unwrap();
        assert_eq!(rep.segment(Segment::Core).length.verdict, Verdict::Problem);
        assert_eq!(rep.segment(Segment::Ltb).length.verdict, Verdict::Normal);
        assert_eq!(rep.segment(Segment::Rtb).length.verdict, Verdict::Normal);
        assert_eq!(rep.overall, Verdict::Problem);

        let (r1, r2, x) = example9();
        let rep = full_report(&r1, &r2, &x).unwrap();
        assert!(rep.segments.iter().all(|s| s.length.verdict == Verdict::Problem));
    }
}
