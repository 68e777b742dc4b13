//! Koczy–Hirota linear rule interpolation.
//!
//! The conclusion is built point by point: every characteristic point (and,
//! for the α-profile, every α-cut endpoint) of the consequent is the
//! inverse-distance weighted mean of the two flanking consequents, where the
//! weights come from the distances between the observation and the flanking
//! antecedents at the same point.

use std::fmt;

use crate::error::{FriError, Result};
use crate::fuzzy::{GradedPointList, TrapezoidSet};
use crate::TOL;

/// Number of α-levels used when the caller does not choose one.
pub const DEFAULT_LEVELS: usize = 1001;

/// Minkowski aggregation of per-dimension coordinate differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metric {
    order: f64,
}

impl Metric {
    pub fn minkowski(order: f64) -> Result<Self> {
        if !(order.is_finite() && order >= 1.0) {
            return Err(FriError::InvalidParameter(format!(
                "Minkowski order must be a finite value >= 1, got {order}"
            )));
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    pub fn aggregate<I: IntoIterator<Item = f64>>(&self, diffs: I) -> f64 {
        if self.order == 2.0 {
            return diffs.into_iter().map(|d| d * d).sum::<f64>().sqrt();
        }
        if self.order == 1.0 {
            return diffs.into_iter().map(f64::abs).sum();
        }
        diffs
            .into_iter()
            .map(|d| d.abs().powf(self.order))
            .sum::<f64>()
            .powf(1.0 / self.order)
    }
}

impl Default for Metric {
    /// Euclidean (root-sum-square).
    fn default() -> Self {
        Self { order: 2.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    antecedents: Vec<TrapezoidSet>,
    consequent: TrapezoidSet,
}

impl Rule {
    pub fn new(antecedents: Vec<TrapezoidSet>, consequent: TrapezoidSet) -> Result<Self> {
        if antecedents.is_empty() {
            return Err(FriError::Empty("antecedent list"));
        }
        Ok(Self {
            antecedents,
            consequent,
        })
    }

    /// One-dimensional rule `A => B`.
    pub fn single(antecedent: TrapezoidSet, consequent: TrapezoidSet) -> Self {
        Self {
            antecedents: vec![antecedent],
            consequent,
        }
    }

    pub fn antecedents(&self) -> &[TrapezoidSet] {
        &self.antecedents
    }

    pub fn consequent(&self) -> &TrapezoidSet {
        &self.consequent
    }

    pub fn dimension(&self) -> usize {
        self.antecedents.len()
    }

    pub fn map_sets(&self, f: impl Fn(&TrapezoidSet) -> TrapezoidSet, g: impl Fn(&TrapezoidSet) -> TrapezoidSet) -> Rule {
        Rule {
            antecedents: self.antecedents.iter().map(&f).collect(),
            consequent: g(&self.consequent),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    sets: Vec<TrapezoidSet>,
}

impl Observation {
    pub fn new(sets: Vec<TrapezoidSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(FriError::Empty("observation"));
        }
        Ok(Self { sets })
    }

    pub fn single(set: TrapezoidSet) -> Self {
        Self { sets: vec![set] }
    }

    pub fn sets(&self) -> &[TrapezoidSet] {
        &self.sets
    }

    pub fn dimension(&self) -> usize {
        self.sets.len()
    }

    pub fn map_sets(&self, f: impl Fn(&TrapezoidSet) -> TrapezoidSet) -> Observation {
        Observation {
            sets: self.sets.iter().map(f).collect(),
        }
    }
}

/// Sparse rule base. All rules share one antecedent dimension and, per
/// dimension, every pair of antecedents is ordered by precedence.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleBase {
    rules: Vec<Rule>,
    dimension: usize,
}

impl RuleBase {
    pub fn new(rules: Vec<Rule>) -> Result<Self> {
        let dimension = rules.first().ok_or(FriError::Empty("rule base"))?.dimension();
        for rule in &rules {
            if rule.dimension() != dimension {
                return Err(FriError::DimensionMismatch {
                    expected: dimension,
                    found: rule.dimension(),
                });
            }
        }
        for (i, ri) in rules.iter().enumerate() {
            for (j, rj) in rules.iter().enumerate().skip(i + 1) {
                for d in 0..dimension {
                    let (a, b) = (&ri.antecedents[d], &rj.antecedents[d]);
                    if !(a.precedes(b) || b.precedes(a)) {
                        return Err(FriError::NotComparable {
                            first: i,
                            second: j,
                            dimension: d,
                        });
                    }
                }
            }
        }
        Ok(Self { rules, dimension })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

/// Raw characteristic points of an interpolated conclusion: left support,
/// left core, right core, right support. Not necessarily monotone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConclusionPoints(pub [f64; 4]);

impl ConclusionPoints {
    pub fn points(&self) -> [f64; 4] {
        self.0
    }

    pub fn is_monotone(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1] + TOL)
    }
}

impl fmt::Display for ConclusionPoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "[{a} {b} {c} {d}]")
    }
}

/// One sampled level of the interpolated conclusion. `inf > sup` is allowed
/// and marks an inverted (abnormal) level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileLevel {
    pub level: f64,
    pub inf: f64,
    pub sup: f64,
}

impl ProfileLevel {
    pub fn gap(&self) -> f64 {
        self.sup - self.inf
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaProfile {
    levels: Vec<ProfileLevel>,
}

impl AlphaProfile {
    pub fn levels(&self) -> &[ProfileLevel] {
        &self.levels
    }

    pub fn first(&self) -> &ProfileLevel {
        &self.levels[0]
    }

    pub fn last(&self) -> &ProfileLevel {
        &self.levels[self.levels.len() - 1]
    }

    /// Infimum non-decreasing and supremum non-increasing in α.
    pub fn is_nested(&self) -> bool {
        self.levels
            .windows(2)
            .all(|w| w[1].inf >= w[0].inf - TOL && w[1].sup <= w[0].sup + TOL)
    }
}

/// Assembled conclusion: a proper set when the points are ordered, otherwise
/// the raw vertex traversal.
#[derive(Debug, Clone, PartialEq)]
pub enum Conclusion {
    Normal(TrapezoidSet),
    Abnormal(GradedPointList),
}

impl Conclusion {
    pub fn is_normal(&self) -> bool {
        matches!(self, Conclusion::Normal(_))
    }
}

/// Weighted mean `(d2·b1 + d1·b2) / (d1 + d2)`.
///
/// A zero distance to one side yields that side's consequent point (the
/// continuous extension of the mean); zero distance to both sides is a
/// [`FriError::ZeroSpan`].
pub fn interpolate_point(b1: f64, b2: f64, d1: f64, d2: f64, point: usize) -> Result<f64> {
    if d1 == 0.0 && d2 == 0.0 {
        return Err(FriError::ZeroSpan { point });
    }
    if d1 == 0.0 {
        return Ok(b1);
    }
    if d2 == 0.0 {
        return Ok(b2);
    }
    Ok((d2 * b1 + d1 * b2) / (d1 + d2))
}

/// Lower and upper distance of `a < b` at level `alpha`:
/// `inf(b_α) − inf(a_α)` and `sup(b_α) − sup(a_α)`.
pub fn lower_upper_distance(a: &TrapezoidSet, b: &TrapezoidSet, alpha: f64) -> Result<(f64, f64)> {
    if !a.precedes(b) {
        return Err(FriError::OrderingViolation(format!("{a} does not precede {b}")));
    }
    let ca = a.alpha_cut(alpha)?;
    let cb = b.alpha_cut(alpha)?;
    Ok((cb.lo() - ca.lo(), cb.hi() - ca.hi()))
}

fn check_dimension(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(FriError::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn check_flanked(lower: &Rule, upper: &Rule, obs: &Observation) -> Result<()> {
    let k = obs.dimension();
    check_dimension(k, lower.dimension())?;
    check_dimension(k, upper.dimension())?;
    for d in 0..k {
        let x = &obs.sets[d];
        if !lower.antecedents[d].precedes(x) {
            return Err(FriError::OrderingViolation(format!(
                "lower antecedent {} does not precede observation {x} in dimension {d}",
                lower.antecedents[d]
            )));
        }
        if !x.precedes(&upper.antecedents[d]) {
            return Err(FriError::OrderingViolation(format!(
                "observation {x} does not precede upper antecedent {} in dimension {d}",
                upper.antecedents[d]
            )));
        }
    }
    Ok(())
}

/// Picks the rules immediately left and right of the observation.
///
/// A lower candidate must precede the observation in every dimension, an
/// upper candidate must be preceded by it. Among candidates the one with the
/// smallest aggregated support-endpoint distance wins; ties go to the
/// earlier rule.
pub fn select_flanking<'a>(rb: &'a RuleBase, obs: &Observation) -> Result<(&'a Rule, &'a Rule)> {
    select_flanking_with(rb, obs, Metric::default())
}

pub fn select_flanking_with<'a>(
    rb: &'a RuleBase,
    obs: &Observation,
    metric: Metric,
) -> Result<(&'a Rule, &'a Rule)> {
    check_dimension(rb.dimension(), obs.dimension())?;
    let support_distance = |rule: &Rule| {
        let left = metric.aggregate(
            rule.antecedents
                .iter()
                .zip(&obs.sets)
                .map(|(a, x)| x.point(0) - a.point(0)),
        );
        let right = metric.aggregate(
            rule.antecedents
                .iter()
                .zip(&obs.sets)
                .map(|(a, x)| x.point(3) - a.point(3)),
        );
        left + right
    };

    let mut lower: Option<(&Rule, f64)> = None;
    let mut upper: Option<(&Rule, f64)> = None;
    for rule in rb.rules() {
        let pairs = || rule.antecedents.iter().zip(&obs.sets);
        if pairs().all(|(a, x)| a.precedes(x)) {
            let d = support_distance(rule);
            if lower.map_or(true, |(_, best)| d < best) {
                lower = Some((rule, d));
            }
        } else if pairs().all(|(a, x)| x.precedes(a)) {
            let d = support_distance(rule);
            if upper.map_or(true, |(_, best)| d < best) {
                upper = Some((rule, d));
            }
        }
    }

    match (lower, upper) {
        (Some((l, _)), Some((u, _))) => Ok((l, u)),
        _ => {
            // Report the first dimension lacking a neighbour.
            let side = if lower.is_none() { "precedes" } else { "succeeds" };
            let dimension = (0..obs.dimension())
                .find(|&d| {
                    !rb.rules().iter().any(|r| {
                        if lower.is_none() {
                            r.antecedents[d].precedes(&obs.sets[d])
                        } else {
                            obs.sets[d].precedes(&r.antecedents[d])
                        }
                    })
                })
                .unwrap_or(0);
            Err(FriError::NotFlanked { dimension, side })
        }
    }
}

/// KH conclusion at the four characteristic points.
///
/// For point `j`: `y_j = (d2_j·b1_j + d1_j·b2_j) / (d1_j + d2_j)`, with
/// `d1_j` the distance from the lower antecedent to the observation and
/// `d2_j` from the observation to the upper antecedent, aggregated across
/// input dimensions by root-sum-square. The result is not sorted.
pub fn kh_characteristic_points(lower: &Rule, upper: &Rule, obs: &Observation) -> Result<ConclusionPoints> {
    kh_characteristic_points_with(lower, upper, obs, Metric::default())
}

pub fn kh_characteristic_points_with(
    lower: &Rule,
    upper: &Rule,
    obs: &Observation,
    metric: Metric,
) -> Result<ConclusionPoints> {
    check_flanked(lower, upper, obs)?;
    let mut y = [0.0; 4];
    for (j, yj) in y.iter_mut().enumerate() {
        let d1 = metric.aggregate(
            lower.antecedents.iter().zip(&obs.sets).map(|(a, x)| x.point(j) - a.point(j)),
        );
        let d2 = metric.aggregate(
            upper.antecedents.iter().zip(&obs.sets).map(|(a, x)| a.point(j) - x.point(j)),
        );
        *yj = interpolate_point(lower.consequent.point(j), upper.consequent.point(j), d1, d2, j)?;
    }
    Ok(ConclusionPoints(y))
}

/// Samples the KH conclusion at `n_levels` equally spaced α-levels from 0 to
/// 1 inclusive, interpolating the lower and upper cut endpoints separately.
pub fn kh_alpha_profile(lower: &Rule, upper: &Rule, obs: &Observation, n_levels: usize) -> Result<AlphaProfile> {
    kh_alpha_profile_with(lower, upper, obs, n_levels, Metric::default())
}

pub fn kh_alpha_profile_with(
    lower: &Rule,
    upper: &Rule,
    obs: &Observation,
    n_levels: usize,
    metric: Metric,
) -> Result<AlphaProfile> {
    if n_levels < 2 {
        return Err(FriError::InvalidParameter(format!(
            "an alpha profile needs at least 2 levels, got {n_levels}"
        )));
    }
    check_flanked(lower, upper, obs)?;
    let steps = (n_levels - 1) as f64;
    let levels = (0..n_levels)
        .map(|i| {
            let alpha = i as f64 / steps;
            let cuts = |sets: &[TrapezoidSet]| sets.iter().map(|s| s.cut_bounds(alpha)).collect::<Vec<_>>();
            let (a1, a2, x) = (cuts(&lower.antecedents), cuts(&upper.antecedents), cuts(&obs.sets));
            let (b1, b2) = (lower.consequent.cut_bounds(alpha), upper.consequent.cut_bounds(alpha));

            let dl1 = metric.aggregate(a1.iter().zip(&x).map(|(a, x)| x.0 - a.0));
            let dl2 = metric.aggregate(a2.iter().zip(&x).map(|(a, x)| a.0 - x.0));
            let du1 = metric.aggregate(a1.iter().zip(&x).map(|(a, x)| x.1 - a.1));
            let du2 = metric.aggregate(a2.iter().zip(&x).map(|(a, x)| a.1 - x.1));
            // Point indices in errors refer to the α = 0 / α = 1 endpoints.
            let inf = interpolate_point(b1.0, b2.0, dl1, dl2, if alpha < 1.0 { 0 } else { 1 })?;
            let sup = interpolate_point(b1.1, b2.1, du1, du2, if alpha < 1.0 { 3 } else { 2 })?;
            Ok(ProfileLevel { level: alpha, inf, sup })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlphaProfile { levels })
}

/// Stabilised KH: every rule contributes to each characteristic point with
/// weight `1 / d^exponent`, where `d` is the aggregated distance between the
/// rule's antecedent point and the observation point. A zero distance makes
/// that rule's consequent point the answer.
///
/// With exactly two flanking rules and `exponent = 1` this is
/// [`kh_characteristic_points`].
pub fn khstab_points(rb: &RuleBase, obs: &Observation, exponent: f64) -> Result<ConclusionPoints> {
    khstab_points_with(rb, obs, exponent, Metric::default())
}

pub fn khstab_points_with(rb: &RuleBase, obs: &Observation, exponent: f64, metric: Metric) -> Result<ConclusionPoints> {
    if !(exponent.is_finite() && exponent > 0.0) {
        return Err(FriError::InvalidParameter(format!(
            "KHstab exponent must be positive, got {exponent}"
        )));
    }
    check_dimension(rb.dimension(), obs.dimension())?;
    for (i, rule) in rb.rules().iter().enumerate() {
        for (d, (a, x)) in rule.antecedents.iter().zip(&obs.sets).enumerate() {
            if !(a.precedes(x) || x.precedes(a) || a == x) {
                return Err(FriError::OrderingViolation(format!(
                    "antecedent {a} of rule {i} is not comparable with observation {x} in dimension {d}"
                )));
            }
        }
    }

    let mut y = [0.0; 4];
    for (j, yj) in y.iter_mut().enumerate() {
        let mut num = 0.0;
        let mut den = 0.0;
        let mut exact = None;
        for rule in rb.rules() {
            let d = metric.aggregate(
                rule.antecedents.iter().zip(&obs.sets).map(|(a, x)| x.point(j) - a.point(j)),
            );
            if d == 0.0 {
                exact = Some(rule.consequent.point(j));
                break;
            }
            let w = if exponent == 1.0 { 1.0 / d } else { d.powf(-exponent) };
            num += w * rule.consequent.point(j);
            den += w;
        }
        *yj = exact.unwrap_or(num / den);
    }
    Ok(ConclusionPoints(y))
}

/// Normal set when `y1 <= y2 <= y3 <= y4` within tolerance, otherwise the raw
/// traversal.
pub fn assemble_conclusion(p: &ConclusionPoints) -> Conclusion {
    if p.is_monotone() {
        // Absorb sub-tolerance inversions.
        let mut q = p.0;
        for j in 1..4 {
            q[j] = q[j].max(q[j - 1]);
        }
        match TrapezoidSet::from_points(q) {
            Ok(set) => Conclusion::Normal(set),
            Err(_) => Conclusion::Abnormal(GradedPointList::from_characteristic(p.0)),
        }
    } else {
        Conclusion::Abnormal(GradedPointList::from_characteristic(p.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(p: [f64; 4]) -> TrapezoidSet {
        TrapezoidSet::from_points(p).unwrap()
    }

    fn rule(a: [f64; 4], b: [f64; 4]) -> Rule {
        Rule::single(set(a), set(b))
    }

    fn close(a: [f64; 4], b: [f64; 4], tol: f64) -> bool {
        a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn distances() {
        let d = lower_upper_distance(&set([1.0, 2.0, 3.0, 4.0]), &set([6.0, 7.0, 8.0, 9.0]), 0.0).unwrap();
        assert_eq!(d, (5.0, 5.0));
        let d = lower_upper_distance(&set([2.0; 4]), &set([4.5, 5.0, 5.0, 5.5]), 0.0).unwrap();
        assert_eq!(d, (2.5, 3.5));
        let d = lower_upper_distance(&set([1.0, 2.0, 3.0, 4.0]), &set([4.2, 5.2, 5.2, 6.7]), 1.0).unwrap();
        assert!((d.0 - 3.2).abs() < 1e-12 && (d.1 - 2.2).abs() < 1e-12);
        assert!(matches!(
            lower_upper_distance(&set([6.0, 7.0, 8.0, 9.0]), &set([1.0, 2.0, 3.0, 4.0]), 0.5),
            Err(FriError::OrderingViolation(_))
        ));
    }

    #[test]
    fn characteristic_points_examples() {
        // Table IV sets
        let p = kh_characteristic_points(
            &rule([1.0, 2.0, 3.0, 4.0], [1.5, 2.5, 2.5, 3.8]),
            &rule([6.0, 7.0, 8.0, 9.0], [6.5, 7.5, 7.5, 9.0]),
            &Observation::single(set([4.2, 5.2, 5.2, 6.7])),
        )
        .unwrap();
        assert!(close(p.0, [4.7, 5.7, 4.7, 6.608], 1e-9), "{p}");

        // Table II, first example
        let p = kh_characteristic_points(
            &rule([1.0, 2.5, 2.5, 4.0], [1.0, 2.5, 2.5, 4.0]),
            &rule([6.0, 7.5, 7.5, 9.0], [6.0, 7.5, 7.5, 9.0]),
            &Observation::single(set([4.5, 5.0, 5.0, 5.5])),
        )
        .unwrap();
        assert!(close(p.0, [4.5, 5.0, 5.0, 5.5], 1e-9), "{p}");

        // midpoint gives the average consequent
        let p = kh_characteristic_points(
            &rule([0.0, 1.0, 2.0, 3.0], [0.0, 1.0, 2.0, 3.0]),
            &rule([10.0, 11.0, 12.0, 13.0], [10.0, 11.0, 12.0, 13.0]),
            &Observation::single(set([5.0, 6.0, 7.0, 8.0])),
        )
        .unwrap();
        assert!(close(p.0, [5.0, 6.0, 7.0, 8.0], 1e-12));
    }

    #[test]
    fn unflanked_observation_is_rejected() {
        let err = kh_characteristic_points(
            &rule([1.0, 2.0, 3.0, 4.0], [0.0; 4]),
            &rule([6.0, 7.0, 8.0, 9.0], [1.0; 4]),
            &Observation::single(set([0.5, 5.0, 5.0, 6.0])),
        )
        .unwrap_err();
        assert!(matches!(err, FriError::OrderingViolation(_)));
    }

    #[test]
    fn interpolate_point_limits() {
        assert_eq!(interpolate_point(1.0, 9.0, 0.0, 3.0, 0), Ok(1.0));
        assert_eq!(interpolate_point(1.0, 9.0, 3.0, 0.0, 0), Ok(9.0));
        assert_eq!(interpolate_point(1.0, 9.0, 0.0, 0.0, 2), Err(FriError::ZeroSpan { point: 2 }));
        assert_eq!(interpolate_point(0.0, 4.0, 1.0, 3.0, 0), Ok(1.0));
    }

    #[test]
    fn flanking_selection() {
        let rb = RuleBase::new(vec![
            rule([1.0, 2.0, 3.0, 4.0], [0.0; 4]),
            rule([11.0, 12.0, 13.0, 14.0], [2.0; 4]),
            rule([6.0, 7.0, 8.0, 9.0], [1.0; 4]),
        ])
        .unwrap();
        let obs = Observation::single(set([4.5, 5.0, 5.0, 5.5]));
        let (l, u) = select_flanking(&rb, &obs).unwrap();
        assert_eq!(l, &rb.rules()[0]);
        assert_eq!(u, &rb.rules()[2]);

        let left = Observation::single(set([-3.0, -2.0, -2.0, -1.0]));
        assert_eq!(
            select_flanking(&rb, &left),
            Err(FriError::NotFlanked { dimension: 0, side: "precedes" })
        );
        let right = Observation::single(set([20.0; 4]));
        assert_eq!(
            select_flanking(&rb, &right),
            Err(FriError::NotFlanked { dimension: 0, side: "succeeds" })
        );
    }

    #[test]
    fn rule_base_validation() {
        let overlapping = RuleBase::new(vec![
            rule([1.0, 2.0, 3.0, 4.0], [0.0; 4]),
            rule([0.5, 2.5, 3.5, 5.0], [1.0; 4]),
        ]);
        assert!(matches!(overlapping, Err(FriError::NotComparable { .. })));
        let mixed = RuleBase::new(vec![
            rule([1.0, 2.0, 3.0, 4.0], [0.0; 4]),
            Rule::new(vec![set([6.0; 4]), set([7.0; 4])], set([1.0; 4])).unwrap(),
        ]);
        assert_eq!(mixed, Err(FriError::DimensionMismatch { expected: 1, found: 2 }));
        assert_eq!(RuleBase::new(vec![]), Err(FriError::Empty("rule base")));
    }

    #[test]
    fn profile_endpoints_and_inversion() {
        let lower = rule([1.0, 2.0, 3.0, 4.0], [1.5, 2.5, 2.5, 3.8]);
        let upper = rule([6.0, 7.0, 8.0, 9.0], [6.5, 7.5, 7.5, 9.0]);
        let obs = Observation::single(set([4.2, 5.2, 5.2, 6.7]));
        let profile = kh_alpha_profile(&lower, &upper, &obs, 11).unwrap();
        let top = profile.last();
        assert_eq!(top.level, 1.0);
        assert!((top.inf - 5.7).abs() < 1e-9 && (top.sup - 4.7).abs() < 1e-9);
        assert!((top.gap() + 1.0).abs() < 1e-9);
        let pts = kh_characteristic_points(&lower, &upper, &obs).unwrap().0;
        assert!((profile.first().inf - pts[0]).abs() <= 1e-9);
        assert!((profile.first().sup - pts[3]).abs() <= 1e-9);
        assert!(kh_alpha_profile(&lower, &upper, &obs, 1).is_err());
    }

    #[test]
    fn khstab_matches_kh_on_two_rules() {
        let rb = RuleBase::new(vec![
            rule([1.0, 2.0, 3.0, 4.0], [1.5, 2.5, 2.5, 3.8]),
            rule([6.0, 7.0, 8.0, 9.0], [6.5, 7.5, 7.5, 9.0]),
        ])
        .unwrap();
        let obs = Observation::single(set([4.2, 5.2, 5.2, 6.7]));
        let p = khstab_points(&rb, &obs, 1.0).unwrap();
        assert!(close(p.0, [4.7, 5.7, 4.7, 6.608], 1e-9));

        let single = RuleBase::new(vec![rule([1.0, 2.0, 3.0, 4.0], [7.0, 8.0, 8.5, 9.0])]).unwrap();
        let p = khstab_points(&single, &obs, 2.0).unwrap();
        assert_eq!(p.0, [7.0, 8.0, 8.5, 9.0]);
        assert!(khstab_points(&rb, &obs, 0.0).is_err());
    }

    #[test]
    fn khstab_zero_distance_takes_that_rule() {
        let rb = RuleBase::new(vec![
            rule([1.0, 2.0, 3.0, 4.0], [10.0, 11.0, 12.0, 13.0]),
            rule([6.0, 7.0, 8.0, 9.0], [20.0; 4]),
        ])
        .unwrap();
        let obs = Observation::single(set([1.0, 2.0, 3.0, 4.0]));
        assert_eq!(khstab_points(&rb, &obs, 1.0).unwrap().0, [10.0, 11.0, 12.0, 13.0]);
    }

    #[test]
    fn assembly() {
        assert!(assemble_conclusion(&ConclusionPoints([4.0, 4.5, 5.5, 6.0])).is_normal());
        assert!(!assemble_conclusion(&ConclusionPoints([4.7, 5.7, 4.7, 6.6])).is_normal());
        match assemble_conclusion(&ConclusionPoints([5.0; 4])) {
            Conclusion::Normal(s) => assert!(s.is_singleton()),
            other => panic!("{other:?}"),
        }
        match assemble_conclusion(&ConclusionPoints([1.0, 2.0 + 1e-12, 2.0, 3.0])) {
            Conclusion::Normal(s) => assert!(s.points()[1] <= s.points()[2]),
            other => panic!("{other:?}"),
        }
        match assemble_conclusion(&ConclusionPoints([4.7, 5.7, 4.7, 6.6])) {
            Conclusion::Abnormal(g) => {
                assert_eq!(g.points(), &[(4.7, 0.0), (5.7, 1.0), (4.7, 1.0), (6.6, 0.0)])
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn minkowski_metric() {
        assert_eq!(Metric::default().aggregate([3.0, -4.0]), 5.0);
        assert_eq!(Metric::minkowski(1.0).unwrap().aggregate([3.0, -4.0]), 7.0);
        let m3 = Metric::minkowski(3.0).unwrap().aggregate([1.0, 1.0]);
        assert!((m3 - 2f64.powf(1.0 / 3.0)).abs() < 1e-12);
        assert!(Metric::minkowski(0.5).is_err());
    }
}
