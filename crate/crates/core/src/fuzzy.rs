//! Piecewise-linear convex normal fuzzy sets.
//!
//! Every set is held in the four-point canonical form `(a1, a2, a3, a4)`:
//! support `[a1, a4]`, kernel `[a2, a3]`, linear flanks in between.
//! Triangles have `a2 == a3`, singletons have all four points equal.

use std::fmt;

use crate::error::{FriError, Result};
use crate::TOL;

/// Closed real interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        for v in [lo, hi] {
            if !v.is_finite() {
                return Err(FriError::NonFinite(v));
            }
        }
        if lo > hi {
            return Err(FriError::OrderingViolation(format!(
                "interval lower bound {lo} exceeds upper bound {hi}"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// An α-level together with the crisp interval at that level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaCut {
    pub level: f64,
    pub cut: Interval,
}

/// Support, kernel, width and height of a set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SetFeatures {
    pub support: Interval,
    pub kernel: Interval,
    pub width: f64,
    pub height: f64,
}

/// Trapezoidal convex normal fuzzy set in four-point canonical form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidSet {
    points: [f64; 4],
}

impl TrapezoidSet {
    /// Builds a set from its four characteristic abscissas.
    ///
    /// Fails with [`FriError::OrderingViolation`] naming the first pair that
    /// breaks `a1 <= a2 <= a3 <= a4`.
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64) -> Result<Self> {
        Self::from_points([a1, a2, a3, a4])
    }

    pub fn from_points(points: [f64; 4]) -> Result<Self> {
        if let Some(v) = points.iter().find(|v| !v.is_finite()) {
            return Err(FriError::NonFinite(*v));
        }
        for i in 0..3 {
            if points[i] > points[i + 1] {
                return Err(FriError::OrderingViolation(format!(
                    "a{} = {} exceeds a{} = {}",
                    i + 1,
                    points[i],
                    i + 2,
                    points[i + 1]
                )));
            }
        }
        Ok(Self { points })
    }

    /// Triangle `(a, b, c)`, stored as `(a, b, b, c)`.
    pub fn triangle(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(a, b, b, c)
    }

    pub fn singleton(x: f64) -> Result<Self> {
        Self::new(x, x, x, x)
    }

    /// Accepts the 1-, 3- and 4-number encodings.
    pub fn from_slice(values: &[f64]) -> Result<Self> {
        match *values {
            [x] => Self::singleton(x),
            [a, b, c] => Self::triangle(a, b, c),
            [a, b, c, d] => Self::new(a, b, c, d),
            _ => Err(FriError::InvalidParameter(format!(
                "a fuzzy set needs 1, 3 or 4 numbers, got {}",
                values.len()
            ))),
        }
    }

    pub fn points(&self) -> [f64; 4] {
        self.points
    }

    /// Characteristic point `j` in `0..4`.
    pub fn point(&self, j: usize) -> f64 {
        self.points[j]
    }

    pub fn is_triangle(&self) -> bool {
        self.points[1] == self.points[2]
    }

    pub fn is_singleton(&self) -> bool {
        self.points.iter().all(|&v| v == self.points[0])
    }

    pub fn membership(&self, x: f64) -> f64 {
        let [a1, a2, a3, a4] = self.points;
        if x < a1 || x > a4 {
            0.0
        } else if x < a2 {
            (x - a1) / (a2 - a1)
        } else if x <= a3 {
            1.0
        } else {
            (a4 - x) / (a4 - a3)
        }
    }

    /// α-cut `[a1 + α(a2 − a1), a4 − α(a4 − a3)]`. The level-0 cut is the
    /// closed support.
    pub fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(FriError::Domain(alpha));
        }
        let (lo, hi) = self.cut_bounds(alpha);
        Ok(Interval { lo, hi: hi.max(lo) })
    }

    // Written as convex combinations so that levels 0 and 1 land exactly on
    // the characteristic points.
    pub(crate) fn cut_bounds(&self, alpha: f64) -> (f64, f64) {
        let [a1, a2, a3, a4] = self.points;
        let lo = (1.0 - alpha) * a1 + alpha * a2;
        let hi = (1.0 - alpha) * a4 + alpha * a3;
        (lo, hi)
    }

    pub fn support(&self) -> Interval {
        Interval {
            lo: self.points[0],
            hi: self.points[3],
        }
    }

    pub fn kernel(&self) -> Interval {
        Interval {
            lo: self.points[1],
            hi: self.points[2],
        }
    }

    pub fn width(&self) -> f64 {
        self.points[3] - self.points[0]
    }

    pub fn features(&self) -> SetFeatures {
        SetFeatures {
            support: self.support(),
            kernel: self.kernel(),
            width: self.width(),
            height: 1.0,
        }
    }

    /// Strict precedence `self < other`: for every α in (0, 1] both the
    /// infimum and the supremum of `self`'s cut lie strictly left of
    /// `other`'s.
    ///
    /// The cut endpoints are affine in α, so their difference is affine too;
    /// an affine function strictly positive at α → 0⁺ and at α = 1 is
    /// strictly positive in between. It is therefore enough to compare the
    /// four characteristic points.
    pub fn precedes(&self, other: &TrapezoidSet) -> bool {
        self.points
            .iter()
            .zip(other.points.iter())
            .all(|(a, b)| a < b)
    }

    pub fn translate(&self, shift: f64) -> TrapezoidSet {
        TrapezoidSet {
            points: self.points.map(|v| v + shift),
        }
    }

    /// Scales every abscissa by `factor > 0`.
    pub fn scale(&self, factor: f64) -> TrapezoidSet {
        debug_assert!(factor > 0.0);
        TrapezoidSet {
            points: self.points.map(|v| v * factor),
        }
    }

    /// Reflection `x -> -x`; reverses the point order.
    pub fn mirror(&self) -> TrapezoidSet {
        let [a1, a2, a3, a4] = self.points;
        TrapezoidSet {
            points: [-a4, -a3, -a2, -a1],
        }
    }

    /// Vertices `(a1,0) (a2,1) (a3,1) (a4,0)`.
    pub fn to_graded_points(&self) -> GradedPointList {
        GradedPointList::from_characteristic(self.points)
    }
}

impl fmt::Display for TrapezoidSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4] = self.points;
        write!(f, "[{a1} {a2} {a3} {a4}]")
    }
}

/// Vertex list of a piecewise-linear membership curve. Abscissas need not be
/// monotone: an abnormal interpolation result is represented exactly as the
/// raw traversal of its characteristic points.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedPointList {
    points: Vec<(f64, f64)>,
}

impl GradedPointList {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(FriError::Empty("graded point list"));
        }
        for &(x, g) in &points {
            if !x.is_finite() {
                return Err(FriError::NonFinite(x));
            }
            if !(0.0..=1.0).contains(&g) {
                return Err(FriError::Domain(g));
            }
        }
        Ok(Self { points })
    }

    /// Raw traversal `(y1,0) (y2,1) (y3,1) (y4,0)`.
    pub fn from_characteristic(y: [f64; 4]) -> Self {
        Self {
            points: vec![(y[0], 0.0), (y[1], 1.0), (y[2], 1.0), (y[3], 0.0)],
        }
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Grades rise (weakly) to a peak and then fall (weakly).
    fn is_unimodal(&self) -> bool {
        let grades: Vec<f64> = self.points.iter().map(|p| p.1).collect();
        let mut i = 1;
        while i < grades.len() && grades[i] >= grades[i - 1] {
            i += 1;
        }
        while i < grades.len() && grades[i] <= grades[i - 1] {
            i += 1;
        }
        i == grades.len()
    }

    /// Convexity and normality of the curve.
    ///
    /// * convex: grades are unimodal along the traversal, so each α-level
    ///   meets the curve in one connected piece;
    /// * normal: the peak grade is 1 and the abscissas never step backwards
    ///   along the traversal, i.e. the curve is a genuine membership function.
    pub fn check_convex_normal(&self) -> (bool, bool) {
        let convex = self.is_unimodal();
        let peak = self.points.iter().map(|p| p.1).fold(0.0, f64::max);
        let monotone = self.points.windows(2).all(|w| w[0].0 <= w[1].0 + TOL);
        (convex, (peak - 1.0).abs() <= TOL && monotone)
    }
}

/// Free-function form of [`GradedPointList::check_convex_normal`].
pub fn check_convex_normal(points: &GradedPointList) -> (bool, bool) {
    points.check_convex_normal()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(p: [f64; 4]) -> TrapezoidSet {
        TrapezoidSet::from_points(p).unwrap()
    }

    #[test]
    fn construction_and_special_shapes() {
        assert_eq!(set([1.0, 2.0, 3.0, 4.0]).points(), [1.0, 2.0, 3.0, 4.0]);
        let s = TrapezoidSet::new(2.0, 2.0, 2.0, 2.0).unwrap();
        assert!(s.is_singleton() && s.is_triangle());
        assert_eq!(TrapezoidSet::triangle(1.0, 2.5, 4.0).unwrap().points(), [1.0, 2.5, 2.5, 4.0]);
        assert_eq!(TrapezoidSet::from_slice(&[2.0]).unwrap().points(), [2.0; 4]);
        assert!(TrapezoidSet::from_slice(&[1.0, 2.0]).is_err());
    }

    #[test]
    fn ordering_violation_names_first_bad_pair() {
        let err = TrapezoidSet::new(1.0, 3.0, 2.0, 4.0).unwrap_err();
        match err {
            FriError::OrderingViolation(msg) => assert!(msg.contains("a2 = 3 exceeds a3 = 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            TrapezoidSet::new(f64::NAN, 1.0, 2.0, 3.0),
            Err(FriError::NonFinite(_))
        ));
    }

    #[test]
    fn membership_grades() {
        let s = set([1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.membership(2.5), 1.0);
        assert_eq!(s.membership(1.5), 0.5);
        assert_eq!(s.membership(0.5), 0.0);
        assert_eq!(s.membership(3.75), 0.25);
        let single = set([2.0; 4]);
        assert_eq!(single.membership(2.0), 1.0);
        assert_eq!(single.membership(2.1), 0.0);
    }

    #[test]
    fn alpha_cuts() {
        let s = set([1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.alpha_cut(1.0).unwrap(), Interval::new(2.0, 3.0).unwrap());
        assert_eq!(s.alpha_cut(0.5).unwrap(), Interval::new(1.5, 3.5).unwrap());
        assert_eq!(s.alpha_cut(0.0).unwrap(), s.support());
        assert_eq!(set([2.0; 4]).alpha_cut(0.7).unwrap(), Interval::new(2.0, 2.0).unwrap());
        assert_eq!(s.alpha_cut(1.5), Err(FriError::Domain(1.5)));
        assert_eq!(s.alpha_cut(-0.1), Err(FriError::Domain(-0.1)));
    }

    #[test]
    fn features() {
        let f = set([1.0, 2.0, 3.0, 4.0]).features();
        assert_eq!(f.support, Interval::new(1.0, 4.0).unwrap());
        assert_eq!(f.kernel, Interval::new(2.0, 3.0).unwrap());
        assert_eq!((f.width, f.height), (3.0, 1.0));
        let f = set([2.0; 4]).features();
        assert_eq!((f.width, f.height), (0.0, 1.0));
        let f = set([4.5, 5.0, 5.0, 5.5]).features();
        assert_eq!(f.kernel, Interval::new(5.0, 5.0).unwrap());
        assert_eq!(f.width, 1.0);
    }

    #[test]
    fn convex_normal_checks() {
        let ok = GradedPointList::from_characteristic([4.0, 4.8, 5.2, 6.0]);
        assert_eq!(ok.check_convex_normal(), (true, true));
        let inverted = GradedPointList::from_characteristic([4.7, 5.7, 4.7, 6.6]);
        let (convex, normal) = inverted.check_convex_normal();
        assert!(convex);
        assert!(!normal);
        let single = GradedPointList::from_characteristic([5.0; 4]);
        assert_eq!(single.check_convex_normal(), (true, true));
        let bumpy =
            GradedPointList::new(vec![(0.0, 0.0), (1.0, 1.0), (2.0, 0.3), (3.0, 0.8), (4.0, 0.0)]).unwrap();
        assert_eq!(bumpy.check_convex_normal().0, false);
        let low = GradedPointList::new(vec![(0.0, 0.0), (1.0, 0.6), (2.0, 0.0)]).unwrap();
        assert_eq!(low.check_convex_normal(), (true, false));
        assert!(GradedPointList::new(vec![(0.0, 1.5)]).is_err());
        assert!(GradedPointList::new(vec![]).is_err());
    }

    #[test]
    fn precedence() {
        let a = set([1.0, 2.0, 3.0, 4.0]);
        assert!(a.precedes(&set([6.0, 7.0, 8.0, 9.0])));
        assert!(!a.precedes(&a));
        assert!(!a.precedes(&set([0.0, 3.0, 4.0, 5.0])));
        // kernel touches: sup at α = 1 is not strictly ordered
        assert!(!a.precedes(&set([1.5, 2.5, 3.0, 4.5])));
    }

    #[test]
    fn mirror_reverses() {
        assert_eq!(set([1.0, 2.0, 3.0, 5.0]).mirror().points(), [-5.0, -3.0, -2.0, -1.0]);
    }
}
