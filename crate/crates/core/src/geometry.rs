//! Boundary curves, regions, and their discretizations.
//!
//! A region is bounded by one outer curve traversed counterclockwise and any
//! number of hole curves traversed clockwise. Every curve is a 2π-periodic
//! parametrization `t -> η(t)` with nonvanishing velocity, supplied either as
//! an ellipse (center, semi-axes, rotation) or as generic closures for
//! position, velocity, and acceleration.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{MapError, Result};

/// Samples per curve used for validation and point location.
const PROBE_SAMPLES: usize = 512;

type CurveFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// One closed boundary curve.
///
/// Generic curves must come with caller-supplied first and second
/// derivatives; the kernel diagonal needs `η̈` and numerical differentiation
/// of user closures would contaminate it.
#[derive(Clone)]
pub enum CurveSpec {
    Ellipse {
        center: Complex64,
        /// Semi-axis along the rotated x direction.
        a: f64,
        /// Semi-axis along the rotated y direction. Negative values reverse
        /// the traversal direction (used for clockwise hole curves).
        b: f64,
        /// Rotation angle in radians.
        rot: f64,
    },
    Generic {
        pos: CurveFn,
        vel: CurveFn,
        acc: CurveFn,
    },
}

impl CurveSpec {
    pub fn ellipse(center: Complex64, a: f64, b: f64, rot: f64) -> Self {
        CurveSpec::Ellipse { center, a, b, rot }
    }

    /// Counterclockwise circle. Pass a negative radius for clockwise.
    pub fn circle(center: Complex64, radius: f64) -> Self {
        CurveSpec::Ellipse {
            center,
            a: radius.abs(),
            b: radius,
            rot: 0.0,
        }
    }

    pub fn generic<P, V, A>(pos: P, vel: V, acc: A) -> Self
    where
        P: Fn(f64) -> Complex64 + Send + Sync + 'static,
        V: Fn(f64) -> Complex64 + Send + Sync + 'static,
        A: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        CurveSpec::Generic {
            pos: Arc::new(pos),
            vel: Arc::new(vel),
            acc: Arc::new(acc),
        }
    }

    /// η(t)
    pub fn point(&self, t: f64) -> Complex64 {
        match self {
            CurveSpec::Ellipse { center, a, b, rot } => {
                center + Complex64::from_polar(1.0, *rot) * Complex64::new(a * t.cos(), b * t.sin())
            }
            CurveSpec::Generic { pos, .. } => pos(t),
        }
    }

    /// η̇(t)
    pub fn velocity(&self, t: f64) -> Complex64 {
        match self {
            CurveSpec::Ellipse { a, b, rot, .. } => {
                Complex64::from_polar(1.0, *rot) * Complex64::new(-a * t.sin(), b * t.cos())
            }
            CurveSpec::Generic { vel, .. } => vel(t),
        }
    }

    /// η̈(t)
    pub fn acceleration(&self, t: f64) -> Complex64 {
        match self {
            CurveSpec::Ellipse { a, b, rot, .. } => {
                Complex64::from_polar(1.0, *rot) * Complex64::new(-a * t.cos(), -b * t.sin())
            }
            CurveSpec::Generic { acc, .. } => acc(t),
        }
    }
}

impl fmt::Debug for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveSpec::Ellipse { center, a, b, rot } => f
                .debug_struct("Ellipse")
                .field("center", center)
                .field("a", a)
                .field("b", b)
                .field("rot", rot)
                .finish(),
            CurveSpec::Generic { .. } => f.write_str("Generic {..}"),
        }
    }
}

#[derive(Clone, Debug)]
struct ProbeTables {
    /// `PROBE_SAMPLES` points per curve.
    samples: Vec<Vec<Complex64>>,
    /// Bounding-box diagonal per curve.
    diameter: Vec<f64>,
}

/// Classification of a point relative to a region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointLocation {
    Interior,
    /// Index 0 is the unbounded component outside the outer curve; index
    /// `k >= 1` is the hole bounded by curve `k`.
    Exterior(usize),
    OnBoundary,
}

/// A bounded multiply connected region. Curve 0 is the outer boundary;
/// curves `1..=m` bound the holes. Immutable after construction.
#[derive(Clone, Debug)]
pub struct Region {
    curves: Vec<CurveSpec>,
    probe: OnceLock<ProbeTables>,
}

impl Region {
    /// Builds a region and verifies orientation, disjointness, and
    /// containment of the holes in the outer curve.
    pub fn new(curves: Vec<CurveSpec>) -> Result<Region> {
        if curves.is_empty() {
            return Err(MapError::NoBoundary);
        }
        let region = Region {
            curves,
            probe: OnceLock::new(),
        };
        region.validate()?;
        Ok(region)
    }

    pub fn curves(&self) -> &[CurveSpec] {
        &self.curves
    }

    pub fn num_curves(&self) -> usize {
        self.curves.len()
    }

    /// Number of holes `m`; the connectivity is `m + 1`.
    pub fn holes(&self) -> usize {
        self.curves.len() - 1
    }

    fn probe_tables(&self) -> &ProbeTables {
        self.probe.get_or_init(|| {
            let samples: Vec<Vec<Complex64>> = self
                .curves
                .iter()
                .map(|c| {
                    (0..PROBE_SAMPLES)
                        .map(|i| c.point(TAU * i as f64 / PROBE_SAMPLES as f64))
                        .collect()
                })
                .collect();
            let diameter = samples.iter().map(|s| bbox_diagonal(s)).collect();
            ProbeTables { samples, diameter }
        })
    }

    fn validate(&self) -> Result<()> {
        for (j, curve) in self.curves.iter().enumerate() {
            validate_curve(j, curve)?;
        }
        let tabs = self.probe_tables();

        // Orientation by signed area of the sampled polygon.
        for (j, samples) in tabs.samples.iter().enumerate() {
            let area = signed_area(samples);
            let ok = if j == 0 { area > 0.0 } else { area < 0.0 };
            if !ok {
                return Err(MapError::WrongOrientation { curve: j });
            }
        }

        // Pairwise disjoint: no touching vertices, no crossing segments.
        let scale = tabs.diameter.iter().cloned().fold(0.0, f64::max);
        for a in 0..self.curves.len() {
            for b in (a + 1)..self.curves.len() {
                let pa = &tabs.samples[a];
                let pb = &tabs.samples[b];
                if min_pointwise_distance(pa, pb) < 1e-12 * scale
                    || polygons_cross(pa, pb)
                {
                    return Err(MapError::CurvesIntersect { curve_a: a, curve_b: b });
                }
            }
        }

        // Each hole curve must lie inside the outer curve and outside the
        // other holes.
        for j in 1..self.curves.len() {
            let witness = tabs.samples[j][0];
            if polygon_winding(&tabs.samples[0], witness) != 1 {
                return Err(MapError::InvalidCurve {
                    curve: j,
                    reason: "not inside the outer boundary".into(),
                });
            }
            for k in 1..self.curves.len() {
                if k != j && polygon_winding(&tabs.samples[k], witness) != 0 {
                    return Err(MapError::InvalidCurve {
                        curve: j,
                        reason: format!("inside hole {k}"),
                    });
                }
            }
        }
        Ok(())
    }

    /// See [`locate_point`].
    pub fn locate(&self, z: Complex64) -> PointLocation {
        locate_point(self, z)
    }
}

fn validate_curve(j: usize, curve: &CurveSpec) -> Result<()> {
    match curve {
        CurveSpec::Ellipse { center, a, b, rot } => {
            let finite = center.re.is_finite()
                && center.im.is_finite()
                && a.is_finite()
                && b.is_finite()
                && rot.is_finite();
            if !finite {
                return Err(MapError::InvalidCurve {
                    curve: j,
                    reason: "non-finite ellipse parameter".into(),
                });
            }
            if *a == 0.0 || *b == 0.0 {
                return Err(MapError::InvalidCurve {
                    curve: j,
                    reason: "zero semi-axis".into(),
                });
            }
        }
        CurveSpec::Generic { pos, vel, .. } => {
            let mut max_speed: f64 = 0.0;
            let mut min_speed = f64::INFINITY;
            for i in 0..PROBE_SAMPLES {
                let t = TAU * i as f64 / PROBE_SAMPLES as f64;
                let p = pos(t);
                if !p.re.is_finite() || !p.im.is_finite() {
                    return Err(MapError::InvalidCurve {
                        curve: j,
                        reason: "non-finite point sample".into(),
                    });
                }
                let s = vel(t).norm();
                max_speed = max_speed.max(s);
                min_speed = min_speed.min(s);
            }
            if !(min_speed > 1e-12 * max_speed) {
                return Err(MapError::InvalidCurve {
                    curve: j,
                    reason: "vanishing velocity".into(),
                });
            }
            let gap = (pos(0.0) - pos(TAU)).norm();
            let diam = bbox_diagonal(
                &(0..PROBE_SAMPLES)
                    .map(|i| pos(TAU * i as f64 / PROBE_SAMPLES as f64))
                    .collect::<Vec<_>>(),
            );
            if gap > 1e-9 * diam.max(1e-300) {
                return Err(MapError::InvalidCurve {
                    curve: j,
                    reason: "not 2*pi-periodic".into(),
                });
            }
        }
    }
    Ok(())
}

/// Classifies `z` against the region boundary by polygon winding numbers of
/// densely sampled curves. Points within `1e-12` of a sampled boundary point
/// (relative to that curve's diameter) report `OnBoundary`; evaluation
/// formulas degrade there and callers must be warned.
pub fn locate_point(region: &Region, z: Complex64) -> PointLocation {
    let tabs = region.probe_tables();
    for (samples, diam) in tabs.samples.iter().zip(&tabs.diameter) {
        let tol = 1e-12 * diam;
        if samples.iter().any(|p| (p - z).norm() < tol) {
            return PointLocation::OnBoundary;
        }
    }
    if polygon_winding(&tabs.samples[0], z) != 1 {
        return PointLocation::Exterior(0);
    }
    for k in 1..tabs.samples.len() {
        if polygon_winding(&tabs.samples[k], z) != 0 {
            return PointLocation::Exterior(k);
        }
    }
    PointLocation::Interior
}

/// Winding number of a closed sampled curve about `z`, by summing the turn
/// angles of consecutive rays. Exact for points off the polygon.
pub fn polygon_winding(samples: &[Complex64], z: Complex64) -> i32 {
    let mut total = 0.0;
    for i in 0..samples.len() {
        let a = samples[i] - z;
        let b = samples[(i + 1) % samples.len()] - z;
        total += (b / a).arg();
    }
    (total / TAU).round() as i32
}

fn signed_area(samples: &[Complex64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..samples.len() {
        let p = samples[i];
        let q = samples[(i + 1) % samples.len()];
        acc += p.re * q.im - q.re * p.im;
    }
    0.5 * acc
}

fn bbox_diagonal(samples: &[Complex64]) -> f64 {
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in samples {
        xmin = xmin.min(p.re);
        xmax = xmax.max(p.re);
        ymin = ymin.min(p.im);
        ymax = ymax.max(p.im);
    }
    ((xmax - xmin).powi(2) + (ymax - ymin).powi(2)).sqrt()
}

fn min_pointwise_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for p in a {
        for q in b {
            best = best.min((p - q).norm());
        }
    }
    best
}

fn orient(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re)
}

fn segments_cross(a0: Complex64, a1: Complex64, b0: Complex64, b1: Complex64) -> bool {
    let d1 = orient(b0, b1, a0);
    let d2 = orient(b0, b1, a1);
    let d3 = orient(a0, a1, b0);
    let d4 = orient(a0, a1, b1);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

fn polygons_cross(a: &[Complex64], b: &[Complex64]) -> bool {
    for i in 0..a.len() {
        let a0 = a[i];
        let a1 = a[(i + 1) % a.len()];
        for j in 0..b.len() {
            if segments_cross(a0, a1, b[j], b[(j + 1) % b.len()]) {
                return true;
            }
        }
    }
    false
}

/// Boundary samples at `n` equidistant nodes `t_i = 2*pi*i/n` per curve.
///
/// Global node index is `curve * n + i`. Immutable after construction.
#[derive(Clone, Debug)]
pub struct Discretization {
    n: usize,
    num_curves: usize,
    eta: Vec<Complex64>,
    eta_dot: Vec<Complex64>,
    eta_ddot: Vec<Complex64>,
}

impl Discretization {
    /// Nodes per curve.
    pub fn nodes_per_curve(&self) -> usize {
        self.n
    }

    pub fn num_curves(&self) -> usize {
        self.num_curves
    }

    pub fn num_nodes(&self) -> usize {
        self.n * self.num_curves
    }

    /// Parameter value of global node `i`.
    pub fn t(&self, i: usize) -> f64 {
        TAU * (i % self.n) as f64 / self.n as f64
    }

    pub fn curve_of(&self, i: usize) -> usize {
        i / self.n
    }

    pub fn curve_range(&self, curve: usize) -> Range<usize> {
        curve * self.n..(curve + 1) * self.n
    }

    pub fn eta(&self) -> &[Complex64] {
        &self.eta
    }

    pub fn eta_dot(&self) -> &[Complex64] {
        &self.eta_dot
    }

    pub fn eta_ddot(&self) -> &[Complex64] {
        &self.eta_ddot
    }

    /// Largest node magnitude, used as the length scale for tolerances.
    pub fn scale(&self) -> f64 {
        self.eta.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Smallest distance from `z` to any boundary node.
    pub fn boundary_distance(&self, z: Complex64) -> f64 {
        self.eta.iter().map(|p| (p - z).norm()).fold(f64::INFINITY, f64::min)
    }
}

/// Samples η, η̇, η̈ at `n` equidistant nodes on every curve. `n` must be
/// even and at least 4.
pub fn sample_boundary(region: &Region, n: usize) -> Result<Discretization> {
    if n < 4 || n % 2 != 0 {
        return Err(MapError::InvalidDiscretizationSize { n });
    }
    let num_curves = region.num_curves();
    let total = n * num_curves;
    let mut eta = Vec::with_capacity(total);
    let mut eta_dot = Vec::with_capacity(total);
    let mut eta_ddot = Vec::with_capacity(total);
    for (j, curve) in region.curves().iter().enumerate() {
        for i in 0..n {
            let t = TAU * i as f64 / n as f64;
            let v = curve.velocity(t);
            if v.norm() == 0.0 {
                return Err(MapError::InvalidCurve {
                    curve: j,
                    reason: format!("vanishing velocity at node {i}"),
                });
            }
            eta.push(curve.point(t));
            eta_dot.push(v);
            eta_ddot.push(curve.acceleration(t));
        }
    }
    Ok(Discretization {
        n,
        num_curves,
        eta,
        eta_dot,
        eta_ddot,
    })
}

/// Region description as read from a JSON config file:
/// `{"curves": [{"kind": "ellipse", "center": [re, im], "a": .., "b": .., "rot": ..}, ..]}`.
/// Curve 0 is the outer boundary.
#[derive(Clone, Debug, Deserialize)]
pub struct RegionConfig {
    pub curves: Vec<CurveConfig>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveConfig {
    pub kind: String,
    pub center: [f64; 2],
    pub a: f64,
    pub b: f64,
    pub rot: f64,
}

impl RegionConfig {
    pub fn build(&self) -> Result<Region> {
        let mut curves = Vec::with_capacity(self.curves.len());
        for (j, c) in self.curves.iter().enumerate() {
            if c.kind != "ellipse" {
                return Err(MapError::InvalidCurve {
                    curve: j,
                    reason: format!("unsupported curve kind {:?}", c.kind),
                });
            }
            curves.push(CurveSpec::ellipse(
                Complex64::new(c.center[0], c.center[1]),
                c.a,
                c.b,
                c.rot,
            ));
        }
        Region::new(curves)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn unit_circle() -> Region {
        Region::new(vec![CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0)]).unwrap()
    }

    #[test]
    fn ellipse_quarter_points() {
        let region = unit_circle();
        let disc = sample_boundary(&region, 4).unwrap();
        let want = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
        ];
        let want_dot = [
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(1.0, 0.0),
        ];
        for i in 0..4 {
            assert_abs_diff_eq!(disc.eta()[i].re, want[i].re, epsilon = 1e-15);
            assert_abs_diff_eq!(disc.eta()[i].im, want[i].im, epsilon = 1e-15);
            assert_abs_diff_eq!(disc.eta_dot()[i].re, want_dot[i].re, epsilon = 1e-15);
            assert_abs_diff_eq!(disc.eta_dot()[i].im, want_dot[i].im, epsilon = 1e-15);
        }

        let two_one =
            Region::new(vec![CurveSpec::ellipse(Complex64::new(0.0, 0.0), 2.0, 1.0, 0.0)]).unwrap();
        let disc = sample_boundary(&two_one, 4).unwrap();
        let want = [
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-2.0, 0.0),
            Complex64::new(0.0, -1.0),
        ];
        for i in 0..4 {
            assert_abs_diff_eq!((disc.eta()[i] - want[i]).norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn rotated_ellipse_sample() {
        // Hole curve with center 1.5 + 1.0i, semi-axes 0.7 / -0.3, rotation 0.6.
        let curve = CurveSpec::ellipse(Complex64::new(1.5, 1.0), 0.7, -0.3, 0.6);
        let got = curve.point(0.0);
        let want = Complex64::new(1.5, 1.0) + 0.7 * Complex64::from_polar(1.0, 0.6);
        assert_abs_diff_eq!((got - want).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn orientation_is_validated_not_corrected() {
        // Counterclockwise inner circle must be rejected.
        let err = Region::new(vec![
            CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0),
            CurveSpec::ellipse(Complex64::new(0.5, 0.0), 0.2, 0.2, 0.0),
        ])
        .unwrap_err();
        assert_eq!(err, MapError::WrongOrientation { curve: 1 });

        // Clockwise outer circle likewise.
        let err = Region::new(vec![CurveSpec::circle(Complex64::new(0.0, 0.0), -1.0)]).unwrap_err();
        assert_eq!(err, MapError::WrongOrientation { curve: 0 });
    }

    #[test]
    fn empty_and_degenerate_configs() {
        assert_eq!(Region::new(vec![]).unwrap_err(), MapError::NoBoundary);
        let err = Region::new(vec![CurveSpec::ellipse(
            Complex64::new(0.0, 0.0),
            0.0,
            1.0,
            0.0,
        )])
        .unwrap_err();
        assert!(matches!(err, MapError::InvalidCurve { curve: 0, .. }));
    }

    #[test]
    fn intersecting_curves_are_rejected() {
        let err = Region::new(vec![
            CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0),
            CurveSpec::circle(Complex64::new(0.9, 0.0), -0.3),
        ])
        .unwrap_err();
        assert!(matches!(err, MapError::CurvesIntersect { .. }));

        let err = Region::new(vec![
            CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0),
            CurveSpec::circle(Complex64::new(3.0, 0.0), -0.3),
        ])
        .unwrap_err();
        assert!(matches!(err, MapError::InvalidCurve { curve: 1, .. }));
    }

    #[test]
    fn locate_classifies_points() {
        let region = unit_circle();
        assert_eq!(region.locate(Complex64::new(0.0, 0.0)), PointLocation::Interior);
        assert_eq!(region.locate(Complex64::new(2.0, 0.0)), PointLocation::Exterior(0));
        assert_eq!(region.locate(Complex64::new(1.0, 0.0)), PointLocation::OnBoundary);

        let annulus = Region::new(vec![
            CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0),
            CurveSpec::circle(Complex64::new(0.5, 0.0), -0.2),
        ])
        .unwrap();
        assert_eq!(annulus.locate(Complex64::new(0.5, 0.0)), PointLocation::Exterior(1));
        assert_eq!(annulus.locate(Complex64::new(0.0, 0.0)), PointLocation::Interior);
        assert_eq!(annulus.locate(Complex64::new(0.0, -5.0)), PointLocation::Exterior(0));
    }

    #[test]
    fn discretization_indexing_and_refinement() {
        let region = Region::new(vec![
            CurveSpec::circle(Complex64::new(0.0, 0.0), 2.0),
            CurveSpec::circle(Complex64::new(0.8, 0.0), -0.3),
        ])
        .unwrap();
        let coarse = sample_boundary(&region, 8).unwrap();
        let fine = sample_boundary(&region, 16).unwrap();
        assert_eq!(coarse.num_nodes(), 16);
        assert_eq!(coarse.curve_of(11), 1);
        // Nodes of step n are a subset of nodes of step 2n, bit for bit.
        for j in 0..2 {
            for i in 0..8 {
                let c = coarse.eta()[j * 8 + i];
                let f = fine.eta()[j * 16 + 2 * i];
                assert_eq!(c, f);
            }
        }
    }

    #[test]
    fn invalid_discretization_sizes() {
        let region = unit_circle();
        assert!(matches!(
            sample_boundary(&region, 7).unwrap_err(),
            MapError::InvalidDiscretizationSize { n: 7 }
        ));
        assert!(matches!(
            sample_boundary(&region, 2).unwrap_err(),
            MapError::InvalidDiscretizationSize { n: 2 }
        ));
    }

    #[test]
    fn generic_curve_matches_ellipse() {
        let region = Region::new(vec![CurveSpec::generic(
            |t: f64| Complex64::from_polar(1.0, t),
            |t: f64| Complex64::from_polar(1.0, t) * Complex64::i(),
            |t: f64| -Complex64::from_polar(1.0, t),
        )])
        .unwrap();
        let a = sample_boundary(&region, 16).unwrap();
        let b = sample_boundary(&unit_circle(), 16).unwrap();
        for i in 0..16 {
            assert_abs_diff_eq!((a.eta()[i] - b.eta()[i]).norm(), 0.0, epsilon = 1e-15);
            assert_abs_diff_eq!((a.eta_dot()[i] - b.eta_dot()[i]).norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn region_config_parses_and_builds() {
        let text = r#"{"curves":[
            {"kind":"ellipse","center":[0.0,0.0],"a":1.0,"b":1.0,"rot":0.0},
            {"kind":"ellipse","center":[0.5,0.0],"a":0.2,"b":-0.2,"rot":0.0}
        ]}"#;
        let config: RegionConfig = serde_json::from_str(text).unwrap();
        let region = config.build().unwrap();
        assert_eq!(region.holes(), 1);

        let bad = r#"{"curves":[{"kind":"polygon","center":[0.0,0.0],"a":1.0,"b":1.0,"rot":0.0}]}"#;
        let config: RegionConfig = serde_json::from_str(bad).unwrap();
        assert!(config.build().is_err());
    }
}
