//! Shared test regions and target sets.

use num_complex::Complex64;
use slitmap_core::{CanonicalKind, CurveSpec, Region};
use std::f64::consts::FRAC_PI_4;

/// Seven-ellipse region of connectivity 7 used for the convergence and
/// invariant studies: one large rotated ellipse with six elliptical holes.
pub fn seven_ellipse_region() -> Region {
    Region::new(vec![
        CurveSpec::ellipse(Complex64::new(-0.5, -0.3), 4.0, 3.0, 1.0),
        CurveSpec::ellipse(Complex64::new(1.5, 1.0), 0.7, -0.3, 0.6),
        CurveSpec::ellipse(Complex64::new(1.5, -0.4), 0.3, -0.6, 1.6),
        CurveSpec::ellipse(Complex64::new(0.5, -1.8), 0.5, -0.7, 2.6),
        CurveSpec::ellipse(Complex64::new(-2.0, 0.8), 0.6, -0.4, 2.8),
        CurveSpec::ellipse(Complex64::new(-0.8, 1.8), 0.3, -0.7, 0.3),
        CurveSpec::ellipse(Complex64::new(0.5, 2.3), 0.3, -0.5, 0.5),
    ])
    .expect("seven-ellipse region")
}

/// The five targets with the standard auxiliary choices for the
/// seven-ellipse region: `z1` at the center of hole 1, `alpha` at the outer
/// ellipse's center, `delta = pi/4`.
pub fn seven_ellipse_kinds() -> Vec<CanonicalKind> {
    vec![
        CanonicalKind::AnnulusSlits { z1: Complex64::new(1.5, 1.0) },
        CanonicalKind::DiskSlits,
        CanonicalKind::CircularSlits { alpha: Complex64::new(-0.5, -0.3) },
        CanonicalKind::RadialSlits { alpha: Complex64::new(-0.5, -0.3) },
        CanonicalKind::ParallelSlits { delta: FRAC_PI_4 },
    ]
}

pub fn eccentric_annulus() -> Region {
    Region::new(vec![
        CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0),
        CurveSpec::circle(Complex64::new(0.5, 0.0), -0.2),
    ])
    .expect("eccentric annulus")
}

pub fn disk(radius: f64) -> Region {
    Region::new(vec![CurveSpec::circle(Complex64::new(0.0, 0.0), radius)]).expect("disk")
}
