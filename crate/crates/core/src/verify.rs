//! Closed-form oracles and convergence studies.
//!
//! The oracles are independent of the integral-equation pipeline: explicit
//! maps of the disk (and the Möbius map of the eccentric annulus) whose
//! normalizations are re-verified numerically before the oracle is handed
//! out. The convergence table measures boundary sup-differences between a
//! solve at `n` and a finest-`n` reference on their shared nodes.

use std::f64::consts::TAU;
use std::time::Instant;

use num_complex::Complex64;

use crate::canonical::{solve_map, CanonicalKind, MapSolver};
use crate::error::{MapError, Result};
use crate::eval::{inverse_point, map_point};
use crate::geometry::{locate_point, CurveSpec, Discretization, PointLocation, Region};

type MapFn = Box<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// A closed-form reference map with known canonical parameters.
pub struct Oracle {
    pub name: &'static str,
    map: MapFn,
    derivative: MapFn,
    /// Exact per-curve parameters (radii / ray angles / line offsets).
    pub parameters: Vec<f64>,
    /// Exact normalization constant where the target defines one.
    pub c: Option<f64>,
}

impl Oracle {
    pub fn map(&self, z: Complex64) -> Complex64 {
        (self.map)(z)
    }

    pub fn derivative(&self, z: Complex64) -> Complex64 {
        (self.derivative)(z)
    }
}

impl std::fmt::Debug for Oracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Oracle")
            .field("name", &self.name)
            .field("parameters", &self.parameters)
            .field("c", &self.c)
            .finish()
    }
}

fn check(name: &str, condition: bool, detail: String) {
    assert!(condition, "oracle normalization check failed: {name}: {detail}");
}

/// Residue of `f` at the origin by a trapezoidal contour sum on `|z| = r`.
fn residue_at_origin(f: &dyn Fn(Complex64) -> Complex64, r: f64) -> Complex64 {
    let n = 64;
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let z = Complex64::from_polar(r, TAU * i as f64 / n as f64);
        sum += f(z) * z;
    }
    sum / n as f64
}

/// Closed-form maps of a disk centered at the origin.
///
/// Disk target: radius `r` disk, `w = z/r`. Circular/radial/parallel
/// targets: unit disk only (`radius = 1`), with
/// `w = -(z-α)/(αz(1-ᾱz))`, `w = -(z-α)(1-ᾱz)/(αz)`, and
/// `w = 1/z - e^{-2i(π/2-δ)} z` respectively. Each oracle re-verifies its
/// normalization and boundary shape before being returned.
pub fn oracle_disk(kind: &CanonicalKind, radius: f64) -> Result<Oracle> {
    if !(radius > 0.0) {
        return Err(MapError::NoClosedForm);
    }
    let oracle = match *kind {
        CanonicalKind::AnnulusSlits { .. } => return Err(MapError::NoClosedForm),
        CanonicalKind::DiskSlits => {
            let r = radius;
            Oracle {
                name: "disk-scaling",
                map: Box::new(move |z| z / r),
                derivative: Box::new(move |_| Complex64::new(1.0 / r, 0.0)),
                parameters: vec![1.0],
                c: Some(1.0 / r),
            }
        }
        CanonicalKind::CircularSlits { alpha } => {
            if radius != 1.0 {
                return Err(MapError::NoClosedForm);
            }
            if alpha.norm() == 0.0 || alpha.norm() >= 1.0 {
                return Err(MapError::InvalidAuxiliaryPoint {
                    reason: "alpha must be a nonzero point of the unit disk".into(),
                });
            }
            let ac = alpha.conj();
            Oracle {
                name: "circular-slit-disk",
                map: Box::new(move |z| -(z - alpha) / (alpha * z * (1.0 - ac * z))),
                derivative: Box::new(move |z| {
                    let num = ac * z * z - 2.0 * alpha.norm_sqr() * z + alpha;
                    let den = alpha * z * z * (1.0 - ac * z) * (1.0 - ac * z);
                    -num / den
                }),
                parameters: vec![1.0 / alpha.norm()],
                c: None,
            }
        }
        CanonicalKind::RadialSlits { alpha } => {
            if radius != 1.0 {
                return Err(MapError::NoClosedForm);
            }
            if alpha.norm() == 0.0 || alpha.norm() >= 1.0 {
                return Err(MapError::InvalidAuxiliaryPoint {
                    reason: "alpha must be a nonzero point of the unit disk".into(),
                });
            }
            let ac = alpha.conj();
            Oracle {
                name: "radial-slit-disk",
                map: Box::new(move |z| -(z - alpha) * (1.0 - ac * z) / (alpha * z)),
                derivative: Box::new(move |z| -1.0 / (z * z) + ac / alpha),
                parameters: vec![(-1.0 / alpha).arg().rem_euclid(TAU)],
                c: None,
            }
        }
        CanonicalKind::ParallelSlits { delta } => {
            if radius != 1.0 {
                return Err(MapError::NoClosedForm);
            }
            let q = Complex64::from_polar(1.0, -2.0 * (std::f64::consts::FRAC_PI_2 - delta));
            Oracle {
                name: "parallel-slit-disk",
                map: Box::new(move |z| 1.0 / z - q * z),
                derivative: Box::new(move |z| -1.0 / (z * z) - q),
                parameters: vec![0.0],
                c: None,
            }
        }
    };

    verify_disk_oracle(kind, radius, &oracle);
    Ok(oracle)
}

fn verify_disk_oracle(kind: &CanonicalKind, radius: f64, oracle: &Oracle) {
    match *kind {
        CanonicalKind::DiskSlits => {
            let w0 = oracle.map(Complex64::new(0.0, 0.0));
            check("w(0) = 0", w0.norm() <= 1e-12, format!("{w0}"));
            for i in 0..256 {
                let z = Complex64::from_polar(radius, TAU * i as f64 / 256.0);
                let m = oracle.map(z).norm();
                check("unit modulus on the boundary", (m - 1.0).abs() <= 1e-12, format!("{m}"));
            }
        }
        CanonicalKind::CircularSlits { alpha } | CanonicalKind::RadialSlits { alpha } => {
            let res = residue_at_origin(&|z| oracle.map(z), 0.1);
            check("residue 1 at the origin", (res - 1.0).norm() <= 1e-12, format!("{res}"));
            let wa = oracle.map(alpha);
            check("w(alpha) = 0", wa.norm() <= 1e-12, format!("{wa}"));
            for i in 0..256 {
                let z = Complex64::from_polar(1.0, TAU * i as f64 / 256.0);
                let w = oracle.map(z);
                match kind {
                    CanonicalKind::CircularSlits { .. } => {
                        let dev = (w.norm() - oracle.parameters[0]).abs();
                        check("constant modulus on |z|=1", dev <= 1e-12, format!("{dev}"));
                    }
                    _ => {
                        let dev = (w * Complex64::from_polar(1.0, -oracle.parameters[0])).arg().abs();
                        check("constant argument on |z|=1", dev <= 1e-12, format!("{dev}"));
                    }
                }
            }
        }
        CanonicalKind::ParallelSlits { delta } => {
            let res = residue_at_origin(&|z| oracle.map(z), 0.1);
            check("residue 1 at the origin", (res - 1.0).norm() <= 1e-12, format!("{res}"));
            let z = Complex64::new(1e-3, 0.0);
            let tail = (oracle.map(z) - 1.0 / z).norm();
            check("w - 1/z vanishes at the origin", tail <= 2e-3, format!("{tail}"));
            let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_2 - delta);
            for i in 0..256 {
                let z = Complex64::from_polar(1.0, TAU * i as f64 / 256.0);
                let dev = (phase * oracle.map(z)).re.abs();
                check("zero offset on |z|=1", dev <= 1e-12, format!("{dev}"));
            }
        }
        CanonicalKind::AnnulusSlits { .. } => unreachable!(),
    }
}

/// Möbius map of the eccentric annulus (unit disk minus the disk of radius
/// `hole_radius` about the real center `hole_center > 0`) onto a concentric
/// annulus, normalized by `w(0) = a > 0`:
/// `w(z) = (a - z)/(1 - a z)` with
/// `a = (1 + c² - ρ² - sqrt((1 + c² - ρ²)² - 4c²)) / (2c)`.
pub fn oracle_eccentric_annulus(hole_center: f64, hole_radius: f64) -> Result<Oracle> {
    if !(hole_center > 0.0 && hole_radius > 0.0 && hole_center + hole_radius < 1.0) {
        return Err(MapError::NoClosedForm);
    }
    if hole_center - hole_radius <= 0.0 {
        return Err(MapError::OriginNotInterior);
    }
    let s = 1.0 + hole_center * hole_center - hole_radius * hole_radius;
    let a = (s - (s * s - 4.0 * hole_center * hole_center).sqrt()) / (2.0 * hole_center);
    let inner = hole_center - hole_radius;
    let modulus = (a - inner) / (1.0 - a * inner);

    let oracle = Oracle {
        name: "eccentric-annulus-moebius",
        map: Box::new(move |z| (a - z) / (1.0 - a * z)),
        derivative: Box::new(move |z| {
            let d = 1.0 - a * z;
            (a * a - 1.0) / (d * d)
        }),
        parameters: vec![1.0, modulus],
        c: Some(a),
    };

    check("w(0) > 0", a > 0.0 && a < 1.0, format!("{a}"));
    for i in 0..256 {
        let z = Complex64::from_polar(1.0, TAU * i as f64 / 256.0);
        let m = oracle.map(z).norm();
        check("outer circle to unit circle", (m - 1.0).abs() <= 1e-12, format!("{m}"));
        let h = hole_center + hole_radius * Complex64::from_polar(1.0, TAU * i as f64 / 256.0);
        let m = oracle.map(h).norm();
        check("hole to concentric circle", (m - modulus).abs() <= 1e-12, format!("{m}"));
    }
    Ok(oracle)
}

/// One row of a convergence study.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub kind: &'static str,
    pub n: usize,
    pub sup_error: f64,
    pub wall_ms: f64,
}

/// Boundary sup-differences `max_i |w_n(η_i) - w_ref(η_i)|` over the nodes
/// shared by each `n` and the reference, for every requested target. Grids
/// must be nested: each `n` has to divide `reference_n`.
pub fn convergence_table(
    region: &Region,
    kinds: &[CanonicalKind],
    ns: &[usize],
    reference_n: usize,
) -> Result<Vec<ConvergenceRow>> {
    for &n in ns {
        if n >= reference_n || reference_n % n != 0 {
            return Err(MapError::NonNestedGrids { n, reference: reference_n });
        }
    }
    let reference = MapSolver::new(region, reference_n)?;
    let mut ref_solutions = Vec::with_capacity(kinds.len());
    for kind in kinds {
        ref_solutions.push(reference.solve(kind)?);
    }

    let mut rows = Vec::with_capacity(kinds.len() * ns.len());
    for &n in ns {
        let solver = MapSolver::new(region, n)?;
        for (kind, reference_sol) in kinds.iter().zip(&ref_solutions) {
            let started = Instant::now();
            let sol = solver.solve(kind)?;
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let stride = reference_n / n;
            let mut sup = 0.0f64;
            for k in 0..sol.num_curves() {
                for i in 0..n {
                    let a = sol.omega_boundary[k * n + i];
                    let b = reference_sol.omega_boundary[k * reference_n + i * stride];
                    sup = sup.max((a - b).norm());
                }
            }
            rows.push(ConvergenceRow { kind: kind.tag(), n, sup_error: sup, wall_ms });
        }
    }
    Ok(rows)
}

/// Rectangular lattice of interior points with a clearance to the sampled
/// boundary, for oracle comparisons and round-trip checks.
pub fn interior_lattice(
    region: &Region,
    disc: &Discretization,
    step: f64,
    clearance: f64,
) -> Vec<Complex64> {
    let eta = disc.eta();
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in eta {
        xmin = xmin.min(p.re);
        xmax = xmax.max(p.re);
        ymin = ymin.min(p.im);
        ymax = ymax.max(p.im);
    }
    let mut points = Vec::new();
    let nx = ((xmax - xmin) / step).ceil() as usize;
    let ny = ((ymax - ymin) / step).ceil() as usize;
    for ix in 0..=nx {
        for iy in 0..=ny {
            let z = Complex64::new(xmin + ix as f64 * step, ymin + iy as f64 * step);
            if locate_point(region, z) == PointLocation::Interior
                && disc.boundary_distance(z) >= clearance
            {
                points.push(z);
            }
        }
    }
    points
}

/// Outcome of one selftest check.
#[derive(Clone, Debug)]
pub struct SelftestCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn selftest_entry(
    checks: &mut Vec<SelftestCheck>,
    name: &'static str,
    error: f64,
    tolerance: f64,
) {
    checks.push(SelftestCheck {
        name,
        passed: error.is_finite() && error <= tolerance,
        detail: format!("error {error:.3e}, tolerance {tolerance:.1e}"),
    });
}

fn selftest_failure(checks: &mut Vec<SelftestCheck>, name: &'static str, err: &MapError) {
    checks.push(SelftestCheck { name, passed: false, detail: format!("failed: {err}") });
}

/// Runs the oracle suite against the solver. Each check compares a full
/// solve with an independent closed form.
pub fn selftest() -> Vec<SelftestCheck> {
    let mut checks = Vec::new();
    let origin = Complex64::new(0.0, 0.0);
    let unit_disk = Region::new(vec![CurveSpec::circle(origin, 1.0)]).expect("unit disk");

    // Degenerate exactness: the unit-circle system matrix is the identity.
    match crate::geometry::sample_boundary(&unit_disk, 16)
        .and_then(|d| crate::kernel::assemble_system(&d))
    {
        Ok(sys) => {
            let mut dev = 0.0f64;
            for i in 0..16 {
                for j in 0..16 {
                    let want = if i == j { 1.0 } else { 0.0 };
                    dev = dev.max((sys.entry(i, j) - want).abs());
                }
            }
            selftest_entry(&mut checks, "unit-circle system matrix is the identity", dev, 1e-14);
        }
        Err(err) => selftest_failure(&mut checks, "unit-circle system matrix is the identity", &err),
    }

    // Identity map through the full pipeline.
    match solve_map(&unit_disk, &CanonicalKind::DiskSlits, 16) {
        Ok(sol) => {
            let disc = sol.discretization();
            let dev = (0..16).fold(0.0f64, |m, i| m.max((sol.theta[i] - disc.t(i)).abs()));
            selftest_entry(&mut checks, "identity map boundary correspondence", dev, 1e-12);
        }
        Err(err) => selftest_failure(&mut checks, "identity map boundary correspondence", &err),
    }

    // Simply connected oracles at n = 128, lattice clearance 0.2.
    let disk_kinds: Vec<(&'static str, CanonicalKind, f64)> = vec![
        ("scaled disk oracle", CanonicalKind::DiskSlits, 2.0),
        (
            "circular slit oracle",
            CanonicalKind::CircularSlits { alpha: Complex64::new(0.5, 0.0) },
            1.0,
        ),
        (
            "radial slit oracle",
            CanonicalKind::RadialSlits { alpha: Complex64::new(0.5, 0.0) },
            1.0,
        ),
        (
            "parallel slit oracle",
            CanonicalKind::ParallelSlits { delta: std::f64::consts::FRAC_PI_4 },
            1.0,
        ),
    ];
    for (name, kind, radius) in disk_kinds {
        let region = Region::new(vec![CurveSpec::circle(origin, radius)]).expect("disk");
        let outcome = oracle_disk(&kind, radius).and_then(|oracle| {
            let sol = solve_map(&region, &kind, 128)?;
            let lattice =
                interior_lattice(&region, sol.discretization(), 0.11 * radius, 0.2 * radius);
            let mut dev = 0.0f64;
            for &z in &lattice {
                if kind.has_pole() && z.norm() < 0.2 {
                    continue;
                }
                dev = dev.max((map_point(&sol, z)? - oracle.map(z)).norm());
                dev = dev.max((crate::eval::map_derivative(&sol, z)? - oracle.derivative(z)).norm());
            }
            for (got, want) in sol.parameters.iter().zip(&oracle.parameters) {
                dev = dev.max((got - want).abs());
            }
            if let (Some(got), Some(want)) = (sol.c, oracle.c) {
                dev = dev.max((got - want).abs());
            }
            Ok(dev)
        });
        match outcome {
            Ok(dev) => selftest_entry(&mut checks, name, dev, 1e-10),
            Err(err) => selftest_failure(&mut checks, name, &err),
        }
    }

    // Eccentric annulus against the Möbius oracle, plus a round trip.
    let annulus = Region::new(vec![
        CurveSpec::circle(origin, 1.0),
        CurveSpec::circle(Complex64::new(0.5, 0.0), -0.2),
    ])
    .expect("eccentric annulus");
    let kind = CanonicalKind::AnnulusSlits { z1: Complex64::new(0.5, 0.0) };
    let outcome = oracle_eccentric_annulus(0.5, 0.2).and_then(|oracle| {
        let sol = solve_map(&annulus, &kind, 256)?;
        let mut dev = (sol.parameters[1] - oracle.parameters[1]).abs();
        for (i, &z) in sol.discretization().eta().iter().enumerate() {
            dev = dev.max((sol.omega_boundary[i] - oracle.map(z)).norm());
        }
        let lattice = interior_lattice(&annulus, sol.discretization(), 0.13, 0.1);
        let mut roundtrip = 0.0f64;
        for &z in &lattice {
            let w = map_point(&sol, z)?;
            let inv = inverse_point(&sol, w)?;
            roundtrip = roundtrip.max((inv.z - z).norm());
        }
        Ok((dev, roundtrip))
    });
    match outcome {
        Ok((dev, roundtrip)) => {
            selftest_entry(&mut checks, "eccentric annulus against Moebius oracle", dev, 1e-8);
            selftest_entry(&mut checks, "eccentric annulus round trip", roundtrip, 1e-6);
        }
        Err(err) => selftest_failure(&mut checks, "eccentric annulus against Moebius oracle", &err),
    }

    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn disk_oracle_values() {
        let circular = oracle_disk(
            &CanonicalKind::CircularSlits { alpha: Complex64::new(0.5, 0.0) },
            1.0,
        )
        .unwrap();
        assert_abs_diff_eq!(circular.parameters[0], 2.0, epsilon = 1e-15);

        let radial = oracle_disk(
            &CanonicalKind::RadialSlits { alpha: Complex64::new(0.5, 0.0) },
            1.0,
        )
        .unwrap();
        assert_abs_diff_eq!(radial.parameters[0], PI, epsilon = 1e-15);

        let parallel = oracle_disk(&CanonicalKind::ParallelSlits { delta: 0.3 }, 1.0).unwrap();
        assert_abs_diff_eq!(parallel.parameters[0], 0.0, epsilon = 1e-15);

        assert_eq!(
            oracle_disk(&CanonicalKind::AnnulusSlits { z1: Complex64::new(0.5, 0.0) }, 1.0)
                .unwrap_err(),
            MapError::NoClosedForm
        );
        assert_eq!(
            oracle_disk(&CanonicalKind::ParallelSlits { delta: 0.3 }, 2.0).unwrap_err(),
            MapError::NoClosedForm
        );
    }

    #[test]
    fn oracle_derivatives_match_finite_differences() {
        let kinds = [
            CanonicalKind::DiskSlits,
            CanonicalKind::CircularSlits { alpha: Complex64::new(0.4, 0.2) },
            CanonicalKind::RadialSlits { alpha: Complex64::new(0.4, 0.2) },
            CanonicalKind::ParallelSlits { delta: 1.1 },
        ];
        let h = Complex64::new(1e-6, 0.0);
        for kind in kinds {
            let oracle = oracle_disk(&kind, 1.0).unwrap();
            for &z in &[Complex64::new(0.31, 0.17), Complex64::new(-0.42, 0.33)] {
                let fd = (oracle.map(z + h) - oracle.map(z - h)) / (2.0 * h);
                let an = oracle.derivative(z);
                assert!((fd - an).norm() <= 1e-5 * (1.0 + an.norm()), "{:?}", kind);
            }
        }
    }

    #[test]
    fn eccentric_annulus_oracle_constants() {
        let oracle = oracle_eccentric_annulus(0.5, 0.2).unwrap();
        assert_abs_diff_eq!(oracle.c.unwrap(), 0.528751146789956, epsilon = 1e-12);
        assert_abs_diff_eq!(oracle.parameters[1], 0.27187786697489014, epsilon = 1e-12);
        // Both hole extremes map to the same modulus.
        let lo = oracle.map(Complex64::new(0.3, 0.0)).norm();
        let hi = oracle.map(Complex64::new(0.7, 0.0)).norm();
        assert_abs_diff_eq!(lo, hi, epsilon = 1e-14);

        assert_eq!(
            oracle_eccentric_annulus(0.2, 0.3).unwrap_err(),
            MapError::OriginNotInterior
        );
    }

    #[test]
    fn identity_disk_converges_immediately() {
        let region = Region::new(vec![CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0)]).unwrap();
        let rows = convergence_table(&region, &[CanonicalKind::DiskSlits], &[16], 32).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].sup_error <= 1e-13, "{}", rows[0].sup_error);
    }

    #[test]
    fn non_nested_grids_are_rejected() {
        let region = Region::new(vec![CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0)]).unwrap();
        assert!(matches!(
            convergence_table(&region, &[CanonicalKind::DiskSlits], &[12], 32).unwrap_err(),
            MapError::NonNestedGrids { .. }
        ));
        assert!(matches!(
            convergence_table(&region, &[CanonicalKind::DiskSlits], &[32], 32).unwrap_err(),
            MapError::NonNestedGrids { .. }
        ));
    }
}
