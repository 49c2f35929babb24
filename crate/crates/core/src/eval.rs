//! Interior evaluation of `w`, `w'`, and `w^{-1}` by trapezoidal sums of the
//! Cauchy-type boundary integrals, plus grid-image generation for figures.
//!
//! All sums use the plain trapezoidal rule on the solution's nodes. Accuracy
//! degrades within O(distance-to-boundary) of the boundary; that distance is
//! reported as a diagnostic, never corrected.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::canonical::MapSolution;
use crate::error::{MapError, Result};
use crate::geometry::{locate_point, polygon_winding, PointLocation};

/// Inverse queries closer to the sampled image boundary than this fraction
/// of the image diameter are rejected.
const INVERSE_BOUNDARY_FRACTION: f64 = 1e-3;

/// `w(z)` for `z` strictly interior, via
/// `[1/z +] (1/2πi) ∫_J w(η(t)) η̇(t)/(η(t)-z) dt`.
pub fn map_point(sol: &MapSolution, z: Complex64) -> Result<Complex64> {
    if sol.kind().has_pole() && z.norm() == 0.0 {
        return Err(MapError::PoleOfMap);
    }
    if locate_point(sol.region(), z) != PointLocation::Interior {
        return Err(MapError::PointOutsideDomain);
    }
    let pole = if sol.kind().has_pole() {
        1.0 / z
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok(pole + cauchy_sum(sol, &sol.omega_boundary, z))
}

/// `w'(z)` for `z` strictly interior, with a `-1/z²` term for the targets
/// with a pole at the origin.
pub fn map_derivative(sol: &MapSolution, z: Complex64) -> Result<Complex64> {
    if sol.kind().has_pole() && z.norm() == 0.0 {
        return Err(MapError::PoleOfMap);
    }
    if locate_point(sol.region(), z) != PointLocation::Interior {
        return Err(MapError::PointOutsideDomain);
    }
    let pole = if sol.kind().has_pole() {
        -1.0 / (z * z)
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok(pole + cauchy_sum(sol, &sol.omega_prime_boundary, z))
}

fn cauchy_sum(sol: &MapSolution, boundary: &[Complex64], z: Complex64) -> Complex64 {
    let disc = sol.discretization();
    let eta = disc.eta();
    let eta_dot = disc.eta_dot();
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..disc.num_nodes() {
        sum += boundary[i] * eta_dot[i] / (eta[i] - z);
    }
    sum * Complex64::new(0.0, -1.0 / disc.nodes_per_curve() as f64)
}

/// Result of one inverse evaluation.
#[derive(Clone, Copy, Debug)]
pub struct InverseResult {
    pub z: Complex64,
    /// Distance from the query to the sampled image boundary.
    pub boundary_distance: f64,
    /// False when the computed preimage fails the interiority check; such
    /// results are diagnostic only.
    pub reliable: bool,
}

/// `w^{-1}(w)` by the parametrized Cauchy integral over the image boundary
/// `ξ(t) = w(η(t))`, using `ξ̇ = η̇ w'(η)`.
///
/// The canonical domain is known only through boundary samples, so the
/// interiority test for `w` is heuristic: a distance floor to the sampled
/// image boundary, plus a winding test for the bounded targets.
pub fn inverse_point(sol: &MapSolution, w: Complex64) -> Result<InverseResult> {
    let disc = sol.discretization();
    let xi = &sol.omega_boundary;
    let diameter = image_diameter(xi);
    let boundary_distance = xi.iter().map(|p| (p - w).norm()).fold(f64::INFINITY, f64::min);
    if boundary_distance < INVERSE_BOUNDARY_FRACTION * diameter {
        return Err(MapError::TooCloseToSlits);
    }
    if !sol.kind().has_pole() {
        let n = disc.nodes_per_curve();
        let winding: i32 = (0..disc.num_curves())
            .map(|k| polygon_winding(&xi[k * n..(k + 1) * n], w))
            .sum();
        if winding != 1 {
            return Err(MapError::PointOutsideDomain);
        }
    }

    let eta = disc.eta();
    let eta_dot = disc.eta_dot();
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..disc.num_nodes() {
        let xi_dot = eta_dot[i] * sol.omega_prime_boundary[i];
        sum += eta[i] * xi_dot / (xi[i] - w);
    }
    let z = sum * Complex64::new(0.0, -1.0 / disc.nodes_per_curve() as f64);
    let reliable = locate_point(sol.region(), z) == PointLocation::Interior;
    Ok(InverseResult { z, boundary_distance, reliable })
}

fn image_diameter(points: &[Complex64]) -> f64 {
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        xmin = xmin.min(p.re);
        xmax = xmax.max(p.re);
        ymin = ymin.min(p.im);
        ymax = ymax.max(p.im);
    }
    ((xmax - xmin).powi(2) + (ymax - ymin).powi(2)).sqrt()
}

/// Which domain a batch of query points lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainSide {
    /// Points in the region; evaluate the forward map.
    Original,
    /// Points in the canonical domain; evaluate the inverse map.
    Canonical,
}

/// A batch of query points for one side of the map.
#[derive(Clone, Debug)]
pub struct EvalRequest {
    pub points: Vec<Complex64>,
    pub side: DomainSide,
}

/// One query/answer pair with its distance diagnostic.
#[derive(Clone, Copy, Debug)]
pub struct EvalOutcome {
    pub query: Complex64,
    pub answer: Complex64,
    /// Distance from the query to the relevant sampled boundary.
    pub boundary_distance: f64,
    /// Only meaningful for inverse queries; forward evaluations of interior
    /// points are always reliable.
    pub reliable: bool,
}

/// Evaluates a batch of points; fails on the first invalid query.
pub fn evaluate_request(sol: &MapSolution, request: &EvalRequest) -> Result<Vec<EvalOutcome>> {
    request
        .points
        .par_iter()
        .map(|&q| match request.side {
            DomainSide::Original => {
                let w = map_point(sol, q)?;
                Ok(EvalOutcome {
                    query: q,
                    answer: w,
                    boundary_distance: sol.discretization().boundary_distance(q),
                    reliable: true,
                })
            }
            DomainSide::Canonical => {
                let inv = inverse_point(sol, q)?;
                Ok(EvalOutcome {
                    query: q,
                    answer: inv.z,
                    boundary_distance: inv.boundary_distance,
                    reliable: inv.reliable,
                })
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridStyle {
    /// Lines of constant x and constant y across the region's bounding box.
    Cartesian,
    /// Circles around and rays from the origin.
    Polar,
}

/// Grid-image request: `lines` curves per family, `samples` points per
/// curve, restricted to the interior of the region.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub style: GridStyle,
    pub lines: usize,
    pub samples: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { style: GridStyle::Cartesian, lines: 12, samples: 400 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolylineRole {
    /// Image of boundary curve `k`: a canonical circle, slit, or line.
    Boundary(usize),
    GridLine,
}

/// An ordered run of image points.
#[derive(Clone, Debug)]
pub struct Polyline {
    pub role: PolylineRole,
    pub points: Vec<Complex64>,
}

/// Images under the map of grid lines clipped to the region, plus the images
/// of the boundary curves themselves. Grid points outside the region break a
/// polyline; so do image points beyond four image diameters from the origin
/// (the pole targets send neighborhoods of the origin to infinity).
pub fn image_grid(sol: &MapSolution, spec: &GridSpec) -> Vec<Polyline> {
    let disc = sol.discretization();
    let n = disc.nodes_per_curve();
    let mut out = Vec::new();
    for k in 0..disc.num_curves() {
        let mut points = sol.omega_boundary[k * n..(k + 1) * n].to_vec();
        points.push(sol.omega_boundary[k * n]);
        out.push(Polyline { role: PolylineRole::Boundary(k), points });
    }

    let cap = if sol.kind().has_pole() {
        4.0 * image_diameter(&sol.omega_boundary)
    } else {
        f64::INFINITY
    };

    let lines = grid_lines(disc.eta(), spec);
    let mapped: Vec<Vec<Polyline>> = lines
        .par_iter()
        .map(|line| {
            let mut runs = Vec::new();
            let mut current = Vec::new();
            for &z in line {
                let image = match map_point(sol, z) {
                    Ok(w) if w.norm() <= cap => Some(w),
                    _ => None,
                };
                match image {
                    Some(w) => current.push(w),
                    None => {
                        if current.len() > 1 {
                            runs.push(Polyline { role: PolylineRole::GridLine, points: current });
                        }
                        current = Vec::new();
                    }
                }
            }
            if current.len() > 1 {
                runs.push(Polyline { role: PolylineRole::GridLine, points: current });
            }
            runs
        })
        .collect();
    out.extend(mapped.into_iter().flatten());
    out
}

fn grid_lines(eta: &[Complex64], spec: &GridSpec) -> Vec<Vec<Complex64>> {
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in eta {
        xmin = xmin.min(p.re);
        xmax = xmax.max(p.re);
        ymin = ymin.min(p.im);
        ymax = ymax.max(p.im);
    }
    let samples = spec.samples.max(2);
    let mut lines = Vec::new();
    match spec.style {
        GridStyle::Cartesian => {
            for k in 0..spec.lines {
                let frac = (k + 1) as f64 / (spec.lines + 1) as f64;
                let x = xmin + frac * (xmax - xmin);
                lines.push(
                    (0..samples)
                        .map(|i| {
                            Complex64::new(x, ymin + (ymax - ymin) * i as f64 / (samples - 1) as f64)
                        })
                        .collect(),
                );
                let y = ymin + frac * (ymax - ymin);
                lines.push(
                    (0..samples)
                        .map(|i| {
                            Complex64::new(xmin + (xmax - xmin) * i as f64 / (samples - 1) as f64, y)
                        })
                        .collect(),
                );
            }
        }
        GridStyle::Polar => {
            let rmax = eta.iter().map(|p| p.norm()).fold(0.0, f64::max);
            for k in 0..spec.lines {
                let r = rmax * (k + 1) as f64 / (spec.lines + 1) as f64;
                lines.push(
                    (0..samples)
                        .map(|i| {
                            Complex64::from_polar(
                                r,
                                std::f64::consts::TAU * i as f64 / (samples - 1) as f64,
                            )
                        })
                        .collect(),
                );
                let angle = std::f64::consts::TAU * k as f64 / spec.lines as f64;
                lines.push(
                    (0..samples)
                        .map(|i| {
                            Complex64::from_polar(
                                rmax * (i as f64 + 0.5) / samples as f64,
                                angle,
                            )
                        })
                        .collect(),
                );
            }
        }
    }
    lines
}
