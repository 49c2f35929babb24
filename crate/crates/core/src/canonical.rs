//! The five canonical slit targets and the full solve pipeline.
//!
//! Every target leads to the same integral equation `(I + N* + J) θ' = rhs`;
//! only the right-hand side changes. After the solve, `θ' `is integrated per
//! curve, and the region parameters (radii, ray angles, or line offsets),
//! the normalization constant, and the integration constants all come out of
//! inner products against the `φ^[k]` densities.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{MapError, Result};
use crate::geometry::{locate_point, sample_boundary, Discretization, PointLocation, Region};
use crate::kernel::{assemble_system, SystemMatrix};
use crate::solver::{
    antiderivative, chi_densities, functional, solve_system, AntiderivativeResult, Density,
};

/// Branch-tracking defects beyond this indicate a wrong log branch rather
/// than discretization error (genuine defects scale like 2π).
const BRANCH_DEFECT_LIMIT: f64 = 0.5;

/// Which canonical slit domain to map onto, together with its auxiliary
/// data.
///
/// All five normalizations live at the origin, so `0` must be interior to
/// the region. The annulus target additionally needs `z1` inside hole 1, and
/// the circular/radial targets need a nonzero interior point `alpha` where
/// the map vanishes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CanonicalKind {
    /// Annulus bounded by the unit circle and `|w| = R_1`, holes `2..=m`
    /// becoming circular slits; normalized by `w(0) > 0`.
    AnnulusSlits { z1: Complex64 },
    /// Unit disk with circular slits; normalized by `w(0) = 0`, `w'(0) > 0`.
    DiskSlits,
    /// Whole plane with circular slits; `w(alpha) = 0`, simple pole at the
    /// origin with residue 1.
    CircularSlits { alpha: Complex64 },
    /// Whole plane with radial slits; same normalization as circular.
    RadialSlits { alpha: Complex64 },
    /// Whole plane with straight slits at angle `delta` to the real axis;
    /// `w(z) - 1/z` vanishes at the origin.
    ParallelSlits { delta: f64 },
}

impl CanonicalKind {
    pub fn tag(&self) -> &'static str {
        match self {
            CanonicalKind::AnnulusSlits { .. } => "annulus",
            CanonicalKind::DiskSlits => "disk",
            CanonicalKind::CircularSlits { .. } => "circular",
            CanonicalKind::RadialSlits { .. } => "radial",
            CanonicalKind::ParallelSlits { .. } => "parallel",
        }
    }

    /// Maps with `w(0) = infinity` carry explicit `1/z` terms in the Cauchy
    /// formulas.
    pub fn has_pole(&self) -> bool {
        matches!(
            self,
            CanonicalKind::CircularSlits { .. }
                | CanonicalKind::RadialSlits { .. }
                | CanonicalKind::ParallelSlits { .. }
        )
    }

    /// Sign of ρ in the boundary relation `A F = γ + h + i[(s ρ + μ) + ν]`.
    fn rho_sign(&self) -> f64 {
        match self {
            CanonicalKind::RadialSlits { .. } => -1.0,
            _ => 1.0,
        }
    }

    /// Prescribed per-curve winding sums `(1/2π) ∫_{J_k} θ' dt`.
    pub fn winding_targets(&self, num_curves: usize) -> Vec<f64> {
        let mut targets = vec![0.0; num_curves];
        match self {
            CanonicalKind::AnnulusSlits { .. } => {
                targets[0] = 1.0;
                targets[1] = -1.0;
            }
            CanonicalKind::DiskSlits => targets[0] = 1.0,
            _ => {}
        }
        targets
    }

    /// Checks the auxiliary points against the region.
    pub fn validate(&self, region: &Region) -> Result<()> {
        if locate_point(region, Complex64::new(0.0, 0.0)) != PointLocation::Interior {
            return Err(MapError::InvalidAuxiliaryPoint {
                reason: "origin must be interior to the region".into(),
            });
        }
        match self {
            CanonicalKind::AnnulusSlits { z1 } => {
                if region.holes() == 0 {
                    return Err(MapError::NeedsHole);
                }
                if locate_point(region, *z1) != PointLocation::Exterior(1) {
                    return Err(MapError::InvalidAuxiliaryPoint {
                        reason: format!("z1 = {z1} must lie in hole 1"),
                    });
                }
            }
            CanonicalKind::DiskSlits => {}
            CanonicalKind::CircularSlits { alpha } | CanonicalKind::RadialSlits { alpha } => {
                if alpha.norm() == 0.0 {
                    return Err(MapError::InvalidAuxiliaryPoint {
                        reason: "alpha must be nonzero".into(),
                    });
                }
                if locate_point(region, *alpha) != PointLocation::Interior {
                    return Err(MapError::InvalidAuxiliaryPoint {
                        reason: format!("alpha = {alpha} must be interior to the region"),
                    });
                }
            }
            CanonicalKind::ParallelSlits { delta } => {
                if !delta.is_finite() {
                    return Err(MapError::InvalidAuxiliaryPoint {
                        reason: "delta must be finite".into(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Right-hand side of `(I + N* + J) θ' = rhs` for the chosen target.
pub fn build_rhs(kind: &CanonicalKind, region: &Region, disc: &Discretization) -> Result<Density> {
    kind.validate(region)?;
    Ok(rhs_samples(kind, disc))
}

fn rhs_samples(kind: &CanonicalKind, disc: &Discretization) -> Density {
    let eta = disc.eta();
    let eta_dot = disc.eta_dot();
    match kind {
        CanonicalKind::AnnulusSlits { .. } => Density::from_fn(disc, |i| match disc.curve_of(i) {
            0 => 1.0,
            1 => -1.0,
            _ => 0.0,
        }),
        CanonicalKind::DiskSlits => {
            Density::from_fn(disc, |i| if disc.curve_of(i) == 0 { 1.0 } else { 0.0 })
        }
        CanonicalKind::CircularSlits { alpha } => Density::from_fn(disc, |i| {
            2.0 * (eta_dot[i] / eta[i] * alpha / (eta[i] - alpha)).im
        }),
        CanonicalKind::RadialSlits { alpha } => Density::from_fn(disc, |i| {
            2.0 * (eta_dot[i] / eta[i] * (Complex64::i() * alpha) / (eta[i] - alpha)).im
        }),
        CanonicalKind::ParallelSlits { delta } => {
            let phase = Complex64::from_polar(1.0, FRAC_PI_2 - delta);
            Density::from_fn(disc, |i| -2.0 * (eta_dot[i] / eta[i] * phase / eta[i]).im)
        }
    }
}

/// Boundary samples of `γ + iμ` with the logarithm branch tracked
/// continuously along each curve, plus the closure jump of each curve (the
/// continued value at `2π` minus the value at `0`).
#[derive(Clone, Debug)]
pub struct GammaMu {
    pub samples: Vec<Complex64>,
    pub closure_jump: Vec<Complex64>,
}

impl GammaMu {
    pub fn gamma(&self, disc: &Discretization) -> Density {
        Density::new(self.samples.iter().map(|v| v.re).collect(), disc.nodes_per_curve())
    }
}

/// Continuous branch of `log` along one curve's samples: principal value at
/// the first node, then increments by the principal log of consecutive
/// ratios (jumps stay below π on resolvable curves). Also returns the
/// closure jump accumulated over the full period.
fn continuous_log(values: &[Complex64]) -> Result<(Vec<Complex64>, Complex64)> {
    for v in values {
        if v.norm() == 0.0 || !v.re.is_finite() || !v.im.is_finite() {
            return Err(MapError::InvalidAuxiliaryPoint {
                reason: "auxiliary point on boundary (zero logarithm argument)".into(),
            });
        }
    }
    let mut logs = Vec::with_capacity(values.len());
    let mut acc = values[0].ln();
    logs.push(acc);
    for i in 1..values.len() {
        acc += (values[i] / values[i - 1]).ln();
        logs.push(acc);
    }
    let jump = acc + (values[0] / values[values.len() - 1]).ln() - logs[0];
    Ok((logs, jump))
}

/// The per-kind boundary function `γ + iμ`:
/// annulus `-log(1 - η/z1)`, disk `-log η`, circular `-log(1/η - 1/α)`,
/// radial `i log(1/η - 1/α)`, parallel `-e^{i(π/2-δ)}/η` (no logarithm).
pub fn gamma_mu(kind: &CanonicalKind, disc: &Discretization) -> Result<GammaMu> {
    let n = disc.nodes_per_curve();
    let eta = disc.eta();
    let mut samples = Vec::with_capacity(disc.num_nodes());
    let mut closure_jump = Vec::with_capacity(disc.num_curves());

    if let CanonicalKind::ParallelSlits { delta } = kind {
        let phase = Complex64::from_polar(1.0, FRAC_PI_2 - delta);
        for z in eta {
            samples.push(-phase / z);
        }
        closure_jump = vec![Complex64::new(0.0, 0.0); disc.num_curves()];
        return Ok(GammaMu { samples, closure_jump });
    }

    for k in 0..disc.num_curves() {
        let args: Vec<Complex64> = disc.curve_range(k)
            .map(|i| match kind {
                CanonicalKind::AnnulusSlits { z1 } => 1.0 - eta[i] / z1,
                CanonicalKind::DiskSlits => eta[i],
                CanonicalKind::CircularSlits { alpha } | CanonicalKind::RadialSlits { alpha } => {
                    1.0 / eta[i] - 1.0 / alpha
                }
                CanonicalKind::ParallelSlits { .. } => unreachable!(),
            })
            .collect();
        let (logs, jump) = continuous_log(&args)?;
        let factor = match kind {
            CanonicalKind::RadialSlits { .. } => Complex64::i(),
            _ => -Complex64::new(1.0, 0.0),
        };
        samples.extend(logs.into_iter().map(|l| factor * l));
        closure_jump.push(factor * jump);
    }
    debug_assert_eq!(samples.len(), n * disc.num_curves());
    Ok(GammaMu { samples, closure_jump })
}

/// Canonical-region parameters recovered from the functionals of Theorem-style
/// boundary data.
#[derive(Clone, Debug)]
pub struct RecoveredParameters {
    /// Per-curve parameter: radii (annulus/disk/circular), ray angles in
    /// `[0, 2π)` (radial), or line offsets (parallel).
    pub parameters: Vec<f64>,
    /// `w(0)` for the annulus target, `w'(0)` for the disk target.
    pub c: Option<f64>,
    /// Integration constants `c_k` with `θ_k = ρ_k + c_k`.
    pub integration_constants: Vec<f64>,
}

/// Computes `h_k = (γ, φ^[k])` and `ν_k = (s ρ + μ, φ^[k])`, then translates
/// them into the per-kind parameters.
pub fn recover_parameters(
    kind: &CanonicalKind,
    gm: &GammaMu,
    anti: &AntiderivativeResult,
    phis: &[Density],
    disc: &Discretization,
) -> Result<RecoveredParameters> {
    let n = disc.nodes_per_curve();
    let sign = kind.rho_sign();
    let gamma = gm.gamma(disc);
    let rho = anti.rho_global();
    let imag = Density::new(
        (0..disc.num_nodes())
            .map(|i| sign * rho[i] + gm.samples[i].im)
            .collect(),
        n,
    );

    let mut h = Vec::with_capacity(phis.len());
    let mut nu = Vec::with_capacity(phis.len());
    for phi in phis {
        h.push(functional(&gamma, phi)?);
        nu.push(functional(&imag, phi)?);
    }

    let (parameters, c, integration_constants) = match kind {
        CanonicalKind::AnnulusSlits { .. } | CanonicalKind::DiskSlits => {
            let c = (-h[0]).exp();
            let mut params = vec![1.0];
            params.extend(h[1..].iter().map(|hk| (hk - h[0]).exp()));
            (params, Some(c), nu.clone())
        }
        CanonicalKind::CircularSlits { .. } => {
            (h.iter().map(|hk| hk.exp()).collect(), None, nu.clone())
        }
        CanonicalKind::RadialSlits { .. } => {
            // Ray angles are defined mod 2π; reduce to [0, 2π).
            let params = h.iter().map(|hk| hk.rem_euclid(TAU)).collect();
            (params, None, nu.iter().map(|v| -v).collect())
        }
        CanonicalKind::ParallelSlits { .. } => (h.clone(), None, nu.clone()),
    };

    let finite = parameters.iter().all(|v| v.is_finite())
        && integration_constants.iter().all(|v| v.is_finite())
        && c.map_or(true, |v| v.is_finite() && v > 0.0);
    if !finite {
        return Err(MapError::ParameterRecoveryFailed {
            detail: "non-finite functional values".into(),
        });
    }
    Ok(RecoveredParameters { parameters, c, integration_constants })
}

/// Boundary samples of `w` and `w'` from `θ`, `θ'`, and the parameters.
///
/// Annulus/disk/circular: `w = R e^{iθ}`, `w' = i θ' R e^{iθ} / η̇`;
/// radial: `w = e^{θ} e^{iR}`, `w' = θ' w / η̇`;
/// parallel: `w = e^{-i(π/2-δ)} (R + iθ)`, `w' = e^{-i(π/2-δ)} i θ' / η̇`.
pub fn boundary_values(
    kind: &CanonicalKind,
    disc: &Discretization,
    theta: &[f64],
    theta_prime: &[f64],
    parameters: &[f64],
) -> (Vec<Complex64>, Vec<Complex64>) {
    let total = disc.num_nodes();
    let eta_dot = disc.eta_dot();
    let mut omega = Vec::with_capacity(total);
    let mut omega_prime = Vec::with_capacity(total);
    for i in 0..total {
        let p = parameters[disc.curve_of(i)];
        match kind {
            CanonicalKind::AnnulusSlits { .. }
            | CanonicalKind::DiskSlits
            | CanonicalKind::CircularSlits { .. } => {
                let w = p * Complex64::from_polar(1.0, theta[i]);
                omega.push(w);
                omega_prime.push(Complex64::i() * theta_prime[i] * w / eta_dot[i]);
            }
            CanonicalKind::RadialSlits { .. } => {
                let w = theta[i].exp() * Complex64::from_polar(1.0, p);
                omega.push(w);
                omega_prime.push(theta_prime[i] * w / eta_dot[i]);
            }
            CanonicalKind::ParallelSlits { delta } => {
                let phase = Complex64::from_polar(1.0, -(FRAC_PI_2 - delta));
                omega.push(phase * Complex64::new(p, theta[i]));
                omega_prime.push(phase * Complex64::i() * theta_prime[i] / eta_dot[i]);
            }
        }
    }
    (omega, omega_prime)
}

/// Residuals recorded with every solve.
#[derive(Clone, Copy, Debug)]
pub struct Diagnostics {
    /// Largest relative residual of the linear solves.
    pub linear_system: f64,
    /// Largest deviation of the per-curve winding sums from their targets.
    pub winding: f64,
    /// Largest per-curve closure defect of `s ρ + μ` (should vanish for the
    /// continuous solution; decays spectrally with `n`).
    pub rho_mu_periodicity: f64,
}

/// Everything needed to evaluate `w`, `w'`, and `w^{-1}`.
#[derive(Clone, Debug)]
pub struct MapSolution {
    kind: CanonicalKind,
    region: Region,
    disc: Discretization,
    /// Boundary correspondence function at the nodes (global layout).
    pub theta: Vec<f64>,
    pub theta_prime: Vec<f64>,
    /// Per-curve canonical parameters (radii / ray angles / line offsets).
    pub parameters: Vec<f64>,
    /// Normalization constant: `w(0)` (annulus), `w'(0)` (disk).
    pub c: Option<f64>,
    pub integration_constants: Vec<f64>,
    pub omega_boundary: Vec<Complex64>,
    pub omega_prime_boundary: Vec<Complex64>,
    pub diagnostics: Diagnostics,
}

impl MapSolution {
    pub fn kind(&self) -> &CanonicalKind {
        &self.kind
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn discretization(&self) -> &Discretization {
        &self.disc
    }

    pub fn nodes_per_curve(&self) -> usize {
        self.disc.nodes_per_curve()
    }

    pub fn num_curves(&self) -> usize {
        self.disc.num_curves()
    }

    pub fn theta_curve(&self, k: usize) -> &[f64] {
        let n = self.disc.nodes_per_curve();
        &self.theta[k * n..(k + 1) * n]
    }

    pub fn theta_prime_curve(&self, k: usize) -> &[f64] {
        let n = self.disc.nodes_per_curve();
        &self.theta_prime[k * n..(k + 1) * n]
    }

    pub fn omega_boundary_curve(&self, k: usize) -> &[Complex64] {
        let n = self.disc.nodes_per_curve();
        &self.omega_boundary[k * n..(k + 1) * n]
    }

    /// Rebuilds a solution from stored fields (a solution file), recomputing
    /// the discretization and boundary samples instead of re-solving.
    pub fn from_parts(
        region: Region,
        kind: CanonicalKind,
        n: usize,
        parameters: Vec<f64>,
        c: Option<f64>,
        integration_constants: Vec<f64>,
        theta: Vec<f64>,
        theta_prime: Vec<f64>,
        diagnostics: Diagnostics,
    ) -> Result<MapSolution> {
        let disc = sample_boundary(&region, n)?;
        let total = disc.num_nodes();
        if theta.len() != total
            || theta_prime.len() != total
            || parameters.len() != disc.num_curves()
            || integration_constants.len() != disc.num_curves()
        {
            return Err(MapError::IncompatibleDensities { expected: total, got: theta.len() });
        }
        let (omega, omega_prime) = boundary_values(&kind, &disc, &theta, &theta_prime, &parameters);
        Ok(MapSolution {
            kind,
            region,
            disc,
            theta,
            theta_prime,
            parameters,
            c,
            integration_constants,
            omega_boundary: omega,
            omega_prime_boundary: omega_prime,
            diagnostics,
        })
    }
}

/// Shared assembly for one region and node count: the Nyström matrix, its
/// factorization, and the `φ^[k]` densities are identical for all five
/// targets, so one `MapSolver` serves any number of `solve` calls.
pub struct MapSolver {
    region: Region,
    disc: Discretization,
    matrix: SystemMatrix,
    phis: Vec<Density>,
    chi_residual: f64,
}

impl MapSolver {
    pub fn new(region: &Region, n: usize) -> Result<MapSolver> {
        let disc = sample_boundary(region, n)?;
        let matrix = assemble_system(&disc)?;
        let (phis, chi_residual) = chi_densities(&matrix, &disc)?;
        Ok(MapSolver {
            region: region.clone(),
            disc,
            matrix,
            phis,
            chi_residual,
        })
    }

    pub fn discretization(&self) -> &Discretization {
        &self.disc
    }

    pub fn matrix(&self) -> &SystemMatrix {
        &self.matrix
    }

    pub fn phis(&self) -> &[Density] {
        &self.phis
    }

    pub fn solve(&self, kind: &CanonicalKind) -> Result<MapSolution> {
        kind.validate(&self.region)?;
        let disc = &self.disc;
        let rhs = rhs_samples(kind, disc);
        let (mut solved, solve_residual) = solve_system(&self.matrix, &[rhs])?;
        let theta_prime = solved.remove(0);

        let targets = kind.winding_targets(disc.num_curves());
        let winding = (0..disc.num_curves())
            .map(|k| (theta_prime.curve_mean(k) - targets[k]).abs())
            .fold(0.0, f64::max);

        let anti = antiderivative(&theta_prime);
        let gm = gamma_mu(kind, disc)?;
        let recovered = recover_parameters(kind, &gm, &anti, &self.phis, disc)?;

        // Closure check of s ρ + μ: on each curve the linear growth of ρ must
        // cancel the winding of μ, leaving a 2π-periodic imaginary part.
        let sign = kind.rho_sign();
        let mut periodicity = 0.0f64;
        for k in 0..disc.num_curves() {
            let defect = (sign * TAU * anti.curves[k].a0 + gm.closure_jump[k].im).abs();
            let gamma_defect = gm.closure_jump[k].re.abs();
            if defect > BRANCH_DEFECT_LIMIT || gamma_defect > BRANCH_DEFECT_LIMIT {
                return Err(MapError::ParameterRecoveryFailed {
                    detail: format!(
                        "branch tracking failed on curve {k} (defect {defect:.3e}, gamma defect {gamma_defect:.3e})"
                    ),
                });
            }
            periodicity = periodicity.max(defect).max(gamma_defect);
        }

        let theta: Vec<f64> = (0..disc.num_nodes())
            .map(|i| {
                let k = disc.curve_of(i);
                anti.curves[k].rho[i - k * disc.nodes_per_curve()]
                    + recovered.integration_constants[k]
            })
            .collect();
        let theta_prime_vec = theta_prime.samples().to_vec();
        let (omega, omega_prime) =
            boundary_values(kind, disc, &theta, &theta_prime_vec, &recovered.parameters);

        Ok(MapSolution {
            kind: *kind,
            region: self.region.clone(),
            disc: disc.clone(),
            theta,
            theta_prime: theta_prime_vec,
            parameters: recovered.parameters,
            c: recovered.c,
            integration_constants: recovered.integration_constants,
            omega_boundary: omega,
            omega_prime_boundary: omega_prime,
            diagnostics: Diagnostics {
                linear_system: solve_residual.max(self.chi_residual),
                winding,
                rho_mu_periodicity: periodicity,
            },
        })
    }
}

/// One-shot solve. For several targets over the same region and `n`, build a
/// [`MapSolver`] once and call [`MapSolver::solve`] per kind.
pub fn solve_map(region: &Region, kind: &CanonicalKind, n: usize) -> Result<MapSolution> {
    MapSolver::new(region, n)?.solve(kind)
}

/// Default annulus auxiliary point: the center of hole 1's bounding box.
pub fn default_z1(region: &Region) -> Option<Complex64> {
    if region.holes() == 0 {
        return None;
    }
    let samples: Vec<Complex64> = (0..256)
        .map(|i| region.curves()[1].point(TAU * i as f64 / 256.0))
        .collect();
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in &samples {
        xmin = xmin.min(p.re);
        xmax = xmax.max(p.re);
        ymin = ymin.min(p.im);
        ymax = ymax.max(p.im);
    }
    Some(Complex64::new(0.5 * (xmin + xmax), 0.5 * (ymin + ymax)))
}

/// Default circular/radial auxiliary point: the centroid of the sampled
/// outer curve, if interior.
pub fn default_alpha(region: &Region) -> Result<Complex64> {
    let samples: Vec<Complex64> = (0..256)
        .map(|i| region.curves()[0].point(TAU * i as f64 / 256.0))
        .collect();
    let centroid = samples.iter().sum::<Complex64>() / 256.0;
    if locate_point(region, centroid) != PointLocation::Interior {
        return Err(MapError::InvalidAuxiliaryPoint {
            reason: "outer-curve centroid is not interior; pass alpha explicitly".into(),
        });
    }
    Ok(centroid)
}

/// Number of cyclic sign changes of `values`; slit curves carry a `θ'` with
/// exactly two (the slit tips).
pub fn sign_changes(values: &[f64]) -> usize {
    let mut count = 0;
    for i in 0..values.len() {
        let a = values[i];
        let b = values[(i + 1) % values.len()];
        if a != 0.0 && b != 0.0 && a.signum() != b.signum() {
            count += 1;
        }
    }
    count
}
