//! Solving the discretized integral equation and integrating densities.
//!
//! The pieces here are kind-agnostic: LU solves against the assembled system
//! (one factorization, many right-hand sides), the `φ^[k]` densities driven
//! by the curve indicators, the normalized inner product used to extract
//! piecewise constants from boundary data, and the spectral antiderivative
//! that integrates a periodic density nodewise.

use std::f64::consts::TAU;

use faer::linalg::solvers::Solve;
use faer::Mat;
use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{MapError, Result};
use crate::geometry::Discretization;
use crate::kernel::SystemMatrix;

/// Solves declared singular when the relative residual exceeds this.
const SINGULAR_RESIDUAL: f64 = 1e-6;

/// Real samples of a density over all global nodes, `nodes_per_curve` per
/// curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Density {
    samples: Vec<f64>,
    nodes_per_curve: usize,
}

impl Density {
    pub fn new(samples: Vec<f64>, nodes_per_curve: usize) -> Self {
        assert!(nodes_per_curve > 0 && samples.len() % nodes_per_curve == 0);
        Density { samples, nodes_per_curve }
    }

    /// Builds a density by evaluating `f` at every global node index.
    pub fn from_fn(disc: &Discretization, f: impl Fn(usize) -> f64) -> Self {
        Density {
            samples: (0..disc.num_nodes()).map(f).collect(),
            nodes_per_curve: disc.nodes_per_curve(),
        }
    }

    /// The indicator `χ^[k]` of curve `k`.
    pub fn indicator(disc: &Discretization, k: usize) -> Self {
        Density::from_fn(disc, |i| if disc.curve_of(i) == k { 1.0 } else { 0.0 })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn nodes_per_curve(&self) -> usize {
        self.nodes_per_curve
    }

    pub fn num_curves(&self) -> usize {
        self.samples.len() / self.nodes_per_curve
    }

    pub fn curve(&self, k: usize) -> &[f64] {
        &self.samples[k * self.nodes_per_curve..(k + 1) * self.nodes_per_curve]
    }

    /// Trapezoidal mean over curve `k`; this is `(J u)` restricted to that
    /// curve, i.e. `(1/2π) ∫_{J_k} u dt`.
    pub fn curve_mean(&self, k: usize) -> f64 {
        self.curve(k).iter().sum::<f64>() / self.nodes_per_curve as f64
    }
}

/// Solves `(I + N* + J) x = rhs` for each right-hand side through the shared
/// factorization. Returns the solutions and the largest relative residual
/// `‖A x - b‖∞ / ‖b‖∞` observed.
pub fn solve_system(matrix: &SystemMatrix, rhs: &[Density]) -> Result<(Vec<Density>, f64)> {
    let size = matrix.size();
    for r in rhs {
        if r.len() != size {
            return Err(MapError::IncompatibleDensities { expected: size, got: r.len() });
        }
    }
    if rhs.is_empty() {
        return Ok((Vec::new(), 0.0));
    }
    let k = rhs.len();
    let b = Mat::from_fn(size, k, |i, j| rhs[j].samples()[i]);
    let x = matrix.factorization().solve(&b);

    let residual_mat = matrix.matrix() * &x - &b;
    let mut worst = 0.0f64;
    for j in 0..k {
        let rnorm = (0..size).map(|i| residual_mat[(i, j)].abs()).fold(0.0, f64::max);
        let bnorm = (0..size).map(|i| b[(i, j)].abs()).fold(0.0, f64::max);
        let rel = if bnorm > 0.0 { rnorm / bnorm } else { rnorm };
        if !rel.is_finite() || rel > SINGULAR_RESIDUAL {
            return Err(MapError::SingularSystem);
        }
        worst = worst.max(rel);
    }

    let solutions = (0..k)
        .map(|j| {
            Density::new(
                (0..size).map(|i| x[(i, j)]).collect(),
                matrix.nodes_per_curve(),
            )
        })
        .collect();
    Ok((solutions, worst))
}

/// The densities `φ^[k]` solving `(I + N* + J) φ^[k] = -χ^[k]` for every
/// curve `k`. They depend only on the region and `n`.
pub fn chi_densities(matrix: &SystemMatrix, disc: &Discretization) -> Result<(Vec<Density>, f64)> {
    let rhs: Vec<Density> = (0..matrix.num_curves())
        .map(|k| {
            Density::from_fn(disc, |i| if disc.curve_of(i) == k { -1.0 } else { 0.0 })
        })
        .collect();
    solve_system(matrix, &rhs)
}

/// Normalized inner product `(u, v) = (1/2π) ∫_J u v dt`, discretized by the
/// trapezoidal rule to `(1/n) Σ_i u_i v_i` over all global nodes.
pub fn functional(u: &Density, phi: &Density) -> Result<f64> {
    if u.len() != phi.len() || u.nodes_per_curve() != phi.nodes_per_curve() {
        return Err(MapError::IncompatibleDensities { expected: u.len(), got: phi.len() });
    }
    let dot: f64 = u
        .samples()
        .iter()
        .zip(phi.samples())
        .map(|(a, b)| a * b)
        .sum();
    Ok(dot / u.nodes_per_curve() as f64)
}

/// Nodewise antiderivative of one curve's density together with its
/// interpolating-polynomial coefficients.
#[derive(Clone, Debug)]
pub struct CurveAntiderivative {
    /// `ρ(t_i) = a0 t_i + Σ_{j≥1} (a_j sin jt_i - b_j cos jt_i)/j`.
    pub rho: Vec<f64>,
    /// Sample mean; the coefficient of the nonperiodic linear term.
    pub a0: f64,
    /// `a_1 .. a_{n/2}`; the last entry is the Nyquist cosine coefficient.
    pub cos_coeffs: Vec<f64>,
    /// `b_1 .. b_{n/2-1}`.
    pub sin_coeffs: Vec<f64>,
}

/// Per-curve antiderivatives of a global density.
#[derive(Clone, Debug)]
pub struct AntiderivativeResult {
    pub curves: Vec<CurveAntiderivative>,
}

impl AntiderivativeResult {
    pub fn rho_global(&self) -> Vec<f64> {
        self.curves.iter().flat_map(|c| c.rho.iter().copied()).collect()
    }
}

/// Integrates the trigonometric interpolant of `samples` (taken at the `n`
/// equidistant nodes, `n` even) term by term. The Nyquist mode integrates to
/// `(a_{n/2}/(n/2)) sin((n/2) t)`, which vanishes at every node, so it
/// contributes nothing to the returned values.
pub fn trig_antiderivative(samples: &[f64]) -> CurveAntiderivative {
    let n = samples.len();
    assert!(n >= 2 && n % 2 == 0, "need an even number of samples");
    let half = n / 2;

    let mut buf: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(n).process(&mut buf);

    let a0 = buf[0].re / n as f64;
    let mut cos_coeffs = Vec::with_capacity(half);
    let mut sin_coeffs = Vec::with_capacity(half - 1);
    for j in 1..half {
        cos_coeffs.push(2.0 * buf[j].re / n as f64);
        sin_coeffs.push(-2.0 * buf[j].im / n as f64);
    }
    cos_coeffs.push(buf[half].re / n as f64);

    // Spectral antiderivative of the periodic part: divide by i*frequency,
    // drop mean and Nyquist.
    let mut spec = vec![Complex64::new(0.0, 0.0); n];
    for j in 1..half {
        let freq = Complex64::new(0.0, j as f64);
        spec[j] = buf[j] / freq;
        spec[n - j] = buf[n - j] / (-freq);
    }
    planner.plan_fft_inverse(n).process(&mut spec);

    let rho = (0..n)
        .map(|i| a0 * TAU * i as f64 / n as f64 + spec[i].re / n as f64)
        .collect();
    CurveAntiderivative { rho, a0, cos_coeffs, sin_coeffs }
}

/// Antiderivative of each curve's block of a global density.
pub fn antiderivative(density: &Density) -> AntiderivativeResult {
    AntiderivativeResult {
        curves: (0..density.num_curves())
            .map(|k| trig_antiderivative(density.curve(k)))
            .collect(),
    }
}

/// Differentiates the trigonometric interpolant of 2π-periodic samples at the
/// nodes. The Nyquist mode's derivative vanishes there.
pub fn spectral_derivative(samples: &[Complex64]) -> Vec<Complex64> {
    let n = samples.len();
    assert!(n >= 2 && n % 2 == 0, "need an even number of samples");
    let mut buf = samples.to_vec();
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(n).process(&mut buf);
    for (k, v) in buf.iter_mut().enumerate() {
        let freq = if k < n / 2 {
            k as f64
        } else if k == n / 2 {
            0.0
        } else {
            k as f64 - n as f64
        };
        *v *= Complex64::new(0.0, freq);
    }
    planner.plan_fft_inverse(n).process(&mut buf);
    buf.into_iter().map(|v| v / n as f64).collect()
}

pub fn spectral_derivative_real(samples: &[f64]) -> Vec<f64> {
    let complex: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    spectral_derivative(&complex).into_iter().map(|v| v.re).collect()
}
