//! The generalized Neumann kernel with coefficient `A = η`, its adjoint, and
//! the Nyström matrix of `I + N* + J`.
//!
//! `N(s,t) = (1/π) Im[(η(s)/η(t)) η̇(t)/(η(t)-η(s))]` is continuous up to the
//! diagonal; the rank-(m+1) operator `J` averages a density over each curve.
//! The trapezoidal rule turns `I + N* + J` into a dense `(m+1)n` square
//! system that is uniquely solvable for sufficiently fine discretizations.

use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use faer::linalg::solvers::PartialPivLu;
use faer::Mat;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{MapError, Result};
use crate::geometry::Discretization;

/// Hard cap on the number of unknowns; the dense matrix alone is 2 GiB here.
const MAX_UNKNOWNS: usize = 16_384;

fn coincident(a: Complex64, b: Complex64) -> bool {
    let d = (a - b).norm();
    d < 1e-14 * (a.norm() + b.norm())
}

/// Generalized Neumann kernel `N(s_i, t_j)` between nodes `i` and `j` of one
/// discretization. The diagonal is the continuity limit
/// `(1/π) Im[η̈/(2η̇) - η̇/η]`.
pub fn kernel_n(disc: &Discretization, i: usize, j: usize) -> Result<f64> {
    let eta = disc.eta();
    let eta_dot = disc.eta_dot();
    if i == j {
        let v = eta_ddot_term(disc, i);
        return Ok(v);
    }
    if coincident(eta[i], eta[j]) {
        return Err(MapError::DegenerateGeometry { node_a: i, node_b: j });
    }
    Ok(((eta[i] / eta[j]) * eta_dot[j] / (eta[j] - eta[i])).im / PI)
}

fn eta_ddot_term(disc: &Discretization, i: usize) -> f64 {
    let d = disc.eta_dot()[i];
    let dd = disc.eta_ddot()[i];
    (dd / (2.0 * d) - d / disc.eta()[i]).im / PI
}

/// Dense Nyström matrix of `I + N* + J`, with entry
/// `(i,j) = δ_ij + (2π/n) N(t_j, t_i) + (1/n) [curve(i) = curve(j)]`.
///
/// The matrix depends only on the region and `n`, never on the target
/// canonical domain, so one factorization serves every right-hand side.
pub struct SystemMatrix {
    nodes_per_curve: usize,
    num_curves: usize,
    mat: Mat<f64>,
    lu: OnceLock<PartialPivLu<f64>>,
}

impl SystemMatrix {
    pub fn size(&self) -> usize {
        self.nodes_per_curve * self.num_curves
    }

    pub fn nodes_per_curve(&self) -> usize {
        self.nodes_per_curve
    }

    pub fn num_curves(&self) -> usize {
        self.num_curves
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.mat[(i, j)]
    }

    pub(crate) fn matrix(&self) -> &Mat<f64> {
        &self.mat
    }

    /// LU factors, computed on first use and reused for every solve.
    pub(crate) fn factorization(&self) -> &PartialPivLu<f64> {
        self.lu.get_or_init(|| self.mat.partial_piv_lu())
    }
}

/// Assembles `I + N* + J` by the trapezoidal rule on the nodes of `disc`.
pub fn assemble_system(disc: &Discretization) -> Result<SystemMatrix> {
    let size = disc.num_nodes();
    if size > MAX_UNKNOWNS {
        return Err(MapError::SystemTooLarge { size });
    }
    let n = disc.nodes_per_curve();
    let eta = disc.eta();
    let eta_dot = disc.eta_dot();

    // A = η must not vanish on the boundary.
    let scale = disc.scale();
    if let Some(i) = (0..size).find(|&i| eta[i].norm() < 1e-14 * scale) {
        return Err(MapError::InvalidAuxiliaryPoint {
            reason: format!("boundary passes through the origin near node {i}"),
        });
    }

    let w = TAU / n as f64;
    let inv_n = 1.0 / n as f64;
    let diag: Vec<f64> = (0..size).map(|i| eta_ddot_term(disc, i)).collect();

    let mut buf = vec![0.0f64; size * size];
    buf.par_chunks_mut(size)
        .enumerate()
        .try_for_each(|(j, col)| -> Result<()> {
            let curve_j = disc.curve_of(j);
            for (i, slot) in col.iter_mut().enumerate() {
                let same_curve = disc.curve_of(i) == curve_j;
                let jterm = if same_curve { inv_n } else { 0.0 };
                *slot = if i == j {
                    1.0 + w * diag[i] + jterm
                } else {
                    if coincident(eta[i], eta[j]) {
                        return Err(MapError::DegenerateGeometry { node_a: i, node_b: j });
                    }
                    // Adjoint kernel: N*(s_i, t_j) = N(t_j, s_i).
                    let kernel = ((eta[j] / eta[i]) * eta_dot[i] / (eta[i] - eta[j])).im / PI;
                    w * kernel + jterm
                };
            }
            Ok(())
        })?;

    let mat = Mat::from_fn(size, size, |i, j| buf[j * size + i]);
    Ok(SystemMatrix {
        nodes_per_curve: n,
        num_curves: disc.num_curves(),
        mat,
        lu: OnceLock::new(),
    })
}
