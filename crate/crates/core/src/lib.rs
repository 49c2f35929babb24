//! Conformal maps from bounded multiply connected planar regions onto the
//! five classical canonical slit domains.
//!
//! The map, its derivative, and its inverse all come out of one boundary
//! integral equation with the adjoint generalized Neumann kernel: the
//! equation `(I + N* + J) θ' = rhs` is discretized by the Nyström method
//! with the trapezoidal rule, solved once per right-hand side through a
//! shared dense LU factorization, and the boundary correspondence function
//! `θ` is recovered by spectral integration. Only the right-hand side
//! differs between the five targets:
//!
//! - annulus with circular slits (`w(0) > 0`),
//! - unit disk with circular slits (`w(0) = 0`, `w'(0) > 0`),
//! - circular slit plane, radial slit plane (pole at the origin, residue 1),
//! - parallel slit plane (`w(z) - 1/z` vanishing at the origin).
//!
//! Interior values of `w` and `w'` and values of `w^{-1}` are trapezoidal
//! sums of Cauchy-type integrals over the computed boundary data.
//!
//! ```
//! use num_complex::Complex64;
//! use slitmap_core::{solve_map, map_point, CanonicalKind, CurveSpec, Region};
//!
//! // Unit disk onto itself: the disk-with-slits target degenerates to the
//! // identity map.
//! let region = Region::new(vec![CurveSpec::circle(Complex64::new(0.0, 0.0), 1.0)]).unwrap();
//! let sol = solve_map(&region, &CanonicalKind::DiskSlits, 32).unwrap();
//! let z = Complex64::new(0.3, 0.1);
//! assert!((map_point(&sol, z).unwrap() - z).norm() < 1e-10);
//! ```

pub mod canonical;
pub mod cli;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod kernel;
pub mod solver;
pub mod verify;

pub use canonical::{
    boundary_values, build_rhs, default_alpha, default_z1, gamma_mu, recover_parameters,
    sign_changes, solve_map, CanonicalKind, Diagnostics, MapSolution, MapSolver,
};
pub use error::{MapError, Result};
pub use eval::{
    evaluate_request, image_grid, inverse_point, map_derivative, map_point, DomainSide,
    EvalOutcome, EvalRequest, GridSpec, GridStyle, InverseResult, Polyline, PolylineRole,
};
pub use geometry::{
    locate_point, sample_boundary, CurveSpec, Discretization, PointLocation, Region, RegionConfig,
};
pub use kernel::{assemble_system, kernel_n, SystemMatrix};
pub use solver::{
    antiderivative, chi_densities, functional, solve_system, spectral_derivative,
    spectral_derivative_real, trig_antiderivative, AntiderivativeResult, CurveAntiderivative,
    Density,
};
pub use verify::{
    convergence_table, interior_lattice, oracle_disk, oracle_eccentric_annulus, selftest,
    ConvergenceRow, Oracle, SelftestCheck,
};
