use std::fmt;

/// Errors raised while building regions, assembling and solving the boundary
/// integral equation, or evaluating the computed maps.
#[derive(Debug, Clone, PartialEq)]
pub enum MapError {
    /// The region description contains no curves.
    NoBoundary,
    /// Curve `curve` is traversed in the wrong direction (outer boundary must
    /// run counterclockwise, holes clockwise).
    WrongOrientation { curve: usize },
    /// Two boundary curves touch or cross.
    CurvesIntersect { curve_a: usize, curve_b: usize },
    /// A curve fails a basic requirement (finite parameters, nonzero axes,
    /// nonvanishing velocity, periodicity, containment).
    InvalidCurve { curve: usize, reason: String },
    /// Discretization size is odd or too small.
    InvalidDiscretizationSize { n: usize },
    /// Two distinct nodes coincide, so the kernel cannot be evaluated.
    DegenerateGeometry { node_a: usize, node_b: usize },
    /// The dense system would exceed the supported size.
    SystemTooLarge { size: usize },
    /// The linear system could not be solved to working accuracy.
    SingularSystem,
    /// Densities of mismatched length were combined.
    IncompatibleDensities { expected: usize, got: usize },
    /// An auxiliary point (origin, `z1`, `alpha`) is not where the chosen
    /// canonical domain requires it.
    InvalidAuxiliaryPoint { reason: String },
    /// The annulus target needs a region with at least one hole.
    NeedsHole,
    /// Recovered parameters are not finite, or branch tracking of the
    /// boundary logarithms failed.
    ParameterRecoveryFailed { detail: String },
    /// Evaluation point is not strictly interior to the region.
    PointOutsideDomain,
    /// Evaluation at the pole of a map with `w(0) = infinity`.
    PoleOfMap,
    /// Inverse evaluation point is within tolerance of the image boundary.
    TooCloseToSlits,
    /// No closed-form oracle exists for this kind/region combination.
    NoClosedForm,
    /// The origin must lie inside the region.
    OriginNotInterior,
    /// Convergence study grids must share nodes with the reference grid.
    NonNestedGrids { n: usize, reference: usize },
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::NoBoundary => write!(f, "no boundary"),
            MapError::WrongOrientation { curve } => {
                write!(f, "curve {curve} wrongly oriented")
            }
            MapError::CurvesIntersect { curve_a, curve_b } => {
                write!(f, "curves intersect (curve {curve_a} and curve {curve_b})")
            }
            MapError::InvalidCurve { curve, reason } => {
                write!(f, "invalid curve {curve}: {reason}")
            }
            MapError::InvalidDiscretizationSize { n } => {
                write!(f, "invalid discretization size: n = {n} (need an even n >= 4)")
            }
            MapError::DegenerateGeometry { node_a, node_b } => {
                write!(f, "degenerate geometry: nodes {node_a} and {node_b} coincide")
            }
            MapError::SystemTooLarge { size } => {
                write!(f, "system too large: {size} unknowns")
            }
            MapError::SingularSystem => {
                write!(f, "discretization too coarse or invalid region")
            }
            MapError::IncompatibleDensities { expected, got } => {
                write!(f, "incompatible densities: expected length {expected}, got {got}")
            }
            MapError::InvalidAuxiliaryPoint { reason } => {
                write!(f, "invalid auxiliary point: {reason}")
            }
            MapError::NeedsHole => write!(f, "needs at least one hole"),
            MapError::ParameterRecoveryFailed { detail } => {
                write!(f, "parameter recovery failed: {detail}")
            }
            MapError::PointOutsideDomain => write!(f, "point outside domain"),
            MapError::PoleOfMap => write!(f, "pole of the map"),
            MapError::TooCloseToSlits => write!(f, "too close to slits"),
            MapError::NoClosedForm => write!(f, "no closed form available"),
            MapError::OriginNotInterior => write!(f, "origin not in G"),
            MapError::NonNestedGrids { n, reference } => {
                write!(f, "node sets incomparable: n = {n} does not divide reference {reference}")
            }
        }
    }
}

impl std::error::Error for MapError {}

pub type Result<T> = std::result::Result<T, MapError>;
