//! Crate-wide error type.

use crate::geodesic::GeodesicState;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("zero vector has no causal class")]
    ZeroVector,
    #[error("invalid ellipsoid shape: require a > b > 0 and c > 0, got ({a}, {b}, {c})")]
    InvalidShape { a: f64, b: f64, c: f64 },
    #[error("point is not on the ellipsoid (quadric residual {residual:.3e})")]
    NotOnSurface { residual: f64 },
    #[error("operation undefined on the tropic band (|D| = {d:.3e})")]
    TropicPoint { d: f64 },
    #[error("no real null tangent directions in a polar cap (D = {d:.3e})")]
    PolarCap { d: f64 },
    #[error("line direction is null; tangency count is undefined for null lines")]
    NullLineDirection,
    #[error("lambda = {lambda} outside the intersection range ({lo}, {hi})")]
    LambdaOutOfRange { lambda: f64, lo: f64, hi: f64 },
    #[error("degenerate projection conic at lambda = -b")]
    DegenerateConic,
    #[error("gamma curve parameter out of range (z^2 = {z2:.3e} < 0)")]
    GammaParamOutOfRange { z2: f64 },
    #[error("velocity is not tangent to the surface (<v,N> residual {residual:.3e})")]
    NotTangent { residual: f64 },
    #[error("step size underflow at t = {t:.6e} before event convergence")]
    StepUnderflow { t: f64, last: Box<GeodesicState> },
    #[error("trace does not end in a tropic hit")]
    NoTropicHit,
    #[error("no outgoing branch found for reflection (residual {residual:.3e})")]
    ReflectionBranch { residual: f64 },
    #[error("step budget exhausted after {steps} steps")]
    StepBudget { steps: usize },
    #[error("map shift spread {spread:.3e} exceeds tolerance {tol:.3e}; integration is suspect")]
    ShiftSpread { spread: f64, tol: f64 },
    #[error("no shape with the requested rotation number on the family")]
    ClosureNotFound,
    #[error("rotation number is not monotone along the family near c = {c:.6}")]
    FamilyNotMonotone { c: f64 },
    #[error("direction pair is degenerate (parallel directions)")]
    ParallelDirections,
    #[error("oval is not strictly convex")]
    NotConvex,
    #[error("invalid oval data: {0}")]
    InvalidOval(String),
}

pub type Result<T> = std::result::Result<T, Error>;
