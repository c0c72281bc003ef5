//! Geodesics on a triaxial ellipsoid in 3D Minkowski space.
//!
//! The crate models the ellipsoid `x²/a + y²/b + z²/c = 1` (squared
//! semi-axes, `a > b`) with the ambient metric `dx² + dy² − dz²`, and builds
//! up from there:
//!
//! - [`mink`] — the indefinite inner product and causal classification;
//! - [`surface`] — normals, tropics, null directions, Gauss curvature, the
//!   Joachimsthal integral and the geodesically equivalent Riemannian metric;
//! - [`confocal`] — the pseudo-confocal family of quadrics, tangency of
//!   lines, and the intersection curves with the base ellipsoid;
//! - [`geodesic`] — adaptive constrained integration of the geodesic flow
//!   with tropic event detection and reflection;
//! - [`poncelet`] — the equator self-map built from null geodesics, its
//!   invariant 1-form, rotation numbers and the closure search;
//! - [`billiard`] — the degenerate-limit circle map of a plane oval defined
//!   by two chord directions;
//! - [`acceptance`] — the end-to-end verification suite used by tests and by
//!   the `verify` subcommand of the CLI.

pub mod acceptance;
pub mod billiard;
pub mod confocal;
pub mod error;
pub mod geodesic;
pub mod mink;
pub mod poncelet;
pub mod surface;

mod quad;
mod rk;
mod rootfind;

pub use error::{Error, Result};
pub use mink::{causal_class, mink_dot, CausalClass, MinkVec3};
pub use surface::{EllipsoidShape, Region, SurfacePoint};
