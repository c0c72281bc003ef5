//! Minkowski linear algebra in signature (+, +, −).
//!
//! The ambient space is R³ with the indefinite inner product
//! `<p, q> = p.x q.x + p.y q.y − p.z q.z`. Everything else in the crate is
//! built on this product and on the causal classification it induces.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance of the null band: a vector counts as light-like when
/// `|<v,v>| <= NULL_TOLERANCE * |v|²` with `|v|` the Euclidean norm.
/// Integrator output is inexact near the tropics, so an exact-zero test
/// would be useless.
pub const NULL_TOLERANCE: f64 = 1e-10;

/// A vector in Minkowski 3-space, used for both positions and velocities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkVec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MinkVec3 {
    /// All constructors go through here; non-finite components are rejected.
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        assert!(
            x.is_finite() && y.is_finite() && z.is_finite(),
            "MinkVec3 components must be finite, got ({x}, {y}, {z})"
        );
        Self { x, y, z }
    }

    pub const ZERO: Self = Self { x: 0.0, y: 0.0, z: 0.0 };

    /// Minkowski squared length `<v, v>`.
    pub fn mink_norm2(&self) -> f64 {
        mink_dot(*self, *self)
    }

    pub fn euclid_dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn euclid_norm2(&self) -> f64 {
        self.euclid_dot(self)
    }

    pub fn euclid_norm(&self) -> f64 {
        self.euclid_norm2().sqrt()
    }

    /// Euclidean cross product; used to build tangent-plane bases.
    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    /// Rescale to unit Euclidean norm.
    pub fn euclid_normalized(&self) -> Self {
        let n = self.euclid_norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        *self * (1.0 / n)
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }
}

impl Add for MinkVec3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for MinkVec3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Mul<f64> for MinkVec3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for MinkVec3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

/// Causal type of a vector with respect to the light cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalClass {
    SpaceLike,
    TimeLike,
    LightLike,
}

/// The indefinite inner product `p.x q.x + p.y q.y − p.z q.z`.
pub fn mink_dot(p: MinkVec3, q: MinkVec3) -> f64 {
    p.x * q.x + p.y * q.y - p.z * q.z
}

/// Classify a nonzero vector against the light cone, with a relative null
/// band of width [`NULL_TOLERANCE`].
pub fn causal_class(v: MinkVec3) -> Result<CausalClass> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let e = mink_dot(v, v);
    let band = NULL_TOLERANCE * v.euclid_norm2();
    Ok(if e > band {
        CausalClass::SpaceLike
    } else if e < -band {
        CausalClass::TimeLike
    } else {
        CausalClass::LightLike
    })
}
