//! Geometry of the ellipsoid `x²/a + y²/b + z²/c = 1` with squared semi-axes
//! `a > b > 0`, `c > 0`, embedded in Minkowski 3-space.
//!
//! The induced metric is Riemannian in the two polar caps, Lorentzian in the
//! equatorial belt, and degenerates on the two tropics in between. The sign
//! of the degeneracy function `D = x²/a² + y²/b² − z²/c²` classifies the
//! region: `D > 0` in the belt, `D < 0` in the caps, `D = 0` on the tropics.
//! `D` is also the Minkowski squared length of the normal `N = (x/a, y/b, −z/c)`.

use crate::error::{Error, Result};
use crate::mink::{mink_dot, MinkVec3};

/// Absolute tolerance on the normalized quadric equation for a point to
/// count as lying on the surface.
pub const ON_SURFACE_TOLERANCE: f64 = 1e-9;

/// A point is treated as lying on a tropic when `|D| < TROPIC_BAND`.
pub const TROPIC_BAND: f64 = 1e-8;

/// Squared semi-axes of the ellipsoid. The general position condition
/// `a > b` keeps the tropics smooth curves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipsoidShape {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Region tag of a surface point, determined by the sign of `D` within the
/// tropic band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    NorthCap,
    SouthCap,
    Belt,
    NorthTropic,
    SouthTropic,
}

/// A validated point on the ellipsoid together with its region tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub p: MinkVec3,
    pub region: Region,
}

impl EllipsoidShape {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > b && b > 0.0 && c > 0.0 && a.is_finite() && c.is_finite()) {
            return Err(Error::InvalidShape { a, b, c });
        }
        Ok(Self { a, b, c })
    }

    /// Left-hand side of the quadric equation minus one.
    pub fn quadric_residual(&self, p: MinkVec3) -> f64 {
        p.x * p.x / self.a + p.y * p.y / self.b + p.z * p.z / self.c - 1.0
    }

    /// Euclidean gradient of the quadric, `2(x/a, y/b, z/c)`. Never zero on
    /// the surface.
    pub fn quadric_gradient(&self, p: MinkVec3) -> MinkVec3 {
        MinkVec3::new(2.0 * p.x / self.a, 2.0 * p.y / self.b, 2.0 * p.z / self.c)
    }

    /// Degeneracy function `D = x²/a² + y²/b² − z²/c²`.
    pub fn degeneracy(&self, p: MinkVec3) -> f64 {
        let (a, b, c) = (self.a, self.b, self.c);
        p.x * p.x / (a * a) + p.y * p.y / (b * b) - p.z * p.z / (c * c)
    }

    /// Time derivative of `D` along a velocity, `∇D · v` with the Euclidean
    /// gradient `(2x/a², 2y/b², −2z/c²)`.
    pub fn degeneracy_rate(&self, p: MinkVec3, v: MinkVec3) -> f64 {
        let (a, b, c) = (self.a, self.b, self.c);
        2.0 * (p.x * v.x / (a * a) + p.y * v.y / (b * b) - p.z * v.z / (c * c))
    }

    pub fn region_of(&self, p: MinkVec3) -> Region {
        let d = self.degeneracy(p);
        if d.abs() < TROPIC_BAND {
            if p.z >= 0.0 {
                Region::NorthTropic
            } else {
                Region::SouthTropic
            }
        } else if d > 0.0 {
            Region::Belt
        } else if p.z >= 0.0 {
            Region::NorthCap
        } else {
            Region::SouthCap
        }
    }

    /// Validate that `p` lies on the surface and tag its region.
    pub fn surface_point(&self, p: MinkVec3) -> Result<SurfacePoint> {
        let residual = self.quadric_residual(p);
        if residual.abs() > ON_SURFACE_TOLERANCE {
            return Err(Error::NotOnSurface { residual });
        }
        Ok(SurfacePoint { p, region: self.region_of(p) })
    }

    /// Project a nearby ambient point onto the quadric along the Euclidean
    /// gradient (two Newton steps; quadratic convergence makes that plenty
    /// for post-integration cleanup).
    pub fn project_to_surface(&self, p: MinkVec3) -> MinkVec3 {
        let mut q = p;
        for _ in 0..3 {
            let g = self.quadric_residual(q);
            if g.abs() < 1e-15 {
                break;
            }
            let grad = self.quadric_gradient(q);
            q = q - grad * (g / grad.euclid_norm2());
        }
        q
    }

    /// Minkowski normal `N = (x/a, y/b, −z/c)`. Satisfies `<N, t> = 0` for
    /// every tangent vector `t` and `<N, N> = D`.
    pub fn normal(&self, sp: &SurfacePoint) -> MinkVec3 {
        let p = sp.p;
        MinkVec3::new(p.x / self.a, p.y / self.b, -p.z / self.c)
    }

    /// Remove the non-tangential component of `v` at `p`. Tangency to the
    /// surface is `∇G · v = 0`, which coincides with `<N, v> = 0`.
    pub fn tangentialize(&self, p: MinkVec3, v: MinkVec3) -> MinkVec3 {
        let g = self.quadric_gradient(p);
        v - g * (v.euclid_dot(&g) / g.euclid_norm2())
    }

    /// Euclidean-orthonormal basis of the tangent plane at `p`.
    pub fn tangent_basis(&self, p: MinkVec3) -> (MinkVec3, MinkVec3) {
        let n = self.quadric_gradient(p).euclid_normalized();
        // Seed with the coordinate axis least aligned with the normal.
        let seed = if n.x.abs() <= n.y.abs() && n.x.abs() <= n.z.abs() {
            MinkVec3::new(1.0, 0.0, 0.0)
        } else if n.y.abs() <= n.z.abs() {
            MinkVec3::new(0.0, 1.0, 0.0)
        } else {
            MinkVec3::new(0.0, 0.0, 1.0)
        };
        let e1 = (seed - n * seed.euclid_dot(&n)).euclid_normalized();
        let e2 = n.cross(&e1);
        (e1, e2)
    }

    /// The two null tangent directions at a belt point, unit Euclidean norm,
    /// ordered (right, left) by the sign of the vertical slope against the
    /// equator orientation. On a tropic the pair merges into the direction of
    /// the (null) normal.
    pub fn null_directions(&self, sp: &SurfacePoint) -> Result<(MinkVec3, MinkVec3)> {
        let d = self.degeneracy(sp.p);
        if matches!(sp.region, Region::NorthCap | Region::SouthCap) {
            return Err(Error::PolarCap { d });
        }
        let (e1, e2) = self.tangent_basis(sp.p);
        let g11 = mink_dot(e1, e1);
        let g22 = mink_dot(e2, e2);
        let g12 = mink_dot(e1, e2);
        // Null directions solve g11 cos²ψ + 2 g12 cosψ sinψ + g22 sin²ψ = 0,
        // i.e. P + Q cos2ψ + R sin2ψ = 0.
        let p_coef = 0.5 * (g11 + g22);
        let q_coef = 0.5 * (g11 - g22);
        let r_coef = g12;
        let rho = (q_coef * q_coef + r_coef * r_coef).sqrt();
        // In the belt det = P² − ρ² < 0; clamp against rounding on the tropics.
        let ratio = (-p_coef / rho).clamp(-1.0, 1.0);
        let phi0 = r_coef.atan2(q_coef);
        let delta = ratio.acos();
        let mut dirs = [(0.0f64, MinkVec3::ZERO); 2];
        for (k, sign) in [1.0f64, -1.0].iter().enumerate() {
            let psi = 0.5 * (phi0 + sign * delta);
            let v = (e1 * psi.cos() + e2 * psi.sin()).euclid_normalized();
            dirs[k] = (psi, v);
        }
        let (d1, d2) = (dirs[0].1, dirs[1].1);
        // right = positive vertical slope when traversing the equator
        // counterclockwise; invariant under v -> -v.
        let slope = |v: &MinkVec3| v.z * (sp.p.x * v.y - sp.p.y * v.x);
        if slope(&d1) >= slope(&d2) {
            Ok((d1, d2))
        } else {
            Ok((d2, d1))
        }
    }

    /// Gauss curvature `K = −1 / (abc D²)`; negative everywhere it is
    /// defined and blowing up on the tropics.
    pub fn gauss_curvature(&self, sp: &SurfacePoint) -> Result<f64> {
        let d = self.degeneracy(sp.p);
        if d.abs() < TROPIC_BAND {
            return Err(Error::TropicPoint { d });
        }
        Ok(-1.0 / (self.a * self.b * self.c * d * d))
    }

    /// Quadratic form `Φ(v) = u²/a + v²/b + w²/c` (positive definite).
    pub fn phi(&self, v: MinkVec3) -> f64 {
        v.x * v.x / self.a + v.y * v.y / self.b + v.z * v.z / self.c
    }

    /// Energy of the geodesically equivalent Riemannian metric,
    /// `Φ(v) / |D|`. Undefined on the tropics.
    pub fn equivalent_metric_energy(&self, sp: &SurfacePoint, v: MinkVec3) -> Result<f64> {
        let d = self.degeneracy(sp.p);
        if d.abs() < TROPIC_BAND {
            return Err(Error::TropicPoint { d });
        }
        Ok(self.phi(v) / d.abs())
    }

    /// The first integral of the geodesic flow, `J = D(p) · Φ(v)`.
    pub fn joachimsthal(&self, p: MinkVec3, v: MinkVec3) -> f64 {
        self.degeneracy(p) * self.phi(v)
    }

    /// Equator parameterization `Q(t) = (√a cos t, √b sin t, 0)`.
    pub fn equator_point(&self, t: f64) -> MinkVec3 {
        MinkVec3::new(self.a.sqrt() * t.cos(), self.b.sqrt() * t.sin(), 0.0)
    }

    /// `Q'(t) = (−√a sin t, √b cos t, 0)`.
    pub fn equator_tangent(&self, t: f64) -> MinkVec3 {
        MinkVec3::new(-self.a.sqrt() * t.sin(), self.b.sqrt() * t.cos(), 0.0)
    }

    /// Euclidean speed of the equator, `f(t) = √(a sin²t + b cos²t)`. Also
    /// the Minkowski length of `Q'` since the equator is horizontal.
    pub fn equator_speed(&self, t: f64) -> f64 {
        let s = t.sin();
        let co = t.cos();
        (self.a * s * s + self.b * co * co).sqrt()
    }

    /// Angular chart `(θ, φ) ↦ (√a sinθ cosφ, √b sinθ sinφ, √c cosθ)`;
    /// covers everything except the poles.
    pub fn chart_point(&self, theta: f64, phi: f64) -> MinkVec3 {
        MinkVec3::new(
            self.a.sqrt() * theta.sin() * phi.cos(),
            self.b.sqrt() * theta.sin() * phi.sin(),
            self.c.sqrt() * theta.cos(),
        )
    }

    /// Closed-form parameterization of a tropic. For azimuth `φ` the point
    /// `(√a s cosφ, √b s sinφ, ±√(c(1−s²)))` with `s² = 1/(1 + c g(φ))`,
    /// `g = cos²φ/a + sin²φ/b`, satisfies both the quadric equation and D = 0.
    pub fn tropic_point(&self, phi: f64, north: bool) -> MinkVec3 {
        let (a, b, c) = (self.a, self.b, self.c);
        let g = phi.cos().powi(2) / a + phi.sin().powi(2) / b;
        let s2 = 1.0 / (1.0 + c * g);
        let s = s2.sqrt();
        let z = (c * (1.0 - s2)).sqrt();
        MinkVec3::new(
            a.sqrt() * s * phi.cos(),
            b.sqrt() * s * phi.sin(),
            if north { z } else { -z },
        )
    }

    /// Euclidean distance from `p` to the nearest point of the tropic on the
    /// same side of the equator (coarse scan plus golden-section refinement).
    pub fn distance_to_tropic(&self, p: MinkVec3) -> f64 {
        let north = p.z >= 0.0;
        let dist = |phi: f64| (p - self.tropic_point(phi, north)).euclid_norm();
        let n = 256;
        let mut best_phi = 0.0;
        let mut best = f64::INFINITY;
        for i in 0..n {
            let phi = i as f64 / n as f64 * std::f64::consts::TAU;
            let d = dist(phi);
            if d < best {
                best = d;
                best_phi = phi;
            }
        }
        let h = std::f64::consts::TAU / n as f64;
        let (mut lo, mut hi) = (best_phi - h, best_phi + h);
        let gr = 0.5 * (5.0f64.sqrt() - 1.0);
        for _ in 0..60 {
            let m1 = hi - gr * (hi - lo);
            let m2 = lo + gr * (hi - lo);
            if dist(m1) < dist(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        dist(0.5 * (lo + hi))
    }
}
