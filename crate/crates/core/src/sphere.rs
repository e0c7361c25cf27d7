//! Points, arcs, hemispheres and lunes on the unit sphere S².

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::{EPS_CONTAIN, EPS_INCIDENCE, EPS_UNIT};
use crate::vec3::{self, Vec3};

/// A unit vector in R³, i.e. a point of S².
///
/// Serializes as a `[x, y, z]` triple.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct SpherePoint([f64; 3]);

impl SpherePoint {
    /// Builds a point from arbitrary (nonzero, finite) coordinates, renormalizing.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::try_from([x, y, z])
    }

    /// Normalizes `v`. Panics on a zero vector; callers guarantee nondegeneracy.
    pub(crate) fn from_vec(v: Vec3) -> Self {
        Self(vec3::normalize(v).expect("zero vector cannot be normalized onto S²"))
    }

    pub(crate) fn try_from_vec(v: Vec3) -> Option<Self> {
        vec3::normalize(v).map(Self)
    }

    pub const fn x(&self) -> f64 {
        self.0[0]
    }

    pub const fn y(&self) -> f64 {
        self.0[1]
    }

    pub const fn z(&self) -> f64 {
        self.0[2]
    }

    pub const fn xyz(&self) -> [f64; 3] {
        self.0
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        vec3::dot(self.0, other.0)
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint(vec3::scale(self.0, -1.0))
    }

    pub fn distance(&self, other: &SpherePoint) -> f64 {
        geodesic_distance(self, other)
    }

    /// Unit tangent at `self` pointing along the minor great-circle arc toward `other`.
    pub fn tangent_toward(&self, other: &SpherePoint) -> Option<Vec3> {
        let t = vec3::sub(other.0, vec3::scale(self.0, self.dot(other)));
        vec3::normalize(t)
    }

    /// Point reached by walking `angle` radians from `self` along the unit tangent `dir`.
    pub fn walk(&self, dir: Vec3, angle: f64) -> SpherePoint {
        SpherePoint::from_vec(vec3::combine(angle.cos(), self.0, angle.sin(), dir))
    }

    /// Point at distance `angle` from `self` on the great circle through `other`, on `other`'s side.
    pub fn toward(&self, other: &SpherePoint, angle: f64) -> Option<SpherePoint> {
        self.tangent_toward(other).map(|t| self.walk(t, angle))
    }

    /// Right-handed orthonormal tangent frame `(e1, e2)` with `e1 × e2 = self`.
    pub fn tangent_frame(&self) -> (Vec3, Vec3) {
        let p = self.0;
        let helper = if p[0].abs() < 0.6 {
            [1.0, 0.0, 0.0]
        } else if p[1].abs() < 0.6 {
            [0.0, 1.0, 0.0]
        } else {
            [0.0, 0.0, 1.0]
        };
        let e1 = vec3::normalize(vec3::cross(helper, p)).expect("helper is never parallel");
        let e2 = vec3::cross(p, e1);
        (e1, e2)
    }

    /// Rotation of `self` by `angle` about the unit `axis` (right-hand rule).
    pub fn rotate(&self, axis: &SpherePoint, angle: f64) -> SpherePoint {
        let (s, c) = angle.sin_cos();
        let k = axis.0;
        let v = self.0;
        let kxv = vec3::cross(k, v);
        let kdv = vec3::dot(k, v);
        SpherePoint::from_vec([
            v[0] * c + kxv[0] * s + k[0] * kdv * (1.0 - c),
            v[1] * c + kxv[1] * s + k[1] * kdv * (1.0 - c),
            v[2] * c + kxv[2] * s + k[2] * kdv * (1.0 - c),
        ])
    }

    pub(crate) fn vec(&self) -> Vec3 {
        self.0
    }
}

impl TryFrom<[f64; 3]> for SpherePoint {
    type Error = Error;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        if !v.iter().all(|c| c.is_finite()) {
            return Err(Error::InvalidBody("point coordinates must be finite".into()));
        }
        vec3::normalize(v).map(SpherePoint).ok_or_else(|| Error::InvalidBody("point must be a nonzero vector".into()))
    }
}

impl From<SpherePoint> for [f64; 3] {
    fn from(p: SpherePoint) -> Self {
        p.0
    }
}

impl fmt::Debug for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.12}, {:.12}, {:.12})", self.0[0], self.0[1], self.0[2])
    }
}

/// Spherical distance in `[0, π]`.
///
/// Evaluated as `atan2(|a×b|, a·b)`, which never leaves the domain and keeps
/// full precision near 0 and π where `acos` of the dot product does not.
pub fn geodesic_distance(a: &SpherePoint, b: &SpherePoint) -> f64 {
    let c = vec3::norm(vec3::cross(a.0, b.0));
    let d = a.dot(b).clamp(-1.0, 1.0);
    c.atan2(d)
}

/// Minor great-circle arc between two non-antipodal points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeodesicArc {
    pub a: SpherePoint,
    pub b: SpherePoint,
}

impl GeodesicArc {
    pub fn new(a: SpherePoint, b: SpherePoint) -> Result<Self> {
        if a.dot(&b) <= -1.0 + EPS_UNIT {
            return Err(Error::BadConfiguration("arc endpoints are antipodal".into()));
        }
        Ok(Self { a, b })
    }

    pub fn length(&self) -> f64 {
        geodesic_distance(&self.a, &self.b)
    }

    /// Point at fraction `t ∈ [0, 1]` of the way from `a` to `b`.
    pub fn point_at(&self, t: f64) -> SpherePoint {
        let len = self.length();
        match self.a.tangent_toward(&self.b) {
            Some(dir) => self.a.walk(dir, t * len),
            None => self.a,
        }
    }

    /// Excess `|ax| + |xb| − |ab|`; zero exactly on the arc.
    pub fn incidence_residual(&self, x: &SpherePoint) -> f64 {
        geodesic_distance(&self.a, x) + geodesic_distance(x, &self.b) - self.length()
    }

    pub fn contains_point(&self, x: &SpherePoint, tol: f64) -> bool {
        self.incidence_residual(x) <= tol
    }

    /// Whether two arcs share a point (within `tol` of incidence).
    pub fn intersects(&self, other: &GeodesicArc, tol: f64) -> bool {
        for p in [self.a, self.b] {
            if other.contains_point(&p, tol) {
                return true;
            }
        }
        for p in [other.a, other.b] {
            if self.contains_point(&p, tol) {
                return true;
            }
        }
        let n1 = vec3::cross(self.a.0, self.b.0);
        let n2 = vec3::cross(other.a.0, other.b.0);
        match SpherePoint::try_from_vec(vec3::cross(n1, n2)) {
            Some(x) => [x, x.antipode()].iter().any(|x| self.contains_point(x, tol) && other.contains_point(x, tol)),
            // Same great circle and no endpoint inside the other: disjoint.
            None => false,
        }
    }
}

/// Closed hemisphere `H(c) = { p : p·c ≥ 0 }`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hemisphere {
    pub center: SpherePoint,
}

impl Hemisphere {
    pub fn new(center: SpherePoint) -> Self {
        Self { center }
    }

    /// Membership with the default slack `EPS_CONTAIN`.
    pub fn contains(&self, p: &SpherePoint) -> bool {
        self.contains_with(p, EPS_CONTAIN)
    }

    pub fn contains_with(&self, p: &SpherePoint, eps: f64) -> bool {
        p.dot(&self.center) >= -eps
    }

    pub fn on_boundary(&self, p: &SpherePoint, eps: f64) -> bool {
        p.dot(&self.center).abs() <= eps
    }

    pub fn opposite(&self) -> Hemisphere {
        Hemisphere::new(self.center.antipode())
    }
}

/// Membership test `p ∈ H`.
pub fn hemisphere_contains(h: &Hemisphere, p: &SpherePoint) -> bool {
    h.contains(p)
}

/// Intersection `G ∩ H` of two distinct, non-opposite hemispheres.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Lune {
    pub g: Hemisphere,
    pub h: Hemisphere,
}

impl Lune {
    pub fn new(g: Hemisphere, h: Hemisphere) -> Result<Self> {
        if g.center.dot(&h.center).abs() >= 1.0 - EPS_UNIT {
            return Err(Error::DegenerateLune);
        }
        Ok(Self { g, h })
    }

    /// Centers `(u_G, u_H)` of the half-circles `G/H` and `H/G` bounding the lune.
    pub fn face_centers(&self) -> (SpherePoint, SpherePoint) {
        lune_face_centers(self).expect("validated on construction")
    }

    /// Thickness via the closed form `π − |gh|`.
    pub fn thickness(&self) -> f64 {
        PI - geodesic_distance(&self.g.center, &self.h.center)
    }

    /// Thickness as the distance between the two face centers.
    pub fn thickness_from_faces(&self) -> f64 {
        let (u, v) = self.face_centers();
        geodesic_distance(&u, &v)
    }

    pub fn contains(&self, p: &SpherePoint) -> bool {
        self.g.contains(p) && self.h.contains(p)
    }
}

/// Face centers of a lune: `u_G = normalize(h − (h·g) g)`, `u_H = normalize(g − (g·h) h)`.
pub fn lune_face_centers(l: &Lune) -> Result<(SpherePoint, SpherePoint)> {
    let g = l.g.center.vec();
    let h = l.h.center.vec();
    let gh = vec3::dot(g, h);
    if gh.abs() >= 1.0 - EPS_UNIT {
        return Err(Error::DegenerateLune);
    }
    let u_g = SpherePoint::try_from_vec(vec3::sub(h, vec3::scale(g, gh))).ok_or(Error::DegenerateLune)?;
    let u_h = SpherePoint::try_from_vec(vec3::sub(g, vec3::scale(h, gh))).ok_or(Error::DegenerateLune)?;
    Ok((u_g, u_h))
}

/// Lune thickness in `(0, π)`.
pub fn lune_thickness(l: &Lune) -> Result<f64> {
    if l.g.center.dot(&l.h.center).abs() >= 1.0 - EPS_UNIT {
        return Err(Error::DegenerateLune);
    }
    Ok(l.thickness())
}

/// The narrowest lune `K ∩ M` among those with `q ∈ bd(M)`, for `p ∈ bd(K)` and
/// `q` on the arc from `p` orthogonal to `bd(K)`.
///
/// The second hemisphere's center `m` lies on the great circle through `p` and `q`,
/// at distance π/2 from `q` on the side of `p`, so `pq` meets `bd(M)` orthogonally at
/// `q`. The returned lune has thickness `|pq|`.
pub fn narrowest_lune_through(k: &Hemisphere, p: &SpherePoint, q: &SpherePoint) -> Result<Lune> {
    let kc = k.center;
    if p.dot(&kc).abs() > EPS_INCIDENCE {
        return Err(Error::BadConfiguration(format!("p is not on bd(K): |p·k| = {:.3e}", p.dot(&kc).abs())));
    }
    let pq = geodesic_distance(p, q);
    if pq <= EPS_UNIT {
        return Err(Error::BadConfiguration("p and q coincide".into()));
    }
    if pq >= FRAC_PI_2 {
        return Err(Error::BadConfiguration(format!("|pq| = {pq} is not below π/2")));
    }
    // q must lie on the meridian from p toward the center of K.
    let dir =
        p.tangent_toward(&kc).ok_or_else(|| Error::BadConfiguration("p coincides with the center of K".into()))?;
    let on_arc = p.walk(dir, pq);
    if geodesic_distance(&on_arc, q) > EPS_INCIDENCE {
        return Err(Error::BadConfiguration(format!(
            "q is off the arc from p orthogonal to bd(K) by {:.3e}",
            geodesic_distance(&on_arc, q)
        )));
    }
    // Forward tangent at q is (−sin|pq|) p + cos|pq| dir; walk a quarter turn against it.
    let forward = vec3::combine(-pq.sin(), p.vec(), pq.cos(), dir);
    let m = q.walk(vec3::scale(forward, -1.0), FRAC_PI_2);
    Lune::new(*k, Hemisphere::new(m))
}

/// Centers of `count` hemispheres with `q` on their boundary, evenly spaced on the
/// great circle polar to `q`.
pub fn hemispheres_through(q: &SpherePoint, count: usize) -> Vec<Hemisphere> {
    let (e1, e2) = q.tangent_frame();
    (0..count)
        .map(|i| {
            let phi = 2.0 * PI * i as f64 / count as f64;
            Hemisphere::new(SpherePoint::from_vec(vec3::combine(phi.cos(), e1, phi.sin(), e2)))
        })
        .collect()
}
