use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::sphere::{geodesic_distance, SpherePoint};
use crate::tolerance::{EPS_INCIDENCE, EPS_UNIT};
use crate::vec3::{self, Vec3};

/// A piece of the circle of spherical radius `ρ ∈ [0, π/2]` about `center`,
/// traversed counterclockwise (seen from outside the sphere) through `sweep` radians.
///
/// Points are `cos ρ·c + sin ρ·(cos θ·e1 + sin θ·e2)` for `θ ∈ [0, sweep]`, where
/// `(e1, e2, c)` is right-handed. The disk about `center` lies on the left, so a
/// polygon edge is the `ρ = π/2` case with the edge's pole as center.
#[derive(Clone, Copy, PartialEq)]
pub struct CircleArc {
    center: SpherePoint,
    radius: f64,
    e1: Vec3,
    e2: Vec3,
    sweep: f64,
}

impl std::fmt::Debug for CircleArc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CircleArc")
            .field("center", &self.center)
            .field("radius", &self.radius)
            .field("start", &self.start())
            .field("end", &self.end())
            .field("sweep", &self.sweep)
            .finish()
    }
}

impl CircleArc {
    /// Arc from `start` to `end`; `full` marks a complete circle (`start == end`).
    pub fn from_endpoints(
        center: SpherePoint,
        radius: f64,
        start: SpherePoint,
        end: SpherePoint,
        full: bool,
    ) -> Result<Self> {
        if !(radius > 0.0 && radius <= FRAC_PI_2 + EPS_UNIT) {
            return Err(Error::InvalidBody(format!("arc radius {radius} outside (0, π/2]")));
        }
        let radius = radius.min(FRAC_PI_2);
        for (name, p) in [("start", start), ("end", end)] {
            let r = geodesic_distance(&center, &p);
            if (r - radius).abs() > EPS_INCIDENCE {
                return Err(Error::InvalidBody(format!(
                    "arc {name} point is at distance {r} from its center, expected radius {radius}"
                )));
            }
        }
        let c = center.vec();
        let e1 = vec3::normalize(vec3::sub(start.vec(), vec3::scale(c, vec3::dot(start.vec(), c))))
            .ok_or_else(|| Error::InvalidBody("arc start coincides with its center".into()))?;
        let e2 = vec3::cross(c, e1);
        let sweep = if full {
            TAU
        } else {
            let ev = end.vec();
            let theta = vec3::dot(ev, e2).atan2(vec3::dot(ev, e1));
            let theta = if theta < 0.0 { theta + TAU } else { theta };
            if theta * radius.sin() <= EPS_UNIT || (TAU - theta) * radius.sin() <= EPS_UNIT {
                return Err(Error::InvalidBody("arc has zero length".into()));
            }
            theta
        };
        Ok(Self { center, radius, e1, e2, sweep })
    }

    /// Full circle of radius `radius` about `center`.
    pub fn circle(center: SpherePoint, radius: f64) -> Result<Self> {
        let (e1, _) = center.tangent_frame();
        let start = center.walk(e1, radius);
        Self::from_endpoints(center, radius, start, start, true)
    }

    /// Geodesic edge from `a` to `b` (radius π/2 about the pole `a × b`).
    pub(crate) fn geodesic(a: SpherePoint, b: SpherePoint) -> Option<Self> {
        let n = SpherePoint::try_from_vec(vec3::cross(a.vec(), b.vec()))?;
        let e1 = a.vec();
        let e2 = vec3::cross(n.vec(), e1);
        let sweep = geodesic_distance(&a, &b);
        Some(Self { center: n, radius: FRAC_PI_2, e1, e2, sweep })
    }

    pub(crate) fn from_frame(center: SpherePoint, radius: f64, e1: Vec3, e2: Vec3, sweep: f64) -> Self {
        Self { center, radius, e1, e2, sweep }
    }

    pub fn center(&self) -> SpherePoint {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn sweep(&self) -> f64 {
        self.sweep
    }

    pub fn is_full_circle(&self) -> bool {
        self.sweep >= TAU
    }

    pub fn is_geodesic(&self) -> bool {
        self.radius >= FRAC_PI_2 - EPS_UNIT
    }

    pub fn length(&self) -> f64 {
        self.radius.sin() * self.sweep
    }

    fn dir(&self, theta: f64) -> Vec3 {
        vec3::combine(theta.cos(), self.e1, theta.sin(), self.e2)
    }

    pub fn point(&self, theta: f64) -> SpherePoint {
        let (s, c) = self.radius.sin_cos();
        SpherePoint::from_vec(vec3::combine(c, self.center.vec(), s, self.dir(theta)))
    }

    pub fn start(&self) -> SpherePoint {
        self.point(0.0)
    }

    pub fn end(&self) -> SpherePoint {
        self.point(self.sweep)
    }

    /// Unit tangent in the direction of traversal.
    pub fn tangent(&self, theta: f64) -> Vec3 {
        vec3::combine(-theta.sin(), self.e1, theta.cos(), self.e2)
    }

    /// Center of the unique hemisphere supporting the disk at `point(θ)`:
    /// `sin ρ·c − cos ρ·u(θ)`, at distance π/2 − ρ from the center, away from the point.
    pub fn normal(&self, theta: f64) -> SpherePoint {
        let (s, c) = self.radius.sin_cos();
        SpherePoint::from_vec(vec3::combine(s, self.center.vec(), -c, self.dir(theta)))
    }

    /// The corresponding piece of the polar boundary: radius `π/2 − ρ` about the same
    /// center, traced by `normal(θ)`.
    pub fn polar(&self) -> Self {
        Self {
            center: self.center,
            radius: FRAC_PI_2 - self.radius,
            e1: vec3::scale(self.e1, -1.0),
            e2: vec3::scale(self.e2, -1.0),
            sweep: self.sweep,
        }
    }

    /// Parameter in `[0, 2π)` of the circle point closest to `p`'s direction.
    pub fn angle_of(&self, p: &SpherePoint) -> f64 {
        let v = p.vec();
        let t = vec3::dot(v, self.e2).atan2(vec3::dot(v, self.e1));
        if t < 0.0 {
            t + TAU
        } else {
            t
        }
    }

    /// Parameter of the arc point nearest to `p` and its distance.
    pub fn nearest(&self, p: &SpherePoint) -> (f64, f64) {
        let t = self.angle_of(p);
        let theta = if t <= self.sweep {
            t
        } else if (t - self.sweep) < (TAU - t) {
            self.sweep
        } else {
            0.0
        };
        (theta, geodesic_distance(p, &self.point(theta)))
    }

    /// Whether every point of the arc has the same dot product with `k`
    /// (i.e. `k` is ± the center, or the radius is zero).
    pub fn is_level_for(&self, k: &SpherePoint) -> bool {
        let a = vec3::dot(k.vec(), self.e1).hypot(vec3::dot(k.vec(), self.e2));
        a * self.radius.sin() <= 1e-13
    }

    /// Parameter and value extremizing `k·point(θ)` over the arc.
    pub fn extreme_dot(&self, k: &SpherePoint, minimize: bool) -> (f64, f64) {
        let kv = k.vec();
        let (s, c) = self.radius.sin_cos();
        let a1 = vec3::dot(kv, self.e1);
        let a2 = vec3::dot(kv, self.e2);
        let base = c * k.dot(&self.center);
        let value = |t: f64| base + s * (a1 * t.cos() + a2 * t.sin());
        let better = |v: f64, best: f64| if minimize { v < best } else { v > best };

        let mut best = (0.0, value(0.0));
        if self.is_level_for(k) {
            return best;
        }
        let end = (self.sweep, value(self.sweep));
        if better(end.1, best.1) {
            best = end;
        }
        let mut t = a2.atan2(a1);
        if minimize {
            t += PI;
        }
        let t = t.rem_euclid(TAU);
        if t <= self.sweep {
            let v = value(t);
            if better(v, best.1) || v == best.1 {
                best = (t, v);
            }
        }
        best
    }

    /// Splits the arc into at most quarter-turn pieces and returns the nodes
    /// (including both endpoints).
    pub(crate) fn nodes(&self) -> Vec<SpherePoint> {
        let k = (self.sweep / FRAC_PI_2).ceil().max(1.0) as usize;
        (0..=k).map(|j| self.point(self.sweep * j as f64 / k as f64)).collect()
    }
}

/// Signed turning angle at a junction from outgoing normal `a` to `b` about `v`.
pub(crate) fn turn_angle(v: &SpherePoint, a: &SpherePoint, b: &SpherePoint) -> f64 {
    let c = vec3::dot(v.vec(), vec3::cross(a.vec(), b.vec()));
    c.atan2(a.dot(b))
}
