//! Constructors for the body families used throughout: balls, regular and
//! randomized spherical Reuleaux polygons, and intersections of equal balls.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::body::{hemisphere_witness, ArcBody, Body, CircleArc};
use crate::error::{Error, Result};
use crate::sphere::{geodesic_distance, SpherePoint};
use crate::tolerance::{DEFAULT_CHECK_TOL, EPS_UNIT};
use crate::vec3;
use crate::width::check_constant_diameter;

/// Rotation of S², stored as an orthogonal matrix (rows).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose(pub [[f64; 3]; 3]);

impl Default for Pose {
    fn default() -> Self {
        Self::identity()
    }
}

impl Pose {
    pub fn identity() -> Self {
        Pose([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn from_axis_angle(axis: &SpherePoint, angle: f64) -> Self {
        let cols = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
            .map(|e| SpherePoint::from_vec(e).rotate(axis, angle).xyz());
        let mut m = [[0.0; 3]; 3];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..3 {
                m[i][j] = col[i];
            }
        }
        Pose(m)
    }

    /// Rotation taking the north pole `(0, 0, 1)` to `center`.
    pub fn with_pole(center: &SpherePoint) -> Self {
        let north = SpherePoint::from_vec([0.0, 0.0, 1.0]);
        let angle = geodesic_distance(&north, center);
        match SpherePoint::try_from_vec(vec3::cross(north.xyz(), center.xyz())) {
            Some(axis) => Self::from_axis_angle(&axis, angle),
            None if center.z() > 0.0 => Self::identity(),
            None => Self::from_axis_angle(&SpherePoint::from_vec([1.0, 0.0, 0.0]), PI),
        }
    }

    pub fn apply(&self, p: [f64; 3]) -> SpherePoint {
        let m = &self.0;
        SpherePoint::from_vec([vec3::dot(m[0], p), vec3::dot(m[1], p), vec3::dot(m[2], p)])
    }
}

/// Parameters of a (regular or randomized) Reuleaux polygon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReuleauxSpec {
    pub n: usize,
    pub delta: f64,
    #[serde(default)]
    pub pose: Pose,
    #[serde(default)]
    pub seed: Option<u64>,
    /// Maximum perturbation (radians) of each step direction in randomized bodies.
    #[serde(default = "default_jitter")]
    pub jitter: f64,
}

fn default_jitter() -> f64 {
    0.08
}

impl ReuleauxSpec {
    pub fn new(n: usize, delta: f64) -> Self {
        Self { n, delta, pose: Pose::identity(), seed: None, jitter: default_jitter() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_jitter(mut self, jitter: f64) -> Self {
        self.jitter = jitter;
        self
    }

    pub fn with_pose(mut self, pose: Pose) -> Self {
        self.pose = pose;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 || self.n.is_multiple_of(2) {
            return Err(Error::PrecondViolation(format!("n must be odd and at least 3, got {}", self.n)));
        }
        if !(self.delta > 0.0 && self.delta < FRAC_PI_2) {
            return Err(Error::PrecondViolation(format!("delta must lie in (0, π/2), got {}", self.delta)));
        }
        if !(self.jitter >= 0.0 && self.jitter.is_finite()) {
            return Err(Error::PrecondViolation("jitter must be a finite nonnegative angle".into()));
        }
        Ok(())
    }

    fn half(&self) -> usize {
        (self.n - 1) / 2
    }
}

/// Spherical disk of radius `rho ∈ (0, π/4)` about `c`.
pub fn ball(c: SpherePoint, rho: f64) -> Result<Body> {
    if !(rho > 0.0 && rho < FRAC_PI_4) {
        return Err(Error::PrecondViolation(format!("ball radius must lie in (0, π/4), got {rho}")));
    }
    Ok(ArcBody::new(vec![CircleArc::circle(c, rho)?])?.into())
}

/// Circumradius `R` of the regular n-gon whose vertices `m = (n−1)/2` apart are at
/// distance `δ`: root of `cos²R + sin²R·cos(2πm/n) = cos δ` on `(0, π/2)`, by bisection.
pub fn circumradius(n: usize, delta: f64) -> Result<f64> {
    let m = (n - 1) / 2;
    let c = (TAU * m as f64 / n as f64).cos();
    let f = |r: f64| {
        let (s, k) = r.sin_cos();
        k * k + s * s * c - delta.cos()
    };
    let (mut lo, mut hi) = (0.0f64, FRAC_PI_2);
    if !(f(lo) > 0.0 && f(hi) < 0.0) {
        return Err(Error::NoSolution(format!("no circumradius for n = {n}, delta = {delta}")));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let v = f(mid);
        if v.abs() < 1e-16 || hi - lo < 1e-16 {
            return Ok(mid);
        }
        if v > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn regular_vertices(spec: &ReuleauxSpec) -> Result<Vec<SpherePoint>> {
    let r = circumradius(spec.n, spec.delta)?;
    let (s, c) = r.sin_cos();
    Ok((0..spec.n)
        .map(|j| {
            let a = TAU * j as f64 / spec.n as f64;
            spec.pose.apply([s * a.cos(), s * a.sin(), c])
        })
        .collect())
}

/// Arc body over vertices `v_0 … v_{n−1}` (counterclockwise): arc `i` runs from
/// `v_i` to `v_{i+1}` along the circle of radius δ about the opposite vertex `v_{i+m+1}`.
fn reuleaux_from_vertices(vertices: &[SpherePoint], delta: f64) -> Result<ArcBody> {
    let n = vertices.len();
    let m = (n - 1) / 2;
    let arcs = (0..n)
        .map(|i| CircleArc::from_endpoints(vertices[(i + m + 1) % n], delta, vertices[i], vertices[(i + 1) % n], false))
        .collect::<Result<Vec<_>>>()?;
    ArcBody::new(arcs)
}

/// Regular spherical Reuleaux n-gon of diameter δ.
pub fn regular_reuleaux(spec: &ReuleauxSpec) -> Result<Body> {
    spec.validate()?;
    Ok(reuleaux_from_vertices(&regular_vertices(spec)?, spec.delta)?.into())
}

/// Circular intervals `(start, length)` of a circle, all in `[0, 2π)`.
type Intervals = Vec<(f64, f64)>;

fn intersect_interval(set: &Intervals, start: f64, len: f64) -> Intervals {
    if let [(_, l)] = set[..] {
        if l >= TAU {
            return vec![(start.rem_euclid(TAU), len)];
        }
    }
    let mut out = Vec::new();
    for &(s, l) in set {
        let j0 = (start - s).rem_euclid(TAU);
        for offset in [j0, j0 - TAU] {
            let lo = offset.max(0.0);
            let hi = (offset + len).min(l);
            if hi - lo > 1e-15 {
                out.push(((s + lo).rem_euclid(TAU), hi - lo));
            }
        }
    }
    out
}

/// Intersection `⋂ B(p_i, δ)` of equal balls as an arc body.
pub fn ball_intersection(points: &[SpherePoint], delta: f64) -> Result<Body> {
    if points.is_empty() {
        return Err(Error::PrecondViolation("at least one center is required".into()));
    }
    if !(delta > 0.0 && delta < FRAC_PI_2) {
        return Err(Error::PrecondViolation(format!("delta must lie in (0, π/2), got {delta}")));
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = geodesic_distance(&points[i], &points[j]);
            if d > delta + EPS_UNIT {
                return Err(Error::PrecondViolation(format!(
                    "centers {i} and {j} are {d} apart, more than delta = {delta}"
                )));
            }
        }
    }
    if hemisphere_witness(points).is_none() {
        return Err(Error::PrecondViolation("centers are not in an open hemisphere".into()));
    }
    let mut centers: Vec<SpherePoint> = Vec::new();
    for p in points {
        if !centers.iter().any(|c| geodesic_distance(c, p) <= EPS_UNIT) {
            centers.push(*p);
        }
    }
    if centers.len() == 1 {
        return Ok(ArcBody::new(vec![CircleArc::circle(centers[0], delta)?])?.into());
    }

    let (sd, cd) = delta.sin_cos();
    // (center index, frame, start angle, length)
    let mut pieces = Vec::new();
    for (i, a) in centers.iter().enumerate() {
        let (e1, e2) = a.tangent_frame();
        let mut allowed: Intervals = vec![(0.0, TAU)];
        for (j, b) in centers.iter().enumerate() {
            if i == j {
                continue;
            }
            let ab = a.dot(b);
            let b1 = vec3::dot(b.xyz(), e1);
            let b2 = vec3::dot(b.xyz(), e2);
            let amp = b1.hypot(b2);
            let kappa = cd * (1.0 - ab) / (sd * amp);
            if kappa >= 1.0 {
                allowed.clear();
                break;
            }
            let half = kappa.max(-1.0).acos();
            allowed = intersect_interval(&allowed, b2.atan2(b1) - half, 2.0 * half);
            if allowed.is_empty() {
                break;
            }
        }
        for (s, l) in allowed {
            if l * sd > 1e-12 {
                pieces.push((i, e1, e2, s, l));
            }
        }
    }
    if pieces.is_empty() {
        return Err(Error::PrecondViolation("ball intersection is empty".into()));
    }
    let point = |(i, e1, e2, _, _): &(usize, [f64; 3], [f64; 3], f64, f64), t: f64| {
        let u = vec3::combine(t.cos(), *e1, t.sin(), *e2);
        SpherePoint::from_vec(vec3::combine(cd, centers[*i].xyz(), sd, u))
    };
    // Chain pieces: each next piece starts where the current one ends.
    let mut order = vec![0usize];
    let mut used = vec![false; pieces.len()];
    used[0] = true;
    while order.len() < pieces.len() {
        let cur = &pieces[*order.last().expect("nonempty")];
        let end = point(cur, cur.3 + cur.4);
        let next = (0..pieces.len())
            .filter(|&k| !used[k])
            .min_by(|&a, &b| {
                let da = geodesic_distance(&end, &point(&pieces[a], pieces[a].3));
                let db = geodesic_distance(&end, &point(&pieces[b], pieces[b].3));
                da.total_cmp(&db)
            })
            .expect("unused piece remains");
        used[next] = true;
        order.push(next);
    }
    let starts: Vec<SpherePoint> = order.iter().map(|&k| point(&pieces[k], pieces[k].3)).collect();
    let count = order.len();
    let arcs = (0..count)
        .map(|idx| {
            let piece = &pieces[order[idx]];
            let full = count == 1;
            let end = if full { starts[0] } else { starts[(idx + 1) % count] };
            CircleArc::from_endpoints(centers[piece.0], delta, starts[idx], end, full)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ArcBody::new(arcs)?.into())
}

/// Seeded non-regular Reuleaux polygon of diameter δ.
///
/// The vertices `w_k = v_{km mod n}` form a closed equilateral star polygon with
/// sides δ. Starting from the regular configuration, each step direction is
/// rotated by a uniform jitter, and the last vertex is re-solved as the
/// intersection of the circles of radius δ about its two star neighbours. The
/// body is the ball intersection of the vertices; attempts are repeated until it
/// has the expected arc structure and passes the constant-diameter checker.
pub fn random_reuleaux(spec: &ReuleauxSpec) -> Result<Body> {
    spec.validate()?;
    let seed = spec.seed.ok_or_else(|| Error::PrecondViolation("random_reuleaux requires a seed".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let regular = regular_vertices(spec)?;
    let mut log = Vec::new();
    const MAX_ATTEMPTS: usize = 100;
    for attempt in 0..MAX_ATTEMPTS {
        match jittered_attempt(spec, &regular, &mut rng) {
            Ok(body) => return Ok(body),
            Err(e) => log.push(format!("attempt {attempt}: {e}")),
        }
    }
    Err(Error::GenerationFailed { attempts: MAX_ATTEMPTS, log: log.join("; ") })
}

fn jittered_attempt(spec: &ReuleauxSpec, regular: &[SpherePoint], rng: &mut ChaCha8Rng) -> Result<Body> {
    let n = spec.n;
    let m = spec.half();
    let delta = spec.delta;
    let star = |k: usize| (k * m) % n;
    let mut w = vec![regular[star(0)]];
    for k in 1..n - 1 {
        let prev = w[k - 1];
        let t = prev
            .tangent_toward(&regular[star(k)])
            .ok_or_else(|| Error::NoSolution("coincident star vertices".into()))?;
        let eps = if spec.jitter > 0.0 { rng.gen_range(-spec.jitter..=spec.jitter) } else { 0.0 };
        let side = vec3::cross(prev.xyz(), t);
        let dir = vec3::combine(eps.cos(), t, eps.sin(), side);
        w.push(prev.walk(dir, delta));
    }
    let a = w[n - 2];
    let b = w[0];
    let ab = a.dot(&b);
    let alpha = delta.cos() / (1.0 + ab);
    let rad = (1.0 - 2.0 * alpha * alpha * (1.0 + ab)) / (1.0 - ab * ab);
    if rad.is_nan() || rad < 0.0 {
        return Err(Error::NoSolution("closing vertex has no solution".into()));
    }
    let beta = rad.sqrt();
    let base = vec3::scale(vec3::add(a.xyz(), b.xyz()), alpha);
    let axb = vec3::cross(a.xyz(), b.xyz());
    let target = regular[star(n - 1)];
    let close = [1.0, -1.0]
        .map(|s| SpherePoint::from_vec(vec3::combine(1.0, base, s * beta, axb)))
        .into_iter()
        .min_by(|p, q| geodesic_distance(p, &target).total_cmp(&geodesic_distance(q, &target)))
        .expect("two candidates");
    w.push(close);

    let mut vertices = vec![w[0]; n];
    for (k, p) in w.iter().enumerate() {
        vertices[star(k)] = *p;
    }
    let body = ball_intersection(&vertices, delta)?;
    if body.pieces().len() != n {
        return Err(Error::NoSolution(format!("ball intersection has {} arcs, expected {n}", body.pieces().len())));
    }
    let canonical: Body = reuleaux_from_vertices(&vertices, delta)?.into();
    for arc in canonical.pieces() {
        if !body.pieces().iter().any(|b| {
            geodesic_distance(&b.center(), &arc.center()) <= 1e-9 && geodesic_distance(&b.start(), &arc.start()) <= 1e-9
        }) {
            return Err(Error::NoSolution("vertex chain does not bound the ball intersection".into()));
        }
    }
    let report = check_constant_diameter(&canonical, DEFAULT_CHECK_TOL);
    if !report.verdict {
        return Err(Error::NoSolution(format!(
            "not of constant diameter (spread {:.3e})",
            report.target - report.observed_min
        )));
    }
    Ok(canonical)
}

/// The vertices of a Reuleaux-type arc body: the arc endpoints, in order.
pub fn vertices_of(body: &Body) -> Vec<SpherePoint> {
    body.pieces().iter().map(CircleArc::start).collect()
}

#[cfg(test)]
mod tests;
