//! Diameter, diametral chords, widths, thickness, and the constant-width /
//! constant-diameter checkers.
//!
//! Widths are reduced to a farthest-point query over the polar body: the lune
//! `H(k) ∩ H(k′)` has thickness `π − |kk′|`, and it contains the body iff
//! `k′ ∈ C°`, so `width_k(C) = π − max_{r ∈ C°} |kr|`. The brute-force
//! [`width_oracle`] minimizes lune thickness over grids of hemisphere centers
//! instead and never touches the polar.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::body::{Body, BoundaryPoint};
use crate::error::{Error, Result};
use crate::grid::{fibonacci_cap, fibonacci_sphere};
use crate::report::{CheckReport, ProfileSample, Witness};
use crate::sphere::{geodesic_distance, GeodesicArc, SpherePoint};
use crate::tolerance::{
    CHORD_MERGE, CHORD_TOL, DEFAULT_CHECK_TOL, DEFAULT_SAMPLES, EPS_INCIDENCE, EPS_UNIT, REFINE_TOL,
};
use crate::vec3;

/// A chord `pq` of the body, usually of length equal to the diameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiametralChord {
    pub p: SpherePoint,
    pub q: SpherePoint,
    pub length: f64,
}

impl DiametralChord {
    pub fn new(p: SpherePoint, q: SpherePoint) -> Self {
        Self { p, q, length: geodesic_distance(&p, &q) }
    }

    pub fn arc(&self) -> GeodesicArc {
        GeodesicArc { a: self.p, b: self.q }
    }

    /// Same chord up to endpoint order, endpoints within `tol`.
    pub fn same_as(&self, other: &DiametralChord, tol: f64) -> bool {
        // Chord length in R³ equals the angle to within 1e-18 at these scales.
        let t2 = tol * tol;
        let d2 = |a: &SpherePoint, b: &SpherePoint| {
            let v = vec3::sub(a.xyz(), b.xyz());
            vec3::dot(v, v)
        };
        (d2(&self.p, &other.p) <= t2 && d2(&self.q, &other.q) <= t2)
            || (d2(&self.p, &other.q) <= t2 && d2(&self.q, &other.p) <= t2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diameter {
    pub value: f64,
    pub chords: Vec<DiametralChord>,
}

fn push_unique(chords: &mut Vec<DiametralChord>, c: DiametralChord) {
    if !chords.iter().any(|d| d.same_as(&c, CHORD_MERGE)) {
        chords.push(c);
    }
}

/// Local maxima refined per diameter evaluation; flat profiles (balls, Reuleaux
/// polygons) make every sample a local maximum.
const MAX_REFINED: usize = 64;

/// Golden-section maximization of `f` on `[a, b]` down to `tol`.
fn golden_max(mut a: f64, mut b: f64, tol: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a) > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    (t, f(t))
}

/// Farthest distance from a boundary point (piece, θ).
fn farthest_at(body: &Body, piece: usize, theta: f64) -> f64 {
    let p = body.pieces()[piece].point(theta);
    body.farthest_from(&p).0
}

/// Diameter with the default number of samples.
pub fn diameter(body: &Body) -> Diameter {
    diameter_with(body, DEFAULT_SAMPLES)
}

/// Diameter of the body.
///
/// Polygons: exact maximum over vertex pairs, reporting the vertex pairs attaining it.
/// Arc bodies: the farthest distance `f(p)` from a boundary point is exact (closed
/// form per arc), so `δ = max f` is found by sampling `p` along the boundary and
/// golden-section refinement around every sampled local maximum.
pub fn diameter_with(body: &Body, samples: usize) -> Diameter {
    if let Body::Polygon(poly) = body {
        let v = poly.vertices();
        let mut best = 0.0f64;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                best = best.max(geodesic_distance(&v[i], &v[j]));
            }
        }
        let mut chords = Vec::new();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if geodesic_distance(&v[i], &v[j]) >= best - CHORD_TOL {
                    chords.push(DiametralChord::new(v[i], v[j]));
                }
            }
        }
        return Diameter { value: best, chords };
    }

    let pts = body.boundary_sample(samples);
    let f: Vec<(f64, BoundaryPoint)> = pts.iter().map(|bp| body.farthest_from(&bp.point)).collect();
    let sample_max = f.iter().map(|x| x.0).fold(0.0, f64::max);
    let n = pts.len();
    let mut candidates: Vec<(f64, SpherePoint, SpherePoint)> =
        pts.iter().zip(&f).map(|(bp, (d, q))| (*d, bp.point, q.point)).collect();
    let mut peaks: Vec<usize> = (0..n)
        .filter(|&j| {
            let here = f[j].0;
            here >= f[(j + n - 1) % n].0 && here >= f[(j + 1) % n].0 && here >= sample_max - 1e-3
        })
        .collect();
    peaks.sort_by(|&a, &b| f[b].0.total_cmp(&f[a].0).then(a.cmp(&b)));
    peaks.truncate(MAX_REFINED);
    for j in peaks {
        let here = f[j].0;
        let bp = pts[j];
        let arc = &body.pieces()[bp.piece];
        let lo = if pts[(j + n - 1) % n].piece == bp.piece { pts[(j + n - 1) % n].param } else { 0.0 };
        let hi = if pts[(j + 1) % n].piece == bp.piece { pts[(j + 1) % n].param } else { arc.sweep() };
        if hi <= lo {
            continue;
        }
        let (t, d) = golden_max(lo, hi, REFINE_TOL, |t| farthest_at(body, bp.piece, t));
        if d > here {
            let p = arc.point(t);
            let q = body.farthest_from(&p).1.point;
            candidates.push((d, p, q));
        }
    }
    let value = candidates.iter().map(|c| c.0).fold(0.0, f64::max);
    let mut chords = Vec::new();
    for (d, p, q) in candidates {
        if d >= value - CHORD_TOL {
            push_unique(&mut chords, DiametralChord::new(p, q));
        }
    }
    Diameter { value, chords }
}

/// All boundary chords of length at least `δ − tol`, at sampling resolution.
///
/// When a sample point is the center of a boundary arc, every point of that arc
/// is equidistant from it, and the arc is sampled as a one-parameter family.
pub fn diametral_chords(body: &Body, tol: f64) -> Vec<DiametralChord> {
    diametral_chords_with(body, tol, 256, 16)
}

pub fn diametral_chords_with(body: &Body, tol: f64, samples: usize, family: usize) -> Vec<DiametralChord> {
    let delta = diameter(body).value;
    let mut out = Vec::new();
    for bp in body.boundary_sample(samples) {
        let p = bp.point;
        for arc in body.pieces() {
            if arc.is_level_for(&p) && arc.radius() >= delta - tol && arc.radius() > EPS_UNIT {
                for j in 0..=family {
                    let q = arc.point(arc.sweep() * j as f64 / family as f64);
                    push_unique(&mut out, DiametralChord::new(p, q));
                }
            } else {
                let (t, _) = arc.extreme_dot(&p, true);
                let q = arc.point(t);
                if geodesic_distance(&p, &q) >= delta - tol {
                    push_unique(&mut out, DiametralChord::new(p, q));
                }
            }
        }
    }
    out
}

fn require_support(body: &Body, k: &SpherePoint) -> Result<()> {
    let (h, _) = body.support(k);
    if h.abs() > EPS_INCIDENCE {
        return Err(Error::NotSupporting(h));
    }
    Ok(())
}

/// Width from a precomputed polar body: `(width, k′)` where `H(k) ∩ H(k′)` is a
/// narrowest lune containing the body.
fn width_in_polar(polar: &Body, k: &SpherePoint) -> (f64, SpherePoint) {
    let (_, far) = polar.support(k);
    (PI - geodesic_distance(k, &far.point), far.point)
}

/// Width of the body determined by the supporting hemisphere `H(k)`.
pub fn width_given_support(body: &Body, k: &SpherePoint) -> Result<f64> {
    width_with_witness(body, k).map(|w| w.0)
}

/// Width and the center `k′` of the opposite hemisphere of a narrowest lune.
pub fn width_with_witness(body: &Body, k: &SpherePoint) -> Result<(f64, SpherePoint)> {
    require_support(body, k)?;
    let polar = body.polar()?;
    Ok(width_in_polar(&polar, k))
}

/// Thinnest lune `H(k) ∩ H(c)` containing the body over the given candidate
/// centers `c`, or `None` when no candidate is feasible.
pub fn width_over_centers(body: &Body, k: &SpherePoint, centers: &[SpherePoint]) -> Option<f64> {
    centers
        .iter()
        .filter(|c| c.dot(k).abs() < 1.0 - EPS_UNIT && body.support(c).0 >= 0.0)
        .map(|c| PI - geodesic_distance(k, c))
        .min_by(f64::total_cmp)
}

/// Brute-force width: the thinnest lune `H(k) ∩ H(k′)` containing the body over
/// a Fibonacci grid of candidate centers `k′`.
///
/// A global grid of `grid_size` points locates every near-optimal feasible
/// center; each one seeds a sequence of shrinking Fibonacci caps (256 points
/// each). Feasibility is `min_{x ∈ C} x·k′ ≥ 0`, so the result never undercuts
/// the true width.
pub fn width_oracle(body: &Body, k: &SpherePoint, grid_size: usize) -> Result<f64> {
    require_support(body, k)?;
    // A polygon lies in H(c) iff its vertices do; for arc bodies the vertex test is a cheap prefilter.
    let nodes: Vec<SpherePoint> = body.pieces().iter().map(|a| a.start()).collect();
    let polygon = body.is_polygon();
    let lune = |c: &SpherePoint| -> Option<f64> {
        if c.dot(k).abs() >= 1.0 - EPS_UNIT || nodes.iter().any(|v| v.dot(c) < 0.0) {
            return None;
        }
        if !polygon && body.support(c).0 < 0.0 {
            return None;
        }
        Some(PI - geodesic_distance(k, c))
    };
    let spacing = (4.0 * PI / grid_size as f64).sqrt();
    let radius = 2.0 * spacing;
    let mut grid = fibonacci_sphere(grid_size);
    grid.sort_by(|a, b| a.dot(k).total_cmp(&b.dot(k)));
    let mut starts: Vec<(f64, SpherePoint)> = Vec::new();
    for c in grid {
        let bound = PI - geodesic_distance(k, &c);
        if starts.first().is_some_and(|s| bound > s.0 + radius) {
            break;
        }
        if starts.len() >= 16 || starts.iter().any(|s| geodesic_distance(&s.1, &c) < radius) {
            continue;
        }
        if let Some(v) = lune(&c) {
            starts.push((v, c));
        }
    }
    if starts.is_empty() {
        // Thin bodies: every grid point may miss the polar body.
        let mut best: Option<(f64, SpherePoint)> = None;
        for c in fibonacci_cap(k, std::f64::consts::FRAC_PI_2, grid_size) {
            if let Some(v) = lune(&c) {
                if best.is_none_or(|b| v < b.0) {
                    best = Some((v, c));
                }
            }
        }
        starts.extend(best);
    }
    if starts.is_empty() {
        return Err(Error::NotSupporting(body.support(k).0));
    }
    const PER_LEVEL: usize = 256;
    const MAX_ACTIVE: usize = 12;
    // (value, center, cap radius). All candidates advance one level at a time;
    // near-best samples away from the best one spawn new candidates, and
    // candidates trailing the leader by more than their cap radius are dropped.
    let mut active: Vec<(f64, SpherePoint, f64)> = starts.into_iter().map(|(v, c)| (v, c, radius)).collect();
    for _ in 0..400 {
        if active.iter().all(|a| a.2 <= 1e-10) {
            break;
        }
        let mut spawned = Vec::new();
        for a in active.iter_mut().filter(|a| a.2 > 1e-10) {
            let mut feasible: Vec<(f64, SpherePoint)> =
                fibonacci_cap(&a.1, a.2, PER_LEVEL).into_iter().filter_map(|c| lune(&c).map(|v| (v, c))).collect();
            feasible.sort_by(|x, y| x.0.total_cmp(&y.0));
            let r = a.2;
            let mut next = (a.0, a.1);
            if let Some(&best) = feasible.first() {
                if best.0 < next.0 {
                    next = best;
                }
            }
            let mut picked = vec![next.1];
            for &(v, c) in &feasible {
                if picked.len() >= 3 || v > next.0 + 0.5 * r {
                    break;
                }
                if picked.iter().all(|p| geodesic_distance(p, &c) >= 0.5 * r) {
                    picked.push(c);
                    spawned.push((v, c, 0.5 * r));
                }
            }
            if geodesic_distance(&next.1, &a.1) <= 0.25 * r {
                a.2 *= 0.5;
            }
            (a.0, a.1) = next;
        }
        active.extend(spawned);
        active.sort_by(|a, b| a.0.total_cmp(&b.0));
        let lead = active[0].0;
        let mut kept: Vec<(f64, SpherePoint, f64)> = Vec::with_capacity(active.len());
        for a in active {
            let trailing = a.0 > lead + 2.0 * a.2;
            let duplicate = kept.iter().any(|b| geodesic_distance(&a.1, &b.1) < 0.25 * a.2.max(b.2));
            if !trailing && !duplicate && kept.len() < MAX_ACTIVE {
                kept.push(a);
            }
        }
        active = kept;
    }
    Ok(active[0].0)
}

/// Thickness `Δ(C)`: the minimum width over all supporting hemispheres.
pub fn thickness(body: &Body) -> f64 {
    thickness_with(body, DEFAULT_SAMPLES)
}

pub fn thickness_with(body: &Body, samples: usize) -> f64 {
    let polar = body.polar().expect("valid bodies have a polar body");
    let ks = polar.boundary_sample(samples);
    let widths: Vec<f64> = ks.iter().map(|bp| width_in_polar(&polar, &bp.point).0).collect();
    let n = ks.len();
    let mut best = widths.iter().copied().fold(f64::INFINITY, f64::min);
    let mut valleys: Vec<usize> = (0..n)
        .filter(|&j| {
            let here = widths[j];
            here <= widths[(j + n - 1) % n] && here <= widths[(j + 1) % n] && here <= best + 1e-3
        })
        .collect();
    valleys.sort_by(|&a, &b| widths[a].total_cmp(&widths[b]).then(a.cmp(&b)));
    valleys.truncate(MAX_REFINED);
    for j in valleys {
        let bp = ks[j];
        let arc = &polar.pieces()[bp.piece];
        let lo = if ks[(j + n - 1) % n].piece == bp.piece { ks[(j + n - 1) % n].param } else { 0.0 };
        let hi = if ks[(j + 1) % n].piece == bp.piece { ks[(j + 1) % n].param } else { arc.sweep() };
        if hi > lo {
            let (_, neg) = golden_max(lo, hi, REFINE_TOL, |t| -width_in_polar(&polar, &arc.point(t)).0);
            best = best.min(-neg);
        }
    }
    best
}

/// Width profile over `samples` centers of the polar boundary (all corners included).
pub fn width_profile(body: &Body, samples: usize) -> Result<Vec<ProfileSample>> {
    let polar = body.polar()?;
    Ok(polar
        .boundary_sample(samples)
        .iter()
        .map(|bp| ProfileSample { point: bp.point, value: width_in_polar(&polar, &bp.point).0 })
        .collect())
}

/// Farthest-distance profile `f(p) = max_q |pq|` over `samples` boundary points.
pub fn diameter_profile(body: &Body, samples: usize) -> Vec<ProfileSample> {
    body.boundary_sample(samples)
        .iter()
        .map(|bp| ProfileSample { point: bp.point, value: body.farthest_from(&bp.point).0 })
        .collect()
}

fn extreme_witnesses(profile: &[ProfileSample], label: &str) -> Vec<Witness> {
    let min = profile.iter().min_by(|a, b| a.value.total_cmp(&b.value));
    let max = profile.iter().max_by(|a, b| a.value.total_cmp(&b.value));
    let mut out = Vec::new();
    if let Some(s) = min {
        out.push(Witness::new(format!("min-{label}"), vec![s.point], s.value));
    }
    if let Some(s) = max {
        out.push(Witness::new(format!("max-{label}"), vec![s.point], s.value));
    }
    out
}

/// Constant width: all widths over a sweep of the polar boundary agree within `tol`.
/// The target is the largest observed width.
pub fn check_constant_width(body: &Body, tol: f64) -> CheckReport {
    check_constant_width_with(body, tol, DEFAULT_SAMPLES)
}

pub fn check_constant_width_with(body: &Body, tol: f64, samples: usize) -> CheckReport {
    let profile = width_profile(body, samples).expect("valid bodies have a polar body");
    let min = profile.iter().map(|s| s.value).fold(f64::INFINITY, f64::min);
    let max = profile.iter().map(|s| s.value).fold(f64::NEG_INFINITY, f64::max);
    let mut report = CheckReport::from_range("constant-width", max, min, max, tol);
    report.witnesses = extreme_witnesses(&profile, "width");
    report.profile = profile;
    report
}

/// Constant diameter: every sampled boundary point has a partner at distance `δ`
/// within `tol`, where `δ` is the refined diameter (the report's target).
pub fn check_constant_diameter(body: &Body, tol: f64) -> CheckReport {
    check_constant_diameter_with(body, tol, DEFAULT_SAMPLES)
}

pub fn check_constant_diameter_with(body: &Body, tol: f64, samples: usize) -> CheckReport {
    let delta = diameter_with(body, samples).value;
    let profile = diameter_profile(body, samples);
    let min = profile.iter().map(|s| s.value).fold(f64::INFINITY, f64::min);
    let max = profile.iter().map(|s| s.value).fold(f64::NEG_INFINITY, f64::max);
    let mut report = CheckReport::from_range("constant-diameter", delta, min, max.max(delta), tol);
    if let Some(s) = profile.iter().min_by(|a, b| a.value.total_cmp(&b.value)) {
        let partner = body.farthest_from(&s.point).1.point;
        report.witnesses.push(Witness::new("min-farthest", vec![s.point, partner], s.value));
    }
    report.profile = profile;
    report
}

/// Every two diametral chords intersect. Requires constant diameter (at the
/// default tolerance).
pub fn check_chord_intersections(body: &Body) -> Result<CheckReport> {
    check_chord_intersections_with(body, 200)
}

pub fn check_chord_intersections_with(body: &Body, chords: usize) -> Result<CheckReport> {
    let cd = check_constant_diameter(body, DEFAULT_CHECK_TOL);
    if !cd.verdict {
        return Err(Error::NotConstantDiameter(cd.target - cd.observed_min));
    }
    let family = (chords / body.pieces().len().max(1)).clamp(4, 32);
    let list = diametral_chords_with(body, DEFAULT_CHECK_TOL, chords, family);
    let mut witnesses = Vec::new();
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            let (a, b) = (list[i].arc(), list[j].arc());
            if !a.intersects(&b, EPS_INCIDENCE) && witnesses.len() < 8 {
                witnesses.push(Witness::new("disjoint-chords", vec![a.a, a.b, b.a, b.b], 0.0));
            }
        }
    }
    Ok(CheckReport {
        check: "chord-intersections".into(),
        verdict: witnesses.is_empty(),
        target: cd.target,
        observed_min: list.iter().map(|c| c.length).fold(f64::INFINITY, f64::min),
        observed_max: list.iter().map(|c| c.length).fold(0.0, f64::max),
        tolerance: EPS_INCIDENCE,
        witnesses,
        profile: Vec::new(),
    })
}

/// The diametral chord determined by a supporting hemisphere.
#[derive(Debug, Clone)]
pub struct Correspondence<'a> {
    body: &'a Body,
    delta: f64,
}

impl<'a> Correspondence<'a> {
    /// Checks the constant-diameter precondition (`δ < π/2`) once.
    pub fn new(body: &'a Body) -> Result<Self> {
        let cd = check_constant_diameter(body, DEFAULT_CHECK_TOL);
        if !cd.verdict || cd.target >= std::f64::consts::FRAC_PI_2 {
            return Err(Error::NotConstantDiameter(cd.target - cd.observed_min));
        }
        Ok(Self { body, delta: cd.target })
    }

    pub fn diameter(&self) -> f64 {
        self.delta
    }

    /// For `r ∈ bd(C°)`: the touch point `p` of `H(r)` and the chord from `p`
    /// along the great circle toward `r` to the far side of the body.
    pub fn chord(&self, r: &SpherePoint) -> Result<DiametralChord> {
        let (h, _) = self.body.support(r);
        if h.abs() > EPS_INCIDENCE {
            return Err(Error::NotOnPolarBoundary(h));
        }
        let touch = self.body.touch_point(r)?;
        let p = touch.point.point;
        let u = p.tangent_toward(r).ok_or(Error::NotOnPolarBoundary(h))?;
        let exit = exit_distance(self.body, &p, u);
        Ok(DiametralChord::new(p, p.walk(u, exit)))
    }
}

/// Distance along the great circle from boundary point `p` in direction `u`
/// to the second boundary intersection.
pub(crate) fn exit_distance(body: &Body, p: &SpherePoint, u: vec3::Vec3) -> f64 {
    let mut best = 0.0f64;
    for arc in body.pieces() {
        let c = arc.center();
        let a = p.dot(&c);
        let b = vec3::dot(u, c.vec());
        let amp = a.hypot(b);
        let target = arc.radius().cos();
        if amp < 1e-15 || target.abs() > amp * (1.0 + 1e-14) {
            continue;
        }
        let phi = b.atan2(a);
        let alpha = (target / amp).clamp(-1.0, 1.0).acos();
        for t in [phi + alpha, phi - alpha] {
            let t = t.rem_euclid(std::f64::consts::TAU);
            if t <= 1e-9 || t >= PI {
                continue;
            }
            let x = p.walk(u, t);
            if arc.nearest(&x).1 <= EPS_INCIDENCE {
                best = best.max(t);
            }
        }
    }
    best
}

/// Chord determined by the supporting hemisphere `H(r)` of a body of constant
/// diameter `δ < π/2`.
pub fn support_chord_correspondence(body: &Body, r: &SpherePoint) -> Result<DiametralChord> {
    Correspondence::new(body)?.chord(r)
}

/// `|cos|` of the angle between the chord and `bd(H(r))` at the chord's first endpoint.
pub fn orthogonality_residual(chord: &DiametralChord, r: &SpherePoint) -> f64 {
    let Some(dir) = chord.p.tangent_toward(&chord.q) else { return 1.0 };
    let Some(edge) = vec3::normalize(vec3::cross(r.vec(), chord.p.vec())) else { return 1.0 };
    vec3::dot(dir, edge).abs()
}
