use std::f64::consts::TAU;

use crate::body::arc::{turn_angle, CircleArc};
use crate::body::hemisphere_witness;
use crate::error::{Error, Result};
use crate::sphere::{geodesic_distance, SpherePoint};
use crate::tolerance::{EPS_INCIDENCE, EPS_UNIT};
use crate::vec3;

/// Convex body bounded by a cyclic chain of circular arcs of radius `ρ ∈ (0, π/2]`.
///
/// Containment uses the decomposition `body = chord polygon ∪ circular segments`:
/// each arc is cut into pieces of at most a quarter turn, the nodes form a convex
/// geodesic polygon, and each piece bounds a segment (disk ∩ outer side of its chord).
#[derive(Debug, Clone, PartialEq)]
pub struct ArcBody {
    arcs: Vec<CircleArc>,
    chord_normals: Vec<SpherePoint>,
    segments: Vec<Segment>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Segment {
    center: SpherePoint,
    cos_radius: f64,
    chord_normal: SpherePoint,
}

impl ArcBody {
    pub fn new(arcs: Vec<CircleArc>) -> Result<Self> {
        let n = arcs.len();
        if n == 0 {
            return Err(Error::InvalidBody("arc body needs at least one arc".into()));
        }
        if n == 1 && !arcs[0].is_full_circle() {
            return Err(Error::InvalidBody("a single-arc body must be a full circle (start = end)".into()));
        }
        if n > 1 {
            if let Some(i) = arcs.iter().position(CircleArc::is_full_circle) {
                return Err(Error::InvalidBody(format!("arc {i} is a full circle inside a multi-arc chain")));
            }
        }
        for i in 0..n {
            let gap = geodesic_distance(&arcs[i].end(), &arcs[(i + 1) % n].start());
            if gap > EPS_UNIT {
                return Err(Error::InvalidBody(format!(
                    "arc endpoints do not chain: end of arc {i} is {gap:.3e} from start of arc {}",
                    (i + 1) % n
                )));
            }
        }
        for i in 0..n {
            let turn = junction_turn(&arcs, i);
            if turn < -EPS_INCIDENCE {
                return Err(Error::InvalidBody(format!(
                    "not convex: boundary turns clockwise by {:.3e} at the start of arc {i}",
                    -turn
                )));
            }
        }
        let total = total_turning(&arcs);
        if total.is_nan() || total >= TAU - EPS_UNIT {
            return Err(Error::InvalidBody("arc body has empty interior".into()));
        }
        if total <= 0.0 {
            return Err(Error::InvalidBody("boundary winds more than once or is not convex".into()));
        }
        let mut nodes = Vec::new();
        let mut segments = Vec::new();
        for arc in &arcs {
            let pts = arc.nodes();
            for w in pts.windows(2) {
                let chord =
                    SpherePoint::try_from_vec(vec3::cross(w[0].vec(), w[1].vec())).unwrap_or_else(|| arc.center());
                segments.push(Segment { center: arc.center(), cos_radius: arc.radius().cos(), chord_normal: chord });
            }
            nodes.extend_from_slice(&pts[..pts.len() - 1]);
        }
        let mut samples = nodes.clone();
        for arc in &arcs {
            samples.extend((1..8).map(|j| arc.point(arc.sweep() * j as f64 / 8.0)));
        }
        if hemisphere_witness(&samples).is_none() {
            return Err(Error::InvalidBody("body does not lie in an open hemisphere".into()));
        }
        let m = nodes.len();
        let chord_normals = (0..m)
            .filter_map(|j| SpherePoint::try_from_vec(vec3::cross(nodes[j].vec(), nodes[(j + 1) % m].vec())))
            .collect();
        Ok(Self { arcs, chord_normals, segments })
    }

    pub fn arcs(&self) -> &[CircleArc] {
        &self.arcs
    }

    pub fn area(&self) -> f64 {
        TAU - total_turning(&self.arcs)
    }

    pub(crate) fn contains_with(&self, p: &SpherePoint, eps: f64) -> bool {
        if self.chord_normals.iter().all(|n| p.dot(n) >= -eps) {
            return true;
        }
        self.segments.iter().any(|s| p.dot(&s.center) >= s.cos_radius - eps && p.dot(&s.chord_normal) <= eps)
    }
}

/// Turning angle at the start of arc `i` (junction with the previous arc).
pub(crate) fn junction_turn(arcs: &[CircleArc], i: usize) -> f64 {
    let n = arcs.len();
    let prev = &arcs[(i + n - 1) % n];
    let next = &arcs[i];
    turn_angle(&next.start(), &prev.normal(prev.sweep()), &next.normal(0.0))
}

/// Total geodesic curvature plus corner turning; equals `2π − area` by Gauss–Bonnet.
fn total_turning(arcs: &[CircleArc]) -> f64 {
    let curvature: f64 = arcs.iter().map(|a| a.radius().cos() * a.sweep()).sum();
    let corners: f64 = (0..arcs.len()).map(|i| junction_turn(arcs, i)).sum();
    curvature + corners
}
