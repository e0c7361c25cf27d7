//! Spherical convex bodies: geodesic polygons and circle-arc bodies, with
//! containment, boundary sampling and classification, support points, and polars.

mod arc;
mod arcbody;
mod hull;
mod polygon;

use std::f64::consts::FRAC_PI_2;

pub use arc::CircleArc;
pub use arcbody::ArcBody;
pub use hull::convex_hull;
pub use polygon::SpherePolygon;

use crate::error::{Error, Result};
use crate::report::{CheckReport, Witness};
use crate::sphere::{geodesic_distance, GeodesicArc, SpherePoint};
use crate::tolerance::{EPS_CONTAIN, EPS_INCIDENCE, EPS_UNIT};
use crate::vec3;

/// A convex body on S².
#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Polygon(SpherePolygon),
    Arcs(ArcBody),
}

impl From<SpherePolygon> for Body {
    fn from(p: SpherePolygon) -> Self {
        Body::Polygon(p)
    }
}

impl From<ArcBody> for Body {
    fn from(a: ArcBody) -> Self {
        Body::Arcs(a)
    }
}

/// A point of `bd(C)` together with its location: boundary piece index and the
/// angular parameter along that piece.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub point: SpherePoint,
    pub piece: usize,
    pub param: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Smooth,
    Acute,
}

/// Centers of the hemispheres supporting the body at a boundary point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConeCenters {
    Single(SpherePoint),
    /// Arc of centers traversed counterclockwise from the incoming to the outgoing normal.
    Arc(GeodesicArc),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalCone {
    pub at: BoundaryPoint,
    pub centers: ConeCenters,
}

impl NormalCone {
    /// `count` centers spread over the cone (endpoints included).
    pub fn sample(&self, count: usize) -> Vec<SpherePoint> {
        match self.centers {
            ConeCenters::Single(k) => vec![k],
            ConeCenters::Arc(arc) => {
                let count = count.max(2);
                (0..count).map(|i| arc.point_at(i as f64 / (count - 1) as f64)).collect()
            }
        }
    }
}

/// Point where a supporting hemisphere touches the body. For polygons the whole
/// edge lying on `bd(H(k))` is reported when the touch point is not unique.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TouchPoint {
    pub point: BoundaryPoint,
    pub edge: Option<GeodesicArc>,
}

impl Body {
    /// Boundary as a cyclic chain of circle arcs (polygon edges have radius π/2).
    pub fn pieces(&self) -> &[CircleArc] {
        match self {
            Body::Polygon(p) => p.edges(),
            Body::Arcs(a) => a.arcs(),
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            Body::Polygon(p) => p.area(),
            Body::Arcs(a) => a.area(),
        }
    }

    pub fn is_polygon(&self) -> bool {
        matches!(self, Body::Polygon(_))
    }

    pub fn contains(&self, p: &SpherePoint) -> bool {
        self.contains_with(p, EPS_CONTAIN)
    }

    pub fn contains_with(&self, p: &SpherePoint, eps: f64) -> bool {
        match self {
            Body::Polygon(poly) => poly.edges().iter().all(|e| p.dot(&e.center()) >= -eps),
            Body::Arcs(a) => a.contains_with(p, eps),
        }
    }

    fn boundary_point(&self, piece: usize, param: f64) -> BoundaryPoint {
        let pieces = self.pieces();
        let arc = &pieces[piece];
        // Vertices are canonically the start of the following piece.
        if !arc.is_full_circle() && (arc.sweep() - param) * arc.radius().sin() <= EPS_UNIT {
            let next = (piece + 1) % pieces.len();
            return BoundaryPoint { point: pieces[next].start(), piece: next, param: 0.0 };
        }
        BoundaryPoint { point: arc.point(param), piece, param }
    }

    /// `min_{x ∈ C} x·k` and a boundary point attaining it.
    pub fn support(&self, k: &SpherePoint) -> (f64, BoundaryPoint) {
        let mut best = (f64::INFINITY, 0, 0.0);
        for (i, arc) in self.pieces().iter().enumerate() {
            let (t, v) = arc.extreme_dot(k, true);
            if v < best.0 {
                best = (v, i, t);
            }
        }
        (best.0, self.boundary_point(best.1, best.2))
    }

    /// Farthest point of the body from `p` and its distance.
    pub fn farthest_from(&self, p: &SpherePoint) -> (f64, BoundaryPoint) {
        let (_, bp) = self.support(p);
        (geodesic_distance(p, &bp.point), bp)
    }

    /// The turning angle of the boundary at the start of piece `i`.
    pub fn junction_turn(&self, i: usize) -> f64 {
        arcbody::junction_turn(self.pieces(), i)
    }

    /// Boundary points where more than one hemisphere supports the body.
    pub fn vertices(&self) -> Vec<BoundaryPoint> {
        (0..self.pieces().len())
            .filter(|&i| self.junction_turn(i) > EPS_UNIT)
            .map(|i| BoundaryPoint { point: self.pieces()[i].start(), piece: i, param: 0.0 })
            .collect()
    }

    /// Projects `p` onto the boundary, failing if it is farther than `EPS_INCIDENCE`.
    pub fn locate(&self, p: &SpherePoint) -> Result<BoundaryPoint> {
        let mut best = (f64::INFINITY, 0, 0.0);
        for (i, arc) in self.pieces().iter().enumerate() {
            let (t, d) = arc.nearest(p);
            if d < best.0 {
                best = (d, i, t);
            }
        }
        if best.0 > EPS_INCIDENCE {
            return Err(Error::NotOnBoundary(best.0));
        }
        Ok(self.boundary_point(best.1, best.2))
    }

    /// `n` boundary points in boundary order: every piece start plus interior
    /// samples allotted to pieces in proportion to their length. Returns all piece
    /// starts when `n` is smaller than the number of pieces.
    pub fn boundary_sample(&self, n: usize) -> Vec<BoundaryPoint> {
        let pieces = self.pieces();
        let lengths: Vec<f64> = pieces.iter().map(CircleArc::length).collect();
        let quotas = allot(n.saturating_sub(pieces.len()), &lengths);
        let mut out = Vec::with_capacity(n.max(pieces.len()));
        for (i, (arc, q)) in pieces.iter().zip(quotas).enumerate() {
            out.push(BoundaryPoint { point: arc.start(), piece: i, param: 0.0 });
            for j in 1..=q {
                let t = arc.sweep() * j as f64 / (q + 1) as f64;
                out.push(BoundaryPoint { point: arc.point(t), piece: i, param: t });
            }
        }
        out
    }

    /// Smooth/acute classification with the normal cone of supporting centers.
    pub fn classify_boundary_point(&self, bp: &BoundaryPoint) -> Result<(PointKind, NormalCone)> {
        let pieces = self.pieces();
        let arc = pieces.get(bp.piece).ok_or(Error::NotOnBoundary(f64::INFINITY))?;
        let residual = geodesic_distance(&arc.point(bp.param), &bp.point);
        if residual > EPS_INCIDENCE || bp.param < -EPS_UNIT || bp.param > arc.sweep() + EPS_UNIT {
            return Err(Error::NotOnBoundary(residual));
        }
        let n = pieces.len();
        let rs = arc.radius().sin();
        let junction = if arc.is_full_circle() {
            None
        } else if bp.param * rs <= EPS_INCIDENCE {
            Some(bp.piece)
        } else if (arc.sweep() - bp.param) * rs <= EPS_INCIDENCE {
            Some((bp.piece + 1) % n)
        } else {
            None
        };
        if let Some(j) = junction {
            if self.junction_turn(j) > EPS_UNIT {
                let prev = &pieces[(j + n - 1) % n];
                let incoming = prev.normal(prev.sweep());
                let outgoing = pieces[j].normal(0.0);
                let at = BoundaryPoint { point: pieces[j].start(), piece: j, param: 0.0 };
                let cone = GeodesicArc::new(incoming, outgoing)?;
                return Ok((PointKind::Acute, NormalCone { at, centers: ConeCenters::Arc(cone) }));
            }
        }
        let k = arc.normal(bp.param.clamp(0.0, arc.sweep()));
        Ok((PointKind::Smooth, NormalCone { at: *bp, centers: ConeCenters::Single(k) }))
    }

    /// Point where `H(k)` touches the body; `k` must be on the polar boundary.
    pub fn touch_point(&self, k: &SpherePoint) -> Result<TouchPoint> {
        let (h, bp) = self.support(k);
        if h.abs() > EPS_INCIDENCE {
            return Err(Error::NotSupporting(h));
        }
        let edge = self.pieces().iter().find_map(|arc| {
            (arc.is_geodesic() && arc.is_level_for(k) && arc.start().dot(k).abs() <= EPS_INCIDENCE)
                .then(|| GeodesicArc { a: arc.start(), b: arc.end() })
        });
        Ok(TouchPoint { point: bp, edge })
    }

    /// Polar body `C° = { r : C ⊂ H(r) }`.
    ///
    /// Each arc of radius ρ about `c` maps to the arc of radius π/2 − ρ about `c`
    /// traced by its normals, and each corner maps to the geodesic arc of its normal
    /// cone. Polygons map to polygons whose vertices are the poles of the edges.
    pub fn polar(&self) -> Result<Body> {
        match self {
            Body::Polygon(p) => {
                let verts: Vec<SpherePoint> = p.edges().iter().map(CircleArc::center).collect();
                SpherePolygon::new(verts).map(Body::Polygon).map_err(|_| Error::EmptyInterior)
            }
            Body::Arcs(_) => {
                let pieces = self.pieces();
                let n = pieces.len();
                let mut out = Vec::with_capacity(2 * n);
                for i in 0..n {
                    let arc = &pieces[i];
                    if !arc.is_geodesic() {
                        out.push(arc.polar());
                    }
                    let j = (i + 1) % n;
                    let turn = self.junction_turn(j);
                    if turn > EPS_UNIT {
                        let v = pieces[j].start();
                        let e1 = arc.normal(arc.sweep());
                        let e2 = vec3::cross(v.vec(), e1.vec());
                        out.push(CircleArc::from_frame(v, FRAC_PI_2, e1.vec(), e2, turn));
                    }
                }
                if out.is_empty() {
                    return Err(Error::EmptyInterior);
                }
                ArcBody::new(out).map(Body::Arcs).map_err(|_| Error::EmptyInterior)
            }
        }
    }

    /// Strict convexity: the boundary contains no geodesic arc.
    pub fn is_strictly_convex(&self) -> CheckReport {
        let pieces = self.pieces();
        let min_r = pieces.iter().map(CircleArc::radius).fold(f64::INFINITY, f64::min);
        let max_r = pieces.iter().map(CircleArc::radius).fold(0.0, f64::max);
        let witnesses: Vec<Witness> = pieces
            .iter()
            .filter(|a| a.is_geodesic() && a.length() > EPS_INCIDENCE)
            .map(|a| Witness::new("geodesic-edge", vec![a.start(), a.end()], a.length()))
            .collect();
        CheckReport {
            check: "strict-convexity".into(),
            verdict: witnesses.is_empty(),
            target: FRAC_PI_2,
            observed_min: min_r,
            observed_max: max_r,
            tolerance: EPS_UNIT,
            witnesses,
            profile: Vec::new(),
        }
    }

    /// Total boundary length.
    pub fn perimeter(&self) -> f64 {
        self.pieces().iter().map(CircleArc::length).sum()
    }

    /// Centroid direction of the boundary (used as a convenient interior reference).
    pub fn interior_point(&self) -> SpherePoint {
        let mut acc = [0.0; 3];
        for bp in self.boundary_sample(64) {
            acc = vec3::add(acc, bp.point.vec());
        }
        SpherePoint::from_vec(acc)
    }
}

/// Largest-remainder allocation of `total` samples proportional to `weights`.
fn allot(total: usize, weights: &[f64]) -> Vec<usize> {
    let sum: f64 = weights.iter().sum();
    if sum <= 0.0 || total == 0 {
        return vec![0; weights.len()];
    }
    let exact: Vec<f64> = weights.iter().map(|w| total as f64 * w / sum).collect();
    let mut quotas: Vec<usize> = exact.iter().map(|e| e.floor() as usize).collect();
    let mut rest = total - quotas.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        let ra = exact[a] - exact[a].floor();
        let rb = exact[b] - exact[b].floor();
        rb.total_cmp(&ra).then(a.cmp(&b))
    });
    for i in order {
        if rest == 0 {
            break;
        }
        quotas[i] += 1;
        rest -= 1;
    }
    quotas
}

/// A direction `w` with `w·p > 0` for every input point, if one exists.
///
/// Perceptron iteration started from the normalized centroid; points confined to
/// a closed but not open hemisphere never converge and yield `None`.
pub fn hemisphere_witness(points: &[SpherePoint]) -> Option<SpherePoint> {
    if points.is_empty() {
        return None;
    }
    let mut w = points.iter().fold([0.0; 3], |acc, p| vec3::add(acc, p.vec()));
    for _ in 0..50_000 {
        let wn = match vec3::normalize(w) {
            Some(v) => v,
            None => points[0].vec(),
        };
        let (worst, value) =
            points.iter().map(|p| (p, vec3::dot(wn, p.vec()))).min_by(|a, b| a.1.total_cmp(&b.1)).expect("nonempty");
        if value > 1e-12 {
            return Some(SpherePoint::from_vec(wn));
        }
        w = vec3::add(w, worst.vec());
    }
    None
}
