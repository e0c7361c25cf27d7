use crate::body::{hemisphere_witness, SpherePolygon};
use crate::error::{Error, Result};
use crate::sphere::SpherePoint;
use crate::vec3;

/// Convex hull of points lying in an open hemisphere.
///
/// The points are centrally projected onto the tangent plane at an interior
/// direction (great circles become lines), hulled there with a monotone chain,
/// and the original points of the hull are returned counterclockwise.
pub fn convex_hull(points: &[SpherePoint]) -> Result<SpherePolygon> {
    if points.len() < 3 {
        return Err(Error::Degenerate);
    }
    let centroid = SpherePoint::try_from_vec(points.iter().fold([0.0; 3], |acc, p| vec3::add(acc, p.vec())));
    let w = match centroid {
        Some(c) if points.iter().all(|p| p.dot(&c) > 1e-12) => c,
        _ => hemisphere_witness(points).ok_or(Error::NoHemisphere)?,
    };
    let (e1, e2) = w.tangent_frame();
    let mut projected: Vec<(f64, f64, usize)> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let d = p.dot(&w);
            (vec3::dot(p.vec(), e1) / d, vec3::dot(p.vec(), e2) / d, i)
        })
        .collect();
    projected.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    projected.dedup_by(|a, b| (a.0 - b.0).abs() <= 1e-15 && (a.1 - b.1).abs() <= 1e-15);
    if projected.len() < 3 {
        return Err(Error::Degenerate);
    }

    let cross = |o: &(f64, f64, usize), a: &(f64, f64, usize), b: &(f64, f64, usize)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(f64, f64, usize)> = Vec::with_capacity(2 * projected.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64, usize)>> =
            if pass == 0 { Box::new(projected.iter()) } else { Box::new(projected.iter().rev()) };
        for p in iter {
            while hull.len() >= start + 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 1e-14 {
                hull.pop();
            }
            hull.push(*p);
        }
        hull.pop();
    }
    if hull.len() < 3 {
        return Err(Error::Degenerate);
    }
    SpherePolygon::new(hull.iter().map(|h| points[h.2]).collect()).map_err(|_| Error::Degenerate)
}
