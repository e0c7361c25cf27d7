use crate::body::arc::CircleArc;
use crate::body::hemisphere_witness;
use crate::error::{Error, Result};
use crate::sphere::{geodesic_distance, SpherePoint};
use crate::tolerance::EPS_UNIT;

/// Convex geodesic polygon inside an open hemisphere, vertices counterclockwise
/// as seen from outside the sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePolygon {
    vertices: Vec<SpherePoint>,
    edges: Vec<CircleArc>,
}

impl SpherePolygon {
    pub fn new(vertices: Vec<SpherePoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidBody(format!("polygon needs at least 3 vertices, got {n}")));
        }
        let mut edges = Vec::with_capacity(n);
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if geodesic_distance(&a, &b) <= EPS_UNIT {
                return Err(Error::InvalidBody(format!("consecutive vertices {i} and {} coincide", (i + 1) % n)));
            }
            let edge = CircleArc::geodesic(a, b)
                .ok_or_else(|| Error::InvalidBody(format!("vertices {i} and {} are antipodal", (i + 1) % n)))?;
            edges.push(edge);
        }
        if hemisphere_witness(&vertices).is_none() {
            return Err(Error::InvalidBody("vertices do not lie in a common open hemisphere".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            for (j, v) in vertices.iter().enumerate() {
                if v.dot(&e.center()) < -EPS_UNIT {
                    return Err(Error::InvalidBody(format!(
                        "not convex counterclockwise: vertex {j} lies outside the hemisphere of edge {i}"
                    )));
                }
            }
        }
        let poly = Self { vertices, edges };
        if poly.area() <= EPS_UNIT {
            return Err(Error::InvalidBody("polygon has empty interior".into()));
        }
        Ok(poly)
    }

    pub fn vertices(&self) -> &[SpherePoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[CircleArc] {
        &self.edges
    }

    /// Spherical excess: `Σ interior angles − (n − 2)π`.
    pub fn area(&self) -> f64 {
        let n = self.edges.len();
        let turning: f64 = (0..n)
            .map(|i| {
                let prev = &self.edges[(i + n - 1) % n];
                let next = &self.edges[i];
                crate::body::arc::turn_angle(&self.vertices[i], &prev.normal(prev.sweep()), &next.normal(0.0))
            })
            .sum();
        std::f64::consts::TAU - turning
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::new(x, y, z).unwrap()
    }

    #[test]
    fn octant_area_is_an_eighth_of_the_sphere() {
        let p = SpherePolygon::new(vec![pt(1., 0., 0.), pt(0., 1., 0.), pt(0., 0., 1.)]).unwrap();
        assert!((p.area() - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn clockwise_rejected() {
        let err = SpherePolygon::new(vec![pt(1., 0., 0.), pt(0., 0., 1.), pt(0., 1., 0.)]).unwrap_err();
        assert!(err.to_string().contains("convex counterclockwise"), "{err}");
    }

    #[test]
    fn short_and_repeated_rejected() {
        assert!(SpherePolygon::new(vec![pt(1., 0., 0.), pt(0., 1., 0.)]).is_err());
        assert!(SpherePolygon::new(vec![pt(1., 0., 0.), pt(1., 0., 0.), pt(0., 1., 0.)]).is_err());
    }
}
