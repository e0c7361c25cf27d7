//! Quasi-uniform point sets on the sphere.

use std::f64::consts::{PI, TAU};

use crate::sphere::SpherePoint;
use crate::vec3;

/// Fibonacci lattice of `n` points covering S².
pub fn fibonacci_sphere(n: usize) -> Vec<SpherePoint> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * i as f64;
            SpherePoint::from_vec([r * phi.cos(), r * phi.sin(), z])
        })
        .collect()
}

/// Fibonacci lattice of `n` points covering the cap of angular radius `radius`
/// about `center` (equal-area spacing in the cap).
pub fn fibonacci_cap(center: &SpherePoint, radius: f64, n: usize) -> Vec<SpherePoint> {
    let golden = PI * (3.0 - 5f64.sqrt());
    let (e1, e2) = center.tangent_frame();
    let c = center.vec();
    let zmin = radius.min(PI).cos();
    (0..n)
        .map(|i| {
            let z = 1.0 - (1.0 - zmin) * (i as f64 + 0.5) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = (golden * i as f64) % TAU;
            let t = vec3::combine(phi.cos(), e1, phi.sin(), e2);
            SpherePoint::from_vec(vec3::combine(z, c, r, t))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::geodesic_distance;

    #[test]
    fn cap_points_stay_inside() {
        let c = SpherePoint::new(0.3, -0.4, 0.5).unwrap();
        for p in fibonacci_cap(&c, 0.2, 500) {
            assert!(geodesic_distance(&p, &c) <= 0.2 + 1e-12);
        }
    }

    #[test]
    fn sphere_grid_is_balanced() {
        let g = fibonacci_sphere(10_000);
        let mean = g.iter().fold([0.0; 3], |a, p| vec3::add(a, p.xyz()));
        assert!(vec3::norm(mean) / 10_000.0 < 1e-3);
    }
}
