use std::f64::consts::{FRAC_PI_2, PI, TAU};

use super::*;
use crate::width::{check_constant_diameter, check_constant_width, diameter};

fn pt(x: f64, y: f64, z: f64) -> SpherePoint {
    SpherePoint::new(x, y, z).unwrap()
}

#[test]
fn circumradius_closed_form() {
    for n in [3usize, 5, 7, 9, 21] {
        let m = (n - 1) / 2;
        for delta in [0.01, 0.3, 1.0, 1.5] {
            let r = circumradius(n, delta).unwrap();
            let c = (TAU * m as f64 / n as f64).cos();
            let s2 = (1.0 - f64::cos(delta)) / (1.0 - c);
            assert!((r.sin().powi(2) - s2).abs() < 1e-12, "n={n} δ={delta}");
        }
    }
    let r = circumradius(3, 1.0).unwrap();
    assert!((r - 0.58667).abs() < 1e-5, "{r}");
}

#[test]
fn circumradius_small_delta_limit() {
    let delta = 1e-3;
    let r = circumradius(3, delta).unwrap();
    let planar = delta / 3f64.sqrt();
    assert!(((r - planar) / planar).abs() <= 1e-4);
}

#[test]
fn rejects_bad_parameters() {
    for (n, d) in [(4, 1.0), (1, 1.0), (5, FRAC_PI_2), (5, 0.0), (5, 2.0)] {
        assert!(matches!(regular_reuleaux(&ReuleauxSpec::new(n, d)), Err(Error::PrecondViolation(_))));
    }
    assert!(ball(pt(0., 0., 1.), PI / 4.0).is_err());
    assert!(random_reuleaux(&ReuleauxSpec::new(5, 0.5)).is_err());
}

#[test]
fn regular_structure() {
    let spec = ReuleauxSpec::new(5, 0.9);
    let body = regular_reuleaux(&spec).unwrap();
    let verts = vertices_of(&body);
    assert_eq!(verts.len(), 5);
    let r = circumradius(5, 0.9).unwrap();
    for (i, arc) in body.pieces().iter().enumerate() {
        assert!((arc.radius() - 0.9).abs() < 1e-12);
        assert!(geodesic_distance(&arc.end(), &verts[(i + 1) % 5]) < 1e-12);
        assert!(geodesic_distance(&arc.center(), &verts[(i + 3) % 5]) < 1e-12);
        assert!((geodesic_distance(&verts[i], &pt(0., 0., 1.)) - r).abs() < 1e-12);
    }
}

#[test]
fn ball_intersection_of_vertices_is_reuleaux() {
    let body = regular_reuleaux(&ReuleauxSpec::new(7, 1.1)).unwrap();
    let verts = vertices_of(&body);
    let again = ball_intersection(&verts, 1.1).unwrap();
    assert_eq!(again.pieces().len(), 7);
    for arc in body.pieces() {
        assert!(again.pieces().iter().any(|b| {
            geodesic_distance(&b.center(), &arc.center()) < 1e-9 && geodesic_distance(&b.start(), &arc.start()) < 1e-9
        }));
    }
}

#[test]
fn single_point_gives_ball() {
    let c = pt(0.1, 0.2, 1.0);
    let b = ball_intersection(&[c], 0.6).unwrap();
    assert_eq!(b.pieces().len(), 1);
    assert!(b.pieces()[0].is_full_circle());
    assert!((diameter(&b).value - 1.2).abs() < 1e-9);
}

#[test]
fn lens_has_two_arcs() {
    let p = pt(0., 0., 1.);
    let q = p.walk(p.tangent_frame().0, 0.7);
    let lens = ball_intersection(&[p, q], 0.7).unwrap();
    assert_eq!(lens.pieces().len(), 2);
    assert!(lens.contains(&p) && lens.contains(&q));
}

#[test]
fn ball_intersection_rejects_far_centers() {
    let p = pt(0., 0., 1.);
    let q = p.walk(p.tangent_frame().0, 0.8);
    assert!(ball_intersection(&[p, q], 0.7).is_err());
    assert!(ball_intersection(&[], 0.7).is_err());
}

#[test]
fn zero_jitter_is_regular() {
    let spec = ReuleauxSpec::new(5, 0.8).with_seed(3).with_jitter(0.0);
    let rnd = random_reuleaux(&spec).unwrap();
    let reg = regular_reuleaux(&spec).unwrap();
    for (a, b) in vertices_of(&rnd).iter().zip(vertices_of(&reg)) {
        assert!(geodesic_distance(a, &b) < 1e-9);
    }
}

#[test]
fn random_is_deterministic_and_constant() {
    let spec = ReuleauxSpec::new(7, 0.7).with_seed(42);
    let a = random_reuleaux(&spec).unwrap();
    let b = random_reuleaux(&spec).unwrap();
    assert_eq!(vertices_of(&a), vertices_of(&b));
    assert!(check_constant_diameter(&a, 1e-6).verdict);
    assert!(check_constant_width(&a, 1e-6).verdict);
    let c = random_reuleaux(&spec.clone().with_seed(43)).unwrap();
    assert_ne!(vertices_of(&a), vertices_of(&c));
}

#[test]
fn pose_moves_body() {
    let axis = pt(1., 0., 0.);
    let spec = ReuleauxSpec::new(3, 1.0).with_pose(Pose::from_axis_angle(&axis, 0.5));
    let body = regular_reuleaux(&spec).unwrap();
    assert!(body.contains(&pt(0., -0.5f64.sin(), 0.5f64.cos())) || body.contains(&pt(0., 0.5f64.sin(), 0.5f64.cos())));
    assert!(check_constant_width(&body, 1e-6).verdict);
}
