use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sphaera::grid::fibonacci_sphere;
use sphaera::reuleaux::{ball_intersection, vertices_of};
use sphaera::suite::{
    lemma_trial, random_ball_intersection, random_hull, random_lemma_config, random_point, random_point_near,
    random_reuleaux_body,
};
use sphaera::width::{
    check_constant_diameter, check_constant_width, width_given_support, width_over_centers, Correspondence,
};
use sphaera::{convex_hull, geodesic_distance, lune_face_centers, Body, Hemisphere, Lune, PointKind, SpherePoint};

fn point() -> impl Strategy<Value = SpherePoint> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
        .prop_filter("away from the origin", |(x, y, z)| x * x + y * y + z * z > 0.01)
        .prop_map(|(x, y, z)| SpherePoint::new(x, y, z).unwrap())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn arc_body(seed: u64) -> Body {
    let mut r = rng(seed);
    if seed.is_multiple_of(2) {
        random_reuleaux_body(&mut r).unwrap().1
    } else {
        random_ball_intersection(&mut r).unwrap()
    }
}

fn any_body(seed: u64) -> Body {
    if seed.is_multiple_of(3) {
        random_hull(&mut rng(seed))
    } else {
        arc_body(seed)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn lune_thickness_matches_face_centers(g in point(), h in point()) {
        prop_assume!(g.dot(&h).abs() < 1.0 - 1e-9);
        let l = Lune::new(Hemisphere::new(g), Hemisphere::new(h)).unwrap();
        prop_assert!((l.thickness_from_faces() - (PI - geodesic_distance(&g, &h))).abs() <= 1e-12);
        let (ug, uh) = lune_face_centers(&l).unwrap();
        prop_assert!(ug.dot(&g).abs() <= 1e-12);
        prop_assert!(uh.dot(&h).abs() <= 1e-12);
        prop_assert!(Hemisphere::new(h).contains_with(&ug, 1e-12));
        prop_assert!(Hemisphere::new(g).contains_with(&uh, 1e-12));
    }

    #[test]
    fn distance_is_a_metric(a in point(), b in point(), c in point()) {
        let ab = geodesic_distance(&a, &b);
        prop_assert_eq!(ab, geodesic_distance(&b, &a));
        prop_assert!((0.0..=PI).contains(&ab));
        prop_assert!(geodesic_distance(&a, &c) <= ab + geodesic_distance(&b, &c) + 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn lemma_minimality(seed in any::<u64>()) {
        let (k, p, q) = random_lemma_config(&mut rng(seed));
        let out = lemma_trial(&k, &p, &q, 360).unwrap();
        prop_assert!(out.construction_error <= 1e-12);
        prop_assert!(out.margin >= -1e-9);
    }

    #[test]
    fn hull_is_idempotent(seed in any::<u64>()) {
        let Body::Polygon(h) = random_hull(&mut rng(seed)) else { unreachable!() };
        let again = convex_hull(h.vertices()).unwrap();
        prop_assert_eq!(again.vertices().len(), h.vertices().len());
        for v in h.vertices() {
            prop_assert!(again.vertices().iter().any(|w| geodesic_distance(v, w) <= 1e-12));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn double_polar_reproduces_polygon(seed in any::<u64>()) {
        let body = random_hull(&mut rng(seed));
        let Body::Polygon(p) = &body else { unreachable!() };
        let Body::Polygon(pp) = body.polar().unwrap().polar().unwrap() else { unreachable!() };
        let n = p.vertices().len();
        prop_assert_eq!(pp.vertices().len(), n);
        let shifted = (0..n).any(|s| {
            (0..n).all(|i| geodesic_distance(&p.vertices()[i], &pp.vertices()[(i + s) % n]) <= 1e-9)
        });
        prop_assert!(shifted);
    }

    #[test]
    fn polar_boundary_supports_body(seed in any::<u64>()) {
        let body = any_body(seed);
        let polar = body.polar().unwrap();
        for bp in polar.boundary_sample(1000) {
            let (h, _) = body.support(&bp.point);
            prop_assert!((-1e-9..=1e-6).contains(&h), "min x·r = {}", h);
        }
    }

    #[test]
    fn normal_cones_are_sound(seed in any::<u64>()) {
        let body = any_body(seed);
        let sample = body.boundary_sample(1000);
        for bp in body.boundary_sample(40) {
            let (_, cone) = body.classify_boundary_point(&bp).unwrap();
            for k in cone.sample(4) {
                prop_assert!((geodesic_distance(&k, &bp.point) - FRAC_PI_2).abs() <= 1e-9);
                let h = Hemisphere::new(k);
                prop_assert!(sample.iter().all(|x| h.contains_with(&x.point, 1e-9)));
            }
        }
    }

    #[test]
    fn contains_agrees_with_supporting_hemispheres(seed in any::<u64>()) {
        let body = any_body(seed);
        let supports: Vec<SpherePoint> = body.polar().unwrap().boundary_sample(1000).iter().map(|b| b.point).collect();
        let mut r = rng(seed ^ 0x5eed);
        let c = body.interior_point();
        for _ in 0..250 {
            let p = random_point_near(&mut r, &c, 1.6);
            let m = supports.iter().map(|k| p.dot(k)).fold(f64::INFINITY, f64::min);
            if m < -1e-4 {
                prop_assert!(!body.contains(&p));
            } else if m > 1e-4 {
                prop_assert!(body.contains(&p));
            }
        }
    }

    #[test]
    fn ball_intersections_are_convex(seed in any::<u64>()) {
        let body = random_ball_intersection(&mut rng(seed)).unwrap();
        let pts = body.boundary_sample(60);
        for i in 0..pts.len() {
            for j in (i + 1..pts.len()).step_by(7) {
                let (a, b) = (pts[i].point, pts[j].point);
                for t in [0.25, 0.5, 0.75] {
                    let Some(x) = a.toward(&b, t * geodesic_distance(&a, &b)) else { continue };
                    prop_assert!(body.contains_with(&x, 1e-9));
                }
            }
        }
    }

    #[test]
    fn ball_intersection_contains_iff_near_all_centers(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random_point(&mut r);
        let delta = 0.3 + (seed % 100) as f64 / 100.0;
        let centers: Vec<SpherePoint> = (0..4).map(|_| random_point_near(&mut r, &c, delta / 2.0)).collect();
        let body = ball_intersection(&centers, delta).unwrap();
        for _ in 0..300 {
            let p = random_point_near(&mut r, &c, 2.0 * delta);
            let worst = centers.iter().map(|x| geodesic_distance(x, &p)).fold(0.0, f64::max);
            if (worst - delta).abs() > 1e-9 {
                prop_assert_eq!(body.contains(&p), worst < delta);
            }
        }
    }

    #[test]
    fn theorem2_targets_agree(seed in any::<u64>()) {
        let body = arc_body(seed);
        let d = check_constant_diameter(&body, 1e-6);
        let w = check_constant_width(&body, 1e-6);
        prop_assert_eq!(d.verdict, w.verdict);
        if d.verdict {
            prop_assert!((d.target - w.target).abs() <= 1e-6);
            prop_assert!(body.is_strictly_convex().verdict);
        }
    }

    #[test]
    fn smooth_points_have_width_delta(seed in any::<u64>()) {
        let (spec, body) = random_reuleaux_body(&mut rng(seed)).unwrap();
        for bp in body.boundary_sample(64) {
            let (kind, cone) = body.classify_boundary_point(&bp).unwrap();
            if kind == PointKind::Smooth {
                let w = width_given_support(&body, &cone.sample(1)[0]).unwrap();
                prop_assert!((w - spec.delta).abs() <= 1e-6);
            }
        }
    }

    #[test]
    fn reuleaux_arc_structure(seed in any::<u64>()) {
        let (spec, body) = random_reuleaux_body(&mut rng(seed)).unwrap();
        let v = vertices_of(&body);
        let (n, m) = (spec.n, (spec.n - 1) / 2);
        for (i, arc) in body.pieces().iter().enumerate() {
            prop_assert!((arc.radius() - spec.delta).abs() <= 1e-12);
            prop_assert!(geodesic_distance(&arc.center(), &v[(i + m + 1) % n]) <= 1e-9);
            prop_assert!(body.contains_with(&v[i], 1e-12));
        }
    }

    #[test]
    fn correspondence_is_injective(seed in any::<u64>()) {
        let (_, body) = random_reuleaux_body(&mut rng(seed)).unwrap();
        let corr = Correspondence::new(&body).unwrap();
        let chords: Vec<_> = body
            .polar()
            .unwrap()
            .boundary_sample(100)
            .iter()
            .map(|r| corr.chord(&r.point).unwrap())
            .collect();
        // Ordered (touch point first) the map is injective; each unordered chord
        // is reached from the supporting hemispheres at both of its endpoints.
        let close = |a: &SpherePoint, b: &SpherePoint| geodesic_distance(a, b) <= 1e-9;
        for i in 0..chords.len() {
            let mut unordered = 0;
            for j in 0..chords.len() {
                if i != j {
                    prop_assert!(!(close(&chords[i].p, &chords[j].p) && close(&chords[i].q, &chords[j].q)));
                    unordered += usize::from(chords[i].same_as(&chords[j], 1e-9));
                }
            }
            prop_assert!(unordered <= 1);
        }
    }

    #[test]
    fn nested_grids_are_monotone(seed in any::<u64>()) {
        let body = any_body(seed);
        let k = body.polar().unwrap().boundary_sample(7)[(seed % 7) as usize].point;
        let coarse = fibonacci_sphere(1000);
        let mut fine = coarse.clone();
        fine.extend(fibonacci_sphere(3000));
        let a = width_over_centers(&body, &k, &coarse);
        let b = width_over_centers(&body, &k, &fine);
        if let Some(a) = a {
            let b = b.expect("finer grid contains the coarse one");
            prop_assert!(b <= a + 1e-9);
            prop_assert!(b >= width_given_support(&body, &k).unwrap() - 1e-9);
        }
    }
}
