//! Acceptance matrix: one pass/fail line per criterion.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sphaera::reuleaux::ball;
use sphaera::suite::{
    check_correspondence, constant_diameter_family, lemma_trial, random_ball_intersection, random_hull,
    random_lemma_config, random_lens, random_point, random_reuleaux_body, regular_family, width_reduction_errors,
    BALL_RADII,
};
use sphaera::width::{
    check_constant_diameter, check_constant_diameter_with, check_constant_width, check_constant_width_with,
    diametral_chords_with, width_profile,
};
use sphaera::{Body, Hemisphere, Lune, SpherePoint};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn octant() -> Body {
    let v = [[1., 0., 0.], [0., 1., 0.], [0., 0., 1.]].map(|p| SpherePoint::try_from(p).unwrap());
    sphaera::SpherePolygon::new(v.to_vec()).unwrap().into()
}

fn c1_lune_thickness() -> Outcome {
    let mut rng = rng(1);
    let mut worst = 0.0f64;
    let mut count = 0;
    while count < 10_000 {
        let (g, h) = (random_point(&mut rng), random_point(&mut rng));
        let Ok(l) = Lune::new(Hemisphere::new(g), Hemisphere::new(h)) else { continue };
        let err = (l.thickness_from_faces() - (PI - g.distance(&h))).abs();
        worst = worst.max(err);
        count += 1;
    }
    outcome(worst <= 1e-12, format!("10000 lunes, max error {worst:.2e}"))
}

fn c2_lemma() -> Outcome {
    let mut rng = rng(2);
    let (mut worst_c, mut worst_m) = (0.0f64, f64::INFINITY);
    for _ in 0..1000 {
        let (k, p, q) = random_lemma_config(&mut rng);
        let out = lemma_trial(&k, &p, &q, 360).expect("valid configuration");
        worst_c = worst_c.max(out.construction_error);
        worst_m = worst_m.min(out.margin);
    }
    outcome(
        worst_c <= 1e-12 && worst_m >= -1e-9,
        format!("1000 configs, max |thickness − |pq|| {worst_c:.2e}, min margin over 360 lunes {worst_m:.2e}"),
    )
}

fn c3_balls() -> Outcome {
    let mut rng = rng(3);
    let mut ok = true;
    let mut worst = 0.0f64;
    for rho in BALL_RADII {
        let b = ball(random_point(&mut rng), rho).unwrap();
        let w = check_constant_width(&b, 1e-6);
        let d = check_constant_diameter(&b, 1e-6);
        let err = (w.target - 2.0 * rho).abs().max((d.target - 2.0 * rho).abs());
        worst = worst.max(err);
        ok &= w.verdict && d.verdict && err <= 1e-9;
    }
    outcome(ok, format!("4 balls, max |target − 2ρ| {worst:.2e}"))
}

fn c4_regular() -> Outcome {
    let mut ok = true;
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for (n, delta, b) in regular_family() {
        let w = check_constant_width_with(&b, 1e-6, 2048);
        let d = check_constant_diameter_with(&b, 1e-6, 2048);
        let prof = width_profile(&b, 2048).unwrap();
        let dev = prof.iter().map(|s| (s.value - delta).abs()).fold(0.0, f64::max);
        let err = dev.max((w.target - delta).abs()).max((d.target - delta).abs());
        worst = worst.max(err);
        if !(w.verdict && d.verdict && err <= 1e-6) {
            ok = false;
            bad.push(format!("({n}, {delta})"));
        }
    }
    outcome(ok, format!("20 polygons, max deviation from δ {worst:.2e}; failing {bad:?}"))
}

fn c5_random_consistency() -> Outcome {
    let mut rng = rng(5);
    let mut disagree = 0;
    let mut lens_pass = 0;
    let mut lenses = 0;
    let mut constant = 0;
    for i in 0..500 {
        let (b, is_lens) = match i % 5 {
            0..=2 => (random_reuleaux_body(&mut rng).unwrap().1, false),
            3 => (random_ball_intersection(&mut rng).unwrap(), false),
            _ => (random_lens(&mut rng).unwrap(), true),
        };
        let d = check_constant_diameter(&b, 1e-5);
        let w = check_constant_width(&b, 1e-5);
        disagree += usize::from(d.verdict != w.verdict);
        constant += usize::from(d.verdict);
        if is_lens {
            lenses += 1;
            lens_pass += usize::from(d.verdict || w.verdict);
        }
    }
    outcome(
        disagree == 0 && lens_pass == 0,
        format!("500 bodies, {constant} of constant diameter, {disagree} disagreements, {lens_pass}/{lenses} lenses passing a checker"),
    )
}

fn c6_prop1() -> Outcome {
    let mut rng = rng(6);
    let family = constant_diameter_family(&mut rng, 10).unwrap();
    let strict = family.iter().filter(|b| b.is_strictly_convex().verdict).count();
    let mut polygons = vec![("octant".to_string(), octant())];
    for i in 0..30 {
        polygons.push((format!("hull {i}"), random_hull(&mut rng)));
    }
    let mut not_rejected = Vec::new();
    for (name, p) in &polygons {
        let r = check_constant_diameter(p, 1e-6);
        if r.verdict || r.witnesses.is_empty() {
            not_rejected.push(format!("{name} (diameter {:.6})", r.target));
        }
    }
    outcome(
        strict == family.len() && not_rejected.is_empty(),
        format!(
            "{strict}/{} constant-diameter bodies strictly convex; polygons not rejected by \
             check_constant_diameter: {not_rejected:?}",
            family.len()
        ),
    )
}

fn c7_prop2() -> Outcome {
    let mut rng = rng(7);
    let family = constant_diameter_family(&mut rng, 6).unwrap();
    let mut ok = true;
    let mut min_chords = usize::MAX;
    let mut disjoint = 0;
    for b in &family {
        let family_size = (512 / b.pieces().len()).clamp(4, 32);
        let chords = diametral_chords_with(b, 1e-6, 512, family_size);
        min_chords = min_chords.min(chords.len());
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if !chords[i].arc().intersects(&chords[j].arc(), 1e-9) {
                    disjoint += 1;
                }
            }
        }
        ok &= chords.len() >= 200;
    }
    ok &= disjoint == 0;
    outcome(ok, format!("{} bodies, at least {min_chords} chords each, {disjoint} disjoint pairs", family.len()))
}

fn c8_prop3() -> Outcome {
    let mut rng = rng(8);
    let family = constant_diameter_family(&mut rng, 6).unwrap();
    let mut ok = true;
    let mut worst = 0.0f64;
    for b in &family {
        let r = check_correspondence(b, 100, 1e-6).unwrap();
        worst = worst.max((r.observed_max - r.target).abs()).max((r.observed_min - r.target).abs());
        ok &= r.verdict;
    }
    outcome(ok, format!("{} bodies × 100 polar points, max |chord − δ| {worst:.2e}", family.len()))
}

fn c9_width_reduction() -> Outcome {
    let mut rng = rng(9);
    let mut bodies: Vec<Body> = (0..100).map(|_| random_hull(&mut rng)).collect();
    for i in 0..20 {
        bodies.push(match i % 4 {
            0 | 1 => random_reuleaux_body(&mut rng).unwrap().1,
            2 => random_ball_intersection(&mut rng).unwrap(),
            _ => random_lens(&mut rng).unwrap(),
        });
    }
    let (mut gap, mut excess) = (0.0f64, f64::NEG_INFINITY);
    for b in &bodies {
        let (g, e) = width_reduction_errors(b, 50, 10_000).unwrap();
        gap = gap.max(g);
        excess = excess.max(e);
    }
    outcome(
        gap <= 2e-3 && excess <= 1e-9,
        format!("100 polygons + 20 arc bodies × 50 directions, max gap {gap:.2e}, max closed-form excess {excess:.2e}"),
    )
}

fn same_cyclic(a: &[SpherePoint], b: &[SpherePoint], tol: f64) -> bool {
    a.len() == b.len()
        && (0..b.len()).any(|s| a.iter().enumerate().all(|(i, p)| p.distance(&b[(i + s) % b.len()]) <= tol))
}

fn c10_polar() -> Outcome {
    let mut rng = rng(10);
    let mut worst_ok = true;
    for _ in 0..100 {
        let Body::Polygon(p) = random_hull(&mut rng) else { unreachable!() };
        let body: Body = p.clone().into();
        let Body::Polygon(pp) = body.polar().unwrap().polar().unwrap() else { unreachable!() };
        worst_ok &= same_cyclic(p.vertices(), pp.vertices(), 1e-9);
    }
    let Body::Polygon(o) = octant() else { unreachable!() };
    let Body::Polygon(op) = octant().polar().unwrap() else { unreachable!() };
    let self_dual = op.vertices().len() == 3 && o.vertices().iter().all(|v| op.vertices().contains(v));
    let mut ball_err = 0.0f64;
    for rho in BALL_RADII {
        let b = ball(random_point(&mut rng), rho).unwrap();
        let pol = b.polar().unwrap();
        ball_err = ball_err.max((pol.pieces()[0].radius() - (FRAC_PI_2 - rho)).abs());
    }
    outcome(
        worst_ok && self_dual && ball_err <= 1e-9,
        format!("double polar of 100 hulls ok: {worst_ok}; octant self-dual: {self_dual}; ball polar radius error {ball_err:.2e}"),
    )
}

fn c11_cli() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_sphaera");
    let verify = Command::new(exe).args(["verify", "--seed", "0"]).output().unwrap();
    let table = String::from_utf8_lossy(&verify.stdout);
    let rows = ["Lemma", "P1", "P2", "P3", "T1", "T2"]
        .iter()
        .filter(|r| table.lines().any(|l| l.starts_with(*r) && l.contains("pass")))
        .count();
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let st =
            Command::new(exe).args(["search", "--count", "100", "--seed", "1", "--out"]).arg(&path).output().unwrap();
        (st.status.success(), std::fs::read(&path).unwrap_or_default())
    };
    let (ok1, a) = run("a.jsonl");
    let (ok2, b) = run("b.jsonl");
    let text = String::from_utf8_lossy(&a);
    let entries: Vec<serde_json::Value> = text.lines().filter_map(|l| serde_json::from_str(l).ok()).collect();
    let all_agree = entries.iter().all(|e| e["agree"] == serde_json::Value::Bool(true));
    outcome(
        verify.status.success() && rows == 6 && ok1 && ok2 && entries.len() == 100 && all_agree && a == b,
        format!(
            "verify exit {:?} with {rows}/6 pass rows; search logged {} entries, all agree {all_agree}, identical rerun {}",
            verify.status.code(),
            entries.len(),
            a == b
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 lune thickness consistency", c1_lune_thickness, Duration::from_secs(1)),
        ("2 lemma", c2_lemma, Duration::from_secs(10)),
        ("3 theorem 1 balls", c3_balls, Duration::from_secs(10)),
        ("4 theorem 2 regular Reuleaux", c4_regular, Duration::from_secs(120)),
        ("5 theorem 2 randomized consistency", c5_random_consistency, Duration::from_secs(600)),
        ("6 proposition 1", c6_prop1, Duration::from_secs(30)),
        ("7 proposition 2", c7_prop2, Duration::from_secs(60)),
        ("8 proposition 3 correspondence", c8_prop3, Duration::from_secs(60)),
        ("9 width reduction soundness", c9_width_reduction, Duration::from_secs(300)),
        ("10 polar duality", c10_polar, Duration::MAX),
        ("11 cli contract", c11_cli, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let pass = out.pass && in_time;
        failed += usize::from(!pass);
        let budget = if budget == Duration::MAX { String::new() } else { format!(" / {budget:?}") };
        println!("[{}] criterion {name}: {} ({:.2?}{budget})", if pass { "PASS" } else { "FAIL" }, out.detail, elapsed);
    }
    println!("{} of 11 criteria pass", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
