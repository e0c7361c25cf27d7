//! Randomized families and the verification matrix behind `verify` and `search`.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::body::{convex_hull, Body};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Witness};
use crate::reuleaux::{ball, ball_intersection, random_reuleaux, regular_reuleaux, ReuleauxSpec};
use crate::sphere::{geodesic_distance, hemispheres_through, narrowest_lune_through, Hemisphere, SpherePoint};
use crate::tolerance::{DEFAULT_CHECK_TOL, DEFAULT_GRID, DEFAULT_SAMPLES, DISCRETIZATION_FLOOR, EPS_INCIDENCE};
use crate::width::{
    check_chord_intersections_with, check_constant_diameter_with, check_constant_width_with, exit_distance,
    orthogonality_residual, width_given_support, width_oracle, Correspondence,
};

/// Shared knobs of the suite runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub tol: f64,
    pub samples: usize,
    pub grid: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { tol: DEFAULT_CHECK_TOL, samples: DEFAULT_SAMPLES, grid: DEFAULT_GRID, seed: 0 }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::PrecondViolation(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.tol < DISCRETIZATION_FLOOR {
            return Err(Error::PrecondViolation(format!(
                "tolerance {:e} is below the discretization floor {:e}: diameters and widths of arc \
                 bodies are located by sampling plus golden-section refinement, which stops at \
                 {:e} rad, so no verdict at this tolerance would be meaningful",
                self.tol, DISCRETIZATION_FLOOR, DISCRETIZATION_FLOOR
            )));
        }
        if self.samples < 64 {
            return Err(Error::PrecondViolation(format!("samples must be at least 64, got {}", self.samples)));
        }
        if self.grid < 1000 {
            return Err(Error::PrecondViolation(format!("grid must be at least 1000, got {}", self.grid)));
        }
        Ok(())
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub fn random_point<R: Rng>(rng: &mut R) -> SpherePoint {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    SpherePoint::new(r * phi.cos(), r * phi.sin(), z).expect("unit vector")
}

/// A point at distance in `[0, radius]` from `c`, uniform in angle.
pub fn random_point_near<R: Rng>(rng: &mut R, c: &SpherePoint, radius: f64) -> SpherePoint {
    let (e1, e2) = c.tangent_frame();
    let phi: f64 = rng.gen_range(0.0..TAU);
    let dir = [0, 1, 2].map(|i| phi.cos() * e1[i] + phi.sin() * e2[i]);
    c.walk(dir, rng.gen_range(0.0..=radius))
}

/// A random `(K, p, q)`: `p ∈ bd(K)` and `q` on the arc from `p` toward the center of `K`.
pub fn random_lemma_config<R: Rng>(rng: &mut R) -> (Hemisphere, SpherePoint, SpherePoint) {
    let k = random_point(rng);
    let (e1, e2) = k.tangent_frame();
    let phi: f64 = rng.gen_range(0.0..TAU);
    let p = k.walk([0, 1, 2].map(|i| phi.cos() * e1[i] + phi.sin() * e2[i]), FRAC_PI_2);
    let len = rng.gen_range(0.05..1.5);
    let q = p.toward(&k, len).expect("p is a quarter turn from k");
    (Hemisphere::new(k), p, q)
}

/// Result of one Lemma configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaOutcome {
    /// `|thickness(narrowest) − |pq||`.
    pub construction_error: f64,
    /// `min thickness(K ∩ M) − thickness(narrowest)` over the sampled `M`.
    pub margin: f64,
}

pub fn lemma_trial(k: &Hemisphere, p: &SpherePoint, q: &SpherePoint, alternatives: usize) -> Result<LemmaOutcome> {
    let lune = narrowest_lune_through(k, p, q)?;
    let t = lune.thickness();
    let construction_error = (t - geodesic_distance(p, q)).abs();
    let mut margin = f64::INFINITY;
    for m in hemispheres_through(q, alternatives) {
        if let Ok(l) = crate::sphere::Lune::new(*k, m) {
            margin = margin.min(l.thickness() - t);
        }
    }
    Ok(LemmaOutcome { construction_error, margin })
}

/// Convex hull of 5 to 20 random points in a random cap.
pub fn random_hull<R: Rng>(rng: &mut R) -> Body {
    loop {
        let c = random_point(rng);
        let radius = rng.gen_range(0.2..1.2);
        let count = rng.gen_range(5..=20);
        let pts: Vec<SpherePoint> = (0..count).map(|_| random_point_near(rng, &c, radius)).collect();
        if let Ok(h) = convex_hull(&pts) {
            return h.into();
        }
    }
}

/// The lens `B(p, δ) ∩ B(q, δ)` with `|pq| = δ`.
pub fn lens(p: &SpherePoint, angle: f64, delta: f64) -> Result<Body> {
    let (e1, e2) = p.tangent_frame();
    let dir = [0, 1, 2].map(|i| angle.cos() * e1[i] + angle.sin() * e2[i]);
    ball_intersection(&[*p, p.walk(dir, delta)], delta)
}

pub fn random_lens<R: Rng>(rng: &mut R) -> Result<Body> {
    let p = random_point(rng);
    let delta = rng.gen_range(0.2..1.4);
    lens(&p, rng.gen_range(0.0..TAU), delta)
}

/// Intersection of δ-balls about 2 to 6 points within `δ/2` of a random center.
pub fn random_ball_intersection<R: Rng>(rng: &mut R) -> Result<Body> {
    let c = random_point(rng);
    let delta = rng.gen_range(0.2..1.4);
    let count = rng.gen_range(2..=6);
    let pts: Vec<SpherePoint> = (0..count).map(|_| random_point_near(rng, &c, delta / 2.0)).collect();
    ball_intersection(&pts, delta)
}

/// Random Reuleaux polygon with odd `n ∈ [3, 11]` and `δ ∈ [0.2, 1.4]` in a random pose.
pub fn random_reuleaux_body<R: Rng>(rng: &mut R) -> Result<(ReuleauxSpec, Body)> {
    let n = 2 * rng.gen_range(1..=5) + 1;
    let delta = rng.gen_range(0.2..1.4);
    let pose = crate::reuleaux::Pose::with_pole(&random_point(rng));
    let spec = ReuleauxSpec::new(n, delta).with_seed(rng.gen()).with_pose(pose);
    let body = random_reuleaux(&spec)?;
    Ok((spec, body))
}

/// Body for the randomized search: mostly random Reuleaux polygons, then ball
/// intersections and lenses.
pub fn random_search_body<R: Rng>(rng: &mut R) -> Result<Body> {
    match rng.gen_range(0..10) {
        0..=5 => random_reuleaux_body(rng).map(|(_, b)| b),
        6 | 7 => random_ball_intersection(rng),
        _ => random_lens(rng),
    }
}

pub const REGULAR_N: [usize; 4] = [3, 5, 7, 9];
pub const REGULAR_DELTA: [f64; 5] = [0.3, 0.6, 0.9, 1.2, 1.5];
pub const BALL_RADII: [f64; 4] = [0.15, 0.3, 0.45, 0.7];

/// Regular Reuleaux polygons over `REGULAR_N × REGULAR_DELTA`.
pub fn regular_family() -> Vec<(usize, f64, Body)> {
    let mut out = Vec::new();
    for n in REGULAR_N {
        for delta in REGULAR_DELTA {
            let body = regular_reuleaux(&ReuleauxSpec::new(n, delta)).expect("valid regular parameters");
            out.push((n, delta, body));
        }
    }
    out
}

/// Constant-diameter bodies used by the P1 to P3 rows.
pub fn constant_diameter_family<R: Rng>(rng: &mut R, random: usize) -> Result<Vec<Body>> {
    let mut out: Vec<Body> = regular_family().into_iter().map(|(_, _, b)| b).collect();
    for rho in [0.15, 0.3, 0.45, 0.7] {
        out.push(ball(random_point(rng), rho)?);
    }
    for _ in 0..random {
        out.push(random_reuleaux_body(rng)?.1);
    }
    Ok(out)
}

/// Support-to-chord correspondence on a body of constant diameter `δ < π/2`:
/// `count` polar-boundary points, each with a unique touch point and a chord
/// of length `δ` orthogonal to the boundary of the supporting hemisphere.
pub fn check_correspondence(body: &Body, count: usize, tol: f64) -> Result<CheckReport> {
    let corr = Correspondence::new(body)?;
    let delta = corr.diameter();
    let polar = body.polar()?;
    let mut lengths = Vec::with_capacity(count);
    let mut witnesses = Vec::new();
    let mut worst_orth = 0.0f64;
    let mut unique = true;
    for bp in polar.boundary_sample(count) {
        let r = bp.point;
        let touch = body.touch_point(&r)?;
        if let Some(edge) = touch.edge {
            unique = false;
            witnesses.push(Witness::new("non-unique touch", vec![edge.a, edge.b, r], 0.0));
        }
        let chord = corr.chord(&r)?;
        let orth = orthogonality_residual(&chord, &r);
        worst_orth = worst_orth.max(orth);
        if (chord.length - delta).abs() > tol || orth > tol {
            witnesses.push(Witness::new("chord", vec![chord.p, chord.q, r], chord.length));
        }
        lengths.push(chord.length);
    }
    let min = lengths.iter().copied().fold(f64::INFINITY, f64::min);
    let max = lengths.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut report = CheckReport::from_range("correspondence", delta, min, max, tol);
    report.witnesses = witnesses;
    report.verdict = report.verdict && unique && worst_orth <= tol && (max - delta).abs() <= tol;
    Ok(report)
}

/// The Lemma on a body: at sampled boundary points `p` with supporting
/// hemisphere `K`, the chord `pq` orthogonal to `bd(K)` gives a narrowest lune
/// of thickness `|pq|`, and no sampled lune `K ∩ M` with `q ∈ bd(M)` is thinner.
pub fn check_lemma(body: &Body, points: usize, alternatives: usize) -> Result<CheckReport> {
    let mut margins = Vec::new();
    let mut worst_construction = 0.0f64;
    let mut witnesses = Vec::new();
    for bp in body.boundary_sample(points) {
        let (_, cone) = body.classify_boundary_point(&bp)?;
        for k in cone.sample(3) {
            let p = bp.point;
            let Some(u) = p.tangent_toward(&k) else { continue };
            let len = exit_distance(body, &p, u);
            if !(len > 1e-6 && len < FRAC_PI_2 - 1e-9) {
                continue;
            }
            let q = p.walk(u, len);
            let out = lemma_trial(&Hemisphere::new(k), &p, &q, alternatives)?;
            worst_construction = worst_construction.max(out.construction_error);
            if out.margin < -EPS_INCIDENCE {
                witnesses.push(Witness::new("thinner lune", vec![p, q, k], out.margin));
            }
            margins.push(out.margin);
        }
    }
    if margins.is_empty() {
        return Err(Error::PrecondViolation("no boundary chord shorter than π/2 to test".into()));
    }
    let min = margins.iter().copied().fold(f64::INFINITY, f64::min);
    let max = margins.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(CheckReport {
        check: "lemma".into(),
        verdict: min >= -EPS_INCIDENCE && worst_construction <= 1e-12,
        target: 0.0,
        observed_min: min,
        observed_max: max,
        tolerance: EPS_INCIDENCE,
        witnesses,
        profile: Vec::new(),
    })
}

/// Worst `|width_given_support − width_oracle|` and worst excess of the closed
/// form over the oracle, over `directions` supporting centers spread along the polar boundary.
pub fn width_reduction_errors(body: &Body, directions: usize, grid: usize) -> Result<(f64, f64)> {
    let polar = body.polar()?;
    let mut worst = 0.0f64;
    let mut excess = f64::NEG_INFINITY;
    for bp in polar.boundary_sample(directions) {
        let exact = width_given_support(body, &bp.point)?;
        let oracle = width_oracle(body, &bp.point, grid)?;
        worst = worst.max((exact - oracle).abs());
        excess = excess.max(exact - oracle);
    }
    Ok((worst, excess))
}

/// One row of the verification table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub result: String,
    pub verdict: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub tolerance: f64,
    pub samples: usize,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<6} {:<7} {:>6}  detail", "result", "verdict", "cases")?;
        for r in &self.rows {
            let v = if r.verdict { "pass" } else { "FAIL" };
            writeln!(f, "{:<6} {:<7} {:>6}  {}", r.result, v, r.cases, r.detail)?;
        }
        let passed = self.rows.iter().filter(|r| r.verdict).count();
        write!(
            f,
            "{passed}/{} pass (seed {}, tol {:e}, samples {})",
            self.rows.len(),
            self.seed,
            self.tolerance,
            self.samples
        )
    }
}

fn row(result: &str, verdict: bool, cases: usize, detail: String) -> SuiteRow {
    log::info!("{result}: {} ({cases} cases) {detail}", if verdict { "pass" } else { "fail" });
    SuiteRow { result: result.into(), verdict, cases, detail }
}

/// Runs the verification matrix. Deterministic given the config.
pub fn verify(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    let tol = cfg.tol;
    let samples = cfg.samples;
    let mut rows = Vec::new();

    // Lemma: random configurations with 360 alternative lunes each.
    let mut worst_c = 0.0f64;
    let mut worst_m = f64::INFINITY;
    let lemma_cases = 1000;
    for _ in 0..lemma_cases {
        let (k, p, q) = random_lemma_config(&mut rng);
        let out = lemma_trial(&k, &p, &q, 360)?;
        worst_c = worst_c.max(out.construction_error);
        worst_m = worst_m.min(out.margin);
    }
    rows.push(row(
        "Lemma",
        worst_c <= 1e-12 && worst_m >= -1e-9,
        lemma_cases,
        format!("max |thickness − |pq|| {worst_c:.1e}, min margin {worst_m:.1e}"),
    ));

    let cd_bodies = constant_diameter_family(&mut rng, 6)?;

    // P1: constant diameter forces strict convexity. Random hulls are rejected.
    let mut ok = true;
    let mut strict = 0;
    for b in &cd_bodies {
        if b.is_strictly_convex().verdict {
            strict += 1;
        } else {
            ok = false;
        }
    }
    let hulls = 20;
    let mut rejected = 0;
    for _ in 0..hulls {
        let h = random_hull(&mut rng);
        let r = check_constant_diameter_with(&h, tol, samples);
        if !r.verdict && !r.witnesses.is_empty() {
            rejected += 1;
        } else {
            ok = false;
        }
    }
    rows.push(row(
        "P1",
        ok,
        cd_bodies.len() + hulls,
        format!("{strict}/{} strictly convex, {rejected}/{hulls} hulls rejected", cd_bodies.len()),
    ));

    // P2: diametral chords pairwise intersect.
    let mut ok = true;
    let mut chords = 0;
    for b in &cd_bodies {
        let r = check_chord_intersections_with(b, 200)?;
        chords += r.witnesses.len();
        ok &= r.verdict;
    }
    rows.push(row("P2", ok, cd_bodies.len(), format!("200 chords per body, {chords} failing pairs")));

    // P3: each supporting hemisphere determines one diametral chord.
    let mut ok = true;
    let mut worst = 0.0f64;
    for b in &cd_bodies {
        let r = check_correspondence(b, 100, tol)?;
        worst = worst.max((r.observed_max - r.target).abs().max((r.observed_min - r.target).abs()));
        ok &= r.verdict;
    }
    rows.push(row("P3", ok, cd_bodies.len(), format!("100 polar points per body, max |chord − δ| {worst:.1e}")));

    // T1: balls.
    let mut ok = true;
    let mut worst = 0.0f64;
    for rho in BALL_RADII {
        let b = ball(random_point(&mut rng), rho)?;
        let w = check_constant_width_with(&b, tol, samples);
        let d = check_constant_diameter_with(&b, tol, samples);
        let err = (w.target - 2.0 * rho).abs().max((d.target - 2.0 * rho).abs());
        worst = worst.max(err);
        ok &= w.verdict && d.verdict && err <= 1e-9;
    }
    rows.push(row("T1", ok, BALL_RADII.len(), format!("max |w − 2ρ| {worst:.1e}")));

    // T2: Reuleaux polygons, random Reuleaux polygons and lenses.
    let mut ok = true;
    let mut cases = 0;
    let mut disagree = 0;
    let mut worst = 0.0f64;
    for (_, delta, b) in regular_family() {
        let w = check_constant_width_with(&b, tol, samples);
        let d = check_constant_diameter_with(&b, tol, samples);
        worst = worst.max((w.target - delta).abs()).max((d.target - delta).abs());
        ok &= w.verdict && d.verdict && (w.target - delta).abs() <= tol;
        cases += 1;
    }
    for i in 0..30 {
        let b = if i % 3 == 2 { random_lens(&mut rng)? } else { random_search_body(&mut rng)? };
        let w = check_constant_width_with(&b, tol, samples);
        let d = check_constant_diameter_with(&b, tol, samples);
        if w.verdict != d.verdict {
            disagree += 1;
            ok = false;
        }
        cases += 1;
    }
    // Closed-form width against the brute-force oracle.
    let mut oracle_gap = 0.0f64;
    let mut excess = f64::NEG_INFINITY;
    for i in 0..8 {
        let b = if i < 5 { random_hull(&mut rng) } else { random_reuleaux_body(&mut rng)?.1 };
        let (gap, ex) = width_reduction_errors(&b, 10, cfg.grid)?;
        oracle_gap = oracle_gap.max(gap);
        excess = excess.max(ex);
        cases += 1;
    }
    ok &= oracle_gap <= 2e-3 && excess <= 1e-9;
    rows.push(row(
        "T2",
        ok,
        cases,
        format!(
            "{disagree} disagreements, max |target − δ| {worst:.1e} on regular polygons, \
             width oracle gap {oracle_gap:.1e}"
        ),
    ));

    Ok(SuiteReport { seed: cfg.seed, tolerance: tol, samples, rows })
}

/// One line of the search log.
#[derive(Debug, Clone, Serialize)]
pub struct SearchEntry {
    pub body: Body,
    pub diameter_report: CheckReport,
    pub width_report: CheckReport,
    pub agree: bool,
}

/// Generates `count` random bodies and runs both checkers on each.
pub fn search(count: usize, cfg: &SuiteConfig) -> Result<Vec<SearchEntry>> {
    cfg.validate()?;
    if count == 0 {
        return Err(Error::PrecondViolation("count must be at least 1".into()));
    }
    let mut rng = cfg.rng();
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let body = random_search_body(&mut rng)?;
        let d = check_constant_diameter_with(&body, cfg.tol, cfg.samples);
        let w = check_constant_width_with(&body, cfg.tol, cfg.samples);
        let agree = d.verdict == w.verdict;
        if !agree {
            log::warn!("body {i}: diameter verdict {} but width verdict {}", d.verdict, w.verdict);
        }
        log::debug!("body {i}: {} pieces, agree {agree}", body.pieces().len());
        out.push(SearchEntry { body, diameter_report: d, width_report: w, agree });
    }
    Ok(out)
}

/// The search log as JSON lines.
pub fn search_jsonl(entries: &[SearchEntry]) -> String {
    let mut s = String::new();
    for e in entries {
        s.push_str(&serde_json::to_string(e).expect("search entries serialize"));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_trials_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let (k, p, q) = random_lemma_config(&mut rng);
            let out = lemma_trial(&k, &p, &q, 360).unwrap();
            assert!(out.construction_error <= 1e-12);
            assert!(out.margin >= -1e-9);
        }
    }

    #[test]
    fn lemma_check_on_reuleaux() {
        let b = regular_reuleaux(&ReuleauxSpec::new(3, 1.0)).unwrap();
        let r = check_lemma(&b, 30, 90).unwrap();
        assert!(r.verdict, "{r:?}");
    }

    #[test]
    fn correspondence_on_ball_and_reuleaux() {
        let b = ball(SpherePoint::new(0., 1., 1.).unwrap(), 0.4).unwrap();
        assert!(check_correspondence(&b, 50, 1e-6).unwrap().verdict);
        let r = regular_reuleaux(&ReuleauxSpec::new(5, 1.2)).unwrap();
        assert!(check_correspondence(&r, 50, 1e-6).unwrap().verdict);
    }

    #[test]
    fn random_bodies_are_reproducible() {
        let a = random_search_body(&mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = random_search_body(&mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tolerance_floor() {
        let cfg = SuiteConfig { tol: 1e-12, ..SuiteConfig::default() };
        let err = verify(&cfg).unwrap_err().to_string();
        assert!(err.contains("discretization floor"), "{err}");
    }

    #[test]
    fn random_hulls_are_not_constant_diameter() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let h = random_hull(&mut rng);
            assert!(!check_constant_diameter_with(&h, 1e-6, 512).verdict);
        }
    }

    #[test]
    fn regular_family_size() {
        assert_eq!(regular_family().len(), 20);
    }
}
