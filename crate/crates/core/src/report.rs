//! Checker verdicts and the witness data that backs them.

use serde::{Deserialize, Serialize};

use crate::sphere::SpherePoint;

/// A piece of evidence attached to a verdict: where an extreme was attained,
/// an offending edge, a non-intersecting pair of chords.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    pub points: Vec<SpherePoint>,
    pub value: f64,
}

impl Witness {
    pub fn new(kind: impl Into<String>, points: Vec<SpherePoint>, value: f64) -> Self {
        Self { kind: kind.into(), points, value }
    }
}

/// One entry of a width or farthest-distance profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    pub point: SpherePoint,
    pub value: f64,
}

/// Verdict of a checker.
///
/// For the constant-width and constant-diameter checkers the verdict holds iff
/// `observed_max − observed_min ≤ tolerance` and `|observed_min − target| ≤ tolerance`.
/// The profile is kept for CSV export and is not serialized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub verdict: bool,
    pub target: f64,
    pub observed_min: f64,
    pub observed_max: f64,
    pub tolerance: f64,
    pub witnesses: Vec<Witness>,
    #[serde(skip)]
    pub profile: Vec<ProfileSample>,
}

impl CheckReport {
    /// Builds a range report whose verdict follows the range rule above.
    pub fn from_range(check: &str, target: f64, observed_min: f64, observed_max: f64, tolerance: f64) -> Self {
        let verdict = observed_max - observed_min <= tolerance && (observed_min - target).abs() <= tolerance;
        Self {
            check: check.to_string(),
            verdict,
            target,
            observed_min,
            observed_max,
            tolerance,
            witnesses: Vec::new(),
            profile: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
