//! Tolerance constants shared by every module.
//!
//! All checkers quote these values in their reports, so changing one here
//! changes the resolution of every verdict downstream.

/// Normalization slack for unit vectors and exact identities.
pub const EPS_UNIT: f64 = 1e-12;

/// Point-on-boundary and incidence tests.
pub const EPS_INCIDENCE: f64 = 1e-9;

/// Default hemisphere containment slack: `p ∈ H(c)` iff `p·c ≥ -EPS_CONTAIN`.
pub const EPS_CONTAIN: f64 = 1e-12;

/// Default target-match tolerance of the constant-width / constant-diameter checkers.
pub const DEFAULT_CHECK_TOL: f64 = 1e-6;

/// Default number of boundary samples in checker sweeps.
pub const DEFAULT_SAMPLES: usize = 2048;

/// Default Fibonacci grid size for the brute-force width oracle.
pub const DEFAULT_GRID: usize = 10_000;

/// Convergence target of the local refinement used by `diameter` and `thickness`.
pub const REFINE_TOL: f64 = 1e-10;

/// Chords within this distance of the diameter are reported as diametral.
pub const CHORD_TOL: f64 = 1e-8;

/// Endpoints closer than this are merged when deduplicating chords.
pub const CHORD_MERGE: f64 = 1e-6;

/// Smallest checker tolerance that is meaningful given `REFINE_TOL`.
pub const DISCRETIZATION_FLOOR: f64 = REFINE_TOL;
