//! Deterministic triangle sampling.
//!
//! Trial `i` of a run is a pure function of `(seed, i)`: a stateless
//! splitmix-style derivation seeds a tiny per-trial generator, so results do
//! not depend on evaluation order or worker count. Vertices are drawn on the
//! unit circle with all pairwise arcs inside `(min_arc, π − min_arc)`, which
//! guarantees acuteness with a conditioning margin; an optional random
//! similarity then moves the triangle off the unit frame.

use core::f64::consts::{PI, TAU};
use core::fmt;

use crate::centers::Triangle;
use crate::geom::{Point, Vector};
use crate::num;

/// Sampling domain configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub trials: u64,
    /// Minimum pairwise arc separation in radians. Bounds the condition
    /// numbers so ε = 1e-9 keeps several orders of magnitude of headroom.
    pub min_arc: f64,
    /// Apply a random similarity (scale 0.5–10, any rotation, translation in
    /// [-100, 100]²).
    pub transform: bool,
    /// Drop the upper arc bound, admitting obtuse triangles (exploratory).
    pub allow_obtuse: bool,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 42,
            trials: 10_000,
            min_arc: 0.15,
            transform: true,
            allow_obtuse: false,
        }
    }
}

/// The arc constraints rejected 10,000 candidate draws in a row; the
/// configuration is infeasible (e.g. `min_arc ≥ π/3` for the acute domain).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerExhausted {
    pub trial: u64,
}

impl fmt::Display for SamplerExhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sampler exhausted at trial {}: arc constraints rejected 10000 candidates",
            self.trial
        )
    }
}

impl core::error::Error for SamplerExhausted {}

const MAX_REJECTIONS: u32 = 10_000;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// splitmix64 stream keyed by `(seed, trial_index)`.
pub(crate) struct TrialRng {
    state: u64,
}

impl TrialRng {
    pub(crate) fn new(seed: u64, trial_index: u64) -> Self {
        let stream = mix(trial_index.wrapping_add(0x9E37_79B9_7F4A_7C15));
        TrialRng {
            state: mix(seed ^ stream),
        }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix(self.state)
    }

    /// Uniform in [0, 1).
    pub(crate) fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    pub(crate) fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }
}

/// An orientation-preserving similarity: rotate and scale about the origin,
/// then translate.
#[derive(Clone, Copy, Debug)]
pub struct Similarity {
    m00: f64,
    m01: f64,
    m10: f64,
    m11: f64,
    tx: f64,
    ty: f64,
}

impl Similarity {
    pub fn new(scale: f64, angle: f64, translation: Vector) -> Self {
        let c = scale * num::cos(angle);
        let s = scale * num::sin(angle);
        Similarity {
            m00: c,
            m01: -s,
            m10: s,
            m11: c,
            tx: translation.dx,
            ty: translation.dy,
        }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(
            self.m00 * p.x + self.m01 * p.y + self.tx,
            self.m10 * p.x + self.m11 * p.y + self.ty,
        )
    }

    pub fn apply_triangle(&self, t: &Triangle) -> Triangle {
        Triangle::new(self.apply(t.a), self.apply(t.b), self.apply(t.c))
    }
}

fn arcs_admissible(t1: f64, t2: f64, t3: f64, cfg: &SamplerConfig) -> bool {
    let mut s = [t1, t2, t3];
    s.sort_by(|a, b| a.partial_cmp(b).expect("angles are finite"));
    let gaps = [s[1] - s[0], s[2] - s[1], TAU - (s[2] - s[0])];
    if gaps.iter().any(|&g| g <= cfg.min_arc) {
        return false;
    }
    if !cfg.allow_obtuse {
        let hi = PI - cfg.min_arc;
        if gaps.iter().any(|&g| g >= hi) {
            return false;
        }
    }
    true
}

/// Deterministic triangle for trial `trial_index` of the configured run.
pub fn sample_triangle(
    cfg: &SamplerConfig,
    trial_index: u64,
) -> Result<Triangle, SamplerExhausted> {
    let mut rng = TrialRng::new(cfg.seed, trial_index);
    let mut rejections: u32 = 0;
    let angles = loop {
        let t1 = rng.in_range(0.0, TAU);
        let t2 = rng.in_range(0.0, TAU);
        let t3 = rng.in_range(0.0, TAU);
        if arcs_admissible(t1, t2, t3, cfg) {
            break [t1, t2, t3];
        }
        rejections += 1;
        if rejections >= MAX_REJECTIONS {
            return Err(SamplerExhausted { trial: trial_index });
        }
    };
    let vertex = |t: f64| Point::new(num::cos(t), num::sin(t));
    let mut tri = Triangle::new(vertex(angles[0]), vertex(angles[1]), vertex(angles[2]));
    if cfg.transform {
        let scale = rng.in_range(0.5, 10.0);
        let rotation = rng.in_range(0.0, TAU);
        let tx = rng.in_range(-100.0, 100.0);
        let ty = rng.in_range(-100.0, 100.0);
        tri = Similarity::new(scale, rotation, Vector::new(tx, ty)).apply_triangle(&tri);
    }
    Ok(tri)
}
