//! Shared helpers for the integration test suites: a tiny deterministic
//! generator (independent of the engine's sampler internals) and closeness
//! asserts.
#![allow(dead_code)] // not every suite uses every helper

use geocheck_core::geom::Point;

pub struct TestRng {
    state: u64,
}

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    pub fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn point(&mut self, extent: f64) -> Point {
        Point::new(
            self.in_range(-extent, extent),
            self.in_range(-extent, extent),
        )
    }
}

pub fn assert_point_close(actual: Point, expected: Point, tol: f64, what: &str) {
    let d = (actual - expected).norm();
    assert!(
        d <= tol,
        "{}: |{:?} - {:?}| = {:e} > {:e}",
        what,
        actual,
        expected,
        d,
        tol
    );
}
