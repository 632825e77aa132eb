//! Engine-level invariants: residual scale invariance, determinism of
//! whole runs, count conservation.

mod common;

use common::TestRng;
use geocheck_core::centers::Triangle;
use geocheck_core::dsl::parse;
use geocheck_core::engine::{
    evaluate, run_fixed, run_trials, sample_triangle, AssertionOutcome, SamplerConfig, Similarity,
    ToleranceContext,
};
use geocheck_core::geom::{Point, Vector};

fn t_star() -> Triangle {
    Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(4.0, 0.0),
        Point::new(1.0, 3.0),
    )
}

/// Residuals are dimensionless: a similarity applied to the base triangle
/// moves every residual by less than 1e-6 in relative terms.
#[test]
fn residuals_are_scale_invariant() {
    let script = parse(
        "triangle A B C\n\
         let Ma = arc_midpoint(A, B, C)\n\
         let Fa = reflect(Ma, line(B, C))\n\
         let Fb = reflect(arc_midpoint(B, C, A), line(C, A))\n\
         let Fc = reflect(arc_midpoint(C, A, B), line(A, B))\n\
         let Hf = orthocenter(Fa, Fb, Fc)\n\
         assert coincides(Hf, circumcenter(A, B, C)) : \"fails with a stable residual\"\n\
         assert perpendicular(vec(A, Ma), vec(B, C)) : \"fails with a stable residual too\"",
    )
    .unwrap();

    let residuals = |base: &Triangle| -> Vec<f64> {
        let scale = geocheck_core::centers::circumcircle(base).unwrap().radius;
        let tol = ToleranceContext::new(1e-9, scale);
        evaluate(&script, base, &tol)
            .unwrap()
            .into_iter()
            .map(|o| match o {
                AssertionOutcome::Pass { residual } | AssertionOutcome::Fail { residual } => {
                    residual
                }
                AssertionOutcome::Skipped => panic!("unexpected skip"),
            })
            .collect()
    };

    let base = residuals(&t_star());
    let mut rng = TestRng::new(0x5ca1e);
    for _ in 0..200 {
        let sim = Similarity::new(
            rng.in_range(0.5, 10.0),
            rng.in_range(0.0, core::f64::consts::TAU),
            Vector::new(rng.in_range(-100.0, 100.0), rng.in_range(-100.0, 100.0)),
        );
        let moved = residuals(&sim.apply_triangle(&t_star()));
        for (r0, r1) in base.iter().zip(&moved) {
            let denom = r0.abs().max(r1.abs()).max(1e-12);
            assert!(
                (r0 - r1).abs() / denom <= 1e-6,
                "residual moved from {:e} to {:e}",
                r0,
                r1
            );
        }
    }
}

#[test]
fn equal_configs_give_equal_reports() {
    let script = parse(
        "triangle A B C\nassert coincides(orthocenter(A,B,C), incenter(A,B,C)) : \"control\"",
    )
    .unwrap();
    let cfg = SamplerConfig {
        trials: 400,
        seed: 99,
        ..SamplerConfig::default()
    };
    assert_eq!(
        run_trials(&script, &cfg, 1e-9).unwrap(),
        run_trials(&script, &cfg, 1e-9).unwrap()
    );
}

#[test]
fn counts_conserve_across_configs() {
    let script = parse(
        "triangle A B C\n\
         let d = double_reflection_like(A)\n",
    );
    // Misuse of the grammar is a parse error, not an engine concern.
    assert!(script.is_err());

    let script = parse(
        "triangle A B C\nlet Hx = orthocenter(reflect(A, line(B, C)), B, C)\nassert coincides(Hx, Hx)",
    )
    .unwrap();
    for (seed, trials) in [(1u64, 64u64), (7, 333), (42, 1000)] {
        let cfg = SamplerConfig {
            seed,
            trials,
            ..SamplerConfig::default()
        };
        let report = run_trials(&script, &cfg, 1e-9).unwrap();
        assert_eq!(report.trials, trials);
        for a in &report.assertions {
            assert_eq!(a.passes + a.failures + a.degenerate_skips, trials);
        }
    }
}

#[test]
fn fixed_run_matches_direct_evaluation() {
    let script = parse(
        "triangle A B C\nlet I = incenter(A, B, C)\nassert coincides(orthocenter(arc_midpoint(A,B,C), arc_midpoint(B,C,A), arc_midpoint(C,A,B)), I)",
    )
    .unwrap();
    let report = run_fixed(&script, &t_star(), 1e-9).unwrap();
    assert_eq!(report.trials, 1);
    assert_eq!(report.assertions[0].passes, 1);
    assert!(report.assertions[0].max_residual().unwrap() < 1e-12);
}

#[test]
fn sampling_is_independent_of_trial_count() {
    // Trial i is a pure function of (seed, i): prefixes of longer runs are
    // literally the shorter runs.
    let a = SamplerConfig {
        trials: 10,
        ..SamplerConfig::default()
    };
    let b = SamplerConfig {
        trials: 10_000,
        ..SamplerConfig::default()
    };
    for i in 0..10 {
        assert_eq!(
            sample_triangle(&a, i).unwrap(),
            sample_triangle(&b, i).unwrap()
        );
    }
}
