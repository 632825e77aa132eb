//! Property suites for the geometry kernel and the triangle centers, each
//! over at least 10,000 random cases. The center computations are checked
//! against independent construction routes (altitude intersections for the
//! orthocenter, the bisector chord for arc midpoints) rather than against
//! themselves.

mod common;

use common::{assert_point_close, TestRng};
use geocheck_core::centers::{arc_midpoint, circumcircle, incenter, orthocenter, Triangle, Vertex};
use geocheck_core::engine::{sample_triangle, SamplerConfig, Similarity};
use geocheck_core::geom::{
    angle_at, dot, foot, intersect_lines, line_circle_intersections, line_through,
    line_with_normal, reflect, vector_between, Line, Point, Vector,
};
use proptest::prelude::*;

const CASES: u64 = 10_000;

fn random_line(rng: &mut TestRng) -> Line {
    loop {
        let p = rng.point(100.0);
        let q = rng.point(100.0);
        if let Ok(l) = line_through(p, q) {
            return l;
        }
    }
}

fn sampled(seed: u64) -> impl Iterator<Item = Triangle> {
    let cfg = SamplerConfig {
        seed,
        trials: CASES,
        ..SamplerConfig::default()
    };
    (0..CASES).map(move |i| sample_triangle(&cfg, i).expect("default domain is feasible"))
}

#[test]
fn reflection_is_an_involution() {
    let mut rng = TestRng::new(0x5eed_0001);
    for _ in 0..CASES {
        let p = rng.point(100.0);
        let l = random_line(&mut rng);
        let back = reflect(reflect(p, l), l);
        assert!(
            (back - p).norm() <= 1e-12 * (1.0 + p.norm()),
            "p={:?} l={:?}",
            p,
            l
        );
    }
}

#[test]
fn reflection_is_an_isometry() {
    let mut rng = TestRng::new(0x5eed_0002);
    for _ in 0..CASES {
        let p = rng.point(100.0);
        let q = rng.point(100.0);
        let l = random_line(&mut rng);
        let before = (p - q).norm();
        let after = (reflect(p, l) - reflect(q, l)).norm();
        assert!((after - before).abs() <= 1e-12 * (1.0 + before));
    }
}

#[test]
fn line_through_is_canonical() {
    let mut rng = TestRng::new(0x5eed_0003);
    for _ in 0..CASES {
        let p = rng.point(100.0);
        let q = rng.point(100.0);
        let (Ok(l1), Ok(l2)) = (line_through(p, q), line_through(q, p)) else {
            continue;
        };
        assert!((l1.normal().dx - l2.normal().dx).abs() <= 1e-12);
        assert!((l1.normal().dy - l2.normal().dy).abs() <= 1e-12);
        assert!((l1.offset() - l2.offset()).abs() <= 1e-12 * (1.0 + l1.offset().abs()));
        assert!((l1.normal().norm() - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn foot_minimizes_distance_to_sampled_line_points() {
    let mut rng = TestRng::new(0x5eed_0004);
    let p = rng.point(50.0);
    let l = random_line(&mut rng);
    let f = foot(p, l);
    let best = (p - f).norm();
    let anchor = foot(Point::new(0.0, 0.0), l);
    let dir = l.direction();
    for k in 0..1000 {
        let t = -500.0 + k as f64;
        let on_line = anchor + dir * t;
        assert!((p - on_line).norm() + 1e-9 >= best);
    }
}

#[test]
fn intersection_lies_on_both_lines() {
    let mut rng = TestRng::new(0x5eed_0005);
    let mut checked = 0u64;
    while checked < CASES {
        let l1 = random_line(&mut rng);
        let l2 = random_line(&mut rng);
        if let Ok(p) = intersect_lines(l1, l2) {
            for l in [l1, l2] {
                assert!(l.signed_distance(p).abs() <= 1e-12 * (1.0 + p.norm()));
            }
            checked += 1;
        }
    }
}

#[test]
fn angle_is_symmetric_in_ray_arguments() {
    let mut rng = TestRng::new(0x5eed_0006);
    for _ in 0..CASES {
        let o = rng.point(100.0);
        let p = rng.point(100.0);
        let q = rng.point(100.0);
        match (angle_at(o, p, q), angle_at(o, q, p)) {
            (Ok(a), Ok(b)) => assert!((a - b).abs() <= 1e-12),
            (a, b) => assert_eq!(a, b),
        }
    }
}

/// Independent orthocenter route: intersect two altitude lines.
fn orthocenter_by_altitudes(t: &Triangle) -> Point {
    let alt_a = line_with_normal(t.a, vector_between(t.b, t.c)).unwrap();
    let alt_b = line_with_normal(t.b, vector_between(t.a, t.c)).unwrap();
    intersect_lines(alt_a, alt_b).unwrap()
}

#[test]
fn orthocenter_matches_altitude_intersection_oracle() {
    for t in sampled(0x0c01) {
        let r = circumcircle(&t).unwrap().radius;
        let h = orthocenter(&t).unwrap();
        assert_point_close(
            h,
            orthocenter_by_altitudes(&t),
            1e-10 * r,
            "orthocenter routes",
        );

        // Defining property: HA ⊥ BC and cyclic permutations.
        let checks = [
            (h - t.a, t.c - t.b),
            (h - t.b, t.a - t.c),
            (h - t.c, t.b - t.a),
        ];
        for (u, v) in checks {
            assert!(dot(u, v).abs() <= 1e-10 * u.norm() * v.norm());
        }
    }
}

#[test]
fn incenter_is_equidistant_from_the_sides() {
    for t in sampled(0x0c02) {
        let r = circumcircle(&t).unwrap().radius;
        let i = incenter(&t).unwrap();
        let d = [
            line_through(t.b, t.c).unwrap().signed_distance(i).abs(),
            line_through(t.c, t.a).unwrap().signed_distance(i).abs(),
            line_through(t.a, t.b).unwrap().signed_distance(i).abs(),
        ];
        assert!((d[0] - d[1]).abs() <= 1e-10 * r);
        assert!((d[1] - d[2]).abs() <= 1e-10 * r);
    }
}

/// Independent arc-midpoint route: second intersection of the internal
/// bisector (through the incenter) with the circumcircle.
fn arc_midpoint_by_bisector(t: &Triangle, opposite: Vertex) -> Point {
    let v = t.vertex(opposite);
    let i = incenter(t).unwrap();
    let bisector = line_through(v, i).unwrap();
    let circle = circumcircle(t).unwrap();
    line_circle_intersections(bisector, circle)
        .into_iter()
        .max_by(|p, q| (*p - v).norm().partial_cmp(&(*q - v).norm()).unwrap())
        .unwrap()
}

#[test]
fn arc_midpoint_routes_agree() {
    for t in sampled(0x0c03) {
        let r = circumcircle(&t).unwrap().radius;
        for v in [Vertex::A, Vertex::B, Vertex::C] {
            let direct = arc_midpoint(&t, v).unwrap();
            let via_bisector = arc_midpoint_by_bisector(&t, v);
            assert_point_close(direct, via_bisector, 1e-10 * r, "arc midpoint routes");
        }
    }
}

#[test]
fn arc_midpoint_is_equidistant_from_side_endpoints() {
    for t in sampled(0x0c04) {
        let r = circumcircle(&t).unwrap().radius;
        let m = arc_midpoint(&t, Vertex::A).unwrap();
        assert!(((m - t.b).norm() - (m - t.c).norm()).abs() <= 1e-10 * r);
    }
}

#[test]
fn centers_are_similarity_equivariant() {
    let mut rng = TestRng::new(0x5eed_0007);
    let cfg = SamplerConfig {
        seed: 0x0c05,
        trials: CASES,
        transform: false,
        ..SamplerConfig::default()
    };
    for i in 0..CASES {
        let t = sample_triangle(&cfg, i).unwrap();
        let sim = Similarity::new(
            rng.in_range(0.5, 10.0),
            rng.in_range(0.0, core::f64::consts::TAU),
            Vector::new(rng.in_range(-100.0, 100.0), rng.in_range(-100.0, 100.0)),
        );
        let mapped = sim.apply_triangle(&t);
        let scale = circumcircle(&mapped).unwrap().radius;

        assert_point_close(
            orthocenter(&mapped).unwrap(),
            sim.apply(orthocenter(&t).unwrap()),
            1e-9 * scale,
            "orthocenter equivariance",
        );
        assert_point_close(
            incenter(&mapped).unwrap(),
            sim.apply(incenter(&t).unwrap()),
            1e-9 * scale,
            "incenter equivariance",
        );
        let c1 = circumcircle(&mapped).unwrap();
        let c0 = circumcircle(&t).unwrap();
        assert_point_close(
            c1.center,
            sim.apply(c0.center),
            1e-9 * scale,
            "circumcenter equivariance",
        );
        for v in [Vertex::A, Vertex::B, Vertex::C] {
            assert_point_close(
                arc_midpoint(&mapped, v).unwrap(),
                sim.apply(arc_midpoint(&t, v).unwrap()),
                1e-9 * scale,
                "arc midpoint equivariance",
            );
        }
    }
}

#[test]
fn arc_measures_sum_to_pi_and_match_the_angles() {
    let cfg = SamplerConfig {
        seed: 0x0c07,
        trials: 1_000,
        ..SamplerConfig::default()
    };
    for i in 0..cfg.trials {
        let t = sample_triangle(&cfg, i).unwrap();
        let [alpha, beta, gamma] = geocheck_core::centers::arc_measures(&t).unwrap();
        assert!((alpha + beta + gamma - core::f64::consts::PI).abs() <= 1e-12);
        assert!((alpha - angle_at(t.a, t.b, t.c).unwrap()).abs() <= 1e-12);
        assert!((beta - angle_at(t.b, t.a, t.c).unwrap()).abs() <= 1e-12);
        assert!((gamma - angle_at(t.c, t.a, t.b).unwrap()).abs() <= 1e-12);
    }
}

#[test]
fn circumcircle_holds_all_three_vertices() {
    for t in sampled(0x0c06) {
        let c = circumcircle(&t).unwrap();
        for v in t.vertices() {
            assert!(((v - c.center).norm() - c.radius).abs() <= 1e-12 * c.radius);
        }
    }
}

proptest! {
    /// Reflection twice is the identity for arbitrary finite inputs, not
    /// just the sampler's domain.
    #[test]
    fn prop_reflection_involution(
        px in -1e3f64..1e3, py in -1e3f64..1e3,
        ax in -1e3f64..1e3, ay in -1e3f64..1e3,
        bx in -1e3f64..1e3, by in -1e3f64..1e3,
    ) {
        let p = Point::new(px, py);
        if let Ok(l) = line_through(Point::new(ax, ay), Point::new(bx, by)) {
            let back = reflect(reflect(p, l), l);
            prop_assert!((back - p).norm() <= 1e-12 * (1.0 + p.norm()));
        }
    }

    /// The foot is on the line and the drop is parallel to the normal.
    #[test]
    fn prop_foot_is_projection(
        px in -1e3f64..1e3, py in -1e3f64..1e3,
        ax in -1e3f64..1e3, ay in -1e3f64..1e3,
        bx in -1e3f64..1e3, by in -1e3f64..1e3,
    ) {
        let p = Point::new(px, py);
        if let Ok(l) = line_through(Point::new(ax, ay), Point::new(bx, by)) {
            let f = foot(p, l);
            prop_assert!(l.signed_distance(f).abs() <= 1e-9 * (1.0 + f.norm()));
            let drop = p - f;
            prop_assert!(drop.cross(l.normal()).abs() <= 1e-9 * (1.0 + drop.norm()));
        }
    }

    /// Intersections returned for a line and circle satisfy both
    /// memberships.
    #[test]
    fn prop_line_circle_members(
        ax in -1e2f64..1e2, ay in -1e2f64..1e2,
        bx in -1e2f64..1e2, by in -1e2f64..1e2,
        cx in -1e2f64..1e2, cy in -1e2f64..1e2,
        r in 1e-2f64..1e2,
    ) {
        if let Ok(l) = line_through(Point::new(ax, ay), Point::new(bx, by)) {
            let circle = geocheck_core::geom::Circle::new(Point::new(cx, cy), r);
            for p in line_circle_intersections(l, circle) {
                prop_assert!(l.signed_distance(p).abs() <= 1e-9 * (1.0 + p.norm()));
                prop_assert!(((p - circle.center).norm() - r).abs() <= 1e-9 * r.max(1.0));
            }
        }
    }
}
