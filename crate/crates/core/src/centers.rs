//! Classical triangle centers and circle constructions: orthocenter,
//! incenter, circumcircle, circumcircle arc midpoints, acuteness, arc
//! measures.
//!
//! Every operation validates the triangle first and reports
//! [`DegenerateTriangle`] when the twice-signed area falls below the
//! degeneracy floor times the squared local scale.

use core::fmt;

use crate::geom::{
    dot, line_circle_intersections, line_through, line_with_normal, midpoint, vector_between,
    Circle, Point, DEGENERACY_FLOOR,
};
use crate::num;

/// The triangle is collinear (or collapsed) below the degeneracy floor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegenerateTriangle;

impl fmt::Display for DegenerateTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "triangle is degenerate (collinear below the floor)")
    }
}

impl core::error::Error for DegenerateTriangle {}

/// Vertex selector; `A` is the first vertex. "Opposite" follows the usual
/// convention: the arc midpoint opposite `A` halves the arc `BC` that does
/// not contain `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vertex {
    A = 0,
    B = 1,
    C = 2,
}

/// A triangle given by its three vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub const fn new(a: Point, b: Point, c: Point) -> Self {
        Triangle { a, b, c }
    }

    pub fn vertices(self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    pub fn vertex(self, v: Vertex) -> Point {
        match v {
            Vertex::A => self.a,
            Vertex::B => self.b,
            Vertex::C => self.c,
        }
    }

    /// Twice the signed area (cross product of two edge vectors).
    pub fn double_signed_area(self) -> f64 {
        vector_between(self.a, self.b).cross(vector_between(self.a, self.c))
    }

    /// Checks the non-collinearity invariant: |2·area| must exceed the
    /// degeneracy floor times the squared local scale of the edge vectors.
    pub fn validate(self) -> Result<(), DegenerateTriangle> {
        let ab = vector_between(self.a, self.b).norm();
        let ac = vector_between(self.a, self.c).norm();
        let mut scale = 1.0;
        if ab > scale {
            scale = ab;
        }
        if ac > scale {
            scale = ac;
        }
        if num::abs(self.double_signed_area()) <= DEGENERACY_FLOOR * scale * scale {
            Err(DegenerateTriangle)
        } else {
            Ok(())
        }
    }
}

/// Circumcenter, assuming the triangle has been validated.
///
/// Works in coordinates relative to `c` so the translation part of the frame
/// cancels before any products are formed.
fn circumcenter_unchecked(t: &Triangle) -> Point {
    let ax = t.a.x - t.c.x;
    let ay = t.a.y - t.c.y;
    let bx = t.b.x - t.c.x;
    let by = t.b.y - t.c.y;
    let d = 2.0 * (ax * by - ay * bx);
    let a_sq = ax * ax + ay * ay;
    let b_sq = bx * bx + by * by;
    Point::new(
        (a_sq * by - b_sq * ay) / d + t.c.x,
        (b_sq * ax - a_sq * bx) / d + t.c.y,
    )
}

/// Circle through the three vertices.
pub fn circumcircle(t: &Triangle) -> Result<Circle, DegenerateTriangle> {
    t.validate()?;
    let center = circumcenter_unchecked(t);
    Ok(Circle::new(center, vector_between(center, t.a).norm()))
}

/// Intersection point of the three altitudes, computed as
/// `A + B + C - 2O` with `O` the circumcenter. The altitude-intersection
/// route is kept as an independent test oracle.
pub fn orthocenter(t: &Triangle) -> Result<Point, DegenerateTriangle> {
    t.validate()?;
    let o = circumcenter_unchecked(t);
    Ok(Point::new(
        t.a.x + t.b.x + t.c.x - 2.0 * o.x,
        t.a.y + t.b.y + t.c.y - 2.0 * o.y,
    ))
}

/// Intersection of the internal bisectors: the side-length weighted mean
/// `(a·A + b·B + c·C) / (a + b + c)`.
pub fn incenter(t: &Triangle) -> Result<Point, DegenerateTriangle> {
    t.validate()?;
    let wa = vector_between(t.b, t.c).norm();
    let wb = vector_between(t.c, t.a).norm();
    let wc = vector_between(t.a, t.b).norm();
    let s = wa + wb + wc;
    Ok(Point::new(
        (wa * t.a.x + wb * t.b.x + wc * t.c.x) / s,
        (wa * t.a.y + wb * t.b.y + wc * t.c.y) / s,
    ))
}

/// Midpoint of the circumcircle arc cut off by the side opposite the given
/// vertex, on the branch *not* containing that vertex.
///
/// Computed as the perpendicular bisector of the opposite side intersected
/// with the circumcircle, keeping the intersection on the far side of the
/// side line from the vertex. (The equivalent bisector route — second
/// intersection of the internal bisector with the circumcircle — serves as a
/// test oracle.)
pub fn arc_midpoint(t: &Triangle, opposite: Vertex) -> Result<Point, DegenerateTriangle> {
    let circle = circumcircle(t)?;
    let (v, p, q) = match opposite {
        Vertex::A => (t.a, t.b, t.c),
        Vertex::B => (t.b, t.c, t.a),
        Vertex::C => (t.c, t.a, t.b),
    };
    let side = line_through(p, q).map_err(|_| DegenerateTriangle)?;
    let bisector =
        line_with_normal(midpoint(p, q), vector_between(p, q)).map_err(|_| DegenerateTriangle)?;
    let side_of_vertex = side.signed_distance(v);
    line_circle_intersections(bisector, circle)
        .into_iter()
        .find(|cand| side.signed_distance(*cand) * side_of_vertex < 0.0)
        .ok_or(DegenerateTriangle)
}

/// True iff all three angles are strictly acute (every pair of edge vectors
/// at each vertex has positive dot product).
pub fn is_acute(t: &Triangle) -> Result<bool, DegenerateTriangle> {
    t.validate()?;
    let at_a = dot(vector_between(t.a, t.b), vector_between(t.a, t.c));
    let at_b = dot(vector_between(t.b, t.a), vector_between(t.b, t.c));
    let at_c = dot(vector_between(t.c, t.a), vector_between(t.c, t.b));
    Ok(at_a > 0.0 && at_b > 0.0 && at_c > 0.0)
}

fn mod_tau(x: f64) -> f64 {
    let r = x % core::f64::consts::TAU;
    if r < 0.0 {
        r + core::f64::consts::TAU
    } else {
        r
    }
}

/// Half-arc measures subtended at the three arc midpoints, i.e. half the
/// central angle of each arc cut off by a side on the branch away from the
/// opposite vertex. These equal the triangle's angles and sum to π.
pub fn arc_measures(t: &Triangle) -> Result<[f64; 3], DegenerateTriangle> {
    t.validate()?;
    let o = circumcenter_unchecked(t);
    let theta = |p: Point| num::atan2(p.y - o.y, p.x - o.x);
    let (ta, tb, tc) = (theta(t.a), theta(t.b), theta(t.c));
    // Central angle of the arc from `from` to `to` that avoids `other`.
    let arc_avoiding = |from: f64, to: f64, other: f64| {
        let span = mod_tau(to - from);
        if mod_tau(other - from) < span {
            core::f64::consts::TAU - span
        } else {
            span
        }
    };
    Ok([
        arc_avoiding(tb, tc, ta) / 2.0,
        arc_avoiding(tc, ta, tb) / 2.0,
        arc_avoiding(ta, tb, tc) / 2.0,
    ])
}
