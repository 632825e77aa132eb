//! Numerically careful primitives on points, vectors, lines, and circles.
//!
//! Everything here is plain `f64` arithmetic. Lines are kept in canonical
//! unit-normal form (`n · P = c` with `n.dx > 0`, or `n.dx == 0 && n.dy > 0`)
//! so that two constructions of the same line compare equal componentwise and
//! reflection / signed distance are single fused expressions.
//!
//! A construction input counts as degenerate when a defining length or a
//! cross product of the operands falls below [`DEGENERACY_FLOOR`] times the
//! local scale (the operand magnitudes, clamped below by 1). That separates
//! genuine degeneracy from roundoff at the sampling domain's conditioning
//! floor.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::num;

/// Relative threshold below which defining lengths / cross products are
/// treated as degenerate.
pub const DEGENERACY_FLOOR: f64 = 1e-9;

/// A position in the Euclidean plane. Coordinates are finite by convention;
/// no construction admits NaN or infinities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Distance from the origin.
    pub fn norm(self) -> f64 {
        num::hypot(self.x, self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// A displacement in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vector {
    pub dx: f64,
    pub dy: f64,
}

impl Vector {
    pub const fn new(dx: f64, dy: f64) -> Self {
        Vector { dx, dy }
    }

    pub fn norm(self) -> f64 {
        num::hypot(self.dx, self.dy)
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Vector) -> f64 {
        self.dx * other.dy - self.dy * other.dx
    }
}

impl core::ops::Sub for Point {
    type Output = Vector;
    fn sub(self, rhs: Point) -> Vector {
        Vector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl core::ops::Add<Vector> for Point {
    type Output = Point;
    fn add(self, rhs: Vector) -> Point {
        Point::new(self.x + rhs.dx, self.y + rhs.dy)
    }
}

impl core::ops::Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        Vector::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl core::ops::Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        Vector::new(self.dx - rhs.dx, self.dy - rhs.dy)
    }
}

impl core::ops::Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, s: f64) -> Vector {
        Vector::new(self.dx * s, self.dy * s)
    }
}

/// An oriented line in unit-normal form: the points `P` with `n · P = c`.
///
/// The representation is canonical (see module docs), so the fields are kept
/// private and only produced by the constructors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    n: Vector,
    c: f64,
}

impl Line {
    /// Unit normal of the line.
    pub fn normal(self) -> Vector {
        self.n
    }

    /// Offset: `n · P = c` for points `P` on the line.
    pub fn offset(self) -> f64 {
        self.c
    }

    /// Unit direction along the line (normal rotated by 90°).
    pub fn direction(self) -> Vector {
        Vector::new(-self.n.dy, self.n.dx)
    }

    /// Signed distance from `p` to the line (positive on the normal side).
    pub fn signed_distance(self, p: Point) -> f64 {
        self.n.dx * p.x + self.n.dy * p.y - self.c
    }

    fn canonicalize(mut n: Vector, mut c: f64) -> Line {
        if n.dx < 0.0 || (n.dx == 0.0 && n.dy < 0.0) {
            n.dx = -n.dx;
            n.dy = -n.dy;
            c = -c;
        }
        // Normalize -0.0 so equal lines are bit-identical.
        if n.dx == 0.0 {
            n.dx = 0.0;
        }
        if n.dy == 0.0 {
            n.dy = 0.0;
        }
        if c == 0.0 {
            c = 0.0;
        }
        Line { n, c }
    }
}

/// A circle with positive radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub const fn new(center: Point, radius: f64) -> Self {
        Circle { center, radius }
    }
}

/// Failures of the kernel operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeomError {
    /// `line_through` was given two points closer than the degeneracy floor.
    CoincidentPoints,
    /// `intersect_lines` was given (anti)parallel lines, including the
    /// coincident case.
    ParallelLines,
    /// `angle_at` was given a zero-length ray.
    DegenerateAngle,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::CoincidentPoints => write!(f, "points coincide below the degeneracy floor"),
            GeomError::ParallelLines => write!(f, "lines are parallel or coincident"),
            GeomError::DegenerateAngle => {
                write!(f, "angle ray is shorter than the degeneracy floor")
            }
        }
    }
}

impl core::error::Error for GeomError {}

/// Displacement from `p` to `q`.
pub fn vector_between(p: Point, q: Point) -> Vector {
    q - p
}

/// Euclidean inner product.
pub fn dot(u: Vector, v: Vector) -> f64 {
    u.dx * v.dx + u.dy * v.dy
}

/// Midpoint of the segment `pq`.
pub fn midpoint(p: Point, q: Point) -> Point {
    Point::new((p.x + q.x) * 0.5, (p.y + q.y) * 0.5)
}

fn local_scale2(a: f64, b: f64) -> f64 {
    let mut s = 1.0;
    if a > s {
        s = a;
    }
    if b > s {
        s = b;
    }
    s
}

/// Canonical line through two distinct points.
pub fn line_through(p: Point, q: Point) -> Result<Line, GeomError> {
    let d = q - p;
    let len = d.norm();
    if len <= DEGENERACY_FLOOR * local_scale2(p.norm(), q.norm()) {
        return Err(GeomError::CoincidentPoints);
    }
    let n = Vector::new(-d.dy / len, d.dx / len);
    // Anchoring the offset at the midpoint makes line_through(p, q) and
    // line_through(q, p) agree bit for bit after canonicalization.
    let m = midpoint(p, q);
    let c = n.dx * m.x + n.dy * m.y;
    Ok(Line::canonicalize(n, c))
}

/// Canonical line through `p` with the given (not necessarily unit) normal.
pub fn line_with_normal(p: Point, normal: Vector) -> Result<Line, GeomError> {
    let len = normal.norm();
    if len <= DEGENERACY_FLOOR * local_scale2(normal.norm(), 0.0) {
        return Err(GeomError::CoincidentPoints);
    }
    let n = Vector::new(normal.dx / len, normal.dy / len);
    let c = n.dx * p.x + n.dy * p.y;
    Ok(Line::canonicalize(n, c))
}

/// Mirror image of `p` across `l`. An involution and an isometry.
pub fn reflect(p: Point, l: Line) -> Point {
    let d = l.signed_distance(p);
    Point::new(p.x - 2.0 * d * l.n.dx, p.y - 2.0 * d * l.n.dy)
}

/// Unique common point of two non-parallel lines.
pub fn intersect_lines(l1: Line, l2: Line) -> Result<Point, GeomError> {
    // Normals are unit vectors, so the local scale of the cross product is 1.
    let det = l1.n.cross(l2.n);
    if num::abs(det) <= DEGENERACY_FLOOR {
        return Err(GeomError::ParallelLines);
    }
    let x = (l1.c * l2.n.dy - l2.c * l1.n.dy) / det;
    let y = (l1.n.dx * l2.c - l2.n.dx * l1.c) / det;
    Ok(Point::new(x, y))
}

/// Orthogonal projection of `p` onto `l`.
pub fn foot(p: Point, l: Line) -> Point {
    let d = l.signed_distance(p);
    Point::new(p.x - d * l.n.dx, p.y - d * l.n.dy)
}

/// Angle at vertex `o` between the rays towards `p` and `q`, in radians.
///
/// The normalized dot product is clamped to `[-1, 1]` before `acos`, so
/// near-collinear inputs cannot produce NaN.
pub fn angle_at(o: Point, p: Point, q: Point) -> Result<f64, GeomError> {
    let u = p - o;
    let v = q - o;
    let nu = u.norm();
    let nv = v.norm();
    if nu <= DEGENERACY_FLOOR * local_scale2(o.norm(), p.norm())
        || nv <= DEGENERACY_FLOOR * local_scale2(o.norm(), q.norm())
    {
        return Err(GeomError::DegenerateAngle);
    }
    let cos = (dot(u, v) / (nu * nv)).clamp(-1.0, 1.0);
    Ok(num::acos(cos))
}

/// Intersections of a line with a circle: 0, 1 (tangency), or 2 points,
/// sorted lexicographically by `(x, y)`.
pub fn line_circle_intersections(l: Line, c: Circle) -> Vec<Point> {
    let d = l.signed_distance(c.center);
    let base = foot(c.center, l);
    let h2 = c.radius * c.radius - d * d;
    if h2 < 0.0 {
        return Vec::new();
    }
    let h = num::sqrt(h2);
    if h == 0.0 {
        return vec![base];
    }
    let t = l.direction();
    let p1 = base + t * (-h);
    let p2 = base + t * h;
    let mut out = vec![p1, p2];
    out.sort_by(|a, b| {
        (a.x, a.y)
            .partial_cmp(&(b.x, b.y))
            .expect("intersection coordinates are finite")
    });
    out
}
