//! The four derived triangles under study.
//!
//! * [`reflected_orthocenter_triangle`]: reflections of the orthocenter
//!   across the three sides; the vertices land on the circumcircle.
//! * [`double_reflection_triangle`]: reflections of the base vertices across
//!   the chords spanned by the first construction; it shares its orthocenter
//!   with the base triangle.
//! * [`incenter_arc_triangle`]: the three circumcircle arc midpoints; its
//!   orthocenter is the incenter of the base triangle.
//! * [`fuhrmann_triangle`]: arc midpoints reflected across their sides; by
//!   Stevanovic's theorem (2002) its orthocenter is again the incenter.
//!
//! All constructions accept any non-degenerate base triangle. A derived
//! triangle that collapses below the floor (for instance every one of these
//! collapses on an equilateral base except the arc-midpoint triangle) raises
//! [`ConstructionError::DegenerateConstruction`] instead of returning a
//! zero-area result.

use core::fmt;

use crate::centers::{arc_midpoint, orthocenter, DegenerateTriangle, Triangle, Vertex};
use crate::geom::{line_through, reflect, Line, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    /// The base triangle violates the triangle invariant.
    DegenerateTriangle,
    /// The derived triangle collapsed below the degeneracy floor.
    DegenerateConstruction,
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::DegenerateTriangle => {
                write!(f, "base triangle is degenerate")
            }
            ConstructionError::DegenerateConstruction => {
                write!(f, "derived triangle collapsed below the degeneracy floor")
            }
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<DegenerateTriangle> for ConstructionError {
    fn from(_: DegenerateTriangle) -> Self {
        ConstructionError::DegenerateTriangle
    }
}

fn side(p: Point, q: Point) -> Result<Line, ConstructionError> {
    // A validated triangle always has sides above the floor.
    line_through(p, q).map_err(|_| ConstructionError::DegenerateTriangle)
}

fn checked(t: Triangle) -> Result<Triangle, ConstructionError> {
    t.validate()
        .map_err(|_| ConstructionError::DegenerateConstruction)?;
    Ok(t)
}

/// Reflections of the orthocenter across the sides `BC`, `CA`, `AB`, in that
/// vertex order. Every vertex lies on the circumcircle of the base.
pub fn reflected_orthocenter_triangle(t: &Triangle) -> Result<Triangle, ConstructionError> {
    let h = orthocenter(t)?;
    checked(Triangle::new(
        reflect(h, side(t.b, t.c)?),
        reflect(h, side(t.c, t.a)?),
        reflect(h, side(t.a, t.b)?),
    ))
}

/// Reflections of `A`, `B`, `C` across the chords `B'C'`, `C'A'`, `A'B'` of
/// the reflected-orthocenter triangle. Collapses (to the circumcenter) on an
/// equilateral base.
pub fn double_reflection_triangle(t: &Triangle) -> Result<Triangle, ConstructionError> {
    let r = reflected_orthocenter_triangle(t)?;
    let chord = |p, q| line_through(p, q).map_err(|_| ConstructionError::DegenerateConstruction);
    checked(Triangle::new(
        reflect(t.a, chord(r.b, r.c)?),
        reflect(t.b, chord(r.c, r.a)?),
        reflect(t.c, chord(r.a, r.b)?),
    ))
}

/// The triangle of the three circumcircle arc midpoints (equivalently, of
/// the second intersections of the internal bisectors with the
/// circumcircle).
pub fn incenter_arc_triangle(t: &Triangle) -> Result<Triangle, ConstructionError> {
    // Three distinct points of one circle are never collinear, so no result
    // validation is needed.
    Ok(Triangle::new(
        arc_midpoint(t, Vertex::A)?,
        arc_midpoint(t, Vertex::B)?,
        arc_midpoint(t, Vertex::C)?,
    ))
}

/// Arc midpoints reflected across their corresponding sides. Collapses (to
/// the circumcenter) on an equilateral base.
pub fn fuhrmann_triangle(t: &Triangle) -> Result<Triangle, ConstructionError> {
    let m = incenter_arc_triangle(t)?;
    checked(Triangle::new(
        reflect(m.a, side(t.b, t.c)?),
        reflect(m.b, side(t.c, t.a)?),
        reflect(m.c, side(t.a, t.b)?),
    ))
}
