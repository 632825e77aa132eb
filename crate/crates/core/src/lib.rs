//! Randomized verification of classical triangle constructions.
//!
//! The crate has four layers:
//!
//! * [`geom`] — numerically careful primitives: points, vectors, canonical
//!   unit-normal lines, circles, reflection, intersection, angles.
//! * [`centers`] — orthocenter, incenter, circumcircle, circumcircle arc
//!   midpoints, acuteness, and arc measures.
//! * [`constructions`] — the derived triangles under study: the
//!   reflected-orthocenter triangle, its double-reflection triangle, the
//!   arc-midpoint triangle, and the Fuhrmann triangle.
//! * [`dsl`] + [`engine`] — a small line-oriented construction-script
//!   language (`.geo`) and a falsification engine that evaluates scripts
//!   over deterministically sampled acute triangles with tolerance-aware
//!   assertion checks.
//!
//! Everything is pure computation over `f64` and usable without `std`
//! (enable the `libm` feature and disable default features); an allocator is
//! required.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod num;

pub mod centers;
pub mod constructions;
pub mod dsl;
pub mod engine;
pub mod geom;

pub use centers::{DegenerateTriangle, Triangle, Vertex};
pub use constructions::ConstructionError;
pub use engine::{
    run_fixed, run_trials, EngineError, SamplerConfig, ToleranceContext, TrialReport, Verdict,
};
pub use geom::{Circle, GeomError, Line, Point, Vector, DEGENERACY_FLOOR};
