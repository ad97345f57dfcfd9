//! Convex geometries of circles on a plane.
//!
//! The crate is split into four layers:
//!
//! * [`closure`]: finite closure systems on at most 16 elements, the
//!   convex-geometry axioms, joins of alignments, convex dimension, carousel
//!   rules, implications, enumeration and lattice embeddings.
//! * [`disc`]: a floating-point kernel for discs on the plane. It decides
//!   containment of a disc in the convex hull of other discs, builds tangent
//!   lines and the corner regions used by the geometric lemmas, and turns a
//!   scene of named circles into a [`closure::ClosedFamily`].
//! * [`triangle`]: projections of two circles onto the sides of a triangle,
//!   the 216 configuration codes and their 38 isomorphism classes, and the
//!   weak carousel check for two circles and three points.
//! * [`harness`]: seeded verification campaigns that tie the geometry back to
//!   the combinatorics.

pub mod closure;
pub mod disc;
pub mod error;
pub mod harness;
pub mod triangle;

pub use error::{Error, Result};
