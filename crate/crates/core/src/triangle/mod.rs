//! Two circles in a triangle.
//!
//! Each circle is projected from every vertex onto the opposite side. On a
//! side the two projection intervals interleave in one of six ways (the side
//! code); the three side codes on AB, BC and CA form the configuration code
//! `Cjkl`. The 216 codes fall into 38 classes under rotation of the sides and
//! exchange of the circles.

mod acn;
mod carousel;
mod classes;
mod projection;
mod realize;

pub use acn::{check_lemma_acn, sufficient_conditions, tangent_crossing, Conditions};
pub use carousel::{weak_carousel_triangle, Alternative, TriangleCarouselVerdict};
pub use classes::{class_of, class_table, ClassId, ClassInfo, ClassTable, Dismissal};
pub use projection::{config_code, project, project_pair, side_code, ConfigCode, Interval, SideCode, SideProjection};
pub use realize::{
    coincident_scene, sample_circle, sample_pair, sample_triangle, search_configuration, search_realization,
    search_realization_with, Realization, SamplerMode,
};

use crate::disc::{in_triangle, signed_area, Circle, Line, Point};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Sides in walk order; each is walked from its first to its second vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    AB,
    BC,
    CA,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::AB, Side::BC, Side::CA];

    pub fn name(self) -> &'static str {
        match self {
            Side::AB => "AB",
            Side::BC => "BC",
            Side::CA => "CA",
        }
    }

    pub fn start(self) -> Vertex {
        match self {
            Side::AB => Vertex::A,
            Side::BC => Vertex::B,
            Side::CA => Vertex::C,
        }
    }

    pub fn end(self) -> Vertex {
        match self {
            Side::AB => Vertex::B,
            Side::BC => Vertex::C,
            Side::CA => Vertex::A,
        }
    }

    pub fn opposite(self) -> Vertex {
        match self {
            Side::AB => Vertex::C,
            Side::BC => Vertex::A,
            Side::CA => Vertex::B,
        }
    }
}

/// A triangle stored in clockwise order (negative signed area, y up).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    /// Reorders counterclockwise input by exchanging `b` and `c`.
    pub fn new(a: Point, b: Point, c: Point, eps: f64) -> Result<Triangle> {
        let s = signed_area(a, b, c);
        if s.is_nan() || s.abs() <= eps {
            return Err(Error::Degenerate("triangle has (nearly) zero area".into()));
        }
        Ok(if s < 0.0 { Triangle { a, b, c } } else { Triangle { a, b: c, c: b } })
    }

    pub fn from_array(v: [Point; 3], eps: f64) -> Result<Triangle> {
        Triangle::new(v[0], v[1], v[2], eps)
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    pub fn vertex(&self, v: Vertex) -> Point {
        self.vertices()[v.index()]
    }

    pub fn side_line(&self, s: Side) -> Line {
        Line::through(self.vertex(s.start()), self.vertex(s.end()))
    }

    pub fn area(&self) -> f64 {
        -signed_area(self.a, self.b, self.c)
    }

    /// Distance from `p` to the side line, positive inside.
    pub fn inward_distance(&self, s: Side, p: Point) -> f64 {
        // clockwise: the interior is on the right of each directed side
        -self.side_line(s).side(p)
    }

    /// Largest radius of a disc centred at `p` that stays inside.
    pub fn room_at(&self, p: Point) -> f64 {
        Side::ALL.iter().map(|&s| self.inward_distance(s, p)).fold(f64::INFINITY, f64::min)
    }

    /// Whether the disc is inside with every side at least `margin` away.
    pub fn contains_disc(&self, c: &Circle, margin: f64) -> bool {
        self.room_at(c.center) >= c.r + margin
    }

    pub fn contains_point(&self, p: Point, eps: f64) -> bool {
        in_triangle(p, self.vertices(), eps)
    }

    /// The same triangle with vertices relabelled `(B, C, A)`.
    pub fn rotated(&self) -> Triangle {
        Triangle { a: self.b, b: self.c, c: self.a }
    }

    /// Vertices as point-circles.
    pub fn point_circles(&self) -> [Circle; 3] {
        self.vertices().map(Circle::point)
    }
}
