use super::{Triangle, Vertex};
use crate::disc::{disc_in_hull, Circle};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// One of the six ways to recover a circle: `inner` lies in the hull of the
/// other circle and the vertices `pair`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternative {
    pub inner: String,
    pub other: String,
    pub pair: [Vertex; 2],
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCarouselVerdict {
    pub holds: bool,
    /// First alternative that holds, in the order listed.
    pub witness: Option<Alternative>,
    /// All six alternatives: x from y, then y from x, pairs AB, BC, AC.
    pub alternatives: Vec<Alternative>,
}

/// Whether x lies in the hull of y and two vertices, or y in the hull of x
/// and two vertices. Both discs must lie in the triangle.
pub fn weak_carousel_triangle(x: &Circle, y: &Circle, tri: &Triangle, eps: f64) -> Result<TriangleCarouselVerdict> {
    let pts = tri.point_circles();
    for c in [x, y] {
        if !disc_in_hull(c, &pts, eps)? {
            return Err(Error::NotInsideTriangle);
        }
    }
    let pairs = [[Vertex::A, Vertex::B], [Vertex::B, Vertex::C], [Vertex::A, Vertex::C]];
    let mut alternatives = Vec::with_capacity(6);
    for (inner, other, a, b) in [("x", "y", x, y), ("y", "x", y, x)] {
        for pair in pairs {
            let hull = [*b, Circle::point(tri.vertex(pair[0])), Circle::point(tri.vertex(pair[1]))];
            let holds = disc_in_hull(a, &hull, eps)?;
            alternatives.push(Alternative { inner: inner.into(), other: other.into(), pair, holds });
        }
    }
    let witness = alternatives.iter().find(|a| a.holds).cloned();
    Ok(TriangleCarouselVerdict { holds: witness.is_some(), witness, alternatives })
}
