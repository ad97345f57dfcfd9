use super::{disc_in_hull, in_triangle, signed_area, Circle, Line, Point, Region, RegionKind};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Touch points of the two tangent lines from `p` to `c`.
///
/// `T1` comes first counterclockwise around the circle as seen from `p`
/// (clockwise in angle about the centre). A point-circle returns its centre
/// twice.
pub fn tangent_points(p: Point, c: &Circle, eps: f64) -> Result<(Point, Point)> {
    let d = p.dist(c.center);
    if d <= c.r + eps {
        return Err(Error::PointInsideCircle);
    }
    let alpha = (p - c.center).angle();
    let beta = (c.r / d).acos();
    Ok((c.at_angle(alpha - beta), c.at_angle(alpha + beta)))
}

/// An outer common tangent: `normal · p = offset` supports both discs from
/// the `normal` side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tangent {
    pub line: Line,
    pub normal: Point,
    pub offset: f64,
    pub touch1: Point,
    pub touch2: Point,
}

impl Tangent {
    /// How far `c` lies on the inner side (negative when it crosses).
    pub fn slack(&self, c: &Circle) -> f64 {
        self.offset - (self.normal.dot(c.center) + c.r)
    }
}

/// The two outer common tangents of `c1` and `c2`.
///
/// Their unit normals `n` satisfy `n · (c2 - c1) = r1 - r2`. Equal radii give
/// parallel lines; two point-circles give the same line twice.
pub fn external_tangents(c1: &Circle, c2: &Circle, eps: f64) -> Result<[Tangent; 2]> {
    let d = c2.center - c1.center;
    let len = d.norm();
    if len <= (c1.r - c2.r).abs() + eps {
        return Err(Error::Degenerate("one circle contains the other".into()));
    }
    let base = d.angle();
    let spread = ((c1.r - c2.r) / len).clamp(-1.0, 1.0).acos();
    let make = |phi: f64| {
        let n = Point::unit(phi);
        let touch1 = c1.center + n * c1.r;
        let touch2 = c2.center + n * c2.r;
        Tangent {
            line: Line { point: touch1, dir: n.perp() },
            normal: n,
            offset: n.dot(c1.center) + c1.r,
            touch1,
            touch2,
        }
    };
    Ok([make(base + spread), make(base - spread)])
}

/// The outer tangent triangle of three discs, none in the hull of the other
/// two, with one disc inscribed in each angle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentTriangle {
    /// Vertices; disc `i` is inscribed in the angle at vertex `i`.
    pub vertices: [Point; 3],
    /// Side `i` is tangent to discs `i` and `i + 1`.
    pub sides: [Tangent; 3],
    /// Corner regions between each vertex and its disc.
    pub corners: [Region; 3],
}

impl TangentTriangle {
    /// Whether the point lies in the closed triangle but in no corner region.
    pub fn hull_contains(&self, p: Point, eps: f64) -> bool {
        in_triangle(p, self.vertices, eps) && !self.corners.iter().any(|r| r.contains(p, -eps))
    }
}

pub fn tangent_triangle(a: &Circle, b: &Circle, c: &Circle, eps: f64) -> Result<TangentTriangle> {
    let discs = [*a, *b, *c];
    for i in 0..3 {
        let others = [discs[(i + 1) % 3], discs[(i + 2) % 3]];
        if disc_in_hull(&discs[i], &others, eps)? {
            return Err(Error::Degenerate(format!("disc {i} lies in the hull of the other two")));
        }
    }
    let mut sides = Vec::with_capacity(3);
    for i in 0..3 {
        let (p, q, third) = (&discs[i], &discs[(i + 1) % 3], &discs[(i + 2) % 3]);
        let side = external_tangents(p, q, eps)?
            .into_iter()
            .filter(|t| t.slack(third) >= -eps)
            .max_by(|s, t| s.slack(third).total_cmp(&t.slack(third)))
            .ok_or_else(|| Error::Degenerate(format!("no outer tangent of pair {i} supports the third disc")))?;
        sides.push(side);
    }
    let sides: [Tangent; 3] = sides.try_into().expect("three sides");
    let mut vertices = [Point::default(); 3];
    for i in 0..3 {
        // disc i touches side i and side i-1
        let prev = &sides[(i + 2) % 3];
        vertices[i] = sides[i]
            .line
            .intersect(&prev.line, eps)
            .ok_or_else(|| Error::Degenerate("parallel outer tangents".into()))?;
    }
    if signed_area(vertices[0], vertices[1], vertices[2]).abs() <= eps {
        return Err(Error::Degenerate("flat tangent triangle".into()));
    }
    for d in &discs {
        for s in &sides {
            if s.slack(d) < -eps * (1.0 + d.center.norm()) {
                return Err(Error::Degenerate("tangent lines do not bound the discs".into()));
            }
        }
    }
    // the discs must lie inside the triangle, not in an unbounded wedge
    let centroid = (vertices[0] + vertices[1] + vertices[2]) * (1.0 / 3.0);
    if sides.iter().any(|s| s.normal.dot(centroid) > s.offset + eps) {
        return Err(Error::Degenerate("discs are not enclosed by the tangent triangle".into()));
    }
    let corners = [0, 1, 2].map(|i| Region::corner(RegionKind::W1, vertices[i], discs[i], Some(vertices), eps));
    Ok(TangentTriangle { vertices, sides, corners })
}
