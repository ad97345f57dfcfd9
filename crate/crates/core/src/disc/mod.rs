//! Discs on the plane.
//!
//! A circle with radius zero is a point. All predicates take an explicit
//! tolerance `eps`; boundary contact within `eps` counts as contact, and
//! containment within `eps` counts as containment.

mod hull;
mod lemma;
mod region;
mod scene;
mod tangent;

pub use hull::{disc_in_hull, point_in_hull, support};
pub use lemma::{check_lemma, lemma_campaign, LemmaFailure, LemmaInstance, LemmaKind, LemmaReport, LemmaVerdict};
pub use region::{meets_disc, region_contains, Region, RegionKind};
pub use scene::{NamedCircle, Scene, DEFAULT_TOLERANCE};
pub use tangent::{external_tangents, tangent_points, tangent_triangle, Tangent, TangentTriangle};

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn unit(theta: f64) -> Point {
        Point::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Rotated a quarter turn counterclockwise.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// A closed disc; `r == 0` is a point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    #[serde(rename = "c")]
    pub center: Point,
    pub r: f64,
}

impl Circle {
    pub const fn new(center: Point, r: f64) -> Circle {
        Circle { center, r }
    }

    pub fn at(x: f64, y: f64, r: f64) -> Circle {
        Circle::new(Point::new(x, y), r)
    }

    pub fn point(p: Point) -> Circle {
        Circle::new(p, 0.0)
    }

    pub fn is_valid(&self) -> bool {
        self.center.is_finite() && self.r.is_finite() && self.r >= 0.0
    }

    /// Same centre, radius changed by `d` (clamped at zero).
    pub fn grown(&self, d: f64) -> Circle {
        Circle::new(self.center, (self.r + d).max(0.0))
    }

    /// Point of the circle at angle `theta` from the centre.
    pub fn at_angle(&self, theta: f64) -> Point {
        self.center + Point::unit(theta) * self.r
    }
}

/// A line through `point` with direction `dir` (not necessarily unit).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub point: Point,
    pub dir: Point,
}

impl Line {
    pub fn through(p: Point, q: Point) -> Line {
        Line { point: p, dir: q - p }
    }

    /// Signed distance of `p`, positive on the left of `dir`.
    pub fn side(&self, p: Point) -> f64 {
        self.dir.cross(p - self.point) / self.dir.norm()
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.side(p).abs()
    }

    /// Intersection point, or `None` when the lines are parallel within `eps`
    /// (measured as the sine of the angle between them).
    pub fn intersect(&self, o: &Line, eps: f64) -> Option<Point> {
        let den = self.dir.cross(o.dir);
        if den.abs() <= eps * self.dir.norm() * o.dir.norm() {
            return None;
        }
        let t = (o.point - self.point).cross(o.dir) / den;
        Some(self.point + self.dir * t)
    }

    /// Parameter `t` with `point + t * dir` closest to `p`.
    pub fn param_of(&self, p: Point) -> f64 {
        (p - self.point).dot(self.dir) / self.dir.dot(self.dir)
    }
}

/// Signed area of the triangle `abc`; positive when counterclockwise.
pub fn signed_area(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a) / 2.0
}

/// Closed-triangle membership with slack `eps` (distance units).
pub fn in_triangle(p: Point, t: [Point; 3], eps: f64) -> bool {
    let s = signed_area(t[0], t[1], t[2]).signum();
    (0..3).all(|i| {
        let l = Line::through(t[i], t[(i + 1) % 3]);
        s * l.side(p) >= -eps
    })
}

/// Whether the disc lies in the closed triangle, up to `eps`.
pub fn disc_in_triangle(c: &Circle, t: [Point; 3], eps: f64) -> bool {
    let s = signed_area(t[0], t[1], t[2]).signum();
    (0..3).all(|i| s * Line::through(t[i], t[(i + 1) % 3]).side(c.center) >= c.r - eps)
}
