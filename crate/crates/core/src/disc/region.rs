use super::{in_triangle, signed_area, tangent_points, Circle, Line, Point};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionKind {
    /// Between a vertex and the disc inscribed in its angle.
    W1,
    /// The rest of the enclosing triangle outside the disc.
    W2,
    /// Between the crossing point of two tangents and the disc.
    WN,
}

/// A corner region against a disc, stored as apex plus touch points.
///
/// W1 and WN are the closed triangle `(apex, touch1, touch2)` minus the open
/// disc. W2 is the part of `enclosing` beyond the chord `touch1 touch2`,
/// again minus the open disc.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub kind: RegionKind,
    pub apex: Point,
    pub circle: Circle,
    pub touch1: Point,
    pub touch2: Point,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enclosing: Option<[Point; 3]>,
}

impl Region {
    /// The region cut off by the tangents from `apex`. An apex on or inside
    /// the circle gives an empty corner.
    pub fn corner(kind: RegionKind, apex: Point, circle: Circle, enclosing: Option<[Point; 3]>, eps: f64) -> Region {
        let (touch1, touch2) = tangent_points(apex, &circle, eps).unwrap_or((apex, apex));
        Region { kind, apex, circle, touch1, touch2, enclosing }
    }

    /// The W2 partner of a W1 region.
    pub fn complement(&self) -> Region {
        Region { kind: RegionKind::W2, ..self.clone() }
    }

    pub fn is_empty(&self) -> bool {
        self.kind != RegionKind::W2 && signed_area(self.apex, self.touch1, self.touch2) == 0.0
    }

    fn chord_side(&self, p: Point) -> f64 {
        let chord = Line::through(self.touch1, self.touch2);
        if chord.dir.norm() == 0.0 {
            return (p - self.apex).dot(self.circle.center - self.apex);
        }
        // positive away from the apex
        -chord.side(p) * chord.side(self.apex).signum()
    }

    /// Membership with boundary slack `eps`; negative `eps` asks for the
    /// interior.
    pub fn contains(&self, p: Point, eps: f64) -> bool {
        if p.dist(self.circle.center) < self.circle.r - eps {
            return false;
        }
        match self.kind {
            RegionKind::W1 | RegionKind::WN => {
                !self.is_empty() && in_triangle(p, [self.apex, self.touch1, self.touch2], eps)
            }
            RegionKind::W2 => match self.enclosing {
                Some(t) => in_triangle(p, t, eps) && self.chord_side(p) >= -eps,
                None => false,
            },
        }
    }

    /// Boundary polygon of the region before the disc is removed.
    pub fn polygon(&self) -> Vec<Point> {
        match self.kind {
            RegionKind::W1 | RegionKind::WN if self.is_empty() => Vec::new(),
            RegionKind::W1 | RegionKind::WN => vec![self.apex, self.touch1, self.touch2],
            RegionKind::W2 => {
                let Some(t) = self.enclosing else { return Vec::new() };
                let mut out = Vec::new();
                for i in 0..3 {
                    let (p, q) = (t[i], t[(i + 1) % 3]);
                    let (sp, sq) = (self.chord_side(p), self.chord_side(q));
                    if sp >= 0.0 {
                        out.push(p);
                    }
                    if (sp >= 0.0) != (sq >= 0.0) {
                        out.push(p.lerp(q, sp / (sp - sq)));
                    }
                }
                out
            }
        }
    }
}

pub fn region_contains(region: &Region, p: Point, eps: f64) -> bool {
    region.contains(p, eps)
}

/// Whether `probe` overlaps the region by more than `margin`: some point of
/// the probe shrunk by `margin` lies in the polygon at distance more than
/// `r + margin` from the region's circle centre.
pub fn meets_disc(region: &Region, probe: &Circle, margin: f64) -> bool {
    let poly = region.polygon();
    if poly.len() < 3 {
        return false;
    }
    let probe = probe.grown(-margin);
    let o = region.circle.center;
    let limit = region.circle.r + margin;
    let area = {
        let mut s = 0.0;
        for i in 0..poly.len() {
            s += poly[i].cross(poly[(i + 1) % poly.len()]);
        }
        s
    };
    let inside = |p: Point| {
        (0..poly.len()).all(|i| {
            let e = poly[(i + 1) % poly.len()] - poly[i];
            area.signum() * e.cross(p - poly[i]) >= 0.0
        })
    };
    let mut best = f64::NEG_INFINITY;
    for &v in &poly {
        if v.dist(probe.center) <= probe.r {
            best = best.max(v.dist(o));
        }
    }
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        let d = q - p;
        let f = p - probe.center;
        let (a, b, c) = (d.dot(d), 2.0 * f.dot(d), f.dot(f) - probe.r * probe.r);
        let disc = b * b - 4.0 * a * c;
        if a == 0.0 || disc < 0.0 {
            continue;
        }
        for t in [(-b - disc.sqrt()) / (2.0 * a), (-b + disc.sqrt()) / (2.0 * a)] {
            if (0.0..=1.0).contains(&t) {
                best = best.max((p + d * t).dist(o));
            }
        }
    }
    let away = probe.center - o;
    let dir = if away.norm() > 0.0 { away * (1.0 / away.norm()) } else { Point::new(1.0, 0.0) };
    let far = probe.center + dir * probe.r;
    if inside(far) {
        best = best.max(far.dist(o));
    }
    best > limit
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wedge() -> (Region, [Point; 3]) {
        // right angle at the origin, unit disc inscribed
        let tri = [Point::new(0.0, 0.0), Point::new(0.0, 6.0), Point::new(6.0, 0.0)];
        let r = Region::corner(RegionKind::W1, tri[0], Circle::at(1.0, 1.0, 1.0), Some(tri), 1e-12);
        (r, tri)
    }

    #[test]
    fn touch_points_on_the_legs() {
        let (r, _) = wedge();
        let mut t = [r.touch1, r.touch2];
        t.sort_by(|a, b| a.x.total_cmp(&b.x));
        assert!(t[0].dist(Point::new(0.0, 1.0)) < 1e-12 && t[1].dist(Point::new(1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn membership_basics() {
        let (r, _) = wedge();
        assert!(r.contains(r.apex, 0.0));
        assert!(!r.contains(Point::new(1.0, 1.0), 1e-9));
        // midpoint between apex and the nearest disc point
        let near = Point::new(1.0, 1.0) - Point::new(1.0, 1.0) * (1.0 / 2f64.sqrt());
        let mid = r.apex.lerp(near, 0.5);
        assert!(r.contains(mid, 0.0));
        // half-plane description: x >= 0, y >= 0, x + y <= 1, outside the disc
        let hp = |p: Point| p.x >= 0.0 && p.y >= 0.0 && p.x + p.y <= 1.0 && p.dist(Point::new(1.0, 1.0)) >= 1.0;
        for i in 0..50 {
            for j in 0..50 {
                let p = Point::new(i as f64 / 40.0, j as f64 / 40.0);
                if (p.x + p.y - 1.0).abs() > 1e-9 && (p.dist(Point::new(1.0, 1.0)) - 1.0).abs() > 1e-9 {
                    assert_eq!(r.contains(p, 0.0), hp(p), "{p:?}");
                }
            }
        }
    }

    #[test]
    fn complement_is_the_far_side() {
        let (r, _) = wedge();
        let w2 = r.complement();
        assert!(w2.contains(Point::new(3.0, 2.5), 0.0));
        assert!(!w2.contains(Point::new(0.1, 0.1), 0.0));
        assert!(!w2.contains(Point::new(7.0, 7.0), 0.0));
        assert_eq!(w2.polygon().len(), 4);
    }

    #[test]
    fn probes() {
        let (r, _) = wedge();
        let w2 = r.complement();
        let small = Circle::at(0.15, 0.15, 0.1);
        assert!(meets_disc(&r, &small, 1e-9));
        assert!(!meets_disc(&w2, &small, 1e-9));
        // the inscribed disc itself meets neither side
        assert!(!meets_disc(&r, &r.circle, 1e-9));
        assert!(!meets_disc(&w2, &r.circle, 1e-9));
        assert!(meets_disc(&w2, &Circle::at(3.0, 3.0, 0.5), 1e-9));
        // a probe straddling the disc edge near the apex meets only w1
        let straddle = Circle::at(0.35, 0.35, 0.12);
        assert!(meets_disc(&r, &straddle, 1e-9));
        assert!(!meets_disc(&w2, &straddle, 1e-9));
    }
}
