use super::{Side, Triangle};
use crate::disc::{tangent_points, Circle};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Parameters along a side's walk, `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

/// Both circles' projections onto one side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SideProjection {
    pub side: Side,
    pub x: Interval,
    pub y: Interval,
}

/// Projection of `c` from each opposite vertex onto AB, BC and CA.
///
/// The tangent lines from the vertex cut the side at the two endpoints;
/// parameters run from 0 at the side's first vertex to 1 at its second.
pub fn project(tri: &Triangle, c: &Circle, eps: f64) -> Result<[Interval; 3]> {
    if !tri.contains_disc(c, eps) {
        return Err(Error::NotInsideTriangle);
    }
    let mut out = [Interval { lo: 0.0, hi: 0.0 }; 3];
    for (k, side) in Side::ALL.into_iter().enumerate() {
        let (u, v) = (tri.vertex(side.start()), tri.vertex(side.end()));
        let w = tri.vertex(side.opposite());
        let (t1, t2) = tangent_points(w, c, eps)?;
        let cut = |t: crate::disc::Point| {
            let d = t - w;
            (w - u).cross(d) / (v - u).cross(d)
        };
        let (p, q) = (cut(t1), cut(t2));
        out[k] = Interval { lo: p.min(q), hi: p.max(q) };
    }
    Ok(out)
}

pub fn project_pair(tri: &Triangle, x: &Circle, y: &Circle, eps: f64) -> Result<[SideProjection; 3]> {
    let px = project(tri, x, eps)?;
    let py = project(tri, y, eps)?;
    Ok([0, 1, 2].map(|k| SideProjection { side: Side::ALL[k], x: px[k], y: py[k] }))
}

/// How the two intervals on a side interleave.
///
/// | code | order |
/// |---|---|
/// | 1 | y before x: `y2 < x1` |
/// | 2 | x before y: `x2 < y1` |
/// | 3 | y inside x: `x1 < y1 < y2 < x2` |
/// | 4 | x inside y |
/// | 5 | overlap, y first: `y1 < x1 < y2 < x2` |
/// | 6 | overlap, x first |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SideCode(u8);

impl SideCode {
    pub fn new(v: u8) -> Result<SideCode> {
        if (1..=6).contains(&v) {
            Ok(SideCode(v))
        } else {
            Err(Error::Input(format!("side code must be 1..6, got {v}")))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// The code seen with the circles exchanged.
    pub fn swapped(self) -> SideCode {
        SideCode(if self.0 % 2 == 1 { self.0 + 1 } else { self.0 - 1 })
    }
}

pub fn side_code(p: &SideProjection, eps: f64) -> Result<SideCode> {
    let (x1, x2, y1, y2) = (p.x.lo, p.x.hi, p.y.lo, p.y.hi);
    let ends = [x1, x2, y1, y2];
    for i in 0..4 {
        for j in i + 1..4 {
            if (ends[i] - ends[j]).abs() <= eps {
                return Err(Error::CoincidentEndpoints(p.side.name()));
            }
        }
    }
    let code = if y2 < x1 {
        1
    } else if x2 < y1 {
        2
    } else if x1 < y1 && y2 < x2 {
        3
    } else if y1 < x1 && x2 < y2 {
        4
    } else if y1 < x1 {
        5
    } else {
        6
    };
    Ok(SideCode(code))
}

/// Side codes on AB, BC and CA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ConfigCode(pub [SideCode; 3]);

impl ConfigCode {
    pub fn new(j: u8, k: u8, l: u8) -> Result<ConfigCode> {
        Ok(ConfigCode([SideCode::new(j)?, SideCode::new(k)?, SideCode::new(l)?]))
    }

    pub fn digits(self) -> [u8; 3] {
        self.0.map(SideCode::value)
    }

    /// Relabelling the triangle `(A, B, C) -> (B, C, A)`: `Cjkl -> Cklj`.
    pub fn rotated(self) -> ConfigCode {
        let [j, k, l] = self.0;
        ConfigCode([k, l, j])
    }

    pub fn swapped(self) -> ConfigCode {
        ConfigCode(self.0.map(SideCode::swapped))
    }

    /// All 216 codes in lexicographic order.
    pub fn all() -> impl Iterator<Item = ConfigCode> {
        (0..216u16).map(|i| {
            let d = |k: u16| SideCode((i / k % 6) as u8 + 1);
            ConfigCode([d(36), d(6), d(1)])
        })
    }
}

impl fmt::Display for ConfigCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [j, k, l] = self.digits();
        write!(f, "C{j}{k}{l}")
    }
}

impl FromStr for ConfigCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConfigCode> {
        let digits = s.strip_prefix('C').unwrap_or(s);
        let bytes = digits.as_bytes();
        if bytes.len() != 3 || !bytes.iter().all(u8::is_ascii_digit) {
            return Err(Error::Input(format!("bad configuration code `{s}`")));
        }
        ConfigCode::new(bytes[0] - b'0', bytes[1] - b'0', bytes[2] - b'0')
    }
}

impl TryFrom<String> for ConfigCode {
    type Error = Error;
    fn try_from(s: String) -> Result<ConfigCode> {
        s.parse()
    }
}

impl From<ConfigCode> for String {
    fn from(c: ConfigCode) -> String {
        c.to_string()
    }
}

pub fn config_code(tri: &Triangle, x: &Circle, y: &Circle, eps: f64) -> Result<ConfigCode> {
    let sides = project_pair(tri, x, y, eps)?;
    Ok(ConfigCode([side_code(&sides[0], eps)?, side_code(&sides[1], eps)?, side_code(&sides[2], eps)?]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc::Point;
    use crate::triangle::Vertex;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval { lo, hi }
    }

    fn code(x: (f64, f64), y: (f64, f64)) -> u8 {
        side_code(&SideProjection { side: Side::AB, x: iv(x.0, x.1), y: iv(y.0, y.1) }, 1e-9).unwrap().value()
    }

    #[test]
    fn six_interleavings() {
        assert_eq!(code((0.3, 0.5), (0.1, 0.2)), 1);
        assert_eq!(code((0.1, 0.2), (0.3, 0.5)), 2);
        assert_eq!(code((0.2, 0.8), (0.4, 0.6)), 3);
        assert_eq!(code((0.4, 0.6), (0.2, 0.8)), 4);
        assert_eq!(code((0.3, 0.6), (0.2, 0.5)), 5);
        assert_eq!(code((0.2, 0.5), (0.3, 0.6)), 6);
    }

    #[test]
    fn swap_law_on_sides() {
        let cases = [((0.3, 0.5), (0.1, 0.2)), ((0.2, 0.8), (0.4, 0.6)), ((0.3, 0.6), (0.2, 0.5))];
        for (x, y) in cases {
            assert_eq!(SideCode(code(x, y)).swapped(), SideCode(code(y, x)));
        }
    }

    #[test]
    fn codes_that_keep_y_before_x2_and_after_x1() {
        // the first index of Lemma-style hypotheses: 1, 3, 5 put y1, y2 below x2
        for (x, y) in [((0.3, 0.5), (0.1, 0.2)), ((0.2, 0.8), (0.4, 0.6)), ((0.3, 0.6), (0.2, 0.5))] {
            assert!([1, 3, 5].contains(&code(x, y)) && y.1 < x.1);
        }
        // 2, 3, 6 put y1, y2 above x1
        for (x, y) in [((0.1, 0.2), (0.3, 0.5)), ((0.2, 0.8), (0.4, 0.6)), ((0.2, 0.5), (0.3, 0.6))] {
            assert!([2, 3, 6].contains(&code(x, y)) && y.0 > x.0);
        }
    }

    #[test]
    fn coincident_endpoints_are_refused() {
        let p = SideProjection { side: Side::BC, x: iv(0.2, 0.5), y: iv(0.5, 0.7) };
        assert!(matches!(side_code(&p, 1e-9), Err(Error::CoincidentEndpoints("BC"))));
    }

    #[test]
    fn parse_and_print() {
        let c: ConfigCode = "C546".parse().unwrap();
        assert_eq!(c.to_string(), "C546");
        assert_eq!(c.rotated().to_string(), "C465");
        assert_eq!(c.swapped().to_string(), "C635");
        assert!("C576".parse::<ConfigCode>().is_err());
        assert_eq!(ConfigCode::all().count(), 216);
    }

    fn equilateral() -> Triangle {
        let k = 3f64.sqrt() / 2.0;
        Triangle::new(Point::new(0.0, 1.0), Point::new(k, -0.5), Point::new(-k, -0.5), 1e-9).unwrap()
    }

    #[test]
    fn incircle_projects_to_midpoints() {
        let t = equilateral();
        let inc = Circle::at(0.0, 0.0, 0.5 - 1e-6);
        for i in project(&t, &inc, 1e-9).unwrap() {
            assert!(((i.lo + i.hi) / 2.0 - 0.5).abs() < 1e-9);
            assert!(i.hi - i.lo > 0.9);
        }
    }

    #[test]
    fn point_projects_to_cevian_feet() {
        let t = equilateral();
        let p = Point::new(0.1, 0.05);
        for (k, i) in project(&t, &Circle::point(p), 1e-9).unwrap().iter().enumerate() {
            assert_eq!(i.lo, i.hi);
            let side = Side::ALL[k];
            let foot = t.vertex(side.start()).lerp(t.vertex(side.end()), i.lo);
            // the foot, the point and the opposite vertex are collinear
            assert!((foot - t.vertex(side.opposite())).cross(p - t.vertex(side.opposite())).abs() < 1e-12);
        }
    }

    #[test]
    fn moving_toward_b_moves_projections_toward_b() {
        let t = equilateral();
        let b = t.vertex(Vertex::B);
        let mut prev: Option<[Interval; 3]> = None;
        for s in 0..10 {
            let c = Circle::new(Point::new(0.0, 0.0).lerp(b, 0.05 * s as f64), 0.05);
            let p = project(&t, &c, 1e-9).unwrap();
            if let Some(q) = prev {
                // AB is walked toward B, BC away from B
                assert!(p[0].lo > q[0].lo && p[0].hi > q[0].hi);
                assert!(p[1].lo < q[1].lo && p[1].hi < q[1].hi);
            }
            prev = Some(p);
        }
    }

    #[test]
    fn outside_circle_is_refused() {
        assert!(matches!(project(&equilateral(), &Circle::at(2.0, 0.0, 0.1), 1e-9), Err(Error::NotInsideTriangle)));
    }
}
