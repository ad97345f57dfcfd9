use super::{config_code, project, project_pair, Side, Triangle};
use crate::disc::{disc_in_triangle, Circle, Line, LemmaVerdict, Point};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Crossing `N` of the tangent from A through x's BC endpoint nearest B and
/// the tangent from C through x's AB endpoint nearest B.
pub fn tangent_crossing(tri: &Triangle, x: &Circle, eps: f64) -> Result<Point> {
    let p = project(tri, x, eps)?;
    let (a, b, c) = (tri.a, tri.b, tri.c);
    let on_bc = b.lerp(c, p[1].lo);
    let on_ab = a.lerp(b, p[0].hi);
    Line::through(a, on_bc)
        .intersect(&Line::through(c, on_ab), eps)
        .ok_or_else(|| Error::Degenerate("tangent lines through N are parallel".into()))
}

/// y lies in triangle ACN whenever the AB code is 1, 3 or 5 and the BC code
/// is 2, 3 or 6.
pub fn check_lemma_acn(tri: &Triangle, x: &Circle, y: &Circle, eps: f64) -> LemmaVerdict {
    let code = match config_code(tri, x, y, eps) {
        Ok(c) => c,
        Err(e) => return LemmaVerdict::Rejected(e.to_string()),
    };
    let [j, k, _] = code.digits();
    if ![1, 3, 5].contains(&j) || ![2, 3, 6].contains(&k) {
        return LemmaVerdict::Rejected(format!("{code} is outside the hypothesis"));
    }
    let n = match tangent_crossing(tri, x, eps) {
        Ok(n) => n,
        Err(e) => return LemmaVerdict::Rejected(e.to_string()),
    };
    if disc_in_triangle(y, [tri.a, tri.c, n], eps) {
        LemmaVerdict::Holds
    } else {
        LemmaVerdict::Violated(format!("y is not inside ACN for {code}"))
    }
}

/// Which of the four endpoint conditions hold, strictly beyond `eps`:
/// 1. on CA, y's endpoint nearest C is closer to C than x's;
/// 2. on CA, y's endpoint nearest A is closer to A than x's;
/// 3. on BC, y's endpoint nearest C is closer to C than x's;
/// 4. on AB, y's endpoint nearest A is closer to A than x's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions(pub [bool; 4]);

impl Conditions {
    pub fn any(&self) -> bool {
        self.0.iter().any(|&b| b)
    }

    /// 1-based numbers of the conditions that hold.
    pub fn numbers(&self) -> Vec<u8> {
        (0..4).filter(|&i| self.0[i]).map(|i| i as u8 + 1).collect()
    }
}

pub fn sufficient_conditions(tri: &Triangle, x: &Circle, y: &Circle, eps: f64) -> Result<Conditions> {
    let [ab, bc, ca] = project_pair(tri, x, y, eps)?;
    debug_assert_eq!((ab.side, bc.side, ca.side), (Side::AB, Side::BC, Side::CA));
    Ok(Conditions([
        ca.y.lo < ca.x.lo - eps,
        ca.y.hi > ca.x.hi + eps,
        bc.y.hi > bc.x.hi + eps,
        ab.y.lo < ab.x.lo - eps,
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::{search_configuration, ConfigCode};

    #[test]
    fn conditions_follow_from_codes() {
        // (1): CA code in {1,4,5}; (2): CA in {2,4,6}; (3): BC in {2,4,6}; (4): AB in {1,4,5}
        for code in ["C121", "C123", "C125", "C136", "C333", "C565"] {
            let code: ConfigCode = code.parse().unwrap();
            let r = search_configuration(code, 100_000, 3).unwrap();
            let got = sufficient_conditions(&r.triangle, &r.x, &r.y, 1e-9).unwrap();
            let [j, k, l] = code.digits();
            let want = [[1, 4, 5].contains(&l), [2, 4, 6].contains(&l), [2, 4, 6].contains(&k), [1, 4, 5].contains(&j)];
            assert_eq!(got.0, want, "{code}");
        }
    }

    #[test]
    fn crossing_lies_inside_triangle() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(0.5, 1.0), Point::new(1.0, 0.0), 1e-9).unwrap();
        let n = tangent_crossing(&t, &Circle::at(0.5, 0.35, 0.1), 1e-9).unwrap();
        assert!(t.contains_point(n, 0.0));
    }

    #[test]
    fn wrong_hypothesis_is_rejected() {
        let code: ConfigCode = "C212".parse().unwrap();
        let r = search_configuration(code, 100_000, 1).unwrap();
        assert!(matches!(check_lemma_acn(&r.triangle, &r.x, &r.y, 1e-9), LemmaVerdict::Rejected(_)));
    }
}
