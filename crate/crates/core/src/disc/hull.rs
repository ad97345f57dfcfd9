use super::{Circle, Point};
use crate::error::{Error, Result};
use std::f64::consts::{PI, TAU};

/// Support function of a disc: `center · u(θ) + r`.
pub fn support(c: &Circle, theta: f64) -> f64 {
    c.center.dot(Point::unit(theta)) + c.r
}

/// Whether disc `z` lies in the convex hull of the union of `discs`.
///
/// `z` sticks out iff some direction θ has `h_z(θ) > h_i(θ) + eps` for every
/// `i`. Each such constraint reads `a·u(θ) > b` with `a = z.c - c_i` and
/// `b = r_i - z.r + eps`, which is empty, the whole circle, or an open arc
/// of half-width `acos(b/|a|)` around the direction of `a`. The arcs are
/// intersected exactly.
pub fn disc_in_hull(z: &Circle, discs: &[Circle], eps: f64) -> Result<bool> {
    if discs.is_empty() {
        return Err(Error::EmptyHull);
    }
    // (centre, half-width) of each proper arc
    let mut arcs: Vec<(f64, f64)> = Vec::with_capacity(discs.len());
    for d in discs {
        let a = z.center - d.center;
        let b = d.r - z.r + eps;
        let len = a.norm();
        if len <= f64::MIN_POSITIVE || b >= len {
            if b >= 0.0 {
                // no direction separates z from this disc
                return Ok(true);
            }
            continue;
        }
        if b <= -len {
            continue;
        }
        arcs.push((a.angle(), (b / len).acos()));
    }
    let Some(&(c0, h0)) = arcs.first() else {
        // z beats every disc in every direction
        return Ok(false);
    };
    let mut live = vec![(c0 - h0, c0 + h0)];
    for &(c, h) in &arcs[1..] {
        // bring the arc centre within π of c0
        let mut c = c;
        while c - c0 > PI {
            c -= TAU;
        }
        while c0 - c > PI {
            c += TAU;
        }
        let mut next = Vec::with_capacity(live.len() * 2);
        for &(lo, hi) in &live {
            for shift in [-TAU, 0.0, TAU] {
                let l = lo.max(c + shift - h);
                let u = hi.min(c + shift + h);
                if l < u {
                    next.push((l, u));
                }
            }
        }
        if next.is_empty() {
            return Ok(true);
        }
        live = next;
    }
    Ok(false)
}

pub fn point_in_hull(p: Point, discs: &[Circle], eps: f64) -> Result<bool> {
    disc_in_hull(&Circle::point(p), discs, eps)
}
