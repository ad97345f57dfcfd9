//! Executable forms of the corner-region lemmas.
//!
//! Each lemma gets a random instance generator that enforces its hypotheses
//! and a check of its conclusion. Instances that miss a hypothesis (by more
//! than the margin) are rejected, never counted as failures.

use super::{disc_in_hull, disc_in_triangle, point_in_hull, Circle, Line, Point, Region, RegionKind, Scene};
use crate::error::{Error, Result};
use crate::triangle::{sample_circle, sample_triangle, sufficient_conditions, tangent_crossing, Triangle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaKind {
    /// A disc in the angle meeting the vertex corner lies in the hull of the
    /// inscribed disc and the vertex.
    L42,
    /// A disc in the triangle cannot meet both sides of the inscribed disc.
    C43,
    /// Tangents at a near-arc and a far-arc point cross outside the angle.
    L44,
    /// The corner at the tangent crossing N lies in the hull of x and B.
    L45,
    /// Any endpoint condition puts y in the hull of x, A and C.
    C46,
}

impl LemmaKind {
    pub const ALL: [LemmaKind; 5] = [LemmaKind::L42, LemmaKind::C43, LemmaKind::L44, LemmaKind::L45, LemmaKind::C46];

    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::L42 => "L4.2",
            LemmaKind::C43 => "C4.3",
            LemmaKind::L44 => "L4.4",
            LemmaKind::L45 => "L4.5",
            LemmaKind::C46 => "C4.6",
        }
    }
}

impl fmt::Display for LemmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<LemmaKind> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_uppercase();
        LemmaKind::ALL
            .into_iter()
            .find(|k| k.name().replace('.', "") == key)
            .ok_or_else(|| Error::Input(format!("unknown lemma `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "lowercase")]
pub enum LemmaVerdict {
    Holds,
    Violated(String),
    /// The instance misses a hypothesis.
    Rejected(String),
}

/// One generated instance. `p` and `s` are inscribed in the angle at `a`
/// between the rays towards `b` and `c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "lemma")]
pub enum LemmaInstance {
    L42 { a: Point, b: Point, c: Point, p: Circle, y: Circle },
    C43 { a: Point, b: Point, c: Point, p: Circle, y: Circle },
    /// `near` and `far` are angles about the centre of `s`.
    L44 { a: Point, b: Point, c: Point, s: Circle, near: f64, far: f64 },
    /// `samples` points of the N corner are tested.
    L45 { a: Point, b: Point, c: Point, x: Circle, samples: usize },
    C46 { a: Point, b: Point, c: Point, x: Circle, y: Circle },
}

impl LemmaInstance {
    pub fn kind(&self) -> LemmaKind {
        match self {
            LemmaInstance::L42 { .. } => LemmaKind::L42,
            LemmaInstance::C43 { .. } => LemmaKind::C43,
            LemmaInstance::L44 { .. } => LemmaKind::L44,
            LemmaInstance::L45 { .. } => LemmaKind::L45,
            LemmaInstance::C46 { .. } => LemmaKind::C46,
        }
    }

    fn vertices(&self) -> [Point; 3] {
        match *self {
            LemmaInstance::L42 { a, b, c, .. }
            | LemmaInstance::C43 { a, b, c, .. }
            | LemmaInstance::L44 { a, b, c, .. }
            | LemmaInstance::L45 { a, b, c, .. }
            | LemmaInstance::C46 { a, b, c, .. } => [a, b, c],
        }
    }

    /// The circles of the instance as a scene over its triangle.
    pub fn scene(&self) -> Scene {
        let circles: Vec<(&str, Circle)> = match *self {
            LemmaInstance::L42 { p, y, .. } | LemmaInstance::C43 { p, y, .. } => vec![("p", p), ("y", y)],
            LemmaInstance::L44 { s, .. } => vec![("s", s)],
            LemmaInstance::L45 { x, .. } => vec![("x", x)],
            LemmaInstance::C46 { x, y, .. } => vec![("x", x), ("y", y)],
        };
        Scene::new(circles, super::DEFAULT_TOLERANCE).expect("distinct names").with_triangle(self.vertices())
    }

    /// A random instance satisfying the hypotheses of `kind` up to the
    /// checks done in [`check_lemma`]; `None` when sampling gave up.
    pub fn generate<R: Rng>(kind: LemmaKind, rng: &mut R, margin: f64) -> Option<LemmaInstance> {
        let t = sample_triangle(rng, EPS);
        let (a, b, c) = (t.a, t.b, t.c);
        match kind {
            LemmaKind::L42 => {
                let p = inscribed(&t, rng.gen_range(0.1..1.0));
                let y = near_corner(rng, a, b, c, &p, margin)?;
                Some(LemmaInstance::L42 { a, b, c, p, y })
            }
            LemmaKind::C43 => {
                let p = inscribed(&t, rng.gen_range(0.1..0.95));
                let y = if rng.gen_bool(0.5) {
                    sample_circle(rng, &t, margin)?
                } else {
                    // straddling the chord is the interesting case
                    let (t1, t2) = super::tangent_points(a, &p, EPS).ok()?;
                    let q = t1.lerp(t2, rng.gen_range(-0.2..1.2));
                    let r = t.room_at(q) - margin;
                    if r <= margin {
                        return None;
                    }
                    Circle::new(q, r * rng.gen_range(0.05..1.0))
                };
                Some(LemmaInstance::C43 { a, b, c, p, y })
            }
            LemmaKind::L44 => {
                let s = inscribed(&t, rng.gen_range(0.1..1.0));
                let d = a.dist(s.center);
                let beta = (s.r / d).acos();
                let alpha = (a - s.center).angle();
                let near = alpha + beta * rng.gen_range(-1.0..1.0);
                let far = alpha + std::f64::consts::PI + (std::f64::consts::PI - beta) * rng.gen_range(-1.0..1.0);
                Some(LemmaInstance::L44 { a, b, c, s, near, far })
            }
            LemmaKind::L45 => {
                let x = sample_circle(rng, &t, margin)?;
                Some(LemmaInstance::L45 { a, b, c, x, samples: 1000 })
            }
            LemmaKind::C46 => {
                let x = sample_circle(rng, &t, margin)?;
                let n = tangent_crossing(&t, &x, EPS).ok()?;
                let acn = Triangle::new(a, c, n, EPS).ok()?;
                let y = sample_circle(rng, &acn, margin)?;
                Some(LemmaInstance::C46 { a, b, c, x, y })
            }
        }
    }
}

const EPS: f64 = 1e-9;

/// Disc inscribed in the angle at `t.a`, scaled by `frac` towards `a` from
/// the incircle.
fn inscribed(t: &Triangle, frac: f64) -> Circle {
    let (a, b, c) = (t.a, t.b, t.c);
    let (la, lb, lc) = (b.dist(c), c.dist(a), a.dist(b));
    let incenter = (a * la + b * lb + c * lc) * (1.0 / (la + lb + lc));
    let inradius = t.room_at(incenter);
    Circle::new(a.lerp(incenter, frac), inradius * frac)
}

/// A disc inside the angle at `a` whose centre is near the corner region.
fn near_corner<R: Rng>(rng: &mut R, a: Point, b: Point, c: Point, p: &Circle, margin: f64) -> Option<Circle> {
    let (t1, t2) = super::tangent_points(a, p, EPS).ok()?;
    let o = p.center;
    let (h1, h2) = ((t1 - o).angle(), (t2 - o).angle());
    let mut span = h2 - h1;
    if span < 0.0 {
        span += std::f64::consts::TAU;
    }
    let arc = p.at_angle(h1 + span * rng.gen::<f64>());
    let q = a.lerp(arc, rng.gen::<f64>());
    let jitter = Point::unit(rng.gen_range(0.0..std::f64::consts::TAU)) * (p.r * rng.gen_range(0.0..1.5));
    let center = q + jitter;
    let room = angle_room(a, b, c, center);
    if room <= 2.0 * margin {
        return None;
    }
    Some(Circle::new(center, room * rng.gen_range(0.02..1.0)))
}

/// Distance from `p` to the nearer arm of the angle at `a`, negative
/// outside the angle.
fn angle_room(a: Point, b: Point, c: Point, p: Point) -> f64 {
    let s = (b - a).cross(c - a).signum();
    let d1 = s * Line::through(a, b).side(p);
    let d2 = -s * Line::through(a, c).side(p);
    d1.min(d2)
}

/// Evaluates the conclusion of the instance's lemma. Hypotheses are checked
/// with `margin`; containment conclusions use `eps`.
pub fn check_lemma(instance: &LemmaInstance, margin: f64, eps: f64) -> LemmaVerdict {
    match run(instance, margin, eps) {
        Ok(v) => v,
        Err(e) => LemmaVerdict::Rejected(e.to_string()),
    }
}

fn run(instance: &LemmaInstance, margin: f64, eps: f64) -> Result<LemmaVerdict> {
    use LemmaVerdict::*;
    Ok(match *instance {
        LemmaInstance::L42 { a, b, c, p, y } => {
            if angle_room(a, b, c, y.center) < y.r + margin {
                return Ok(Rejected("y is not inside the angle".into()));
            }
            let w1 = Region::corner(RegionKind::W1, a, p, None, eps);
            if !super::meets_disc(&w1, &y, margin) {
                return Ok(Rejected("y does not meet the corner".into()));
            }
            if disc_in_hull(&y, &[p, Circle::point(a)], eps)? {
                Holds
            } else {
                Violated("y is not in the hull of p and A".into())
            }
        }
        LemmaInstance::C43 { a, b, c, p, y } => {
            let tri = [a, b, c];
            if !disc_in_triangle(&y, tri, eps) {
                return Ok(Rejected("y is not inside the triangle".into()));
            }
            let w1 = Region::corner(RegionKind::W1, a, p, Some(tri), eps);
            let w2 = w1.complement();
            if super::meets_disc(&w1, &y, margin) && super::meets_disc(&w2, &y, margin) {
                Violated("y meets both regions".into())
            } else {
                Holds
            }
        }
        LemmaInstance::L44 { a, b, c, s, near, far } => {
            let tangent = |th: f64| {
                let q = s.at_angle(th);
                Line { point: q, dir: Point::unit(th).perp() }
            };
            let Some(o) = tangent(near).intersect(&tangent(far), margin) else {
                return Ok(Rejected("tangent lines are parallel".into()));
            };
            if angle_room(a, b, c, o) > margin {
                Violated(format!("tangents cross at ({}, {}) inside the angle", o.x, o.y))
            } else {
                Holds
            }
        }
        LemmaInstance::L45 { a, b, c, x, samples } => {
            let t = Triangle::new(a, b, c, eps)?;
            let n = tangent_crossing(&t, &x, eps)?;
            let (t1, t2) = super::tangent_points(n, &x, eps)?;
            let hull = [x, Circle::point(t.b)];
            let o = x.center;
            let (h1, h2) = ((t1 - o).angle(), (t2 - o).angle());
            let mut span = h2 - h1;
            if span < 0.0 {
                span += std::f64::consts::TAU;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(n.x.to_bits() ^ n.y.to_bits().rotate_left(17));
            // every point of the corner is on a segment from N to the near arc
            for i in 0..samples.max(1) {
                let q = if i == 0 {
                    n
                } else {
                    n.lerp(x.at_angle(h1 + span * rng.gen::<f64>()), rng.gen::<f64>())
                };
                if !point_in_hull(q, &hull, eps)? {
                    return Ok(Violated(format!("corner point ({}, {}) is outside the hull of x and B", q.x, q.y)));
                }
            }
            Holds
        }
        LemmaInstance::C46 { a, b, c, x, y } => {
            let t = Triangle::new(a, b, c, eps)?;
            for d in [&x, &y] {
                if !t.contains_disc(d, margin) {
                    return Ok(Rejected("a circle is not inside the triangle".into()));
                }
            }
            let n = tangent_crossing(&t, &x, eps)?;
            if !disc_in_triangle(&y, [t.a, t.c, n], -margin) {
                return Ok(Rejected("y is not inside ACN".into()));
            }
            let cond = sufficient_conditions(&t, &x, &y, margin)?;
            if !cond.any() {
                return Ok(Rejected("no endpoint condition holds".into()));
            }
            if disc_in_hull(&y, &[x, Circle::point(t.a), Circle::point(t.c)], eps)? {
                Holds
            } else {
                Violated(format!("conditions {:?} hold but y is not in the hull of x, A and C", cond.numbers()))
            }
        }
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaFailure {
    pub trial: u64,
    pub reason: String,
    pub instance: LemmaInstance,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub kind: LemmaKind,
    pub seed: u64,
    /// Instances that satisfied the hypotheses.
    pub accepted: u64,
    /// Draws that failed to sample or missed a hypothesis.
    pub rejected: u64,
    pub failures: Vec<LemmaFailure>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const BATCH: u64 = 4096;

/// Draws instances until `instances` are accepted or `50 * instances`
/// draws were made. Trial `i` uses its own generator seeded by `seed ^ i`,
/// and trials are consumed in index order, so the report does not depend on
/// the thread count.
pub fn lemma_campaign(kind: LemmaKind, instances: u64, seed: u64, margin: f64, eps: f64) -> LemmaReport {
    let mut report = LemmaReport { kind, seed, accepted: 0, rejected: 0, failures: Vec::new() };
    let cap = instances.saturating_mul(50);
    let mut start = 0;
    while report.accepted < instances && start < cap {
        let end = (start + BATCH).min(cap);
        let verdicts: Vec<(u64, Option<LemmaInstance>, LemmaVerdict)> = (start..end)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i);
                match LemmaInstance::generate(kind, &mut rng, margin) {
                    Some(inst) => {
                        let v = check_lemma(&inst, margin, eps);
                        (i, Some(inst), v)
                    }
                    None => (i, None, LemmaVerdict::Rejected("sampling gave up".into())),
                }
            })
            .collect();
        for (i, inst, v) in verdicts {
            if report.accepted >= instances {
                break;
            }
            match v {
                LemmaVerdict::Rejected(_) => report.rejected += 1,
                LemmaVerdict::Holds => report.accepted += 1,
                LemmaVerdict::Violated(reason) => {
                    report.accepted += 1;
                    report.failures.push(LemmaFailure { trial: i, reason, instance: inst.expect("generated") });
                }
            }
        }
        start = end;
    }
    report
}
