use super::{class_of, config_code, ClassId, ConfigCode, Triangle};
use crate::disc::{tangent_points, Circle, Point};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

const EPS: f64 = 1e-9;
const MIN_AREA: f64 = 0.1;
const ATTEMPTS: usize = 64;

/// Triangle with vertices uniform in the unit box and area at least 0.1.
pub fn sample_triangle<R: Rng>(rng: &mut R, eps: f64) -> Triangle {
    loop {
        let v = [0, 1, 2].map(|_| Point::new(rng.gen(), rng.gen()));
        if let Ok(t) = Triangle::from_array(v, eps) {
            if t.area() >= MIN_AREA {
                return t;
            }
        }
    }
}

fn uniform_in<R: Rng>(rng: &mut R, t: &Triangle) -> Point {
    let (mut u, mut v): (f64, f64) = (rng.gen(), rng.gen());
    if u + v > 1.0 {
        (u, v) = (1.0 - u, 1.0 - v);
    }
    t.a + (t.b - t.a) * u + (t.c - t.a) * v
}

/// A disc strictly inside `t`, every side at least `margin` away.
pub fn sample_circle<R: Rng>(rng: &mut R, t: &Triangle, margin: f64) -> Option<Circle> {
    for _ in 0..ATTEMPTS {
        let c = uniform_in(rng, t);
        let room = t.room_at(c) - margin;
        if room > margin {
            return Some(Circle::new(c, room * rng.gen_range(0.02..1.0)));
        }
    }
    None
}

fn jitter<R: Rng>(rng: &mut R, s: f64) -> Point {
    Point::new(rng.gen_range(-s..s), rng.gen_range(-s..s))
}

/// How the second circle is placed relative to the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplerMode {
    /// Both uniform in the triangle.
    Independent,
    /// Centres within a couple of radii.
    Near,
    /// One circle inside the other.
    Nested,
    /// Slightly moved and rescaled copy.
    Similar,
}

impl SamplerMode {
    pub const ALL: [SamplerMode; 4] = [SamplerMode::Independent, SamplerMode::Near, SamplerMode::Nested, SamplerMode::Similar];

    pub fn pick<R: Rng>(rng: &mut R) -> SamplerMode {
        SamplerMode::ALL[rng.gen_range(0..4)]
    }
}

pub fn sample_pair<R: Rng>(rng: &mut R, t: &Triangle, mode: SamplerMode, margin: f64) -> Option<(Circle, Circle)> {
    let x = sample_circle(rng, t, margin)?;
    if mode == SamplerMode::Independent {
        return Some((x, sample_circle(rng, t, margin)?));
    }
    for _ in 0..ATTEMPTS {
        let y = match mode {
            SamplerMode::Near => Circle::new(x.center + jitter(rng, 2.0 * x.r), x.r * rng.gen_range(0.2..1.5)),
            SamplerMode::Similar => Circle::new(x.center + jitter(rng, 0.3 * x.r), x.r * rng.gen_range(0.8..1.2)),
            SamplerMode::Nested => {
                let off = Point::unit(rng.gen_range(0.0..std::f64::consts::TAU)) * (x.r * rng.gen_range(0.0..0.9));
                let room = x.r - off.norm();
                Circle::new(x.center + off, room * rng.gen_range(0.05..0.95))
            }
            SamplerMode::Independent => unreachable!(),
        };
        if y.r > margin && t.contains_disc(&y, margin) {
            return Some(if mode == SamplerMode::Nested && rng.gen_bool(0.5) { (y, x) } else { (x, y) });
        }
    }
    None
}

/// Two circles sharing a tangent line through a vertex, on the same side of
/// it or on opposite sides.
pub fn coincident_scene<R: Rng>(rng: &mut R, t: &Triangle, same_side: bool, margin: f64) -> Option<(Circle, Circle)> {
    let x = sample_circle(rng, t, margin)?;
    let v = t.vertices()[rng.gen_range(0..3)];
    let (t1, t2) = tangent_points(v, &x, EPS).ok()?;
    let touch = if rng.gen_bool(0.5) { t1 } else { t2 };
    let len = touch.dist(v);
    let d = (touch - v) * (1.0 / len);
    let n = (x.center - touch) * (1.0 / x.r);
    for _ in 0..ATTEMPTS {
        let s = len * rng.gen_range(0.3..2.5);
        let r = x.r * rng.gen_range(0.1..1.2);
        let side = if same_side { 1.0 } else { -1.0 };
        let y = Circle::new(v + d * s + n * (side * r), r);
        if r > margin && t.contains_disc(&y, margin) && (s - len).abs() > margin {
            return Some((x, y));
        }
    }
    None
}

/// A triangle with two circles and their configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Realization {
    pub triangle: Triangle,
    pub x: Circle,
    pub y: Circle,
    pub code: ConfigCode,
    pub class: ClassId,
    /// Index of the trial that produced it.
    pub trial: u64,
}

impl Realization {
    /// The same scene relabelled (rotating vertex names, exchanging the
    /// circles) so that its code is `target`, if `target` is in its class.
    pub fn relabelled(&self, target: ConfigCode) -> Option<Realization> {
        for swap in [false, true] {
            let (x, y) = if swap { (self.y, self.x) } else { (self.x, self.y) };
            let mut t = self.triangle;
            for _ in 0..3 {
                if config_code(&t, &x, &y, EPS).ok() == Some(target) {
                    return Some(Realization { triangle: t, x, y, code: target, ..self.clone() });
                }
                t = t.rotated();
            }
        }
        None
    }

    pub fn scene(&self) -> crate::disc::Scene {
        crate::disc::Scene::new([("x", self.x), ("y", self.y)], EPS)
            .expect("two named circles")
            .with_triangle(self.triangle.vertices())
    }
}

fn trial_rng(seed: u64, i: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ i)
}

/// One sampled configuration for trial `i`, if the sampler and the coding
/// both succeed.
fn trial(seed: u64, i: u64, margin: f64) -> Option<Realization> {
    let mut rng = trial_rng(seed, i);
    let t = sample_triangle(&mut rng, EPS);
    let mode = SamplerMode::pick(&mut rng);
    let (x, y) = sample_pair(&mut rng, &t, mode, margin)?;
    let code = config_code(&t, &x, &y, EPS).ok()?;
    Some(Realization { triangle: t, x, y, code, class: class_of(code), trial: i })
}

/// Random search for a scene in `class`; `None` when the budget runs out.
/// The result is the lowest-indexed hit, independent of thread count.
pub fn search_realization(class: ClassId, budget: u64, seed: u64) -> Option<Realization> {
    search_realization_with(class, budget, seed, 1e-3, |_| true)
}

/// As [`search_realization`], also requiring `accept` on the hit.
pub fn search_realization_with<F>(class: ClassId, budget: u64, seed: u64, margin: f64, accept: F) -> Option<Realization>
where
    F: Fn(&Realization) -> bool + Sync,
{
    (0..budget)
        .into_par_iter()
        .find_map_first(|i| trial(seed, i, margin).filter(|r| r.class == class && accept(r)))
}

/// A scene with exactly this configuration code.
pub fn search_configuration(code: ConfigCode, budget: u64, seed: u64) -> Option<Realization> {
    search_realization(class_of(code), budget, seed)?.relabelled(code)
}
