use super::{FuzzParams, FuzzReport, Violation};
use crate::closure::{verify_axioms, AxiomMode};
use crate::disc::{disc_in_hull, point_in_hull, tangent_triangle, Circle, Point, Scene};
use crate::error::{Error, Result};
use crate::triangle::{
    class_of, coincident_scene, config_code, sample_pair, sample_triangle, weak_carousel_triangle, SamplerMode,
    Triangle,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

fn rng_for(seed: u64, i: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ i)
}

fn single(p: FuzzParams) -> FuzzReport {
    let mut r = FuzzReport::empty(p);
    r.counts.trials_run = 1;
    r
}

/// Every eighth trial places the circles on a common tangent through a
/// vertex.
const COINCIDENT_EVERY: u64 = 8;

/// Two circles in a random triangle: the weak carousel property must hold,
/// and the configuration class is recorded.
pub fn fuzz_theorem1(p: FuzzParams) -> Result<FuzzReport> {
    p.validate()?;
    Ok((0..p.trials)
        .into_par_iter()
        .map(|i| theorem1_trial(p, i))
        .reduce(|| FuzzReport::empty(p), FuzzReport::merge))
}

fn theorem1_trial(p: FuzzParams, i: u64) -> FuzzReport {
    let mut out = single(p);
    let mut rng = rng_for(p.seed, i);
    let t = sample_triangle(&mut rng, p.tolerance);
    let pair = if i % COINCIDENT_EVERY == COINCIDENT_EVERY - 1 {
        let same = rng.gen_bool(0.5);
        coincident_scene(&mut rng, &t, same, p.margin)
    } else {
        let mode = SamplerMode::pick(&mut rng);
        sample_pair(&mut rng, &t, mode, p.margin)
    };
    let Some((x, y)) = pair else {
        out.counts.rejected_degenerate = 1;
        return out;
    };
    let code = match config_code(&t, &x, &y, p.tolerance) {
        Ok(c) => Some(c),
        Err(Error::CoincidentEndpoints(_)) => None,
        Err(_) => {
            out.counts.rejected_degenerate = 1;
            return out;
        }
    };
    let verdict = match weak_carousel_triangle(&x, &y, &t, p.tolerance) {
        Ok(v) => v,
        Err(_) => {
            out.counts.rejected_degenerate = 1;
            return out;
        }
    };
    out.counts.accepted = 1;
    match code {
        Some(c) => {
            out.histogram.insert(class_of(c), 1);
        }
        None => out.counts.coincident = 1,
    }
    if !verdict.holds {
        let scene = Scene::new([("x", x), ("y", y)], p.tolerance).expect("two names").with_triangle(t.vertices());
        let reason = match code {
            Some(c) => format!("weak carousel fails for {c}"),
            None => "weak carousel fails on a coincident scene".into(),
        };
        out.violations.push(Violation { trial: i, reason, scene });
    }
    out
}

const NAMES: [&str; 5] = ["a", "b", "c", "x", "y"];
const PROBES: usize = 32;
const BATCH: u64 = 2048;

/// Five circles with x and y in the hull of a, b and c: x must lie in the
/// hull of y and two of a, b, c, or y in the hull of x and two of them.
///
/// Here `trials` is the number of accepted scenes to accumulate; at most
/// `50 * trials` scenes are drawn. When the outer tangent triangle of a, b
/// and c exists, its decomposition (triangle minus three corners) is also
/// compared with hull membership on random probes.
pub fn fuzz_theorem2(p: FuzzParams) -> Result<FuzzReport> {
    p.validate()?;
    let cap = p.trials.saturating_mul(50);
    let mut report = FuzzReport::empty(p);
    let mut start = 0;
    while report.counts.accepted < p.trials && start < cap {
        let end = (start + BATCH).min(cap);
        let batch: Vec<FuzzReport> = (start..end).into_par_iter().map(|i| theorem2_trial(p, i)).collect();
        for r in batch {
            if report.counts.accepted >= p.trials {
                break;
            }
            report = report.merge(r);
        }
        start = end;
    }
    Ok(report)
}

fn random_disc<R: Rng>(rng: &mut R) -> Circle {
    Circle::at(rng.gen(), rng.gen(), rng.gen_range(0.02..0.25))
}

/// Largest radius (to 1e-6 relative) of a disc at `c` inside the hull,
/// or `None` when the centre is outside.
fn max_radius(c: Point, hull: &[Circle], eps: f64) -> Option<f64> {
    if !point_in_hull(c, hull, eps).ok()? {
        return None;
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if disc_in_hull(&Circle::new(c, mid), hull, eps).ok()? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// A disc deep inside the hull: centre in the triangle of the centres (or,
/// half the time, anywhere in the bounding box of the discs), radius a
/// random fraction of the local slack.
fn inner_disc<R: Rng>(rng: &mut R, abc: &[Circle; 3], margin: f64, eps: f64) -> Option<Circle> {
    let center = if rng.gen_bool(0.5) {
        let (mut u, mut v): (f64, f64) = (rng.gen(), rng.gen());
        if u + v > 1.0 {
            (u, v) = (1.0 - u, 1.0 - v);
        }
        let (a, b, c) = (abc[0].center, abc[1].center, abc[2].center);
        a + (b - a) * u + (c - a) * v
    } else {
        let lo = |f: fn(&Circle) -> f64| abc.iter().map(f).fold(f64::INFINITY, f64::min);
        let hi = |f: fn(&Circle) -> f64| abc.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
        Point::new(
            rng.gen_range(lo(|d| d.center.x - d.r)..hi(|d| d.center.x + d.r)),
            rng.gen_range(lo(|d| d.center.y - d.r)..hi(|d| d.center.y + d.r)),
        )
    };
    let room = max_radius(center, abc, eps)? - margin;
    if room <= 0.0 {
        return None;
    }
    Some(Circle::new(center, room * rng.gen_range(0.0..1.0)))
}

fn theorem2_trial(p: FuzzParams, i: u64) -> FuzzReport {
    let mut out = single(p);
    let mut rng = rng_for(p.seed, i);
    let eps = p.tolerance;
    let mut abc = [random_disc(&mut rng), random_disc(&mut rng), random_disc(&mut rng)];
    if rng.gen_ratio(1, 5) {
        // c between a and b
        let m = abc[0].center.lerp(abc[1].center, rng.gen_range(0.2..0.8));
        abc[2] = Circle::new(m, abc[0].r.min(abc[1].r) * rng.gen_range(0.1..0.9));
    }
    if Triangle::new(abc[0].center, abc[1].center, abc[2].center, eps).is_err() {
        out.counts.rejected_degenerate = 1;
        return out;
    }
    let (Some(x), Some(y)) = (inner_disc(&mut rng, &abc, p.margin, eps), inner_disc(&mut rng, &abc, p.margin, eps))
    else {
        out.counts.rejected_degenerate = 1;
        return out;
    };
    // membership is re-checked with the margin
    let deep = |d: &Circle| disc_in_hull(&d.grown(p.margin), &abc, eps).unwrap_or(false);
    if !deep(&x) || !deep(&y) || x.center.dist(y.center) + (x.r - y.r).abs() <= p.margin {
        out.counts.rejected_degenerate = 1;
        return out;
    }
    out.counts.accepted = 1;
    let scene = || {
        Scene::new(NAMES.iter().copied().zip([abc[0], abc[1], abc[2], x, y]), eps).expect("distinct names")
    };
    let shortcut = (0..3).any(|k| {
        let others = [abc[(k + 1) % 3], abc[(k + 2) % 3]];
        disc_in_hull(&abc[k], &others, eps).unwrap_or(false)
    });
    if shortcut {
        out.counts.hull_shortcut = 1;
    }
    let pairs = [(0, 1), (1, 2), (0, 2)];
    let holds = pairs.iter().any(|&(u, v)| {
        disc_in_hull(&x, &[y, abc[u], abc[v]], eps).unwrap_or(false)
            || disc_in_hull(&y, &[x, abc[u], abc[v]], eps).unwrap_or(false)
    });
    if !holds {
        out.violations.push(Violation {
            trial: i,
            reason: "neither x nor y is recovered from the other and two of a, b, c".into(),
            scene: scene(),
        });
        return out;
    }
    if let Ok(tt) = tangent_triangle(&abc[0], &abc[1], &abc[2], eps) {
        let [lo, hi] = bounding_box(&tt.vertices);
        for _ in 0..PROBES {
            let q = Point::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
            let inside = point_in_hull(q, &abc, -p.margin).unwrap_or(false);
            let outside = !point_in_hull(q, &abc, p.margin).unwrap_or(true);
            let claimed = tt.hull_contains(q, eps);
            if (inside && !claimed) || (outside && claimed) {
                out.violations.push(Violation {
                    trial: i,
                    reason: format!("tangent-triangle decomposition disagrees at ({}, {})", q.x, q.y),
                    scene: scene(),
                });
                break;
            }
        }
    }
    out
}

fn bounding_box(v: &[Point; 3]) -> [Point; 2] {
    let lo = Point::new(v.iter().map(|p| p.x).fold(f64::INFINITY, f64::min), v.iter().map(|p| p.y).fold(f64::INFINITY, f64::min));
    let hi = Point::new(
        v.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max),
        v.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max),
    );
    [lo, hi]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlignmentReport {
    pub trials: u64,
    pub seed: u64,
    /// Scenes whose closed sets fail the convex-geometry axioms.
    pub failures: Vec<Scene>,
}

/// Random scenes of 2 to 6 circles; the `ch_c`-closed sets of each must
/// form a convex geometry.
pub fn alignment_axioms_campaign(trials: u64, seed: u64, tolerance: f64) -> Result<AlignmentReport> {
    let failures: Vec<Option<Scene>> = (0..trials)
        .into_par_iter()
        .map(|i| -> Result<Option<Scene>> {
            let mut rng = rng_for(seed, i);
            let n = rng.gen_range(2..=6);
            let circles = (0..n).map(|k| (format!("c{k}"), random_disc(&mut rng)));
            let scene = Scene::new(circles, tolerance)?;
            let fam = scene.alignment()?;
            let ok = verify_axioms(&fam, AxiomMode::ConvexGeometry).holds
                && verify_axioms(&fam, AxiomMode::AntiExchange).holds;
            Ok((!ok).then_some(scene))
        })
        .collect::<Result<_>>()?;
    Ok(AlignmentReport { trials, seed, failures: failures.into_iter().flatten().collect() })
}
