use crate::closure::{
    carousel_check, closure_from_implications, convex_dimension_with_budget, counterexample_geometries,
    embedding_search, enumerate_convex_geometries, verify_axioms, AxiomMode, CarouselCounterexample, CarouselRule,
    CarouselVerdict, ClosedFamily, ConvexDimensionResult, EmbeddingMode, EmbeddingOutcome, GroundSet,
    Implication, LatticeEmbedding,
};
use crate::disc::{disc_in_hull, Circle, Scene};
use crate::error::Result;
use crate::triangle::{search_realization_with, ClassId, Realization};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Duration;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub g_closed_sets: usize,
    pub g_is_convex_geometry: bool,
    pub g_weak_2x3: CarouselVerdict,
    pub g_two_carousel: CarouselVerdict,
    pub gp_weak_2x3: CarouselVerdict,
    pub gp_two_carousel: CarouselVerdict,
    pub cdim: ConvexDimensionResult,
    /// Whether the expected witness (x, y, {a0, a1, a2}) was reported for
    /// both failing rules on G.
    pub expected_witness: bool,
    pub passed: bool,
}

fn is_expected(c: &Option<CarouselCounterexample>) -> bool {
    c.as_ref().is_some_and(|c| {
        let mut pair = [c.x.as_str(), c.y.as_str()];
        pair.sort();
        pair == ["x", "y"] && c.s == ["a0", "a1", "a2"]
    })
}

/// The five-element geometries G' and G: G is a convex geometry failing
/// both the weak 2×3 and the 2-carousel rule, G' satisfies the weak 2×3
/// rule, and cdim(G) is computed within `cdim_budget`.
pub fn counterexample_suite(cdim_budget: Option<Duration>) -> Result<CounterexampleReport> {
    let (gp, g) = counterexample_geometries();
    let g_is_convex_geometry = verify_axioms(&g, AxiomMode::ConvexGeometry).holds;
    let g_weak_2x3 = carousel_check(&g, CarouselRule::Weak2x3)?;
    let g_two_carousel = carousel_check(&g, CarouselRule::NCarousel(2))?;
    let gp_weak_2x3 = carousel_check(&gp, CarouselRule::Weak2x3)?;
    let gp_two_carousel = carousel_check(&gp, CarouselRule::NCarousel(2))?;
    let cdim = convex_dimension_with_budget(&g, 7, cdim_budget)?;
    let expected_witness = is_expected(&g_weak_2x3.counterexample) && is_expected(&g_two_carousel.counterexample);
    let passed = g_is_convex_geometry
        && g.len() == 29
        && !g_weak_2x3.holds
        && !g_two_carousel.holds
        && gp_weak_2x3.holds
        && expected_witness;
    Ok(CounterexampleReport {
        g_closed_sets: g.len(),
        g_is_convex_geometry,
        g_weak_2x3,
        g_two_carousel,
        gp_weak_2x3,
        gp_two_carousel,
        cdim,
        expected_witness,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n: usize,
    pub geometries: usize,
    /// Count from a separate brute-force anti-exchange enumeration.
    pub second_oracle: usize,
    /// Closed-set lists of geometries failing the weak 2×3 rule.
    pub failures: Vec<Vec<Vec<String>>>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.geometries == self.second_oracle
    }
}

/// Every convex geometry on `n <= 4` elements against the weak 2×3 rule.
pub fn small_geometry_sweep(n: usize) -> Result<SweepReport> {
    let all = enumerate_convex_geometries(n)?;
    let mut failures = Vec::new();
    for g in &all {
        if !carousel_check(g, CarouselRule::Weak2x3)?.holds {
            failures.push(g.named_sets());
        }
    }
    Ok(SweepReport { n, geometries: all.len(), second_oracle: count_anti_exchange(n), failures })
}

/// Families containing ∅ and the ground set, closed under intersection,
/// whose closure has the anti-exchange property.
fn count_anti_exchange(n: usize) -> usize {
    let full = (1u16 << n) - 1;
    let middle: Vec<u16> = (1..full).collect();
    let mut count = 0;
    for pick in 0u32..(1u32 << middle.len()) {
        let mut member = vec![false; 1 << n];
        member[0] = true;
        member[full as usize] = true;
        for (i, &s) in middle.iter().enumerate() {
            if pick & (1 << i) != 0 {
                member[s as usize] = true;
            }
        }
        let sets: Vec<u16> = (0..=full).filter(|&s| member[s as usize]).collect();
        if !sets.iter().all(|&a| sets.iter().all(|&b| member[(a & b) as usize])) {
            continue;
        }
        let close = |y: u16| sets.iter().filter(|&&s| s & y == y).fold(full, |acc, &s| acc & s);
        let anti = sets.iter().all(|&k| {
            (0..n).all(|x| {
                (0..n).all(|z| {
                    let (bx, bz) = (1u16 << x, 1u16 << z);
                    x == z || k & (bx | bz) != 0 || close(k | bx) & bz == 0 || close(k | bz) & bx == 0
                })
            })
        });
        if anti {
            count += 1;
        }
    }
    count
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SearchOutcome<T> {
    Found(T),
    BudgetExhausted { trials: u64 },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            SearchOutcome::BudgetExhausted { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassThreeScene {
    pub realization: Realization,
    /// x, y and the vertices A, B, C as point-circles.
    pub scene: Scene,
    pub weak_2x3: CarouselVerdict,
    pub two_carousel: CarouselVerdict,
    /// x lies in the hull of y and no two vertices.
    pub x_unrecoverable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImplicationScene {
    pub scene: Scene,
    pub closed_sets: usize,
    pub isomorphism: LatticeEmbedding,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationReport {
    pub class_three: SearchOutcome<ClassThreeScene>,
    pub implication: SearchOutcome<ImplicationScene>,
}

impl RepresentationReport {
    pub fn passed(&self) -> bool {
        self.class_three.found().is_some() && self.implication.found().is_some()
    }
}

const EPS: f64 = 1e-9;

fn five_object_scene(r: &Realization) -> Scene {
    let [a, b, c] = r.triangle.point_circles();
    Scene::new([("x", r.x), ("y", r.y), ("A", a), ("B", b), ("C", c)], EPS).expect("distinct names")
}

fn x_unrecoverable(r: &Realization) -> bool {
    let [a, b, c] = r.triangle.point_circles();
    [[a, b], [b, c], [a, c]]
        .iter()
        .all(|[u, v]| !disc_in_hull(&r.x, &[r.y, *u, *v], EPS).unwrap_or(true))
}

fn class_three_check(r: &Realization) -> Option<ClassThreeScene> {
    if !x_unrecoverable(r) {
        return None;
    }
    let scene = five_object_scene(r);
    let fam = scene.alignment().ok()?;
    let weak_2x3 = carousel_check(&fam, CarouselRule::Weak2x3).ok()?;
    let two_carousel = carousel_check(&fam, CarouselRule::NCarousel(2)).ok()?;
    (weak_2x3.holds && !two_carousel.holds).then(|| ClassThreeScene {
        realization: r.clone(),
        scene,
        weak_2x3,
        two_carousel,
        x_unrecoverable: true,
    })
}

/// The geometry of the single implication ab → xy on {a, b, x, y}.
pub fn implication_geometry() -> ClosedFamily {
    let ground = GroundSet::new(["a", "b", "x", "y"]).expect("distinct names");
    let imp = Implication::from_names(&ground, &["a", "b"], &["x", "y"]).expect("known names");
    closure_from_implications(ground, &[imp]).expect("valid implication").into_family()
}

/// a and b on a horizontal line, x above and y below the line between them.
fn implication_candidate(seed: u64, i: u64) -> Scene {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i);
    let a = Circle::at(-1.0, 0.0, rng.gen_range(0.1..0.5));
    let b = Circle::at(1.0, 0.0, rng.gen_range(0.1..0.5));
    let x = Circle::at(rng.gen_range(-0.6..0.6), rng.gen_range(0.0..0.4), rng.gen_range(0.02..0.3));
    let y = Circle::at(rng.gen_range(-0.6..0.6), rng.gen_range(-0.4..0.0), rng.gen_range(0.02..0.3));
    Scene::new([("a", a), ("b", b), ("x", x), ("y", y)], EPS).expect("distinct names")
}

/// A class S3 scene whose five-object alignment passes the weak 2×3 rule
/// but fails the 2-carousel rule with x unrecoverable, and a four-circle
/// scene isomorphic to the ab → xy geometry. Each search draws at most
/// `budget` candidates.
pub fn representation_checks(budget: u64, seed: u64) -> Result<RepresentationReport> {
    let s3 = ClassId::new(3)?;
    let class_three = match search_realization_with(s3, budget, seed, 1e-3, |r| class_three_check(r).is_some()) {
        Some(r) => SearchOutcome::Found(class_three_check(&r).expect("accepted above")),
        None => SearchOutcome::BudgetExhausted { trials: budget },
    };

    let target = implication_geometry();
    let hit = (0..budget).into_par_iter().find_map_first(|i| {
        let scene = implication_candidate(seed, i);
        let fam = scene.alignment().ok()?;
        (fam.sets() == target.sets()).then_some((scene, fam))
    });
    let implication = match hit {
        Some((scene, fam)) => match embedding_search(&fam, &target, EmbeddingMode::Strong, 1_000_000)? {
            EmbeddingOutcome::Found(iso) => {
                SearchOutcome::Found(ImplicationScene { scene, closed_sets: fam.len(), isomorphism: iso })
            }
            _ => SearchOutcome::BudgetExhausted { trials: budget },
        },
        None => SearchOutcome::BudgetExhausted { trials: budget },
    };
    Ok(RepresentationReport { class_three, implication })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexample_suite_passes() {
        let r = counterexample_suite(Some(Duration::from_secs(60))).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.g_closed_sets, 29);
        assert!(r.gp_two_carousel.holds);
        assert_eq!(r.cdim.k, 6);
    }

    #[test]
    fn sweeps_agree_with_second_oracle() {
        for n in 1..=3 {
            let r = small_geometry_sweep(n).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(small_geometry_sweep(1).unwrap().geometries, 1);
        assert_eq!(small_geometry_sweep(2).unwrap().geometries, 3);
        assert_eq!(small_geometry_sweep(3).unwrap().geometries, 22);
    }

    #[test]
    fn implication_geometry_has_thirteen_sets() {
        let g = implication_geometry();
        assert_eq!(g.len(), 13);
        assert!(verify_axioms(&g, AxiomMode::ConvexGeometry).holds);
    }

    #[test]
    fn representation_searches_succeed() {
        let r = representation_checks(200_000, 1).unwrap();
        let three = r.class_three.found().expect("class S3 scene");
        assert_eq!(three.two_carousel.counterexample.as_ref().unwrap().x, "x");
        let imp = r.implication.found().expect("ab -> xy scene");
        assert_eq!(imp.closed_sets, 13);
    }
}
