use super::{verify_axioms, AxiomMode, ClosedFamily, ElementSet, FiniteClosureSystem};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", content = "n", rename_all = "kebab-case")]
pub enum CarouselRule {
    /// x, y ∈ φ(S) implies x ∈ φ(y, a1..an) and y ∈ φ(x, b1..bn), ai, bi ∈ S.
    NCarousel(usize),
    /// x, y ∈ φ(S) implies x ∈ φ(y, a1..an) or y ∈ φ(x, a1..an).
    WeakNCarousel(usize),
    /// The weak 2-carousel rule restricted to |S| = 3.
    Weak2x3,
}

impl CarouselRule {
    fn arity(self) -> usize {
        match self {
            CarouselRule::NCarousel(n) | CarouselRule::WeakNCarousel(n) => n,
            CarouselRule::Weak2x3 => 2,
        }
    }

    fn weak(self) -> bool {
        !matches!(self, CarouselRule::NCarousel(_))
    }

    fn set_size(self) -> Option<usize> {
        match self {
            CarouselRule::Weak2x3 => Some(3),
            _ => None,
        }
    }
}

/// An instance of the rule together with the tuple that settles it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarouselWitness {
    pub x: String,
    pub y: String,
    pub s: Vec<String>,
    /// The closure of `y` and `tuple` contains `x`.
    pub tuple: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateClosure {
    pub tuple: Vec<String>,
    pub closure_with_y: Vec<String>,
    pub closure_with_x: Vec<String>,
}

/// A failing instance: `x` is not in the closure of `y` with any admissible
/// tuple from `s` (and for weak rules, neither is `y` with `x`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarouselCounterexample {
    pub x: String,
    pub y: String,
    pub s: Vec<String>,
    pub candidates: Vec<CandidateClosure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarouselVerdict {
    pub rule: CarouselRule,
    pub holds: bool,
    pub instances_checked: u64,
    /// First non-trivial instance (x, y ∉ S) and how it is covered; only on
    /// passing verdicts.
    pub witness: Option<CarouselWitness>,
    pub counterexample: Option<CarouselCounterexample>,
}

pub fn carousel_check(g: &ClosedFamily, rule: CarouselRule) -> Result<CarouselVerdict> {
    let n = rule.arity();
    if n < 1 {
        return Err(Error::CarouselArity);
    }
    let report = verify_axioms(g, AxiomMode::ConvexGeometry);
    if !report.holds {
        return Err(Error::NotConvexGeometry(format!("{:?}", report.violation)));
    }
    let sys = FiniteClosureSystem::new(g.clone())?;
    let ground = sys.ground();
    let size = ground.len();

    let mut subsets: Vec<ElementSet> = (0..(1u32 << size))
        .map(|m| ElementSet(m as u16))
        .filter(|s| rule.set_size().is_none_or(|k| s.len() == k))
        .collect();
    subsets.sort_by_key(|s| s.order_key());

    let mut checked = 0u64;
    let mut witness = None;
    for s in subsets {
        let closed = sys.closure_unchecked(s);
        let tuples = tuples_of(s, n.min(s.len()));
        let members: Vec<usize> = closed.iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                checked += 1;
                let x_from_y = tuples.iter().find(|&&t| sys.closure_unchecked(t.with(y)).contains(x));
                let y_from_x = tuples.iter().find(|&&t| sys.closure_unchecked(t.with(x)).contains(y));
                let ok = if rule.weak() {
                    x_from_y.is_some() || y_from_x.is_some()
                } else {
                    x_from_y.is_some() && y_from_x.is_some()
                };
                if !ok {
                    // report the element that cannot be recovered first
                    let (bad, other) = if x_from_y.is_none() { (x, y) } else { (y, x) };
                    let candidates = tuples
                        .iter()
                        .map(|&t| CandidateClosure {
                            tuple: ground.names_of(t),
                            closure_with_y: ground.names_of(sys.closure_unchecked(t.with(other))),
                            closure_with_x: ground.names_of(sys.closure_unchecked(t.with(bad))),
                        })
                        .collect();
                    return Ok(CarouselVerdict {
                        rule,
                        holds: false,
                        instances_checked: checked,
                        witness: None,
                        counterexample: Some(CarouselCounterexample {
                            x: ground.name(bad).to_string(),
                            y: ground.name(other).to_string(),
                            s: ground.names_of(s),
                            candidates,
                        }),
                    });
                }
                if witness.is_none() && !s.contains(x) && !s.contains(y) {
                    let (a, b, t) = match (x_from_y, y_from_x) {
                        (Some(t), _) => (x, y, *t),
                        (None, Some(t)) => (y, x, *t),
                        (None, None) => unreachable!(),
                    };
                    witness = Some(CarouselWitness {
                        x: ground.name(a).to_string(),
                        y: ground.name(b).to_string(),
                        s: ground.names_of(s),
                        tuple: ground.names_of(t),
                    });
                }
            }
        }
    }
    Ok(CarouselVerdict { rule, holds: true, instances_checked: checked, witness, counterexample: None })
}

/// Subsets of `s` with exactly `k` elements. Larger tuples only enlarge the
/// closure, so shorter ones never need to be tried when k ≤ |s|.
fn tuples_of(s: ElementSet, k: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    let mut sub = s.0;
    loop {
        if sub.count_ones() as usize == k {
            out.push(ElementSet(sub));
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & s.0;
    }
    out.sort_by_key(|t| t.order_key());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{counterexample_geometries, GroundSet};

    #[test]
    fn counterexample_fails_weak_2x3_on_a0a1a2() {
        let (_, g) = counterexample_geometries();
        let v = carousel_check(&g, CarouselRule::Weak2x3).unwrap();
        assert!(!v.holds);
        let c = v.counterexample.unwrap();
        assert_eq!((c.x.as_str(), c.y.as_str()), ("x", "y"));
        assert_eq!(c.s, vec!["a0", "a1", "a2"]);
        assert_eq!(c.candidates.len(), 3);
        for cand in &c.candidates {
            assert!(!cand.closure_with_y.contains(&"x".to_string()));
            assert!(!cand.closure_with_x.contains(&"y".to_string()));
        }
    }

    #[test]
    fn counterexample_fails_both_two_carousels() {
        let (_, g) = counterexample_geometries();
        for rule in [CarouselRule::WeakNCarousel(2), CarouselRule::NCarousel(2)] {
            let v = carousel_check(&g, rule).unwrap();
            assert!(!v.holds, "{rule:?}");
            let c = v.counterexample.unwrap();
            assert_eq!((c.x.as_str(), c.y.as_str(), c.s.clone()), ("x", "y", vec!["a0".into(), "a1".into(), "a2".into()]));
        }
    }

    #[test]
    fn affine_example_passes() {
        let (gp, _) = counterexample_geometries();
        let v = carousel_check(&gp, CarouselRule::Weak2x3).unwrap();
        assert!(v.holds);
        assert!(v.witness.is_some());
        assert!(v.counterexample.is_none());
        assert!(carousel_check(&gp, CarouselRule::NCarousel(2)).unwrap().holds);
    }

    #[test]
    fn powerset_satisfies_every_rule() {
        let p = ClosedFamily::powerset(GroundSet::letters(5).unwrap());
        for rule in [
            CarouselRule::NCarousel(1),
            CarouselRule::NCarousel(2),
            CarouselRule::WeakNCarousel(1),
            CarouselRule::Weak2x3,
        ] {
            assert!(carousel_check(&p, rule).unwrap().holds, "{rule:?}");
        }
    }

    #[test]
    fn arity_zero_is_rejected() {
        let p = ClosedFamily::powerset(GroundSet::letters(2).unwrap());
        assert!(matches!(carousel_check(&p, CarouselRule::NCarousel(0)), Err(Error::CarouselArity)));
    }

    #[test]
    fn tuples_have_requested_size() {
        let t = tuples_of(ElementSet(0b1011), 2);
        assert_eq!(t, vec![ElementSet(0b0011), ElementSet(0b1001), ElementSet(0b1010)]);
        assert_eq!(tuples_of(ElementSet(0b101), 0), vec![ElementSet(0)]);
    }
}
