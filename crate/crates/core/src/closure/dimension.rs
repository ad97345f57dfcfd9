//! Convex dimension: the least number of monotone alignments whose join is a
//! given convex geometry.
//!
//! A chain can take part in a realization only if every prefix is closed, so
//! the candidates are the maximal chains of the family. Every meet-irreducible
//! member must occur in one of the chosen chains (it cannot be an
//! intersection of strictly larger members), and once all of them are
//! covered the chains generate the whole family. The search is therefore a
//! covering search: branch on the uncovered meet-irreducible with the fewest
//! candidate chains. It is exhaustive for each k, so a failed level is a
//! refutation.

use super::{join_alignments, monotone_alignment, verify_axioms, AxiomMode, ClosedFamily, ElementSet, Order};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

pub const MAX_CDIM_GROUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexDimensionResult {
    /// Number of chains in the realization found.
    pub k: usize,
    /// Orders whose monotone alignments join to the input family.
    pub chains: Vec<Order>,
    /// Every smaller number of chains was refuted exhaustively.
    pub exhaustive_below: bool,
    /// Largest k refuted (0 when nothing was refuted).
    pub refuted_through: usize,
    /// Search nodes expanded over all levels.
    pub nodes: u64,
}

pub fn convex_dimension(g: &ClosedFamily, k_max: usize) -> Result<ConvexDimensionResult> {
    convex_dimension_with_budget(g, k_max, None)
}

/// Like [`convex_dimension`], but stops refuting once `budget` has elapsed.
/// The result then carries a greedy witness, `exhaustive_below = false` and
/// the refutation depth reached.
pub fn convex_dimension_with_budget(
    g: &ClosedFamily,
    k_max: usize,
    budget: Option<Duration>,
) -> Result<ConvexDimensionResult> {
    let n = g.ground().len();
    if n > MAX_CDIM_GROUND {
        return Err(Error::TooLarge { what: "ground set for convex dimension", limit: MAX_CDIM_GROUND, got: n });
    }
    if k_max == 0 {
        return Err(Error::BadParams("k_max must be positive".into()));
    }
    let report = verify_axioms(g, AxiomMode::ConvexGeometry);
    if !report.holds {
        return Err(Error::NotConvexGeometry(format!("{:?}", report.violation)));
    }

    let chains = maximal_chains(g);
    let irreducibles = meet_irreducibles(g);
    let covers: Vec<Vec<usize>> = irreducibles
        .iter()
        .map(|&m| (0..chains.len()).filter(|&c| chains[c].1.contains(&m)).collect())
        .collect();

    let deadline = budget.map(|b| Instant::now() + b);
    let mut search = CoverSearch { covers: &covers, deadline, nodes: 0, timed_out: false };
    let mut refuted = 0;
    for k in 1..=k_max {
        let mut chosen = Vec::new();
        let mut covered = vec![0u32; irreducibles.len()];
        if search.run(k, &mut chosen, &mut covered, &chains, &irreducibles) {
            let orders: Vec<Order> = chosen.iter().map(|&c| chains[c].0.clone()).collect();
            check_realizes(g, &orders)?;
            return Ok(ConvexDimensionResult {
                k,
                chains: orders,
                exhaustive_below: true,
                refuted_through: refuted,
                nodes: search.nodes,
            });
        }
        if search.timed_out {
            let orders = greedy_cover(&covers, &chains, irreducibles.len());
            check_realizes(g, &orders)?;
            return Ok(ConvexDimensionResult {
                k: orders.len(),
                chains: orders,
                exhaustive_below: false,
                refuted_through: refuted,
                nodes: search.nodes,
            });
        }
        refuted = k;
    }
    Err(Error::KMaxExceeded { k_max })
}

/// Members with exactly one upper cover.
pub fn meet_irreducibles(g: &ClosedFamily) -> Vec<ElementSet> {
    let full = g.ground().full();
    g.sets()
        .iter()
        .copied()
        .filter(|&m| m != full)
        .filter(|&m| {
            let above: Vec<ElementSet> = g.sets().iter().copied().filter(|&s| s != m && m.is_subset(s)).collect();
            let covers = above
                .iter()
                .filter(|&&s| !above.iter().any(|&t| t != s && t.is_subset(s)))
                .count();
            covers == 1
        })
        .collect()
}

/// Orders all of whose prefixes are members, with their prefix sets.
fn maximal_chains(g: &ClosedFamily) -> Vec<(Order, Vec<ElementSet>)> {
    fn extend(
        g: &ClosedFamily,
        cur: ElementSet,
        perm: &mut Vec<usize>,
        prefixes: &mut Vec<ElementSet>,
        out: &mut Vec<(Order, Vec<ElementSet>)>,
    ) {
        let full = g.ground().full();
        if cur == full {
            out.push((Order(perm.clone()), prefixes.clone()));
            return;
        }
        for a in full.difference(cur).iter() {
            let next = cur.with(a);
            if g.contains(next) {
                perm.push(a);
                prefixes.push(next);
                extend(g, next, perm, prefixes, out);
                prefixes.pop();
                perm.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, ElementSet::EMPTY, &mut Vec::new(), &mut vec![ElementSet::EMPTY], &mut out);
    out
}

struct CoverSearch<'a> {
    covers: &'a [Vec<usize>],
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl CoverSearch<'_> {
    fn run(
        &mut self,
        k: usize,
        chosen: &mut Vec<usize>,
        covered: &mut [u32],
        chains: &[(Order, Vec<ElementSet>)],
        irreducibles: &[ElementSet],
    ) -> bool {
        self.nodes += 1;
        if self.nodes % 4096 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }
        // most constrained uncovered irreducible
        let pick = (0..covered.len())
            .filter(|&i| covered[i] == 0)
            .min_by_key(|&i| self.covers[i].len());
        let Some(target) = pick else { return true };
        if chosen.len() == k {
            return false;
        }
        for &c in &self.covers[target] {
            chosen.push(c);
            for (i, m) in irreducibles.iter().enumerate() {
                if chains[c].1.contains(m) {
                    covered[i] += 1;
                }
            }
            let found = self.run(k, chosen, covered, chains, irreducibles);
            if found {
                return true;
            }
            for (i, m) in irreducibles.iter().enumerate() {
                if chains[c].1.contains(m) {
                    covered[i] -= 1;
                }
            }
            chosen.pop();
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

fn greedy_cover(covers: &[Vec<usize>], chains: &[(Order, Vec<ElementSet>)], m: usize) -> Vec<Order> {
    let mut uncovered: Vec<bool> = vec![true; m];
    let mut out = Vec::new();
    while uncovered.iter().any(|&u| u) {
        let best = (0..chains.len())
            .max_by_key(|&c| (0..m).filter(|&i| uncovered[i] && covers[i].contains(&c)).count())
            .expect("a convex geometry has at least one maximal chain");
        for (i, u) in uncovered.iter_mut().enumerate() {
            if covers[i].contains(&best) {
                *u = false;
            }
        }
        out.push(chains[best].0.clone());
    }
    out
}

/// Iterated join of the chains' monotone alignments.
pub fn join_of_chains(g: &ClosedFamily, orders: &[Order]) -> Result<ClosedFamily> {
    let ground = g.ground();
    let mut acc = ClosedFamily::new(ground.clone(), [ground.full()])?;
    for o in orders {
        acc = join_alignments(&acc, &monotone_alignment(ground, o))?;
    }
    Ok(acc)
}

fn check_realizes(g: &ClosedFamily, orders: &[Order]) -> Result<()> {
    let joined = join_of_chains(g, orders)?;
    let forward = joined.sets().iter().all(|&s| g.contains(s));
    let backward = g.sets().iter().all(|&s| joined.contains(s));
    if forward && backward {
        Ok(())
    } else {
        Err(Error::NotConvexGeometry("chain cover does not reproduce the family".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{counterexample_geometries, GroundSet};

    #[test]
    fn chain_has_dimension_one() {
        let g = GroundSet::letters(4).unwrap();
        let o = Order::from_names(&["b", "d", "a", "c"], &g).unwrap();
        let l = monotone_alignment(&g, &o);
        let r = convex_dimension(&l, 4).unwrap();
        assert_eq!(r.k, 1);
        assert_eq!(r.chains, vec![o]);
    }

    #[test]
    fn square_has_dimension_two() {
        let p = ClosedFamily::powerset(GroundSet::letters(2).unwrap());
        let r = convex_dimension(&p, 3).unwrap();
        assert_eq!(r.k, 2);
        assert!(r.exhaustive_below);
        assert_eq!(r.refuted_through, 1);
    }

    #[test]
    fn powerset_dimension_equals_size() {
        // the n coatoms are pairwise incomparable meet-irreducibles
        let p = ClosedFamily::powerset(GroundSet::letters(4).unwrap());
        assert_eq!(convex_dimension(&p, 5).unwrap().k, 4);
    }

    #[test]
    fn counterexample_needs_six_chains() {
        let (_, g) = counterexample_geometries();
        assert_eq!(meet_irreducibles(&g).len(), 9);
        let r = convex_dimension(&g, 7).unwrap();
        assert_eq!(r.k, 6);
        assert!(r.exhaustive_below);
        assert_eq!(join_of_chains(&g, &r.chains).unwrap(), g);
    }

    #[test]
    fn k_max_too_small_is_an_error() {
        let (_, g) = counterexample_geometries();
        assert!(matches!(convex_dimension(&g, 5), Err(Error::KMaxExceeded { k_max: 5 })));
    }

    #[test]
    fn zero_budget_gives_partial_certificate() {
        let (_, g) = counterexample_geometries();
        let r = convex_dimension_with_budget(&g, 7, Some(Duration::ZERO)).unwrap();
        // the greedy witness is still a valid realization
        assert_eq!(join_of_chains(&g, &r.chains).unwrap(), g);
        assert!(r.k >= 6);
        assert!(!r.exhaustive_below);
        assert_eq!(r.refuted_through, 0);
    }

    #[test]
    fn rejects_non_geometry() {
        let g = GroundSet::letters(3).unwrap();
        let f = ClosedFamily::from_names(g, &[vec![], vec!["a"], vec!["b"], vec!["a", "b", "c"]]).unwrap();
        assert!(matches!(convex_dimension(&f, 3), Err(Error::NotConvexGeometry(_))));
    }
}
