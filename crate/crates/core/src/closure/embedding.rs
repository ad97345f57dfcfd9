//! Lattice embeddings between alignments (sub-geometries) and isomorphisms.

use super::{ClosedFamily, ElementSet};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub const MAX_EMBEDDING_FAMILY: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbeddingMode {
    /// Injective, preserves ∩ and the family join.
    Weak,
    /// Additionally onto: an isomorphism of alignments.
    Strong,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeEmbedding {
    /// Pairs (member of the first family, its image), in first-family order.
    pub map: Vec<(Vec<String>, Vec<String>)>,
    /// Induced bijection of ground sets (strong mode only).
    pub ground_bijection: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum EmbeddingOutcome {
    Found(LatticeEmbedding),
    /// The search space was exhausted.
    ProvenAbsent,
    /// The node budget ran out first; nothing is known.
    BudgetExhausted { nodes: u64 },
}

struct Lattice<'a> {
    family: &'a ClosedFamily,
    index: HashMap<u16, usize>,
    height: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
}

impl<'a> Lattice<'a> {
    fn new(family: &'a ClosedFamily) -> Self {
        let sets = family.sets();
        let index = sets.iter().enumerate().map(|(i, s)| (s.0, i)).collect();
        let m = sets.len();
        let below = |a: usize, b: usize| a != b && sets[a].is_subset(sets[b]);
        let covers = |a: usize, b: usize| below(a, b) && !(0..m).any(|c| below(a, c) && below(c, b));
        let mut height = vec![0; m];
        for b in 0..m {
            // sets are sorted by cardinality, so everything below b is already done
            height[b] = (0..b).filter(|&a| below(a, b)).map(|a| height[a] + 1).max().unwrap_or(0);
        }
        let up = (0..m).map(|a| (0..m).filter(|&b| covers(a, b)).count()).collect();
        let down = (0..m).map(|b| (0..m).filter(|&a| covers(a, b)).count()).collect();
        Lattice { family, index, height, up, down }
    }

    fn set(&self, i: usize) -> ElementSet {
        self.family.sets()[i]
    }

    fn find(&self, s: ElementSet) -> Option<usize> {
        self.index.get(&s.0).copied()
    }

    fn join(&self, a: usize, b: usize) -> usize {
        let j = self.family.join(self.set(a), self.set(b));
        self.find(j).expect("closure of a union is a member")
    }

    fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.find(self.set(a).intersection(self.set(b)))
    }
}

pub fn embedding_search(
    g1: &ClosedFamily,
    g2: &ClosedFamily,
    mode: EmbeddingMode,
    budget: u64,
) -> Result<EmbeddingOutcome> {
    for f in [g1, g2] {
        if f.len() > MAX_EMBEDDING_FAMILY {
            return Err(Error::TooLarge { what: "family for embedding search", limit: MAX_EMBEDDING_FAMILY, got: f.len() });
        }
    }
    if g1.len() > g2.len() || (mode == EmbeddingMode::Strong && g1.len() != g2.len()) {
        return Ok(EmbeddingOutcome::ProvenAbsent);
    }
    let l1 = Lattice::new(g1);
    let l2 = Lattice::new(g2);
    let m1 = g1.len();

    // pairs of earlier members whose meet / join is member i
    let mut meets_to: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m1];
    let mut joins_to: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m1];
    for a in 0..m1 {
        for b in a + 1..m1 {
            let j = l1.join(a, b);
            if j > a && j > b {
                joins_to[j].push((a, b));
            }
            if let Some(c) = l1.meet(a, b) {
                // meets involve the later of the two
                meets_to[b].push((a, c));
            }
        }
    }

    let mut search = Search {
        l1: &l1,
        l2: &l2,
        mode,
        meets_to,
        joins_to,
        image: vec![usize::MAX; m1],
        used: vec![false; g2.len()],
        nodes: 0,
        budget,
    };
    match search.assign(0) {
        Step::Found => {
            let map = (0..m1)
                .map(|i| (g1.ground().names_of(l1.set(i)), g2.ground().names_of(l2.set(search.image[i]))))
                .collect();
            let ground_bijection = (mode == EmbeddingMode::Strong).then(|| ground_map(g1, g2, &l1, &l2, &search.image));
            Ok(EmbeddingOutcome::Found(LatticeEmbedding { map, ground_bijection }))
        }
        Step::Absent => Ok(EmbeddingOutcome::ProvenAbsent),
        Step::OutOfBudget => Ok(EmbeddingOutcome::BudgetExhausted { nodes: search.nodes }),
    }
}

/// f_g(x) = y iff f(φ1(x)) = φ2(y).
fn ground_map(g1: &ClosedFamily, g2: &ClosedFamily, l1: &Lattice, l2: &Lattice, image: &[usize]) -> Vec<(String, String)> {
    (0..g1.ground().len())
        .filter_map(|x| {
            let cx = l1.find(g1.closure_of(ElementSet::singleton(x)))?;
            let target = l2.set(image[cx]);
            let y = (0..g2.ground().len()).find(|&y| g2.closure_of(ElementSet::singleton(y)) == target)?;
            Some((g1.ground().name(x).to_string(), g2.ground().name(y).to_string()))
        })
        .collect()
}

enum Step {
    Found,
    Absent,
    OutOfBudget,
}

struct Search<'a> {
    l1: &'a Lattice<'a>,
    l2: &'a Lattice<'a>,
    mode: EmbeddingMode,
    meets_to: Vec<Vec<(usize, usize)>>,
    joins_to: Vec<Vec<(usize, usize)>>,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, i: usize) -> Step {
        if i == self.image.len() {
            return Step::Found;
        }
        let mut any_budget_cut = false;
        for t in 0..self.used.len() {
            if self.used[t] || !self.admissible(i, t) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            self.image[i] = t;
            self.used[t] = true;
            match self.assign(i + 1) {
                Step::Found => return Step::Found,
                Step::OutOfBudget => any_budget_cut = true,
                Step::Absent => {}
            }
            self.used[t] = false;
            self.image[i] = usize::MAX;
            if any_budget_cut {
                return Step::OutOfBudget;
            }
        }
        Step::Absent
    }

    fn admissible(&self, i: usize, t: usize) -> bool {
        let (l1, l2) = (self.l1, self.l2);
        match self.mode {
            EmbeddingMode::Strong => {
                if l1.height[i] != l2.height[t] || l1.up[i] != l2.up[t] || l1.down[i] != l2.down[t] {
                    return false;
                }
            }
            EmbeddingMode::Weak => {
                if l2.height[t] < l1.height[i] {
                    return false;
                }
            }
        }
        let a = l1.set(i);
        let fa = l2.set(t);
        for j in 0..i {
            let b = l1.set(j);
            let fb = l2.set(self.image[j]);
            if b.is_subset(a) && !(fb.is_subset(fa) && fb != fa) {
                return false;
            }
        }
        for &(j, c) in &self.meets_to[i] {
            if l2.meet(self.image[j], t) != Some(self.image[c]) {
                return false;
            }
        }
        for &(p, q) in &self.joins_to[i] {
            if l2.join(self.image[p], self.image[q]) != t {
                return false;
            }
        }
        true
    }
}
