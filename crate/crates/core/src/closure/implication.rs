use super::{ClosedFamily, ElementSet, FiniteClosureSystem, GroundSet};
use crate::error::Result;
use serde::{Deserialize, Serialize};

/// `lhs → rhs`: every closed set containing `lhs` contains `rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Implication {
    pub lhs: ElementSet,
    pub rhs: ElementSet,
}

impl Implication {
    pub fn new(lhs: ElementSet, rhs: ElementSet) -> Implication {
        Implication { lhs, rhs }
    }

    pub fn from_names<S: AsRef<str>>(ground: &GroundSet, lhs: &[S], rhs: &[S]) -> Result<Implication> {
        Ok(Implication { lhs: ground.set_of(lhs)?, rhs: ground.set_of(rhs)? })
    }

    #[inline]
    pub fn respected_by(&self, s: ElementSet) -> bool {
        !self.lhs.is_subset(s) || self.rhs.is_subset(s)
    }
}

/// Smallest superset of `start` respecting every implication.
pub fn forward_chain(imps: &[Implication], start: ElementSet) -> ElementSet {
    let mut cur = start;
    loop {
        let next = imps
            .iter()
            .filter(|imp| imp.lhs.is_subset(cur))
            .fold(cur, |acc, imp| acc.union(imp.rhs));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// The closure system whose closed sets are exactly the subsets respecting
/// every implication.
pub fn closure_from_implications(ground: GroundSet, imps: &[Implication]) -> Result<FiniteClosureSystem> {
    for imp in imps {
        ground.check(imp.lhs)?;
        ground.check(imp.rhs)?;
    }
    let n = 1usize << ground.len();
    let sets = (0..n)
        .map(|m| ElementSet(m as u16))
        .filter(|&s| imps.iter().all(|imp| imp.respected_by(s)));
    FiniteClosureSystem::new(ClosedFamily::new(ground, sets)?)
}
