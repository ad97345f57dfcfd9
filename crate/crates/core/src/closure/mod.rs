//! Finite closure systems on small ground sets.
//!
//! Subsets of the ground set are 16-bit masks ([`ElementSet`]). A
//! [`ClosedFamily`] is a deduplicated list of closed sets with an O(1)
//! membership bitset; a [`FiniteClosureSystem`] additionally carries the
//! closure of every subset, so carousel and axiom checks can quantify over
//! all subsets cheaply.

mod axioms;
mod carousel;
mod dimension;
mod embedding;
mod enumerate;
mod examples;
mod implication;
pub mod io;
mod join;

pub use axioms::{verify_axioms, AxiomMode, AxiomReport, AxiomViolation};
pub use carousel::{
    carousel_check, CarouselCounterexample, CarouselRule, CarouselVerdict, CarouselWitness,
    CandidateClosure,
};
pub use dimension::{
    convex_dimension, convex_dimension_with_budget, join_of_chains, meet_irreducibles, ConvexDimensionResult,
};
pub use embedding::{embedding_search, EmbeddingMode, EmbeddingOutcome, LatticeEmbedding};
pub use enumerate::enumerate_convex_geometries;
pub use examples::counterexample_geometries;
pub use implication::{closure_from_implications, forward_chain, Implication};
pub use join::{join_alignments, monotone_alignment};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 16;

/// A subset of a ground set, one bit per element index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ElementSet(pub u16);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> ElementSet {
        ElementSet(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(i: usize) -> ElementSet {
        ElementSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> ElementSet {
        ElementSet(indices.into_iter().fold(0u16, |m, i| m | (1 << i)))
    }

    #[inline]
    pub fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    #[inline]
    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn with(self, i: usize) -> ElementSet {
        ElementSet(self.0 | (1 << i))
    }

    #[inline]
    pub fn without(self, i: usize) -> ElementSet {
        ElementSet(self.0 & !(1 << i))
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }

    /// The (cardinality, mask) key used for every deterministic ordering.
    #[inline]
    pub fn order_key(self) -> (u32, u16) {
        (self.0.count_ones(), self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Ordered list of distinct element names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<GroundSet> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.len() > MAX_GROUND {
            return Err(Error::GroundSize(names.len()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        Ok(GroundSet { names })
    }

    /// Ground set `a, b, c, ...` of the given size.
    pub fn letters(n: usize) -> Result<GroundSet> {
        GroundSet::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        let mut m = ElementSet::EMPTY;
        for n in names {
            m = m.with(self.index_of(n.as_ref())?);
        }
        Ok(m)
    }

    pub fn names_of(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    /// Compact rendering such as `{a0,a1,x}`.
    pub fn show(&self, set: ElementSet) -> String {
        format!("{{{}}}", self.names_of(set).join(","))
    }

    pub fn check(&self, set: ElementSet) -> Result<()> {
        if set.is_subset(self.full()) {
            Ok(())
        } else {
            Err(Error::MaskOutOfRange { mask: set.0 as u32, size: self.len() })
        }
    }

    fn power_len(&self) -> usize {
        1usize << self.len()
    }
}

/// A total order on the ground set, as a permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Order(Vec<usize>);

impl Order {
    pub fn new(perm: Vec<usize>, ground: &GroundSet) -> Result<Order> {
        let n = ground.len();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::BadOrder);
        }
        for &i in &perm {
            if i >= n || seen[i] {
                return Err(Error::BadOrder);
            }
            seen[i] = true;
        }
        Ok(Order(perm))
    }

    pub fn from_names<S: AsRef<str>>(names: &[S], ground: &GroundSet) -> Result<Order> {
        let perm = names
            .iter()
            .map(|n| ground.index_of(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Order::new(perm, ground)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Prefix sets `{x1..xi}` for i = 0..=n.
    pub fn prefixes(&self) -> impl Iterator<Item = ElementSet> + '_ {
        std::iter::once(ElementSet::EMPTY).chain(self.0.iter().scan(ElementSet::EMPTY, |acc, &i| {
            *acc = acc.with(i);
            Some(*acc)
        }))
    }
}

/// A family of subsets containing the ground set, deduplicated and sorted by
/// (cardinality, mask).
#[derive(Clone, PartialEq, Eq)]
pub struct ClosedFamily {
    ground: GroundSet,
    sets: Vec<ElementSet>,
    member: Vec<u64>,
}

impl fmt::Debug for ClosedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.sets.iter().map(|&s| self.ground.show(s)).collect();
        f.debug_struct("ClosedFamily")
            .field("ground", &self.ground.names())
            .field("sets", &shown)
            .finish()
    }
}

impl ClosedFamily {
    pub fn new<I: IntoIterator<Item = ElementSet>>(ground: GroundSet, sets: I) -> Result<ClosedFamily> {
        let mut member = vec![0u64; ground.power_len().div_ceil(64)];
        let mut list = Vec::new();
        for s in sets {
            ground.check(s)?;
            let b = s.0 as usize;
            if member[b >> 6] & (1 << (b & 63)) == 0 {
                member[b >> 6] |= 1 << (b & 63);
                list.push(s);
            }
        }
        let full = ground.full().0 as usize;
        if member[full >> 6] & (1 << (full & 63)) == 0 {
            return Err(Error::NotAlignment("the ground set is not a member".into()));
        }
        list.sort_by_key(|s| s.order_key());
        Ok(ClosedFamily { ground, sets: list, member })
    }

    /// Build from lists of element names.
    pub fn from_names<S: AsRef<str>>(ground: GroundSet, sets: &[Vec<S>]) -> Result<ClosedFamily> {
        let masks = sets.iter().map(|s| ground.set_of(s)).collect::<Result<Vec<_>>>()?;
        ClosedFamily::new(ground, masks)
    }

    /// Every subset of the ground set.
    pub fn powerset(ground: GroundSet) -> ClosedFamily {
        let n = ground.power_len();
        ClosedFamily::new(ground, (0..n).map(|m| ElementSet(m as u16))).expect("powerset is valid")
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    #[inline]
    pub fn contains(&self, s: ElementSet) -> bool {
        let b = s.0 as usize;
        b < self.ground.power_len() && self.member[b >> 6] & (1 << (b & 63)) != 0
    }

    /// Intersection of all members containing `y` (the induced closure),
    /// computed directly from the list.
    pub fn closure_of(&self, y: ElementSet) -> ElementSet {
        self.sets
            .iter()
            .filter(|s| y.is_subset(**s))
            .fold(self.ground.full(), |acc, s| acc.intersection(*s))
    }

    /// Lattice join inside the family: the smallest member containing both.
    pub fn join(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        self.closure_of(a.union(b))
    }

    /// Names of every member, in family order.
    pub fn named_sets(&self) -> Vec<Vec<String>> {
        self.sets.iter().map(|&s| self.ground.names_of(s)).collect()
    }

    fn same_ground(&self, other: &ClosedFamily) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }
}

/// An intersection-closed family together with the closure of every subset.
#[derive(Clone, Debug)]
pub struct FiniteClosureSystem {
    family: ClosedFamily,
    table: Vec<u16>,
}

impl FiniteClosureSystem {
    pub fn new(family: ClosedFamily) -> Result<FiniteClosureSystem> {
        if let Some((a, b)) = axioms::first_non_intersection(&family) {
            let g = family.ground();
            return Err(Error::NotAlignment(format!(
                "{} ∩ {} is not a member",
                g.show(a),
                g.show(b)
            )));
        }
        let table = closure_table(&family);
        Ok(FiniteClosureSystem { family, table })
    }

    pub fn family(&self) -> &ClosedFamily {
        &self.family
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }

    /// φ(Y) = ∩{Z ∈ F : Y ⊆ Z}.
    pub fn closure(&self, y: ElementSet) -> Result<ElementSet> {
        self.ground().check(y)?;
        Ok(self.closure_unchecked(y))
    }

    #[inline]
    pub(crate) fn closure_unchecked(&self, y: ElementSet) -> ElementSet {
        ElementSet(self.table[y.0 as usize])
    }

    /// Closure of a set given by element names.
    pub fn closure_of_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<String>> {
        let y = self.ground().set_of(names)?;
        Ok(self.ground().names_of(self.closure_unchecked(y)))
    }

    pub fn into_family(self) -> ClosedFamily {
        self.family
    }
}

/// Closure of every subset. A non-member Y has closure ∩_{a∉Y} φ(Y ∪ a),
/// since every member strictly above Y contains some Y ∪ a.
pub(crate) fn closure_table(family: &ClosedFamily) -> Vec<u16> {
    let n = family.ground().len();
    let full = ElementSet::full(n);
    let size = 1usize << n;
    let mut table = vec![0u16; size];
    for m in (0..size).rev() {
        let y = ElementSet(m as u16);
        table[m] = if family.contains(y) {
            y.0
        } else {
            full.difference(y)
                .iter()
                .fold(full.0, |acc, a| acc & table[y.with(a).0 as usize])
        };
    }
    table
}
