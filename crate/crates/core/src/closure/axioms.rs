use super::{closure_table, ClosedFamily, ElementSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomMode {
    /// Extensive, monotone and idempotent induced closure.
    ClosureOperator,
    /// Contains the ground set and is closed under pairwise intersection.
    Alignment,
    /// Alignment containing ∅ in which every proper member has a one-point
    /// extension inside the family.
    ConvexGeometry,
    /// Anti-exchange of the induced closure over every closed set.
    AntiExchange,
}

impl AxiomMode {
    pub const ALL: [AxiomMode; 4] = [
        AxiomMode::ClosureOperator,
        AxiomMode::Alignment,
        AxiomMode::ConvexGeometry,
        AxiomMode::AntiExchange,
    ];
}

/// First violated instance, with sets given by element names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AxiomViolation {
    NotExtensive { set: Vec<String> },
    NotMonotone { smaller: Vec<String>, larger: Vec<String> },
    NotIdempotent { set: Vec<String> },
    NotIntersectionClosed { left: Vec<String>, right: Vec<String> },
    MissingEmptySet,
    NoOnePointExtension { set: Vec<String> },
    AntiExchange { closed: Vec<String>, x: String, z: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub mode: AxiomMode,
    pub holds: bool,
    pub violation: Option<AxiomViolation>,
}

pub fn verify_axioms(family: &ClosedFamily, mode: AxiomMode) -> AxiomReport {
    let violation = match mode {
        AxiomMode::ClosureOperator => closure_operator(family),
        AxiomMode::Alignment => alignment(family),
        AxiomMode::ConvexGeometry => alignment(family).or_else(|| convex_geometry(family)),
        AxiomMode::AntiExchange => anti_exchange(family),
    };
    AxiomReport { mode, holds: violation.is_none(), violation }
}

/// A pair of members whose intersection is missing, if any.
pub(crate) fn first_non_intersection(family: &ClosedFamily) -> Option<(ElementSet, ElementSet)> {
    let table = closure_table(family);
    let full = family.ground().full();
    for (m, &c) in table.iter().enumerate() {
        let y = ElementSet(m as u16);
        if family.contains(ElementSet(c)) {
            continue;
        }
        // the intersection of all members above y leaves the family at some step
        let mut acc = full;
        for &s in family.sets().iter().filter(|s| y.is_subset(**s)) {
            let next = acc.intersection(s);
            if !family.contains(next) {
                return Some((acc, s));
            }
            acc = next;
        }
    }
    None
}

fn closure_operator(family: &ClosedFamily) -> Option<AxiomViolation> {
    let g = family.ground();
    let table = closure_table(family);
    let phi = |s: ElementSet| ElementSet(table[s.0 as usize]);
    let full = g.full();
    for m in 0..table.len() {
        let y = ElementSet(m as u16);
        let c = phi(y);
        if !y.is_subset(c) {
            return Some(AxiomViolation::NotExtensive { set: g.names_of(y) });
        }
        if phi(c) != c {
            return Some(AxiomViolation::NotIdempotent { set: g.names_of(y) });
        }
        for a in full.difference(y).iter() {
            if !c.is_subset(phi(y.with(a))) {
                return Some(AxiomViolation::NotMonotone {
                    smaller: g.names_of(y),
                    larger: g.names_of(y.with(a)),
                });
            }
        }
    }
    None
}

fn alignment(family: &ClosedFamily) -> Option<AxiomViolation> {
    let g = family.ground();
    first_non_intersection(family).map(|(a, b)| AxiomViolation::NotIntersectionClosed {
        left: g.names_of(a),
        right: g.names_of(b),
    })
}

fn convex_geometry(family: &ClosedFamily) -> Option<AxiomViolation> {
    let g = family.ground();
    if !family.contains(ElementSet::EMPTY) {
        return Some(AxiomViolation::MissingEmptySet);
    }
    let full = g.full();
    for &y in family.sets() {
        if y == full {
            continue;
        }
        if !full.difference(y).iter().any(|a| family.contains(y.with(a))) {
            return Some(AxiomViolation::NoOnePointExtension { set: g.names_of(y) });
        }
    }
    None
}

fn anti_exchange(family: &ClosedFamily) -> Option<AxiomViolation> {
    let g = family.ground();
    let table = closure_table(family);
    let phi = |s: ElementSet| ElementSet(table[s.0 as usize]);
    let full = g.full();
    for &y in family.sets() {
        if phi(y) != y {
            continue;
        }
        let outside: Vec<usize> = full.difference(y).iter().collect();
        for &x in &outside {
            let cx = phi(y.with(x));
            for &z in &outside {
                if z != x && cx.contains(z) && phi(y.with(z)).contains(x) {
                    return Some(AxiomViolation::AntiExchange {
                        closed: g.names_of(y),
                        x: g.name(x).to_string(),
                        z: g.name(z).to_string(),
                    });
                }
            }
        }
    }
    None
}
