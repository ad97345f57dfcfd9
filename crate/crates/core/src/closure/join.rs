use super::{ClosedFamily, GroundSet, Order};
use crate::error::Result;

/// Join of two alignments on the same ground set: the smallest alignment
/// containing both, i.e. all intersections `U ∩ V` with `U ∈ F1`, `V ∈ F2`.
///
/// Both inputs contain the ground set, so the result contains each input.
pub fn join_alignments(f1: &ClosedFamily, f2: &ClosedFamily) -> Result<ClosedFamily> {
    f1.same_ground(f2)?;
    let sets = f1
        .sets()
        .iter()
        .flat_map(|&u| f2.sets().iter().map(move |&v| u.intersection(v)));
    ClosedFamily::new(f1.ground().clone(), sets)
}

/// The chain of prefixes of `order`, including ∅.
pub fn monotone_alignment(ground: &GroundSet, order: &Order) -> ClosedFamily {
    ClosedFamily::new(ground.clone(), order.prefixes()).expect("prefixes include the ground set")
}
