use super::{verify_axioms, AxiomMode, ClosedFamily, ElementSet, GroundSet};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION: usize = 4;

/// Every convex geometry on the ground set `a, b, ...` of size `n`, in
/// increasing order of the bitmask over proper nonempty subsets it selects.
pub fn enumerate_convex_geometries(n: usize) -> Result<Vec<ClosedFamily>> {
    if n == 0 || n > MAX_ENUMERATION {
        return Err(Error::TooLarge { what: "enumeration ground set", limit: MAX_ENUMERATION, got: n });
    }
    let ground = GroundSet::letters(n)?;
    let full = ground.full();
    let middle: Vec<ElementSet> = (1..full.0).map(ElementSet).collect();
    let mut out = Vec::new();
    for pick in 0u32..(1u32 << middle.len()) {
        let sets = [ElementSet::EMPTY, full]
            .into_iter()
            .chain(middle.iter().enumerate().filter(|(i, _)| pick & (1 << i) != 0).map(|(_, &s)| s));
        let family = ClosedFamily::new(ground.clone(), sets)?;
        if verify_axioms(&family, AxiomMode::ConvexGeometry).holds {
            out.push(family);
        }
    }
    Ok(out)
}
