use super::{ClosedFamily, ElementSet, GroundSet};

/// The affine point geometry G' on {a0, a1, a2, x, y} and the geometry G
/// obtained from it by adding the closed sets a0a2x and a0a1y.
///
/// G is the closure system of the single implication a0a1a2 → xy; it fails
/// the weak 2×3-carousel rule while G' satisfies it.
pub fn counterexample_geometries() -> (ClosedFamily, ClosedFamily) {
    let ground = GroundSet::new(["a0", "a1", "a2", "x", "y"]).expect("valid ground set");
    let set = |names: &[&str]| ground.set_of(names).expect("known names");
    let removed_g = [set(&["a0", "a1", "a2"]), set(&["a0", "a1", "a2", "x"]), set(&["a0", "a1", "a2", "y"])];
    let removed_gp: Vec<ElementSet> =
        removed_g.iter().copied().chain([set(&["a0", "a2", "x"]), set(&["a0", "a1", "y"])]).collect();
    let keep = |removed: &[ElementSet]| {
        (0u16..32).map(ElementSet).filter(|s| !removed.contains(s)).collect::<Vec<_>>()
    };
    let gp = ClosedFamily::new(ground.clone(), keep(&removed_gp)).expect("valid family");
    let g = ClosedFamily::new(ground, keep(&removed_g)).expect("valid family");
    (gp, g)
}
