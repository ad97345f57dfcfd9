//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use circgeo::closure::{convex_dimension_with_budget, counterexample_geometries};
use circgeo::disc::{lemma_campaign, LemmaKind};
use circgeo::harness::{
    alignment_axioms_campaign, counterexample_suite, fuzz_theorem1, fuzz_theorem2, implication_geometry,
    representation_checks, small_geometry_sweep, FuzzParams,
};
use circgeo::triangle::{class_of, class_table, config_code, search_realization, ClassId, ConfigCode};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn taxonomy() -> Outcome {
    let table = class_table().map_err(|e| e.to_string())?;
    ensure(table.classes.len() == 38, "expected 38 classes")?;
    // independent orbit partition of all 216 codes
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for code in ConfigCode::all() {
        if seen.contains(&code) {
            continue;
        }
        orbits += 1;
        let mut orbit = BTreeSet::new();
        for c in [code, code.swapped()] {
            let mut r = c;
            for _ in 0..3 {
                orbit.insert(r);
                r = r.rotated();
            }
        }
        let id = table.class_of(code);
        let listed: BTreeSet<ConfigCode> = table.get(id).members.iter().copied().collect();
        ensure(listed == orbit, format!("{id} members differ from the orbit of {code}"))?;
        seen.extend(orbit);
    }
    ensure(seen.len() == 216 && orbits == 38, format!("{} codes in {orbits} orbits", seen.len()))?;
    for (code, class) in [("C241", 4), ("C111", 2), ("C546", 36)] {
        let got = class_of(code.parse().unwrap());
        ensure(got == ClassId::new(class).unwrap(), format!("{code} is in {got}"))?;
    }
    ensure(table.realizable().count() == 20, "expected 20 realizable classes")?;
    Ok("216 codes in 38 orbits, 20 realizable".into())
}

fn theorem1() -> Outcome {
    let r = fuzz_theorem1(FuzzParams::new(10_000, 1)).map_err(|e| e.to_string())?;
    let table = class_table().map_err(|e| e.to_string())?;
    ensure(r.violations.is_empty(), format!("{} violations", r.violations.len()))?;
    for id in r.histogram.keys() {
        ensure(table.get(*id).realizable, format!("observed dismissed class {id}"))?;
    }
    Ok(format!(
        "{} accepted, {} coincident, {} classes observed, 0 violations",
        r.counts.accepted,
        r.counts.coincident,
        r.histogram.len()
    ))
}

fn realizability() -> Outcome {
    let table = class_table().map_err(|e| e.to_string())?;
    let mut found = 0;
    for info in &table.classes {
        let hit = search_realization(info.id, 100_000, 2024);
        match (&hit, info.realizable) {
            (Some(r), true) => {
                let code = config_code(&r.triangle, &r.x, &r.y, 1e-9).map_err(|e| e.to_string())?;
                ensure(class_of(code) == info.id, format!("{} witness reclassifies", info.id))?;
                found += 1;
            }
            (None, false) => {}
            (None, true) => return Err(format!("no witness for {}", info.id)),
            (Some(r), false) => return Err(format!("dismissed class {} realized by {}", info.id, r.code)),
        }
    }
    Ok(format!("{found} realizable classes witnessed, 18 dismissed classes unseen"))
}

fn theorem2() -> Outcome {
    let r = fuzz_theorem2(FuzzParams::new(2_000, 7)).map_err(|e| e.to_string())?;
    ensure(r.counts.accepted == 2_000, format!("only {} scenes accepted", r.counts.accepted))?;
    ensure(r.violations.is_empty(), format!("{} violations: {:?}", r.violations.len(), r.violations.first()))?;
    Ok(format!(
        "{} accepted of {} drawn ({} with a disc in the hull of the other two), 0 violations",
        r.counts.accepted, r.counts.trials_run, r.counts.hull_shortcut
    ))
}

fn lemmas() -> Outcome {
    let mut parts = Vec::new();
    for kind in LemmaKind::ALL {
        let r = lemma_campaign(kind, 10_000, 42, 1e-3, 1e-9);
        ensure(r.accepted == 10_000, format!("{kind}: only {} instances accepted", r.accepted))?;
        ensure(r.passed(), format!("{kind}: {} failures, first {:?}", r.failures.len(), r.failures.first()))?;
        parts.push(format!("{kind} ok"));
    }
    Ok(parts.join(", "))
}

fn counterexample() -> Outcome {
    let r = counterexample_suite(Some(Duration::from_secs(1800))).map_err(|e| e.to_string())?;
    ensure(r.passed, format!("{r:?}"))?;
    Ok(format!("|G| = {}, both rules fail at (x, y, {{a0, a1, a2}}), G' passes", r.g_closed_sets))
}

fn dimension() -> Outcome {
    let (_, g) = counterexample_geometries();
    let r = convex_dimension_with_budget(&g, 7, Some(Duration::from_secs(1800))).map_err(|e| e.to_string())?;
    if !r.exhaustive_below {
        return Err(format!("partial certificate: witness at k = {}, refuted through k = {}", r.k, r.refuted_through));
    }
    ensure(r.k == 6, format!("cdim = {} (expected 6)", r.k))?;
    Ok(format!("cdim = 6, k <= {} refuted exhaustively ({} nodes)", r.refuted_through, r.nodes))
}

fn sweep() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let r = small_geometry_sweep(n).map_err(|e| e.to_string())?;
        ensure(r.geometries == r.second_oracle, format!("n = {n}: {} vs {}", r.geometries, r.second_oracle))?;
        ensure(r.failures.is_empty(), format!("n = {n}: {} failures", r.failures.len()))?;
        counts.push(r.geometries.to_string());
    }
    Ok(format!("geometries per n = 1..4: {}, 0 failures", counts.join(", ")))
}

fn scene_axioms() -> Outcome {
    let r = alignment_axioms_campaign(1_000, 3, 1e-9).map_err(|e| e.to_string())?;
    ensure(r.failures.is_empty(), format!("{} failing scenes", r.failures.len()))?;
    Ok("1000 scenes of 2 to 6 circles, all convex geometries".into())
}

fn representation() -> Outcome {
    let r = representation_checks(200_000, 1).map_err(|e| e.to_string())?;
    let three = r.class_three.found().ok_or("no S3 scene within budget")?;
    let imp = r.implication.found().ok_or("no ab -> xy scene within budget")?;
    // re-verify from the stored scenes
    let fam = three.scene.alignment().map_err(|e| e.to_string())?;
    use circgeo::closure::{carousel_check, CarouselRule};
    ensure(carousel_check(&fam, CarouselRule::Weak2x3).map_err(|e| e.to_string())?.holds, "S3 scene fails weak 2x3")?;
    ensure(!carousel_check(&fam, CarouselRule::NCarousel(2)).map_err(|e| e.to_string())?.holds, "S3 scene passes 2-carousel")?;
    let fam = imp.scene.alignment().map_err(|e| e.to_string())?;
    ensure(fam.sets() == implication_geometry().sets(), "ab -> xy scene differs on re-check")?;
    Ok(format!("S3 scene at trial {}, ab -> xy scene with {} closed sets", three.realization.trial, imp.closed_sets))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("taxonomy", taxonomy),
        ("theorem 1 fuzz", theorem1),
        ("realizability", realizability),
        ("theorem 2 fuzz", theorem2),
        ("lemma suite", lemmas),
        ("counterexample suite", counterexample),
        ("convex dimension", dimension),
        ("small-geometry sweep", sweep),
        ("scene alignments are convex geometries", scene_axioms),
        ("representation checks", representation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
