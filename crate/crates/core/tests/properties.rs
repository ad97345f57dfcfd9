use circgeo::closure::{verify_axioms, AxiomMode};
use circgeo::disc::{disc_in_hull, point_in_hull, Circle, Point, Scene};
use circgeo::harness::{FuzzParams, FuzzReport};
use circgeo::triangle::{class_of, config_code, project, Triangle};
use proptest::prelude::*;

fn circle() -> impl Strategy<Value = Circle> {
    (-1.0..1.0f64, -1.0..1.0f64, 0.0..0.5f64).prop_map(|(x, y, r)| Circle::at(x, y, r))
}

fn triangle() -> impl Strategy<Value = Triangle> {
    prop::array::uniform3((0.0..1.0f64, 0.0..1.0f64))
        .prop_filter_map("thin triangle", |v| {
            Triangle::from_array(v.map(|(x, y)| Point::new(x, y)), 1e-9).ok().filter(|t| t.area() > 0.05)
        })
}

/// Two discs strictly inside `t`, given by barycentric centres and radius
/// fractions of the room left at the centre.
fn pair_in(t: Triangle) -> impl Strategy<Value = (Triangle, Circle, Circle)> {
    let disc = (0.0..1.0f64, 0.0..1.0f64, 0.05..0.9f64);
    (disc.clone(), disc).prop_filter_map("no room", move |(p, q)| {
        let make = |(u, v, f): (f64, f64, f64)| {
            let (u, v) = if u + v > 1.0 { (1.0 - u, 1.0 - v) } else { (u, v) };
            let c = t.a + (t.b - t.a) * u + (t.c - t.a) * v;
            let room = t.room_at(c) - 1e-3;
            (room > 1e-3).then(|| Circle::new(c, room * f))
        };
        Some((t, make(p)?, make(q)?))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn member_is_in_its_own_hull(s in prop::collection::vec(circle(), 1..6), k in 0usize..6) {
        let z = s[k % s.len()];
        prop_assert!(disc_in_hull(&z, &s, 1e-9).unwrap());
    }

    #[test]
    fn hull_grows_with_the_set(z in circle(), s in prop::collection::vec(circle(), 1..5), w in circle()) {
        if disc_in_hull(&z, &s, 1e-9).unwrap() {
            let mut t = s.clone();
            t.push(w);
            prop_assert!(disc_in_hull(&z, &t, 1e-9).unwrap());
        }
    }

    #[test]
    fn smaller_concentric_disc_stays_inside(z in circle(), s in prop::collection::vec(circle(), 1..5), f in 0.0..1.0f64) {
        if disc_in_hull(&z, &s, 1e-9).unwrap() {
            prop_assert!(disc_in_hull(&Circle::new(z.center, z.r * f), &s, 1e-9).unwrap());
            prop_assert!(point_in_hull(z.center, &s, 1e-9).unwrap());
        }
    }

    #[test]
    fn scene_alignment_is_a_convex_geometry(s in prop::collection::vec(circle(), 1..6)) {
        let scene = Scene::new(s.iter().enumerate().map(|(i, c)| (format!("c{i}"), *c)), 1e-9).unwrap();
        let fam = scene.alignment().unwrap();
        prop_assert!(verify_axioms(&fam, AxiomMode::ConvexGeometry).holds);
    }

    #[test]
    fn projections_lie_on_the_sides((t, x, _) in triangle().prop_flat_map(pair_in)) {
        for iv in project(&t, &x, 1e-9).unwrap() {
            prop_assert!(0.0 < iv.lo && iv.lo < iv.hi && iv.hi < 1.0);
        }
    }

    #[test]
    fn code_follows_relabelling((t, x, y) in triangle().prop_flat_map(pair_in)) {
        if let Ok(code) = config_code(&t, &x, &y, 1e-9) {
            prop_assert_eq!(config_code(&t, &y, &x, 1e-9).unwrap(), code.swapped());
            prop_assert_eq!(config_code(&t.rotated(), &x, &y, 1e-9).unwrap(), code.rotated());
            prop_assert_eq!(class_of(code.rotated().swapped()), class_of(code));
        }
    }

    #[test]
    fn report_merge_is_associative(a in 0u64..5, b in 0u64..5, c in 0u64..5) {
        let rep = |n: u64| {
            let mut r = FuzzReport::empty(FuzzParams::new(1, 0));
            r.counts.trials_run = n;
            r.counts.accepted = n;
            r
        };
        let left = rep(a).merge(rep(b)).merge(rep(c));
        let right = rep(a).merge(rep(b).merge(rep(c)));
        prop_assert_eq!(left, right);
    }
}
