use proptest::prelude::*;

use tvk::cli::json::{parse_result, to_json, InstanceDocument, ResultDocument};
use tvk::cli::parse_instance_document;
use tvk::constructive::{birch_first, birch_second, case4_partitions, find_covering_halfplanes, prove_sierksma};
use tvk::depth::{depth_region, tukey_depth};
use tvk::generalized::{case4_general, general_decomposition};
use tvk::geom::{
    clip_region, convex_hull, in_triangle, int, is_general_position, orient, rat, region_contains, HalfPlane, Point,
    PointSet, Rational,
};
use tvk::instances::{gen_case4, gen_random, Seed};
use tvk::oracle::enumerate_all;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

/// Integer points straddling the bound of the small-integer fast path.
fn wide_point() -> impl Strategy<Value = Point> {
    let c = prop_oneof![-50i64..=50, (1i64 << 61) - 50..(1i64 << 61) + 50, -(1i64 << 61) - 50..-(1i64 << 61) + 50];
    (c.clone(), c).prop_map(|(x, y)| Point::from_ints(x, y))
}

fn random7() -> impl Strategy<Value = PointSet> {
    any::<u64>().prop_map(|s| gen_random(Seed(s), 7, 1000).unwrap())
}

fn scale(p: &Point, f: &Rational) -> Point {
    Point::new(&p.x * f, &p.y * f)
}

proptest! {
    #[test]
    fn orient_antisymmetric_and_cyclic(p in point(), q in point(), r in point()) {
        let o = orient(&p, &q, &r);
        prop_assert_eq!(o, orient(&p, &r, &q).reverse());
        prop_assert_eq!(o, orient(&q, &r, &p));
    }

    #[test]
    fn orient_fast_path_matches_rational_path(p in wide_point(), q in wide_point(), r in wide_point()) {
        // Dividing by 3 forces non-integer coordinates and the exact path.
        let third = rat(1, 3);
        let o = orient(&p, &q, &r);
        prop_assert_eq!(o, orient(&scale(&p, &third), &scale(&q, &third), &scale(&r, &third)));
        prop_assert_eq!(o, orient(&q, &r, &p));
    }

    #[test]
    fn orient_under_affine_maps(
        p in point(), q in point(), r in point(),
        m in (rational(), rational(), rational(), rational()),
        t in point(),
    ) {
        let (a, b, c, d) = m;
        let det = &a * &d - &b * &c;
        prop_assume!(det != int(0));
        let map = |u: &Point| Point::new(&a * &u.x + &b * &u.y + &t.x, &c * &u.x + &d * &u.y + &t.y);
        let expected = orient(&p, &q, &r).signum() * if det > int(0) { 1 } else { -1 };
        prop_assert_eq!(orient(&map(&p), &map(&q), &map(&r)).signum(), expected);
    }

    #[test]
    fn hull_is_idempotent(pts in prop::collection::vec(point(), 0..12)) {
        let h = convex_hull(&pts);
        prop_assert_eq!(&convex_hull(h.vertices()), &h);
        for p in &pts {
            prop_assert!(region_contains(&h, p).is_inside());
        }
    }

    #[test]
    fn clip_stays_inside_both(pts in prop::collection::vec(point(), 1..10), p in point(), q in point()) {
        prop_assume!(p != q);
        let r = convex_hull(&pts);
        let h = HalfPlane::left_of(&p, &q);
        let c = clip_region(&r, &h);
        for v in c.vertices() {
            prop_assert!(region_contains(&r, v).is_inside());
            prop_assert!(h.contains(v));
        }
        // Nothing of r inside h is lost.
        for v in r.vertices() {
            if h.contains(v) {
                prop_assert!(region_contains(&c, v).is_inside());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generators_are_deterministic_and_general(seed in any::<u64>()) {
        let a = gen_random(Seed(seed), 7, 1000).unwrap();
        prop_assert_eq!(&a, &gen_random(Seed(seed), 7, 1000).unwrap());
        prop_assert!(is_general_position(&a));
    }

    #[test]
    fn depth_regions_are_nested(ps in random7()) {
        let mut outer = depth_region(&ps, 1).unwrap();
        prop_assert_eq!(&outer.region, &convex_hull(ps.points()));
        for k in 2..=4 {
            let inner = depth_region(&ps, k).unwrap();
            for v in inner.region.vertices() {
                prop_assert!(region_contains(&outer.region, v).is_inside());
                prop_assert!(tukey_depth(v, &ps) >= k);
            }
            outer = inner;
        }
    }

    #[test]
    fn enumeration_is_label_equivariant(ps in random7(), perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        // New label perm[i] carries old point i.
        let mut moved = vec![Point::from_ints(0, 0); 7];
        for (i, &j) in perm.iter().enumerate() {
            moved[j] = ps[i].clone();
        }
        let moved = PointSet::new(moved);
        let mut expected: Vec<_> = enumerate_all(&ps).unwrap().into_iter().map(|(p, _)| p.relabel(&perm)).collect();
        expected.sort();
        let got: Vec<_> = enumerate_all(&moved).unwrap().into_iter().map(|(p, _)| p).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn trace_is_sound_and_within_oracle(ps in random7()) {
        let trace = prove_sierksma(&ps).unwrap();
        let all: Vec<_> = enumerate_all(&ps).unwrap().into_iter().map(|(p, _)| p).collect();
        prop_assert!(trace.entries.len() >= 4);
        for (i, e) in trace.entries.iter().enumerate() {
            prop_assert!(all.contains(&e.partition));
            prop_assert!(trace.entries[..i].iter().all(|f| f.partition != e.partition));
        }
    }

    #[test]
    fn birch_pair_is_distinct(ps in random7()) {
        for x in 0..7 {
            if tukey_depth(&ps[x], &ps) >= 3 {
                let a = birch_first(x, &ps).unwrap();
                let b = birch_second(x, &ps).unwrap();
                prop_assert_ne!(&a, &b);
                prop_assert_eq!(a.singleton(), Some(x));
                prop_assert_eq!(b.singleton(), Some(x));
            }
        }
    }

    #[test]
    fn case4_sector_invariants(seed in any::<u64>()) {
        let ps = gen_case4(Seed(seed), 3).unwrap();
        prop_assert!(is_general_position(&ps));
        let sd = general_decomposition(&ps, 3).unwrap();
        prop_assert_eq!(sd.membership_total(&ps), 12);
        prop_assert_eq!(sd.sector_sizes(), [2, 2, 2]);
        let [a, b, c] = &sd.sectors;
        for &i in a {
            for &j in b {
                for &k in c {
                    prop_assert!(in_triangle(&ps[i], &ps[j], &ps[k], &sd.center));
                }
            }
        }
        let direct = case4_partitions(&find_covering_halfplanes(sd.center_idx, &ps).unwrap(), &ps).unwrap();
        prop_assert_eq!(case4_general(&ps, 3).unwrap(), direct);
    }

    #[test]
    fn json_round_trips(ps in random7()) {
        let doc = InstanceDocument::new(&ps, Default::default());
        let text = to_json(&doc);
        let back = parse_instance_document(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.point_set().unwrap(), ps.clone());

        let result = ResultDocument::from_trace(&ps, &prove_sierksma(&ps).unwrap());
        let text = to_json(&result);
        let back = parse_result(text.as_bytes()).unwrap();
        prop_assert!(back.counts_consistent());
        prop_assert_eq!(back, result);
    }
}
