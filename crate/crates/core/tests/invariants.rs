mod support;

use std::sync::Arc;

use contred::explore::enumerate::{map_classes, partial_maps, small_spaces};
use contred::explore::random::random_problem;
use contred::invariants::{
    basesize, basesize_coloring, basesize_problem, conflict_graph, lev_point, level, level_problem, level_sets, report,
    LevelValue, Variant,
};
use contred::lattice::{sup2, sup2_problem_default, TaggedFamily};
use contred::reduce::{le2_fn, le2_problem};
use contred::topo::{PartialMap, Problem, TotalMap};
use proptest::prelude::*;

fn parse_level(s: &str) -> LevelValue {
    if s == "unbounded" {
        LevelValue::Unbounded
    } else {
        LevelValue::Finite(s.parse().unwrap())
    }
}

#[test]
fn golden_fixtures() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/fixtures.txt")).unwrap();
    let maps = [support::flip(), support::alternating(), support::two_valued()];
    let mut seen = 0;
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let cols: Vec<&str> = line.split_whitespace().collect();
        let f = maps.iter().find(|f| f.name() == cols[0]).unwrap();
        let expected = (parse_level(cols[1]), parse_level(cols[2]), cols[3].parse::<usize>().unwrap());
        let brute = (support::level(f, false), support::level(f, true), support::basesize(f));
        assert_eq!(brute, expected, "oracle disagrees with the golden file for {}", f.name());
        assert_eq!((level(f, Variant::One), level(f, Variant::Two), basesize(f)), expected, "{}", f.name());
        seen += 1;
    }
    assert_eq!(seen, 3);
}

#[test]
fn level_chains_of_fixtures() {
    let flip = level_sets(&support::flip(), Variant::One);
    assert_eq!(flip.sets, vec![[0, 1].into(), [0].into(), [].into()]);
    let alt = level_sets(&support::alternating(), Variant::One);
    assert_eq!(alt.sets, vec![[0, 1, 2].into(), [0, 1].into(), [0].into(), [].into()]);
    let tv = level_sets(&support::two_valued(), Variant::One);
    assert!(!tv.terminates);
    assert_eq!(tv.sets.last().unwrap(), &[0, 1].into());
}

#[test]
fn levels_and_basesize_match_oracles_exhaustively() {
    let spaces = small_spaces(3);
    for x in &spaces {
        for y in spaces.iter().filter(|y| y.len() <= 2) {
            for f in partial_maps(x, y, usize::MAX).unwrap() {
                for (variant, closed) in [(Variant::One, false), (Variant::Two, true)] {
                    let chain = level_sets(&f, variant);
                    let (sets, terminates) = support::level_chain(&f, closed);
                    assert_eq!((chain.sets.clone(), chain.terminates), (sets, terminates), "{f:?}");
                    for p in f.defined_on() {
                        assert_eq!(lev_point(&f, p, variant).unwrap(), support::lev_point(&f, p, closed));
                    }
                }
                assert_eq!(basesize(&f), support::basesize(&f), "{f:?}");
            }
        }
    }
}

#[test]
fn basesize_matches_partition_search_on_five_points() {
    let y = support::discrete(3);
    for seed in 0..300u64 {
        let f = support::random_map_into(seed * 6 + 5, 5, &y);
        let c = basesize_coloring(&f);
        assert_eq!(c.count, support::basesize(&f), "{f:?}");
        for (p, q) in conflict_graph(&f) {
            assert_ne!(c.colors[p], c.colors[q]);
        }
        for class in c.classes() {
            assert!(support::continuous_on(&f, &class));
        }
    }
}

#[test]
fn level_is_supremum_of_pointwise_levels() {
    for f in map_classes(3) {
        let r = report(&f);
        for (i, lev) in [r.lev1, r.lev2].into_iter().enumerate() {
            let sup = r
                .pointwise
                .values()
                .map(|v| if i == 0 { v.0 } else { v.1 })
                .max()
                .unwrap_or(LevelValue::Finite(0));
            assert_eq!(lev, sup, "{}", f.name());
        }
    }
}

#[test]
fn second_level_sets_contain_the_first() {
    for f in map_classes(3) {
        let (one, two) = (level_sets(&f, Variant::One), level_sets(&f, Variant::Two));
        let stages = one.sets.len().max(two.sets.len());
        for a in 0..stages {
            assert!(one.stage(a).is_subset(two.stage(a)), "{} at {a}", f.name());
        }
    }
}

#[test]
fn empty_problem_is_unbounded() {
    let p = Problem::empty("E", support::sierpinski(), support::discrete(2)).unwrap();
    assert_eq!(level_problem(&p, Variant::One), LevelValue::Unbounded);
    assert_eq!(basesize_problem(&p), LevelValue::Unbounded);
}

#[test]
fn problem_level_is_member_minimum() {
    let flip = support::flip().into_partial();
    let cont = TotalMap::constant("c", support::sierpinski(), support::discrete(2), 0).unwrap().into_partial();
    let p = Problem::new("P", support::sierpinski(), support::discrete(2), vec![flip.clone(), cont]).unwrap();
    assert_eq!(level_problem(&p, Variant::One), LevelValue::Finite(1));
    assert_eq!(level_problem(&Problem::singleton(&flip), Variant::Two), LevelValue::Finite(2));
}

fn chain_ok(f: &PartialMap) -> bool {
    let bas = LevelValue::Finite(basesize(f));
    let (l1, l2) = (level(f, Variant::One), level(f, Variant::Two));
    bas <= l1 && l1 <= l2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn basesize_below_levels(seed in any::<u64>()) {
        prop_assert!(chain_ok(&support::random_map(seed, 5)));
    }

    #[test]
    fn monotone_under_le2(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (f, g) = (support::random_map(s1, 3), support::random_map(s2, 3));
        if le2_fn(&f, &g).unwrap().is_some() {
            prop_assert!(level(&f, Variant::One) <= level(&g, Variant::One));
            prop_assert!(level(&f, Variant::Two) <= level(&g, Variant::Two));
            prop_assert!(basesize(&f) <= basesize(&g));
        }
    }

    #[test]
    fn commute_with_sup2(seeds in prop::collection::vec(any::<u64>(), 0..4)) {
        let family: Vec<TotalMap> = seeds.iter().map(|&s| support::random_map(s, 4)).collect();
        let sup = sup2(&TaggedFamily::indexed(family.clone())).unwrap();
        for variant in [Variant::One, Variant::Two] {
            let max = family.iter().map(|f| level(f, variant)).max().unwrap_or(LevelValue::Finite(0));
            prop_assert_eq!(level(&sup, variant), max);
        }
        prop_assert_eq!(basesize(&sup), family.iter().map(|f| basesize(f)).max().unwrap_or(0));
    }

    #[test]
    fn problem_invariants(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let x = Arc::new(contred::explore::random::random_space(3, 0.4, s1));
        let y = support::discrete(2);
        let p = random_problem(&x, &y, 3, 0.8, s2).unwrap();
        let q = random_problem(&x, &y, 2, 0.8, s3).unwrap();
        let min1 = p.members().iter().map(|f| level(f, Variant::One)).min().unwrap_or(LevelValue::Unbounded);
        prop_assert_eq!(level_problem(&p, Variant::One), min1);
        if le2_problem(&p, &q).unwrap().is_some() {
            prop_assert!(level_problem(&p, Variant::One) <= level_problem(&q, Variant::One));
            prop_assert!(level_problem(&p, Variant::Two) <= level_problem(&q, Variant::Two));
            prop_assert!(basesize_problem(&p) <= basesize_problem(&q));
        }
        let sup = sup2_problem_default(&TaggedFamily::indexed([p.clone(), q.clone()])).unwrap();
        for variant in [Variant::One, Variant::Two] {
            prop_assert_eq!(level_problem(&sup, variant), level_problem(&p, variant).max(level_problem(&q, variant)));
        }
        prop_assert_eq!(basesize_problem(&sup), basesize_problem(&p).max(basesize_problem(&q)));
    }
}
