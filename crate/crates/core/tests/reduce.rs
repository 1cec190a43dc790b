mod support;

use std::sync::Arc;

use contred::explore::enumerate::map_classes;
use contred::explore::random::{random_problem, random_space};
use contred::lattice::{sup2, TaggedFamily};
use contred::reduce::{
    le0_fn, le0_problem, le2_fn, le2_fn_oracle, le2_problem, le_ct, CtVerdict, Item, Reducer, Reducibility,
};
use contred::topo::{pi_power, Problem, TotalMap};
use contred::Error;
use proptest::prelude::*;
use rayon::prelude::*;

#[test]
fn both_engines_match_exhaustive_witness_search() {
    let maps = map_classes(2);
    let disagreements: Vec<(String, String)> = maps
        .par_iter()
        .flat_map_iter(|f| maps.iter().map(move |g| (f, g)))
        .filter_map(|(f, g)| {
            let truth = support::le2(f, g);
            let fast = le2_fn(f, g).unwrap();
            let oracle = le2_fn_oracle(f, g).unwrap();
            let ok = fast.is_some() == truth && oracle.is_some() == truth;
            (!ok).then(|| (f.name().to_string(), g.name().to_string()))
        })
        .collect();
    assert!(disagreements.is_empty(), "{disagreements:?}");
}

#[test]
fn le0_matches_exhaustive_search() {
    let maps = map_classes(3);
    for f in &maps {
        for g in maps.iter().filter(|g| g.cod() == f.cod()) {
            let w = le0_fn(f, g).unwrap();
            assert_eq!(w.is_some(), support::le0(f, g), "{} {}", f.name(), g.name());
            if let Some(w) = w {
                w.verify_fn(f, g).unwrap();
            }
        }
    }
}

#[test]
fn le0_refines_le2() {
    let maps = map_classes(2);
    for f in &maps {
        for g in maps.iter().filter(|g| g.cod() == f.cod()) {
            if le0_fn(f, g).unwrap().is_some() {
                assert!(le2_fn(f, g).unwrap().is_some());
            }
        }
    }
}

#[test]
fn truth_table_matches_supremum_of_powers() {
    let maps: Vec<TotalMap> = map_classes(2).into_iter().filter(|g| g.dom().len() <= 2).collect();
    let targets: Vec<&TotalMap> = maps.iter().filter(|g| !g.dom().is_empty()).collect();
    let sources: Vec<TotalMap> = maps.iter().take(12).cloned().chain([pi_power(&support::step(), 2).unwrap()]).collect();
    for g in targets {
        let sup = sup2(&TaggedFamily::indexed([g.clone(), pi_power(g, 2).unwrap()])).unwrap();
        for f in &sources {
            let capped = matches!(le_ct(f, g, 2).unwrap(), CtVerdict::Yes { .. });
            assert_eq!(capped, le2_fn(f, &sup).unwrap().is_some(), "{} {}", f.name(), g.name());
        }
    }
}

#[test]
fn truth_table_is_monotone_in_the_cap() {
    let sq = pi_power(&support::step(), 2).unwrap();
    for cap in 2..=4 {
        assert!(matches!(le_ct(&sq, &support::step(), cap).unwrap(), CtVerdict::Yes { power: 2, .. }));
    }
}

#[test]
fn problems_with_empty_members_are_below_everything() {
    let x = support::sierpinski();
    let y = support::discrete(2);
    let nowhere = contred::topo::PartialMap::nowhere("n", x.clone(), y.clone()).unwrap();
    let p = Problem::new("P", x, y, vec![nowhere, support::flip().into_partial()]).unwrap();
    for q in [Problem::of_total(&support::alternating()), Problem::of_total(&support::two_valued())] {
        let w = le2_problem(&p, &q).unwrap().unwrap();
        w.verify_problem(&p, &q).unwrap();
    }
}

#[test]
fn pair_problem_reduces_to_each_member() {
    let f = support::flip();
    let step = support::step();
    let fs = Problem::new("FS", f.dom().clone(), f.cod().clone(), vec![f.clone().into_partial(), step.clone().into_partial()])
        .unwrap();
    assert!(le2_problem(&fs, &Problem::of_total(&f)).unwrap().is_some());
    assert!(le2_problem(&fs, &Problem::of_total(&step)).unwrap().is_some());
    assert!(le0_problem(&fs, &Problem::of_total(&step)).unwrap().is_some());
}

#[test]
fn budget_exhaustion_is_an_error_not_a_verdict() {
    let r = Reducer::new(3);
    let f = support::alternating();
    let err = r.le2_fn(&f, &pi_power(&support::step(), 2).unwrap()).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { .. }));
    let err = r.le0_problem(&Problem::of_total(&f), &Problem::of_total(&f)).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { .. }));
}

#[test]
fn witnesses_are_deterministic() {
    let (f, g) = (support::alternating(), support::flip());
    let a = le2_fn(&f, &sup2(&TaggedFamily::indexed([g.clone(), f.clone()])).unwrap()).unwrap();
    let b = le2_fn(&f, &sup2(&TaggedFamily::indexed([g, f.clone()])).unwrap()).unwrap();
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflexive_with_replaying_witnesses(seed in any::<u64>()) {
        let f = support::random_map(seed, 4);
        le2_fn(&f, &f).unwrap().unwrap().verify_fn(&f, &f).unwrap();
        le0_fn(&f, &f).unwrap().unwrap().verify_fn(&f, &f).unwrap();
    }

    #[test]
    fn le2_transitive_with_composed_witness(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (f, g, h) = (support::random_map(s1, 3), support::random_map(s2, 3), support::random_map(s3, 3));
        if let (Some(a), Some(b)) = (le2_fn(&f, &g).unwrap(), le2_fn(&g, &h).unwrap()) {
            prop_assert!(le2_fn(&f, &h).unwrap().is_some());
            a.then(&b, h.cod()).unwrap().verify_fn(&f, &h).unwrap();
        }
    }

    #[test]
    fn le0_transitive_with_composed_witness(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let y = support::discrete(2);
        let (f, g, h) = (support::random_map_into(s1, 3, &y), support::random_map_into(s2, 3, &y), support::random_map_into(s3, 3, &y));
        if let (Some(a), Some(b)) = (le0_fn(&f, &g).unwrap(), le0_fn(&g, &h).unwrap()) {
            a.then(&b).unwrap().verify_fn(&f, &h).unwrap();
        }
    }

    #[test]
    fn problem_witnesses_replay_and_compose(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let x = Arc::new(random_space(2, 0.5, s1));
        let y = support::discrete(2);
        let p = random_problem(&x, &y, 2, 0.7, s1).unwrap();
        let q = random_problem(&x, &y, 2, 0.7, s2).unwrap();
        let r = random_problem(&x, &y, 2, 0.7, s3).unwrap();
        let (pq, qr) = (le2_problem(&p, &q).unwrap(), le2_problem(&q, &r).unwrap());
        if let Some(w) = &pq {
            w.verify_problem(&p, &q).unwrap();
        }
        if let (Some(a), Some(b)) = (pq, qr) {
            prop_assert!(le2_problem(&p, &r).unwrap().is_some());
            a.then(&b, r.cod()).unwrap().verify_problem(&p, &r).unwrap();
        }
        if let Some(w) = le0_problem(&p, &q).unwrap() {
            w.verify_problem(&p, &q).unwrap();
        }
    }

    #[test]
    fn singleton_problems_agree_with_maps(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (f, g) = (support::random_map(s1, 3), support::random_map(s2, 3));
        let (pf, pg) = (Problem::of_total(&f), Problem::of_total(&g));
        prop_assert_eq!(le2_problem(&pf, &pg).unwrap().is_some(), le2_fn(&f, &g).unwrap().is_some());
        if f.cod() == g.cod() {
            prop_assert_eq!(le0_problem(&pf, &pg).unwrap().is_some(), le0_fn(&f, &g).unwrap().is_some());
        }
        let compare = Reducer::default().compare(&Item::Map(f.clone()), &Item::Map(g.clone()), Reducibility::Le2).unwrap();
        prop_assert_eq!(compare.forward.is_some(), le2_fn(&f, &g).unwrap().is_some());
        prop_assert_eq!(compare.backward.is_some(), le2_fn(&g, &f).unwrap().is_some());
    }
}
