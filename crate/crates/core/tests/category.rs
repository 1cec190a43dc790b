mod support;

use std::sync::Arc;

use contred::category::{coproduct_with_mediator, le0_cat, poset_to_category, pullback_with_mediator};
use contred::explore::enumerate::{map_classes, total_maps};
use contred::explore::{degree_poset, random_map};
use contred::lattice::{inf0, sup0, TaggedFamily};
use contred::reduce::{le0_fn, Item, Reducer, Reducibility, DEFAULT_BUDGET};
use contred::topo::{compose_total, Space, TotalMap};

fn continuous(m: &TotalMap) -> bool {
    support::continuous(m)
}

#[test]
fn le0_cat_agrees_with_le0_fn() {
    let maps = map_classes(3);
    let mut positives = 0;
    for u in &maps {
        for v in maps.iter().filter(|v| v.cod() == u.cod()) {
            let cat = le0_cat(u, v, &continuous, DEFAULT_BUDGET).unwrap();
            assert_eq!(cat.is_some(), le0_fn(u, v).unwrap().is_some(), "{} {}", u.name(), v.name());
            if let Some(g) = cat {
                assert_eq!(compose_total(v, &g).unwrap().values(), u.values());
                positives += 1;
            }
        }
    }
    assert!(positives > 0);
}

#[test]
fn le0_cat_rejects_other_codomains() {
    let id = TotalMap::identity(&support::sierpinski());
    assert!(le0_cat(&support::flip(), &id, &continuous, DEFAULT_BUDGET).is_err());
}

fn cone(seed: u64, z: &Arc<Space>) -> Vec<TotalMap> {
    (0..1 + seed as usize % 3).map(|k| support::random_map_into(seed * 5 + k as u64, 3, z)).collect()
}

#[test]
fn coproduct_mediators_are_unique() {
    let z = support::discrete(2);
    for seed in 0..50u64 {
        let family = cone(seed, &z);
        let c = coproduct_with_mediator(&z, &TaggedFamily::indexed(family.clone())).unwrap();
        assert_eq!(c.mediator, sup0(&z, &TaggedFamily::indexed(family.clone())).unwrap());
        let satisfying = total_maps(&c.coproduct.space, &z, usize::MAX)
            .unwrap()
            .into_iter()
            .filter(|m| family.iter().zip(&c.injections).all(|(f, mu)| compose_total(m, mu).unwrap().values() == f.values()))
            .count();
        assert_eq!((c.solutions, satisfying), (1, 1));
    }
}

#[test]
fn pullback_mediators_are_unique() {
    let z = support::discrete(2);
    for seed in 0..50u64 {
        let family = cone(seed, &z);
        let pb = pullback_with_mediator(&z, &TaggedFamily::indexed(family.clone())).unwrap();
        assert_eq!(pb.apex, inf0(&z, &TaggedFamily::indexed(family.clone())).unwrap());
        for (f, p) in family.iter().zip(&pb.projections) {
            assert_eq!(compose_total(f, p).unwrap().values(), pb.apex.values());
        }
        // The pullback itself is a competing cone; so is any cone through a point.
        let m = pb.mediate(&pb.projections).unwrap();
        assert_eq!((m.solutions, m.lambda.values()), (1, (0..pb.object.len()).collect()));
        for p in 0..pb.object.len() {
            let q = Arc::new(Space::discrete(1));
            let legs: Vec<TotalMap> = pb
                .projections
                .iter()
                .map(|pr| TotalMap::constant("q", q.clone(), pr.cod().clone(), pr.value(p)).unwrap())
                .collect();
            let m = pb.mediate(&legs).unwrap();
            assert_eq!(m.solutions, 1);
            for (leg, pr) in legs.iter().zip(&pb.projections) {
                assert_eq!(compose_total(pr, &m.lambda).unwrap().values(), leg.values());
            }
        }
    }
}

#[test]
fn thin_coproducts_are_joins() {
    let r = Reducer::default();
    for seed in 0..20u64 {
        let items: Vec<Item> = (0..5u64)
            .map(|k| {
                let x = Arc::new(contred::explore::random_space(1 + (seed + k) as usize % 3, 0.4, seed * 11 + k));
                let y = Arc::new(contred::explore::random_space(1 + k as usize % 2, 0.5, seed * 17 + k));
                Item::Map(random_map(&x, &y, seed * 23 + k).unwrap().renamed(&format!("f{k}")).unwrap())
            })
            .collect();
        let d = degree_poset(items, Reducibility::Le2, &r).unwrap();
        let cat = poset_to_category(&d.poset);
        let n = d.poset.len();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(cat.coproduct(a, b), d.poset.join(a, b), "seed {seed}");
                for z in 0..n {
                    if d.poset.leq(a, z) && d.poset.leq(b, z) {
                        assert_eq!(cat.pullback(a, b, z), d.poset.meet(a, b));
                    }
                }
            }
        }
    }
}
