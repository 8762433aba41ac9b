use num_bigint::BigInt;
use unitary_charmap::bruteforce::{enumerate_group, symmetric_count_closed_form, BruteConfig, BruteGroup, Involution};
use unitary_charmap::charmap::char_table;
use unitary_charmap::multipartitions::{centralizer_order, enumerate_mp, group_order};
use unitary_charmap::reptables::degree_sum;
use unitary_charmap::{Cyclotomic, OrbitKind};

const SMALL: [(usize, u64); 4] = [(1, 2), (1, 3), (2, 2), (2, 3)];

#[test]
fn enumerated_orders_and_membership() {
    let cfg = BruteConfig::default();
    for (n, q, expected) in [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (2, 2, 18), (2, 3, 96)] {
        let g = BruteGroup::new(n, q, &cfg).unwrap();
        assert_eq!(g.order(), expected);
        assert_eq!(BigInt::from(expected), group_order(n, q));
        assert!(g.elements().iter().all(|a| g.is_unitary(a)));
        let mut sorted = g.elements().to_vec();
        sorted.dedup();
        assert_eq!(sorted.len(), expected);
        assert_eq!(enumerate_group(n, q, &cfg).unwrap(), g.elements());
    }
}

#[test]
fn census_matches_centralizers() {
    let cfg = BruteConfig::default();
    for (n, q) in SMALL {
        let g = BruteGroup::new(n, q, &cfg).unwrap();
        let census = g.class_census().unwrap();
        let labels = enumerate_mp(q, OrbitKind::Phi, n);
        assert_eq!(census.len(), labels.len(), "n={n} q={q}");
        let order = group_order(n, q);
        for mu in labels {
            assert_eq!(BigInt::from(census[&mu]), &order / centralizer_order(&mu), "{mu}");
        }
    }
}

#[test]
fn symmetric_counts() {
    let cfg = BruteConfig::default();
    for (n, q) in SMALL {
        let g = BruteGroup::new(n, q, &cfg).unwrap();
        let count = BigInt::from(g.symmetric_count());
        assert_eq!(count, degree_sum(n, q).unwrap().via_hooks, "n={n} q={q}");
        assert_eq!(count, symmetric_count_closed_form(n, q));
    }
    assert_eq!(symmetric_count_closed_form(2, 3), 36.into());
}

#[test]
fn indicators() {
    let cfg = BruteConfig::default();
    for (n, q) in [(1, 2), (2, 2), (2, 3)] {
        let g = BruteGroup::new(n, q, &cfg).unwrap();
        let t = char_table(n, q, true).unwrap();
        let rep = g.twisted_fs(&t, Involution::TransposeInverse).unwrap();
        assert!(rep.indicators.iter().all(|e| *e == Cyclotomic::one()), "n={n} q={q}");
        let sym = g.symmetric_count();
        assert_eq!(rep.involutions, sym);
        assert_eq!(rep.weighted_sum, Cyclotomic::from_int(sym as i64));
    }
    let g = BruteGroup::new(2, 2, &cfg).unwrap();
    let t = char_table(2, 2, true).unwrap();
    let rep = g.twisted_fs(&t, Involution::Trivial).unwrap();
    let squares_one = g.elements().iter().filter(|a| g.mul(a, a) == g.identity()).count() as i64;
    assert_eq!(rep.weighted_sum, Cyclotomic::from_int(squares_one));
    assert_eq!(rep.involutions, squares_one as u64);
}

#[test]
fn u3_f4_extended() {
    let cfg = BruteConfig { max_group_order: 100_000, extended: true };
    let g = BruteGroup::new(3, 2, &cfg).unwrap();
    assert_eq!(g.order(), 648);
    let census = g.class_census().unwrap();
    let order = group_order(3, 2);
    for mu in enumerate_mp(2, OrbitKind::Phi, 3) {
        assert_eq!(BigInt::from(census[&mu]), &order / centralizer_order(&mu), "{mu}");
        assert_eq!(g.classify(&g.class_representative(&mu).unwrap()).unwrap(), mu);
    }
    assert_eq!(BigInt::from(g.symmetric_count()), symmetric_count_closed_form(3, 2));
    assert_eq!(BigInt::from(g.symmetric_count()), degree_sum(3, 2).unwrap().via_hooks);
}

#[test]
fn u2_f4_degrees() {
    // nine classes, |G/G'| = 6 linear characters, the other three have
    // squared degrees summing to 18 - 6
    let g = BruteGroup::new(2, 2, &BruteConfig::default()).unwrap();
    assert_eq!(g.order() / g.derived_subgroup_order(), 6);
    let mut degs: Vec<BigInt> = char_table(2, 2, false).unwrap().degrees();
    degs.sort();
    let expected: Vec<BigInt> = [1, 1, 1, 1, 1, 1, 2, 2, 2].into_iter().map(BigInt::from).collect();
    assert_eq!(degs, expected);
}
