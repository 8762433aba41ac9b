use unitary_charmap::charmap::{char_table, circ_product, tau};
use unitary_charmap::multipartitions::enumerate_mp;
use unitary_charmap::reptables::{
    charprod_parity, degree_hook, degree_sum, even_degree_sum, gelfand_graev, hook_length_identity,
    model_decomposition, multiplicities, sp_induction, value_at_identity,
};
use unitary_charmap::charmap::{SymBasis, SymElement};
use unitary_charmap::{Cyclotomic, OrbitKind};

#[test]
fn degree_sums_three_ways() {
    for q in [2, 3, 4] {
        for m in 1..=4 {
            let s = degree_sum(m, q).unwrap();
            assert!(s.agree(), "m={m} q={q}: {s:?}");
        }
    }
    for q in [5] {
        for m in 1..=3 {
            assert!(degree_sum(m, q).unwrap().agree());
        }
    }
}

#[test]
fn even_sums() {
    for q in [2, 3] {
        for m in 1..=2 {
            assert!(even_degree_sum(m, q).unwrap().agree(), "m={m} q={q}");
        }
    }
    assert_eq!(even_degree_sum(2, 2).unwrap().via_hooks, 108.into());
}

#[test]
fn hooks_match_table() {
    for q in [2, 3] {
        for n in 1..=3 {
            let t = char_table(n, q, true).unwrap();
            for (lam, d) in t.rows.iter().zip(t.degrees()) {
                assert_eq!(degree_hook(lam).unwrap(), d, "{lam}");
            }
        }
    }
}

#[test]
fn hook_identity_up_to_six() {
    for n in 1..=6 {
        for lam in enumerate_mp(2, OrbitKind::Theta, n) {
            assert!(hook_length_identity(&lam), "{lam}");
        }
    }
}

#[test]
fn gelfand_graev_multiplicity_free() {
    for q in [2, 3] {
        for m in 1..=4 {
            let mult = multiplicities(&gelfand_graev(m, q).unwrap()).unwrap();
            let expected: Vec<_> = enumerate_mp(q, OrbitKind::Theta, m).into_iter().filter(|l| l.ht() == 1).collect();
            assert_eq!(mult.len(), expected.len(), "m={m} q={q}");
            for l in expected {
                assert_eq!(mult.get(&l), Some(&Cyclotomic::one()), "{l}");
            }
        }
    }
}

#[test]
fn sp_induction_small() {
    let s = sp_induction(1, 3, false).unwrap();
    let mult = multiplicities(&s).unwrap();
    assert_eq!(mult.len(), 4);
    assert!(mult.keys().all(|l| l.parts().values().all(|p| p.parts() == [1, 1])));
    assert_eq!(value_at_identity(&s).unwrap(), Cyclotomic::from_int(4));
    let triv = sp_induction(0, 3, false).unwrap();
    assert_eq!(triv.degree(), 0);
    assert_eq!(triv.coeffs().len(), 1);
    assert!(sp_induction(1, 2, false).is_err());
}

#[test]
fn model_q3() {
    for m in 1..=4 {
        let d = model_decomposition(m, 3, false).unwrap();
        assert!(d.terms.iter().all(|t| t.matches_prediction), "m={m}");
        assert!(d.covers_once, "m={m}");
    }
}

#[test]
fn non_character_product() {
    let b = enumerate_mp(2, OrbitKind::Theta, 1)[0].clone();
    let sign = if tau(&b) % 2 == 1 { -1 } else { 1 };
    let chi = SymElement::from_terms(2, 1, SymBasis::STheta, [(b.clone(), Cyclotomic::from_int(sign))]).unwrap();
    let prod = circ_product(&chi, &chi).unwrap();
    let mult = multiplicities(&prod).unwrap();
    assert!(mult.values().any(|c| c.as_rational().map(|r| r < unitary_charmap::exactnum::int(0)).unwrap_or(false)));
    assert!(!charprod_parity(&b, &b).unwrap());
}
