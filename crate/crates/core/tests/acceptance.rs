//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! All comparisons are exact equalities; the only tolerances are the time
//! budgets.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use unitary_charmap::bruteforce::{BruteConfig, BruteGroup, Involution};
use unitary_charmap::charmap::{
    char_table, circ_product, dl_character, ls_sum, multiply_power_sums, star_product, tau, SymBasis, SymElement,
};
use unitary_charmap::multipartitions::{centralizer_order, enumerate_mp, group_order};
use unitary_charmap::orbits::orbit_count;
use unitary_charmap::reptables::{
    charprod_parity, degree_hook, degree_sum, even_degree_sum, gelfand_graev, model_decomposition, multiplicities,
    value_at_identity,
};
use unitary_charmap::{Cyclotomic, OrbitKind, Rational};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn brute(n: usize, q: u64) -> Result<BruteGroup, String> {
    BruteGroup::new(n, q, &BruteConfig::default()).map_err(|e| e.to_string())
}

const BRUTE_SMALL: [(usize, u64); 4] = [(1, 2), (1, 3), (2, 2), (2, 3)];

fn class_data() -> Outcome {
    for (n, q) in BRUTE_SMALL {
        let g = brute(n, q)?;
        let census = g.class_census().map_err(|e| e.to_string())?;
        let labels = enumerate_mp(q, OrbitKind::Phi, n);
        ensure(census.len() == labels.len(), || format!("n={n} q={q}: {} classes, expected {}", census.len(), labels.len()))?;
        let order = group_order(n, q);
        for mu in &labels {
            let expected = &order / centralizer_order(mu);
            let got = census.get(mu).map(|c| BigInt::from(*c));
            ensure(got.as_ref() == Some(&expected), || format!("n={n} q={q} {mu}: size {got:?}, expected {expected}"))?;
        }
    }
    let nine = brute(2, 2)?.class_census().map_err(|e| e.to_string())?.len();
    ensure(nine == 9, || format!("U(2, F_4) has {nine} classes"))?;
    Ok("class counts and sizes |U|/a_mu match enumeration".into())
}

fn orthogonality() -> Outcome {
    for q in [2, 3] {
        for n in 1..=3 {
            let t = char_table(n, q, true).map_err(|e| e.to_string())?;
            let bad = t.orthogonality_failures().map_err(|e| e.to_string())?;
            ensure(bad.is_empty(), || format!("n={n} q={q}: {} non-orthonormal pairs", bad.len()))?;
        }
    }
    Ok("all row pairs orthonormal, n <= 3, q in {2,3}".into())
}

fn degrees() -> Outcome {
    for q in [2, 3] {
        for n in 1..=3 {
            let t = char_table(n, q, true).map_err(|e| e.to_string())?;
            for (lam, d) in t.rows.iter().zip(t.degrees()) {
                let h = degree_hook(lam).map_err(|e| e.to_string())?;
                ensure(h == d, || format!("{lam}: identity value {d}, hook formula {h}"))?;
            }
        }
    }
    let mut degs = char_table(2, 2, true).map_err(|e| e.to_string())?.degrees();
    degs.sort();
    let expected: Vec<BigInt> = [1, 1, 1, 1, 1, 1, 2, 2, 2].into_iter().map(BigInt::from).collect();
    ensure(degs == expected, || format!("U(2, F_4) degrees {degs:?}"))?;
    // order 18, nine classes and six linear characters pin the multiset
    let g = brute(2, 2)?;
    let linear = g.order() / g.derived_subgroup_order();
    let classes = g.class_census().map_err(|e| e.to_string())?.len();
    let square_sum: BigInt = degs.iter().map(|d| d * d).sum();
    ensure(linear == 6 && classes == 9 && square_sum == BigInt::from(g.order()), || {
        format!("brute data: {linear} linear, {classes} classes, order {}", g.order())
    })?;
    Ok("hook formula equals identity column; U(2, F_4) degrees 1^6 2^3".into())
}

fn degree_sums() -> Outcome {
    for q in [2, 3, 4] {
        for m in 1..=4 {
            let s = degree_sum(m, q).map_err(|e| e.to_string())?;
            ensure(s.agree(), || format!("m={m} q={q}: {s:?}"))?;
        }
    }
    let v = degree_sum(2, 2).map_err(|e| e.to_string())?.via_hooks;
    ensure(v == 12.into(), || format!("m=2 q=2 gives {v}"))?;
    for (n, q) in BRUTE_SMALL {
        let c = brute(n, q)?.symmetric_count();
        let s = degree_sum(n, q).map_err(|e| e.to_string())?.via_hooks;
        ensure(BigInt::from(c) == s, || format!("n={n} q={q}: {c} symmetric elements, degree sum {s}"))?;
    }
    Ok("hooks = closed form = generating series; equals symmetric counts".into())
}

fn even_sums() -> Outcome {
    for q in [2, 3] {
        for m in 1..=2 {
            let s = even_degree_sum(m, q).map_err(|e| e.to_string())?;
            ensure(s.agree(), || format!("2m={} q={q}: {s:?}", 2 * m))?;
        }
    }
    let v = even_degree_sum(1, 2).map_err(|e| e.to_string())?.via_hooks;
    ensure(v == 3.into(), || format!("2m=2 q=2 gives {v}"))?;
    Ok("closed form and |U|/|Sp| for 2m <= 4".into())
}

fn products() -> Outcome {
    let q = 2;
    let by_size: Vec<Vec<SymElement>> = (1..=3)
        .map(|n| {
            enumerate_mp(q, OrbitKind::Phi, n)
                .into_iter()
                .map(|m| SymElement::basis_element(SymBasis::Pi, m).unwrap())
                .collect()
        })
        .collect();
    let mut pairs = 0;
    for i in 0..3 {
        for j in 0..3 {
            if i + j + 2 > 4 {
                continue;
            }
            for a in &by_size[i] {
                for b in &by_size[j] {
                    let err = |e: unitary_charmap::Error| e.to_string();
                    let s = star_product(a, b).map_err(err)?;
                    let c = circ_product(a, b).map_err(err)?;
                    let t = multiply_power_sums(a, b, SymBasis::PTheta).map_err(err)?;
                    let f = multiply_power_sums(a, b, SymBasis::PPhi).map_err(err)?;
                    ensure(s == c && s == t && s == f, || format!("{a} * {b}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs: star = circ, multiplicative in both power-sum bases"))
}

fn deligne_lusztig() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for nu in enumerate_mp(2, OrbitKind::Theta, n) {
            let r = dl_character(&nu).map_err(|e| e.to_string())?;
            ensure(r.agrees(), || format!("{nu}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} torus labels, both paths identical"))
}

fn lusztig_srinivasan() -> Outcome {
    for n in 1..=3 {
        let t = char_table(n, 2, true).map_err(|e| e.to_string())?;
        for lam in &t.rows {
            let r = ls_sum(lam).map_err(|e| e.to_string())?;
            let i = t.rows.iter().position(|x| *x == lam.conjugate()).ok_or("conjugate label missing")?;
            let row = t.row_element(i).map_err(|e| e.to_string())?;
            ensure(r == row || r == row.scale(&Cyclotomic::from_int(-1)), || format!("{lam}: not +-row of conjugate"))?;
            let one = value_at_identity(&r).map_err(|e| e.to_string())?;
            let positive = one.as_rational().is_some_and(|v| v > Rational::from_integer(0.into()));
            ensure(positive, || format!("{lam}: identity value {one}"))?;
        }
    }
    Ok("ls_sum(lambda) = chi^{lambda'}, identity values positive".into())
}

fn gelfand_graev_check() -> Outcome {
    for q in [2, 3] {
        for m in 1..=4 {
            let mult = multiplicities(&gelfand_graev(m, q).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let support: Vec<_> = enumerate_mp(q, OrbitKind::Theta, m).into_iter().filter(|l| l.ht() == 1).collect();
            ensure(mult.len() == support.len(), || format!("m={m} q={q}: support size {}", mult.len()))?;
            for l in support {
                ensure(mult.get(&l) == Some(&Cyclotomic::one()), || format!("m={m} q={q}: {l} has {:?}", mult.get(&l)))?;
            }
        }
    }
    let d = value_at_identity(&gelfand_graev(2, 2).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(d == Cyclotomic::from_int(9), || format!("Gamma_(2)(1) = {d}"))?;
    Ok("multiplicity free on ht = 1; Gamma_(2)(1) = 9".into())
}

fn model() -> Outcome {
    for m in 1..=4 {
        let d = model_decomposition(m, 3, false).map_err(|e| e.to_string())?;
        for t in &d.terms {
            ensure(t.matches_prediction, || format!("m={m} r={}", t.r))?;
        }
        ensure(d.covers_once, || format!("m={m}: union is not every character once"))?;
    }
    Ok("q = 3, m <= 4: supports o(lambda') = m - 2r, union covers once".into())
}

fn non_character() -> Outcome {
    let b = enumerate_mp(2, OrbitKind::Theta, 1)[0].clone();
    let sign = if tau(&b) % 2 == 1 { -1 } else { 1 };
    let chi = SymElement::from_terms(2, 1, SymBasis::STheta, [(b.clone(), Cyclotomic::from_int(sign))])
        .map_err(|e| e.to_string())?;
    let mult = multiplicities(&circ_product(&chi, &chi).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let zero = Rational::from_integer(0.into());
    let negative = mult.values().any(|c| c.as_rational().is_some_and(|r| r < zero));
    ensure(negative, || "no negative multiplicity".into())?;
    let parity = charprod_parity(&b, &b).map_err(|e| e.to_string())?;
    ensure(!parity, || "charprod_parity returned true".into())?;
    Ok(format!("chi o chi for chi = {b} has a negative coefficient; parity test false"))
}

fn indicators() -> Outcome {
    for (n, q) in [(1, 2), (2, 2), (2, 3)] {
        let g = brute(n, q)?;
        let t = char_table(n, q, true).map_err(|e| e.to_string())?;
        let rep = g.twisted_fs(&t, Involution::TransposeInverse).map_err(|e| e.to_string())?;
        ensure(rep.indicators.iter().all(|e| *e == Cyclotomic::one()), || format!("n={n} q={q}: indicator not 1"))?;
        let sym = g.symmetric_count();
        ensure(rep.weighted_sum == Cyclotomic::from_int(sym as i64), || {
            format!("n={n} q={q}: weighted sum {} vs {sym}", rep.weighted_sum)
        })?;
    }
    Ok("all indicators 1; weighted sums equal symmetric counts".into())
}

fn divsum() -> Outcome {
    for q in [2u64, 3, 4, 5] {
        for m in 1..=8u32 {
            let lhs: i128 = (1..=m).filter(|r| m % r == 0).map(|r| r as i128 * orbit_count(q, r)).sum();
            let rhs = (q as i128).pow(m) - if m % 2 == 0 { 1 } else { -1 };
            ensure(lhs == rhs, || format!("q={q} m={m}: {lhs} vs {rhs}"))?;
        }
    }
    Ok("m <= 8, q in {2,3,4,5}".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 13] = [
        ("class data", class_data, 10),
        ("orthogonality", orthogonality, 120),
        ("degrees", degrees, 120),
        ("degree sums", degree_sums, 120),
        ("even-conjugate sum", even_sums, 120),
        ("product equality", products, 60),
        ("Deligne-Lusztig paths", deligne_lusztig, 120),
        ("Lusztig-Srinivasan", lusztig_srinivasan, 120),
        ("Gelfand-Graev", gelfand_graev_check, 120),
        ("model", model, 180),
        ("non-character witness", non_character, 60),
        ("indicators", indicators, 60),
        ("orbit counting", divsum, 5),
    ];
    let mut failed = 0;
    for (i, (label, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(*budget);
        let (status, detail) = match (&result, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over time budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {status} {label}: {detail} [exact, {:.2} s of {budget} s]",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 13 passed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
