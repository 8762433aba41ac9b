use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;
use unitary_charmap::bruteforce::{supported, symmetric_count_closed_form, BruteGroup, Involution};
use unitary_charmap::charmap::{char_table, circ_product, dl_character, multiply_power_sums, star_product};
use unitary_charmap::charmap::{SymBasis, SymElement};
use unitary_charmap::multipartitions::{centralizer_order, enumerate_mp, group_order};
use unitary_charmap::orbits::orbit_count;
use unitary_charmap::reptables::{degree_sum, even_degree_sum};
use unitary_charmap::{Cyclotomic, Error, OrbitKind, Result};

use crate::commands::Ctx;
use crate::render::{exact, Doc, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    Orthogonality,
    ClassEquation,
    DegreeSum,
    EvenSum,
    Sameprod,
    Dl,
    Unsym,
    Fs,
    Divsum,
    All,
}

const EACH: [Check; 9] = [
    Check::Orthogonality,
    Check::ClassEquation,
    Check::DegreeSum,
    Check::EvenSum,
    Check::Sameprod,
    Check::Dl,
    Check::Unsym,
    Check::Fs,
    Check::Divsum,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

pub struct Outcome {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

fn outcome(name: &'static str, ok: bool, detail: String) -> Outcome {
    Outcome { name, status: if ok { Status::Pass } else { Status::Fail }, detail }
}

fn name(c: Check) -> &'static str {
    match c {
        Check::Orthogonality => "orthogonality",
        Check::ClassEquation => "class-equation",
        Check::DegreeSum => "degree-sum",
        Check::EvenSum => "even-sum",
        Check::Sameprod => "sameprod",
        Check::Dl => "dl",
        Check::Unsym => "unsym",
        Check::Fs => "fs",
        Check::Divsum => "divsum",
        Check::All => "all",
    }
}

fn brute(ctx: &Ctx, n: usize) -> Result<BruteGroup> {
    BruteGroup::new(n, ctx.q, &ctx.brute)
}

fn brute_available(ctx: &Ctx, n: usize) -> bool {
    supported(n, ctx.q, ctx.brute.extended)
        && u128::try_from(group_order(n, ctx.q)).is_ok_and(|o| o <= ctx.brute.max_group_order)
}

fn run_one(ctx: &Ctx, check: Check) -> Result<Outcome> {
    let n = ctx.m();
    let q = ctx.q;
    let nm = name(check);
    Ok(match check {
        Check::Orthogonality => {
            let t = char_table(n, q, ctx.parallel)?;
            let bad = t.orthogonality_failures()?;
            let detail = if bad.is_empty() {
                format!("{} characters, all pairs orthonormal", t.rows.len())
            } else {
                let pairs: Vec<String> = bad.iter().take(5).map(|(i, j)| format!("({}, {})", t.rows[*i], t.rows[*j])).collect();
                format!("{} failing pairs: {}", bad.len(), pairs.join(" "))
            };
            outcome(nm, bad.is_empty(), detail)
        }
        Check::ClassEquation => {
            let order = group_order(n, q);
            let labels = enumerate_mp(q, OrbitKind::Phi, n);
            let mut sum = BigInt::zero();
            for mu in &labels {
                sum += &order / centralizer_order(mu);
            }
            let mut ok = sum == order;
            let mut detail = format!("{} classes, sizes sum to {sum}, |U| = {order}", labels.len());
            if brute_available(ctx, n) {
                let census = brute(ctx, n)?.class_census()?;
                let mismatched = labels
                    .iter()
                    .filter(|mu| census.get(*mu).map(|c| BigInt::from(*c)) != Some(&order / centralizer_order(mu)))
                    .count();
                ok &= mismatched == 0 && census.len() == labels.len();
                detail.push_str(&format!("; brute census: {} classes, {mismatched} size mismatches", census.len()));
            }
            outcome(nm, ok, detail)
        }
        Check::DegreeSum => {
            let s = degree_sum(n, q)?;
            outcome(
                nm,
                s.agree(),
                format!("value {} (closed form {}, generating series {})", s.via_hooks, s.closed_form, s.via_delta),
            )
        }
        Check::EvenSum => {
            let m = ctx.m.unwrap_or((ctx.n / 2).max(1));
            let s = even_degree_sum(m, q)?;
            outcome(
                nm,
                s.agree(),
                format!("2m = {}: value {} (closed form {}, |U|/|Sp| {})", 2 * m, s.via_hooks, s.closed_form, s.index),
            )
        }
        Check::Sameprod => {
            let mut by_size: Vec<Vec<SymElement>> = Vec::new();
            for k in 1..n {
                by_size.push(
                    enumerate_mp(q, OrbitKind::Phi, k)
                        .into_iter()
                        .map(|mu| SymElement::basis_element(SymBasis::Pi, mu))
                        .collect::<Result<_>>()?,
                );
            }
            let (mut pairs, mut bad) = (0usize, 0usize);
            for i in 0..by_size.len() {
                for j in 0..by_size.len() {
                    if i + j + 2 > n {
                        continue;
                    }
                    for a in &by_size[i] {
                        for b in &by_size[j] {
                            let s = star_product(a, b)?;
                            pairs += 1;
                            if s != circ_product(a, b)? || s != multiply_power_sums(a, b, SymBasis::PTheta)? {
                                bad += 1;
                            }
                        }
                    }
                }
            }
            outcome(nm, bad == 0, format!("{pairs} pairs with total size <= {n}, {bad} disagreements"))
        }
        Check::Dl => {
            let (mut total, mut bad) = (0usize, 0usize);
            for k in 1..=n {
                for nu in enumerate_mp(q, OrbitKind::Theta, k) {
                    total += 1;
                    if !dl_character(&nu)?.agrees() {
                        bad += 1;
                    }
                }
            }
            outcome(nm, bad == 0, format!("{total} torus labels, {bad} disagreements"))
        }
        Check::Unsym => {
            let sum = degree_sum(n, q)?.via_hooks;
            let closed = symmetric_count_closed_form(n, q);
            let mut ok = sum == closed;
            let mut detail = format!("degree sum {sum}, orbit count of symmetric matrices {closed}");
            if brute_available(ctx, n) {
                let c = brute(ctx, n)?.symmetric_count();
                ok &= BigInt::from(c) == sum;
                detail.push_str(&format!(", brute count {c}"));
            }
            outcome(nm, ok, detail)
        }
        Check::Fs => {
            if !brute_available(ctx, n) {
                return Err(Error::Unsupported(format!("no explicit group for n={n} q={q}")));
            }
            let g = brute(ctx, n)?;
            let t = char_table(n, q, ctx.parallel)?;
            let rep = g.twisted_fs(&t, Involution::TransposeInverse)?;
            let not_one = rep.indicators.iter().filter(|e| **e != Cyclotomic::one()).count();
            let sym = g.symmetric_count();
            let ok = not_one == 0 && rep.weighted_sum == Cyclotomic::from_int(sym as i64);
            outcome(
                nm,
                ok,
                format!("{not_one} indicators differ from 1, weighted sum {} vs {sym} symmetric elements", exact(&rep.weighted_sum)),
            )
        }
        Check::Divsum => {
            let mut bad = Vec::new();
            for m in 1..=n as u32 {
                let lhs: i128 = (1..=m).filter(|r| m % r == 0).map(|r| r as i128 * orbit_count(q, r)).sum();
                let rhs = (q as i128).pow(m) - if m % 2 == 0 { 1 } else { -1 };
                if lhs != rhs {
                    bad.push(format!("m={m}: {lhs} vs {rhs}"));
                }
            }
            let detail = if bad.is_empty() { format!("m = 1..{n}") } else { bad.join("; ") };
            outcome(nm, bad.is_empty(), detail)
        }
        Check::All => unreachable!("expanded by the caller"),
    })
}

/// Runs the checks and reports whether all of them passed.
pub fn verify(ctx: &Ctx, check: Check) -> Result<(Doc, bool)> {
    let outcomes: Vec<Outcome> = if check == Check::All {
        let mut out = Vec::new();
        for c in EACH {
            match run_one(ctx, c) {
                Ok(o) => out.push(o),
                Err(e @ (Error::Unsupported(_) | Error::BoundExceeded { .. })) => {
                    out.push(Outcome { name: name(c), status: Status::Skip, detail: e.to_string() })
                }
                Err(e) => return Err(e),
            }
        }
        out
    } else {
        vec![run_one(ctx, check)?]
    };
    let pass = outcomes.iter().all(|o| o.status != Status::Fail);
    let mut table = Table::new(["check", "status", "detail"]);
    let mut list = Vec::new();
    for o in &outcomes {
        table.push(vec![o.name.into(), o.status.as_str().into(), o.detail.clone()]);
        list.push(json!({"check": o.name, "status": o.status.as_str(), "detail": o.detail}));
    }
    let json = json!({
        "schema": 1,
        "n": ctx.m(),
        "q": ctx.q,
        "status": if pass { "PASS" } else { "FAIL" },
        "checks": list,
    });
    Ok((Doc::new(json, table), pass))
}
