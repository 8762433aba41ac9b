use std::collections::BTreeMap;

use serde_json::{json, Value};
use unitary_charmap::bruteforce::{symmetric_stabilizers, BruteConfig, BruteGroup, Involution};
use unitary_charmap::charmap::char_table;
use unitary_charmap::multipartitions::{centralizer_order, class_size, enumerate_mp, group_order};
use unitary_charmap::orbits::{enumerate_orbits, orbit_count};
use unitary_charmap::reptables::{
    degree_records, gelfand_graev, model_decomposition, multiplicities, sp_induction, value_at_identity,
};
use unitary_charmap::{Cyclotomic, MultiPartition, OrbitKind, Result};

use crate::render::{approx, exact, Doc, Table};

/// Resolved command-line parameters.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub n: usize,
    pub q: u64,
    pub m: Option<usize>,
    pub r: Option<usize>,
    pub allow_even_q: bool,
    pub parallel: bool,
    pub brute: BruteConfig,
}

impl Ctx {
    pub fn m(&self) -> usize {
        self.m.unwrap_or(self.n)
    }
}

pub fn orbits(ctx: &Ctx) -> Result<Doc> {
    let max = ctx.m() as u32;
    let mut table = Table::new(["kind", "orbit", "size", "members"]);
    let mut js = serde_json::Map::new();
    for (kind, tag) in [(OrbitKind::Theta, "theta"), (OrbitKind::Phi, "phi")] {
        let mut list = Vec::new();
        for o in enumerate_orbits(ctx.q, kind, max) {
            let members = o.members();
            table.push(vec![
                tag.into(),
                o.to_string(),
                o.size.to_string(),
                members.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
            ]);
            list.push(json!({"orbit": o.to_string(), "size": o.size, "residue": o.residue, "members": members}));
        }
        js.insert(tag.into(), Value::Array(list));
    }
    let counts: Vec<Value> = (1..=max).map(|r| json!({"r": r, "d": orbit_count(ctx.q, r).to_string()})).collect();
    for r in 1..=max {
        table.push(vec!["d_r".into(), String::new(), r.to_string(), orbit_count(ctx.q, r).to_string()]);
    }
    let json = json!({
        "schema": 1,
        "q": ctx.q,
        "max_size": max,
        "theta": js["theta"],
        "phi": js["phi"],
        "orbit_counts": counts,
    });
    Ok(Doc::new(json, table))
}

pub fn classes(ctx: &Ctx) -> Result<Doc> {
    let order = group_order(ctx.n, ctx.q);
    let mut table = Table::new(["class", "centralizer", "size"]);
    let mut list = Vec::new();
    for mu in enumerate_mp(ctx.q, OrbitKind::Phi, ctx.n) {
        let a = centralizer_order(&mu);
        let s = class_size(&mu);
        table.push(vec![mu.to_string(), a.to_string(), s.to_string()]);
        list.push(json!({"mu": mu.to_json(), "label": mu.to_string(), "centralizer": a.to_string(), "size": s.to_string()}));
    }
    let json = json!({"schema": 1, "n": ctx.n, "q": ctx.q, "order": order.to_string(), "classes": list});
    Ok(Doc::new(json, table))
}

pub fn chartable(ctx: &Ctx) -> Result<Doc> {
    let t = char_table(ctx.n, ctx.q, ctx.parallel)?;
    let header: Vec<String> = std::iter::once("chi".to_string()).chain(t.cols.iter().map(ToString::to_string)).collect();
    let mut exact_t = Table::new(header.clone());
    let mut approx_t = Table::new(header);
    for (lam, row) in t.rows.iter().zip(&t.values) {
        exact_t.push(std::iter::once(lam.to_string()).chain(row.iter().map(exact)).collect());
        approx_t.push(std::iter::once(lam.to_string()).chain(row.iter().map(approx)).collect());
    }
    let mut doc = Doc::new(t.to_json(), exact_t);
    doc.pretty = Some(approx_t);
    doc.preamble = Some(format!("U({}, F_{}): {} classes, values in Q(z{})\n", t.n, t.q * t.q, t.cols.len(), t.conductor));
    Ok(doc)
}

pub fn degrees(ctx: &Ctx) -> Result<Doc> {
    let recs = degree_records(ctx.n, ctx.q)?;
    let mut table = Table::new(["label", "degree_poly", "degree", "tau_parity", "ht", "o_conj"]);
    let mut list = Vec::new();
    for r in &recs {
        table.push(vec![
            r.label.to_string(),
            r.degree_poly.to_string(),
            r.degree.to_string(),
            r.tau_parity.to_string(),
            r.ht.to_string(),
            r.o_conj.to_string(),
        ]);
        list.push(json!({
            "label": r.label.to_json(),
            "degree_poly": r.degree_poly.to_string(),
            "degree": r.degree.to_string(),
            "tau_parity": r.tau_parity,
            "ht": r.ht,
            "o_conj": r.o_conj,
        }));
    }
    Ok(Doc::new(json!({"schema": 1, "n": ctx.n, "q": ctx.q, "degrees": list}), table))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Decomposition {
    GelfandGraev,
    SpInduction,
    Model,
}

fn mult_json(mult: &BTreeMap<MultiPartition, Cyclotomic>) -> Vec<Value> {
    mult.iter().map(|(l, c)| json!({"chi": l.to_json(), "label": l.to_string(), "mult": exact(c)})).collect()
}

fn mult_table(table: &mut Table, tag: &str, mult: &BTreeMap<MultiPartition, Cyclotomic>) {
    for (l, c) in mult {
        table.push(vec![tag.to_string(), l.to_string(), exact(c)]);
    }
}

pub fn decompose(ctx: &Ctx, which: Decomposition) -> Result<Doc> {
    let mut table = Table::new(["term", "chi", "multiplicity"]);
    let json = match which {
        Decomposition::GelfandGraev => {
            let m = ctx.m();
            let f = gelfand_graev(m, ctx.q)?;
            let mult = multiplicities(&f)?;
            mult_table(&mut table, "gelfand-graev", &mult);
            json!({
                "schema": 1, "kind": "gelfand-graev", "m": m, "q": ctx.q,
                "degree": exact(&value_at_identity(&f)?),
                "multiplicities": mult_json(&mult),
            })
        }
        Decomposition::SpInduction => {
            let r = ctx.r.unwrap_or((ctx.n / 2).max(1));
            let f = sp_induction(r, ctx.q, ctx.allow_even_q)?;
            let mult = multiplicities(&f)?;
            mult_table(&mut table, "sp-induction", &mult);
            json!({
                "schema": 1, "kind": "sp-induction", "r": r, "q": ctx.q,
                "degree": exact(&value_at_identity(&f)?),
                "conjectural": ctx.q % 2 == 0,
                "multiplicities": mult_json(&mult),
            })
        }
        Decomposition::Model => {
            let m = ctx.m();
            let d = model_decomposition(m, ctx.q, ctx.allow_even_q)?;
            let terms: Vec<Value> = d
                .terms
                .iter()
                .map(|t| {
                    mult_table(&mut table, &format!("r={}", t.r), &t.multiplicities);
                    json!({"r": t.r, "matches_prediction": t.matches_prediction, "multiplicities": mult_json(&t.multiplicities)})
                })
                .collect();
            json!({
                "schema": 1, "kind": "model", "m": m, "q": ctx.q,
                "covers_once": d.covers_once, "conjectural": d.conjectural, "terms": terms,
            })
        }
    };
    Ok(Doc::new(json, table))
}

pub fn bruteforce(ctx: &Ctx) -> Result<Doc> {
    let g = BruteGroup::new(ctx.n, ctx.q, &ctx.brute)?;
    let census = g.class_census()?;
    let order = group_order(ctx.n, ctx.q);
    let t = char_table(ctx.n, ctx.q, ctx.parallel)?;
    let fs = g.twisted_fs(&t, Involution::TransposeInverse)?;
    let mut table = Table::new(["item", "label", "value", "expected"]);
    let mut classes = Vec::new();
    for (mu, size) in &census {
        let expected = &order / centralizer_order(mu);
        table.push(vec!["class".into(), mu.to_string(), size.to_string(), expected.to_string()]);
        classes.push(json!({"mu": mu.to_json(), "label": mu.to_string(), "size": size, "expected": expected.to_string()}));
    }
    let mut indicators = serde_json::Map::new();
    for (lam, e) in t.rows.iter().zip(&fs.indicators) {
        table.push(vec!["fs".into(), lam.to_string(), exact(e), "1".into()]);
        indicators.insert(lam.to_string(), Value::String(exact(e)));
    }
    let sym = g.symmetric_count();
    table.push(vec!["symmetric_count".into(), String::new(), sym.to_string(), exact(&fs.weighted_sum)]);
    let stabs: Vec<String> = symmetric_stabilizers(ctx.n, ctx.q).iter().map(ToString::to_string).collect();
    let json = json!({
        "schema": 1,
        "n": ctx.n,
        "q": ctx.q,
        "order": g.order(),
        "classes": classes,
        "symmetric_count": sym,
        "symmetric_stabilizers": stabs,
        "fs_indicators": indicators,
        "fs_weighted_sum": exact(&fs.weighted_sum),
    });
    Ok(Doc::new(json, table))
}
