//! Change of basis along the chain `s_Θ ↔ p_Θ ↔ p_Φ ↔ P ≡ π`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::{green_at, SymBasis, SymElement};
use crate::exactnum::{Cyclotomic, Rational};
use crate::multipartitions::MultiPartition;
use crate::orbits::{inverse_transform_p, transform_p, OrbitId};
use crate::partitions::Partition;
use crate::symfunc::tables as sym_tables;
use crate::Result;

type Terms = Vec<(MultiPartition, Cyclotomic)>;

fn rank(b: SymBasis) -> usize {
    match b {
        SymBasis::STheta => 0,
        SymBasis::PTheta => 1,
        SymBasis::PPhi => 2,
        SymBasis::P | SymBasis::Pi => 3,
    }
}

fn at_rank(r: usize) -> SymBasis {
    [SymBasis::STheta, SymBasis::PTheta, SymBasis::PPhi, SymBasis::P][r]
}

/// Expands a product of factors, each a sum of single-orbit terms, merging
/// parts that land on the same orbit.
fn expand_product(q: u64, kind: crate::orbits::OrbitKind, factors: &[Terms]) -> Terms {
    let mut acc: BTreeMap<MultiPartition, Cyclotomic> = BTreeMap::new();
    acc.insert(MultiPartition::empty(kind, q), Cyclotomic::one());
    for factor in factors {
        let mut next: BTreeMap<MultiPartition, Cyclotomic> = BTreeMap::new();
        for (mu, c) in &acc {
            for (nu, d) in factor {
                let e = next.entry(mu.union(nu)).or_insert_with(Cyclotomic::zero);
                *e += &(c * d);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(k, v)| (k, v.normalize()))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

fn rational(r: Rational) -> Cyclotomic {
    Cyclotomic::from_rational(r)
}

fn s_to_p(mu: &MultiPartition) -> Terms {
    let factors: Vec<Terms> = mu
        .parts()
        .iter()
        .map(|(o, lam)| {
            let t = sym_tables(lam.size());
            let l = t.index[lam];
            t.parts
                .iter()
                .enumerate()
                .filter(|(nu, _)| t.chi[l][*nu] != 0)
                .map(|(nu, p)| {
                    let c = Rational::new(t.chi[l][nu].into(), t.z[nu].into());
                    (MultiPartition::single(*o, p.clone()), rational(c))
                })
                .collect()
        })
        .collect();
    expand_product(mu.q(), mu.kind(), &factors)
}

fn p_to_s(mu: &MultiPartition) -> Terms {
    let factors: Vec<Terms> = mu
        .parts()
        .iter()
        .map(|(o, nu)| {
            let t = sym_tables(nu.size());
            let j = t.index[nu];
            t.parts
                .iter()
                .enumerate()
                .filter(|(l, _)| t.chi[*l][j] != 0)
                .map(|(l, p)| (MultiPartition::single(*o, p.clone()), Cyclotomic::from_int(t.chi[l][j])))
                .collect()
        })
        .collect();
    expand_product(mu.q(), mu.kind(), &factors)
}

fn atoms_to_terms(atoms: &[(OrbitId, u32, Cyclotomic)]) -> Terms {
    atoms
        .iter()
        .map(|(o, k, c)| (MultiPartition::single(*o, Partition::row(*k as usize)), c.clone()))
        .collect()
}

fn ptheta_to_pphi(mu: &MultiPartition) -> Result<Terms> {
    let mut factors = Vec::new();
    for (phi, nu) in mu.parts() {
        for &k in nu.parts() {
            factors.push(atoms_to_terms(&transform_p(phi, k as u32)?));
        }
    }
    Ok(expand_product(mu.q(), crate::orbits::OrbitKind::Phi, &factors))
}

fn pphi_to_ptheta(mu: &MultiPartition) -> Result<Terms> {
    let mut factors = Vec::new();
    for (f, nu) in mu.parts() {
        for &j in nu.parts() {
            factors.push(atoms_to_terms(&inverse_transform_p(f, j as u32)?));
        }
    }
    Ok(expand_product(mu.q(), crate::orbits::OrbitKind::Theta, &factors))
}

fn pphi_to_hl(mu: &MultiPartition) -> Terms {
    let factors: Vec<Terms> = mu
        .parts()
        .iter()
        .map(|(f, gamma)| {
            let g = green_at(mu.q(), gamma.size(), f.size);
            let row = &g.values[g.index[gamma]];
            g.parts
                .iter()
                .zip(row)
                .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                .map(|(p, v)| (MultiPartition::single(*f, p.clone()), rational(v.clone())))
                .collect()
        })
        .collect();
    expand_product(mu.q(), mu.kind(), &factors)
}

fn hl_to_pphi(mu: &MultiPartition) -> Terms {
    let factors: Vec<Terms> = mu
        .parts()
        .iter()
        .map(|(f, m)| {
            let g = green_at(mu.q(), m.size(), f.size);
            let row = &g.inverse[g.index[m]];
            g.parts
                .iter()
                .zip(row)
                .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                .map(|(p, v)| (MultiPartition::single(*f, p.clone()), rational(v.clone())))
                .collect()
        })
        .collect();
    expand_product(mu.q(), mu.kind(), &factors)
}

type StepCache = Mutex<HashMap<(usize, usize, MultiPartition), Arc<Terms>>>;

/// Image of one basis element under a single step of the chain.
fn step_image(from: usize, to: usize, mu: &MultiPartition) -> Result<Arc<Terms>> {
    static CACHE: OnceLock<StepCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (from, to, mu.clone());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let terms = match (from, to) {
        (0, 1) => s_to_p(mu),
        (1, 0) => p_to_s(mu),
        (1, 2) => ptheta_to_pphi(mu)?,
        (2, 1) => pphi_to_ptheta(mu)?,
        (2, 3) => pphi_to_hl(mu),
        (3, 2) => hl_to_pphi(mu),
        _ => unreachable!("not a single step"),
    };
    let v = Arc::new(terms);
    cache.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn apply_step(f: &SymElement, to: usize) -> Result<SymElement> {
    let from = rank(f.basis);
    let mut acc: BTreeMap<MultiPartition, Cyclotomic> = BTreeMap::new();
    for (mu, c) in &f.coeffs {
        for (nu, d) in step_image(from, to, mu)?.iter() {
            let e = acc.entry(nu.clone()).or_insert_with(Cyclotomic::zero);
            *e += &(c * d);
        }
    }
    let mut out = SymElement::zero(f.q, f.degree, at_rank(to));
    for (mu, c) in acc {
        let c = c.normalize();
        if !c.is_zero() {
            out.coeffs.insert(mu, c);
        }
    }
    Ok(out)
}

/// Rewrites `f` in the basis `target`. The `π` and `P` bases share
/// coefficients, so a class function and its characteristic image convert
/// into each other by relabelling.
pub fn convert(f: &SymElement, target: SymBasis) -> Result<SymElement> {
    let mut cur = f.clone();
    let goal = rank(target);
    while rank(cur.basis) != goal {
        let r = rank(cur.basis);
        let next = if r < goal { r + 1 } else { r - 1 };
        cur = apply_step(&cur, next)?;
    }
    if cur.basis != target {
        cur.basis = target;
    }
    Ok(cur)
}
