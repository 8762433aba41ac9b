//! Per-degree transition data: S_n characters, Kostka-Foulkes and Green
//! polynomials.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::exactnum::QPoly;
use crate::partitions::{partitions_of, Partition};
use crate::{Error, Result};

fn check_sizes(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(format!("|{a}| = {} but |{b}| = {}", a.size(), b.size())));
    }
    Ok(())
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
}

fn mn_rec(beta: &mut BTreeSet<usize>, nu: &[usize]) -> i64 {
    let Some((&r, rest)) = nu.split_first() else {
        return 1;
    };
    let mut total = 0;
    let beads: Vec<usize> = beta.iter().copied().collect();
    for b in beads {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.range(b - r + 1..b).count();
        beta.remove(&b);
        beta.insert(b - r);
        let v = mn_rec(beta, rest);
        beta.remove(&(b - r));
        beta.insert(b);
        total += if between % 2 == 0 { v } else { -v };
    }
    total
}

/// Value of the irreducible character `ω^λ` of `S_n` on cycle type `ν`
/// (Murnaghan-Nakayama).
pub fn sn_char(lambda: &Partition, nu: &Partition) -> Result<i64> {
    check_sizes(lambda, nu)?;
    let mut beta: BTreeSet<usize> = beta_set(lambda).into_iter().collect();
    Ok(mn_rec(&mut beta, nu.parts()))
}

/// All semistandard tableaux of shape `lambda` and content `mu`, each given
/// as the chain of shapes filled by `1`, `1..2`, ...
fn ssyt_chains(lambda: &Partition, mu: &Partition) -> Vec<Vec<Partition>> {
    fn strips(inner: &Partition, outer: &Partition, r: usize) -> Vec<Partition> {
        // shapes κ with inner ⊆ κ ⊆ outer, κ/inner a horizontal strip of size r
        let mut out = Vec::new();
        let rows = (inner.len() + 1).min(outer.len());
        let mut cur = vec![0usize; rows];
        fn rec(
            i: usize,
            rem: usize,
            inner: &Partition,
            outer: &Partition,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == cur.len() {
                if rem == 0 {
                    out.push(Partition::from_unsorted(cur.clone()));
                }
                return;
            }
            let lo = inner.part(i);
            // horizontal strip: row i may grow up to the old row above
            let hi = if i == 0 { outer.part(0) } else { outer.part(i).min(inner.part(i - 1)) };
            for v in lo..=hi.min(lo + rem) {
                cur[i] = v;
                rec(i + 1, rem - (v - lo), inner, outer, cur, out);
            }
        }
        rec(0, r, inner, outer, &mut cur, &mut out);
        out
    }
    let mut chains = vec![vec![Partition::empty()]];
    for &m in mu.parts() {
        let mut next = Vec::new();
        for chain in chains {
            let last = chain.last().unwrap();
            for s in strips(last, lambda, m) {
                let mut c = chain.clone();
                c.push(s);
                next.push(c);
            }
        }
        chains = next;
    }
    chains.retain(|c| c.last() == Some(lambda));
    chains
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> Result<usize> {
    check_sizes(lambda, mu)?;
    Ok(ssyt_chains(lambda, mu).len())
}

fn reading_word(chain: &[Partition]) -> Vec<usize> {
    let shape = chain.last().unwrap();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    for (k, w) in chain.windows(2).enumerate() {
        for (i, row) in rows.iter_mut().enumerate() {
            for cell in row.iter_mut().take(w[1].part(i)).skip(w[0].part(i)) {
                *cell = k + 1;
            }
        }
    }
    rows.into_iter().rev().flatten().collect()
}

/// Lascoux-Schützenberger charge of a word with partition content.
pub fn charge(word: &[usize]) -> usize {
    let mut letters: Vec<Option<usize>> = word.iter().map(|&w| Some(w)).collect();
    let mut total = 0;
    loop {
        let present: BTreeSet<usize> = letters.iter().flatten().copied().collect();
        if present.is_empty() {
            return total;
        }
        let top = present.len();
        let len = letters.len();
        // rightmost 1
        let mut pos = (0..len).rev().find(|&i| letters[i] == Some(1)).expect("content is a partition");
        letters[pos] = None;
        let mut index = 0;
        for r in 2..=top {
            let mut p = pos;
            let mut wrapped = false;
            loop {
                if p == 0 {
                    p = len - 1;
                    wrapped = true;
                } else {
                    p -= 1;
                }
                if letters[p] == Some(r) {
                    break;
                }
            }
            if wrapped {
                index += 1;
            }
            total += index;
            letters[p] = None;
            pos = p;
        }
    }
}

/// Kostka-Foulkes polynomial `K_{λμ}(t)` as a generating function of charge
/// over semistandard tableaux.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    check_sizes(lambda, mu)?;
    let mut p = QPoly::zero();
    for chain in ssyt_chains(lambda, mu) {
        p.add_term(charge(&reading_word(&chain)) as i32, &crate::exactnum::int(1));
    }
    Ok(p)
}

/// Classical Green polynomial `Q_ν^μ(t)`, defined by
/// `p_ν = Σ_μ Q_ν^μ(1/t) t^{n(μ)} P_μ(t)`.
pub fn green_poly(nu: &Partition, mu: &Partition) -> Result<QPoly> {
    check_sizes(nu, mu)?;
    let t = tables(nu.size());
    Ok(t.green[t.index[nu]][t.index[mu]].clone())
}

/// Transition matrices in one degree, indexed by [`partitions_of`] order.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `chi[λ][ν] = ω^λ(ν)`.
    pub chi: Vec<Vec<i64>>,
    pub z: Vec<u128>,
    /// `kostka[λ][μ] = K_{λμ}(t)`.
    pub kostka: Vec<Vec<QPoly>>,
    /// `kostka_inv[μ][λ]`, so that `P_μ = Σ_λ kostka_inv[μ][λ] s_λ`.
    pub kostka_inv: Vec<Vec<QPoly>>,
    /// `power_to_hl[ν][μ]`, so that `p_ν = Σ_μ power_to_hl[ν][μ] P_μ`.
    pub power_to_hl: Vec<Vec<QPoly>>,
    /// `green[ν][μ] = Q_ν^μ(t)`.
    pub green: Vec<Vec<QPoly>>,
}

impl DegreeTables {
    fn build(n: usize) -> Self {
        let parts = partitions_of(n);
        let k = parts.len();
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let chi: Vec<Vec<i64>> = parts
            .iter()
            .map(|l| parts.iter().map(|nu| sn_char(l, nu).unwrap()).collect())
            .collect();
        let z = parts.iter().map(|p| p.z_stat()).collect();
        let kostka: Vec<Vec<QPoly>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| kostka_foulkes(l, m).unwrap()).collect())
            .collect();
        // K is upper unitriangular in reverse lexicographic order.
        let mut kostka_inv = vec![vec![QPoly::zero(); k]; k];
        for i in (0..k).rev() {
            kostka_inv[i][i] = QPoly::one();
            for j in i + 1..k {
                let mut acc = QPoly::zero();
                for m in i + 1..=j {
                    if !kostka[i][m].is_zero() && !kostka_inv[m][j].is_zero() {
                        acc -= &(&kostka[i][m] * &kostka_inv[m][j]);
                    }
                }
                kostka_inv[i][j] = acc;
            }
        }
        let mut power_to_hl = vec![vec![QPoly::zero(); k]; k];
        for nu in 0..k {
            for mu in 0..k {
                let mut acc = QPoly::zero();
                for l in 0..k {
                    if chi[l][nu] != 0 {
                        acc += &kostka[l][mu].scale(&crate::exactnum::int(chi[l][nu]));
                    }
                }
                power_to_hl[nu][mu] = acc;
            }
        }
        let green = (0..k)
            .map(|nu| {
                (0..k)
                    .map(|mu| power_to_hl[nu][mu].reverse(parts[mu].n_stat() as i32))
                    .collect()
            })
            .collect();
        Self { parts, index, chi, z, kostka, kostka_inv, power_to_hl, green }
    }
}

/// Memoized [`DegreeTables`] for degree `n`.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(DegreeTables::build(n));
    cache.lock().unwrap().entry(n).or_insert(built).clone()
}
