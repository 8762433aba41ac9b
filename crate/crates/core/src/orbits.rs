//! The cyclic groups `M_m = {x : x^{q^m - (-1)^m} = 1}`, the Frobenius action
//! `x ↦ x^{-q}` on them and on their character groups, and the resulting
//! orbit sets `Θ` (characters) and `Φ` (elements).
//!
//! `M_m` is modelled as `Z/N_m` with `N_m = q^m - (-1)^m`; the residue `k` at
//! level `r` is identified with `k·N_m/N_r` at level `m` whenever `r | m`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::exactnum::{rat, Cyclotomic};
use crate::{Error, Result};

/// Whether an orbit consists of characters (`Θ`) or elements (`Φ`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitKind {
    Theta,
    Phi,
}

/// A Frobenius orbit, named by its size and the least residue it contains at
/// that level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitId {
    pub kind: OrbitKind,
    pub q: u64,
    pub size: u32,
    pub residue: u64,
}

impl OrbitId {
    /// The orbit of the trivial character, or of the identity element.
    pub fn identity(kind: OrbitKind, q: u64) -> Self {
        Self { kind, q, size: 1, residue: 0 }
    }

    /// All residues in the orbit, at level `size`, in Frobenius order.
    pub fn members(&self) -> Vec<u64> {
        let n = level_order(self.q, self.size);
        let step = neg_q_mod(self.q, n);
        let mut out = Vec::with_capacity(self.size as usize);
        let mut k = self.residue;
        for _ in 0..self.size {
            out.push(k);
            k = mulmod(k, step, n);
        }
        out
    }
}

impl fmt::Display for OrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            OrbitKind::Theta => "th",
            OrbitKind::Phi => "f",
        };
        write!(f, "{tag}{}_{}", self.size, self.residue)
    }
}

/// An element of `M_m` (or of its character group).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicElt {
    pub q: u64,
    pub level: u32,
    pub residue: u64,
}

impl CyclicElt {
    pub fn new(q: u64, level: u32, residue: u64) -> Result<Self> {
        let n = level_order(q, level);
        if residue >= n {
            return Err(Error::InvalidArgument(format!("residue {residue} is not below N_{level} = {n}")));
        }
        Ok(Self { q, level, residue })
    }

    /// The same element viewed at level `m`, a multiple of the current level.
    pub fn lift(&self, m: u32) -> Result<Self> {
        if m % self.level != 0 {
            return Err(Error::LevelIncompatible { r: self.level, m });
        }
        let factor = level_order(self.q, m) / level_order(self.q, self.level);
        Ok(Self { q: self.q, level: m, residue: self.residue * factor })
    }
}

/// `N_m = q^m - (-1)^m`, the order of `M_m`.
pub fn level_order(q: u64, m: u32) -> u64 {
    let p = (q as u128).pow(m);
    let n = if m % 2 == 0 { p - 1 } else { p + 1 };
    u64::try_from(n).expect("level order overflows u64")
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn neg_q_mod(q: u64, n: u64) -> u64 {
    (n - q % n) % n
}

fn mobius(mut n: u32) -> i128 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number `d_r` of Frobenius orbits of size `r`, the same for `Θ` and `Φ`.
pub fn orbit_count(q: u64, r: u32) -> i128 {
    let mut acc: i128 = 0;
    for d in 1..=r {
        if r % d == 0 {
            acc += mobius(r / d) * level_order(q, d) as i128;
        }
    }
    acc / r as i128
}

/// Size of the Frobenius orbit of residue `k` at level `m`.
fn orbit_size_at(q: u64, m: u32, k: u64) -> u32 {
    let n = level_order(q, m);
    let step = neg_q_mod(q, n);
    let mut pw = 1u64;
    for e in 1..=m {
        pw = mulmod(pw, step, n);
        if m % e == 0 && mulmod(k, (pw + n - 1) % n, n) == 0 {
            return e;
        }
    }
    unreachable!("F^m acts trivially on M_m")
}

/// The orbit through residue `k` at level `m`.
pub fn orbit_of(kind: OrbitKind, q: u64, m: u32, k: u64) -> OrbitId {
    let d = orbit_size_at(q, m, k);
    let factor = level_order(q, m) / level_order(q, d);
    let base = k / factor;
    let n = level_order(q, d);
    let step = neg_q_mod(q, n);
    let mut best = base;
    let mut cur = base;
    for _ in 1..d {
        cur = mulmod(cur, step, n);
        best = best.min(cur);
    }
    OrbitId { kind, q, size: d, residue: best }
}

/// The `Φ`-orbit of `x`, i.e. the `F`-irreducible polynomial `f_x`, and its degree.
pub fn f_of_x(x: &CyclicElt) -> (OrbitId, u32) {
    let f = orbit_of(OrbitKind::Phi, x.q, x.level, x.residue);
    (f, f.size)
}

fn orbits_of_size(q: u64, size: u32) -> Arc<Vec<u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Arc<Vec<u64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(q, size)) {
        return v.clone();
    }
    let n = level_order(q, size);
    let mut out = Vec::new();
    for k in 0..n {
        let o = orbit_of(OrbitKind::Phi, q, size, k);
        if o.size == size && o.residue == k {
            out.push(k);
        }
    }
    let v = Arc::new(out);
    cache.lock().unwrap().insert((q, size), v.clone());
    v
}

/// All orbits of size at most `max_size`, sorted by `(size, residue)`.
pub fn enumerate_orbits(q: u64, kind: OrbitKind, max_size: u32) -> Vec<OrbitId> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for &residue in orbits_of_size(q, size).iter() {
            out.push(OrbitId { kind, q, size, residue });
        }
    }
    out
}

/// Exponent `e` with `ξ(x) = ζ_{N_r}^e`, for `ξ` at level `r` and `x` at level
/// `m`, `r | m`. The character is pulled back along the norm
/// `M_m → M_r`, `x ↦ Π_{i < m/r} F^{ri}(x)`.
pub fn char_exponent(xi: &CyclicElt, x: &CyclicElt) -> Result<(u64, u64)> {
    if xi.q != x.q {
        return Err(Error::InvalidArgument(format!("q = {} vs q = {}", xi.q, x.q)));
    }
    if x.level % xi.level != 0 {
        return Err(Error::LevelIncompatible { r: xi.level, m: x.level });
    }
    let nr = level_order(xi.q, xi.level);
    // the norm of x, as a residue at level r, is (-1)^{m-r} k
    let k = x.residue % nr;
    let k = if (x.level - xi.level) % 2 == 0 { k } else { (nr - k) % nr };
    Ok((nr, mulmod(xi.residue % nr, k, nr)))
}

/// `ξ(x)` as a cyclotomic number.
pub fn char_eval(xi: &CyclicElt, x: &CyclicElt) -> Result<Cyclotomic> {
    let (n, e) = char_exponent(xi, x)?;
    Ok(Cyclotomic::root_of_unity(n, e as i64).normalize())
}

/// One term `c · p_power(orbit)` of a power-sum expansion.
pub type PowerAtom = (OrbitId, u32, Cyclotomic);

type AtomCache = Mutex<HashMap<(OrbitId, u32), Arc<Vec<PowerAtom>>>>;

/// Expansion of `p_n(φ)` in the power sums `p_k(f)`, `f ∈ Φ`:
/// `p_n(φ) = (-1)^{m-1} Σ_{x ∈ M_m} ξ(x) p_{m/d(f_x)}(f_x)` with `m = n|φ|`.
pub fn transform_p(phi: &OrbitId, n: u32) -> Result<Arc<Vec<PowerAtom>>> {
    static CACHE: OnceLock<AtomCache> = OnceLock::new();
    if phi.kind != OrbitKind::Theta {
        return Err(Error::InvalidArgument("transform_p expects a Θ-orbit".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("power-sum index must be positive".into()));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(*phi, n)) {
        return Ok(v.clone());
    }
    let q = phi.q;
    let r = phi.size;
    let m = n * r;
    let nm = level_order(q, m);
    let nr = level_order(q, r);
    let xi = CyclicElt { q, level: r, residue: phi.residue };
    let mut counts: BTreeMap<OrbitId, Vec<i64>> = BTreeMap::new();
    for k in 0..nm {
        let x = CyclicElt { q, level: m, residue: k };
        let (f, _) = f_of_x(&x);
        let (_, e) = char_exponent(&xi, &x)?;
        counts.entry(f).or_insert_with(|| vec![0; nr as usize])[e as usize] += 1;
    }
    let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
    let out: Vec<PowerAtom> = counts
        .into_iter()
        .map(|(f, c)| {
            let c: Vec<i64> = c.into_iter().map(|v| sign * v).collect();
            (f, m / f.size, Cyclotomic::from_exponent_counts(nr, &c).normalize())
        })
        .filter(|(_, _, c)| !c.is_zero())
        .collect();
    let out = Arc::new(out);
    cache.lock().unwrap().insert((*phi, n), out.clone());
    Ok(out)
}

/// Expansion of `p_j(f)`, `f ∈ Φ`, in the power sums `p_k(φ)`, `φ ∈ Θ`; the
/// inverse of [`transform_p`], obtained from orthogonality of the characters
/// of `M_m`, `m = j·d(f)`.
pub fn inverse_transform_p(f: &OrbitId, j: u32) -> Result<Arc<Vec<PowerAtom>>> {
    static CACHE: OnceLock<AtomCache> = OnceLock::new();
    if f.kind != OrbitKind::Phi {
        return Err(Error::InvalidArgument("inverse_transform_p expects a Φ-orbit".into()));
    }
    if j == 0 {
        return Err(Error::InvalidArgument("power-sum index must be positive".into()));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(*f, j)) {
        return Ok(v.clone());
    }
    let q = f.q;
    let m = j * f.size;
    let nm = level_order(q, m);
    let x0 = CyclicElt { q, level: f.size, residue: f.residue }.lift(m)?;
    let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
    let scale = rat(sign, nm as i64);
    let mut out = Vec::new();
    for r in (1..=m).filter(|r| m % r == 0) {
        let nr = level_order(q, r);
        for &residue in orbits_of_size(q, r).iter() {
            let phi = OrbitId { kind: OrbitKind::Theta, q, size: r, residue };
            let mut counts = vec![0i64; nr as usize];
            for member in phi.members() {
                let xi = CyclicElt { q, level: r, residue: member };
                let (_, e) = char_exponent(&xi, &x0)?;
                counts[((nr - e) % nr) as usize] += 1;
            }
            let c = Cyclotomic::from_exponent_counts(nr, &counts).scale(&scale).normalize();
            if !c.is_zero() {
                out.push((phi, m / r, c));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    let out = Arc::new(out);
    cache.lock().unwrap().insert((*f, j), out.clone());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(orbit_count(2, 1), 3);
        assert_eq!(orbit_count(2, 2), 0);
        assert_eq!(orbit_count(2, 3), 2);
        assert_eq!(orbit_count(3, 1), 4);
    }

    #[test]
    fn enumeration() {
        let o = enumerate_orbits(2, OrbitKind::Theta, 1);
        assert_eq!(o.iter().map(|o| o.residue).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(enumerate_orbits(2, OrbitKind::Theta, 2).len(), 3);
        assert_eq!(enumerate_orbits(3, OrbitKind::Phi, 1).len(), 4);
        let three = enumerate_orbits(2, OrbitKind::Phi, 3);
        assert_eq!(three.len(), 5);
        assert_eq!(three[3].members().len(), 3);
    }

    #[test]
    fn f_of_x_examples() {
        let id = CyclicElt::new(2, 1, 0).unwrap();
        assert_eq!(f_of_x(&id), (OrbitId::identity(OrbitKind::Phi, 2), 1));
        let x = CyclicElt::new(2, 3, 1).unwrap();
        assert_eq!(f_of_x(&x).1, 3);
        let y = CyclicElt::new(2, 1, 1).unwrap();
        assert_eq!(f_of_x(&y).1, 1);
        // residue 3 at level 3 is residue 1 at level 1
        let z = CyclicElt::new(2, 3, 3).unwrap();
        assert_eq!(f_of_x(&z).0, OrbitId { kind: OrbitKind::Phi, q: 2, size: 1, residue: 1 });
    }

    #[test]
    fn char_eval_examples() {
        let triv = CyclicElt::new(2, 1, 0).unwrap();
        let x = CyclicElt::new(2, 3, 5).unwrap();
        assert_eq!(char_eval(&triv, &x).unwrap(), Cyclotomic::one());
        let xi = CyclicElt::new(2, 1, 1).unwrap();
        let one = CyclicElt::new(2, 1, 1).unwrap();
        assert_eq!(char_eval(&xi, &one).unwrap(), Cyclotomic::root_of_unity(3, 1));
        let x3 = CyclicElt::new(2, 3, 1).unwrap();
        assert_eq!(char_eval(&xi, &x3).unwrap(), Cyclotomic::root_of_unity(3, 1));
        let bad = CyclicElt::new(2, 2, 1).unwrap();
        assert!(matches!(char_eval(&bad, &x3), Err(Error::LevelIncompatible { .. })));
    }

    #[test]
    fn transform_degree_one() {
        let triv = OrbitId::identity(OrbitKind::Theta, 2);
        let t = transform_p(&triv, 1).unwrap();
        assert_eq!(t.len(), 3);
        assert!(t.iter().all(|(_, k, c)| *k == 1 && *c == Cyclotomic::one()));
        let phi1 = OrbitId { kind: OrbitKind::Theta, q: 2, size: 1, residue: 1 };
        let t = transform_p(&phi1, 1).unwrap();
        let vals: Vec<Cyclotomic> = t.iter().map(|a| a.2.clone()).collect();
        assert_eq!(
            vals,
            vec![Cyclotomic::one(), Cyclotomic::root_of_unity(3, 1), Cyclotomic::root_of_unity(3, 2)]
        );
    }
}
