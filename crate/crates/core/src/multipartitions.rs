//! Partition-valued functions on `Θ` or `Φ`: labels of irreducible characters
//! and of conjugacy classes, with their statistics, centralizer orders and
//! torus data.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactnum::{int, to_integer, QPoly, Rational};
use crate::orbits::{enumerate_orbits, f_of_x, level_order, CyclicElt, OrbitId, OrbitKind};
use crate::partitions::{partitions_of, Partition};
use crate::{Error, Result};

/// A finitely supported map from orbits to nonempty partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    kind: OrbitKind,
    q: u64,
    parts: BTreeMap<OrbitId, Partition>,
}

impl MultiPartition {
    pub fn empty(kind: OrbitKind, q: u64) -> Self {
        Self { kind, q, parts: BTreeMap::new() }
    }

    /// Builds a multipartition, dropping empty partitions.
    pub fn new<I>(kind: OrbitKind, q: u64, parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (OrbitId, Partition)>,
    {
        let mut out = Self::empty(kind, q);
        for (o, p) in parts {
            if o.kind != kind || o.q != q {
                return Err(Error::InvalidArgument(format!("orbit {o} does not match ({kind:?}, q = {q})")));
            }
            if p.is_empty() {
                continue;
            }
            if out.parts.insert(o, p).is_some() {
                return Err(Error::InvalidArgument(format!("orbit {o} given twice")));
            }
        }
        Ok(out)
    }

    /// `λ` placed at a single orbit.
    pub fn single(orbit: OrbitId, lambda: Partition) -> Self {
        let mut out = Self::empty(orbit.kind, orbit.q);
        if !lambda.is_empty() {
            out.parts.insert(orbit, lambda);
        }
        out
    }

    pub fn kind(&self) -> OrbitKind {
        self.kind
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn parts(&self) -> &BTreeMap<OrbitId, Partition> {
        &self.parts
    }

    pub fn get(&self, orbit: &OrbitId) -> Partition {
        self.parts.get(orbit).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `‖ν‖ = Σ |x| |ν(x)|`.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|(o, p)| o.size as usize * p.size()).sum()
    }

    /// `n(ν) = Σ |x| n(ν(x))`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().map(|(o, p)| o.size as usize * p.n_stat()).sum()
    }

    /// Total number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.values().map(|p| p.len()).sum()
    }

    pub fn conjugate(&self) -> Self {
        self.map_parts(|_, p| p.conjugate())
    }

    /// `ht(ν) = max ℓ(ν(x))`.
    pub fn ht(&self) -> usize {
        self.parts.values().map(|p| p.len()).max().unwrap_or(0)
    }

    /// `o(ν) = Σ |x| · #(odd parts of ν(x))`.
    pub fn odd_stat(&self) -> usize {
        self.parts.iter().map(|(o, p)| o.size as usize * p.odd_parts()).sum()
    }

    /// Replaces every partition by a column of the same size.
    pub fn semisimple_part(&self) -> Self {
        self.map_parts(|_, p| Partition::column(p.size()))
    }

    /// All parts scaled by orbit size and collected at the identity orbit.
    pub fn unipotent_part(&self) -> Self {
        let mut flat = Vec::new();
        for (o, p) in &self.parts {
            flat.extend(p.parts().iter().map(|&v| v * o.size as usize));
        }
        Self::single(OrbitId::identity(self.kind, self.q), Partition::from_unsorted(flat))
    }

    /// Orbitwise union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (o, p) in &other.parts {
            let merged = out.get(o).union(p);
            out.parts.insert(*o, merged);
        }
        out
    }

    fn map_parts<F: Fn(&OrbitId, &Partition) -> Partition>(&self, f: F) -> Self {
        Self {
            kind: self.kind,
            q: self.q,
            parts: self.parts.iter().map(|(o, p)| (*o, f(o, p))).collect(),
        }
    }

    /// `[[orbit, [parts]], ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.parts
                .iter()
                .map(|(o, p)| serde_json::json!([o, p]))
                .collect(),
        )
    }
}

impl Ord for MultiPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kind
            .cmp(&other.kind)
            .then(self.q.cmp(&other.q))
            .then_with(|| self.parts.keys().cmp(other.parts.keys()))
            .then_with(|| {
                self.parts.values().map(|p| p.parts()).cmp(other.parts.values().map(|p| p.parts()))
            })
    }
}

impl PartialOrd for MultiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl serde::Serialize for MultiPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(&OrbitId, &Partition)> = self.parts.iter().collect();
        pairs.serialize(s)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "{{}}");
        }
        let body: Vec<String> = self.parts.iter().map(|(o, p)| format!("{o}:{p}")).collect();
        write!(f, "{{{}}}", body.join(" "))
    }
}

/// The five statistics of a multipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpStats {
    pub size: usize,
    pub n: usize,
    pub conjugate: MultiPartition,
    pub ht: usize,
    pub o: usize,
}

pub fn mp_stats(nu: &MultiPartition) -> MpStats {
    MpStats {
        size: nu.size(),
        n: nu.n_stat(),
        conjugate: nu.conjugate(),
        ht: nu.ht(),
        o: nu.odd_stat(),
    }
}

/// All multipartitions of size `n` over orbits of size at most `n`, sorted.
pub fn enumerate_mp(q: u64, kind: OrbitKind, n: usize) -> Vec<MultiPartition> {
    fn rec(
        orbits: &[OrbitId],
        rem: usize,
        cur: &mut Vec<(OrbitId, Partition)>,
        out: &mut Vec<BTreeMap<OrbitId, Partition>>,
    ) {
        if rem == 0 {
            out.push(cur.iter().cloned().collect());
            return;
        }
        let Some((o, rest)) = orbits.split_first() else {
            return;
        };
        let d = o.size as usize;
        rec(rest, rem, cur, out);
        for s in 1..=rem / d {
            for p in partitions_of(s) {
                cur.push((*o, p));
                rec(rest, rem - s * d, cur, out);
                cur.pop();
            }
        }
    }
    let orbits = enumerate_orbits(q, kind, n.max(1) as u32);
    let mut maps = Vec::new();
    rec(&orbits, n, &mut Vec::new(), &mut maps);
    let mut out: Vec<MultiPartition> =
        maps.into_iter().map(|parts| MultiPartition { kind, q, parts }).collect();
    out.sort();
    out
}

/// `ψ_r(x) = Π_{i ≤ r} (1 - x^i)`.
pub fn psi(r: usize) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=r {
        acc = &acc * &QPoly::from_terms([(0, int(1)), (i as i32, int(-1))]);
    }
    acc
}

/// `a_μ(x) = x^{|μ| + 2n(μ)} Π_j ψ_{m_j}(1/x)`.
pub fn a_poly(mu: &Partition) -> QPoly {
    let mut acc = QPoly::monomial(int(1), (mu.size() + 2 * mu.n_stat()) as i32);
    for m in mu.multiplicities() {
        acc = &acc * &psi(m).reverse(0);
    }
    acc
}

fn neg_q_pow(q: u64, d: u32) -> Rational {
    Rational::from_integer(BigInt::from(-(q as i64)).pow(d))
}

/// Order `a_μ` of the centralizer of an element of the class `c_μ`.
pub fn centralizer_order(mu: &MultiPartition) -> BigInt {
    let mut acc = Rational::one();
    for (f, p) in mu.parts() {
        acc *= a_poly(p).eval(&neg_q_pow(mu.q(), f.size)).expect("nonzero argument");
    }
    if mu.size() % 2 == 1 {
        acc = -acc;
    }
    to_integer(&acc).expect("centralizer order is an integer")
}

/// `|U(n, F_{q^2})| = q^{n(n-1)/2} Π_{i ≤ n} (q^i - (-1)^i)`.
pub fn group_order(n: usize, q: u64) -> BigInt {
    let qb = BigInt::from(q);
    let mut acc = qb.pow((n * n.saturating_sub(1) / 2) as u32);
    for i in 1..=n as u32 {
        let t = qb.pow(i);
        acc *= if i % 2 == 0 { t - 1 } else { t + 1 };
    }
    acc
}

/// `|GL(n, F_Q)|`.
pub fn gl_order(n: usize, q: &BigInt) -> BigInt {
    let mut acc = q.pow((n * n.saturating_sub(1) / 2) as u32);
    for i in 1..=n as u32 {
        acc *= q.pow(i) - 1;
    }
    acc
}

/// `|U(n, F_{Q^2})|` for an arbitrary base `Q`.
pub fn unitary_order(n: usize, q: &BigInt) -> BigInt {
    let mut acc = q.pow((n * n.saturating_sub(1) / 2) as u32);
    for i in 1..=n as u32 {
        let t = q.pow(i);
        acc *= if i % 2 == 0 { t - 1 } else { t + 1 };
    }
    acc
}

/// Number of elements in the class `c_μ`.
pub fn class_size(mu: &MultiPartition) -> BigInt {
    group_order(mu.size(), mu.q()) / centralizer_order(mu)
}

/// Order of the Levi subgroup `L_μ`: a unitary factor of rank `|μ(f)|` over
/// `F_{q^{2d}}` for odd `d(f)`, a general linear factor over `F_{q^d}` for even `d(f)`.
pub fn levi_order(mu: &MultiPartition) -> BigInt {
    let mut acc = BigInt::one();
    for (f, p) in mu.parts() {
        let big_q = BigInt::from(mu.q()).pow(f.size);
        acc *= if f.size % 2 == 1 {
            unitary_order(p.size(), &big_q)
        } else {
            gl_order(p.size(), &big_q)
        };
    }
    acc
}

/// One `γ ∈ P_s^ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusClass {
    pub gamma: MultiPartition,
    /// `z_γ = Π z_{γ(x)}`.
    pub z: u128,
    /// `|W_ν| / z_γ`.
    pub class_size: u128,
    /// Torus factor orders `{|x| γ(x)_i}`, decreasing.
    pub factors: Vec<usize>,
}

/// Weyl group data of `ν`: `W_ν = ⊕ S_{|ν(x)|}` and the classes `γ ∈ P_s^ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusData {
    pub weyl_order: u128,
    pub classes: Vec<TorusClass>,
}

pub fn torus_data(nu: &MultiPartition) -> TorusData {
    let mut weyl_order: u128 = 1;
    let mut choices: Vec<(OrbitId, Vec<Partition>)> = Vec::new();
    for (o, p) in nu.parts() {
        let s = p.size();
        weyl_order *= (1..=s as u128).product::<u128>();
        choices.push((*o, partitions_of(s)));
    }
    let mut classes = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let gamma = MultiPartition {
            kind: nu.kind,
            q: nu.q,
            parts: choices.iter().zip(&idx).map(|((o, ps), &i)| (*o, ps[i].clone())).collect(),
        };
        let z = gamma.parts.values().map(|p| p.z_stat()).product::<u128>();
        let mut factors: Vec<usize> = gamma
            .parts
            .iter()
            .flat_map(|(o, p)| p.parts().iter().map(move |&v| v * o.size as usize))
            .collect();
        factors.sort_unstable_by(|a, b| b.cmp(a));
        classes.push(TorusClass { gamma, z, class_size: weyl_order / z, factors });
        // odometer over the per-orbit choices
        let mut i = 0;
        loop {
            if i == idx.len() {
                classes.sort_by(|a, b| a.gamma.cmp(&b.gamma));
                return TorusData { weyl_order, classes };
            }
            idx[i] += 1;
            if idx[i] < choices[i].1.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// `γ_t` for a torus element `t = (x_1, ..., x_l)` with `x_i ∈ M_{ν_i}`:
/// `γ_t(f)` has parts `ν_i / d(f)` over the `i` with `f_{x_i} = f`.
pub fn gamma_t(q: u64, elements: &[(u32, u64)]) -> Result<MultiPartition> {
    let mut parts: BTreeMap<OrbitId, Vec<usize>> = BTreeMap::new();
    for &(level, residue) in elements {
        let x = CyclicElt::new(q, level, residue)?;
        let (f, d) = f_of_x(&x);
        parts.entry(f).or_default().push((level / d) as usize);
    }
    MultiPartition::new(
        OrbitKind::Phi,
        q,
        parts.into_iter().map(|(f, v)| (f, Partition::from_unsorted(v))),
    )
}

/// Residue of a generator of `M_d` inside `M_level`, for building torus elements.
pub fn embed_residue(q: u64, d: u32, level: u32, residue: u64) -> u64 {
    residue * (level_order(q, level) / level_order(q, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn phi(q: u64, size: u32, residue: u64) -> OrbitId {
        OrbitId { kind: OrbitKind::Phi, q, size, residue }
    }

    #[test]
    fn worked_example() {
        // orbits of degree 1, 2, 2 over q = 3 (d_2 = 2 there)
        let q = 3;
        let two = enumerate_orbits(q, OrbitKind::Phi, 2);
        let deg2: Vec<_> = two.iter().filter(|o| o.size == 2).collect();
        let mu = MultiPartition::new(
            OrbitKind::Phi,
            q,
            [(phi(q, 1, 0), p(&[2, 2])), (*deg2[0], p(&[2])), (*deg2[1], p(&[4, 1]))],
        )
        .unwrap();
        let s = mp_stats(&mu);
        assert_eq!((s.size, s.n), (18, 4));
        assert_eq!(mu.unipotent_part().get(&phi(q, 1, 0)), p(&[8, 4, 2, 2, 2]));
        assert_eq!(mu.semisimple_part().get(&deg2[1]), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn small_stats() {
        let box1 = MultiPartition::single(phi(2, 1, 1), p(&[1]));
        let s = mp_stats(&box1);
        assert_eq!((s.size, s.n, s.ht, s.o), (1, 0, 1, 1));
        let sq = MultiPartition::single(OrbitId::identity(OrbitKind::Theta, 2), p(&[2, 2]));
        assert_eq!(sq.conjugate().odd_stat(), 0);
        let col = MultiPartition::single(phi(2, 1, 2), p(&[1, 1]));
        assert_eq!(col.semisimple_part(), col);
        let two = enumerate_orbits(3, OrbitKind::Phi, 2);
        let b = MultiPartition::single(*two.iter().find(|o| o.size == 2).unwrap(), p(&[1]));
        assert_eq!(b.unipotent_part().get(&phi(3, 1, 0)), p(&[2]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_mp(2, OrbitKind::Phi, 1).len(), 3);
        assert_eq!(enumerate_mp(2, OrbitKind::Phi, 2).len(), 9);
        assert_eq!(enumerate_mp(3, OrbitKind::Theta, 1).len(), 4);
        let rows = enumerate_mp(2, OrbitKind::Theta, 3);
        let triv = OrbitId::identity(OrbitKind::Theta, 2);
        assert_eq!(rows[0], MultiPartition::single(triv, p(&[1, 1, 1])));
    }

    #[test]
    fn centralizers() {
        let id = phi(2, 1, 0);
        assert_eq!(centralizer_order(&MultiPartition::single(id, p(&[1, 1]))), BigInt::from(18));
        let reg = MultiPartition::single(id, p(&[2]));
        assert_eq!(centralizer_order(&reg), BigInt::from(6));
        assert_eq!(class_size(&reg), BigInt::from(3));
        for mu in enumerate_mp(2, OrbitKind::Phi, 1) {
            assert_eq!(centralizer_order(&mu), BigInt::from(3));
        }
    }

    #[test]
    fn torus_examples() {
        let col = MultiPartition::single(phi(2, 1, 0), p(&[1, 1]));
        let t = torus_data(&col);
        assert_eq!(t.weyl_order, 2);
        assert_eq!(t.classes.iter().map(|c| c.z).collect::<Vec<_>>(), vec![2, 2]);
        let two = MultiPartition::new(
            OrbitKind::Phi,
            2,
            [(phi(2, 1, 0), p(&[1])), (phi(2, 1, 1), p(&[1]))],
        )
        .unwrap();
        let t = torus_data(&two);
        assert_eq!((t.weyl_order, t.classes.len(), t.classes[0].z), (1, 1, 1));
    }

    #[test]
    fn gamma_t_examples() {
        let g = gamma_t(2, &[(2, 0), (1, 0)]).unwrap();
        assert_eq!(g, MultiPartition::single(phi(2, 1, 0), p(&[2, 1])));
        // q = 3: a generator of M_2 = Z/8 has degree 2
        let g = gamma_t(3, &[(4, 0), (4, embed_residue(3, 2, 4, 1)), (2, 0), (2, 1), (1, 0)]).unwrap();
        assert_eq!(g.get(&phi(3, 1, 0)), p(&[4, 2, 1]));
        let (f, _) = f_of_x(&CyclicElt::new(3, 2, 1).unwrap());
        assert_eq!(f.size, 2);
        assert_eq!(g.get(&f), p(&[2, 1]));
        assert_eq!(g.unipotent_part().get(&phi(3, 1, 0)), p(&[4, 4, 2, 2, 1]));
    }
}
