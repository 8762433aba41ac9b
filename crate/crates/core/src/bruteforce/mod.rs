//! Explicit unitary groups for tiny `(n, q)`: enumeration, classification of
//! elements into the classes `c_μ`, symmetric-matrix counts and twisted
//! Frobenius-Schur indicators.

mod field;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use field::GF;

use crate::charmap::{prime_power, CharTable};
use crate::exactnum::{Cyclotomic, Rational};
use crate::multipartitions::{group_order, MultiPartition};
use crate::orbits::{enumerate_orbits, level_order, OrbitId, OrbitKind};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Limits on what may be enumerated.
#[derive(Clone, Copy, Debug)]
pub struct BruteConfig {
    pub max_group_order: u128,
    /// Also allow `U(3, F_4)`.
    pub extended: bool,
}

impl Default for BruteConfig {
    fn default() -> Self {
        Self { max_group_order: 100_000, extended: false }
    }
}

/// Whether `(n, q)` is on the enumeration whitelist.
pub fn supported(n: usize, q: u64, extended: bool) -> bool {
    matches!((n, q), (1, 2..=5) | (2, 2) | (2, 3)) || (extended && (n, q) == (3, 2))
}

/// An `n × n` matrix with entries encoded in the ambient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    pub n: usize,
    pub entries: Vec<u32>,
}

impl Mat {
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        Mat { n, entries: (0..n * n).map(|k| self.entries[(k % n) * n + k / n]).collect() }
    }
}

/// Which involution to twist the Frobenius-Schur indicator by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    Trivial,
    TransposeInverse,
}

/// The group `U(n, F_{q^2}) = {a : a · (a^{(q)})^T = 1}` inside
/// `GL(n, F_{q^{2M}})`, `M = lcm(1..n)`, large enough to hold every
/// eigenvalue.
pub struct BruteGroup {
    n: usize,
    q: u64,
    field: GF,
    /// `N_M`-th roots: `g_m = ω^{(|F|-1)/N_m}` generates `M_m`.
    elements: Vec<Mat>,
}

fn lcm_upto(n: usize) -> u32 {
    (1..=n as u32).fold(1, |a, b| a.lcm(&b))
}

impl BruteGroup {
    /// Enumerates `U(n, F_{q^2})` row by row over orthonormal rows.
    pub fn new(n: usize, q: u64, config: &BruteConfig) -> Result<Self> {
        let (p, a) = prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("q = {q} is not a prime power")))?;
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let order = group_order(n, q);
        let order_u = u128::try_from(&order).unwrap_or(u128::MAX);
        if order_u > config.max_group_order {
            return Err(Error::BoundExceeded { order: order_u, bound: config.max_group_order });
        }
        if !supported(n, q, config.extended) {
            return Err(Error::Unsupported(format!("U({n}, F_{}) is not on the enumeration whitelist", q * q)));
        }
        let big_m = lcm_upto(n);
        let field = GF::new(p as u32, 2 * a * big_m)?;
        let mut g = Self { n, q, field, elements: Vec::new() };
        g.elements = g.enumerate();
        if BigInt::from(g.elements.len()) != order {
            return Err(Error::Inexact(format!("enumerated {} elements, expected {order}", g.elements.len())));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &GF {
        &self.field
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements of `F_{q^2}`, as codes in the ambient field.
    fn small_field(&self) -> Vec<u32> {
        let q2 = self.q * self.q;
        let step = (self.field.size() as u64 - 1) / (q2 - 1);
        let mut out = vec![0];
        out.extend((0..q2 - 1).map(|k| self.field.omega_pow(k * step)));
        out.sort_unstable();
        out
    }

    fn frob(&self, x: u32) -> u32 {
        self.field.pow(x, self.q)
    }

    /// `⟨u, v⟩ = Σ u_i v_i^q`.
    fn herm(&self, u: &[u32], v: &[u32]) -> u32 {
        u.iter().zip(v).fold(0, |acc, (&a, &b)| self.field.add(acc, self.field.mul(a, self.frob(b))))
    }

    fn enumerate(&self) -> Vec<Mat> {
        let n = self.n;
        let k = self.small_field();
        let mut vectors: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..n {
            vectors = vectors
                .into_iter()
                .flat_map(|v| k.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                }))
                .collect();
        }
        let unit: Vec<Vec<u32>> = vectors.into_iter().filter(|v| self.herm(v, v) == 1).collect();
        let firsts: Vec<&Vec<u32>> = unit.iter().collect();
        let mut out: Vec<Mat> = firsts
            .par_iter()
            .flat_map_iter(|first| {
                let mut found = Vec::new();
                let mut rows = vec![(*first).clone()];
                self.extend_rows(&unit, &mut rows, &mut found);
                found
            })
            .collect();
        out.sort();
        out
    }

    fn extend_rows(&self, unit: &[Vec<u32>], rows: &mut Vec<Vec<u32>>, found: &mut Vec<Mat>) {
        if rows.len() == self.n {
            found.push(Mat { n: self.n, entries: rows.concat() });
            return;
        }
        for v in unit {
            if rows.iter().all(|r| self.herm(v, r) == 0) {
                rows.push(v.clone());
                self.extend_rows(unit, rows, found);
                rows.pop();
            }
        }
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.n;
        let f = &self.field;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = f.add(acc, f.mul(a.get(i, k), b.get(k, j)));
                }
                entries[i * n + j] = acc;
            }
        }
        Mat { n, entries }
    }

    /// Entrywise `x ↦ x^q`.
    pub fn frobenius(&self, a: &Mat) -> Mat {
        Mat { n: a.n, entries: a.entries.iter().map(|&x| self.frob(x)).collect() }
    }

    /// `a · (a^{(q)})^T = 1`.
    pub fn is_unitary(&self, a: &Mat) -> bool {
        let prod = self.mul(a, &self.frobenius(a).transpose());
        prod == self.identity()
    }

    pub fn identity(&self) -> Mat {
        let n = self.n;
        Mat { n, entries: (0..n * n).map(|k| u32::from(k % (n + 1) == 0)).collect() }
    }

    fn rank(&self, a: &Mat) -> usize {
        let n = a.n;
        let f = &self.field;
        let mut m = a.entries.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                continue;
            };
            for j in 0..n {
                m.swap(rank * n + j, piv * n + j);
            }
            let inv = f.inv(m[rank * n + col]).unwrap();
            for r in 0..n {
                if r != rank && m[r * n + col] != 0 {
                    let factor = f.mul(m[r * n + col], inv);
                    for j in 0..n {
                        let v = f.mul(factor, m[rank * n + j]);
                        m[r * n + j] = f.sub(m[r * n + j], v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// `g_m^k` with `g_m = ω^{(|F| - 1)/N_m}`.
    fn cyclic(&self, level: u32, residue: u64) -> u32 {
        let nm = level_order(self.q, level);
        self.field.omega_pow(residue * ((self.field.size() as u64 - 1) / nm))
    }

    fn minus_scalar(&self, a: &Mat, x: u32) -> Mat {
        let n = a.n;
        let mut out = a.clone();
        for i in 0..n {
            out.entries[i * n + i] = self.field.sub(out.entries[i * n + i], x);
        }
        out
    }

    /// The `Φ`-partition of `a`: for each orbit `f` with a root `x` that is an
    /// eigenvalue, the Jordan type at `x` from the ranks of `(a - x)^j`.
    pub fn classify(&self, a: &Mat) -> Result<MultiPartition> {
        let n = self.n;
        let mut parts = Vec::new();
        for f in enumerate_orbits(self.q, OrbitKind::Phi, n as u32) {
            let x = self.cyclic(f.size, f.residue);
            let b = self.minus_scalar(a, x);
            let mut ranks = vec![n];
            let mut pw = self.identity();
            loop {
                pw = self.mul(&pw, &b);
                let r = self.rank(&pw);
                if r == *ranks.last().unwrap() {
                    break;
                }
                ranks.push(r);
            }
            if ranks.len() == 1 {
                continue;
            }
            // blocks of size ≥ j: r_{j-1} - r_j
            let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
            let mut lambda = Vec::new();
            for (j, &c) in at_least.iter().enumerate() {
                let next = at_least.get(j + 1).copied().unwrap_or(0);
                lambda.extend(std::iter::repeat_n(j + 1, c - next));
            }
            parts.push((f, Partition::from_unsorted(lambda)));
        }
        let mu = MultiPartition::new(OrbitKind::Phi, self.q, parts)?;
        if mu.size() != n {
            return Err(Error::Inexact(format!("eigenvalues of a matrix account for {} of {n} dimensions", mu.size())));
        }
        Ok(mu)
    }

    /// `f(t) = Π_{i < d} (t - x^{(-q)^i})`, coefficients lowest first, as
    /// codes in the ambient field.
    fn orbit_polynomial(&self, f: &OrbitId) -> Vec<u32> {
        let fl = &self.field;
        let mut poly = vec![1u32];
        let nm = level_order(self.q, f.size);
        for k in f.members() {
            debug_assert!(k < nm);
            let root = self.cyclic(f.size, k);
            let mut next = vec![0u32; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i + 1] = fl.add(next[i + 1], c);
                next[i] = fl.sub(next[i], fl.mul(c, root));
            }
            poly = next;
        }
        poly
    }

    /// `J_μ = ⊕_f ⊕_i C(f^{μ(f)_i})` with `C` the companion matrix; a
    /// representative of the `GL(n, F_{q^2})`-class that meets `c_μ`.
    pub fn class_representative(&self, mu: &MultiPartition) -> Result<Mat> {
        if mu.size() != self.n || mu.kind() != OrbitKind::Phi || mu.q() != self.q {
            return Err(Error::Unsupported(format!("{mu} is not a class label for this group")));
        }
        let n = self.n;
        let fl = &self.field;
        let mut out = Mat { n, entries: vec![0; n * n] };
        let mut offset = 0;
        let q2 = self.q * self.q;
        for (f, lam) in mu.parts() {
            let base = self.orbit_polynomial(f);
            if base.iter().any(|&c| !fl.in_subfield(c, q2)) {
                return Err(Error::Inexact(format!("orbit polynomial of {f} is not defined over F_{q2}")));
            }
            for &k in lam.parts() {
                let mut poly = vec![1u32];
                for _ in 0..k {
                    let mut next = vec![0u32; poly.len() + base.len() - 1];
                    for (i, &a) in poly.iter().enumerate() {
                        for (j, &b) in base.iter().enumerate() {
                            next[i + j] = fl.add(next[i + j], fl.mul(a, b));
                        }
                    }
                    poly = next;
                }
                let deg = poly.len() - 1;
                for i in 1..deg {
                    out.entries[(offset + i) * n + offset + i - 1] = 1;
                }
                for i in 0..deg {
                    out.entries[(offset + i) * n + offset + deg - 1] = fl.neg(poly[i]);
                }
                offset += deg;
            }
        }
        Ok(out)
    }

    /// Class sizes by direct classification of every element.
    pub fn class_census(&self) -> Result<BTreeMap<MultiPartition, u64>> {
        let labels: Vec<MultiPartition> = self.elements.par_iter().map(|g| self.classify(g)).collect::<Result<_>>()?;
        let mut out = BTreeMap::new();
        for l in labels {
            *out.entry(l).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// `#{g : g^T = g}`.
    pub fn symmetric_count(&self) -> u64 {
        self.elements.iter().filter(|g| g.transpose() == **g).count() as u64
    }

    /// `a⁻¹ = (a^{(q)})^T` for unitary `a`.
    pub fn inverse(&self, a: &Mat) -> Mat {
        self.frobenius(a).transpose()
    }

    /// Order of the commutator subgroup, i.e. `|G| / #(linear characters)`.
    pub fn derived_subgroup_order(&self) -> usize {
        let mut gens = BTreeSet::new();
        for a in &self.elements {
            let ai = self.inverse(a);
            for b in &self.elements {
                let c = self.mul(&self.mul(a, b), &self.mul(&ai, &self.inverse(b)));
                gens.insert(c);
            }
        }
        let mut seen: BTreeSet<Mat> = BTreeSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = self.mul(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len()
    }

    /// `ι(g)`; on the unitary group `(g^T)^{-1} = g^{(q)}`.
    fn apply(&self, iota: Involution, g: &Mat) -> Mat {
        match iota {
            Involution::Trivial => g.clone(),
            Involution::TransposeInverse => self.frobenius(g),
        }
    }

    /// `ε_ι(χ) = |G|⁻¹ Σ_g χ(g ι(g))` for every row of `table`, and the
    /// involution count `#{g : ι(g)^{-1} = g}`.
    pub fn twisted_fs(&self, table: &CharTable, iota: Involution) -> Result<FsReport> {
        if table.n != self.n || table.q != self.q {
            return Err(Error::InvalidArgument("character table is for a different group".into()));
        }
        let products: Vec<MultiPartition> = self
            .elements
            .par_iter()
            .map(|g| self.classify(&self.mul(g, &self.apply(iota, g))))
            .collect::<Result<_>>()?;
        let mut counts: HashMap<MultiPartition, u64> = HashMap::new();
        for l in products {
            *counts.entry(l).or_insert(0) += 1;
        }
        let col: HashMap<&MultiPartition, usize> = table.cols.iter().enumerate().map(|(j, c)| (c, j)).collect();
        let order = Rational::from_integer(BigInt::from(self.order()));
        let mut indicators = Vec::new();
        for row in &table.values {
            let mut acc = Cyclotomic::zero();
            for (label, &c) in &counts {
                let j = col[label];
                acc += &row[j].scale(&Rational::from_integer(c.into()));
            }
            indicators.push(acc.scale(&order.recip()).normalize());
        }
        let id = self.identity();
        let involutions = self
            .elements
            .iter()
            .filter(|g| self.mul(&self.apply(iota, g), g) == id)
            .count() as u64;
        let degrees = table.degrees();
        let mut weighted = Cyclotomic::zero();
        for (e, d) in indicators.iter().zip(&degrees) {
            weighted += &e.scale(&Rational::from_integer(d.clone()));
        }
        Ok(FsReport { indicators, weighted_sum: weighted.normalize(), involutions })
    }
}

/// Every element of `U(n, F_{q^2})`, sorted.
pub fn enumerate_group(n: usize, q: u64, config: &BruteConfig) -> Result<Vec<Mat>> {
    Ok(BruteGroup::new(n, q, config)?.elements)
}

/// Output of [`BruteGroup::twisted_fs`], indicators in table row order.
#[derive(Clone, Debug)]
pub struct FsReport {
    pub indicators: Vec<Cyclotomic>,
    /// `Σ_χ ε_ι(χ) χ(1)`.
    pub weighted_sum: Cyclotomic,
    /// `#{g : ι(g)^{-1} = g}`.
    pub involutions: u64,
}

/// Stabilizer orders of the orbits of `U_n` on its symmetric matrices, from
/// the orthogonal and symplectic group orders over `F_q`.
pub fn symmetric_stabilizers(n: usize, q: u64) -> Vec<BigInt> {
    let qb = BigInt::from(q);
    let prod = |k: usize| (1..=k as u32).fold(BigInt::one(), |acc, i| acc * (qb.pow(2 * i) - 1));
    let odd_q = q % 2 == 1;
    match (odd_q, n % 2 == 1) {
        (true, true) => {
            let o = BigInt::from(2) * qb.pow(((n - 1) * (n - 1) / 4) as u32) * prod((n - 1) / 2);
            vec![o.clone(), o]
        }
        (true, false) => {
            let base = BigInt::from(2) * qb.pow(((n * n - 2 * n) / 4) as u32) * prod((n - 2) / 2);
            let h = qb.pow((n / 2) as u32);
            vec![&base * (&h - 1), &base * (&h + 1)]
        }
        (false, true) => vec![qb.pow(((n - 1) * (n - 1) / 4) as u32) * prod((n - 1) / 2)],
        (false, false) => {
            let base = qb.pow((n * n / 4) as u32);
            vec![&base * prod((n - 2) / 2), &base * prod(n / 2)]
        }
    }
}

/// `Σ |U_n| / |Stab|` over the symmetric-matrix orbits.
pub fn symmetric_count_closed_form(n: usize, q: u64) -> BigInt {
    let order = group_order(n, q);
    symmetric_stabilizers(n, q).iter().map(|s| &order / s).fold(BigInt::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartitions::enumerate_mp;

    #[test]
    fn small_orders() {
        let cfg = BruteConfig::default();
        assert_eq!(BruteGroup::new(1, 2, &cfg).unwrap().order(), 3);
        assert_eq!(BruteGroup::new(2, 2, &cfg).unwrap().order(), 18);
        assert!(BruteGroup::new(3, 2, &cfg).is_err());
        let tight = BruteConfig { max_group_order: 10, extended: false };
        assert!(matches!(BruteGroup::new(2, 2, &tight), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn representatives_round_trip() {
        let cfg = BruteConfig::default();
        for (n, q) in [(1, 3), (2, 2), (2, 3)] {
            let g = BruteGroup::new(n, q, &cfg).unwrap();
            for mu in enumerate_mp(q, OrbitKind::Phi, n) {
                let rep = g.class_representative(&mu).unwrap();
                assert_eq!(g.classify(&rep).unwrap(), mu);
            }
        }
    }

    #[test]
    fn identity_and_unipotent() {
        let g = BruteGroup::new(2, 2, &BruteConfig::default()).unwrap();
        let one = OrbitId::identity(OrbitKind::Phi, 2);
        assert_eq!(g.classify(&g.identity()).unwrap(), MultiPartition::single(one, Partition::column(2)));
        let census = g.class_census().unwrap();
        assert_eq!(census.len(), 9);
        assert_eq!(census[&MultiPartition::single(one, Partition::row(2))], 3);
        assert_eq!(g.symmetric_count(), 12);
        assert_eq!(symmetric_count_closed_form(2, 2), 12.into());
    }
}
