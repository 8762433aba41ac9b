//! The characteristic map between class functions of the unitary groups and
//! symmetric functions, character tables, Deligne-Lusztig characters and the
//! two products on class functions.

mod convert;
mod dl;
mod products;
mod table;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use convert::convert;
pub use dl::{dl_character, dl_character_via_ch, dl_character_via_torus, ls_sum, ls_sign_exponent, tau_prime, DlCharacter};
pub use products::{circ_product, multiply_power_sums, star_product};
pub use table::{char_table, expand_schur, inner_product, tau, CharTable};

use crate::exactnum::{int, Cyclotomic, Rational};
use crate::multipartitions::MultiPartition;
use crate::orbits::{level_order, OrbitKind};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::tables as sym_tables;
use crate::{Error, Result};

/// Basis of the class-function ring, or of its image under `ch`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymBasis {
    /// Class indicators `π_μ`, indexed by `Φ`-partitions.
    Pi,
    /// Normalized Hall-Littlewood products `P_μ = ch(π_μ)`.
    P,
    /// Power sums `p_γ` in the `Φ` variables.
    PPhi,
    /// Power sums `p_ν` in the `Θ` variables.
    PTheta,
    /// Schur functions `s_λ` in the `Θ` variables.
    STheta,
}

impl SymBasis {
    pub fn kind(self) -> OrbitKind {
        match self {
            SymBasis::Pi | SymBasis::P | SymBasis::PPhi => OrbitKind::Phi,
            SymBasis::PTheta | SymBasis::STheta => OrbitKind::Theta,
        }
    }
}

/// A homogeneous element of degree `n`, as a finite combination of basis
/// elements with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    q: u64,
    degree: usize,
    basis: SymBasis,
    coeffs: BTreeMap<MultiPartition, Cyclotomic>,
}

impl SymElement {
    pub fn zero(q: u64, degree: usize, basis: SymBasis) -> Self {
        Self { q, degree, basis, coeffs: BTreeMap::new() }
    }

    /// The basis element indexed by `mu`.
    pub fn basis_element(basis: SymBasis, mu: MultiPartition) -> Result<Self> {
        let mut out = Self::zero(mu.q(), mu.size(), basis);
        out.add_term(mu, &Cyclotomic::one())?;
        Ok(out)
    }

    pub fn from_terms<I>(q: u64, degree: usize, basis: SymBasis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiPartition, Cyclotomic)>,
    {
        let mut out = Self::zero(q, degree, basis);
        for (mu, c) in terms {
            out.add_term(mu, &c)?;
        }
        Ok(out)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<MultiPartition, Cyclotomic> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &MultiPartition) -> Cyclotomic {
        self.coeffs.get(mu).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` times the basis element `mu`.
    pub fn add_term(&mut self, mu: MultiPartition, c: &Cyclotomic) -> Result<()> {
        if mu.kind() != self.basis.kind() || mu.q() != self.q {
            return Err(Error::InvalidArgument(format!("{mu} is not a label for the {:?} basis", self.basis)));
        }
        if mu.size() != self.degree {
            return Err(Error::DegreeMismatch(mu.size(), self.degree));
        }
        self.add_term_unchecked(mu, c);
        Ok(())
    }

    fn add_term_unchecked(&mut self, mu: MultiPartition, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&mu) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&mu);
                } else {
                    *v = std::mem::replace(v, Cyclotomic::zero()).normalize();
                }
            }
            None => {
                self.coeffs.insert(mu, c.clone().normalize());
            }
        }
    }

    /// Sum with an element written in the same basis.
    pub fn plus(&self, other: &SymElement) -> Result<SymElement> {
        self.check_compatible(other)?;
        if self.basis != other.basis {
            return Err(Error::InvalidArgument(format!(
                "bases differ: {:?} vs {:?}",
                self.basis, other.basis
            )));
        }
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_term_unchecked(mu.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> SymElement {
        let mut out = Self::zero(self.q, self.degree, self.basis);
        for (mu, v) in &self.coeffs {
            out.add_term_unchecked(mu.clone(), &(v * c));
        }
        out
    }

    /// Same coefficients, different basis tag of the same index kind. This is
    /// how `ch` acts on `π_μ ↦ P_μ`.
    pub fn relabel(&self, basis: SymBasis) -> Result<SymElement> {
        if basis.kind() != self.basis.kind() {
            return Err(Error::InvalidArgument(format!("cannot relabel {:?} as {basis:?}", self.basis)));
        }
        Ok(SymElement { basis, ..self.clone() })
    }

    pub(crate) fn check_compatible(&self, other: &SymElement) -> Result<()> {
        if self.q != other.q {
            return Err(Error::InvalidArgument(format!("q = {} vs q = {}", self.q, other.q)));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "q": self.q,
            "degree": self.degree,
            "basis": self.basis,
            "terms": self
                .coeffs
                .iter()
                .map(|(mu, c)| serde_json::json!([mu.to_json(), c.to_json()]))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let tag = match self.basis {
            SymBasis::Pi => "pi",
            SymBasis::P => "P",
            SymBasis::PPhi | SymBasis::PTheta => "p",
            SymBasis::STheta => "s",
        };
        let terms: Vec<String> = self.coeffs.iter().map(|(mu, c)| format!("({c}) {tag}{mu}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Values of the classical Green polynomials `Q_ν^μ(v)` at a fixed `v`, with
/// the inverse matrix.
pub(crate) struct GreenAt {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `values[ν][μ] = Q_ν^μ(v)`.
    pub values: Vec<Vec<Rational>>,
    /// `inverse[μ][ν]`, so that `Σ_ν inverse[μ][ν] values[ν][κ] = δ_{μκ}`.
    pub inverse: Vec<Vec<Rational>>,
}

fn invert(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    use num_traits::{One, Zero};
    let k = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..k {
        let piv = (col..k)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::DivisionByZero("singular Green matrix".into()))?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].recip();
        for j in 0..k {
            a[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..k {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Ok(inv)
}

/// Smallest prime factor and exponent if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut e = 0;
    let mut m = q;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// `N = lcm{q^m - (-1)^m : m ≤ n}`; every character value of `U_n` lies in `Q(ζ_N)`.
pub fn conductor(q: u64, n: usize) -> u64 {
    (1..=n.max(1) as u32).fold(1u64, |acc, m| acc.lcm(&level_order(q, m)))
}

pub(crate) fn check_q(q: u64) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidArgument(format!("q = {q} is not a prime power")));
    }
    Ok(())
}

/// Green matrix of degree `k` evaluated at `(-q)^d`.
pub(crate) fn green_at(q: u64, k: usize, d: u32) -> Arc<GreenAt> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, usize, u32), Arc<GreenAt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(&(q, k, d)) {
        return g.clone();
    }
    let t = sym_tables(k);
    let v = crate::exactnum::rat_pow(&int(-(q as i64)), d as i64).expect("nonzero");
    let values: Vec<Vec<Rational>> = t
        .green
        .iter()
        .map(|row| row.iter().map(|p| p.eval(&v).expect("nonzero argument")).collect())
        .collect();
    let inverse = invert(&values).expect("Green matrices are invertible");
    let g = Arc::new(GreenAt { parts: partitions_of(k), index: t.index.clone(), values, inverse });
    cache.lock().unwrap().entry((q, k, d)).or_insert(g).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(25), Some((5, 2)));
    }

    #[test]
    fn conductors() {
        assert_eq!(conductor(2, 3), 9);
        assert_eq!(conductor(2, 4), 45);
        assert_eq!(conductor(3, 3), 56);
        assert!(check_q(6).is_err());
    }

    #[test]
    fn green_inverse() {
        let g = green_at(2, 3, 1);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Rational::from_integer(0.into());
                for k in 0..3 {
                    acc += &g.inverse[i][k] * &g.values[k][j];
                }
                assert_eq!(acc, int(i64::from(i == j)));
            }
        }
    }
}
