//! Deligne-Lusztig characters `R_ν` and the Lusztig-Srinivasan combinations.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;

use super::{convert, green_at, SymBasis, SymElement};
use crate::exactnum::{Cyclotomic, Rational};
use crate::multipartitions::{gamma_t, torus_data, MultiPartition};
use crate::orbits::{char_exponent, level_order, CyclicElt, OrbitKind};
use crate::symfunc::tables as sym_tables;
use crate::{Error, Result};

/// `R_ν` for a torus label `ν ∈ P^Θ`, computed two ways.
#[derive(Clone, Debug)]
pub struct DlCharacter {
    pub label: MultiPartition,
    /// `ch⁻¹((-1)^{‖ν‖-ℓ(ν)} p_ν)`.
    pub via_ch: SymElement,
    /// Direct sum over the torus with Green function values.
    pub via_torus: SymElement,
}

impl DlCharacter {
    pub fn agrees(&self) -> bool {
        self.via_ch == self.via_torus
    }
}

fn check_label(nu: &MultiPartition) -> Result<()> {
    if nu.kind() != OrbitKind::Theta {
        return Err(Error::InvalidArgument(format!("{nu} is not a torus label")));
    }
    Ok(())
}

/// `R_ν` through the characteristic map.
pub fn dl_character_via_ch(nu: &MultiPartition) -> Result<SymElement> {
    check_label(nu)?;
    let sign = if (nu.size() - nu.num_parts()) % 2 == 0 { 1 } else { -1 };
    let p = SymElement::from_terms(nu.q(), nu.size(), SymBasis::PTheta, [(nu.clone(), Cyclotomic::from_int(sign))])?;
    Ok(convert(&p, SymBasis::P)?.relabel(SymBasis::Pi)?)
}

/// `R_ν` as `Σ_t θ(t) Q_{γ_t}(u)`: the torus is `Π M_{k|φ|}` over the parts
/// `k` of each `ν(φ)`, with `θ` the canonical character of `φ` pulled back
/// along the norm on each factor.
pub fn dl_character_via_torus(nu: &MultiPartition) -> Result<SymElement> {
    check_label(nu)?;
    let q = nu.q();
    let mut factors: Vec<(CyclicElt, u32)> = Vec::new();
    for (phi, lam) in nu.parts() {
        let xi = CyclicElt::new(q, phi.size, phi.residue)?;
        for &k in lam.parts() {
            factors.push((xi, k as u32 * phi.size));
        }
    }
    let big_l = factors.iter().fold(1u64, |acc, (xi, _)| acc.lcm(&level_order(q, xi.level)));
    let mut classes: HashMap<MultiPartition, Vec<i64>> = HashMap::new();
    let sizes: Vec<u64> = factors.iter().map(|(_, m)| level_order(q, *m)).collect();
    let mut idx = vec![0u64; factors.len()];
    loop {
        let elements: Vec<(u32, u64)> = factors.iter().zip(&idx).map(|((_, m), &k)| (*m, k)).collect();
        let gamma = gamma_t(q, &elements)?;
        let mut e = 0u64;
        for ((xi, m), &k) in factors.iter().zip(&idx) {
            let (nr, ek) = char_exponent(xi, &CyclicElt { q, level: *m, residue: k })?;
            e = (e + ek * (big_l / nr)) % big_l;
        }
        classes.entry(gamma).or_insert_with(|| vec![0; big_l as usize])[e as usize] += 1;
        let mut i = 0;
        loop {
            if i == idx.len() {
                return assemble(nu, big_l, classes);
            }
            idx[i] += 1;
            if idx[i] < sizes[i] {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn assemble(nu: &MultiPartition, big_l: u64, classes: HashMap<MultiPartition, Vec<i64>>) -> Result<SymElement> {
    let q = nu.q();
    let mut acc: BTreeMap<MultiPartition, Cyclotomic> = BTreeMap::new();
    for (gamma, counts) in classes {
        let weight = Cyclotomic::from_exponent_counts(big_l, &counts).normalize();
        if weight.is_zero() {
            continue;
        }
        // Q_γ^μ(-q) = Π_f Q_{γ(f)}^{μ(f)}((-q)^{d(f)}) over μ with |μ(f)| = |γ(f)|
        let mut partial: Vec<(Vec<(crate::orbits::OrbitId, crate::partitions::Partition)>, Rational)> =
            vec![(Vec::new(), Rational::from_integer(1.into()))];
        for (f, g) in gamma.parts() {
            let table = green_at(q, g.size(), f.size);
            let row = &table.values[table.index[g]];
            let mut next = Vec::new();
            for (labels, c) in &partial {
                for (mu, v) in table.parts.iter().zip(row) {
                    if num_traits::Zero::is_zero(v) {
                        continue;
                    }
                    let mut l = labels.clone();
                    l.push((*f, mu.clone()));
                    next.push((l, c * v));
                }
            }
            partial = next;
        }
        for (labels, c) in partial {
            let mu = MultiPartition::new(OrbitKind::Phi, q, labels)?;
            let e = acc.entry(mu).or_insert_with(Cyclotomic::zero);
            *e += &weight.scale(&c);
        }
    }
    SymElement::from_terms(q, nu.size(), SymBasis::Pi, acc.into_iter().map(|(k, v)| (k, v.normalize())))
}

/// Both constructions of `R_ν`.
pub fn dl_character(nu: &MultiPartition) -> Result<DlCharacter> {
    Ok(DlCharacter {
        label: nu.clone(),
        via_ch: dl_character_via_ch(nu)?,
        via_torus: dl_character_via_torus(nu)?,
    })
}

/// `τ'(λ) = n(λ') + Σ_φ |φ| ⌊|λ(φ)|/2⌋`.
pub fn tau_prime(lambda: &MultiPartition) -> usize {
    lambda.conjugate().n_stat()
        + lambda.parts().iter().map(|(phi, p)| phi.size as usize * (p.size() / 2)).sum::<usize>()
}

/// Exponent of the sign in front of the Lusztig-Srinivasan sum.
pub fn ls_sign_exponent(lambda: &MultiPartition) -> usize {
    let n = lambda.size();
    tau_prime(lambda)
        + n / 2
        + lambda
            .parts()
            .iter()
            .map(|(phi, p)| p.size() + phi.size as usize * p.size().div_ceil(2))
            .sum::<usize>()
}

/// `R(λ) = ± Σ_{γ ∈ P_s^λ} ω^λ(γ)/z_γ R_γ`, a class function in the `π` basis.
pub fn ls_sum(lambda: &MultiPartition) -> Result<SymElement> {
    check_label(lambda)?;
    let mut out = SymElement::zero(lambda.q(), lambda.size(), SymBasis::Pi);
    for class in torus_data(lambda).classes {
        let mut omega: i64 = 1;
        for (phi, lam) in lambda.parts() {
            let t = sym_tables(lam.size());
            omega *= t.chi[t.index[lam]][t.index[&class.gamma.get(phi)]];
        }
        if omega == 0 {
            continue;
        }
        let r = dl_character_via_torus(&class.gamma)?;
        let c = Rational::new(omega.into(), class.z.into());
        out = out.plus(&r.scale(&Cyclotomic::from_rational(c)))?;
    }
    if ls_sign_exponent(lambda) % 2 == 1 {
        out = out.scale(&Cyclotomic::from_int(-1));
    }
    Ok(out)
}
