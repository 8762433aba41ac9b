//! Degrees of the irreducible characters, degree sums, and the Gelfand-Graev,
//! symplectic-induction and model decompositions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::charmap::{check_q, circ_product, convert, tau, SymBasis, SymElement};
use crate::exactnum::{int, Cyclotomic, QPoly, Rational};
use crate::multipartitions::{enumerate_mp, group_order, MultiPartition};
use crate::orbits::{orbit_count, OrbitId, OrbitKind};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{delta_spec, multiply, Basis1, SymFn1};
use crate::{Error, Result};

fn check_label(lambda: &MultiPartition) -> Result<()> {
    if lambda.kind() != OrbitKind::Theta {
        return Err(Error::InvalidArgument(format!("{lambda} is not a character label")));
    }
    Ok(())
}

/// `q^i - (-1)^i` as a polynomial in `q`.
fn unitary_factor(i: usize) -> QPoly {
    let sign = if i % 2 == 0 { -1 } else { 1 };
    QPoly::from_terms([(i as i32, int(1)), (0, int(sign))])
}

/// Boxes of `λ` with their hook lengths scaled by orbit size.
pub fn scaled_hooks(lambda: &MultiPartition) -> Vec<usize> {
    lambda
        .parts()
        .iter()
        .flat_map(|(phi, p)| p.hooks().into_iter().map(move |h| h * phi.size as usize))
        .collect()
}

/// `Σ_□ h(□) = ‖λ‖ + n(λ) + n(λ')`.
pub fn hook_length_identity(lambda: &MultiPartition) -> bool {
    scaled_hooks(lambda).iter().sum::<usize>() == lambda.size() + lambda.n_stat() + lambda.conjugate().n_stat()
}

/// `χ^λ(1)` as a polynomial in `q`:
/// `q^{n(λ')} Π_{i ≤ ‖λ‖} (q^i - (-1)^i) / Π_□ (q^{h(□)} - (-1)^{h(□)})`.
///
/// The orbit sizes in `λ` are those of the `q` it was built for; the result is
/// the degree polynomial of that orbit shape.
pub fn degree_poly(lambda: &MultiPartition) -> Result<QPoly> {
    check_label(lambda)?;
    let mut num = QPoly::monomial(int(1), lambda.conjugate().n_stat() as i32);
    for i in 1..=lambda.size() {
        num = &num * &unitary_factor(i);
    }
    let mut den = QPoly::one();
    for h in scaled_hooks(lambda) {
        den = &den * &unitary_factor(h);
    }
    num.div_exact(&den)
}

/// `χ^λ(1)` at the `q` of `λ`.
pub fn degree_hook(lambda: &MultiPartition) -> Result<BigInt> {
    check_label(lambda)?;
    let q = BigInt::from(lambda.q());
    let f = |i: usize| {
        let t = q.pow(i as u32);
        if i % 2 == 0 {
            t - 1
        } else {
            t + 1
        }
    };
    let mut num = q.pow(lambda.conjugate().n_stat() as u32);
    for i in 1..=lambda.size() {
        num *= f(i);
    }
    let mut den = BigInt::one();
    for h in scaled_hooks(lambda) {
        den *= f(h);
    }
    let (d, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Inexact(format!("hook formula for {lambda} is not integral")));
    }
    Ok(d)
}

/// One row of the `degrees` listing.
#[derive(Clone, Debug)]
pub struct DegreeRecord {
    pub label: MultiPartition,
    pub degree_poly: QPoly,
    pub degree: BigInt,
    /// `τ(λ) mod 2`.
    pub tau_parity: u8,
    pub ht: usize,
    /// `o(λ')`.
    pub o_conj: usize,
}

pub fn degree_records(n: usize, q: u64) -> Result<Vec<DegreeRecord>> {
    check_q(q)?;
    enumerate_mp(q, OrbitKind::Theta, n)
        .into_par_iter()
        .map(|label| {
            Ok(DegreeRecord {
                degree_poly: degree_poly(&label)?,
                degree: degree_hook(&label)?,
                tau_parity: (tau(&label) % 2) as u8,
                ht: label.ht(),
                o_conj: label.conjugate().odd_stat(),
                label,
            })
        })
        .collect()
}

/// `(q+1) q^2 (q^3+1) q^4 ⋯ (q^m + (1-(-1)^m)/2)`.
pub fn degree_sum_closed_form(m: usize, q: u64) -> BigInt {
    let q = BigInt::from(q);
    (1..=m as u32).fold(BigInt::one(), |acc, i| {
        let t = q.pow(i);
        acc * if i % 2 == 1 { t + 1 } else { t }
    })
}

/// The degree sum of `U_m` computed three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSums {
    pub via_hooks: BigInt,
    pub closed_form: BigInt,
    pub via_delta: BigInt,
}

impl DegreeSums {
    pub fn agree(&self) -> bool {
        self.via_hooks == self.closed_form && self.closed_form == self.via_delta
    }
}

/// `Σ_λ (-1)^{n(λ)} δ(s_λ)` over `‖λ‖ = m`, assembled from one generating
/// series per orbit size, then scaled by `Π_{i ≤ m} (q^i - (-1)^i)`.
fn degree_sum_delta(m: usize, q: u64) -> Result<BigInt> {
    let qr = Rational::from_integer(q.into());
    let mut series = vec![Rational::zero(); m + 1];
    series[0] = Rational::one();
    for s in 1..=m {
        let count = orbit_count(q, s as u32);
        if count == 0 {
            continue;
        }
        let mut a = vec![Rational::zero(); m + 1];
        a[0] = Rational::one();
        for k in 1..=m / s {
            let mut acc = Rational::zero();
            for lam in partitions_of(k) {
                let d = delta_spec(&SymFn1::basis_element(Basis1::S, lam.clone()), s as u32, &qr)?;
                if (s * lam.n_stat()) % 2 == 1 {
                    acc -= d;
                } else {
                    acc += d;
                }
            }
            a[k * s] = acc;
        }
        for _ in 0..count {
            let mut next = vec![Rational::zero(); m + 1];
            for (i, x) in series.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in a.iter().enumerate().take(m + 1 - i) {
                    if !y.is_zero() {
                        next[i + j] += x * y;
                    }
                }
            }
            series = next;
        }
    }
    let qb = BigInt::from(q);
    let mut scale = BigInt::one();
    for i in 1..=m as u32 {
        let t = qb.pow(i);
        scale *= if i % 2 == 0 { t - 1 } else { t + 1 };
    }
    let v = &series[m] * Rational::from_integer(scale);
    crate::exactnum::to_integer(&v).ok_or_else(|| Error::Inexact(format!("δ-route degree sum {v} is not an integer")))
}

pub fn degree_sum(m: usize, q: u64) -> Result<DegreeSums> {
    check_q(q)?;
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let via_hooks = enumerate_mp(q, OrbitKind::Theta, m)
        .par_iter()
        .map(degree_hook)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    Ok(DegreeSums { via_hooks, closed_form: degree_sum_closed_form(m, q), via_delta: degree_sum_delta(m, q)? })
}

/// True iff every column of every `λ(φ)` has even length.
pub fn conjugate_is_even(lambda: &MultiPartition) -> bool {
    lambda.parts().values().all(|p| p.conjugate().is_even())
}

/// `(q+1) q^2 (q^3+1) ⋯ q^{2m-2} (q^{2m-1}+1)`.
pub fn even_degree_sum_closed_form(m: usize, q: u64) -> BigInt {
    let q = BigInt::from(q);
    (1..2 * m as u32).fold(BigInt::one(), |acc, i| {
        let t = q.pow(i);
        acc * if i % 2 == 1 { t + 1 } else { t }
    })
}

/// `|Sp(2m, F_q)|`.
pub fn sp_order(m: usize, q: u64) -> BigInt {
    let q = BigInt::from(q);
    (1..=m as u32).fold(q.pow((m * m) as u32), |acc, i| acc * (q.pow(2 * i) - 1))
}

/// Even-conjugate degree sum of `U_{2m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenDegreeSum {
    pub via_hooks: BigInt,
    pub closed_form: BigInt,
    /// `|U_{2m}| / |Sp_{2m}|`.
    pub index: BigInt,
}

impl EvenDegreeSum {
    pub fn agree(&self) -> bool {
        self.via_hooks == self.closed_form && self.closed_form == self.index
    }
}

pub fn even_degree_sum(m: usize, q: u64) -> Result<EvenDegreeSum> {
    check_q(q)?;
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let mut via_hooks = BigInt::zero();
    for lam in enumerate_mp(q, OrbitKind::Theta, 2 * m) {
        if conjugate_is_even(&lam) {
            via_hooks += degree_hook(&lam)?;
        }
    }
    Ok(EvenDegreeSum {
        via_hooks,
        closed_form: even_degree_sum_closed_form(m, q),
        index: group_order(2 * m, q) / sp_order(m, q),
    })
}

/// Multiplicities of the irreducible characters in a class function:
/// `⟨f, χ^λ⟩ = (-1)^{τ(λ)} · [s_λ] ch(f)`.
pub fn multiplicities(f: &SymElement) -> Result<BTreeMap<MultiPartition, Cyclotomic>> {
    let s = convert(f, SymBasis::STheta)?;
    Ok(s.coeffs()
        .iter()
        .map(|(lam, c)| (lam.clone(), if tau(lam) % 2 == 1 { -c } else { c.clone() }))
        .collect())
}

/// `ch` of `Σ_λ χ^λ` over the given labels, in the Schur basis.
fn characters_sum(q: u64, degree: usize, labels: impl IntoIterator<Item = MultiPartition>) -> Result<SymElement> {
    SymElement::from_terms(
        q,
        degree,
        SymBasis::STheta,
        labels.into_iter().map(|l| {
            let c = Cyclotomic::from_int(if tau(&l) % 2 == 1 { -1 } else { 1 });
            (l, c)
        }),
    )
}

/// Value of a class function at the identity.
pub fn value_at_identity(f: &SymElement) -> Result<Cyclotomic> {
    let p = convert(f, SymBasis::P)?;
    let one = MultiPartition::single(OrbitId::identity(OrbitKind::Phi, f.q()), Partition::column(f.degree()));
    Ok(p.coeff(&one))
}

/// `ch(Γ_(m)) = (-1)^{⌊m/2⌋} Σ_{γ ∈ P_m^Θ} p_γ / z_γ`, returned in the Schur basis.
pub fn gelfand_graev(m: usize, q: u64) -> Result<SymElement> {
    check_q(q)?;
    let sign = if (m / 2) % 2 == 0 { 1 } else { -1 };
    let terms = enumerate_mp(q, OrbitKind::Theta, m).into_iter().map(|g| {
        let z: u128 = g.parts().values().map(|p| p.z_stat()).product();
        (g, Cyclotomic::from_rational(Rational::new(sign.into(), z.into())))
    });
    let p = SymElement::from_terms(q, m, SymBasis::PTheta, terms)?;
    convert(&p, SymBasis::STheta)
}

/// `Ind_{Sp_{2r}}^{U_{2r}}(1) = Σ_{λ' even} χ^λ`, in the Schur basis. The
/// decomposition is only established for odd `q`; `allow_even_q` computes it
/// anyway.
pub fn sp_induction(r: usize, q: u64, allow_even_q: bool) -> Result<SymElement> {
    check_q(q)?;
    if q % 2 == 0 && !allow_even_q {
        return Err(Error::EvenQ(q));
    }
    characters_sum(q, 2 * r, enumerate_mp(q, OrbitKind::Theta, 2 * r).into_iter().filter(conjugate_is_even))
}

/// One summand `Γ_{m-2r} ∘ Ind_{Sp_{2r}}^{U_{2r}}(1)` of the model.
#[derive(Clone, Debug)]
pub struct ModelTerm {
    pub r: usize,
    pub multiplicities: BTreeMap<MultiPartition, Cyclotomic>,
    /// Support is `{λ : o(λ') = m - 2r}` with every multiplicity 1.
    pub matches_prediction: bool,
}

#[derive(Clone, Debug)]
pub struct ModelDecomposition {
    pub m: usize,
    pub q: u64,
    pub terms: Vec<ModelTerm>,
    /// Every `λ ∈ P_m^Θ` appears exactly once across all terms.
    pub covers_once: bool,
    /// Set when `q` is even, where the symplectic decomposition is unproven.
    pub conjectural: bool,
}

pub fn model_decomposition(m: usize, q: u64, allow_even_q: bool) -> Result<ModelDecomposition> {
    check_q(q)?;
    if q % 2 == 0 && !allow_even_q {
        return Err(Error::EvenQ(q));
    }
    let labels = enumerate_mp(q, OrbitKind::Theta, m);
    let mut total: BTreeMap<MultiPartition, Cyclotomic> = BTreeMap::new();
    let terms = (0..=m / 2)
        .into_par_iter()
        .map(|r| -> Result<ModelTerm> {
            let prod = circ_product(&gelfand_graev(m - 2 * r, q)?, &sp_induction(r, q, true)?)?;
            let mult = multiplicities(&prod)?;
            let predicted: Vec<&MultiPartition> =
                labels.iter().filter(|l| l.conjugate().odd_stat() == m - 2 * r).collect();
            let matches_prediction = mult.len() == predicted.len()
                && predicted.iter().all(|l| mult.get(*l) == Some(&Cyclotomic::one()));
            Ok(ModelTerm { r, multiplicities: mult, matches_prediction })
        })
        .collect::<Result<Vec<_>>>()?;
    for t in &terms {
        for (l, c) in &t.multiplicities {
            *total.entry(l.clone()).or_insert_with(Cyclotomic::zero) += c;
        }
    }
    let covers_once = total.len() == labels.len() && labels.iter().all(|l| total.get(l) == Some(&Cyclotomic::one()));
    Ok(ModelDecomposition { m, q, terms, covers_once, conjectural: q % 2 == 0 })
}

/// Whether `χ^μ ∘ χ^ν` is a character: every `λ` with `c_{μν}^λ > 0` must
/// satisfy `n(μ) + n(ν) ≡ n(λ) + ‖μ‖‖ν‖ (mod 2)`.
pub fn charprod_parity(mu: &MultiPartition, nu: &MultiPartition) -> Result<bool> {
    check_label(mu)?;
    check_label(nu)?;
    let target = (mu.n_stat() + nu.n_stat() + mu.size() * nu.size()) % 2;
    let mut orbits: Vec<OrbitId> = mu.parts().keys().chain(nu.parts().keys()).copied().collect();
    orbits.sort();
    orbits.dedup();
    // each λ with c > 0 is a choice of one LR constituent per orbit; track n(λ) mod 2
    let mut parities = vec![true, false];
    for phi in orbits {
        let (a, b) = (mu.get(&phi), nu.get(&phi));
        let constituents: Vec<Partition> = if a.is_empty() || b.is_empty() {
            vec![a.union(&b)]
        } else {
            let prod = multiply(
                &SymFn1::basis_element(Basis1::S, a.clone()),
                &SymFn1::basis_element(Basis1::S, b.clone()),
            )?;
            prod.coeffs().iter().filter(|(_, c)| !c.is_zero()).map(|(l, _)| l.clone()).collect()
        };
        let mut odd = false;
        let mut even = false;
        for l in &constituents {
            if (phi.size as usize * l.n_stat()) % 2 == 1 {
                odd = true;
            } else {
                even = true;
            }
        }
        parities = vec![
            (parities[0] && even) || (parities[1] && odd),
            (parities[0] && odd) || (parities[1] && even),
        ];
    }
    Ok(!parities[1 - target])
}
