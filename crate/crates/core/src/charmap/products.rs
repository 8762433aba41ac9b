//! The two products on class functions: `⋆` through Hall polynomials and `∘`
//! through multiplication of power sums.

use std::collections::BTreeMap;

use super::{convert, SymBasis, SymElement};
use crate::exactnum::{int, rat_pow, Cyclotomic, QPoly};
use crate::multipartitions::MultiPartition;
use crate::orbits::OrbitKind;
use crate::partitions::Partition;
use crate::symfunc::hall_row;
use crate::{Error, Result};

/// `(a ⋆ b)(c_λ) = Σ Π_f g_{μ₁(f)μ₂(f)}^{λ(f)}((-q)^{d(f)}) a(c_{μ₁}) b(c_{μ₂})`.
/// Inputs in any basis; the result is in the `π` basis.
pub fn star_product(a: &SymElement, b: &SymElement) -> Result<SymElement> {
    if a.q != b.q {
        return Err(Error::InvalidArgument(format!("q = {} vs q = {}", a.q, b.q)));
    }
    let q = a.q;
    let a = convert(a, SymBasis::Pi)?;
    let b = convert(b, SymBasis::Pi)?;
    let mut acc: BTreeMap<MultiPartition, Cyclotomic> = BTreeMap::new();
    for (m1, c1) in a.coeffs() {
        for (m2, c2) in b.coeffs() {
            let c = c1 * c2;
            let mut partial = vec![(MultiPartition::empty(OrbitKind::Phi, q), crate::exactnum::int(1))];
            let mut orbits: Vec<_> = m1.parts().keys().chain(m2.parts().keys()).copied().collect();
            orbits.sort();
            orbits.dedup();
            for f in orbits {
                let (p1, p2) = (m1.get(&f), m2.get(&f));
                let v = rat_pow(&int(-(q as i64)), f.size as i64)?;
                let row: Vec<(Partition, QPoly)> = if p1.is_empty() || p2.is_empty() {
                    vec![(p1.union(&p2), QPoly::one())]
                } else {
                    hall_row(&p1, &p2)?.iter().map(|(l, g)| (l.clone(), g.clone())).collect()
                };
                let mut next = Vec::new();
                for (mu, g) in &partial {
                    for (lam, poly) in &row {
                        let val = poly.eval(&v)?;
                        if num_traits::Zero::is_zero(&val) {
                            continue;
                        }
                        next.push((mu.union(&MultiPartition::single(f, lam.clone())), g * &val));
                    }
                }
                partial = next;
            }
            for (lam, g) in partial {
                let e = acc.entry(lam).or_insert_with(Cyclotomic::zero);
                *e += &c.scale(&g);
            }
        }
    }
    SymElement::from_terms(q, a.degree + b.degree, SymBasis::Pi, acc.into_iter().map(|(k, v)| (k, v.normalize())))
}

/// `a · b` computed in the power-sum basis `via` (`PTheta` or `PPhi`), where
/// multiplication is concatenation of labels. The result is returned in the
/// basis of `a`.
pub fn multiply_power_sums(a: &SymElement, b: &SymElement, via: SymBasis) -> Result<SymElement> {
    if !matches!(via, SymBasis::PTheta | SymBasis::PPhi) {
        return Err(Error::InvalidArgument(format!("{via:?} is not a power-sum basis")));
    }
    if a.q != b.q {
        return Err(Error::InvalidArgument(format!("q = {} vs q = {}", a.q, b.q)));
    }
    let pa = convert(a, via)?;
    let pb = convert(b, via)?;
    let mut acc: BTreeMap<MultiPartition, Cyclotomic> = BTreeMap::new();
    for (m1, c1) in pa.coeffs() {
        for (m2, c2) in pb.coeffs() {
            let e = acc.entry(m1.union(m2)).or_insert_with(Cyclotomic::zero);
            *e += &(c1 * c2);
        }
    }
    let prod = SymElement::from_terms(a.q, a.degree + b.degree, via, acc.into_iter().map(|(k, v)| (k, v.normalize())))?;
    convert(&prod, a.basis)
}

/// `a ∘ b`, the Deligne-Lusztig induction product, via `ch(a ∘ b) = ch(a) ch(b)`.
/// Works in `p_Θ` when both inputs are `Θ`-indexed and in `p_Φ` otherwise.
pub fn circ_product(a: &SymElement, b: &SymElement) -> Result<SymElement> {
    let via = if a.basis.kind() == OrbitKind::Theta && b.basis.kind() == OrbitKind::Theta {
        SymBasis::PTheta
    } else {
        SymBasis::PPhi
    };
    multiply_power_sums(a, b, via)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::OrbitId;

    #[test]
    fn box_star_box() {
        let f = OrbitId::identity(OrbitKind::Phi, 2);
        let pi = SymElement::basis_element(SymBasis::Pi, MultiPartition::single(f, Partition::row(1))).unwrap();
        let s = star_product(&pi, &pi).unwrap();
        assert_eq!(s.coeff(&MultiPartition::single(f, Partition::row(2))), Cyclotomic::one());
        assert_eq!(s.coeff(&MultiPartition::single(f, Partition::column(2))), Cyclotomic::from_int(-1));
        let c = circ_product(&pi, &pi).unwrap();
        assert_eq!(c, s);
    }
}
