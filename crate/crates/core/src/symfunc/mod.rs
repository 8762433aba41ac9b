//! Symmetric functions in a single alphabet: power sums, Schur functions and
//! Hall-Littlewood polynomials `P_μ(t)`, with coefficients in `Q[t, 1/t]`.

mod tables;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

pub use tables::{charge, green_poly, kostka_foulkes, kostka_number, sn_char, tables, DegreeTables};

use crate::exactnum::{int, rat_pow, QPoly, Rational};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Basis of the degree-`n` part of the ring of symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis1 {
    /// Power sums `p_ν`.
    P,
    /// Schur functions `s_λ`.
    S,
    /// Hall-Littlewood polynomials `P_μ(t)`.
    Hl,
}

/// A homogeneous symmetric function written in one of the bases [`Basis1`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFn1 {
    degree: usize,
    basis: Basis1,
    coeffs: BTreeMap<Partition, QPoly>,
}

impl SymFn1 {
    pub fn zero(degree: usize, basis: Basis1) -> Self {
        Self { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The basis element indexed by `lambda`.
    pub fn basis_element(basis: Basis1, lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.size(), basis);
        f.coeffs.insert(lambda, QPoly::one());
        f
    }

    /// Builds an element from terms; all partitions must have the same size.
    pub fn from_terms<I>(degree: usize, basis: Basis1, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, QPoly)>,
    {
        let mut f = Self::zero(degree, basis);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::DegreeMismatch(p.size(), degree));
            }
            f.add_term(p, &c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis1 {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, QPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, p: Partition, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(p.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (p, v) in &self.coeffs {
            out.add_term(p.clone(), &(v * c));
        }
        out
    }

    /// Sum of two elements in the same degree, returned in the basis of `self`.
    pub fn add(&self, other: &SymFn1) -> Result<SymFn1> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let other = convert(other, self.basis)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }
}

/// Applies `x_row = Σ_col m[row][col] y_col` style transitions.
fn apply<F>(f: &SymFn1, target: Basis1, mut image: F) -> SymFn1
where
    F: FnMut(usize, &mut dyn FnMut(usize, QPoly)),
{
    let t = tables(f.degree);
    let mut out = SymFn1::zero(f.degree, target);
    for (p, c) in &f.coeffs {
        let i = t.index[p];
        image(i, &mut |j, v| {
            if !v.is_zero() {
                out.add_term(t.parts[j].clone(), &(c * &v));
            }
        });
    }
    out
}

fn to_schur(f: &SymFn1) -> SymFn1 {
    let t = tables(f.degree);
    let k = t.parts.len();
    match f.basis {
        Basis1::S => f.clone(),
        Basis1::P => apply(f, Basis1::S, |nu, emit| {
            for l in 0..k {
                emit(l, QPoly::from(t.chi[l][nu]));
            }
        }),
        Basis1::Hl => apply(f, Basis1::S, |mu, emit| {
            for l in 0..k {
                emit(l, t.kostka_inv[mu][l].clone());
            }
        }),
    }
}

fn from_schur(f: &SymFn1, target: Basis1) -> SymFn1 {
    let t = tables(f.degree);
    let k = t.parts.len();
    match target {
        Basis1::S => f.clone(),
        Basis1::P => apply(f, Basis1::P, |l, emit| {
            for nu in 0..k {
                let c = Rational::new(t.chi[l][nu].into(), (t.z[nu] as i128).into());
                emit(nu, QPoly::constant(c));
            }
        }),
        Basis1::Hl => apply(f, Basis1::Hl, |l, emit| {
            for mu in 0..k {
                emit(mu, t.kostka[l][mu].clone());
            }
        }),
    }
}

/// Change of basis. Schur functions act as the hub, so every transition
/// matrix used is unitriangular or has rational entries and the result stays
/// in `Q[t, 1/t]`.
pub fn convert(f: &SymFn1, target: Basis1) -> Result<SymFn1> {
    if let Some((p, _)) = f.coeffs.iter().find(|(p, _)| p.size() != f.degree) {
        return Err(Error::DegreeMismatch(p.size(), f.degree));
    }
    if f.basis == target {
        return Ok(f.clone());
    }
    Ok(from_schur(&to_schur(f), target))
}

/// Product of two symmetric functions, computed on power sums and returned in
/// the basis of `f`.
pub fn multiply(f: &SymFn1, g: &SymFn1) -> Result<SymFn1> {
    let a = convert(f, Basis1::P)?;
    let b = convert(g, Basis1::P)?;
    let mut out = SymFn1::zero(f.degree + g.degree, Basis1::P);
    for (p1, c1) in &a.coeffs {
        for (p2, c2) in &b.coeffs {
            out.add_term(p1.union(p2), &(c1 * c2));
        }
    }
    convert(&out, f.basis)
}

fn constant_coeff(c: &QPoly, what: &str) -> Result<Rational> {
    c.as_constant()
        .ok_or_else(|| Error::InvalidArgument(format!("{what}: coefficient {c} is not constant")))
}

/// Littlewood-Richardson coefficient `c_{μν}^λ`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<i64> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!(
            "|{mu}| + |{nu}| != |{lambda}|"
        )));
    }
    let prod = multiply(
        &SymFn1::basis_element(Basis1::S, mu.clone()),
        &SymFn1::basis_element(Basis1::S, nu.clone()),
    )?;
    let c = constant_coeff(&prod.coeff(lambda), "lr_coefficient")?;
    Ok(crate::exactnum::to_integer(&c).and_then(|v| i64::try_from(v).ok()).expect("integral"))
}

/// True iff `ν ⊆ λ` and `λ/ν` is a horizontal strip of size `r`.
pub fn horizontal_strip(lambda: &Partition, nu: &Partition, r: usize) -> bool {
    if !lambda.contains(nu) || lambda.size() != nu.size() + r {
        return false;
    }
    let lc = lambda.conjugate();
    let nc = nu.conjugate();
    (0..lc.len()).all(|j| lc.part(j) - nc.part(j) <= 1)
}

type HallRow = Arc<BTreeMap<Partition, QPoly>>;

/// All Hall polynomials `g_{μν}^λ(t)` for fixed `μ, ν`.
pub fn hall_row(mu: &Partition, nu: &Partition) -> Result<HallRow> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), HallRow>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (mu.clone(), nu.clone());
    if let Some(r) = cache.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let prod = multiply(
        &SymFn1::basis_element(Basis1::Hl, mu.clone()),
        &SymFn1::basis_element(Basis1::Hl, nu.clone()),
    )?;
    let shift = |l: &Partition| l.n_stat() as i32 - mu.n_stat() as i32 - nu.n_stat() as i32;
    let row: BTreeMap<Partition, QPoly> =
        prod.coeffs.iter().map(|(l, f)| (l.clone(), f.reverse(shift(l)))).collect();
    let row = Arc::new(row);
    cache.lock().unwrap().insert(key, row.clone());
    Ok(row)
}

/// Hall polynomial `g_{μν}^λ(t)`, read off the structure constants of the
/// Hall-Littlewood basis.
pub fn hall_polynomial(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<QPoly> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!("|{mu}| + |{nu}| != |{lambda}|")));
    }
    Ok(hall_row(mu, nu)?.get(lambda).cloned().unwrap_or_default())
}

/// The specialization `p_m ↦ (-1)^{m s} / ((-q)^{m s} - 1)` for an orbit of size
/// `s`, applied to a symmetric function with constant coefficients.
pub fn delta_spec(f: &SymFn1, orbit_size: u32, q: &Rational) -> Result<Rational> {
    let p = convert(f, Basis1::P)?;
    let neg_q = -q;
    let mut cache: HashMap<usize, Rational> = HashMap::new();
    let mut total = Rational::zero();
    for (nu, c) in &p.coeffs {
        let c = constant_coeff(c, "delta_spec")?;
        let mut term = c;
        for &m in nu.parts() {
            let v = match cache.get(&m) {
                Some(v) => v.clone(),
                None => {
                    let e = m as i64 * orbit_size as i64;
                    let den = rat_pow(&neg_q, e)? - Rational::one();
                    if den.is_zero() {
                        return Err(Error::DivisionByZero(format!("(-q)^{e} = 1 in delta_spec")));
                    }
                    let v = int(crate::exactnum::sign_pow(e)) / den;
                    cache.insert(m, v.clone());
                    v
                }
            };
            term *= v;
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn el(b: Basis1, v: &[usize]) -> SymFn1 {
        SymFn1::basis_element(b, p(v))
    }

    fn c(r: Rational) -> QPoly {
        QPoly::constant(r)
    }

    #[test]
    fn convert_examples() {
        let s11 = convert(&el(Basis1::S, &[1, 1]), Basis1::P).unwrap();
        let want = SymFn1::from_terms(
            2,
            Basis1::P,
            [(p(&[1, 1]), c(rat(1, 2))), (p(&[2]), c(rat(-1, 2)))],
        )
        .unwrap();
        assert_eq!(s11, want);
        assert_eq!(convert(&el(Basis1::P, &[1]), Basis1::S).unwrap(), el(Basis1::S, &[1]));
        let s2 = convert(&el(Basis1::S, &[2]), Basis1::Hl).unwrap();
        let want = SymFn1::from_terms(
            2,
            Basis1::Hl,
            [(p(&[2]), QPoly::one()), (p(&[1, 1]), QPoly::x())],
        )
        .unwrap();
        assert_eq!(s2, want);
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            multiply(&el(Basis1::P, &[2]), &el(Basis1::P, &[1])).unwrap(),
            el(Basis1::P, &[2, 1])
        );
        let s1 = el(Basis1::S, &[1]);
        let want = el(Basis1::S, &[2]).add(&el(Basis1::S, &[1, 1])).unwrap();
        assert_eq!(multiply(&s1, &s1).unwrap(), want);
        let want = el(Basis1::S, &[3]).add(&el(Basis1::S, &[2, 1])).unwrap();
        assert_eq!(multiply(&s1, &el(Basis1::S, &[2])).unwrap(), want);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])).is_err());
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
    }

    #[test]
    fn strip_examples() {
        assert!(horizontal_strip(&p(&[3, 2]), &p(&[2, 2]), 1));
        assert!(!horizontal_strip(&p(&[3, 3]), &p(&[2, 1]), 3));
        assert!(horizontal_strip(&p(&[2]), &Partition::empty(), 2));
    }

    #[test]
    fn hall_examples() {
        let one = p(&[1]);
        assert_eq!(hall_polynomial(&one, &one, &p(&[1, 1])).unwrap(), QPoly::from_ints(&[1, 1]));
        assert_eq!(hall_polynomial(&one, &one, &p(&[2])).unwrap(), QPoly::one());
        let l = p(&[2, 1]);
        assert_eq!(hall_polynomial(&Partition::empty(), &l, &l).unwrap(), QPoly::one());
    }

    #[test]
    fn delta_examples() {
        let q = int(2);
        assert_eq!(delta_spec(&el(Basis1::S, &[1]), 1, &q).unwrap(), rat(1, 3));
        assert_eq!(delta_spec(&el(Basis1::P, &[2]), 1, &q).unwrap(), rat(1, 3));
        assert_eq!(delta_spec(&el(Basis1::S, &[]), 1, &q).unwrap(), int(1));
        assert!(delta_spec(&el(Basis1::P, &[1]), 2, &int(1)).is_err());
    }
}
