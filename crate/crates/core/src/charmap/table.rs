use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{check_q, conductor, convert, SymBasis, SymElement};
use crate::exactnum::{Cyclotomic, IntCyclo, Rational};
use crate::multipartitions::{centralizer_order, class_size, enumerate_mp, group_order, MultiPartition};
use crate::orbits::OrbitKind;
use crate::{Error, Result};

/// `τ(λ) = ‖λ‖(‖λ‖+3)/2 + n(λ)`; `χ^λ = (-1)^{τ(λ)} ch⁻¹(s_λ)`.
pub fn tau(lambda: &MultiPartition) -> usize {
    let n = lambda.size();
    n * (n + 3) / 2 + lambda.n_stat()
}

/// `s_λ` written in the `P` basis.
pub fn expand_schur(lambda: &MultiPartition) -> Result<SymElement> {
    if lambda.kind() != OrbitKind::Theta {
        return Err(Error::InvalidArgument(format!("{lambda} is not a character label")));
    }
    convert(&SymElement::basis_element(SymBasis::STheta, lambda.clone())?, SymBasis::P)
}

/// `⟨a, b⟩ = Σ_μ a_μ⁻¹ a(c_μ) conj(b(c_μ))`, computed in the `P` basis.
pub fn inner_product(a: &SymElement, b: &SymElement) -> Result<Cyclotomic> {
    a.check_compatible(b)?;
    let a = convert(a, SymBasis::P)?;
    let b = convert(b, SymBasis::P)?;
    let mut acc = Cyclotomic::zero();
    for (mu, x) in a.coeffs() {
        if let Some(y) = b.coeffs().get(mu) {
            let w = Rational::new(1.into(), centralizer_order(mu));
            acc += &(x * &y.conj()).scale(&w);
        }
    }
    Ok(acc.normalize())
}

/// The character table of `U(n, F_{q^2})`.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub n: usize,
    pub q: u64,
    /// Row labels `λ ∈ P_n^Θ`.
    pub rows: Vec<MultiPartition>,
    /// Column labels `μ ∈ P_n^Φ`.
    pub cols: Vec<MultiPartition>,
    /// `values[i][j] = χ^{rows[i]}(c_{cols[j]})`.
    pub values: Vec<Vec<Cyclotomic>>,
    pub class_sizes: Vec<BigInt>,
    pub centralizers: Vec<BigInt>,
    pub conductor: u64,
}

/// Builds the table row by row (in parallel when `parallel` is set).
pub fn char_table(n: usize, q: u64, parallel: bool) -> Result<CharTable> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let rows = enumerate_mp(q, OrbitKind::Theta, n);
    let cols = enumerate_mp(q, OrbitKind::Phi, n);
    let row = |lambda: &MultiPartition| -> Result<Vec<Cyclotomic>> {
        let p = expand_schur(lambda)?;
        let negate = tau(lambda) % 2 == 1;
        Ok(cols
            .iter()
            .map(|mu| {
                let c = p.coeff(mu);
                if negate {
                    -c
                } else {
                    c
                }
            })
            .collect())
    };
    let values: Vec<Vec<Cyclotomic>> = if parallel {
        rows.par_iter().map(row).collect::<Result<_>>()?
    } else {
        rows.iter().map(row).collect::<Result<_>>()?
    };
    let centralizers: Vec<BigInt> = cols.iter().map(centralizer_order).collect();
    let class_sizes = cols.iter().map(class_size).collect();
    Ok(CharTable { n, q, rows, cols, values, class_sizes, centralizers, conductor: conductor(q, n) })
}

impl CharTable {
    /// Column of the identity class.
    pub fn identity_column(&self) -> usize {
        let order = group_order(self.n, self.q);
        self.centralizers.iter().position(|c| *c == order).expect("identity class present")
    }

    /// `χ(1)` for every row, as integers.
    pub fn degrees(&self) -> Vec<BigInt> {
        let j = self.identity_column();
        self.values
            .iter()
            .map(|r| {
                crate::exactnum::to_integer(&r[j].as_rational().expect("degrees are rational"))
                    .expect("degrees are integers")
            })
            .collect()
    }

    fn int_values(&self) -> Result<Vec<Vec<IntCyclo>>> {
        self.values
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        IntCyclo::from_cyclotomic(v, self.conductor)
                            .ok_or_else(|| Error::Inexact(format!("{v} is not an algebraic integer in Q(ζ_{})", self.conductor)))
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks `Σ_μ |c_μ| χ(c_μ) conj(η(c_μ)) = |G| δ_{χη}` for every pair of
    /// rows, returning the pairs that fail.
    pub fn orthogonality_failures(&self) -> Result<Vec<(usize, usize)>> {
        let vals = self.int_values()?;
        let conj: Vec<Vec<IntCyclo>> = vals.iter().map(|r| r.iter().map(IntCyclo::conj).collect()).collect();
        let sizes: Vec<i128> = self
            .class_sizes
            .iter()
            .map(|s| s.to_i128().ok_or_else(|| Error::Unsupported("class size exceeds i128".into())))
            .collect::<Result<_>>()?;
        let order = group_order(self.n, self.q);
        let unit = IntCyclo::from_cyclotomic(&Cyclotomic::from_rational(order.into()), self.conductor)
            .expect("integer");
        let zero = IntCyclo::zero(self.conductor);
        let k = vals.len();
        let failures: Vec<(usize, usize)> = (0..k)
            .into_par_iter()
            .flat_map_iter(|i| {
                let (vals, conj, sizes, unit, zero) = (&vals, &conj, &sizes, &unit, &zero);
                (i..k).filter_map(move |j| {
                    let mut acc = IntCyclo::zero(self.conductor);
                    for c in 0..sizes.len() {
                        acc.add_product(&vals[i][c], &conj[j][c], sizes[c]);
                    }
                    let expect = if i == j { &unit } else { &zero };
                    (acc != **expect).then_some((i, j))
                })
            })
            .collect();
        Ok(failures)
    }

    /// Row `i` as a class function in the `π` basis.
    pub fn row_element(&self, i: usize) -> Result<SymElement> {
        SymElement::from_terms(
            self.q,
            self.n,
            SymBasis::Pi,
            self.cols.iter().cloned().zip(self.values[i].iter().cloned()).filter(|(_, v)| !v.is_zero()),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "n": self.n,
            "q": self.q,
            "conductor": self.conductor,
            "rows": self.rows.iter().map(MultiPartition::to_json).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(MultiPartition::to_json).collect::<Vec<_>>(),
            "values": self
                .values
                .iter()
                .map(|r| r.iter().map(Cyclotomic::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "class_sizes": self.class_sizes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// CSV with exact values written as sums of `c*zN^k`; header row holds
    /// the class labels.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("chi");
        for c in &self.cols {
            out.push_str(&format!(",\"{c}\""));
        }
        out.push('\n');
        for (lam, r) in self.rows.iter().zip(&self.values) {
            out.push_str(&format!("\"{lam}\""));
            for v in r {
                out.push_str(&format!(",{}", v.clone().normalize()));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u1_is_cyclic() {
        let t = char_table(1, 2, false).unwrap();
        assert_eq!(t.rows.len(), 3);
        for (j, row) in t.values.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(*v, Cyclotomic::root_of_unity(3, (j * k) as i64).normalize());
            }
        }
    }

    #[test]
    fn u2_degrees() {
        let t = char_table(2, 2, true).unwrap();
        let mut d: Vec<i64> = t.degrees().iter().map(|x| x.to_i64().unwrap()).collect();
        d.sort();
        assert_eq!(d, vec![1, 1, 1, 1, 1, 1, 2, 2, 2]);
        assert!(t.values[0].iter().all(|v| *v == Cyclotomic::one()));
        assert!(t.orthogonality_failures().unwrap().is_empty());
    }
}
