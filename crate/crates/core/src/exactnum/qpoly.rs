use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{rat_pow, Rational};
use crate::{Error, Result};

/// Laurent polynomial in one variable with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<i32, Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, e: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Dense polynomial `c_0 + c_1 x + ...` from integer coefficients.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_terms(cs.iter().enumerate().map(|(i, &c)| (i as i32, super::int(c))))
    }

    pub fn add_term(&mut self, e: i32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i32) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// True if no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Returns the constant if the polynomial has degree zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Evaluates at `v`.
    pub fn eval(&self, v: &Rational) -> Result<Rational> {
        if v.is_zero() {
            if !self.is_polynomial() {
                return Err(Error::DivisionByZero(
                    "evaluating a Laurent polynomial with negative exponents at 0".into(),
                ));
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.coeffs {
            acc += c * rat_pow(v, e as i64)?;
        }
        Ok(acc)
    }

    pub fn eval_int(&self, v: i64) -> Result<Rational> {
        self.eval(&super::int(v))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// `x^k * p(1/x)`.
    pub fn reverse(&self, k: i32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (k - e, c.clone())).collect() }
    }

    /// `p(x^k)` for `k >= 1`.
    pub fn substitute_power(&self, k: i32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`. Errors if `d` is zero or does not divide.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        let (Some(dmin), Some(dmax)) = (d.min_exp(), d.max_exp()) else {
            return Err(Error::DivisionByZero("polynomial division by zero".into()));
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = d.coeffs[&dmax].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let floor = self.min_exp().unwrap_or(0) - dmin;
        while let Some(rmax) = rem.max_exp() {
            let e = rmax - dmax;
            if e < floor {
                break;
            }
            let c = &rem.coeffs[&rmax] / &lead;
            for (&de, dc) in &d.coeffs {
                rem.add_term(de + e, &-(dc * &c));
            }
            quot.add_term(e, &c);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::Inexact(format!("{self} is not divisible by {d}")))
        }
    }
}

impl From<Rational> for QPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        Self::constant(super::int(c))
    }
}

impl<'a> Add<&'a QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &'a QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &'a QPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

impl<'a> SubAssign<&'a QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &'a QPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, &-c);
        }
    }
}

impl<'a> Sub<&'a QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &'a QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl<'a> Mul<&'a QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &'a QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{abs}*x")?,
                _ if unit => write!(f, "x^{e}")?,
                _ => write!(f, "{abs}*x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn eval_examples() {
        let psi1 = QPoly::from_ints(&[1, -1]);
        assert_eq!(psi1.eval_int(-2).unwrap(), int(3));
        let a2 = QPoly::from_ints(&[0, -1, 1]);
        assert_eq!(a2.eval_int(-2).unwrap(), int(6));
        assert_eq!(QPoly::one().eval_int(7).unwrap(), int(1));
    }

    #[test]
    fn eval_at_zero_with_negative_exponent_fails() {
        let p = QPoly::monomial(int(1), -1);
        assert!(matches!(p.eval_int(0), Err(Error::DivisionByZero(_))));
        assert_eq!(QPoly::from_ints(&[5, 1]).eval_int(0).unwrap(), int(5));
    }

    #[test]
    fn laurent_eval() {
        let p = QPoly::from_terms([(-2, int(4)), (1, rat(1, 2))]);
        assert_eq!(p.eval(&int(2)).unwrap(), int(2));
    }

    #[test]
    fn exact_division() {
        let a = QPoly::from_ints(&[-1, 0, 0, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), QPoly::from_ints(&[1, 1, 1]));
        assert!(QPoly::from_ints(&[1, 0, 1]).div_exact(&b).is_err());
        let l = QPoly::from_terms([(-3, int(1)), (-1, int(1))]);
        let m = QPoly::from_terms([(-1, int(1))]);
        assert_eq!(l.div_exact(&m).unwrap(), QPoly::from_terms([(-2, int(1)), (0, int(1))]));
    }

    #[test]
    fn reverse_and_display() {
        let p = QPoly::from_ints(&[1, 2]);
        assert_eq!(p.reverse(1), QPoly::from_ints(&[2, 1]));
        assert_eq!(QPoly::from_ints(&[1, -1, 0, 3]).to_string(), "3*x^3 - x + 1");
    }
}
