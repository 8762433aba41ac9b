//! Exact coefficient domains.

mod cyclotomic;
mod qpoly;

pub use cyclotomic::{cyclo_arith, cyclotomic_polynomial, CycloOp, CycloValue, Cyclotomic, IntCyclo};
pub use qpoly::QPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^e` for a possibly negative exponent. Errors on `0^e` with `e < 0`.
pub fn rat_pow(base: &Rational, e: i64) -> crate::Result<Rational> {
    if e < 0 && base.is_zero() {
        return Err(crate::Error::DivisionByZero(format!("0^{e}")));
    }
    let mut acc = Rational::one();
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        k >>= 1;
        if k > 0 {
            b = &b * &b;
        }
    }
    Ok(acc)
}

/// Converts a rational that is known to be an integer.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

/// `(-1)^e` as an `i64`.
pub fn sign_pow(e: i64) -> i64 {
    if e.is_even() {
        1
    } else {
        -1
    }
}

/// `[num, den]` pair used by the JSON encodings.
pub fn rational_to_json(r: &Rational) -> serde_json::Value {
    let num = r.numer().to_string();
    let den = r.denom().to_string();
    let as_json = |s: String| match s.parse::<i64>() {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(s),
    };
    serde_json::Value::Array(vec![as_json(num), as_json(den)])
}

/// Approximate value, only for display.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
