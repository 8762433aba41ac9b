use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::{Error, Result};

/// Arithmetic data for `Q(zeta_N)`.
struct Field {
    degree: usize,
    /// `zeta^k` reduced modulo `Phi_N`, for `0 <= k < N`.
    powers: Vec<Vec<i64>>,
}

fn int_poly_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    // Both monic, exact division.
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = int_poly_divide(&p, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn field(n: u64) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return f.clone();
    }
    let modulus = cyclotomic_polynomial(n);
    let degree = modulus.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; degree];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x, then reduce the overflow coefficient
        let top = cur[degree - 1];
        for i in (1..degree).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..degree {
                cur[i] = cur[i].checked_sub(top * modulus[i]).expect("cyclotomic reduction overflow");
            }
        }
    }
    let f = Arc::new(Field { degree, powers });
    cache.lock().unwrap().entry(n).or_insert(f).clone()
}

/// Euler's totient.
fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// An element of the cyclotomic field `Q(zeta_N)`, stored as a polynomial in
/// `zeta_N` of degree below `phi(N)`.
///
/// Rational values are kept at conductor 1. Binary operators lift both sides
/// to the lcm of the conductors; [`cyclo_arith`] and the `try_*` methods
/// insist on equal conductors instead.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::int(n))
    }

    /// The zero element written with conductor `n`.
    pub fn zero_in(n: u64) -> Self {
        let deg = totient(n) as usize;
        Self { conductor: n, coeffs: vec![Rational::zero(); deg] }
    }

    /// The rational `r` written with conductor `n`.
    pub fn rational_in(r: Rational, n: u64) -> Self {
        let mut z = Self::zero_in(n);
        z.coeffs[0] = r;
        z
    }

    /// `zeta_n^k`, written with conductor `n`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let f = field(n);
        let idx = k.rem_euclid(n as i64) as usize;
        Self {
            conductor: n,
            coeffs: f.powers[idx].iter().map(|&c| super::int(c)).collect(),
        }
    }

    /// `sum_k counts[k] * zeta_n^k`.
    pub fn from_exponent_counts(n: u64, counts: &[i64]) -> Self {
        let f = field(n);
        let mut acc = vec![0i64; f.degree];
        for (k, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (a, &p) in acc.iter_mut().zip(&f.powers[k % n as usize]) {
                *a += c * p;
            }
        }
        Self { conductor: n, coeffs: acc.into_iter().map(super::int).collect() }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients on `1, zeta, ..., zeta^(phi(N)-1)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Rewrites the element with conductor `m`, a multiple of the current one.
    pub fn lift(&self, m: u64) -> Result<Self> {
        if m % self.conductor != 0 {
            return Err(Error::ConductorMismatch(self.conductor, m));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let f = field(m);
        let mut out = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&f.powers[i * step]) {
                if p != 0 {
                    *o += c * BigInt::from(p);
                }
            }
        }
        Ok(Self { conductor: m, coeffs: out })
    }

    /// Drops to conductor 1 when the value is rational.
    pub fn normalize(self) -> Self {
        if self.conductor != 1 && self.is_rational() {
            Self::from_rational(self.coeffs[0].clone())
        } else {
            self
        }
    }

    fn lifted_pair(a: &Self, b: &Self) -> (Self, Self) {
        let n = a.conductor.lcm(&b.conductor);
        (a.lift(n).expect("lcm lift"), b.lift(n).expect("lcm lift"))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.conductor == 1 {
            return Ok(other.scale(&self.coeffs[0]));
        }
        let f = field(self.conductor);
        let d = f.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let n = self.conductor as usize;
        let (low, high) = prod.split_at_mut(d);
        for (i, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in low.iter_mut().zip(&f.powers[(i + d) % n]) {
                if p != 0 {
                    *o += c * BigInt::from(p);
                }
            }
        }
        prod.truncate(d);
        Ok(Self { conductor: self.conductor, coeffs: prod })
    }

    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(())
    }

    /// Complex conjugation, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        let f = field(self.conductor);
        let n = self.conductor as usize;
        let mut out = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&f.powers[(n - i) % n]) {
                if p != 0 {
                    *o += c * BigInt::from(p);
                }
            }
        }
        Self { conductor: self.conductor, coeffs: out }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse, via the product of the other Galois conjugates.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero cyclotomic".into()));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let n = self.conductor;
        let mut other = Self::rational_in(Rational::one(), n);
        for j in 2..n {
            if j.gcd(&n) == 1 {
                other = other.try_mul(&self.galois(j))?;
            }
        }
        let norm = self.try_mul(&other)?.as_rational().expect("field norm is rational");
        Ok(other.scale(&norm.recip()).normalize())
    }

    /// The Galois automorphism `zeta -> zeta^j`, `gcd(j, N) = 1`.
    pub fn galois(&self, j: u64) -> Self {
        let f = field(self.conductor);
        let n = self.conductor as usize;
        let mut out = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&f.powers[(i * j as usize) % n]) {
                if p != 0 {
                    *o += c * BigInt::from(p);
                }
            }
        }
        Self { conductor: self.conductor, coeffs: out }
    }

    /// Sum of all Galois conjugates. Always rational.
    pub fn trace(&self) -> Rational {
        let n = self.conductor;
        let mut acc = Self::zero_in(n);
        for j in 1..=n {
            if j.gcd(&n) == 1 {
                acc = acc.try_add(&self.galois(j % n.max(1))).expect("same conductor");
            }
        }
        acc.as_rational().expect("trace is rational")
    }

    /// Floating point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = super::rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / self.conductor as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// `{"N": conductor, "coeffs": [[num, den], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let c = self.clone().normalize();
        serde_json::json!({
            "N": c.conductor,
            "coeffs": c.coeffs.iter().map(super::rational_to_json).collect::<Vec<_>>(),
        })
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::lifted_pair(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return self.try_add(rhs).expect("same conductor");
        }
        if rhs.conductor == 1 {
            let mut out = self.clone();
            out.coeffs[0] += &rhs.coeffs[0];
            return out;
        }
        if self.conductor == 1 {
            let mut out = rhs.clone();
            out.coeffs[0] += &self.coeffs[0];
            return out;
        }
        let (a, b) = Cyclotomic::lifted_pair(self, rhs);
        a.try_add(&b).expect("same conductor")
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl<'a> AddAssign<&'a Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &'a Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else if rhs.conductor == 1 {
            self.coeffs[0] += &rhs.coeffs[0];
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Sub<&'a Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor == rhs.conductor {
            return self.try_mul(rhs).expect("same conductor");
        }
        let (a, b) = Cyclotomic::lifted_pair(self, rhs);
        a.try_mul(&b).expect("same conductor")
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("{c}"),
                1 => format!("{c}*z{}", self.conductor),
                _ => format!("{c}*z{}^{k}", self.conductor),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// An element of `Z[zeta_N]` with machine-integer coefficients, for hot loops
/// such as orthogonality checks where every value is an algebraic integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntCyclo {
    conductor: u64,
    coeffs: Vec<i128>,
}

impl IntCyclo {
    pub fn zero(n: u64) -> Self {
        Self { conductor: n, coeffs: vec![0; totient(n) as usize] }
    }

    /// Lifts `x` to conductor `n`; `None` if a coefficient is not an integer.
    pub fn from_cyclotomic(x: &Cyclotomic, n: u64) -> Option<Self> {
        use num_traits::ToPrimitive;
        let lifted = x.lift(n).ok()?;
        let coeffs = lifted
            .coeffs
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i128() } else { None })
            .collect::<Option<Vec<_>>>()?;
        Some(Self { conductor: n, coeffs })
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect(),
        }
        .normalize()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn conj(&self) -> Self {
        let f = field(self.conductor);
        let n = self.conductor as usize;
        let mut out = vec![0i128; f.degree];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                for (o, &p) in out.iter_mut().zip(&f.powers[(n - i) % n]) {
                    *o += c * p as i128;
                }
            }
        }
        Self { conductor: self.conductor, coeffs: out }
    }

    /// `self += k * a * b`.
    pub fn add_product(&mut self, a: &IntCyclo, b: &IntCyclo, k: i128) {
        let f = field(self.conductor);
        let d = f.degree;
        let n = self.conductor as usize;
        let mut prod = vec![0i128; 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for (i, &c) in prod.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if i < d {
                self.coeffs[i] += k * c;
            } else {
                for (o, &p) in self.coeffs.iter_mut().zip(&f.powers[i % n]) {
                    *o += k * c * p as i128;
                }
            }
        }
    }
}

/// Operation selector for [`cyclo_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycloOp {
    Add,
    Mul,
    Conj,
    Eq,
}

/// Result of [`cyclo_arith`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycloValue {
    Value(Cyclotomic),
    Bool(bool),
}

/// Field arithmetic on two elements that share a conductor. `Conj` ignores `b`
/// apart from the conductor check.
pub fn cyclo_arith(a: &Cyclotomic, b: &Cyclotomic, op: CycloOp) -> Result<CycloValue> {
    a.check(b)?;
    Ok(match op {
        CycloOp::Add => CycloValue::Value(a.try_add(b)?),
        CycloOp::Mul => CycloValue::Value(a.try_mul(b)?),
        CycloOp::Conj => CycloValue::Value(a.conj()),
        CycloOp::Eq => CycloValue::Bool(a.try_eq(b)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, totient(n));
        }
    }

    #[test]
    fn vanishing_sum() {
        let s = cyclo_arith(&z(3, 1), &z(3, 2), CycloOp::Add).unwrap();
        let CycloValue::Value(s) = s else { panic!() };
        let s = s.try_add(&Cyclotomic::rational_in(int(1), 3)).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn conj_of_zeta9() {
        assert_eq!(
            cyclo_arith(&z(9, 1), &z(9, 0), CycloOp::Conj).unwrap(),
            CycloValue::Value(z(9, 8))
        );
    }

    #[test]
    fn root_product() {
        let CycloValue::Value(p) = cyclo_arith(&z(3, 1), &z(3, 2), CycloOp::Mul).unwrap() else {
            panic!()
        };
        assert_eq!(p, Cyclotomic::one());
        assert_eq!(cyclo_arith(&p, &z(3, 0), CycloOp::Eq).unwrap(), CycloValue::Bool(true));
    }

    #[test]
    fn mismatched_conductor() {
        assert_eq!(
            cyclo_arith(&z(3, 1), &z(5, 1), CycloOp::Add),
            Err(Error::ConductorMismatch(3, 5))
        );
    }

    #[test]
    fn powers_wrap_around() {
        for n in 1..=30u64 {
            let mut acc = Cyclotomic::rational_in(int(1), n);
            let zeta = z(n, 1);
            for _ in 0..n {
                acc = acc.try_mul(&zeta).unwrap();
            }
            assert_eq!(acc, Cyclotomic::one(), "n = {n}");
        }
    }

    #[test]
    fn lifting_preserves_value() {
        assert_eq!(z(3, 1), z(9, 3));
        assert_eq!(z(3, 1).lift(12).unwrap(), z(12, 4));
        assert_eq!(&z(3, 1) * &z(4, 1), z(12, 7));
        assert_eq!(&z(2, 1) + &Cyclotomic::one(), Cyclotomic::zero());
    }

    #[test]
    fn inverse_and_trace() {
        let a = &z(7, 1) + &Cyclotomic::from_int(2);
        let b = a.inverse().unwrap();
        assert_eq!(&a * &b, Cyclotomic::one());
        assert_eq!(z(5, 1).trace(), int(-1));
        assert_eq!(Cyclotomic::rational_in(int(3), 5).trace(), int(12));
    }
}
