//! Prime-power fields via a primitive modulus and exp/log tables.

use crate::{Error, Result};

/// `F_{p^e}`. Elements are encoded as integers whose base-`p` digits are the
/// coefficients of a polynomial in the primitive root `ω`, lowest first.
#[derive(Clone, Debug)]
pub struct GF {
    p: u32,
    e: u32,
    size: u32,
    /// Monic modulus, `modulus[i]` the coefficient of `t^i`, length `e + 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn digits(mut c: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(c % p);
        c /= p;
    }
    out
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Multiplies the encoded element by `t` modulo `modulus`.
fn times_t(c: u32, p: u32, modulus: &[u32]) -> u32 {
    let e = modulus.len() - 1;
    let mut d = digits(c, p, e as u32);
    let top = d[e - 1];
    d.rotate_right(1);
    d[0] = 0;
    for i in 0..e {
        d[i] = (d[i] + p * p - top * modulus[i] % p) % p;
    }
    encode(&d, p)
}

impl GF {
    /// Builds `F_{p^e}` with the least primitive modulus, candidates ordered
    /// by the integer whose base-`p` digits are the lower coefficients.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if e == 0 || p < 2 {
            return Err(Error::InvalidArgument(format!("bad field parameters p={p} e={e}")));
        }
        let size = p.checked_pow(e).filter(|s| *s <= 1 << 22).ok_or_else(|| {
            Error::Unsupported(format!("field of order {p}^{e} is too large"))
        })?;
        let order = size - 1;
        for low in 0..size {
            let mut modulus = digits(low, p, e);
            modulus.push(1);
            if modulus[0] == 0 {
                continue;
            }
            let mut exp = Vec::with_capacity(order as usize);
            let mut log = vec![u32::MAX; size as usize];
            let mut cur = 1u32;
            let mut ok = true;
            for i in 0..order {
                if log[cur as usize] != u32::MAX {
                    ok = false;
                    break;
                }
                log[cur as usize] = i;
                exp.push(cur);
                cur = times_t(cur, p, &modulus);
            }
            if ok && cur == 1 {
                return Ok(Self { p, e, size, modulus, exp, log });
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// `ω^k`.
    pub fn omega_pow(&self, k: u64) -> u32 {
        self.exp[(k % (self.size as u64 - 1)) as usize]
    }

    /// Discrete log base `ω`; `None` at zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.size as u64 - 1);
        self.exp[k as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let order = self.size - 1;
        Some(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let order = self.size as u64 - 1;
        self.exp[((self.log[a as usize] as u64 * (k % order)) % order) as usize]
    }

    /// Whether `a` lies in the subfield of order `sub`.
    pub fn in_subfield(&self, a: u32, sub: u64) -> bool {
        self.pow(a, sub) == a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_and_f9() {
        let f = GF::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let w = f.omega_pow(1);
        assert_eq!(f.mul(w, f.mul(w, w)), 1);
        assert_eq!(f.add(f.add(1, w), f.mul(w, w)), 0);
        let g = GF::new(3, 2).unwrap();
        for a in 1..9 {
            assert_eq!(g.mul(a, g.inv(a).unwrap()), 1);
            assert_eq!(g.add(a, g.neg(a)), 0);
        }
        assert_eq!(g.pow(g.omega_pow(1), 8), 1);
        assert_ne!(g.pow(g.omega_pow(1), 4), 1);
    }

    #[test]
    fn distributive() {
        let f = GF::new(3, 3).unwrap();
        for a in 0..27 {
            for b in 0..27 {
                for c in [1, 5, 13, 26] {
                    assert_eq!(f.mul(c, f.add(a, b)), f.add(f.mul(c, a), f.mul(c, b)));
                }
            }
        }
    }
}
