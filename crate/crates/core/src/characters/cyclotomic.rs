//! Exact arithmetic in `Z[ζ_e]`, elements stored as integer vectors reduced
//! modulo the `e`-th cyclotomic polynomial.

use std::fmt;

use crate::arith;

/// An element of `Z[ζ_e]`: `Σ coeffs[i] ζ^i` with `i < φ(e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicInt {
    pub conductor: u32,
    pub coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coeffs[0])
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if wrote {
                "+"
            } else {
                ""
            };
            let mag = c.unsigned_abs();
            let term = match (i, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "z".to_string(),
                (1, _) => format!("{mag}z"),
                (_, 1) => format!("z^{i}"),
                _ => format!("{mag}z^{i}"),
            };
            write!(f, "{sign}{term}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The ring `Z[ζ_e]` with `ζ^k` precomputed for `k < e`.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    e: u32,
    phi: usize,
    powers: Vec<Vec<i64>>,
}

/// Integer polynomial coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

impl CyclotomicRing {
    pub fn new(e: u32) -> Self {
        assert!(e >= 1);
        let phi_poly = cyclotomic_polynomial(e);
        let phi = arith::totient(e as u64) as usize;
        debug_assert_eq!(phi_poly.len(), phi + 1);
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x and eliminate x^phi
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..phi {
                cur[i] -= top * phi_poly[i];
            }
        }
        Self { e, phi, powers }
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn integer(&self, n: i64) -> CyclotomicInt {
        let mut coeffs = vec![0; self.phi];
        coeffs[0] = n;
        CyclotomicInt {
            conductor: self.e,
            coeffs,
        }
    }

    pub fn zero(&self) -> CyclotomicInt {
        self.integer(0)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta(&self, k: i64) -> CyclotomicInt {
        let k = k.rem_euclid(self.e as i64) as usize;
        CyclotomicInt {
            conductor: self.e,
            coeffs: self.powers[k].clone(),
        }
    }

    /// `Σ_k m[k] ζ^k` for `k < e`.
    pub fn from_multiplicities(&self, m: &[i64]) -> CyclotomicInt {
        let mut coeffs = vec![0i64; self.phi];
        for (k, &mk) in m.iter().enumerate() {
            if mk != 0 {
                for (c, &b) in coeffs.iter_mut().zip(&self.powers[k % self.e as usize]) {
                    *c += mk * b;
                }
            }
        }
        CyclotomicInt {
            conductor: self.e,
            coeffs,
        }
    }

    pub fn mul(&self, a: &CyclotomicInt, b: &CyclotomicInt) -> CyclotomicInt {
        let mut prod = vec![0i64; 2 * self.phi - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x != 0 {
                for (j, &y) in b.coeffs.iter().enumerate() {
                    prod[i + j] += x * y;
                }
            }
        }
        // x^e = 1 modulo Φ_e
        self.from_multiplicities(&prod)
    }

    /// Complex conjugation, `ζ -> ζ^(e-1)`.
    pub fn conj(&self, a: &CyclotomicInt) -> CyclotomicInt {
        let e = self.e as usize;
        let mut m = vec![0i64; e];
        for (i, &c) in a.coeffs.iter().enumerate() {
            m[(e - i) % e] += c;
        }
        self.from_multiplicities(&m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in [2u32, 3, 4, 6, 8, 9, 12, 25] {
            let r = CyclotomicRing::new(e);
            let sum = (0..e as i64).fold(r.zero(), |acc, k| acc.add(&r.zeta(k)));
            assert!(sum.is_zero(), "e = {e}");
            assert_eq!(r.zeta(e as i64), r.integer(1));
        }
    }

    #[test]
    fn conjugation_and_norm() {
        let r = CyclotomicRing::new(3);
        let w = r.zeta(1);
        assert_eq!(r.conj(&w), r.zeta(2));
        assert_eq!(r.mul(&w, &r.conj(&w)), r.integer(1));
        // |1 + ζ_3|^2 = 1
        let x = r.integer(1).add(&w);
        assert_eq!(r.mul(&x, &r.conj(&x)).as_integer(), Some(1));
        let r8 = CyclotomicRing::new(8);
        let s = r8.zeta(1).add(&r8.zeta(7));
        assert_eq!(r8.mul(&s, &s).as_integer(), Some(2));
    }

    #[test]
    fn display() {
        let r = CyclotomicRing::new(4);
        assert_eq!(r.integer(-2).to_string(), "-2");
        assert_eq!(r.zeta(3).to_string(), "-z");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(r.integer(1).add(&r.zeta(1).scale(2)).to_string(), "1+2z");
    }
}
