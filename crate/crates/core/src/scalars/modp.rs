//! Reduction of exact scalars to a large prime field.
//!
//! A ring homomorphism into `F_p` can only lower the rank of a matrix, so
//! ranks computed after specialization are lower bounds for the exact rank
//! and agree with it away from a proper Zariski-closed set of parameter
//! values. Used by the growth estimator, where the exact field is too slow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FieldMode, Scalar, ScalarView};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    pub fn from_bigint(&self, x: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((x % &p) + &p) % &p;
        r.to_u64().unwrap()
    }

    pub fn from_rational(&self, x: &BigRational) -> Option<u64> {
        let n = self.from_bigint(x.numer());
        let d = self.from_bigint(x.denom());
        self.inv(d).map(|di| self.mul(n, di))
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let f = PrimeField { p: n };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = f.pow(a % n, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest prime below 2^62 congruent to 1 modulo `m`.
pub fn prime_one_mod(m: u64) -> u64 {
    let top = 1u64 << 62;
    let mut k = (top - 1) / m;
    loop {
        let cand = k * m + 1;
        if cand < top && is_prime_u64(cand) {
            return cand;
        }
        k -= 1;
    }
}

fn distinct_prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// A homomorphism from the ground field (restricted to elements whose
/// denominators do not vanish at the chosen point) into `F_p`.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub field: PrimeField,
    /// Images of `q1..qr`, or of `zeta` in root-of-unity mode.
    pub params: Vec<u64>,
}

impl Specialization {
    pub fn new(mode: FieldMode, seed: u64) -> Specialization {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed);
        match mode {
            FieldMode::Generic { r } => {
                let field = PrimeField {
                    p: prime_one_mod(2),
                };
                let params = (0..r).map(|_| rng.gen_range(2..field.p - 1)).collect();
                Specialization { field, params }
            }
            FieldMode::RootOfUnity { m } => {
                let field = PrimeField {
                    p: prime_one_mod(m as u64),
                };
                let primes = distinct_prime_factors(m as u64);
                let zeta = loop {
                    let g = rng.gen_range(2..field.p - 1);
                    let w = field.pow(g, (field.p - 1) / m as u64);
                    if primes.iter().all(|&l| field.pow(w, m as u64 / l) != 1) {
                        break w;
                    }
                };
                Specialization {
                    field,
                    params: vec![zeta],
                }
            }
        }
    }

    /// Image of `q_power(e)`.
    pub fn q_power(&self, e: &[i64]) -> u64 {
        let mut acc = 1;
        for (k, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let base = if self.params.len() == 1 {
                self.params[0]
            } else {
                self.params[k]
            };
            let v = if x > 0 {
                self.field.pow(base, x as u64)
            } else {
                self.field.pow(self.field.inv(base).unwrap(), (-x) as u64)
            };
            acc = self.field.mul(acc, v);
        }
        acc
    }

    fn eval_poly(&self, p: &super::Poly) -> Option<u64> {
        let f = self.field;
        let mut acc = 0u64;
        for (e, c) in p.terms() {
            let mut t = f.from_rational(c)?;
            for (k, &x) in e.iter().enumerate() {
                t = f.mul(t, f.pow(self.params[k], x as u64));
            }
            acc = f.add(acc, t);
        }
        Some(acc)
    }

    /// Image of a scalar; `None` if a denominator vanishes.
    pub fn eval(&self, s: &Scalar) -> Option<u64> {
        let f = self.field;
        match s.repr_kind() {
            ScalarView::Rational(r) => f.from_rational(r),
            ScalarView::Function(rf) => {
                let n = self.eval_poly(rf.numer())?;
                let d = self.eval_poly(rf.denom())?;
                f.inv(d).map(|di| f.mul(n, di))
            }
            ScalarView::Cyclotomic(c) => {
                let z = self.params[0];
                let mut acc = 0u64;
                let mut zp = 1u64;
                for coef in c.coeffs() {
                    if !coef.is_zero() {
                        acc = f.add(acc, f.mul(f.from_rational(coef)?, zp));
                    }
                    zp = f.mul(zp, z);
                }
                Some(acc)
            }
        }
    }
}
