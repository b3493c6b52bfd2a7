//! The cyclotomic field `Q(zeta_m)`, elements stored in the power basis
//! `1, zeta, ..., zeta^{phi(m)-1}` reduced modulo the m-th cyclotomic
//! polynomial.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    assert!(m >= 1);
    // x^m - 1 divided by Phi_d for every proper divisor d of m
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = int_div_exact(&num, &phi_d);
        }
    }
    let out = Arc::new(num);
    cache.lock().unwrap().insert(m, out.clone());
    out
}

fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b is monic
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|x| x.is_zero()));
    q
}

/// Euler's totient, equal to the degree of the cyclotomic polynomial.
pub fn totient(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclo {
    m: u32,
    coeffs: Vec<BigRational>,
}

fn trim_rat(v: &mut Vec<BigRational>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn rat_poly_rem(a: &[BigRational], phi: &[BigInt]) -> Vec<BigRational> {
    let mut r: Vec<BigRational> = a.to_vec();
    let d = phi.len() - 1;
    while r.len() > d {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let base = r.len() - d;
        for (j, pj) in phi.iter().enumerate().take(d) {
            r[base + j] -= &top * BigRational::from_integer(pj.clone());
        }
    }
    trim_rat(&mut r);
    r
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_rat(&mut out);
    out
}

fn rat_poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r: Vec<BigRational> = a.to_vec();
    trim_rat(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let c = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        r.pop();
        trim_rat(&mut r);
    }
    trim_rat(&mut q);
    (q, r)
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim_rat(&mut out);
    out
}

impl Cyclo {
    pub fn from_coeffs(m: u32, coeffs: Vec<BigRational>) -> Cyclo {
        let phi = cyclotomic_polynomial(m);
        Cyclo {
            m,
            coeffs: rat_poly_rem(&coeffs, &phi),
        }
    }

    pub fn constant(m: u32, c: BigRational) -> Cyclo {
        Cyclo::from_coeffs(m, vec![c])
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(m: u32, k: i64) -> Cyclo {
        let e = k.rem_euclid(m as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        Cyclo::from_coeffs(m, v)
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check(&self, o: &Cyclo) {
        assert_eq!(self.m, o.m, "scalars from different cyclotomic fields");
    }

    pub fn add(&self, o: &Cyclo) -> Cyclo {
        self.check(o);
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self
                .coeffs
                .get(i)
                .cloned()
                .unwrap_or_else(BigRational::zero);
            let b = o.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            v.push(a + b);
        }
        trim_rat(&mut v);
        Cyclo {
            m: self.m,
            coeffs: v,
        }
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, o: &Cyclo) -> Cyclo {
        self.check(o);
        let p = rat_poly_mul(&self.coeffs, &o.coeffs);
        Cyclo::from_coeffs(self.m, p)
    }

    /// Inverse by the extended Euclidean algorithm against the cyclotomic
    /// polynomial, which is irreducible over the rationals.
    pub fn inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.m)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // invariant: s * self == r (mod phi)
        let (mut r0, mut r1) = (phi, self.coeffs.clone());
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
            (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = rat_poly_divrem(&r0, &r1);
            let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant
        let c = r0[0].recip();
        let s: Vec<BigRational> = s0.into_iter().map(|x| x * &c).collect();
        Some(Cyclo::from_coeffs(self.m, s))
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        let nonzero: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (idx, (k, c)) in nonzero.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{k}"),
            };
            if mono.is_empty() {
                s.push_str(&super::poly::fmt_rational(&abs));
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", super::poly::fmt_rational(&abs), mono));
            }
        }
        if nonzero.len() > 1 {
            format!("({s})")
        } else {
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(7).len(), 7);
    }

    #[test]
    fn zeta_cubed_is_one() {
        let z = Cyclo::zeta_pow(3, 1);
        let z2 = Cyclo::zeta_pow(3, 2);
        assert_eq!(z.mul(&z2), Cyclo::constant(3, BigRational::one()));
    }

    #[test]
    fn inverse_round_trip() {
        let m = 5;
        let a = Cyclo::from_coeffs(
            m,
            vec![
                BigRational::from_integer(2.into()),
                BigRational::from_integer((-1).into()),
                BigRational::new(1.into(), 3.into()),
            ],
        );
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), Cyclo::constant(m, BigRational::one()));
    }

    #[test]
    fn totients() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(7), 6);
    }
}
