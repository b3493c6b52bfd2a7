//! Sparse multivariate polynomials with rational coefficients.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so the same
//! monomial has one representation regardless of how many parameters the
//! surrounding context declares. Under that convention the derived `Vec`
//! ordering is the lexicographic monomial order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Monomial = Vec<u32>;

fn trim(mut e: Monomial) -> Monomial {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exp_at(e: &Monomial, v: usize) -> u32 {
    e.get(v).copied().unwrap_or(0)
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        out.push(exp_at(a, i) + exp_at(b, i));
    }
    out
}

fn mono_divides(a: &Monomial, b: &Monomial) -> bool {
    a.len() <= b.len() && a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn mono_div(b: &Monomial, a: &Monomial) -> Monomial {
    let mut out: Monomial = b.clone();
    for (i, x) in a.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    /// The monomial `c * prod v_i^{e_i}`.
    pub fn monomial(e: Monomial, c: BigRational) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(trim(e), c);
        }
        p
    }

    /// The variable with index `v` (0-based).
    pub fn var(v: usize) -> Self {
        let mut e = vec![0; v + 1];
        e[v] = 1;
        Poly::monomial(e, BigRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in it {
            p.add_term(trim(e), c);
        }
        p
    }

    fn add_term(&mut self, e: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.is_empty() && c.is_one())
                .unwrap_or(false)
    }

    /// Constant term if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.is_empty() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Number of variable slots in use.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| exp_at(e, v)).max().unwrap_or(0)
    }

    /// Minimal exponent of each variable across all terms.
    pub fn monomial_content(&self) -> Monomial {
        let nv = self.nvars();
        let mut out = vec![u32::MAX; nv];
        for e in self.terms.keys() {
            for (i, o) in out.iter_mut().enumerate() {
                *o = (*o).min(exp_at(e, i));
            }
        }
        if self.is_zero() {
            return Vec::new();
        }
        trim(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(mono_mul(ea, eb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (mono_mul(e, m), c.clone()))
                .collect(),
        }
    }

    /// Divides every exponent vector by `m`. Caller guarantees divisibility.
    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (mono_div(e, m), c.clone()))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (ld, lc) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((le, lcoef)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if !mono_divides(&ld, &le) {
                return None;
            }
            let m = mono_div(&le, &ld);
            let c = lcoef / &lc;
            let t = Poly::monomial(m.clone(), c.clone());
            rem = rem.sub(&d.mul(&t));
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Coefficients with respect to variable `v`, as polynomials in the rest.
    pub fn coeffs_in(&self, v: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = exp_at(e, v);
            let mut rest = e.clone();
            if v < rest.len() {
                rest[v] = 0;
            }
            out.entry(k).or_default().add_term(trim(rest), c.clone());
        }
        out
    }

    fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|e| exp_at(e, v) > 0)
    }

    /// Pseudo-remainder of `self` by `d` with respect to variable `v`.
    fn prem(&self, d: &Poly, v: usize) -> Poly {
        let dd = d.degree_in(v);
        let dc = d.coeffs_in(v);
        let lc = dc.get(&dd).cloned().unwrap_or_default();
        let mut r = self.clone();
        loop {
            if r.is_zero() {
                return r;
            }
            let rd = r.degree_in(v);
            if rd < dd {
                return r;
            }
            let rc = r.coeffs_in(v);
            let lr = rc.get(&rd).cloned().unwrap_or_default();
            let mut e = vec![0; v + 1];
            e[v] = rd - dd;
            let shift = trim(e);
            r = r.mul(&lc).sub(&d.mul(&lr).mul_monomial(&shift));
        }
    }

    /// Content with respect to `v`: gcd of the coefficient polynomials.
    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v).values() {
            g = gcd(&g, c);
            if g.as_constant().is_some() && !g.is_zero() {
                return Poly::one();
            }
        }
        g
    }

    /// Evaluates at a point given as a closure from variable index to value.
    pub fn eval_with<T, F>(&self, zero: T, mut f: F) -> T
    where
        T: Clone + std::ops::Add<Output = T>,
        F: FnMut(&Monomial, &BigRational) -> T,
    {
        let mut acc = zero;
        for (e, c) in &self.terms {
            acc = acc + f(e, c);
        }
        acc
    }

    /// Multiplies by the lcm of coefficient denominators and divides by the
    /// gcd of numerators, yielding integer coefficients with content one.
    pub fn primitive_integer(&self) -> (BigRational, Vec<(Monomial, BigInt)>) {
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut g = BigInt::zero();
        let ints: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let v = c.numer() * (&den / c.denom());
                g = num_integer::gcd(g.clone(), v.clone());
                (e.clone(), v)
            })
            .collect();
        if g.is_zero() {
            return (BigRational::one(), ints);
        }
        let out = ints.into_iter().map(|(e, v)| (e, v / &g)).collect();
        (BigRational::new(g, den), out)
    }
}

/// Greatest common divisor, normalized to be monic (leading coefficient 1).
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    // Monomial contents split off first: cheap and common.
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mlen = ma.len().min(mb.len());
    let mg: Monomial = trim((0..mlen).map(|i| ma[i].min(mb[i])).collect());
    let a1 = a.div_monomial(&ma);
    let b1 = b.div_monomial(&mb);
    if a1.as_constant().is_some() || b1.as_constant().is_some() {
        return Poly::monomial(mg, BigRational::one());
    }
    let core = gcd_nomono(&a1, &b1);
    core.mul_monomial(&mg).monic()
}

fn gcd_nomono(a: &Poly, b: &Poly) -> Poly {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    let nv = a.nvars().max(b.nvars());
    // main variable: highest index used by either
    let v = (0..nv)
        .rev()
        .find(|&v| a.uses_var(v) || b.uses_var(v))
        .unwrap();
    if !a.uses_var(v) {
        return gcd(a, &b.content_in(v));
    }
    if !b.uses_var(v) {
        return gcd(&a.content_in(v), b);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let gc = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = p.prem(&q, v);
        if r.is_zero() {
            break;
        }
        if !r.uses_var(v) {
            q = Poly::one();
            break;
        }
        let rc = r.content_in(v);
        p = q;
        q = r.div_exact(&rc).expect("content divides");
    }
    let qc = q.content_in(v);
    let qp = if q.as_constant().is_some() {
        Poly::one()
    } else {
        q.div_exact(&qc).expect("content divides")
    };
    gc.mul(&qp).monic()
}

/// Least common multiple (monic).
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    a.mul(b).div_exact(&g).expect("gcd divides").monic()
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl Poly {
    /// Renders with the given variable names (`names[i]` for variable `i`).
    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.is_empty() {
                factors.push(fmt_rational(&abs));
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(names(i)),
                    _ => factors.push(format!("{}^{}", names(i), k)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|i| format!("q{}", i + 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(i: usize) -> Poly {
        Poly::var(i)
    }

    fn c(n: i64) -> Poly {
        Poly::constant(BigRational::from_integer(n.into()))
    }

    #[test]
    fn univariate_gcd() {
        // (q-1)(q+2) and (q-1)(q-3)
        let a = q(0).sub(&c(1)).mul(&q(0).add(&c(2)));
        let b = q(0).sub(&c(1)).mul(&q(0).sub(&c(3)));
        assert_eq!(gcd(&a, &b), q(0).sub(&c(1)));
    }

    #[test]
    fn bivariate_gcd() {
        let f = q(0).mul(&q(1)).sub(&c(1)); // q1 q2 - 1
        let g1 = q(0).add(&q(1));
        let g2 = q(0).sub(&q(1)).add(&c(5));
        let a = f.mul(&g1).mul(&q(0));
        let b = f.mul(&g2).mul(&q(0)).mul(&q(1));
        assert_eq!(gcd(&a, &b), f.mul(&q(0)).monic());
    }

    #[test]
    fn coprime_is_one() {
        let a = q(0).add(&c(1));
        let b = q(1).add(&c(1));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division() {
        let a = q(0).add(&q(1));
        let b = q(0).sub(&q(1));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.add(&c(1)).div_exact(&a), None);
    }

    #[test]
    fn trimmed_exponents_compare() {
        let a = Poly::monomial(vec![1, 0, 0], BigRational::one());
        assert_eq!(a, q(0));
    }
}
