//! Commutative multivariate Laurent polynomials over a field.

use std::collections::BTreeMap;

use crate::scalars::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Laurent<C: Field> {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, C>,
}

impl<C: Field> Laurent<C> {
    pub fn zero(nvars: usize) -> Self {
        Laurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(e: Vec<i64>, c: C) -> Self {
        let nvars = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { nvars, terms }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Self::monomial(e, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, C)>>(nvars: usize, it: I) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: C) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Units of a Laurent ring are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<(&Vec<i64>, &C)> {
        self.terms.iter().next_back()
    }

    pub fn neg(&self) -> Self {
        Laurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x.mul(y));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Laurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &[i64], c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            let s: Vec<i64> = e.iter().zip(m).map(|(p, q)| p + q).collect();
            out.add_term(s, x.mul(c));
        }
        out
    }

    /// Applies `c_e -> c_e * w(e)` to every term.
    pub fn map_coeffs<F: Fn(&[i64], &C) -> C>(&self, f: F) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| (e.clone(), f(e, c))),
        )
    }

    /// Per-variable `(min, max)` exponents; `None` for zero.
    pub fn degree_box(&self) -> Option<Vec<(i64, i64)>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b: Vec<(i64, i64)> = first.iter().map(|&x| (x, x)).collect();
        for e in it {
            for (v, &x) in e.iter().enumerate() {
                b[v].0 = b[v].0.min(x);
                b[v].1 = b[v].1.max(x);
            }
        }
        Some(b)
    }

    /// `self / d` when the quotient is again a Laurent polynomial.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dl = d.leading()?;
        let (de, dc) = (dl.0.clone(), dl.1.clone());
        let dinv = dc.inv()?;
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        // degrees in each variable are additive, which bounds the quotient
        let sb = self.degree_box().unwrap();
        let db = d.degree_box().unwrap();
        let qbox: Vec<(i64, i64)> = sb
            .iter()
            .zip(&db)
            .map(|(s, t)| (s.0 - t.0, s.1 - t.1))
            .collect();
        if qbox.iter().any(|(lo, hi)| lo > hi) {
            return None;
        }
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((re, rc)) = r.leading() {
            let e: Vec<i64> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            if e.iter().zip(&qbox).any(|(x, (lo, hi))| x < lo || x > hi) {
                return None;
            }
            let c = rc.mul(&dinv);
            r = r.sub(&d.mul_monomial(&e, &c));
            q.add_term(e, c);
        }
        Some(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    type L = Laurent<Scalar>;

    fn s(i: i64) -> Scalar {
        Scalar::from_int(i)
    }

    #[test]
    fn exact_division() {
        let x = L::var(2, 0);
        let y = L::var(2, 1);
        let a = x.sub(&L::one(2));
        let b = x.add(&y.scale(&s(2))).add(&L::monomial(vec![-1, 3], s(5)));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert!(p.div_exact(&y.add(&L::one(2))).is_none());
        assert!(x.div_exact(&a).is_none());
        let m = L::monomial(vec![-2, 1], s(3));
        assert_eq!(p.mul(&m).div_exact(&m).unwrap(), p);
    }
}
