//! Univariate polynomials over a field and Smith normal form over `C[x]`.

use crate::scalars::Field;

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<C: Field> {
    c: Vec<C>,
}

impl<C: Field> UniPoly<C> {
    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    pub fn new(mut c: Vec<C>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Unit of `C[x]`: a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.c.len() == 1
    }

    /// Unit of `C[x, 1/x]`: a nonzero monomial.
    pub fn is_laurent_unit(&self) -> bool {
        self.c.iter().filter(|x| !x.is_zero()).count() == 1
    }

    /// Removes the largest power of `x` dividing `self`.
    pub fn strip_x(&self) -> Self {
        let k = self.c.iter().take_while(|x| x.is_zero()).count();
        UniPoly {
            c: self.c[k..].to_vec(),
        }
    }

    pub fn leading(&self) -> Option<&C> {
        self.c.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            (0..n)
                .map(|i| match (self.c.get(i), o.c.get(i)) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => C::zero(),
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::new(self.c.iter().map(|x| x.mul(s)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d
            .leading()
            .expect("division by zero polynomial")
            .inv()
            .unwrap();
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![C::zero(); r.len() - dd];
        while r.len() > dd {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = r.len() - dd;
            let c = top.mul(&dl);
            for j in 0..dd {
                r[k + j] = r[k + j].sub(&c.mul(&d.c[j]));
            }
            q[k] = c;
        }
        (Self::new(q), Self::new(r))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }
}

/// Monic gcd.
pub fn gcd<C: Field>(a: &UniPoly<C>, b: &UniPoly<C>) -> UniPoly<C> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.divrem(&b).1;
        a = b;
        b = r;
    }
    a.monic()
}

/// Determinant by cofactor expansion along the first row.
pub fn det<C: Field>(m: &[Vec<UniPoly<C>>]) -> UniPoly<C> {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = UniPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly<C>>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Diagonal of the Smith normal form over `C[x]` (monic entries, trailing
/// zeros included up to `min(rows, cols)`).
pub fn invariant_factors<C: Field>(m: &[Vec<UniPoly<C>>]) -> Vec<UniPoly<C>> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut a: Vec<Vec<UniPoly<C>>> = m.to_vec();
    let k = rows.min(cols);
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if let Some(d) = a[i][j].degree() {
                        if best.map(|b| d < b.2).unwrap_or(true) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                return (0..k)
                    .map(|i| {
                        if i < t {
                            a[i][i].monic()
                        } else {
                            UniPoly::zero()
                        }
                    })
                    .collect();
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].divrem(&a[t][t]).0;
                    for j in t..cols {
                        let v = a[i][j].sub(&q.mul(&a[t][j]));
                        a[i][j] = v;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].divrem(&a[t][t]).0;
                    for i in t..rows {
                        let v = a[i][j].sub(&a[i][t].mul(&q));
                        a[i][j] = v;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            let piv = a[t][t].clone();
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].divrem(&piv).1.is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[t][j].add(&a[i][j]);
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
    }
    (0..k).map(|i| a[i][i].monic()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    type P = UniPoly<Scalar>;

    fn p(c: &[i64]) -> P {
        P::new(c.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]); // x + 1
        assert_eq!(a.gcd(&b), b);
        let (q, r) = a.divrem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[2, 1]).gcd(&p(&[3, 1])), P::one());
    }

    #[test]
    fn smith_over_polynomials() {
        // diag(x - 1, x - 2) has invariant factors 1, (x-1)(x-2)
        let m = vec![vec![p(&[-1, 1]), P::zero()], vec![P::zero(), p(&[-2, 1])]];
        let f = invariant_factors(&m);
        assert!(f[0].is_unit());
        assert_eq!(f[1], p(&[-1, 1]).mul(&p(&[-2, 1])));
        let m = vec![vec![p(&[-1, 1]), p(&[1, 1])]];
        assert!(invariant_factors(&m)[0].is_unit());
        let m = vec![vec![p(&[0, 0, 1]), p(&[0, 1])]];
        assert!(invariant_factors(&m)[0].is_laurent_unit());
        let m = vec![vec![p(&[1]), p(&[1])], vec![p(&[1]), p(&[1])]];
        let f = invariant_factors(&m);
        assert!(f[0].is_unit() && f[1].is_zero());
    }
}
