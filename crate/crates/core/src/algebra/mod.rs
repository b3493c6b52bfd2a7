//! The twisted group algebra `F*A` with the normal-ordering cocycle.
//!
//! Monomials are `x^a = x_1^{a_1} ... x_n^{a_n}` and multiply as
//! `x^a x^b = lambda(a, b) x^{a+b}` with
//! `lambda(a, b) = q_power(sum_{i>j} E_ij a_i b_j)`.

pub mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{center_lattice, ExponentSystem, Sublattice};
use crate::scalars::Scalar;

pub type Context = Arc<ExponentSystem>;

/// `lambda(a, b)`.
pub fn cocycle(sys: &ExponentSystem, a: &[i64], b: &[i64]) -> Scalar {
    sys.q_power(&sys.cocycle_exponent(a, b))
}

/// The scalar `c` with `x^a x^b = c x^b x^a`.
pub fn commutation_scalar(sys: &ExponentSystem, a: &[i64], b: &[i64]) -> Scalar {
    sys.q_power(&sys.pairing_unchecked(a, b))
}

/// A finite sum `sum_a mu_a x^a` with nonzero coefficients.
#[derive(Clone)]
pub struct AlgebraElement {
    ctx: Context,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &o.ctx) || *self.ctx == *o.ctx) && self.terms == o.terms
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn add_exp(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl AlgebraElement {
    pub fn zero(ctx: &Context) -> Self {
        AlgebraElement {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Context) -> Self {
        Self::scalar(ctx, Scalar::one())
    }

    pub fn scalar(ctx: &Context, c: Scalar) -> Self {
        Self::monomial(ctx, vec![0; ctx.n()], c)
    }

    pub fn monomial(ctx: &Context, a: Vec<i64>, c: Scalar) -> Self {
        assert_eq!(a.len(), ctx.n(), "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(a, c);
        }
        AlgebraElement {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// `x^a` with coefficient one.
    pub fn x(ctx: &Context, a: &[i64]) -> Self {
        Self::monomial(ctx, a.to_vec(), Scalar::one())
    }

    /// The generator `x_{i+1}` raised to `k`.
    pub fn generator(ctx: &Context, i: usize, k: i64) -> Self {
        let mut a = vec![0; ctx.n()];
        a[i] = k;
        Self::x(ctx, &a)
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, Scalar)>>(ctx: &Context, it: I) -> Self {
        let mut out = Self::zero(ctx);
        for (a, c) in it {
            out.add_term(a, c);
        }
        out
    }

    pub fn add_term(&mut self, a: Vec<i64>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(a) {
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

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn system(&self) -> &ExponentSystem {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Vec<i64>, Scalar> {
        self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }

    pub fn coeff(&self, a: &[i64]) -> Scalar {
        self.terms.get(a).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant coefficient if the support is contained in `{0}`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (a, c) = self.terms.iter().next().unwrap();
                a.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// `(mu, a)` for a single-term element.
    pub fn as_monomial(&self) -> Option<(Scalar, &Vec<i64>)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (a, c) = self.terms.iter().next().unwrap();
        Some((c.clone(), a))
    }

    fn same_ctx(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &o.ctx) || *self.ctx == *o.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert!(self.same_ctx(o).is_ok());
        let mut out = self.clone();
        for (a, c) in &o.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert!(self.same_ctx(o).is_ok());
        let mut out = self.clone();
        for (a, c) in &o.terms {
            out.add_term(a.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ctx);
        }
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.mul(s)))
                .collect(),
        }
    }

    pub fn multiply(&self, o: &Self) -> Result<Self> {
        self.same_ctx(o)?;
        Ok(self.mul(o))
    }

    /// Product; panics (in debug builds) on mismatched contexts.
    pub fn mul(&self, o: &Self) -> Self {
        debug_assert!(self.same_ctx(o).is_ok());
        let sys = &*self.ctx;
        let mut out = Self::zero(&self.ctx);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e = sys.cocycle_exponent(a, b);
                let mut c = x.mul(y);
                if !sys.mode().is_trivial_exponent(&e) {
                    c = c.mul(&sys.q_power(&e));
                }
                out.add_term(add_exp(a, b), c);
            }
        }
        out
    }

    /// `x^a * self`, cheaper than a general product.
    pub fn left_mul_monomial(&self, a: &[i64], mu: &Scalar) -> Self {
        let sys = &*self.ctx;
        Self::from_terms(
            &self.ctx,
            self.terms.iter().map(|(b, y)| {
                let e = sys.cocycle_exponent(a, b);
                (add_exp(a, b), y.mul(mu).mul(&sys.q_power(&e)))
            }),
        )
    }

    /// `self * x^b`.
    pub fn right_mul_monomial(&self, b: &[i64], mu: &Scalar) -> Self {
        let sys = &*self.ctx;
        Self::from_terms(
            &self.ctx,
            self.terms.iter().map(|(a, y)| {
                let e = sys.cocycle_exponent(a, b);
                (add_exp(a, b), y.mul(mu).mul(&sys.q_power(&e)))
            }),
        )
    }

    /// Nonnegative powers of any element, all powers of units.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(&self.ctx);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Units are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn inverse(&self) -> Result<Self> {
        let Some((mu, a)) = self.as_monomial() else {
            return Err(if self.is_zero() {
                Error::DivisionByZero
            } else {
                Error::NotUnitary(format!("{} is not a unit", self.render()))
            });
        };
        // x^a x^{-a} = lambda(a, -a)
        let neg: Vec<i64> = a.iter().map(|x| -x).collect();
        let lam = cocycle(&self.ctx, a, &neg);
        let c = mu.mul(&lam).inv()?;
        Ok(Self::monomial(&self.ctx, neg, c))
    }

    pub fn is_central(&self) -> bool {
        let center = center_lattice(&self.ctx);
        self.terms.keys().all(|a| center.contains(a))
    }

    pub fn in_subalgebra(&self, b: &Sublattice) -> bool {
        self.terms.keys().all(|a| b.contains(a))
    }

    pub fn render(&self) -> String {
        text::render(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldMode;

    fn plane() -> Context {
        Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }))
    }

    #[test]
    fn cocycle_examples() {
        let c = plane();
        assert!(cocycle(&c, &[1, 0], &[0, 1]).is_one());
        let q = c.mode().parameter(1).unwrap();
        assert_eq!(cocycle(&c, &[0, 1], &[1, 0]), q.inv().unwrap());
        assert!(cocycle(&c, &[3, -2], &[0, 0]).is_one());
    }

    #[test]
    fn multiply_examples() {
        let c = plane();
        let q = c.mode().parameter(1).unwrap();
        let x1 = AlgebraElement::generator(&c, 0, 1);
        let x2 = AlgebraElement::generator(&c, 1, 1);
        assert_eq!(x1.mul(&x2), AlgebraElement::x(&c, &[1, 1]));
        assert_eq!(
            x2.mul(&x1),
            AlgebraElement::monomial(&c, vec![1, 1], q.inv().unwrap())
        );
        let a = x1.add(&x2.scale(&q));
        assert_eq!(a.mul(&AlgebraElement::one(&c)), a);
    }

    #[test]
    fn commutation_examples() {
        let c = plane();
        assert!(commutation_scalar(&c, &[2, 1], &[2, 1]).is_one());
        assert_eq!(
            commutation_scalar(&c, &[1, 0], &[0, 1]),
            c.mode().parameter(1).unwrap()
        );
        let r = Arc::new(ExponentSystem::quantum_plane(FieldMode::RootOfUnity {
            m: 3,
        }));
        assert!(commutation_scalar(&r, &[3, 0], &[0, 1]).is_one());
    }

    #[test]
    fn central_unit_subalgebra() {
        let c = plane();
        assert!(AlgebraElement::scalar(&c, Scalar::from_int(4)).is_central());
        assert!(!AlgebraElement::generator(&c, 0, 1).is_central());
        let r = Arc::new(ExponentSystem::quantum_plane(FieldMode::RootOfUnity {
            m: 3,
        }));
        let a = AlgebraElement::x(&r, &[3, 0]).add(&AlgebraElement::x(&r, &[0, 3]));
        assert!(a.is_central());

        assert!(AlgebraElement::monomial(&c, vec![2, -1], Scalar::from_int(5)).is_unit());
        assert!(!AlgebraElement::one(&c)
            .add(&AlgebraElement::generator(&c, 0, 1))
            .is_unit());
        assert!(!AlgebraElement::zero(&c).is_unit());

        let b1 = Sublattice::coordinate(2, &[0]);
        assert!(AlgebraElement::scalar(&c, Scalar::from_int(2)).in_subalgebra(&b1));
        assert!(!AlgebraElement::generator(&c, 1, 1).in_subalgebra(&b1));
        let b = Sublattice::from_generators(2, &[vec![1, 2]]);
        assert!(AlgebraElement::x(&c, &[2, 4]).in_subalgebra(&b));
    }

    #[test]
    fn unit_inverse() {
        let c = plane();
        let u = AlgebraElement::monomial(&c, vec![2, -3], Scalar::from_int(7));
        assert_eq!(u.mul(&u.inverse().unwrap()), AlgebraElement::one(&c));
        assert_eq!(u.inverse().unwrap().mul(&u), AlgebraElement::one(&c));
    }
}
