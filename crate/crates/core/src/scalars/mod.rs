//! Exact scalars for the ground field.
//!
//! Two families are supported: the rational function field `Q(q1, ..., qr)`
//! in independent parameters (generic mode) and the cyclotomic field
//! `Q(zeta_m)` (root-of-unity mode). Rational numbers are shared between the
//! two and always stored in the [`Repr::Rat`] variant, so every value has a
//! single canonical representation.

pub mod cyclo;
pub mod modp;
pub mod poly;
pub mod ratfunc;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use cyclo::Cyclo;
pub use poly::Poly;
pub use ratfunc::RatFunc;

/// Which ground field the multiparameters live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldMode {
    /// `Q(q1, ..., qr)` with algebraically independent `q_k`.
    Generic { r: usize },
    /// `Q(zeta)` with `zeta` a primitive m-th root of unity; one parameter.
    RootOfUnity { m: u32 },
}

impl FieldMode {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldMode::Generic { r } if r == 0 => {
                Err(Error::InvalidMode("generic mode needs r >= 1".into()))
            }
            FieldMode::RootOfUnity { m } if m < 2 => Err(Error::InvalidMode(format!(
                "root-of-unity mode needs m >= 2, got {m}"
            ))),
            _ => Ok(()),
        }
    }

    /// Number of base parameters `r`.
    pub fn params(&self) -> usize {
        match *self {
            FieldMode::Generic { r } => r,
            FieldMode::RootOfUnity { .. } => 1,
        }
    }

    pub fn modulus(&self) -> Option<u32> {
        match *self {
            FieldMode::Generic { .. } => None,
            FieldMode::RootOfUnity { m } => Some(m),
        }
    }

    /// `prod_k q_k^{e_k}` (generic) or `zeta^{e_1}` (root of unity).
    pub fn q_power(&self, e: &[i64]) -> Scalar {
        match *self {
            FieldMode::Generic { .. } => {
                if e.iter().all(|&x| x == 0) {
                    Scalar::one()
                } else {
                    Scalar::from_ratfunc(RatFunc::monomial(e, BigRational::one()))
                }
            }
            FieldMode::RootOfUnity { m } => {
                let k = e.first().copied().unwrap_or(0);
                Scalar::from_cyclo(Cyclo::zeta_pow(m, k))
            }
        }
    }

    /// True when `q_power(e)` equals one.
    pub fn is_trivial_exponent(&self, e: &[i64]) -> bool {
        match *self {
            FieldMode::Generic { .. } => e.iter().all(|&x| x == 0),
            FieldMode::RootOfUnity { m } => e.iter().all(|&x| x.rem_euclid(m as i64) == 0),
        }
    }

    /// The base parameter `q_k` (1-based) or `zeta`.
    pub fn parameter(&self, k: usize) -> Result<Scalar> {
        match *self {
            FieldMode::Generic { r } => {
                if k == 0 || k > r {
                    return Err(Error::Parse(format!("parameter q{k} out of range 1..={r}")));
                }
                let mut e = vec![0i64; k];
                e[k - 1] = 1;
                Ok(self.q_power(&e))
            }
            FieldMode::RootOfUnity { m } => Ok(Scalar::from_cyclo(Cyclo::zeta_pow(m, 1))),
        }
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Generic { r } => write!(f, "generic(r={r})"),
            FieldMode::RootOfUnity { m } => write!(f, "root_of_unity(m={m})"),
        }
    }
}

/// Minimal field interface used by the generic linear-algebra helpers.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_int(i: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Rat(BigRational),
    Func(RatFunc),
    Cyc(Cyclo),
}

/// An exact element of the ground field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[allow(clippy::should_implement_trait)]
impl Scalar {
    pub fn zero() -> Scalar {
        Scalar(Repr::Rat(BigRational::zero()))
    }

    pub fn one() -> Scalar {
        Scalar(Repr::Rat(BigRational::one()))
    }

    pub fn from_int(i: i64) -> Scalar {
        Scalar(Repr::Rat(BigRational::from_integer(i.into())))
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar(Repr::Rat(r))
    }

    pub fn from_fraction(n: i64, d: i64) -> Result<Scalar> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(Repr::Rat(BigRational::new(n.into(), d.into()))))
    }

    pub fn from_ratfunc(f: RatFunc) -> Scalar {
        match f.as_constant() {
            Some(c) => Scalar(Repr::Rat(c)),
            None => Scalar(Repr::Func(f)),
        }
    }

    pub fn from_cyclo(c: Cyclo) -> Scalar {
        match c.as_constant() {
            Some(x) => Scalar(Repr::Rat(x)),
            None => Scalar(Repr::Cyc(c)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        match &self.0 {
            Repr::Rat(r) => Some(RatFunc::from_poly(Poly::constant(r.clone()))),
            Repr::Func(f) => Some(f.clone()),
            Repr::Cyc(_) => None,
        }
    }

    pub fn as_cyclo(&self, m: u32) -> Option<Cyclo> {
        match &self.0 {
            Repr::Rat(r) => Some(Cyclo::constant(m, r.clone())),
            Repr::Cyc(c) if c.order() == m => Some(c.clone()),
            _ => None,
        }
    }

    /// True for negative rational numbers; used only for sign-aware printing.
    pub fn is_negative_rational(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_negative())
    }

    fn lift2(&self, o: &Scalar) -> Lifted {
        match (&self.0, &o.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Lifted::Rat(a.clone(), b.clone()),
            (Repr::Func(a), Repr::Func(b)) => Lifted::Func(a.clone(), b.clone()),
            (Repr::Func(a), Repr::Rat(b)) => {
                Lifted::Func(a.clone(), RatFunc::from_poly(Poly::constant(b.clone())))
            }
            (Repr::Rat(a), Repr::Func(b)) => {
                Lifted::Func(RatFunc::from_poly(Poly::constant(a.clone())), b.clone())
            }
            (Repr::Cyc(a), Repr::Cyc(b)) => Lifted::Cyc(a.clone(), b.clone()),
            (Repr::Cyc(a), Repr::Rat(b)) => {
                Lifted::Cyc(a.clone(), Cyclo::constant(a.order(), b.clone()))
            }
            (Repr::Rat(a), Repr::Cyc(b)) => {
                Lifted::Cyc(Cyclo::constant(b.order(), a.clone()), b.clone())
            }
            _ => panic!("arithmetic between scalars of different field modes"),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match self.lift2(o) {
            Lifted::Rat(a, b) => Scalar(Repr::Rat(a + b)),
            Lifted::Func(a, b) => Scalar::from_ratfunc(a.add(&b)),
            Lifted::Cyc(a, b) => Scalar::from_cyclo(a.add(&b)),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(a) => Scalar(Repr::Rat(-a.clone())),
            Repr::Func(a) => Scalar(Repr::Func(a.neg())),
            Repr::Cyc(a) => Scalar(Repr::Cyc(a.neg())),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        match self.lift2(o) {
            Lifted::Rat(a, b) => Scalar(Repr::Rat(a * b)),
            Lifted::Func(a, b) => Scalar::from_ratfunc(a.mul(&b)),
            Lifted::Cyc(a, b) => Scalar::from_cyclo(a.mul(&b)),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match &self.0 {
            Repr::Rat(a) if a.is_zero() => Err(Error::DivisionByZero),
            Repr::Rat(a) => Ok(Scalar(Repr::Rat(a.recip()))),
            Repr::Func(a) => a
                .inv()
                .map(Scalar::from_ratfunc)
                .ok_or(Error::DivisionByZero),
            Repr::Cyc(a) => a.inv().map(Scalar::from_cyclo).ok_or(Error::DivisionByZero),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Canonical text; parses back through the element grammar.
    pub fn render(&self) -> String {
        match &self.0 {
            Repr::Rat(r) => poly::fmt_rational(r),
            Repr::Func(f) => f.render(),
            Repr::Cyc(c) => c.render(),
        }
    }

    /// True when the rendering needs no parentheses after a unary minus.
    pub fn is_atomic(&self) -> bool {
        match &self.0 {
            Repr::Rat(_) => true,
            Repr::Func(f) => f.denom().is_one() && f.numer().len() == 1,
            Repr::Cyc(c) => c.coeffs().iter().filter(|x| !x.is_zero()).count() == 1,
        }
    }

    pub(crate) fn repr_kind(&self) -> ScalarView<'_> {
        match &self.0 {
            Repr::Rat(r) => ScalarView::Rational(r),
            Repr::Func(f) => ScalarView::Function(f),
            Repr::Cyc(c) => ScalarView::Cyclotomic(c),
        }
    }

    /// Value at `q = point` for a rational function; `None` for cyclotomic
    /// scalars or when the denominator vanishes.
    pub fn eval_rational(&self, point: &[BigRational]) -> Option<BigRational> {
        let ev = |p: &Poly| {
            p.eval_with(BigRational::zero(), |e, c| {
                e.iter().enumerate().fold(c.clone(), |acc, (k, &x)| {
                    acc * num_traits::pow(point[k].clone(), x as usize)
                })
            })
        };
        match &self.0 {
            Repr::Rat(r) => Some(r.clone()),
            Repr::Func(f) => {
                let d = ev(f.denom());
                (!d.is_zero()).then(|| ev(f.numer()) / d)
            }
            Repr::Cyc(_) => None,
        }
    }

    pub fn from_integer_big(i: BigInt) -> Scalar {
        Scalar(Repr::Rat(BigRational::from_integer(i)))
    }
}

pub(crate) enum ScalarView<'a> {
    Rational(&'a BigRational),
    Function(&'a RatFunc),
    Cyclotomic(&'a Cyclo),
}

enum Lifted {
    Rat(BigRational, BigRational),
    Func(RatFunc, RatFunc),
    Cyc(Cyclo, Cyclo),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self).ok()
    }
    fn from_int(i: i64) -> Self {
        Scalar::from_int(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic(r: usize) -> FieldMode {
        FieldMode::Generic { r }
    }

    #[test]
    fn inverse_pair() {
        let mode = generic(1);
        let q = mode.q_power(&[1]);
        let qi = mode.q_power(&[-1]);
        assert_eq!(q.mul(&qi), Scalar::one());
    }

    #[test]
    fn common_denominator_cancels() {
        let mode = generic(1);
        let q = mode.q_power(&[1]);
        let den = q.sub(&Scalar::one());
        let a = q.div(&den).unwrap();
        let b = Scalar::from_int(-1).div(&den).unwrap();
        assert_eq!(a.add(&b), Scalar::one());
    }

    #[test]
    fn root_of_unity_cube() {
        let mode = FieldMode::RootOfUnity { m: 3 };
        let z = mode.q_power(&[1]);
        let z2 = mode.q_power(&[2]);
        assert_eq!(z.mul(&z2), Scalar::one());
    }

    #[test]
    fn q_power_examples() {
        let g2 = generic(2);
        assert_eq!(g2.q_power(&[0, 0]), Scalar::one());
        let q1 = g2.parameter(1).unwrap();
        let q2 = g2.parameter(2).unwrap();
        let expect = q1.mul(&q1).div(&q2).unwrap();
        assert_eq!(g2.q_power(&[2, -1]), expect);
        let r4 = FieldMode::RootOfUnity { m: 4 };
        assert_eq!(r4.q_power(&[6]), Scalar::from_int(-1));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
        assert!(Scalar::from_fraction(1, 0).is_err());
    }

    #[test]
    fn mode_validation() {
        assert!(FieldMode::RootOfUnity { m: 1 }.validate().is_err());
        assert!(FieldMode::Generic { r: 0 }.validate().is_err());
        assert!(FieldMode::RootOfUnity { m: 2 }.validate().is_ok());
    }

    #[test]
    fn rendering() {
        let g = generic(1);
        let q = g.parameter(1).unwrap();
        let x = q.add(&Scalar::one()).div(&q.sub(&Scalar::one())).unwrap();
        assert_eq!(x.render(), "(q1 + 1)/(q1 - 1)");
        assert_eq!(g.q_power(&[-2]).render(), "1/q1^2");
        let r = FieldMode::RootOfUnity { m: 5 };
        assert_eq!(r.q_power(&[2]).add(&Scalar::one()).render(), "(z^2 + 1)");
    }
}
