use num_rational::BigRational;
use num_traits::One;

use super::poly::{gcd, Monomial, Poly};

/// A rational function `num / den` in the parameters `q1, ..., qr`.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic in the
/// lexicographic order, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc::from_poly(Poly::zero()));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Some(Self::normalize_unit(num, den))
    }

    fn normalize_unit(num: Poly, den: Poly) -> RatFunc {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// `c * prod q_k^{e_k}` with possibly negative exponents.
    pub fn monomial(e: &[i64], c: BigRational) -> RatFunc {
        let pos: Monomial = e.iter().map(|&x| x.max(0) as u32).collect();
        let neg: Monomial = e.iter().map(|&x| (-x).max(0) as u32).collect();
        RatFunc {
            num: Poly::monomial(pos, c),
            den: Poly::monomial(neg, BigRational::one()),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let g = gcd(&self.den, &o.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        let den = self.den.mul(&d1);
        RatFunc::new(num, den).unwrap()
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::from_poly(Poly::zero());
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&o.num));
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = o.den.div_exact(&g1).unwrap();
        let c = o.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        Self::normalize_unit(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn render(&self) -> String {
        let names = |i: usize| format!("q{}", i + 1);
        let n = self.num.render(&names);
        let n = if self.num.len() > 1 {
            format!("({n})")
        } else {
            n
        };
        if self.den.is_one() {
            n
        } else {
            let d = self.den.render(&names);
            let d = if self.den.len() > 1 || !self.den.leading_coeff().is_one() {
                format!("({d})")
            } else {
                d
            };
            format!("{n}/{d}")
        }
    }
}
