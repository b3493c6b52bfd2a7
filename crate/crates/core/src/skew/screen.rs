//! Search for linear factors `t - mu x^b` of an element.
//!
//! Modulo the left ideal `A (t - a)` every element reduces to `F*B`:
//! `t^i` is congruent to `rho_i` with `rho_i = sigma^{i-1}(a) rho_{i-1}`, so
//! `f = sum t^i f_i` lies in `A (t - a)` iff `sum sigma^i(f_i) rho_i = 0`.
//! With `a = mu x^b` this is a polynomial system in `mu`; its roots of the
//! form `c * q_power(e)`, `c` rational, are found exactly and then checked
//! by division. The right ideal `(t - a) A` is handled the same way with
//! `t^i` congruent to `u_i = u_{i-1} sigma^{-(i-1)}(a)` and residue
//! `sum u_i f_i`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{decompose, normalize, reduce_mod, right_divide, sigma_unchecked, t_pow};
use crate::algebra::{AlgebraElement, Context};
use crate::linalg::UniPoly;
use crate::scalars::{FieldMode, Poly, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum FactorSide {
    /// `f = h (t - a)`
    Right,
    /// `f = (t - a) h`
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootWitness {
    pub side: FactorSide,
    pub mu: Scalar,
    pub b: Vec<i64>,
    /// `t - mu x^b`
    pub factor: AlgebraElement,
    /// The complementary factor `h`.
    pub cofactor: AlgebraElement,
}

fn box_points(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        let mut next = Vec::new();
        for p in &out {
            for v in -bound..=bound {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    // smallest supports first
    out.sort_by_key(|p| (p.iter().map(|x| x.abs()).sum::<i64>(), p.clone()));
    out
}

fn b_exponent(ctx: &Context, b: &[i64]) -> Vec<i64> {
    let mut a = b.to_vec();
    a.push(0);
    debug_assert_eq!(a.len(), ctx.n());
    a
}

/// `sum_i mu^i R_i` collected per monomial into polynomials in `mu`, and
/// their gcd with the factor `mu^k` removed.
fn mu_gcd(parts: &[AlgebraElement]) -> UniPoly<Scalar> {
    let mut monos: std::collections::BTreeSet<Vec<i64>> = Default::default();
    for r in parts {
        monos.extend(r.support().cloned());
    }
    let mut g = UniPoly::zero();
    for m in monos {
        let p = UniPoly::new(parts.iter().map(|r| r.coeff(&m)).collect());
        g = if g.is_zero() { p.monic() } else { g.gcd(&p) };
        if g.is_unit() {
            break;
        }
    }
    g.strip_x()
}

/// Nonzero rational roots of `sum a_i v^i`, ascending.
pub fn rational_roots(a: &[BigRational]) -> Vec<BigRational> {
    let den = a.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut ints: Vec<BigInt> = a.iter().map(|c| (c * &den).to_integer()).collect();
    while ints.last().map(|x| x.is_zero()).unwrap_or(false) {
        ints.pop();
    }
    let k = ints.iter().take_while(|x| x.is_zero()).count();
    let ints = ints[k..].to_vec();
    if ints.len() < 2 {
        return Vec::new();
    }
    let (Some(p), Some(q)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for num in &p {
        for d in &q {
            for sign in [1i64, -1] {
                let cand = BigRational::new(num * sign, d.clone());
                if out.contains(&cand) {
                    continue;
                }
                let val = ints.iter().rev().fold(BigRational::zero(), |acc, c| {
                    acc * &cand + BigRational::from_integer(c.clone())
                });
                if val.is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out
}

fn divisors(x: &BigInt) -> Option<Vec<BigInt>> {
    let v = x.abs().to_u64()?;
    if v > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

fn eval(g: &UniPoly<Scalar>, x: &Scalar) -> Scalar {
    g.coeffs()
        .iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| acc.mul(x).add(c))
}

/// A rational polynomial obtained from `sum h_i v^i` by a nonzero linear
/// functional on the coefficient field; every rational root of the original
/// is a root of it.
fn rational_shadow(h: &[Scalar], mode: FieldMode) -> Vec<BigRational> {
    match mode {
        FieldMode::Generic { .. } => {
            let fr: Vec<_> = h.iter().map(|s| s.as_ratfunc().unwrap()).collect();
            let den = fr
                .iter()
                .filter(|f| !f.is_zero())
                .fold(Poly::one(), |l, f| crate::scalars::poly::lcm(&l, f.denom()));
            let nums: Vec<Poly> = fr
                .iter()
                .map(|f| {
                    if f.is_zero() {
                        Poly::zero()
                    } else {
                        f.numer().mul(&den.div_exact(f.denom()).unwrap())
                    }
                })
                .collect();
            let top = nums
                .iter()
                .filter_map(|p| p.leading().map(|(m, _)| m.clone()))
                .max();
            let Some(top) = top else { return Vec::new() };
            nums.iter()
                .map(|p| {
                    p.terms()
                        .find(|(m, _)| **m == top)
                        .map(|(_, c)| c.clone())
                        .unwrap_or_else(BigRational::zero)
                })
                .collect()
        }
        FieldMode::RootOfUnity { m } => {
            let cs: Vec<_> = h.iter().map(|s| s.as_cyclo(m).unwrap()).collect();
            let idx = cs.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
            if idx == 0 {
                return Vec::new();
            }
            cs.iter()
                .map(|c| {
                    c.coeffs()
                        .get(idx - 1)
                        .cloned()
                        .unwrap_or_else(BigRational::zero)
                })
                .collect()
        }
    }
}

/// Roots of `g` of the form `c * q_power(e)` with `c` rational and nonzero.
pub fn special_roots(g: &UniPoly<Scalar>, mode: FieldMode) -> Vec<Scalar> {
    let coeffs = g.coeffs();
    if coeffs.len() < 2 {
        return Vec::new();
    }
    let exps: Vec<Vec<i64>> = match mode {
        FieldMode::RootOfUnity { m } => (0..m as i64).map(|k| vec![k]).collect(),
        FieldMode::Generic { r } => {
            let fr: Vec<_> = coeffs.iter().map(|s| s.as_ratfunc().unwrap()).collect();
            let den = fr
                .iter()
                .filter(|f| !f.is_zero())
                .fold(Poly::one(), |l, f| crate::scalars::poly::lcm(&l, f.denom()));
            let nums: Vec<Option<Poly>> = fr
                .iter()
                .map(|f| (!f.is_zero()).then(|| f.numer().mul(&den.div_exact(f.denom()).unwrap())))
                .collect();
            // highest q_k-degree of g(c q^e) must be attained twice
            let mut per_param: Vec<Vec<i64>> = Vec::new();
            for k in 0..r {
                let mut cands = std::collections::BTreeSet::new();
                for i in 0..nums.len() {
                    for j in i + 1..nums.len() {
                        if let (Some(a), Some(b)) = (&nums[i], &nums[j]) {
                            let diff = a.degree_in(k) as i64 - b.degree_in(k) as i64;
                            let span = (j - i) as i64;
                            if diff % span == 0 {
                                cands.insert(diff / span);
                            }
                        }
                    }
                }
                per_param.push(cands.into_iter().collect());
            }
            let mut all = vec![vec![]];
            for c in per_param {
                let mut next = Vec::new();
                for p in &all {
                    for &v in &c {
                        let mut q: Vec<i64> = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
                all = next;
            }
            all
        }
    };
    let mut out = Vec::new();
    for e in exps {
        let qe = mode.q_power(&e);
        // h_i = g_i q^{ie}
        let mut h = Vec::with_capacity(coeffs.len());
        let mut pw = Scalar::one();
        for c in coeffs {
            h.push(c.mul(&pw));
            pw = pw.mul(&qe);
        }
        for c in rational_roots(&rational_shadow(&h, mode)) {
            let mu = Scalar::from_rational(c).mul(&qe);
            if eval(g, &mu).is_zero() && !out.contains(&mu) {
                out.push(mu);
            }
        }
    }
    out
}

fn linear_factor(ctx: &Context, mu: &Scalar, b: &[i64]) -> AlgebraElement {
    t_pow(ctx, 1).sub(&AlgebraElement::monomial(
        ctx,
        b_exponent(ctx, b),
        mu.clone(),
    ))
}

/// Searches `|b_i| <= bound` for a right factor `t - mu x^b` of `f`.
pub fn monomial_right_root_screen(f: &AlgebraElement, bound: i64) -> Option<RootWitness> {
    let ctx = f.ctx();
    let (p, _) = decompose(f).degrees()?;
    // left multiplication by t^{-p} keeps right factors
    let f0 = t_pow(ctx, -p).mul(f);
    let form = decompose(&f0);
    let d = form.degrees()?.1;
    if d == 0 {
        return None;
    }
    let mode = ctx.mode();
    for b in box_points(ctx.n() - 1, bound) {
        let xb = AlgebraElement::x(ctx, &b_exponent(ctx, &b));
        let mut rho = AlgebraElement::one(ctx);
        let mut parts = Vec::new();
        for i in 0..=d {
            if i > 0 {
                rho = sigma_unchecked(&xb, i - 1).mul(&rho);
            }
            parts.push(sigma_unchecked(&form.coeff(i), i).mul(&rho));
        }
        let g = mu_gcd(&parts);
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        for mu in special_roots(&g, mode) {
            let factor = linear_factor(ctx, &mu, &b);
            let Ok(div) = right_divide(f, &factor, false) else {
                continue;
            };
            if div.remainder.is_zero() {
                return Some(RootWitness {
                    side: FactorSide::Right,
                    mu,
                    b,
                    factor,
                    cofactor: div.quotient,
                });
            }
        }
    }
    None
}

/// Searches `|b_i| <= bound` for a left factor `t - mu x^b` of `f`.
pub fn left_root_screen(f: &AlgebraElement, bound: i64) -> Option<RootWitness> {
    let ctx = f.ctx();
    let (p, _) = decompose(f).degrees()?;
    // right multiplication by t^{-p} keeps left factors
    let f0 = f.mul(&t_pow(ctx, -p));
    let form = decompose(&f0);
    let d = form.degrees()?.1;
    if d == 0 {
        return None;
    }
    let mode = ctx.mode();
    for b in box_points(ctx.n() - 1, bound) {
        let xb = AlgebraElement::x(ctx, &b_exponent(ctx, &b));
        let mut u = AlgebraElement::one(ctx);
        let mut parts = Vec::new();
        for i in 0..=d {
            if i > 0 {
                u = u.mul(&sigma_unchecked(&xb, -(i - 1)));
            }
            parts.push(u.mul(&form.coeff(i)));
        }
        let g = mu_gcd(&parts);
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        for mu in special_roots(&g, mode) {
            let factor = linear_factor(ctx, &mu, &b);
            let Ok(nf) = normalize(&factor) else { continue };
            let red = reduce_mod(&nf, f);
            if red.residue.iter().all(|r| r.is_zero()) {
                // f = factor * unit * quotient
                let cofactor = nf.unit.mul(&red.quotient);
                debug_assert_eq!(factor.mul(&cofactor), *f);
                return Some(RootWitness {
                    side: FactorSide::Left,
                    mu,
                    b,
                    factor,
                    cofactor,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse;
    use crate::lattice::ExponentSystem;
    use std::sync::Arc;

    fn plane() -> Context {
        Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }))
    }

    fn el(c: &Context, s: &str) -> AlgebraElement {
        parse(c, s).unwrap()
    }

    #[test]
    fn rational_root_finding() {
        let r = |v: &[i64]| {
            v.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect::<Vec<_>>()
        };
        // 2v^2 - 3v + 1 = (2v - 1)(v - 1)
        let roots = rational_roots(&r(&[1, -3, 2]));
        assert_eq!(
            roots,
            vec![BigRational::new(1.into(), 2.into()), BigRational::one()]
        );
        assert!(rational_roots(&r(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn finds_linear_factor_of_t2_minus_1() {
        let c = plane();
        let w = monomial_right_root_screen(&el(&c, "t^2 - 1"), 1).unwrap();
        assert_eq!(w.b, vec![0]);
        assert!(w.mu.is_one() || w.mu.neg().is_one());
        assert_eq!(w.cofactor.mul(&w.factor), el(&c, "t^2 - 1"));
    }

    #[test]
    fn finds_right_factor_of_product() {
        let c = plane();
        let f = el(&c, "(t - x1)*(t - 1)");
        let w = monomial_right_root_screen(&f, 1).unwrap();
        assert_eq!(w.factor, el(&c, "t - 1"));
        assert_eq!(w.cofactor.mul(&w.factor), f);
        let w = left_root_screen(&f, 1).unwrap();
        assert_eq!(w.factor.mul(&w.cofactor), f);
    }

    #[test]
    fn twisted_root_is_found() {
        let c = plane();
        let g = el(&c, "t - 3*q1^2*x1^-1");
        let f = el(&c, "t^2 + x1 + 1").mul(&g);
        let w = monomial_right_root_screen(&f, 2).unwrap();
        assert_eq!(w.factor, g);
    }

    #[test]
    fn no_root_for_t2_minus_x1() {
        let c = plane();
        assert!(monomial_right_root_screen(&el(&c, "t^2 - x1"), 2).is_none());
        assert!(left_root_screen(&el(&c, "t^2 - x1"), 2).is_none());
    }

    #[test]
    fn root_of_unity_mode() {
        let c = Arc::new(ExponentSystem::quantum_plane(FieldMode::RootOfUnity {
            m: 3,
        }));
        let g = el(&c, "t - 2*z*x1");
        let f = g.mul(&el(&c, "t + x1^-1"));
        let w = left_root_screen(&f, 1).unwrap();
        assert_eq!(w.factor.mul(&w.cofactor), f);
        assert!(monomial_right_root_screen(&f, 1).is_some());
    }
}
