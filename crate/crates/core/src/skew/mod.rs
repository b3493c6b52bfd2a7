//! `F*A` as a skew-Laurent ring `(F*B)[t, t^-1; sigma]`.
//!
//! Elements are taken in split coordinates: `B` is spanned by the first
//! `n - 1` coordinates and `t = x_n`. Forms use right coefficients,
//! `alpha = sum_i t^i beta_i`, and `beta t = t sigma^{-1}(beta)`.

pub mod screen;

use std::collections::BTreeMap;

use crate::algebra::{cocycle, AlgebraElement, Context};
use crate::error::{Error, Result};
use crate::linalg::Laurent;
use crate::scalars::Scalar;

pub use screen::{left_root_screen, monomial_right_root_screen, RootWitness};

fn t_pow(ctx: &Context, i: i64) -> AlgebraElement {
    AlgebraElement::generator(ctx, ctx.n() - 1, i)
}

/// True when `beta` lies in `F*B`.
pub fn in_b(beta: &AlgebraElement) -> bool {
    let n = beta.ctx().n();
    beta.support().all(|a| a[n - 1] == 0)
}

/// True when all coordinate generators of `B` commute pairwise.
pub fn b_is_commutative(ctx: &Context) -> bool {
    let n = ctx.n();
    for i in 0..n - 1 {
        for j in i + 1..n - 1 {
            let mut a = vec![0; n];
            let mut b = vec![0; n];
            a[i] = 1;
            b[j] = 1;
            if !ctx.commute(&a, &b) {
                return false;
            }
        }
    }
    true
}

pub fn require_commutative_b(ctx: &Context) -> Result<()> {
    if b_is_commutative(ctx) {
        Ok(())
    } else {
        Err(Error::NonCommutativeCoefficients(
            "the pairing does not vanish on the first n-1 coordinates".into(),
        ))
    }
}

/// `sigma^k(beta)`, where `sigma(x^b) = q_power(pairing(e_n, b)) x^b`.
pub fn sigma(beta: &AlgebraElement, k: i64) -> Result<AlgebraElement> {
    if !in_b(beta) {
        return Err(Error::NotInSubalgebra(beta.render()));
    }
    Ok(sigma_unchecked(beta, k))
}

pub(crate) fn sigma_unchecked(beta: &AlgebraElement, k: i64) -> AlgebraElement {
    if k == 0 {
        return beta.clone();
    }
    let ctx = beta.ctx();
    let n = ctx.n();
    let mut en = vec![0; n];
    en[n - 1] = k;
    AlgebraElement::from_terms(
        ctx,
        beta.terms().iter().map(|(b, c)| {
            let e = ctx.pairing_unchecked(&en, b);
            (b.clone(), c.mul(&ctx.q_power(&e)))
        }),
    )
}

/// Coefficients of `beta` in `F*B` as a commutative Laurent polynomial in
/// `n - 1` variables; only meaningful when `B` is commutative, where the
/// cocycle is trivial on `B`.
pub fn to_laurent(beta: &AlgebraElement) -> Laurent<Scalar> {
    let n = beta.ctx().n();
    Laurent::from_terms(
        n - 1,
        beta.terms()
            .iter()
            .map(|(a, c)| (a[..n - 1].to_vec(), c.clone())),
    )
}

pub fn from_laurent(ctx: &Context, p: &Laurent<Scalar>) -> AlgebraElement {
    AlgebraElement::from_terms(
        ctx,
        p.terms().map(|(e, c)| {
            let mut a = e.clone();
            a.push(0);
            (a, c.clone())
        }),
    )
}

/// `alpha = sum_i t^i beta_i` with every `beta_i` nonzero in `F*B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewLaurentForm {
    ctx: Context,
    coeffs: BTreeMap<i64, AlgebraElement>,
}

/// Groups the terms of `alpha` by their last coordinate.
pub fn decompose(alpha: &AlgebraElement) -> SkewLaurentForm {
    let ctx = alpha.ctx();
    let n = ctx.n();
    let mut coeffs: BTreeMap<i64, AlgebraElement> = BTreeMap::new();
    for (a, mu) in alpha.terms() {
        let i = a[n - 1];
        let mut b = a.clone();
        b[n - 1] = 0;
        let mut ie = vec![0; n];
        ie[n - 1] = i;
        // t^i x^b = lambda(i e_n, b) x^{(b, i)}
        let lam = cocycle(ctx, &ie, &b);
        let c = mu.mul(&lam.inv().expect("cocycle values are nonzero"));
        coeffs
            .entry(i)
            .or_insert_with(|| AlgebraElement::zero(ctx))
            .add_term(b, c);
    }
    coeffs.retain(|_, v| !v.is_zero());
    SkewLaurentForm {
        ctx: ctx.clone(),
        coeffs,
    }
}

impl SkewLaurentForm {
    pub fn from_coeffs(ctx: &Context, coeffs: BTreeMap<i64, AlgebraElement>) -> Result<Self> {
        for beta in coeffs.values() {
            if !in_b(beta) {
                return Err(Error::NotInSubalgebra(beta.render()));
            }
        }
        let mut coeffs = coeffs;
        coeffs.retain(|_, v| !v.is_zero());
        Ok(SkewLaurentForm {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, AlgebraElement> {
        &self.coeffs
    }

    pub fn coeff(&self, i: i64) -> AlgebraElement {
        self.coeffs
            .get(&i)
            .cloned()
            .unwrap_or_else(|| AlgebraElement::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(p, q)`, the lowest and highest degrees present.
    pub fn degrees(&self) -> Option<(i64, i64)> {
        Some((
            *self.coeffs.keys().next()?,
            *self.coeffs.keys().next_back()?,
        ))
    }

    pub fn recompose(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.ctx);
        for (&i, beta) in &self.coeffs {
            out = out.add(&t_pow(&self.ctx, i).mul(beta));
        }
        out
    }

    /// Coefficients in left order `alpha = sum beta'_i t^i`,
    /// where `beta'_i = sigma^i(beta_i)`.
    pub fn left_coeffs(&self) -> BTreeMap<i64, AlgebraElement> {
        self.coeffs
            .iter()
            .map(|(&i, b)| (i, sigma_unchecked(b, i)))
            .collect()
    }
}

/// True when both terminal coefficients are units of `F*B`.
pub fn is_unitary(alpha: &AlgebraElement) -> Result<bool> {
    let form = decompose(alpha);
    let (p, q) = form.degrees().ok_or(Error::ZeroElement)?;
    Ok(form.coeff(p).is_unit() && form.coeff(q).is_unit())
}

/// A unitary element rescaled on the right by a unit so that its degrees are
/// `0..=d` and its constant coefficient is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizedUnitary {
    pub element: AlgebraElement,
    pub form: SkewLaurentForm,
    pub degree: usize,
    /// The unit `u` with `element = original * u`.
    pub unit: AlgebraElement,
}

impl NormalizedUnitary {
    pub fn ctx(&self) -> &Context {
        self.element.ctx()
    }
}

pub fn normalize(f: &AlgebraElement) -> Result<NormalizedUnitary> {
    let form = decompose(f);
    let (p, q) = form.degrees().ok_or(Error::ZeroElement)?;
    let lo = form.coeff(p);
    let hi = form.coeff(q);
    if !lo.is_unit() {
        return Err(Error::NotUnitary(format!(
            "trailing coefficient {} is not a unit",
            lo.render()
        )));
    }
    if !hi.is_unit() {
        return Err(Error::NotUnitary(format!(
            "leading coefficient {} is not a unit",
            hi.render()
        )));
    }
    let ctx = f.ctx();
    let shift = t_pow(ctx, -p);
    let g = f.mul(&shift);
    let u0 = decompose(&g).coeff(0);
    let uinv = u0.inverse()?;
    let element = g.mul(&uinv);
    let form = decompose(&element);
    Ok(NormalizedUnitary {
        degree: (q - p) as usize,
        unit: shift.mul(&uinv),
        element,
        form,
    })
}

/// `alpha = f * quotient + recompose(residue)` with residue degrees in
/// `0..d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reduction {
    pub residue: Vec<AlgebraElement>,
    pub quotient: AlgebraElement,
}

impl Reduction {
    pub fn residue_element(&self) -> AlgebraElement {
        let ctx = self.quotient.ctx();
        let mut out = AlgebraElement::zero(ctx);
        for (i, b) in self.residue.iter().enumerate() {
            out = out.add(&t_pow(ctx, i as i64).mul(b));
        }
        out
    }
}

/// The representative of `alpha + f A` supported in degrees `0..d`.
pub fn reduce_mod(f: &NormalizedUnitary, alpha: &AlgebraElement) -> Reduction {
    let ctx = f.ctx();
    let d = f.degree as i64;
    let fd = f.form.coeff(d);
    let mut rem = alpha.clone();
    let mut quotient = AlgebraElement::zero(ctx);
    loop {
        let form = decompose(&rem);
        let Some((p, q)) = form.degrees() else { break };
        let step = if q >= d {
            // f t^{q-d} c has top coefficient sigma^{-(q-d)}(f_d) c
            let lead = sigma_unchecked(&fd, -(q - d));
            let c = lead.inverse().expect("unit").mul(&form.coeff(q));
            t_pow(ctx, q - d).mul(&c)
        } else if p < 0 {
            // f t^p c has bottom coefficient sigma^{-p}(f_0) c = c
            t_pow(ctx, p).mul(&form.coeff(p))
        } else {
            break;
        };
        rem = rem.sub(&f.element.mul(&step));
        quotient = quotient.add(&step);
    }
    let form = decompose(&rem);
    let residue = (0..d).map(|i| form.coeff(i)).collect();
    Reduction { residue, quotient }
}

/// `denominator * g = quotient * f + remainder`, with the top degree of the
/// remainder below that of `f`. The denominator is 1 unless fractions were
/// needed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Division {
    pub denominator: AlgebraElement,
    pub quotient: AlgebraElement,
    pub remainder: AlgebraElement,
}

/// Division with `f` on the right. A non-unit leading coefficient is allowed
/// when `allow_fractions` is set and `F*B` is commutative; the result is then
/// the left fraction `denominator^{-1} (quotient, remainder)`.
pub fn right_divide(
    g: &AlgebraElement,
    f: &AlgebraElement,
    allow_fractions: bool,
) -> Result<Division> {
    let ctx = g.ctx();
    let fform = decompose(f);
    let (_, d) = fform.degrees().ok_or(Error::DivisionByZero)?;
    let fd = fform.coeff(d);
    let promote = !fd.is_unit();
    if promote {
        if !allow_fractions {
            return Err(Error::NonUnitLeadingCoefficient(fd.render()));
        }
        require_commutative_b(ctx)?;
    }
    let fd_inv = if promote { None } else { Some(fd.inverse()?) };
    let mut denominator = AlgebraElement::one(ctx);
    let mut quotient = AlgebraElement::zero(ctx);
    let mut rem = g.clone();
    loop {
        let form = decompose(&rem);
        let Some((_, top)) = form.degrees() else {
            break;
        };
        if top < d {
            break;
        }
        let mut gd = form.coeff(top);
        if promote {
            // left-multiplying by sigma^top(f_d) turns the top coefficient
            // into f_d * g_top
            let s = sigma_unchecked(&fd, top);
            rem = s.mul(&rem);
            quotient = s.mul(&quotient);
            denominator = s.mul(&denominator);
            gd = fd.mul(&gd);
        }
        // (t^{top-d} c) f has top coefficient sigma^{-d}(c) f_d
        let c = match &fd_inv {
            Some(inv) => sigma_unchecked(&gd.mul(inv), d),
            None => {
                let quot = to_laurent(&gd)
                    .div_exact(&to_laurent(&fd))
                    .expect("f_d divides f_d * g");
                sigma_unchecked(&from_laurent(ctx, &quot), d)
            }
        };
        let step = t_pow(ctx, top - d).mul(&c);
        rem = rem.sub(&step.mul(f));
        quotient = quotient.add(&step);
    }
    let out = Division {
        denominator,
        quotient,
        remainder: rem,
    };
    debug_assert_eq!(
        out.denominator.mul(g),
        out.quotient.mul(f).add(&out.remainder)
    );
    Ok(out)
}

/// `(alpha', beta')` with `alpha beta' = beta alpha'` and `beta'` in `F*B`.
pub fn ore_right_multiple(
    alpha: &AlgebraElement,
    beta: &AlgebraElement,
) -> Result<(AlgebraElement, AlgebraElement)> {
    let ctx = alpha.ctx();
    require_commutative_b(ctx)?;
    if beta.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !in_b(beta) {
        return Err(Error::NotInSubalgebra(beta.render()));
    }
    let form = decompose(alpha);
    let mut beta_p = AlgebraElement::one(ctx);
    for &i in form.coeffs().keys() {
        beta_p = beta_p.mul(&sigma_unchecked(beta, -i));
    }
    let bp = to_laurent(&beta_p);
    let mut alpha_p = AlgebraElement::zero(ctx);
    for (&i, ai) in form.coeffs() {
        let num = to_laurent(ai).mul(&bp);
        let den = to_laurent(&sigma_unchecked(beta, -i));
        let q = num.div_exact(&den).expect("sigma^{-i}(beta) divides beta'");
        alpha_p = alpha_p.add(&t_pow(ctx, i).mul(&from_laurent(ctx, &q)));
    }
    if alpha.mul(&beta_p) != beta.mul(&alpha_p) {
        return Err(Error::NonCommutativeCoefficients(
            "Ore identity failed to verify".into(),
        ));
    }
    Ok((alpha_p, beta_p))
}
