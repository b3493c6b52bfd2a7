//! The cyclic module `S = A / fA` for a unitary `f`, as a free right
//! `F*B`-module with basis `t^0, ..., t^{d-1}`.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{GkReport, SubgroupVerdict, TorsionVerdict};
use crate::algebra::{AlgebraElement, Context};
use crate::error::{Error, Result};
use crate::lattice::coordinate_family;
use crate::linalg::polymodp::{self, column_hermite_pivots, is_laurent_unit, PolyP};
use crate::linalg::{det, gcd, Laurent, UniPoly};
use crate::scalars::modp::{PrimeField, Specialization};
use crate::scalars::{FieldMode, Scalar};
use crate::skew::{
    self, left_root_screen, monomial_right_root_screen, normalize, reduce_mod, sigma_unchecked,
    to_laurent, NormalizedUnitary, RootWitness,
};

/// Coordinates `(beta_0, ..., beta_{d-1})` of `sum_i t^i beta_i`.
pub type ModVec = Vec<AlgebraElement>;

#[derive(Clone, Debug)]
pub struct ContractionModule {
    original: AlgebraElement,
    f: NormalizedUnitary,
    /// Column `i` holds the coordinates of `t^{i+1}`.
    t_fwd: Vec<ModVec>,
    /// Column `i` holds the coordinates of `t^{i-1}`.
    t_back: Vec<ModVec>,
}

pub fn build_contraction(f: &AlgebraElement) -> Result<ContractionModule> {
    let nf = normalize(f)?;
    let ctx = nf.ctx().clone();
    let d = nf.degree;
    let tp = |i: i64| AlgebraElement::generator(&ctx, ctx.n() - 1, i);
    let t_fwd = (0..d)
        .map(|i| reduce_mod(&nf, &tp(i as i64 + 1)).residue)
        .collect();
    let t_back = (0..d)
        .map(|i| reduce_mod(&nf, &tp(i as i64 - 1)).residue)
        .collect();
    let m = ContractionModule {
        original: f.clone(),
        f: nf,
        t_fwd,
        t_back,
    };
    m.verify()?;
    Ok(m)
}

impl ContractionModule {
    pub fn ctx(&self) -> &Context {
        self.f.ctx()
    }

    pub fn n(&self) -> usize {
        self.ctx().n()
    }

    /// Rank over `F*B`.
    pub fn d(&self) -> usize {
        self.f.degree
    }

    pub fn original(&self) -> &AlgebraElement {
        &self.original
    }

    pub fn normalized(&self) -> &NormalizedUnitary {
        &self.f
    }

    pub fn t_columns(&self) -> (&[ModVec], &[ModVec]) {
        (&self.t_fwd, &self.t_back)
    }

    pub fn zero(&self) -> ModVec {
        vec![AlgebraElement::zero(self.ctx()); self.d()]
    }

    /// The basis vector `t^k`.
    pub fn basis(&self, k: usize) -> ModVec {
        let mut v = self.zero();
        v[k] = AlgebraElement::one(self.ctx());
        v
    }

    pub fn is_zero(&self, v: &ModVec) -> bool {
        v.iter().all(|b| b.is_zero())
    }

    pub fn to_element(&self, v: &ModVec) -> AlgebraElement {
        let ctx = self.ctx();
        let mut out = AlgebraElement::zero(ctx);
        for (i, b) in v.iter().enumerate() {
            out = out.add(&AlgebraElement::generator(ctx, ctx.n() - 1, i as i64).mul(b));
        }
        out
    }

    /// Coordinates of the class of `alpha`.
    pub fn residue(&self, alpha: &AlgebraElement) -> ModVec {
        reduce_mod(&self.f, alpha).residue
    }

    /// `v * x_{g+1}^{power}` for `power = +-1`.
    pub fn act_generator(&self, v: &ModVec, g: usize, power: i64) -> ModVec {
        let ctx = self.ctx();
        let n = ctx.n();
        if g + 1 < n {
            let mut e = vec![0; n];
            e[g] = power;
            return v
                .iter()
                .map(|b| b.right_mul_monomial(&e, &Scalar::one()))
                .collect();
        }
        // (t^i beta) t^{+-1} = t^{i+-1} sigma^{-+1}(beta)
        let cols = if power > 0 { &self.t_fwd } else { &self.t_back };
        let mut out = self.zero();
        for (i, b) in v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let tb = sigma_unchecked(b, -power);
            for (k, c) in cols[i].iter().enumerate() {
                if !c.is_zero() {
                    out[k] = out[k].add(&c.mul(&tb));
                }
            }
        }
        out
    }

    /// `v * alpha`.
    pub fn act(&self, v: &ModVec, alpha: &AlgebraElement) -> ModVec {
        let mut out = self.zero();
        for (a, mu) in alpha.terms() {
            // x^a = x_1^{a_1} ... x_n^{a_n}
            let mut w = v.clone();
            for (g, &k) in a.iter().enumerate() {
                let step = k.signum();
                for _ in 0..k.abs() {
                    w = self.act_generator(&w, g, step);
                }
            }
            for (o, x) in out.iter_mut().zip(w) {
                *o = o.add(&x.scale(mu));
            }
        }
        out
    }

    fn verify(&self) -> Result<()> {
        let ctx = self.ctx();
        let n = ctx.n();
        let d = self.d();
        for k in 0..d {
            let e = self.basis(k);
            let tk = AlgebraElement::generator(ctx, n - 1, k as i64);
            for g in 0..n {
                for p in [1i64, -1] {
                    let img = self.act_generator(&e, g, p);
                    let expect = self.residue(&tk.mul(&AlgebraElement::generator(ctx, g, p)));
                    if img != expect {
                        return Err(Error::Verification(format!(
                            "action of x{}^{p} on t^{k} disagrees with reduction",
                            g + 1
                        )));
                    }
                    if self.act_generator(&img, g, -p) != e {
                        return Err(Error::Verification(format!(
                            "x{}^{p} and its inverse do not cancel on t^{k}",
                            g + 1
                        )));
                    }
                }
                for h in g + 1..n {
                    let mut a = vec![0; n];
                    let mut b = vec![0; n];
                    a[g] = 1;
                    b[h] = 1;
                    let q = ctx.q_power(&ctx.pairing_unchecked(&a, &b));
                    let lhs = self.act_generator(&self.act_generator(&e, g, 1), h, 1);
                    let rhs: ModVec = self
                        .act_generator(&self.act_generator(&e, h, 1), g, 1)
                        .iter()
                        .map(|x| x.scale(&q))
                        .collect();
                    if lhs != rhs {
                        return Err(Error::Verification(format!(
                            "relation between x{} and x{} fails on t^{k}",
                            g + 1,
                            h + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Columns `w t^k` for `k = 0, 1, -1, 2, -2, ...` up to `|k| <= big_k`.
    pub fn orbit_columns(&self, w: &ModVec, big_k: usize) -> Vec<(i64, ModVec)> {
        let n = self.n();
        let mut out = vec![(0, w.clone())];
        let mut fwd = w.clone();
        let mut back = w.clone();
        for k in 1..=big_k as i64 {
            fwd = self.act_generator(&fwd, n - 1, 1);
            back = self.act_generator(&back, n - 1, -1);
            out.push((k, fwd.clone()));
            out.push((-k, back.clone()));
        }
        out
    }
}

/// GK dimension from freeness over `F*B` (lower bound) and torsion over the
/// whole algebra (upper bound).
pub fn gk_certified(module: &ContractionModule, id: &str) -> GkReport {
    let n = module.n();
    let verdicts = coordinate_family(n)
        .into_iter()
        .map(|sub| {
            let idx: Vec<usize> = sub
                .basis
                .iter()
                .map(|v| v.iter().position(|&x| x == 1).unwrap())
                .collect();
            let has_t = idx.contains(&(n - 1));
            let verdict = if !has_t {
                TorsionVerdict::NotTorsion
            } else if idx.len() == n {
                TorsionVerdict::Torsion
            } else {
                TorsionVerdict::Undetermined
            };
            SubgroupVerdict {
                coordinates: idx.iter().map(|i| i + 1).collect(),
                rank: idx.len(),
                verdict,
            }
        })
        .collect();
    GkReport {
        module: id.to_string(),
        lower: n - 1,
        upper: n - 1,
        verdicts,
        witnesses: vec![
            format!(
                "free of rank {} over the coefficient subalgebra (basis t^0..t^{})",
                module.d(),
                module.d() - 1
            ),
            format!(
                "cyclic generator annihilated by f = {}",
                module.normalized().element.render()
            ),
        ],
        growth: None,
        growth_flag: false,
    }
}

/// Outcome of the torsion test for `S / wA`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalityVerdict {
    pub rank: usize,
    pub d: usize,
    /// True when `S / wA` is torsion over `F*B`.
    pub torsion: bool,
    /// Shifts `k` whose columns `w t^k` were used.
    pub shifts_used: Vec<i64>,
}

/// Fraction-free rank of Laurent-polynomial column vectors, adding columns
/// in order and stopping at `limit`.
fn laurent_rank(cols: &[Vec<Laurent<Scalar>>], limit: usize) -> (usize, Vec<usize>) {
    let mut echelon: Vec<(usize, Vec<Laurent<Scalar>>)> = Vec::new();
    let mut used = Vec::new();
    for (ci, col) in cols.iter().enumerate() {
        let mut v = col.clone();
        for (p, row) in &echelon {
            if v[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = v[*p].clone();
            v = v
                .iter()
                .zip(row.iter())
                .map(|(x, y)| x.mul(&a).sub(&y.mul(&b)))
                .collect();
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((p, v));
            used.push(ci);
            if echelon.len() == limit {
                break;
            }
        }
    }
    (echelon.len(), used)
}

/// Decides whether `S / wA` is torsion over commutative `F*B` by the rank of
/// the columns `w t^k`, `|k| <= big_k`, over the fraction field.
pub fn criticality_check(
    module: &ContractionModule,
    w: &ModVec,
    big_k: usize,
) -> Result<CriticalityVerdict> {
    skew::require_commutative_b(module.ctx())?;
    if module.is_zero(w) {
        return Err(Error::ZeroElement);
    }
    let d = module.d();
    let cols = module.orbit_columns(w, big_k);
    let lcols: Vec<Vec<Laurent<Scalar>>> = cols
        .iter()
        .map(|(_, c)| c.iter().map(to_laurent).collect())
        .collect();
    let (rank, used) = laurent_rank(&lcols, d);
    Ok(CriticalityVerdict {
        rank,
        d,
        torsion: rank == d,
        shifts_used: used.iter().map(|&i| cols[i].0).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum SampleOrigin {
    RightFactorCofactor,
    LeftFactor,
    Random,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleResult {
    pub index: usize,
    pub origin: SampleOrigin,
    pub w: Vec<String>,
    pub generates: bool,
    /// Smallest truncation in the schedule at which `w` was shown to generate.
    pub k_used: Option<usize>,
    /// The minors certificate when `w` generates; otherwise the Hermite
    /// pivots mod p (or invariant factors) at the last truncation tried.
    pub evidence: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimplicityCertificate {
    /// Every sample was shown to generate the module.
    pub certified: bool,
    pub samples: Vec<SampleResult>,
    pub k_schedule: Vec<usize>,
    pub max_k_used: Option<usize>,
    /// A linear factor of `f`, if the screens found one.
    pub factor: Option<String>,
    pub note: String,
}

/// Largest truncation tried by the escalation schedule.
pub const MAX_K: usize = 16;

pub fn k_schedule(k0: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut k = k0.max(1);
    while k < MAX_K {
        out.push(k);
        k *= 2;
    }
    out.push(MAX_K.max(k0));
    out.dedup();
    out
}

/// A random nonzero coordinate vector with small supports.
pub fn random_vector(module: &ContractionModule, rng: &mut ChaCha8Rng) -> ModVec {
    let ctx = module.ctx();
    let n = ctx.n();
    loop {
        let mut v = module.zero();
        for x in v.iter_mut() {
            if rng.gen_bool(0.4) {
                continue;
            }
            for _ in 0..rng.gen_range(1..=2) {
                let mut e: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-1..=1)).collect();
                e.push(0);
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-3..=3);
                }
                x.add_term(e, Scalar::from_int(c));
            }
        }
        if !module.is_zero(&v) {
            return v;
        }
    }
}

/// Splits an orbit column into univariate polynomials after clearing the
/// common power of `x`.
fn column_polys(col: &ModVec) -> Vec<UniPoly<Scalar>> {
    let lows: Vec<i64> = col.iter().flat_map(|b| b.support().map(|a| a[0])).collect();
    let low = lows.iter().copied().min().unwrap_or(0);
    col.iter()
        .map(|b| {
            let high = b.support().map(|a| a[0]).max().unwrap_or(low);
            let mut c = vec![Scalar::zero(); (high - low + 1).max(0) as usize];
            for (a, mu) in b.terms() {
                c[(a[0] - low) as usize] = mu.clone();
            }
            UniPoly::new(c)
        })
        .collect()
}

/// Column polynomials reduced mod `p`; `None` if a denominator vanishes.
fn column_polys_mod_p(col: &[UniPoly<Scalar>], spec: &Specialization) -> Option<Vec<PolyP>> {
    col.iter()
        .map(|p| {
            p.coeffs()
                .iter()
                .map(|c| spec.eval(c))
                .collect::<Option<Vec<u64>>>()
        })
        .collect()
}

fn render_mod_p(p: &PolyP, prime: u64) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}*x1"),
            _ => format!("{c}*x1^{i}"),
        })
        .collect();
    format!(
        "{} (mod {prime})",
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    )
}

/// `d`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (d <= n).then(|| (0..d).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = d;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < n - d + i {
                next[i] += 1;
                for j in i + 1..d {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Maximal minors whose gcd mod `p` is a monomial, greedily keeping the
/// ones that lower the running gcd.
fn coprime_minors_mod_p(
    cols: &[Vec<PolyP>],
    d: usize,
    field: PrimeField,
) -> Option<Vec<Vec<usize>>> {
    let mut g: Option<PolyP> = None;
    let mut keep = Vec::new();
    for (tried, set) in subsets(cols.len(), d).enumerate() {
        if tried >= MINOR_BUDGET {
            return None;
        }
        let m: Vec<Vec<PolyP>> = (0..d)
            .map(|r| set.iter().map(|&j| cols[j][r].clone()).collect())
            .collect();
        let mi = polymodp::strip_x(&polymodp::det(field, &m));
        if mi.is_empty() {
            continue;
        }
        let next = match &g {
            None => mi,
            Some(h) => polymodp::gcd(field, h, &mi),
        };
        if g.as_ref().map_or(true, |h| next.len() < h.len()) {
            keep.push(set);
            if next.len() == 1 {
                return Some(keep);
            }
            g = Some(next);
        }
    }
    None
}

/// Number of minors examined before the search gives up.
const MINOR_BUDGET: usize = 20_000;

/// Specialization points for the parameters `q_k`.
fn rational_points(r: usize) -> impl Iterator<Item = Vec<BigRational>> {
    let base: [(i64, i64); 8] = [
        (2, 1),
        (3, 1),
        (5, 2),
        (7, 3),
        (11, 1),
        (13, 5),
        (17, 7),
        (19, 2),
    ];
    (0..base.len()).map(move |i| {
        (0..r)
            .map(|k| {
                let (a, b) = base[(i + k) % base.len()];
                BigRational::new(a.into(), b.into())
            })
            .collect()
    })
}

/// Exact check that the given minors have gcd one in `F[x, 1/x]`.
///
/// In generic mode the minors are specialized at a rational point that keeps
/// every leading and constant coefficient nonzero. A common factor of
/// positive degree over `F` would survive as a common factor of the same
/// degree, so a trivial gcd over `Q` settles the question over `F`.
fn minors_coprime(
    cols: &[&Vec<UniPoly<Scalar>>],
    sets: &[Vec<usize>],
    d: usize,
    mode: FieldMode,
) -> Option<String> {
    let minors: Vec<UniPoly<Scalar>> = sets
        .iter()
        .map(|set| {
            let m: Vec<Vec<UniPoly<Scalar>>> = (0..d)
                .map(|r| set.iter().map(|&j| cols[j][r].clone()).collect())
                .collect();
            det(&m).strip_x()
        })
        .filter(|m| !m.is_zero())
        .collect();
    if minors.is_empty() {
        return None;
    }
    match mode {
        FieldMode::RootOfUnity { .. } => {
            let g = minors
                .iter()
                .skip(1)
                .fold(minors[0].monic(), |g, m| gcd(&g, m));
            (g.degree() == Some(0)).then(|| format!("{} maximal minors with gcd 1", minors.len()))
        }
        FieldMode::Generic { r } => {
            for point in rational_points(r) {
                let spec: Option<Vec<UniPoly<Scalar>>> = minors
                    .iter()
                    .map(|m| {
                        let c: Option<Vec<Scalar>> = m
                            .coeffs()
                            .iter()
                            .map(|x| x.eval_rational(&point).map(Scalar::from_rational))
                            .collect();
                        let c = c?;
                        let ends_nonzero = !c[0].is_zero() && !c.last().unwrap().is_zero();
                        ends_nonzero.then(|| UniPoly::new(c))
                    })
                    .collect();
                let Some(spec) = spec else { continue };
                let g = spec.iter().skip(1).fold(spec[0].monic(), |g, m| gcd(&g, m));
                if g.degree() == Some(0) {
                    let at: Vec<String> = point.iter().map(|x| x.to_string()).collect();
                    return Some(format!(
                        "{} maximal minors with gcd 1 (checked at q = ({}))",
                        minors.len(),
                        at.join(", ")
                    ));
                }
            }
            None
        }
    }
}

/// Whether the columns `w t^k`, `|k| <= K`, span `S` over `F[x^{+-1}]`,
/// i.e. whether their maximal minors generate the unit ideal. A mod-`p`
/// Hermite form picks the truncation and a set of minors, which are then
/// checked exactly. When the screen fails at every truncation the sample is
/// reported as not generating; this can only withhold a certificate.
fn check_sample(
    module: &ContractionModule,
    w: &ModVec,
    schedule: &[usize],
    spec: &[Specialization],
) -> (bool, Option<usize>, Vec<String>) {
    let d = module.d();
    let mut last = Vec::new();
    for &k in schedule {
        let cols: Vec<(i64, Vec<UniPoly<Scalar>>)> = module
            .orbit_columns(w, k)
            .iter()
            .map(|(s, c)| (*s, column_polys(c)))
            .collect();
        let exact: Vec<&Vec<UniPoly<Scalar>>> = cols.iter().map(|(_, c)| c).collect();
        let Some(reduced) = spec.iter().find_map(|sp| {
            cols.iter()
                .map(|(_, c)| column_polys_mod_p(c, sp))
                .collect::<Option<Vec<_>>>()
                .map(|r| (sp, r))
        }) else {
            last = vec!["no admissible reduction mod p".into()];
            continue;
        };
        let (sp, reduced) = reduced;
        let piv = column_hermite_pivots(sp.field, &reduced, d);
        if !(piv.len() == d && piv.iter().all(is_laurent_unit)) {
            last = piv.iter().map(|p| render_mod_p(p, sp.field.p)).collect();
            continue;
        }
        let found = coprime_minors_mod_p(&reduced, d, sp.field).and_then(|sets| {
            minors_coprime(&exact, &sets, d, module.ctx().mode()).map(|n| (sets, n))
        });
        match found {
            Some((sets, note)) => {
                let shifts: Vec<Vec<i64>> = sets
                    .iter()
                    .map(|s| s.iter().map(|&j| cols[j].0).collect())
                    .collect();
                return (
                    true,
                    Some(k),
                    vec![format!("{note}; column shifts {shifts:?}")],
                );
            }
            None => last = vec!["generates mod p, exact minor certificate not found".into()],
        }
    }
    (false, None, last)
}

/// Samples derived from linear factors of `f` found by the root screens
/// (bound 2): the residue of the cofactor `h` for `f = h (t - a)`, and the
/// residue of `t - a` for `f = (t - a) h`. Both generate proper submodules.
pub fn structured_samples(
    module: &ContractionModule,
) -> (
    Option<RootWitness>,
    Option<RootWitness>,
    Vec<(SampleOrigin, ModVec)>,
) {
    let fnorm = &module.normalized().element;
    let right = monomial_right_root_screen(fnorm, 2);
    let left = left_root_screen(fnorm, 2);
    let mut out = Vec::new();
    if let Some(w) = &right {
        out.push((
            SampleOrigin::RightFactorCofactor,
            module.residue(&w.cofactor),
        ));
    }
    if let Some(w) = &left {
        out.push((SampleOrigin::LeftFactor, module.residue(&w.factor)));
    }
    out.retain(|(_, v)| !module.is_zero(v));
    (right, left, out)
}

/// Per-sample generation certificates for `n = 2`. Samples derived from any
/// linear factor found by the root screens come first, followed by seeded
/// random samples.
pub fn certify_simplicity_contraction(
    module: &ContractionModule,
    samples: usize,
    k0: usize,
    seed: u64,
) -> Result<SimplicityCertificate> {
    let ctx = module.ctx();
    if ctx.n() != 2 {
        return Err(Error::UnsupportedRank(format!(
            "generation certificates need n = 2, got n = {}; use the criticality check",
            ctx.n()
        )));
    }
    skew::require_commutative_b(ctx)?;
    let schedule = k_schedule(k0);
    let (right, left, mut all) = structured_samples(module);
    let n_random = samples.saturating_sub(all.len());
    for i in 0..n_random {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ i as u64);
        all.push((SampleOrigin::Random, random_vector(module, &mut rng)));
    }
    let spec = [
        Specialization::new(ctx.mode(), seed),
        Specialization::new(ctx.mode(), seed ^ 0xA5A5),
    ];
    let results: Vec<SampleResult> = all
        .par_iter()
        .enumerate()
        .map(|(index, (origin, w))| {
            let (generates, k_used, inv) = check_sample(module, w, &schedule, &spec);
            SampleResult {
                index,
                origin: origin.clone(),
                w: w.iter().map(|b| b.render()).collect(),
                generates,
                k_used,
                evidence: inv,
            }
        })
        .collect();
    let certified = results.iter().all(|r| r.generates);
    let factor = right.as_ref().or(left.as_ref()).map(describe_witness);
    let note = if certified {
        format!(
            "all {} samples generate the module (evidence at sample size {}, not a proof)",
            results.len(),
            results.len()
        )
    } else if factor.is_some() {
        "a sample fails to generate and f has a linear factor: the right ideal is likely not maximal"
            .to_string()
    } else {
        "a sample fails to generate up to the largest truncation; counterexample candidate"
            .to_string()
    };
    Ok(SimplicityCertificate {
        certified,
        max_k_used: results.iter().filter_map(|r| r.k_used).max(),
        samples: results,
        k_schedule: schedule,
        factor,
        note,
    })
}

pub fn describe_witness(w: &RootWitness) -> String {
    match w.side {
        skew::screen::FactorSide::Right => {
            format!("f = ({}) * ({})", w.cofactor.render(), w.factor.render())
        }
        skew::screen::FactorSide::Left => {
            format!("f = ({}) * ({})", w.factor.render(), w.cofactor.render())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse;
    use crate::lattice::ExponentSystem;
    use crate::scalars::FieldMode;
    use std::sync::Arc;

    fn plane() -> Context {
        Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }))
    }

    fn el(c: &Context, s: &str) -> AlgebraElement {
        parse(c, s).unwrap()
    }

    #[test]
    fn build_examples() {
        let c = plane();
        let m = build_contraction(&el(&c, "t^2 - 1")).unwrap();
        assert_eq!(m.d(), 2);
        let v = vec![el(&c, "x1"), el(&c, "2 + x1^-1")];
        let img = m.act_generator(&v, 1, 1);
        assert_eq!(
            img,
            vec![sigma_unchecked(&v[1], -1), sigma_unchecked(&v[0], -1)]
        );
        let img = m.act_generator(&v, 0, 1);
        assert_eq!(img, vec![el(&c, "x1^2"), el(&c, "2*x1 + 1")]);

        let m1 = build_contraction(&el(&c, "t - 1")).unwrap();
        assert_eq!(m1.d(), 1);
        let m3 = build_contraction(&el(&c, "t^2 + x1*t + 1")).unwrap();
        let img = m3.act_generator(&v, 1, 1);
        let expect = m3.residue(&m3.to_element(&v).mul(&el(&c, "t")));
        assert_eq!(img, expect);
        assert!(build_contraction(&el(&c, "t + (1 + x1)")).is_err());
    }

    #[test]
    fn action_matches_reduction() {
        let c = plane();
        let m = build_contraction(&el(&c, "t^3 - 2*x1*t + q1*x1^-1")).unwrap();
        let a = el(&c, "x1^2*t^-2 + 3*t^4 - x1 + (q1 + 1)*x1^-1*t");
        assert_eq!(m.act(&m.basis(0), &a), m.residue(&a));
    }

    #[test]
    fn gk_is_n_minus_one() {
        let c = plane();
        let m = build_contraction(&el(&c, "t - 1")).unwrap();
        let r = gk_certified(&m, "m");
        assert_eq!((r.lower, r.upper), (1, 1));
    }

    #[test]
    fn criticality_examples() {
        let c = plane();
        let m = build_contraction(&el(&c, "t^2 - 1")).unwrap();
        let w = m.residue(&el(&c, "t - 1"));
        let v = criticality_check(&m, &w, 3).unwrap();
        assert_eq!(v.rank, 1);
        assert!(!v.torsion);
        let m = build_contraction(&el(&c, "t^2 - x1")).unwrap();
        assert!(criticality_check(&m, &m.basis(0), 3).unwrap().torsion);
        let w = vec![el(&c, "1"), el(&c, "1")];
        assert!(criticality_check(&m, &w, 3).unwrap().torsion);
    }

    #[test]
    fn simplicity_examples() {
        let c = plane();
        let spec = [Specialization::new(c.mode(), 7)];
        let m = build_contraction(&el(&c, "t - x1")).unwrap();
        let cert = certify_simplicity_contraction(&m, 3, 1, 7).unwrap();
        assert!(cert.certified);
        assert!(check_sample(&m, &vec![el(&c, "x1 - 1")], &[1], &spec).0);

        let m = build_contraction(&el(&c, "t^2 - 1")).unwrap();
        let cert = certify_simplicity_contraction(&m, 4, 1, 7).unwrap();
        assert!(!cert.certified);
        assert!(cert.factor.is_some());
        let w = m.residue(&el(&c, "t - 1"));
        assert!(!check_sample(&m, &w, &k_schedule(1), &spec).0);

        let m = build_contraction(&el(&c, "t^2 - x1")).unwrap();
        assert_eq!(check_sample(&m, &m.basis(0), &[1], &spec).1, Some(1));
    }
}
