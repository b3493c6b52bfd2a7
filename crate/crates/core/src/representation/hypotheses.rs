//! Hypothesis flags gating the simplicity results, the lower bound
//! `gk(M) >= n - dim`, and the survey of GK dimensions of simple modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::contraction::{
    build_contraction, certify_simplicity_contraction, criticality_check, gk_certified,
    random_vector,
};
use super::induced::{build_induced, induced_simplicity_verdict, Character, InducedVerdict};
use super::{GkReport, SubgroupVerdict, TorsionVerdict};
use crate::algebra::{AlgebraElement, Context};
use crate::error::{Error, Result};
use crate::lattice::{
    algebra_dimension, center_lattice, coordinate_family, AlgebraDimension, ExponentSystem, Split,
};
use crate::scalars::Scalar;
use crate::skew::b_is_commutative;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub b_commutative: bool,
    pub center_trivial: bool,
    pub dim_is_1: bool,
    pub dim_is_n_minus_1: bool,
}

pub fn check_hypotheses(system: &ExponentSystem, split: &Split) -> Result<Hypotheses> {
    let s = system.split(split)?;
    let n = s.n();
    let dim = algebra_dimension(&s);
    Ok(Hypotheses {
        b_commutative: b_is_commutative(&Arc::new(s.clone())),
        center_trivial: center_lattice(&s).rank() == 0,
        dim_is_1: dim.exact() == Some(1),
        dim_is_n_minus_1: dim.exact() == Some(n - 1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CorollaryVerdict {
    Pass {
        gk: usize,
        bound: usize,
    },
    /// The dimension is only known within bounds that straddle the module.
    Inconclusive {
        gk: usize,
        bound_lower: usize,
        bound_upper: usize,
    },
    Violation {
        gk: usize,
        bound: usize,
    },
}

impl CorollaryVerdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, CorollaryVerdict::Violation { .. })
    }
}

/// `gk(M) >= n - dim(F*A)`.
pub fn corollary_2_4_check(report: &GkReport, system: &ExponentSystem) -> CorollaryVerdict {
    let n = system.n();
    let AlgebraDimension { lower, upper } = algebra_dimension(system);
    if report.lower >= n - lower {
        CorollaryVerdict::Pass {
            gk: report.lower,
            bound: n - lower,
        }
    } else if report.upper < n - upper {
        CorollaryVerdict::Violation {
            gk: report.upper,
            bound: n - upper,
        }
    } else {
        CorollaryVerdict::Inconclusive {
            gk: report.lower,
            bound_lower: n - upper,
            bound_upper: n - lower,
        }
    }
}

/// `gk(W) = gk(V) + 1 = 1` for a module induced from a character.
pub fn induced_gk_report(ctx: &Context, id: &str) -> GkReport {
    let n = ctx.n();
    let verdicts = coordinate_family(n)
        .into_iter()
        .map(|sub| {
            let idx: Vec<usize> = sub
                .basis
                .iter()
                .map(|v| v.iter().position(|&x| x == 1).unwrap())
                .collect();
            // each w_k is an eigenvector of every x_j, j < n
            let verdict = if idx.iter().any(|&i| i + 1 < n) {
                TorsionVerdict::Torsion
            } else {
                TorsionVerdict::NotTorsion
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
        lower: 1,
        upper: 1,
        verdicts,
        witnesses: vec![
            "free of rank 1 over F[t, t^-1]".into(),
            "finite-dimensional over the coefficient subalgebra in each degree".into(),
        ],
        growth: None,
        growth_flag: false,
    }
}

#[derive(Clone, Debug)]
pub struct SurveyEntry {
    pub name: String,
    pub system: ExponentSystem,
    pub split: Split,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyOptions {
    pub characters: usize,
    pub polynomials: usize,
    /// Samples per simplicity certificate or criticality test.
    pub samples: usize,
    pub k: usize,
    pub seed: u64,
    /// Maximum number of modules examined across the corpus.
    pub budget: usize,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            characters: 2,
            polynomials: 3,
            samples: 4,
            k: 2,
            seed: 1,
            budget: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModuleRecord {
    pub id: String,
    pub kind: String,
    pub description: String,
    /// Simplicity (or criticality) was certified on every sample.
    pub certified: bool,
    pub gk: Option<usize>,
    pub corollary: Option<CorollaryVerdict>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub n: usize,
    pub dimension: AlgebraDimension,
    pub hypotheses: Hypotheses,
    pub modules: Vec<ModuleRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyReport {
    pub entries: Vec<EntryReport>,
    pub skipped: Vec<String>,
    /// Certified GK dimensions with multiplicities.
    pub multiset: BTreeMap<usize, usize>,
    /// Modules whose certified GK dimension lies outside `{1, n-1}`.
    pub anomalies: Vec<String>,
    pub corollary_violations: Vec<String>,
    pub pass: bool,
}

fn random_b_element(ctx: &Context, rng: &mut ChaCha8Rng, terms: usize) -> AlgebraElement {
    let n = ctx.n();
    let mut out = AlgebraElement::zero(ctx);
    for _ in 0..terms {
        let mut e: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-1..=1)).collect();
        e.push(0);
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        out.add_term(e, Scalar::from_int(c));
    }
    out
}

/// A random unitary `t^d + sum_{0<i<d} t^i beta_i + c x^b` with `d` in `{1, 2}`.
pub fn random_unitary(ctx: &Context, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let n = ctx.n();
    let d = rng.gen_range(1..=2i64);
    let t = |i: i64| AlgebraElement::generator(ctx, n - 1, i);
    let mut f = t(d);
    for i in 1..d {
        let terms = rng.gen_range(0..=2);
        f = f.add(&t(i).mul(&random_b_element(ctx, rng, terms)));
    }
    let mut unit = AlgebraElement::zero(ctx);
    while unit.is_zero() {
        unit = random_b_element(ctx, rng, 1);
    }
    f.add(&unit)
}

fn sub_rng(seed: u64, a: u64, b: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xC2B2_AE3D_27D4_EB4F),
    )
}

fn survey_entry(
    idx: usize,
    entry: &SurveyEntry,
    opts: &SurveyOptions,
    hyp: Hypotheses,
) -> Result<EntryReport> {
    let sys = entry.system.split(&entry.split)?;
    let n = sys.n();
    let ctx: Context = Arc::new(sys.clone());
    let mut modules = Vec::new();
    if hyp.b_commutative {
        for c in 0..opts.characters {
            let mut rng = sub_rng(opts.seed, idx as u64, c as u64);
            let values: Vec<Scalar> = (0..n - 1)
                .map(|_| {
                    let mut v = 0;
                    while v == 0 {
                        v = rng.gen_range(-5..=5);
                    }
                    Scalar::from_int(v)
                })
                .collect();
            let id = format!("{}/induced{c}", entry.name);
            let desc = format!(
                "chi = ({})",
                values
                    .iter()
                    .map(|v| v.render())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let w = build_induced(&Character::new(&ctx, values)?)?;
            let verdict = induced_simplicity_verdict(&w)?;
            let (certified, note) = match &verdict {
                InducedVerdict::Simple { .. } => (true, "weights pairwise distinct".to_string()),
                InducedVerdict::ProperSubmodule { period, .. } => {
                    (false, format!("proper submodule, weight period {period}"))
                }
            };
            let rep = induced_gk_report(&ctx, &id);
            modules.push(ModuleRecord {
                id,
                kind: "induced".into(),
                description: desc,
                certified,
                gk: rep.exact(),
                corollary: Some(corollary_2_4_check(&rep, &sys)),
                note,
            });
        }
    }
    for p in 0..opts.polynomials {
        let mut rng = sub_rng(opts.seed, idx as u64, 1000 + p as u64);
        let f = random_unitary(&ctx, &mut rng);
        let id = format!("{}/contraction{p}", entry.name);
        let m = build_contraction(&f)?;
        let rep = gk_certified(&m, &id);
        let (certified, note) = if n == 2 && hyp.b_commutative {
            let cert = certify_simplicity_contraction(&m, opts.samples, opts.k, rng.gen())?;
            (cert.certified, cert.note)
        } else if hyp.b_commutative && hyp.center_trivial {
            let mut ok = true;
            for s in 0..opts.samples {
                let mut r = sub_rng(opts.seed, idx as u64, 2000 + (p * 1000 + s) as u64);
                let w = random_vector(&m, &mut r);
                ok &= criticality_check(&m, &w, opts.k)?.torsion;
            }
            (
                ok,
                format!(
                    "criticality {} on {} samples",
                    if ok { "holds" } else { "fails" },
                    opts.samples
                ),
            )
        } else {
            (
                false,
                "hypotheses for the simplicity results do not hold".into(),
            )
        };
        modules.push(ModuleRecord {
            id,
            kind: "contraction".into(),
            description: format!("f = {}", f.render()),
            certified,
            gk: rep.exact(),
            corollary: Some(corollary_2_4_check(&rep, &sys)),
            note,
        });
    }
    Ok(EntryReport {
        name: entry.name.clone(),
        n,
        dimension: algebra_dimension(&sys),
        hypotheses: hyp,
        modules,
    })
}

/// Collects the certified GK dimensions of simple modules over each system
/// with `dim = n - 1` and checks them against `{1, n - 1}`.
pub fn survey_conjecture(corpus: &[SurveyEntry], opts: &SurveyOptions) -> Result<SurveyReport> {
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    let mut used = 0;
    for (idx, entry) in corpus.iter().enumerate() {
        let hyp = check_hypotheses(&entry.system, &entry.split)?;
        if !hyp.dim_is_n_minus_1 {
            skipped.push(format!(
                "{}: dimension {} is not n - 1 = {}",
                entry.name,
                algebra_dimension(&entry.system),
                entry.system.n() - 1
            ));
            continue;
        }
        used += opts.characters + opts.polynomials;
        if used > opts.budget {
            return Err(Error::BudgetExceeded(format!(
                "survey needs more than {} modules",
                opts.budget
            )));
        }
        entries.push(survey_entry(idx, entry, opts, hyp)?);
    }
    let mut multiset = BTreeMap::new();
    let mut anomalies = Vec::new();
    let mut corollary_violations = Vec::new();
    for e in &entries {
        for m in &e.modules {
            if m.corollary.as_ref().is_some_and(|c| c.is_violation()) {
                corollary_violations.push(m.id.clone());
            }
            if !m.certified {
                continue;
            }
            if let Some(g) = m.gk {
                *multiset.entry(g).or_insert(0) += 1;
                if g != 1 && g != e.n - 1 {
                    anomalies.push(format!("{}: gk = {g}", m.id));
                }
            } else {
                anomalies.push(format!("{}: gk not determined", m.id));
            }
        }
    }
    let pass = anomalies.is_empty() && corollary_violations.is_empty();
    Ok(SurveyReport {
        entries,
        skipped,
        multiset,
        anomalies,
        corollary_violations,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldMode;

    fn plane() -> ExponentSystem {
        ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 })
    }

    #[test]
    fn flags() {
        let h = check_hypotheses(&plane(), &Split::standard(2)).unwrap();
        assert_eq!(
            h,
            Hypotheses {
                b_commutative: true,
                center_trivial: true,
                dim_is_1: true,
                dim_is_n_minus_1: true
            }
        );
        let root = ExponentSystem::quantum_plane(FieldMode::RootOfUnity { m: 3 });
        let h = check_hypotheses(&root, &Split::standard(2)).unwrap();
        assert_eq!(
            h,
            Hypotheses {
                b_commutative: true,
                center_trivial: false,
                dim_is_1: false,
                dim_is_n_minus_1: false
            }
        );
        let three = ExponentSystem::single(
            FieldMode::Generic { r: 1 },
            vec![vec![0, 1, 0], vec![-1, 0, 0], vec![0, 0, 0]],
        )
        .unwrap();
        let h = check_hypotheses(&three, &Split::standard_with_t(3, 2)).unwrap();
        assert_eq!(
            h,
            Hypotheses {
                b_commutative: true,
                center_trivial: false,
                dim_is_1: false,
                dim_is_n_minus_1: true
            }
        );
    }

    #[test]
    fn corollary() {
        let ctx: Context = Arc::new(plane());
        let rep = induced_gk_report(&ctx, "w");
        assert_eq!(
            corollary_2_4_check(&rep, &plane()),
            CorollaryVerdict::Pass { gk: 1, bound: 1 }
        );
        let mut bad = rep.clone();
        bad.lower = 0;
        bad.upper = 0;
        assert!(corollary_2_4_check(&bad, &plane()).is_violation());
    }

    #[test]
    fn survey_small() {
        let empty = survey_conjecture(&[], &SurveyOptions::default()).unwrap();
        assert!(empty.pass && empty.entries.is_empty());
        let corpus = vec![
            SurveyEntry {
                name: "plane".into(),
                system: plane(),
                split: Split::standard(2),
            },
            SurveyEntry {
                name: "root3".into(),
                system: ExponentSystem::quantum_plane(FieldMode::RootOfUnity { m: 3 }),
                split: Split::standard(2),
            },
        ];
        let r = survey_conjecture(&corpus, &SurveyOptions::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.skipped.len(), 1);
        assert!(r.multiset.keys().all(|&g| g == 1));
        assert!(r.multiset.get(&1).copied().unwrap_or(0) >= 2);
    }
}
