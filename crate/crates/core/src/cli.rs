//! Subcommands of the `qtorus` binary. Each returns the text printed on
//! stdout, the structured report and the exit code.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::text::{parse, parse_scalar};
use crate::algebra::Context;
use crate::config::{AlgebraConfig, CorpusConfig};
use crate::error::{Error, Result};
use crate::lattice::{
    algebra_dimension, brute_force_max_isotropic, center_lattice, ExponentSystem, Split,
};
use crate::representation::contraction::{describe_witness, random_vector, structured_samples};
use crate::representation::hypotheses::induced_gk_report;
use crate::representation::{
    build_contraction, build_induced, certify_simplicity_contraction, check_hypotheses,
    corollary_2_4_check, criticality_check, gk_certified, gk_growth_estimate,
    induced_simplicity_verdict, survey_conjecture, Character, CorollaryVerdict, InducedVerdict,
    SurveyEntry, SurveyOptions,
};
use crate::scalars::FieldMode;
use crate::selftest::{oracle_bound, run_selftest, Level};
use crate::skew::b_is_commutative;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) | Error::SearchSpaceTooLarge(_) => EXIT_BUDGET,
        Error::Verification(_) => EXIT_FAILURE,
        _ => EXIT_INPUT,
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub report: Value,
    pub exit: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Options {
    pub seed: u64,
    pub samples: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub growth_steps: usize,
    pub bound: Option<i64>,
    pub budget: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 1,
            samples: 20,
            k: 2,
            growth_steps: 24,
            bound: None,
            budget: 1000,
        }
    }
}

fn envelope(
    command: &str,
    config: Option<&AlgebraConfig>,
    opts: &Options,
    results: Value,
) -> Value {
    json!({
        "tool": "qtorus",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": config,
        "options": opts,
        "results": results,
    })
}

fn invariants(sys: &ExponentSystem, split: &Split) -> Result<(Value, String)> {
    let center = center_lattice(sys);
    let dim = algebra_dimension(sys);
    let hyp = check_hypotheses(sys, split)?;
    let text = format!(
        "center: rank {} basis {:?}\ndimension: {}\nhypotheses: B commutative {}, center trivial {}, dim = 1 {}, dim = n-1 {}\n",
        center.rank(),
        center.basis,
        dim,
        hyp.b_commutative,
        hyp.center_trivial,
        hyp.dim_is_1,
        hyp.dim_is_n_minus_1
    );
    let v = json!({
        "center": { "rank": center.rank(), "basis": center.basis },
        "dimension": { "lower": dim.lower, "upper": dim.upper, "exact": dim.exact().is_some() },
        "hypotheses": hyp,
    });
    Ok((v, text))
}

pub fn cmd_algebra(cfg: &AlgebraConfig, opts: &Options) -> Result<Outcome> {
    let sys = cfg.system()?;
    let split = cfg.split()?;
    let (inv, body) = invariants(&sys, &split)?;
    Ok(Outcome {
        text: format!("algebra: n = {}, {}\n{body}", sys.n(), sys.mode()),
        report: envelope("algebra", Some(cfg), opts, json!({ "invariants": inv })),
        exit: EXIT_OK,
    })
}

pub fn cmd_dim_oracle(cfg: &AlgebraConfig, opts: &Options) -> Result<Outcome> {
    let sys = cfg.system()?;
    if sys.n() > 4 {
        return Err(Error::UnsupportedRank(format!(
            "the oracle runs for n <= 4, got n = {}",
            sys.n()
        )));
    }
    let bound = opts.bound.unwrap_or_else(|| oracle_bound(sys.mode()));
    let dim = algebra_dimension(&sys);
    let found = brute_force_max_isotropic(&sys, bound)?;
    // the search only certifies a lower bound
    let agree = match dim.exact() {
        Some(d) => d == found.rank,
        None => found.rank <= dim.upper,
    };
    let text = format!(
        "dimension: {dim}\nbrute force (bound {bound}): rank {} basis {:?} ({} nodes)\n{}\n",
        found.rank,
        found.basis,
        found.nodes,
        if agree { "agree" } else { "MISMATCH" }
    );
    Ok(Outcome {
        text,
        report: envelope(
            "dim-oracle",
            Some(cfg),
            opts,
            json!({
                "dimension": dim,
                "exact": dim.exact().is_some(),
                "bound": bound,
                "search": found,
                "agree": agree,
            }),
        ),
        exit: if agree { EXIT_OK } else { EXIT_FAILURE },
    })
}

fn split_context(cfg: &AlgebraConfig) -> Result<(ExponentSystem, Split, Context)> {
    let sys = cfg.system()?;
    let split = cfg.split()?;
    let ctx: Context = Arc::new(sys.split(&split)?);
    Ok((sys, split, ctx))
}

pub fn cmd_contract(cfg: &AlgebraConfig, f_text: &str, opts: &Options) -> Result<Outcome> {
    let (sys, _, ctx) = split_context(cfg)?;
    let f = parse(&ctx, f_text)?;
    let module = build_contraction(&f)?;
    let n = ctx.n();
    let mut text = format!(
        "f = {} (degree {}, normalized {})\n",
        f.render(),
        module.d(),
        module.normalized().element.render()
    );
    let mut gk = gk_certified(&module, "S");
    let growth = gk_growth_estimate(&module, opts.growth_steps, opts.seed)?;
    gk.attach_growth(growth.clone());
    text.push_str(&format!(
        "gk: {} (certified)\n  {}\n  {}\n",
        n - 1,
        gk.witnesses[0],
        gk.witnesses[1]
    ));
    text.push_str(&format!(
        "growth: f(m) = {:?}\n  slope {:.4} over m in [{}, {}]{}\n",
        growth.table,
        growth.slope,
        growth.window.0,
        growth.window.1,
        if gk.growth_flag { "  FLAGGED" } else { "" }
    ));
    let (right, left, structured) = structured_samples(&module);
    let factor = right.as_ref().or(left.as_ref()).map(describe_witness);
    text.push_str(&format!(
        "factor screen: {}\n",
        factor.as_deref().unwrap_or("no linear factor found")
    ));
    let mut results = serde_json::Map::new();
    let mut crit_json = Value::Null;
    if b_is_commutative(&ctx) {
        let mut ws = structured.clone();
        for i in 0..opts.samples {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(i as u64 * 7919));
            ws.push((
                crate::representation::contraction::SampleOrigin::Random,
                random_vector(&module, &mut rng),
            ));
        }
        let mut verdicts = Vec::new();
        let mut torsion = 0;
        for (origin, w) in &ws {
            let v = criticality_check(&module, w, opts.k.max(module.d()))?;
            torsion += usize::from(v.torsion);
            verdicts.push(json!({
                "origin": origin,
                "w": w.iter().map(|b| b.render()).collect::<Vec<_>>(),
                "verdict": v,
            }));
        }
        text.push_str(&format!(
            "criticality: {torsion}/{} quotients S/wA torsion{}\n",
            ws.len(),
            if torsion == ws.len() {
                ""
            } else {
                " (criticality fails)"
            }
        ));
        crit_json = json!({ "samples": verdicts, "all_torsion": torsion == ws.len() });
    } else {
        text.push_str("criticality: skipped, coefficient subalgebra not commutative\n");
    }
    let mut cert_json = Value::Null;
    if n == 2 && b_is_commutative(&ctx) {
        let cert = certify_simplicity_contraction(&module, opts.samples, opts.k, opts.seed)?;
        text.push_str(&format!(
            "simplicity: {} on {} samples (K schedule {:?}, max K used {:?})\n  {}\n",
            if cert.certified {
                "certified"
            } else {
                "NOT certified"
            },
            cert.samples.len(),
            cert.k_schedule,
            cert.max_k_used,
            cert.note
        ));
        cert_json = serde_json::to_value(&cert).expect("serializable");
    } else {
        text.push_str("simplicity: generation certificates need n = 2; criticality only\n");
    }
    let cor = corollary_2_4_check(&gk, &sys);
    text.push_str(&format!("lower bound n - dim: {}\n", corollary_text(&cor)));
    results.insert(
        "gk".into(),
        serde_json::to_value(&gk).expect("serializable"),
    );
    results.insert("factor".into(), json!(factor));
    results.insert("criticality".into(), crit_json);
    results.insert("simplicity".into(), cert_json);
    results.insert(
        "corollary".into(),
        serde_json::to_value(&cor).expect("serializable"),
    );
    let exit = if gk.growth_flag || cor.is_violation() {
        EXIT_FAILURE
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        text,
        report: envelope("contract", Some(cfg), opts, Value::Object(results)),
        exit,
    })
}

fn corollary_text(c: &CorollaryVerdict) -> String {
    match c {
        CorollaryVerdict::Pass { gk, bound } => format!("pass ({gk} >= {bound})"),
        CorollaryVerdict::Inconclusive {
            gk,
            bound_lower,
            bound_upper,
        } => format!("inconclusive (gk {gk}, bound between {bound_lower} and {bound_upper})"),
        CorollaryVerdict::Violation { gk, bound } => format!("VIOLATION ({gk} < {bound})"),
    }
}

pub fn cmd_induce(cfg: &AlgebraConfig, chi_text: &[String], opts: &Options) -> Result<Outcome> {
    let (sys, _, ctx) = split_context(cfg)?;
    let values = chi_text
        .iter()
        .map(|s| parse_scalar(&ctx, s))
        .collect::<Result<Vec<_>>>()?;
    let chi = Character::new(&ctx, values)?;
    let w = build_induced(&chi)?;
    let mut text = format!(
        "character: ({})\n",
        chi.values()
            .iter()
            .map(|v| v.render())
            .collect::<Vec<_>>()
            .join(", ")
    );
    let mut table = Vec::new();
    for k in -3..=3 {
        let row: Vec<String> = w.weights(k).iter().map(|x| x.render()).collect();
        text.push_str(&format!("  w_{k}: weights ({})\n", row.join(", ")));
        table.push(json!({ "k": k, "weights": row }));
    }
    let verdict = induced_simplicity_verdict(&w)?;
    match &verdict {
        InducedVerdict::Simple {
            generator,
            exponent,
            checked_range,
        } => text.push_str(&format!(
            "simple: weight of x{generator} has exponent {exponent:?} != 0, so weights are pairwise distinct (also checked for |k| <= {checked_range})\n"
        )),
        InducedVerdict::ProperSubmodule {
            period,
            quotient_dim,
            witness,
        } => text.push_str(&format!(
            "not simple: {witness} is a proper submodule, weight period {period}, quotient dimension {quotient_dim}\n"
        )),
    }
    let gk = induced_gk_report(&ctx, "W");
    let cor = corollary_2_4_check(&gk, &sys);
    text.push_str(&format!(
        "gk: 1 = gk(V) + 1\nlower bound n - dim: {}\n",
        corollary_text(&cor)
    ));
    Ok(Outcome {
        text,
        report: envelope(
            "induce",
            Some(cfg),
            opts,
            json!({ "weights": table, "verdict": verdict, "gk": gk, "corollary": cor }),
        ),
        exit: if cor.is_violation() {
            EXIT_FAILURE
        } else {
            EXIT_OK
        },
    })
}

/// Built-in corpus: systems with `dim = n - 1` plus one root-of-unity system
/// that the survey must skip.
pub fn default_corpus() -> Vec<SurveyEntry> {
    let g1 = FieldMode::Generic { r: 1 };
    let g2 = FieldMode::Generic { r: 2 };
    let plane = |k: i64| vec![vec![0, k], vec![-k, 0]];
    let mut e1 = vec![vec![0i64; 3]; 3];
    let mut e2 = vec![vec![0i64; 3]; 3];
    e1[0][2] = 1;
    e1[2][0] = -1;
    e2[1][2] = 1;
    e2[2][1] = -1;
    vec![
        SurveyEntry {
            name: "plane".into(),
            system: ExponentSystem::single(g1, plane(1)).unwrap(),
            split: Split::standard(2),
        },
        SurveyEntry {
            name: "plane-q2".into(),
            system: ExponentSystem::single(g1, plane(2)).unwrap(),
            split: Split::standard(2),
        },
        SurveyEntry {
            name: "plane-r2".into(),
            system: ExponentSystem::new(2, g2, vec![plane(1), plane(-1)]).unwrap(),
            split: Split::standard(2),
        },
        SurveyEntry {
            name: "rank3-r2".into(),
            system: ExponentSystem::new(3, g2, vec![e1, e2]).unwrap(),
            split: Split::standard(3),
        },
        SurveyEntry {
            name: "plane-root3".into(),
            system: ExponentSystem::quantum_plane(FieldMode::RootOfUnity { m: 3 }),
            split: Split::standard(2),
        },
    ]
}

pub fn load_corpus(c: &CorpusConfig) -> Result<Vec<SurveyEntry>> {
    c.system
        .iter()
        .map(|e| {
            let a = e.algebra();
            Ok(SurveyEntry {
                name: e.name.clone(),
                system: a.system()?,
                split: a.split()?,
            })
        })
        .collect()
}

pub fn cmd_survey(corpus: &[SurveyEntry], opts: &Options) -> Result<Outcome> {
    let sopts = SurveyOptions {
        samples: opts.samples.min(8),
        k: opts.k,
        seed: opts.seed,
        budget: opts.budget,
        ..SurveyOptions::default()
    };
    let rep = survey_conjecture(corpus, &sopts)?;
    let mut text = format!("survey of {} systems\n", corpus.len());
    for s in &rep.skipped {
        text.push_str(&format!("warning: skipped {s}\n"));
    }
    for e in &rep.entries {
        text.push_str(&format!("{} (n = {}, dim {}):\n", e.name, e.n, e.dimension));
        for m in &e.modules {
            text.push_str(&format!(
                "  {:<24} {:<11} certified {:<5} gk {:?}  {}  [{}]\n",
                m.id, m.kind, m.certified, m.gk, m.description, m.note
            ));
        }
    }
    text.push_str(&format!("certified GK multiset: {:?}\n", rep.multiset));
    for a in &rep.anomalies {
        text.push_str(&format!("FINDING: {a}\n"));
    }
    for v in &rep.corollary_violations {
        text.push_str(&format!("VIOLATION of the lower bound: {v}\n"));
    }
    text.push_str(if rep.pass {
        "conforms: every certified value lies in {1, n-1}\n"
    } else {
        "does not conform\n"
    });
    Ok(Outcome {
        text,
        report: envelope(
            "survey",
            None,
            opts,
            json!({ "options": sopts, "survey": rep }),
        ),
        exit: if rep.pass { EXIT_OK } else { EXIT_FAILURE },
    })
}

pub fn cmd_selftest(level: Level, opts: &Options) -> Result<Outcome> {
    let rep = run_selftest(level, opts.seed);
    let mut text = String::new();
    for s in &rep.suites {
        text.push_str(&format!(
            "{:<40} {:>6} cases {:>4} failures\n",
            s.name, s.cases, s.failures
        ));
        if let Some(r) = &s.reproducer {
            text.push_str(&format!("  first failure: {r}\n"));
        }
    }
    let passed = rep.passed();
    text.push_str(if passed {
        "all suites pass\n"
    } else {
        "FAILURES\n"
    });
    Ok(Outcome {
        text,
        report: envelope(
            "selftest",
            None,
            opts,
            serde_json::to_value(&rep).expect("serializable"),
        ),
        exit: if passed { EXIT_OK } else { EXIT_FAILURE },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane_cfg() -> AlgebraConfig {
        AlgebraConfig::parse("n = 2\nmode = \"generic\"\nE = [[0, 1], [-1, 0]]\n").unwrap()
    }

    fn quick() -> Options {
        Options {
            samples: 4,
            growth_steps: 8,
            ..Options::default()
        }
    }

    #[test]
    fn algebra_and_oracle() {
        let o = cmd_algebra(&plane_cfg(), &quick()).unwrap();
        assert!(o.text.contains("1 (exact)"));
        assert_eq!(o.exit, 0);
        let root =
            AlgebraConfig::parse("n = 2\nmode = \"root\"\nm = 3\nE = [[0, 1], [-1, 0]]\n").unwrap();
        let o = cmd_algebra(&root, &quick()).unwrap();
        assert_eq!(o.report["results"]["invariants"]["center"]["rank"], 2);
        assert_eq!(cmd_dim_oracle(&root, &quick()).unwrap().exit, 0);
        let bad =
            AlgebraConfig::parse("n = 2\nmode = \"generic\"\nE = [[0, 1], [1, 0]]\n").unwrap();
        let e = cmd_algebra(&bad, &quick()).unwrap_err();
        assert_eq!(exit_code(&e), 2);
        assert!(e.to_string().contains("k=1, i=2, j=1"));
    }

    #[test]
    fn contract() {
        let o = cmd_contract(&plane_cfg(), "t^2 - x1", &quick()).unwrap();
        assert_eq!(o.exit, 0, "{}", o.text);
        assert_eq!(o.report["results"]["simplicity"]["certified"], true);
        let o = cmd_contract(&plane_cfg(), "t^2 - 1", &quick()).unwrap();
        assert_eq!(o.report["results"]["criticality"]["all_torsion"], false);
        assert!(o.report["results"]["factor"].is_string());
        let e = cmd_contract(&plane_cfg(), "t + (1 + x1)", &quick()).unwrap_err();
        assert_eq!(exit_code(&e), 2);
        assert!(e.to_string().contains("1 + x1"));
    }

    #[test]
    fn induce() {
        let o = cmd_induce(&plane_cfg(), &["1".into()], &quick()).unwrap();
        assert_eq!(o.report["results"]["verdict"]["Simple"]["generator"], 1);
        let e = cmd_induce(&plane_cfg(), &["0".into()], &quick()).unwrap_err();
        assert_eq!(exit_code(&e), 2);
    }

    #[test]
    fn deterministic() {
        let a = cmd_contract(&plane_cfg(), "t^2 + x1*t - 1", &quick()).unwrap();
        let b = cmd_contract(&plane_cfg(), "t^2 + x1*t - 1", &quick()).unwrap();
        assert_eq!(a.text, b.text);
        assert_eq!(a.report, b.report);
    }
}
