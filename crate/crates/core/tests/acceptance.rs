//! Acceptance run: one PASS/FAIL line per criterion, then a nonzero exit if
//! any criterion failed.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qtorus::algebra::{cocycle, AlgebraElement, Context};
use qtorus::cli::default_corpus;
use qtorus::lattice::{algebra_dimension, brute_force_max_isotropic, ExponentSystem};
use qtorus::representation::contraction::random_vector;
use qtorus::representation::hypotheses::induced_gk_report;
use qtorus::representation::{
    build_contraction, build_induced, certify_simplicity_contraction, certify_simplicity_finite,
    clock_shift_module, corollary_2_4_check, criticality_check, gk_certified, gk_growth_estimate,
    induced_simplicity_verdict, survey_conjecture, Character, ContractionModule, FiniteVerdict,
    GkReport, InducedVerdict, SurveyOptions,
};
use qtorus::scalars::{FieldMode, Scalar};
use qtorus::selftest::{all_matrices, oracle_bound, random_system};
use qtorus::skew::screen::{left_root_screen, monomial_right_root_screen};

const SEED: u64 = 20240601;

/// A GK report together with the system its module lives over.
type Checked = (GkReport, ExponentSystem);

struct Line {
    ok: bool,
    detail: String,
}

fn pass(ok: bool, detail: impl Into<String>) -> Line {
    Line {
        ok,
        detail: detail.into(),
    }
}

fn vec_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn rand_vec(rng: &mut ChaCha8Rng, n: usize, b: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-b..=b)).collect()
}

fn rand_mode(rng: &mut ChaCha8Rng) -> FieldMode {
    match rng.gen_range(0..5) {
        0 => FieldMode::Generic { r: 1 },
        k => FieldMode::RootOfUnity {
            m: [2, 3, 4, 6][k - 1],
        },
    }
}

fn criterion_1() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = 0;
    for _ in 0..10 {
        let n = rng.gen_range(1..=4);
        let mode = rand_mode(&mut rng);
        let sys = random_system(&mut rng, n, mode, 3);
        for _ in 0..100 {
            let a: Vec<Vec<i64>> = (0..3).map(|_| rand_vec(&mut rng, n, 3)).collect();
            let lhs =
                cocycle(&sys, &a[0], &a[1]).mul(&cocycle(&sys, &vec_add(&a[0], &a[1]), &a[2]));
            let rhs =
                cocycle(&sys, &a[1], &a[2]).mul(&cocycle(&sys, &a[0], &vec_add(&a[1], &a[2])));
            bad += usize::from(lhs != rhs);
        }
    }
    pass(
        bad == 0,
        format!("1000 triples over 10 systems, {bad} failures"),
    )
}

fn criterion_2() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut bad = 0;
    for _ in 0..10 {
        let n = rng.gen_range(1..=4);
        let mode = rand_mode(&mut rng);
        let ctx: Context = Arc::new(random_system(&mut rng, n, mode, 3));
        for _ in 0..100 {
            let a = rand_vec(&mut rng, n, 3);
            let b = rand_vec(&mut rng, n, 3);
            let xa = AlgebraElement::x(&ctx, &a);
            let xb = AlgebraElement::x(&ctx, &b);
            let c = ctx.q_power(&ctx.pairing(&a, &b).unwrap());
            bad += usize::from(xa.mul(&xb) != xb.mul(&xa).scale(&c));
        }
    }
    pass(bad == 0, format!("1000 pairs, {bad} failures"))
}

fn criterion_3() -> Line {
    let modes = [
        FieldMode::Generic { r: 1 },
        FieldMode::RootOfUnity { m: 2 },
        FieldMode::RootOfUnity { m: 3 },
        FieldMode::RootOfUnity { m: 4 },
        FieldMode::RootOfUnity { m: 6 },
    ];
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for mode in modes {
            for e in all_matrices(n, 2) {
                total += 1;
                let sys = ExponentSystem::single(mode, e.clone()).unwrap();
                let dim = algebra_dimension(&sys);
                let found = brute_force_max_isotropic(&sys, oracle_bound(mode)).map(|s| s.rank);
                if dim.exact().is_none() || dim.exact() != found.as_ref().ok().copied() {
                    bad.push(format!("{mode} {e:?}: {dim} vs {found:?}"));
                }
            }
        }
    }
    pass(
        bad.is_empty(),
        format!("{total} systems, {} mismatches{}", bad.len(), first(&bad)),
    )
}

/// The quantum plane and a rank-3 torus with trivial center and
/// commutative `x1, x2`.
fn contraction_contexts() -> Vec<Context> {
    let plane = ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 });
    let mut e1 = vec![vec![0i64; 3]; 3];
    let mut e2 = vec![vec![0i64; 3]; 3];
    e1[0][2] = 1;
    e1[2][0] = -1;
    e2[1][2] = 1;
    e2[2][1] = -1;
    let three = ExponentSystem::new(3, FieldMode::Generic { r: 2 }, vec![e1, e2]).unwrap();
    vec![Arc::new(plane), Arc::new(three)]
}

fn b_monomial(ctx: &Context, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let n = ctx.n();
    let mut e = rand_vec(rng, n - 1, 1);
    e.push(0);
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    AlgebraElement::monomial(ctx, e, Scalar::from_int(c))
}

/// `t^d + sum_{0<i<d} t^i beta_i + c x^b`, with `beta_i` sums of up to two
/// monomials of `B`.
fn random_unitary(ctx: &Context, rng: &mut ChaCha8Rng, d: i64) -> AlgebraElement {
    let n = ctx.n();
    let t = |i: i64| AlgebraElement::generator(ctx, n - 1, i);
    let mut f = t(d);
    for i in 1..d {
        for _ in 0..rng.gen_range(0..=2) {
            f = f.add(&t(i).mul(&b_monomial(ctx, rng)));
        }
    }
    f.add(&b_monomial(ctx, rng))
}

fn criterion_4(modules: &mut Vec<(ContractionModule, GkReport)>) -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let mut bad = Vec::new();
    let mut slopes = Vec::new();
    for ctx in contraction_contexts() {
        let n = ctx.n();
        for i in 0..10 {
            let d = rng.gen_range(1..=3);
            let f = random_unitary(&ctx, &mut rng, d);
            let m = build_contraction(&f).unwrap();
            let mut rep = gk_certified(&m, &format!("n{n}/f{i}"));
            let g = gk_growth_estimate(&m, 24, SEED).unwrap();
            slopes.push(g.slope);
            let close = (g.slope - (n - 1) as f64).abs() <= 0.15;
            if rep.exact() != Some(n - 1) || !close {
                bad.push(format!(
                    "n = {n}, f = {f}: gk {:?}, slope {:.3}",
                    rep.exact(),
                    g.slope
                ));
            }
            rep.attach_growth(g);
            modules.push((m, rep));
        }
    }
    let (lo, hi) = slopes
        .iter()
        .fold((f64::MAX, f64::MIN), |(a, b), &s| (a.min(s), b.max(s)));
    pass(
        bad.is_empty(),
        format!(
            "20 modules, slopes in [{lo:.3}, {hi:.3}], {} failures{}",
            bad.len(),
            first(&bad)
        ),
    )
}

fn criterion_5(modules: &[(ContractionModule, GkReport)]) -> Line {
    let mut bad = Vec::new();
    let mut checks = 0;
    for (idx, (m, _)) in modules.iter().enumerate() {
        for s in 0..20 {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5 + 1000 * idx as u64 + s);
            let w = random_vector(m, &mut rng);
            let v = criticality_check(m, &w, m.d().max(2)).unwrap();
            checks += 1;
            if !v.torsion {
                bad.push(format!("f = {}, rank {}/{}", m.original(), v.rank, v.d));
            }
        }
    }
    pass(
        bad.is_empty(),
        format!(
            "{checks} quotients, {} not torsion{}",
            bad.len(),
            first(&bad)
        ),
    )
}

fn plane() -> Context {
    Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }))
}

fn criterion_6(reports: &mut Vec<Checked>) -> Line {
    let ctx = plane();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let mut irreducible = Vec::new();
    while irreducible.len() < 10 {
        let d = rng.gen_range(1..=3);
        let f = random_unitary(&ctx, &mut rng, d);
        if monomial_right_root_screen(&f, 2).is_none() && left_root_screen(&f, 2).is_none() {
            irreducible.push(f);
        }
    }
    let mut reducible = Vec::new();
    while reducible.len() < 10 {
        let dg = rng.gen_range(1..=2);
        let g = random_unitary(&ctx, &mut rng, dg);
        let h = random_unitary(&ctx, &mut rng, 1);
        reducible.push(g.mul(&h));
    }
    let mut bad = Vec::new();
    let mut max_k = 0;
    for (i, f) in irreducible.iter().enumerate() {
        let m = build_contraction(f).unwrap();
        let cert = certify_simplicity_contraction(&m, 20, 2, SEED + i as u64).unwrap();
        max_k = max_k.max(cert.max_k_used.unwrap_or(0));
        if !cert.certified {
            bad.push(format!("irreducible candidate {f} not certified"));
        }
        reports.push((gk_certified(&m, &format!("irreducible{i}")), (*ctx).clone()));
    }
    for (i, f) in reducible.iter().enumerate() {
        let m = build_contraction(f).unwrap();
        let cert = certify_simplicity_contraction(&m, 20, 2, SEED + 100 + i as u64).unwrap();
        if cert.certified {
            bad.push(format!("reducible {f} certified"));
        }
        reports.push((gk_certified(&m, &format!("reducible{i}")), (*ctx).clone()));
    }
    pass(
        bad.is_empty(),
        format!(
            "10 irreducible candidates (max K used {max_k}), 10 products, {} failures{}",
            bad.len(),
            first(&bad)
        ),
    )
}

fn criterion_7(reports: &mut Vec<Checked>) -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let chars: Vec<i64> = (0..5)
        .map(|_| {
            let mut v = 0;
            while v == 0 {
                v = rng.gen_range(-9..=9);
            }
            v
        })
        .collect();
    let mut bad = Vec::new();
    let mut contexts = vec![plane()];
    for m in [2, 3, 5] {
        contexts.push(Arc::new(ExponentSystem::quantum_plane(
            FieldMode::RootOfUnity { m },
        )));
    }
    for ctx in &contexts {
        for &c in &chars {
            let w =
                build_induced(&Character::new(ctx, vec![Scalar::from_int(c)]).unwrap()).unwrap();
            let verdict = induced_simplicity_verdict(&w);
            let ok = match (ctx.mode(), &verdict) {
                (FieldMode::Generic { .. }, Ok(InducedVerdict::Simple { .. })) => true,
                (
                    FieldMode::RootOfUnity { m },
                    Ok(InducedVerdict::ProperSubmodule { quotient_dim, .. }),
                ) => *quotient_dim == m as u64,
                _ => false,
            };
            if !ok {
                bad.push(format!("{} chi = {c}: {verdict:?}", ctx.mode()));
            }
            reports.push((
                induced_gk_report(ctx, &format!("induced {} {c}", ctx.mode())),
                (**ctx).clone(),
            ));
        }
    }
    pass(
        bad.is_empty(),
        format!(
            "characters {chars:?} over 4 planes, {} failures{}",
            bad.len(),
            first(&bad)
        ),
    )
}

fn criterion_8() -> Line {
    let mut bad = Vec::new();
    for m in [2u32, 3, 5, 7] {
        let c = clock_shift_module(m, &Scalar::one()).unwrap();
        let v = certify_simplicity_finite(&c, 4 * m as usize);
        if v != (FiniteVerdict::AbsolutelySimple {
            span_dim: (m * m) as usize,
        }) {
            bad.push(format!("m = {m}: {v:?}"));
        }
    }
    let a = clock_shift_module(2, &Scalar::one()).unwrap();
    let b = clock_shift_module(2, &Scalar::from_int(3)).unwrap();
    let sum = a.direct_sum(&b).unwrap();
    let witness = matches!(
        certify_simplicity_finite(&sum, 16),
        FiniteVerdict::InvariantSubspace { .. }
    );
    if !witness {
        bad.push("direct sum has no witness".into());
    }
    pass(
        bad.is_empty(),
        format!(
            "m in {{2, 3, 5, 7}} and a 4-dim direct sum, {} failures{}",
            bad.len(),
            first(&bad)
        ),
    )
}

fn criterion_9(reports: &[Checked]) -> Line {
    let violations: Vec<&str> = reports
        .iter()
        .filter(|(r, sys)| corollary_2_4_check(r, sys).is_violation())
        .map(|(r, _)| r.module.as_str())
        .collect();
    pass(
        violations.is_empty(),
        format!(
            "{} modules, {} violations{}",
            reports.len(),
            violations.len(),
            first(&violations)
        ),
    )
}

fn criterion_10() -> Line {
    let corpus = default_corpus();
    let opts = SurveyOptions {
        seed: SEED,
        ..SurveyOptions::default()
    };
    match survey_conjecture(&corpus, &opts) {
        Ok(r) => {
            let has_n3 = r.entries.iter().any(|e| e.n == 3);
            let ok = r.entries.len() >= 3 && has_n3 && r.pass;
            pass(
                ok,
                format!(
                    "{} systems surveyed ({} skipped), gk multiset {:?}, anomalies {:?}",
                    r.entries.len(),
                    r.skipped.len(),
                    r.multiset,
                    r.anomalies
                ),
            )
        }
        Err(e) => pass(false, format!("survey failed: {e}")),
    }
}

fn run(id: usize, limit: Duration, f: impl FnOnce() -> Line) -> bool {
    let start = Instant::now();
    let line = f();
    let took = start.elapsed();
    let ok = line.ok && took <= limit;
    println!(
        "criterion {id:>2}: {} ({:.2?}, limit {:?}) {}",
        if ok { "PASS" } else { "FAIL" },
        took,
        limit,
        line.detail
    );
    ok
}

fn main() {
    let secs = Duration::from_secs;
    let mut ok = true;
    let mut contraction = Vec::new();
    let mut reports = Vec::new();
    ok &= run(1, secs(10), criterion_1);
    ok &= run(2, secs(10), criterion_2);
    ok &= run(3, secs(300), criterion_3);
    ok &= run(4, secs(120), || criterion_4(&mut contraction));
    ok &= run(5, secs(120), || criterion_5(&contraction));
    ok &= run(6, secs(300), || criterion_6(&mut reports));
    ok &= run(7, secs(60), || criterion_7(&mut reports));
    ok &= run(8, secs(60), criterion_8);
    reports.extend(
        contraction
            .iter()
            .map(|(m, r)| (r.clone(), (**m.ctx()).clone())),
    );
    ok &= run(9, secs(60), || criterion_9(&reports));
    ok &= run(10, secs(600), criterion_10);
    if !ok {
        std::process::exit(1);
    }
}

fn first<T: std::fmt::Debug>(v: &[T]) -> String {
    v.first()
        .map(|x| format!(", first: {x:?}"))
        .unwrap_or_default()
}
