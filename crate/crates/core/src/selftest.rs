//! Randomized and exhaustive consistency checks, run by `qtorus selftest`.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{cocycle, AlgebraElement, Context};
use crate::lattice::intmat::{determinant, from_i64, mat_mul, smith_normal_form};
use crate::lattice::{algebra_dimension, brute_force_max_isotropic, ExponentSystem};
use crate::scalars::FieldMode;
use crate::skew::{b_is_commutative, normalize, reduce_mod, right_divide, sigma};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// Inputs of the first failing case.
    pub reproducer: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SelftestReport {
    pub level: Level,
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures == 0)
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: usize,
    reproducer: Option<String>,
}

impl Suite {
    fn new(name: &'static str) -> Suite {
        Suite {
            name,
            cases: 0,
            failures: 0,
            reproducer: None,
        }
    }

    fn check(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.reproducer.is_none() {
                self.reproducer = Some(input());
            }
        }
    }

    fn done(self) -> SuiteResult {
        SuiteResult {
            name: self.name.to_string(),
            cases: self.cases,
            failures: self.failures,
            reproducer: self.reproducer,
        }
    }
}

/// A random antisymmetric system with entries in `[-bound, bound]`.
pub fn random_system(
    rng: &mut ChaCha8Rng,
    n: usize,
    mode: FieldMode,
    bound: i64,
) -> ExponentSystem {
    let e = (0..mode.params())
        .map(|_| {
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let v = rng.gen_range(-bound..=bound);
                    m[i][j] = v;
                    m[j][i] = -v;
                }
            }
            m
        })
        .collect();
    ExponentSystem::new(n, mode, e).expect("antisymmetric by construction")
}

fn random_mode(rng: &mut ChaCha8Rng) -> FieldMode {
    match rng.gen_range(0..6) {
        0 => FieldMode::Generic { r: 1 },
        1 => FieldMode::Generic { r: 2 },
        k => FieldMode::RootOfUnity {
            m: [2, 3, 4, 6][k - 2],
        },
    }
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// Random element with `terms` terms, exponents in `[-bound, bound]` and
/// last exponent in `t_range`.
pub fn random_element(
    ctx: &Context,
    rng: &mut ChaCha8Rng,
    terms: usize,
    bound: i64,
    t_range: (i64, i64),
) -> AlgebraElement {
    let n = ctx.n();
    let mut out = AlgebraElement::zero(ctx);
    for _ in 0..terms {
        let mut a = random_vec(rng, n - 1, bound);
        a.push(rng.gen_range(t_range.0..=t_range.1));
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        out.add_term(a, crate::scalars::Scalar::from_int(c));
    }
    out
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn cocycle_suite(rng: &mut ChaCha8Rng, systems: usize, triples: usize) -> SuiteResult {
    let mut s = Suite::new("cocycle identity");
    for _ in 0..systems {
        let n = rng.gen_range(1..=4);
        let sys = {
            let mode = random_mode(rng);
            random_system(rng, n, mode, 3)
        };
        for _ in 0..triples {
            let a: Vec<Vec<i64>> = (0..3).map(|_| random_vec(rng, n, 3)).collect();
            let lhs = cocycle(&sys, &a[0], &a[1]).mul(&cocycle(&sys, &add(&a[0], &a[1]), &a[2]));
            let rhs = cocycle(&sys, &a[1], &a[2]).mul(&cocycle(&sys, &a[0], &add(&a[1], &a[2])));
            s.check(lhs == rhs, || {
                format!("E = {:?}, mode = {}, a = {a:?}", sys.matrices(), sys.mode())
            });
        }
    }
    s.done()
}

fn commutation_suite(rng: &mut ChaCha8Rng, systems: usize, pairs: usize) -> SuiteResult {
    let mut s = Suite::new("commutation relation");
    for _ in 0..systems {
        let n = rng.gen_range(1..=4);
        let ctx: Context = Arc::new({
            let mode = random_mode(rng);
            random_system(rng, n, mode, 3)
        });
        for _ in 0..pairs {
            let a = random_vec(rng, n, 3);
            let b = random_vec(rng, n, 3);
            let xa = AlgebraElement::x(&ctx, &a);
            let xb = AlgebraElement::x(&ctx, &b);
            let q = ctx.q_power(&ctx.pairing_unchecked(&a, &b));
            let ok = xa.mul(&xb) == xb.mul(&xa).scale(&q);
            s.check(ok, || {
                format!(
                    "E = {:?}, mode = {}, a = {a:?}, b = {b:?}",
                    ctx.matrices(),
                    ctx.mode()
                )
            });
        }
    }
    s.done()
}

fn associativity_suite(rng: &mut ChaCha8Rng, cases: usize) -> SuiteResult {
    let mut s = Suite::new("associativity");
    for _ in 0..cases {
        let n = rng.gen_range(1..=3);
        let ctx: Context = Arc::new({
            let mode = random_mode(rng);
            random_system(rng, n, mode, 2)
        });
        let e: Vec<AlgebraElement> = (0..3)
            .map(|_| random_element(&ctx, rng, 3, 2, (-2, 2)))
            .collect();
        let ok = e[0].mul(&e[1]).mul(&e[2]) == e[0].mul(&e[1].mul(&e[2]));
        s.check(ok, || {
            format!("E = {:?}, elements = {:?}", ctx.matrices(), e)
        });
    }
    s.done()
}

fn snf_suite(rng: &mut ChaCha8Rng, cases: usize) -> SuiteResult {
    let mut s = Suite::new("Smith normal form");
    for _ in 0..cases {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let m: Vec<Vec<i64>> = (0..rows).map(|_| random_vec(rng, cols, 6)).collect();
        let a = from_i64(&m);
        let snf = smith_normal_form(&a);
        let mut ok = mat_mul(&mat_mul(&snf.u, &a), &snf.v) == snf.d;
        ok &= determinant(&snf.u).abs().is_one() && determinant(&snf.v).abs().is_one();
        let diag = snf.diagonal();
        for i in 0..rows {
            for j in 0..cols {
                if i != j && !snf.d[i][j].is_zero() {
                    ok = false;
                }
            }
        }
        for w in diag.windows(2) {
            let (x, y) = (&w[0], &w[1]);
            if x.is_negative() || y.is_negative() {
                ok = false;
            }
            if x.is_zero() && !y.is_zero() {
                ok = false;
            }
            if !x.is_zero() && !(y % x).is_zero() {
                ok = false;
            }
        }
        s.check(ok, || format!("matrix = {m:?}"));
    }
    s.done()
}

fn plane_like(rng: &mut ChaCha8Rng) -> Context {
    let n = rng.gen_range(2..=3);
    loop {
        let sys = random_system(rng, n, FieldMode::Generic { r: 1 }, 2);
        let ctx: Context = Arc::new(sys);
        if b_is_commutative(&ctx) {
            return ctx;
        }
    }
}

fn sigma_suite(rng: &mut ChaCha8Rng, cases: usize) -> SuiteResult {
    let mut s = Suite::new("sigma automorphism");
    for _ in 0..cases {
        let n = rng.gen_range(2..=3);
        let ctx: Context = Arc::new({
            let mode = random_mode(rng);
            random_system(rng, n, mode, 2)
        });
        let b = random_element(&ctx, rng, 3, 2, (0, 0));
        let c = random_element(&ctx, rng, 3, 2, (0, 0));
        let t = AlgebraElement::generator(&ctx, n - 1, 1);
        let sb = sigma(&b, 1).unwrap();
        let sc = sigma(&c, 1).unwrap();
        let mut ok = sigma(&b.mul(&c), 1).unwrap() == sb.mul(&sc);
        ok &= t.mul(&b) == sb.mul(&t);
        ok &= sigma(&sb, -1).unwrap() == b;
        s.check(ok, || {
            format!("E = {:?}, beta = {}, gamma = {}", ctx.matrices(), b, c)
        });
    }
    s.done()
}

fn random_unitary(ctx: &Context, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let n = ctx.n();
    let d = rng.gen_range(1..=3);
    let mut f = AlgebraElement::generator(ctx, n - 1, d);
    for i in 1..d {
        let mut c = random_element(ctx, rng, 2, 1, (0, 0));
        c = AlgebraElement::generator(ctx, n - 1, i).mul(&c);
        f = f.add(&c);
    }
    f.add(&random_element(ctx, rng, 1, 1, (0, 0)))
}

fn division_suite(rng: &mut ChaCha8Rng, cases: usize) -> SuiteResult {
    let mut s = Suite::new("division and reduction");
    for _ in 0..cases {
        let ctx = plane_like(rng);
        let f = random_unitary(&ctx, rng);
        let g = random_element(&ctx, rng, 4, 2, (-2, 4));
        let ok = match right_divide(&g, &f, false) {
            Ok(d) => d.denominator.mul(&g) == d.quotient.mul(&f).add(&d.remainder),
            Err(_) => false,
        };
        let nf = normalize(&f).unwrap();
        let r = reduce_mod(&nf, &g);
        let ok2 = nf.element.mul(&r.quotient).add(&r.residue_element()) == g
            && reduce_mod(&nf, &r.residue_element()).residue == r.residue;
        s.check(ok && ok2, || {
            format!("E = {:?}, f = {f}, g = {g}", ctx.matrices())
        });
    }
    s.done()
}

fn oracle_suite(rng: &mut ChaCha8Rng, cases: usize) -> SuiteResult {
    let mut s = Suite::new("dimension oracle (random)");
    for _ in 0..cases {
        let n = rng.gen_range(1..=3);
        let mode = match rng.gen_range(0..5) {
            0 => FieldMode::Generic { r: 1 },
            k => FieldMode::RootOfUnity {
                m: [2, 3, 4, 6][k - 1],
            },
        };
        let sys = random_system(rng, n, mode, 2);
        s.check(oracle_agrees(&sys), || {
            format!("E = {:?}, mode = {mode}", sys.matrices())
        });
    }
    s.done()
}

/// Coefficient bound at which the brute-force search is compared with the
/// closed-form dimension.
pub fn oracle_bound(mode: FieldMode) -> i64 {
    match mode {
        FieldMode::Generic { .. } => 2,
        FieldMode::RootOfUnity { m } => m as i64,
    }
}

pub fn oracle_agrees(sys: &ExponentSystem) -> bool {
    let dim = algebra_dimension(sys);
    match (
        dim.exact(),
        brute_force_max_isotropic(sys, oracle_bound(sys.mode())),
    ) {
        (Some(d), Ok(found)) => d == found.rank,
        _ => false,
    }
}

/// Every antisymmetric integer matrix of size `n` with entries in
/// `[-bound, bound]`.
pub fn all_matrices(n: usize, bound: i64) -> Vec<Vec<Vec<i64>>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let side = (2 * bound + 1) as usize;
    let total = side.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut m = vec![vec![0; n]; n];
            for &(i, j) in &pairs {
                let v = (code % side) as i64 - bound;
                code /= side;
                m[i][j] = v;
                m[j][i] = -v;
            }
            m
        })
        .collect()
}

fn oracle_sweep() -> SuiteResult {
    let mut s = Suite::new("dimension oracle (exhaustive, n <= 3)");
    let modes = [
        FieldMode::Generic { r: 1 },
        FieldMode::RootOfUnity { m: 2 },
        FieldMode::RootOfUnity { m: 3 },
        FieldMode::RootOfUnity { m: 4 },
        FieldMode::RootOfUnity { m: 6 },
    ];
    for n in 1..=3 {
        for mode in modes {
            for e in all_matrices(n, 2) {
                let sys = ExponentSystem::single(mode, e.clone()).unwrap();
                s.check(oracle_agrees(&sys), || format!("E = {e:?}, mode = {mode}"));
            }
        }
    }
    s.done()
}

pub fn run_selftest(level: Level, seed: u64) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = match level {
        Level::Quick => 1,
        Level::Full => 5,
    };
    let mut suites = vec![
        cocycle_suite(&mut rng, 10, 20 * scale),
        commutation_suite(&mut rng, 10, 20 * scale),
        associativity_suite(&mut rng, 40 * scale),
        snf_suite(&mut rng, 100 * scale),
        sigma_suite(&mut rng, 40 * scale),
        division_suite(&mut rng, 20 * scale),
        oracle_suite(&mut rng, 20 * scale),
    ];
    if level == Level::Full {
        suites.push(oracle_sweep());
    }
    SelftestReport {
        level,
        seed,
        suites,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_passes() {
        let r = run_selftest(Level::Quick, 3);
        for s in &r.suites {
            assert_eq!(s.failures, 0, "{}: {:?}", s.name, s.reproducer);
        }
    }

    #[test]
    fn matrix_enumeration() {
        assert_eq!(all_matrices(3, 2).len(), 125);
        assert_eq!(all_matrices(1, 2).len(), 1);
    }
}
