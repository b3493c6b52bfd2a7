use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use qtorus::algebra::text::parse;
use qtorus::algebra::{cocycle, AlgebraElement, Context};
use qtorus::lattice::intmat::{determinant, from_i64, mat_mul, smith_normal_form};
use qtorus::lattice::{center_lattice, ExponentSystem};
use qtorus::representation::{build_contraction, certify_simplicity_contraction};
use qtorus::scalars::{Cyclo, FieldMode, Scalar};
use qtorus::selftest::oracle_agrees;
use qtorus::skew::{decompose, normalize, ore_right_multiple, reduce_mod, right_divide, sigma};

fn mode_of(k: u8) -> FieldMode {
    match k % 5 {
        0 => FieldMode::Generic { r: 1 },
        i => FieldMode::RootOfUnity {
            m: [2, 3, 4, 6][i as usize - 1],
        },
    }
}

/// Antisymmetric matrix from its strict upper triangle.
fn antisym(n: usize, upper: &[i64]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    let mut it = upper.iter().cycle();
    for i in 0..n {
        for j in i + 1..n {
            let v = *it.next().unwrap();
            m[i][j] = v;
            m[j][i] = -v;
        }
    }
    m
}

fn system(n: usize, mode: u8, upper: &[i64]) -> Context {
    Arc::new(ExponentSystem::single(mode_of(mode), antisym(n, upper)).unwrap())
}

/// Rank-3 system whose first two generators commute.
fn split_system(mode: u8, a: i64, b: i64) -> Context {
    system(3, mode, &[0, a, b])
}

fn element(ctx: &Context, terms: &[(Vec<i64>, i64)]) -> AlgebraElement {
    let n = ctx.n();
    AlgebraElement::from_terms(
        ctx,
        terms.iter().map(|(e, c)| {
            (
                e.iter().cycle().take(n).copied().collect(),
                Scalar::from_int(*c),
            )
        }),
    )
}

/// Element of the coefficient subalgebra (last exponent zero).
fn b_element(ctx: &Context, terms: &[(Vec<i64>, i64)]) -> AlgebraElement {
    let n = ctx.n();
    AlgebraElement::from_terms(
        ctx,
        terms.iter().map(|(e, c)| {
            let mut a: Vec<i64> = e.iter().cycle().take(n - 1).copied().collect();
            a.push(0);
            (a, Scalar::from_int(*c))
        }),
    )
}

/// `t^d + t^{d-1} beta + c x^b`, unitary by construction.
fn unitary(
    ctx: &Context,
    d: i64,
    mid: &[(Vec<i64>, i64)],
    unit: (Vec<i64>, i64),
) -> AlgebraElement {
    let n = ctx.n();
    let t = |i| AlgebraElement::generator(ctx, n - 1, i);
    let mut f = t(d);
    if d > 1 {
        f = f.add(&t(d - 1).mul(&b_element(ctx, mid)));
    }
    f.add(&b_element(ctx, &[unit]))
}

fn terms() -> impl Strategy<Value = Vec<(Vec<i64>, i64)>> {
    prop::collection::vec(
        (
            prop::collection::vec(-2i64..=2, 4),
            prop_oneof![-3i64..=-1, 1i64..=3],
        ),
        0..4,
    )
}

fn unit_term() -> impl Strategy<Value = (Vec<i64>, i64)> {
    (
        prop::collection::vec(-1i64..=1, 4),
        prop_oneof![-3i64..=-1, 1i64..=3],
    )
}

fn scalar(mode: u8, c: &[i64]) -> Scalar {
    match mode_of(mode) {
        FieldMode::Generic { .. } => {
            let q = FieldMode::Generic { r: 1 }.parameter(1).unwrap();
            let num = c[..3].iter().rev().fold(Scalar::zero(), |acc, &x| {
                acc.mul(&q).add(&Scalar::from_int(x))
            });
            let den = Scalar::from_int(c[3]).add(&q.mul(&Scalar::from_int(c[4])));
            if den.is_zero() {
                num
            } else {
                num.div(&den).unwrap()
            }
        }
        FieldMode::RootOfUnity { m } => Scalar::from_cyclo(Cyclo::from_coeffs(
            m,
            c.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(mode in 0u8..5, a in prop::collection::vec(-4i64..=4, 5),
                    b in prop::collection::vec(-4i64..=4, 5), c in prop::collection::vec(-4i64..=4, 5)) {
        let (a, b, c) = (scalar(mode, &a), scalar(mode, &b), scalar(mode, &c));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn pairing_bilinear_alternating(n in 1usize..=4, mode in 0u8..5, upper in prop::collection::vec(-3i64..=3, 6),
                                    a in prop::collection::vec(-4i64..=4, 4), a2 in prop::collection::vec(-4i64..=4, 4),
                                    b in prop::collection::vec(-4i64..=4, 4)) {
        let ctx = system(n, mode, &upper);
        let (a, a2, b) = (&a[..n], &a2[..n], &b[..n]);
        let sum: Vec<i64> = a.iter().zip(a2).map(|(x, y)| x + y).collect();
        let p = |x: &[i64], y: &[i64]| ctx.pairing(x, y).unwrap()[0];
        prop_assert_eq!(p(a, b), -p(b, a));
        prop_assert_eq!(p(a, a), 0);
        prop_assert_eq!(p(&sum, b), p(a, b) + p(a2, b));
    }

    #[test]
    fn cocycle_identity(n in 1usize..=4, mode in 0u8..5, upper in prop::collection::vec(-3i64..=3, 6),
                        v in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 3)) {
        let ctx = system(n, mode, &upper);
        let a: Vec<&[i64]> = v.iter().map(|x| &x[..n]).collect();
        let add = |x: &[i64], y: &[i64]| -> Vec<i64> { x.iter().zip(y).map(|(p, q)| p + q).collect() };
        let lhs = cocycle(&ctx, a[0], a[1]).mul(&cocycle(&ctx, &add(a[0], a[1]), a[2]));
        let rhs = cocycle(&ctx, a[1], a[2]).mul(&cocycle(&ctx, a[0], &add(a[1], a[2])));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutation_and_associativity(n in 1usize..=4, mode in 0u8..5, upper in prop::collection::vec(-3i64..=3, 6),
                                     x in terms(), y in terms(), z in terms()) {
        let ctx = system(n, mode, &upper);
        let (x, y, z) = (element(&ctx, &x), element(&ctx, &y), element(&ctx, &z));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        for a in x.support() {
            for b in y.support() {
                let xa = AlgebraElement::x(&ctx, a);
                let xb = AlgebraElement::x(&ctx, b);
                let c = ctx.q_power(&ctx.pairing(a, b).unwrap());
                prop_assert_eq!(xa.mul(&xb), xb.mul(&xa).scale(&c));
            }
        }
    }

    #[test]
    fn smith_form(rows in 1usize..=4, cols in 1usize..=4, entries in prop::collection::vec(-9i64..=9, 16)) {
        let m: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * 4..i * 4 + cols].to_vec()).collect();
        let a = from_i64(&m);
        let snf = smith_normal_form(&a);
        prop_assert_eq!(mat_mul(&mat_mul(&snf.u, &a), &snf.v), snf.d.clone());
        prop_assert!(determinant(&snf.u).abs().is_one());
        prop_assert!(determinant(&snf.v).abs().is_one());
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    prop_assert_eq!(&snf.d[i][j], &BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn center_is_radical(n in 1usize..=4, mode in 0u8..5, upper in prop::collection::vec(-3i64..=3, 6)) {
        let ctx = system(n, mode, &upper);
        let center = center_lattice(&ctx);
        for a in &center.basis {
            for j in 0..n {
                let mut e = vec![0; n];
                e[j] = 1;
                prop_assert!(ctx.commute(a, &e));
            }
        }
    }

    #[test]
    fn parse_render_round_trip(n in 1usize..=4, mode in 0u8..5, upper in prop::collection::vec(-3i64..=3, 6), x in terms()) {
        let ctx = system(n, mode, &upper);
        let x = element(&ctx, &x);
        prop_assert_eq!(parse(&ctx, &x.render()).unwrap(), x);
    }

    #[test]
    fn decompose_and_sigma(mode in 0u8..5, a in -2i64..=2, b in -2i64..=2, x in terms(), y in terms(), z in terms()) {
        let ctx = split_system(mode, a, b);
        let x = element(&ctx, &x);
        prop_assert_eq!(decompose(&x).recompose(), x);
        let (y, z) = (b_element(&ctx, &y), b_element(&ctx, &z));
        let t = AlgebraElement::generator(&ctx, 2, 1);
        let sy = sigma(&y, 1).unwrap();
        prop_assert_eq!(sigma(&y.mul(&z), 1).unwrap(), sy.mul(&sigma(&z, 1).unwrap()));
        prop_assert_eq!(sigma(&sy, -1).unwrap(), y.clone());
        prop_assert_eq!(t.mul(&y), sy.mul(&t));
    }

    #[test]
    fn division_and_reduction(mode in 0u8..5, a in -2i64..=2, b in -2i64..=2, d in 1i64..=3,
                              mid in terms(), unit in unit_term(), g in terms()) {
        let ctx = split_system(mode, a, b);
        let f = unitary(&ctx, d, &mid, unit);
        let g = element(&ctx, &g);
        let div = right_divide(&g, &f, false).unwrap();
        prop_assert_eq!(div.denominator.mul(&g), div.quotient.mul(&f).add(&div.remainder));
        if let Some((_, hi)) = decompose(&div.remainder).degrees() {
            prop_assert!(hi < decompose(&f).degrees().unwrap().1);
        }
        let nf = normalize(&f).unwrap();
        let r = reduce_mod(&nf, &g);
        prop_assert_eq!(nf.element.mul(&r.quotient).add(&r.residue_element()), g.clone());
        prop_assert_eq!(reduce_mod(&nf, &r.residue_element()).residue, r.residue);
    }

    #[test]
    fn ore_identity(mode in 0u8..5, a in -2i64..=2, b in -2i64..=2, x in terms(), y in terms()) {
        let ctx = split_system(mode, a, b);
        let x = element(&ctx, &x);
        let y = b_element(&ctx, &y);
        prop_assume!(!y.is_zero());
        let (xp, yp) = ore_right_multiple(&x, &y).unwrap();
        prop_assert_eq!(x.mul(&yp), y.mul(&xp));
    }

    #[test]
    fn contraction_action_matches_reduction(mode in 0u8..5, a in -2i64..=2, b in -2i64..=2, d in 1i64..=3,
                                            mid in terms(), unit in unit_term(), x in terms(), y in terms()) {
        let ctx = split_system(mode, a, b);
        let f = unitary(&ctx, d, &mid, unit);
        let m = build_contraction(&f).unwrap();
        let (x, y) = (element(&ctx, &x), element(&ctx, &y));
        // (x + fA) y = xy + fA
        prop_assert_eq!(m.act(&m.residue(&x), &y), m.residue(&x.mul(&y)));
    }

    #[test]
    fn oracle_agreement(n in 1usize..=3, mode in 0u8..5, upper in prop::collection::vec(-2i64..=2, 3)) {
        let ctx = system(n, mode, &upper);
        prop_assert!(oracle_agrees(&ctx));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// A product with a linear right factor is never certified simple.
    #[test]
    fn certificate_rejects_products(d in 1i64..=2, mid in terms(), unit in unit_term(), c in prop_oneof![-3i64..=-1, 1i64..=3], e in -1i64..=1) {
        let ctx: Context = Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }));
        let g = unitary(&ctx, d, &mid, unit);
        let h = AlgebraElement::generator(&ctx, 1, 1).add(&AlgebraElement::monomial(&ctx, vec![e, 0], Scalar::from_int(c)));
        let m = build_contraction(&g.mul(&h)).unwrap();
        let cert = certify_simplicity_contraction(&m, 4, 2, 1).unwrap();
        prop_assert!(!cert.certified);
    }
}

#[test]
fn contraction_action_on_200_elements() {
    use rand::{Rng, SeedableRng};
    let ctx = split_system(0, 1, 1);
    let f = parse(&ctx, "t^2 - x1*t + x2").unwrap();
    let m = build_contraction(&f).unwrap();
    let nf = normalize(&f).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let terms: Vec<(Vec<i64>, i64)> = (0..rng.gen_range(1..4))
            .map(|_| {
                (
                    (0..3).map(|_| rng.gen_range(-2..=2)).collect(),
                    rng.gen_range(1..=3),
                )
            })
            .collect();
        let alpha = element(&ctx, &terms);
        assert_eq!(m.act(&m.basis(0), &alpha), reduce_mod(&nf, &alpha).residue);
    }
}
