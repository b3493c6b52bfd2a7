//! Multiplication in a quantum torus and the commutation rule.

use std::sync::Arc;

use qtorus::algebra::text::parse;
use qtorus::algebra::{cocycle, AlgebraElement, Context};
use qtorus::lattice::ExponentSystem;
use qtorus::scalars::FieldMode;

fn main() -> qtorus::Result<()> {
    let sys = ExponentSystem::single(
        FieldMode::Generic { r: 1 },
        vec![vec![0, 1, 2], vec![-1, 0, -1], vec![-2, 1, 0]],
    )?;
    let ctx: Context = Arc::new(sys);
    let a = [1, 2, 0];
    let b = [0, -1, 3];
    let xa = AlgebraElement::x(&ctx, &a);
    let xb = AlgebraElement::x(&ctx, &b);
    println!("lambda(a, b) = {}", cocycle(&ctx, &a, &b));
    println!("x^a x^b = {}", xa.mul(&xb));
    println!("x^b x^a = {}", xb.mul(&xa));
    println!("pairing(a, b) = {:?}", ctx.pairing(&a, &b)?);

    let u = parse(&ctx, "x1 + q1*x2^-1")?;
    let v = parse(&ctx, "x3 - 2")?;
    println!("({u}) * ({v}) = {}", u.mul(&v));
    println!("({u})^-1 exists: {}", u.is_unit());
    Ok(())
}
