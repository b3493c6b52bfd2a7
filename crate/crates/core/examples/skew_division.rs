//! Elements as skew-Laurent polynomials in t, right division and
//! reduction modulo f.

use std::sync::Arc;

use qtorus::algebra::text::parse;
use qtorus::algebra::Context;
use qtorus::lattice::ExponentSystem;
use qtorus::scalars::FieldMode;
use qtorus::skew::screen::monomial_right_root_screen;
use qtorus::skew::{decompose, normalize, reduce_mod, right_divide, sigma};

fn main() -> qtorus::Result<()> {
    let ctx: Context = Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }));
    let g = parse(&ctx, "x1^2*x2^3 + 3*x2 - x1^-1")?;
    let form = decompose(&g);
    for (i, b) in form.coeffs() {
        println!("t^{i} * ({b})");
    }
    let x1 = parse(&ctx, "x1")?;
    println!("sigma(x1) = {}", sigma(&x1, 1)?);

    let f = parse(&ctx, "x2^2 - x1")?;
    let d = right_divide(&g, &f, false)?;
    println!("g = ({}) f + ({})", d.quotient, d.remainder);

    let nf = normalize(&f)?;
    let r = reduce_mod(&nf, &g);
    println!("g mod fA = {}", r.residue_element());

    let h = parse(&ctx, "x2^2 - (1 + q1)*x1*x2 + q1*x1^2")?;
    match monomial_right_root_screen(&h, 2) {
        Some(w) => println!("{h} = ({}) ({})", w.cofactor, w.factor),
        None => println!("no linear right factor"),
    }
    Ok(())
}
