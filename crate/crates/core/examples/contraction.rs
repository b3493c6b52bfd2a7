//! The module A / fA on the quantum plane: action, GK dimension and the
//! simplicity certificate.

use std::sync::Arc;

use qtorus::algebra::text::parse;
use qtorus::algebra::Context;
use qtorus::lattice::ExponentSystem;
use qtorus::representation::{build_contraction, certify_simplicity_contraction, gk_certified};
use qtorus::scalars::FieldMode;

fn main() -> qtorus::Result<()> {
    let ctx: Context = Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }));
    for text in ["x2^2 - x1", "x2^2 - 1"] {
        let f = parse(&ctx, text)?;
        let m = build_contraction(&f)?;
        println!("f = {f}, A/fA free of rank {} over F[x1^+-1]", m.d());
        let v = m.basis(0);
        let x2 = parse(&ctx, "x2")?;
        let w = m.act(&m.act(&v, &x2), &x2);
        println!(
            "  1 . x2^2 = {:?}",
            w.iter().map(|b| b.render()).collect::<Vec<_>>()
        );
        let gk = gk_certified(&m, text);
        println!("  gk = {:?}", gk.exact());
        let cert = certify_simplicity_contraction(&m, 8, 2, 1)?;
        println!("  simple: {} ({})", cert.certified, cert.note);
    }
    Ok(())
}
