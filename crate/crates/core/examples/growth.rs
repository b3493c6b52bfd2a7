use std::sync::Arc;

use qtorus::algebra::text::parse;
use qtorus::algebra::Context;
use qtorus::lattice::ExponentSystem;
use qtorus::representation::{build_contraction, gk_growth_estimate};
use qtorus::scalars::FieldMode;

fn main() -> qtorus::Result<()> {
    let sys = ExponentSystem::single(
        FieldMode::Generic { r: 1 },
        vec![vec![0, 0, 1], vec![0, 0, 1], vec![-1, -1, 0]],
    )?;
    let ctx: Context = Arc::new(sys);
    let f = parse(&ctx, "x3 - 1")?;
    let m = build_contraction(&f)?;
    let g = gk_growth_estimate(&m, 16, 7)?;
    for (k, v) in g.table.iter().enumerate() {
        println!("m = {k:>2}  dim V_m = {v}");
    }
    println!(
        "slope over {:?}: {:.3} (mod {})",
        g.window, g.slope, g.prime
    );
    Ok(())
}
