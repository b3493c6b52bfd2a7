//! Center, dimension and a brute-force check of the dimension.

use qtorus::lattice::{
    algebra_dimension, brute_force_max_isotropic, center_lattice, ExponentSystem,
};
use qtorus::scalars::FieldMode;

fn main() -> qtorus::Result<()> {
    let e = vec![
        vec![0, 1, 0, 0],
        vec![-1, 0, 0, 0],
        vec![0, 0, 0, 2],
        vec![0, 0, -2, 0],
    ];
    for mode in [FieldMode::Generic { r: 1 }, FieldMode::RootOfUnity { m: 4 }] {
        let sys = ExponentSystem::single(mode, e.clone())?;
        let center = center_lattice(&sys);
        println!(
            "{mode}: center rank {} basis {:?}",
            center.rank(),
            center.basis
        );
        println!("  dimension {}", algebra_dimension(&sys));
    }
    let sys = ExponentSystem::single(
        FieldMode::Generic { r: 1 },
        vec![vec![0, 1, 1], vec![-1, 0, 1], vec![-1, -1, 0]],
    )?;
    let found = brute_force_max_isotropic(&sys, 2)?;
    println!(
        "rank 3: dimension {}, search finds rank {} with basis {:?}",
        algebra_dimension(&sys),
        found.rank,
        found.basis
    );
    Ok(())
}
