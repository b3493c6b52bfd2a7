//! Modules induced from a character of F[x1^+-1]: simple for generic q,
//! reducible at a root of unity.

use std::sync::Arc;

use qtorus::algebra::Context;
use qtorus::lattice::ExponentSystem;
use qtorus::representation::{build_induced, induced_simplicity_verdict, Character};
use qtorus::scalars::{FieldMode, Scalar};

fn main() -> qtorus::Result<()> {
    for mode in [FieldMode::Generic { r: 1 }, FieldMode::RootOfUnity { m: 3 }] {
        let ctx: Context = Arc::new(ExponentSystem::quantum_plane(mode));
        let w = build_induced(&Character::new(&ctx, vec![Scalar::from_int(5)])?)?;
        for k in -1..=2 {
            println!("{mode}: w_{k} has weight {}", w.weight(k, 0));
        }
        println!("  {:?}", induced_simplicity_verdict(&w)?);
    }
    Ok(())
}
