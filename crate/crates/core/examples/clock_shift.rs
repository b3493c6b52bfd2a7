use qtorus::representation::{certify_simplicity_finite, clock_shift_module, FiniteVerdict};
use qtorus::scalars::Scalar;

fn main() -> qtorus::Result<()> {
    for m in [2, 3, 5] {
        let c = clock_shift_module(m, &Scalar::one())?;
        println!("m = {m}: {:?}", certify_simplicity_finite(&c, 20));
    }
    let a = clock_shift_module(2, &Scalar::one())?;
    let b = clock_shift_module(2, &Scalar::from_int(-1))?;
    if let FiniteVerdict::InvariantSubspace { span_dim, basis } =
        certify_simplicity_finite(&a.direct_sum(&b)?, 20)
    {
        println!("direct sum: words span {span_dim} dims, invariant subspace {basis:?}");
    }
    Ok(())
}
