//! Exact scalars: rational functions in q and cyclotomic numbers.

use qtorus::scalars::{FieldMode, Scalar};

fn main() -> qtorus::Result<()> {
    let q = FieldMode::Generic { r: 1 }.parameter(1)?;
    let one = Scalar::one();
    // (q^2 - 1) / (q - 1) reduces to q + 1
    let f = q.pow(2)?.sub(&one).div(&q.sub(&one))?;
    println!("(q^2 - 1)/(q - 1) = {f}");
    println!("q^-3 * q^5 = {}", q.pow(-3)?.mul(&q.pow(5)?));

    let z = FieldMode::RootOfUnity { m: 6 }.parameter(1)?;
    println!("zeta_6^3 = {}", z.pow(3)?);
    println!("zeta_6^2 - zeta_6 = {}", z.pow(2)?.sub(&z));
    println!("1 / (1 + zeta_6) = {}", one.add(&z).inv()?);
    Ok(())
}
