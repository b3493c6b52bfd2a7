use num_bigint::BigInt;
use qtorus::lattice::intmat::{from_i64, mat_mul, smith_normal_form};

fn main() {
    let m = from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    let show = |a: &Vec<Vec<BigInt>>| {
        a.iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    };
    println!("M = {}", show(&m));
    println!("D = {}", show(&snf.d));
    println!("U = {}", show(&snf.u));
    println!("V = {}", show(&snf.v));
    assert_eq!(mat_mul(&mat_mul(&snf.u, &m), &snf.v), snf.d);
    println!("U M V = D");
}
