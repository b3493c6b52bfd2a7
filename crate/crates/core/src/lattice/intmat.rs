//! Dense integer matrices: Smith and Hermite normal forms, exact solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn from_i64(m: &[Vec<i64>]) -> IntMatrix {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().expect("entry fits in i64"))
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Result of a Smith normal form computation: `u * m * v == d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries `d_1 | d_2 | ...`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self
            .d
            .len()
            .min(self.d.first().map(|r| r.len()).unwrap_or(0));
        (0..k).map(|i| self.d[i][i].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// `row_dst -= q * row_src`
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    let src_row = m[src].clone();
    for (x, s) in m[dst].iter_mut().zip(src_row.iter()) {
        *x -= q * s;
    }
}

/// `col_dst -= q * col_src`
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] -= q * s;
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, u, v);
            };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    row_axpy(&mut a, i, t, &q);
                    row_axpy(&mut u, i, t, &q);
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    col_axpy(&mut a, j, t, &q);
                    col_axpy(&mut v, j, t, &q);
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            let pivot = a[t][t].clone();
            let bad_row =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&pivot)));
            match bad_row {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    finish(a, u, v)
}

fn finish(mut a: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> Snf {
    let k = a.len().min(a.first().map(|r| r.len()).unwrap_or(0));
    for t in 0..k {
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Snf { u, d: a, v }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = val / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

pub fn rank(m: &IntMatrix) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    smith_normal_form(m).rank()
}

/// Row-style Hermite normal form of the lattice spanned by `rows`; zero rows
/// are dropped. Pivots are positive and entries above a pivot are reduced
/// into `[0, pivot)`, which makes the result unique for a given lattice.
pub fn hermite_rows(rows: &IntMatrix) -> IntMatrix {
    let mut a: IntMatrix = rows.to_vec();
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut p = 0;
    for col in 0..ncols {
        if p >= a.len() {
            break;
        }
        loop {
            let best = (p..a.len())
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
            let Some(bi) = best else { break };
            a.swap(p, bi);
            let mut clean = true;
            for k in p + 1..a.len() {
                if !a[k][col].is_zero() {
                    let q = &a[k][col] / &a[p][col];
                    row_axpy(&mut a, k, p, &q);
                    if !a[k][col].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if a[p][col].is_zero() {
            continue;
        }
        if a[p][col].is_negative() {
            for x in a[p].iter_mut() {
                *x = -x.clone();
            }
        }
        for k in 0..p {
            let q = a[k][col].div_floor(&a[p][col]);
            if !q.is_zero() {
                row_axpy(&mut a, k, p, &q);
            }
        }
        p += 1;
    }
    a.truncate(p);
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    a
}

/// Integer coefficients `c` with `sum_i c_i * basis[i] == v`, if any.
pub fn solve_in_span(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // columns are the basis vectors
    let m = transpose(basis);
    let snf = smith_normal_form(&m);
    let k = basis.len();
    let uv: Vec<BigInt> = snf
        .u
        .iter()
        .map(|row| row.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
        .collect();
    let mut y = vec![BigInt::zero(); k];
    for (i, val) in uv.iter().enumerate() {
        let d = if i < k && i < snf.d.len() {
            snf.d[i][i].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !val.is_zero() {
                return None;
            }
        } else {
            if !val.is_multiple_of(&d) {
                return None;
            }
            y[i] = val / &d;
        }
    }
    Some(
        snf.v
            .iter()
            .map(|row| row.iter().zip(y.iter()).map(|(a, b)| a * b).sum())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn check(mat: &IntMatrix) -> Snf {
        let s = smith_normal_form(mat);
        assert_eq!(mat_mul(&mat_mul(&s.u, mat), &s.v), s.d);
        assert_eq!(determinant(&s.u).abs(), BigInt::one());
        assert_eq!(determinant(&s.v).abs(), BigInt::one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            } else {
                assert!(w[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn snf_identity() {
        let s = check(&identity(3));
        assert_eq!(s.d, identity(3));
    }

    #[test]
    fn snf_diag_2_3() {
        let s = check(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn snf_zero() {
        let s = check(&m(&[&[0]]));
        assert_eq!(s.d, m(&[&[0]]));
    }

    #[test]
    fn snf_rectangular() {
        let s = check(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(
            s.diagonal(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        check(&m(&[&[0, 1, -1], &[3, 0, 2]]));
        check(&m(&[&[4], &[6]]));
    }

    #[test]
    fn hermite_is_canonical() {
        let a = hermite_rows(&m(&[&[3, 0], &[0, 3]]));
        let b = hermite_rows(&m(&[&[3, 3], &[0, 3], &[6, 9]]));
        assert_eq!(a, b);
        assert_eq!(a, m(&[&[3, 0], &[0, 3]]));
    }

    #[test]
    fn solving() {
        let basis = m(&[&[1, 2]]);
        let sol = solve_in_span(&basis, &[BigInt::from(2), BigInt::from(4)]).unwrap();
        assert_eq!(sol, vec![BigInt::from(2)]);
        assert!(solve_in_span(&basis, &[BigInt::from(1), BigInt::from(1)]).is_none());
        let b2 = m(&[&[2, 0], &[0, 2]]);
        assert!(solve_in_span(&b2, &[BigInt::from(1), BigInt::from(0)]).is_none());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(&m(&[&[2, 1, 0], &[1, 1, 0], &[0, 0, 5]])),
            BigInt::from(5)
        );
    }
}
