//! Polynomials over `F_p` and a column Hermite form over `F_p[x]`, used as a
//! fast screen before exact computations.

use crate::scalars::modp::PrimeField;

/// Coefficients lowest degree first, no trailing zeros.
pub type PolyP = Vec<u64>;

fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn deg(a: &PolyP) -> Option<usize> {
    a.len().checked_sub(1)
}

/// `a - c x^s b`.
fn sub_shifted(f: PrimeField, a: &PolyP, b: &PolyP, c: u64, s: usize) -> PolyP {
    let mut out = a.clone();
    if out.len() < b.len() + s {
        out.resize(b.len() + s, 0);
    }
    for (i, &y) in b.iter().enumerate() {
        out[i + s] = f.sub(out[i + s], f.mul(c, y));
    }
    trim(out)
}

/// Quotient of `a` by nonzero `b`, with the remainder.
pub fn divrem(f: PrimeField, a: &PolyP, b: &PolyP) -> (PolyP, PolyP) {
    let db = deg(b).expect("nonzero divisor");
    let lead = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = a.clone();
    let mut q = vec![0; a.len().saturating_sub(db)];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead);
        q[dr - db] = c;
        r = sub_shifted(f, &r, b, c, dr - db);
    }
    (trim(q), r)
}

fn mul(f: PrimeField, a: &PolyP, b: &PolyP) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

fn sub(f: PrimeField, a: &PolyP, b: &PolyP) -> PolyP {
    sub_shifted(f, a, b, 1, 0)
}

pub fn gcd(f: PrimeField, a: &PolyP, b: &PolyP) -> PolyP {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = divrem(f, &a, &b).1;
        a = b;
        b = r;
    }
    a
}

/// Removes the largest power of `x` dividing `a`.
pub fn strip_x(a: &PolyP) -> PolyP {
    let k = a.iter().take_while(|&&x| x == 0).count();
    a[k..].to_vec()
}

/// Determinant of a square matrix of polynomials.
pub fn det(f: PrimeField, m: &[Vec<PolyP>]) -> PolyP {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    if n == 1 {
        return trim(m[0][0].clone());
    }
    let mut acc = Vec::new();
    for j in 0..n {
        if m[0][j].is_empty() {
            continue;
        }
        let minor: Vec<Vec<PolyP>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = mul(f, &m[0][j], &det(f, &minor));
        acc = if j % 2 == 0 {
            sub_shifted(f, &acc, &term, f.neg(1), 0)
        } else {
            sub(f, &acc, &term)
        };
    }
    acc
}

/// Nonzero monomial, i.e. a unit of `F_p[x, 1/x]`.
pub fn is_laurent_unit(a: &PolyP) -> bool {
    a.iter().filter(|&&x| x != 0).count() == 1
}

/// Pivots of a column Hermite form of the `rows x cols` matrix given by its
/// columns. The columns span `F_p[x, 1/x]^rows` exactly when there are
/// `rows` pivots and each is a monomial.
pub fn column_hermite_pivots(f: PrimeField, cols: &[Vec<PolyP>], rows: usize) -> Vec<PolyP> {
    let mut cols: Vec<Vec<PolyP>> = cols
        .iter()
        .map(|c| c.iter().map(|p| trim(p.clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    for r in 0..rows {
        // Euclid across the columns on row r until one nonzero entry is left
        loop {
            let mut live: Vec<usize> = (0..cols.len())
                .filter(|&j| !cols[j][r].is_empty())
                .collect();
            if live.len() <= 1 {
                break;
            }
            live.sort_by_key(|&j| deg(&cols[j][r]));
            let p = live[0];
            let piv = cols[p][r].clone();
            let pcol = cols[p].clone();
            for &j in &live[1..] {
                let (q, _) = divrem(f, &cols[j][r], &piv);
                for i in r..rows {
                    let v = sub(f, &cols[j][i], &mul(f, &q, &pcol[i]));
                    cols[j][i] = v;
                }
            }
        }
        match (0..cols.len()).find(|&j| !cols[j][r].is_empty()) {
            Some(j) => {
                let c = cols.swap_remove(j);
                pivots.push(c[r].clone());
            }
            None => return pivots,
        }
    }
    pivots
}
