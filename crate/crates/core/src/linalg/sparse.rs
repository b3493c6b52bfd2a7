//! Sparse row echelon form over a prime field.

use std::collections::HashMap;

use crate::scalars::modp::PrimeField;

/// Sparse vector as sorted `(index, value)` pairs with nonzero values.
pub type SparseVec = Vec<(usize, u64)>;

/// Echelon basis keyed by pivot index; every stored row is monic at its
/// pivot, which is also its smallest index.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: PrimeField,
    rows: HashMap<usize, SparseVec>,
}

fn axpy(f: &PrimeField, v: &SparseVec, c: u64, row: &SparseVec) -> SparseVec {
    // v - c * row
    let mut out = Vec::with_capacity(v.len() + row.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < row.len() {
        let take_v = j >= row.len() || (i < v.len() && v[i].0 < row[j].0);
        let take_r = i >= v.len() || (j < row.len() && row[j].0 < v[i].0);
        if take_v {
            out.push(v[i]);
            i += 1;
        } else if take_r {
            out.push((row[j].0, f.neg(f.mul(c, row[j].1))));
            j += 1;
        } else {
            let x = f.sub(v[i].1, f.mul(c, row[j].1));
            if x != 0 {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl SparseEchelon {
    pub fn new(field: PrimeField) -> Self {
        SparseEchelon {
            field,
            rows: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns true if the dimension grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.sort_unstable_by_key(|e| e.0);
        v.retain(|e| e.1 != 0);
        let f = self.field;
        loop {
            let Some(&(p, c)) = v.first() else {
                return false;
            };
            match self.rows.get(&p) {
                Some(row) => v = axpy(&f, &v, c, row),
                None => {
                    let inv = f.inv(c).unwrap();
                    for e in v.iter_mut() {
                        e.1 = f.mul(e.1, inv);
                    }
                    self.rows.insert(p, v);
                    return true;
                }
            }
        }
    }
}
