//! Dense matrices over a field.

use crate::scalars::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<C: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<C>>,
}

impl<C: Field> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![C::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = C::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<C>>) -> Self {
        let rows = data.len();
        let cols = data.first().map(|r| r.len()).unwrap_or(0);
        Matrix { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i][j] = v;
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    if !o.data[k][j].is_zero() {
                        out.data[i][j] = out.data[i][j].add(&a.mul(&o.data[k][j]));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|x| x.mul(s)).collect())
                .collect(),
        }
    }

    pub fn apply(&self, v: &[C]) -> Vec<C> {
        self.data
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(C::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.data[i][c].is_zero()) else {
                continue;
            };
            a.data.swap(r, p);
            let inv = a.data[r][c].inv().unwrap();
            a.data[r] = a.data[r].iter().map(|x| x.mul(&inv)).collect();
            for i in 0..a.rows {
                if i != r && !a.data[i][c].is_zero() {
                    let f = a.data[i][c].clone();
                    let pivot_row = a.data[r].clone();
                    for (x, y) in a.data[i].iter_mut().zip(pivot_row.iter()) {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][n + i] = C::one();
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_rows(
            r.data.iter().map(|row| row[n..].to_vec()).collect(),
        ))
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<C>> {
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![C::zero(); self.cols];
                v[f] = C::one();
                for (i, &p) in piv.iter().enumerate() {
                    v[p] = r.data[i][f].neg();
                }
                v
            })
            .collect()
    }

    /// Basis of the column space, taken from the original columns.
    pub fn column_basis(&self) -> Vec<Vec<C>> {
        let (_, piv) = self.rref();
        piv.iter()
            .map(|&c| (0..self.rows).map(|i| self.data[i][c].clone()).collect())
            .collect()
    }
}

/// Incrementally maintained row space of vectors of a fixed length.
#[derive(Clone, Debug)]
pub struct RowSpace<C: Field> {
    len: usize,
    rows: Vec<(usize, Vec<C>)>,
}

impl<C: Field> RowSpace<C> {
    pub fn new(len: usize) -> Self {
        RowSpace {
            len,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[C]) -> Vec<C> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !w[*p].is_zero() {
                let f = w[*p].clone();
                for (x, y) in w.iter_mut().zip(row.iter()) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        w
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[C]) -> bool {
        assert_eq!(v.len(), self.len);
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().unwrap();
        let w: Vec<C> = w.iter().map(|x| x.mul(&inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(w.iter()) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        self.rows.push((p, w));
        true
    }

    pub fn contains(&self, v: &[C]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn basis(&self) -> Vec<Vec<C>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_kernel_inverse() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        for v in a.kernel() {
            assert!(a.apply(&v).iter().all(|x| x.is_zero()));
        }
        let b = m(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv), Matrix::identity(2));
        assert!(a.inverse().is_none());
    }

    #[test]
    fn row_space() {
        let mut s = RowSpace::new(3);
        let v = |x: &[i64]| x.iter().map(|&i| Scalar::from_int(i)).collect::<Vec<_>>();
        assert!(s.insert(&v(&[1, 1, 0])));
        assert!(s.insert(&v(&[0, 1, 1])));
        assert!(!s.insert(&v(&[1, 2, 1])));
        assert!(s.contains(&v(&[1, 0, -1])));
        assert_eq!(s.dim(), 2);
    }
}
