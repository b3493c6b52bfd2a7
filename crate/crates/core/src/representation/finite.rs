//! Finite-dimensional modules given by matrices, acting on row vectors from
//! the right: `v x_j = v X_j`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{commutation_scalar, Context};
use crate::error::{Error, Result};
use crate::lattice::ExponentSystem;
use crate::linalg::{Matrix, RowSpace};
use crate::scalars::{FieldMode, Scalar};

#[derive(Clone, Debug)]
pub struct FiniteDimModule {
    ctx: Context,
    mats: Vec<Matrix<Scalar>>,
    inverses: Vec<Matrix<Scalar>>,
}

fn unit(n: usize, j: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[j] = 1;
    e
}

impl FiniteDimModule {
    /// Checks `X_i X_j = c_ij X_j X_i` where `x_i x_j = c_ij x_j x_i`, and
    /// that every `X_i` is invertible.
    pub fn new(ctx: &Context, mats: Vec<Matrix<Scalar>>) -> Result<FiniteDimModule> {
        let n = ctx.n();
        if mats.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: mats.len(),
            });
        }
        let d = mats.first().map(|m| m.rows).unwrap_or(0);
        for m in &mats {
            if m.rows != d || m.cols != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: m.rows.max(m.cols),
                });
            }
        }
        let mut inverses = Vec::new();
        for (j, m) in mats.iter().enumerate() {
            inverses.push(m.inverse().ok_or_else(|| {
                Error::Verification(format!("matrix for x{} is singular", j + 1))
            })?);
        }
        for i in 0..n {
            for j in i + 1..n {
                let c = commutation_scalar(ctx, &unit(n, i), &unit(n, j));
                if mats[i].mul(&mats[j]) != mats[j].mul(&mats[i]).scale(&c) {
                    return Err(Error::Verification(format!(
                        "X{} X{} != ({}) X{} X{}",
                        i + 1,
                        j + 1,
                        c.render(),
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(FiniteDimModule {
            ctx: ctx.clone(),
            mats,
            inverses,
        })
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.mats.first().map(|m| m.rows).unwrap_or(0)
    }

    pub fn matrices(&self) -> &[Matrix<Scalar>] {
        &self.mats
    }

    /// Block-diagonal sum with another module over the same algebra.
    pub fn direct_sum(&self, o: &FiniteDimModule) -> Result<FiniteDimModule> {
        let (a, b) = (self.dim(), o.dim());
        let mats = self
            .mats
            .iter()
            .zip(&o.mats)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(a + b, a + b);
                for i in 0..a {
                    for j in 0..a {
                        m.set(i, j, x.get(i, j).clone());
                    }
                }
                for i in 0..b {
                    for j in 0..b {
                        m.set(a + i, a + j, y.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        FiniteDimModule::new(&self.ctx, mats)
    }

    fn generators(&self) -> impl Iterator<Item = &Matrix<Scalar>> {
        self.mats.iter().chain(self.inverses.iter())
    }
}

/// `X_1 = scale diag(1, zeta, ..., zeta^{m-1})`, `X_2` the cyclic shift
/// `e_i -> e_{i+1}`, over the quantum plane at a primitive `m`-th root.
pub fn clock_shift_module(m: u32, scale: &Scalar) -> Result<FiniteDimModule> {
    let mode = FieldMode::RootOfUnity { m };
    mode.validate()?;
    if scale.as_cyclo(m).is_none() {
        return Err(Error::WrongMode(format!(
            "scale {} is not in Q(zeta_{m})",
            scale.render()
        )));
    }
    if scale.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ctx: Context = Arc::new(ExponentSystem::quantum_plane(mode));
    let z = mode.parameter(1)?;
    let mm = m as usize;
    let mut x1 = Matrix::zeros(mm, mm);
    let mut x2 = Matrix::zeros(mm, mm);
    let mut zi = Scalar::one();
    for i in 0..mm {
        x1.set(i, i, scale.mul(&zi));
        zi = zi.mul(&z);
        x2.set((i + 1) % mm, i, Scalar::one());
    }
    FiniteDimModule::new(&ctx, vec![x1, x2])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum FiniteVerdict {
    /// The words in the generators span all `d x d` matrices.
    AbsolutelySimple {
        span_dim: usize,
    },
    /// A nonzero proper subspace closed under every generator.
    InvariantSubspace {
        span_dim: usize,
        basis: Vec<Vec<String>>,
    },
    Undecided {
        span_dim: usize,
        stabilized: bool,
    },
}

fn flatten(m: &Matrix<Scalar>) -> Vec<Scalar> {
    m.data.iter().flatten().cloned().collect()
}

fn unflatten(v: &[Scalar], d: usize) -> Matrix<Scalar> {
    Matrix::from_rows(v.chunks(d).map(|r| r.to_vec()).collect())
}

fn row_times(v: &[Scalar], m: &Matrix<Scalar>) -> Vec<Scalar> {
    (0..m.cols)
        .map(|j| {
            v.iter()
                .enumerate()
                .fold(Scalar::zero(), |acc, (i, x)| acc.add(&x.mul(m.get(i, j))))
        })
        .collect()
}

/// `v A` for the algebra `A` spanned by `span`.
fn orbit(v: &[Scalar], span: &[Matrix<Scalar>]) -> RowSpace<Scalar> {
    let mut u = RowSpace::new(v.len());
    for w in span {
        u.insert(&row_times(v, w));
    }
    u
}

/// Burnside test: the algebra generated by the `X_j^{+-1}` is all of
/// `M_d` exactly when the module is absolutely simple.
pub fn certify_simplicity_finite(m: &FiniteDimModule, word_length_cap: usize) -> FiniteVerdict {
    let d = m.dim();
    let mut span = RowSpace::new(d * d);
    let id = Matrix::<Scalar>::identity(d);
    span.insert(&flatten(&id));
    let mut frontier = vec![id.clone()];
    let mut stabilized = false;
    for _ in 0..word_length_cap {
        let mut next = Vec::new();
        for w in &frontier {
            for g in m.generators() {
                let p = w.mul(g);
                if span.insert(&flatten(&p)) {
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            stabilized = true;
            break;
        }
        frontier = next;
    }
    let span_dim = span.dim();
    if span_dim == d * d {
        return FiniteVerdict::AbsolutelySimple { span_dim };
    }
    if !stabilized {
        return FiniteVerdict::Undecided {
            span_dim,
            stabilized,
        };
    }
    let algebra: Vec<Matrix<Scalar>> = span.basis().iter().map(|v| unflatten(v, d)).collect();
    let mut candidates: Vec<Vec<Scalar>> = id.data.clone();
    for a in &algebra {
        if a.rank() < d {
            candidates.extend(a.data.iter().cloned());
            let mut t = Matrix::zeros(d, d);
            for i in 0..d {
                for j in 0..d {
                    t.set(i, j, a.get(j, i).clone());
                }
            }
            candidates.extend(t.kernel());
        }
    }
    for v in candidates {
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        let u = orbit(&v, &algebra);
        if u.dim() < d {
            let basis = u.basis();
            debug_assert!(basis
                .iter()
                .all(|b| m.generators().all(|g| u.contains(&row_times(b, g)))));
            return FiniteVerdict::InvariantSubspace {
                span_dim,
                basis: basis
                    .iter()
                    .map(|r| r.iter().map(|x| x.render()).collect())
                    .collect(),
            };
        }
    }
    FiniteVerdict::Undecided {
        span_dim,
        stabilized,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clock_shift_relations() {
        for m in [2, 3, 5] {
            let c = clock_shift_module(m, &Scalar::one()).unwrap();
            let z = FieldMode::RootOfUnity { m }.parameter(1).unwrap();
            let x = c.matrices();
            assert_eq!(x[0].mul(&x[1]), x[1].mul(&x[0]).scale(&z));
        }
        assert!(clock_shift_module(1, &Scalar::one()).is_err());
        let q = FieldMode::Generic { r: 1 }.parameter(1).unwrap();
        assert!(matches!(
            clock_shift_module(3, &q),
            Err(Error::WrongMode(_))
        ));
    }

    #[test]
    fn burnside() {
        let c = clock_shift_module(3, &Scalar::from_int(2)).unwrap();
        assert_eq!(
            certify_simplicity_finite(&c, 10),
            FiniteVerdict::AbsolutelySimple { span_dim: 9 }
        );
        let a = clock_shift_module(2, &Scalar::one()).unwrap();
        let b = clock_shift_module(2, &Scalar::from_int(3)).unwrap();
        match certify_simplicity_finite(&a.direct_sum(&b).unwrap(), 10) {
            FiniteVerdict::InvariantSubspace { span_dim, basis } => {
                assert!(span_dim <= 8);
                assert!(!basis.is_empty() && basis.len() < 4);
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn one_dimensional() {
        let ctx: Context = Arc::new(
            ExponentSystem::single(FieldMode::Generic { r: 1 }, vec![vec![0, 0], vec![0, 0]])
                .unwrap(),
        );
        let m = FiniteDimModule::new(
            &ctx,
            vec![
                Matrix::from_rows(vec![vec![Scalar::from_int(2)]]),
                Matrix::from_rows(vec![vec![Scalar::from_int(-3)]]),
            ],
        )
        .unwrap();
        assert_eq!(
            certify_simplicity_finite(&m, 4),
            FiniteVerdict::AbsolutelySimple { span_dim: 1 }
        );
    }
}
