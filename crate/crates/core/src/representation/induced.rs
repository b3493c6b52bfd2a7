//! Modules `W = V (x)_B A` induced from a character `V` of a commutative
//! coefficient subalgebra. `W` has basis `w_k = v (x) t^k` and
//! `w_k x_j = wt(k, j) w_k`, `w_k t = w_{k+1}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{commutation_scalar, Context};
use crate::error::{Error, Result};
use crate::scalars::{FieldMode, Scalar};
use crate::skew::require_commutative_b;

#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    ctx: Context,
    values: Vec<Scalar>,
}

impl Character {
    /// `values[j]` is the value on `x_{j+1}`, for `j < n - 1`.
    pub fn new(ctx: &Context, values: Vec<Scalar>) -> Result<Character> {
        require_commutative_b(ctx)?;
        let n = ctx.n();
        if values.len() != n - 1 {
            return Err(Error::DimensionMismatch {
                expected: n - 1,
                got: values.len(),
            });
        }
        if let Some(j) = values.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroCharacterValue(j + 1));
        }
        Ok(Character {
            ctx: ctx.clone(),
            values,
        })
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

/// Finitely supported vector `sum c_k w_k`.
pub type InducedVec = BTreeMap<i64, Scalar>;

#[derive(Clone, Debug)]
pub struct InducedModule {
    chi: Character,
}

pub fn build_induced(chi: &Character) -> Result<InducedModule> {
    let w = InducedModule { chi: chi.clone() };
    w.verify(5)?;
    Ok(w)
}

fn unit(n: usize, j: usize, k: i64) -> Vec<i64> {
    let mut e = vec![0; n];
    e[j] = k;
    e
}

impl InducedModule {
    pub fn ctx(&self) -> &Context {
        self.chi.ctx()
    }

    pub fn character(&self) -> &Character {
        &self.chi
    }

    /// Exponent vector `pairing(e_n, e_j)` governing the weight of `x_j`.
    pub fn weight_exponent(&self, j: usize) -> Vec<i64> {
        let n = self.ctx().n();
        self.ctx()
            .pairing_unchecked(&unit(n, n - 1, 1), &unit(n, j, 1))
    }

    /// `wt(k, j) = chi(x_j) q_power(k pairing(e_n, e_j))` for `j < n - 1`.
    pub fn weight(&self, k: i64, j: usize) -> Scalar {
        let e: Vec<i64> = self.weight_exponent(j).iter().map(|x| k * x).collect();
        self.chi.values[j].mul(&self.ctx().q_power(&e))
    }

    pub fn weights(&self, k: i64) -> Vec<Scalar> {
        (0..self.ctx().n() - 1).map(|j| self.weight(k, j)).collect()
    }

    /// `v x_{g+1}^{power}`.
    pub fn act_generator(&self, v: &InducedVec, g: usize, power: i64) -> InducedVec {
        let n = self.ctx().n();
        let mut out = BTreeMap::new();
        for (&k, c) in v {
            if g + 1 == n {
                out.insert(k + power, c.clone());
            } else {
                let w = self.weight(k, g);
                let w = if power > 0 { w } else { w.inv().unwrap() };
                out.insert(k, c.mul(&w));
            }
        }
        out
    }

    fn verify(&self, range: i64) -> Result<()> {
        let n = self.ctx().n();
        for k in -range..=range {
            let v: InducedVec = [(k, Scalar::one())].into_iter().collect();
            for g in 0..n {
                for h in g + 1..n {
                    let c = commutation_scalar(self.ctx(), &unit(n, g, 1), &unit(n, h, 1));
                    let lhs = self.act_generator(&self.act_generator(&v, g, 1), h, 1);
                    let rhs: InducedVec = self
                        .act_generator(&self.act_generator(&v, h, 1), g, 1)
                        .into_iter()
                        .map(|(k, x)| (k, x.mul(&c)))
                        .collect();
                    if lhs != rhs {
                        return Err(Error::Verification(format!(
                            "relation between x{} and x{} fails on w_{k}",
                            g + 1,
                            h + 1
                        )));
                    }
                }
                let back = self.act_generator(&self.act_generator(&v, g, 1), g, -1);
                if back != v {
                    return Err(Error::Verification(format!(
                        "x{} is not invertible on w_{k}",
                        g + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum InducedVerdict {
    /// Weight vectors are pairwise distinct: the exponent of `x_j`'s weight
    /// is a nonzero vector, so `wt(k, j) = wt(k', j)` forces `k = k'`.
    Simple {
        generator: usize,
        exponent: Vec<i64>,
        checked_range: i64,
    },
    /// `U = span{w_{k+p} - w_k}` is a nonzero proper submodule with
    /// `dim W / U = p`.
    ProperSubmodule {
        period: u64,
        quotient_dim: u64,
        witness: String,
    },
}

/// Range on which pairwise distinctness of weights is also checked directly.
pub const DISTINCT_RANGE: i64 = 50;

fn weight_period(w: &InducedModule) -> u64 {
    let n = w.ctx().n();
    let mode = w.ctx().mode();
    let exps: Vec<Vec<i64>> = (0..n - 1).map(|j| w.weight_exponent(j)).collect();
    let m = match mode {
        FieldMode::RootOfUnity { m } => m as u64,
        FieldMode::Generic { .. } => 1,
    };
    (1..=m)
        .find(|&p| {
            exps.iter().all(|e| {
                let s: Vec<i64> = e.iter().map(|x| x * p as i64).collect();
                mode.is_trivial_exponent(&s)
            })
        })
        .unwrap_or(m)
}

pub fn induced_simplicity_verdict(w: &InducedModule) -> Result<InducedVerdict> {
    let n = w.ctx().n();
    if let FieldMode::Generic { .. } = w.ctx().mode() {
        if let Some(j) = (0..n - 1).find(|&j| w.weight_exponent(j).iter().any(|&x| x != 0)) {
            let table: Vec<Vec<Scalar>> = (-DISTINCT_RANGE..=DISTINCT_RANGE)
                .map(|k| w.weights(k))
                .collect();
            for a in 0..table.len() {
                for b in a + 1..table.len() {
                    if table[a] == table[b] {
                        return Err(Error::Verification(format!(
                            "weights of w_{} and w_{} coincide",
                            a as i64 - DISTINCT_RANGE,
                            b as i64 - DISTINCT_RANGE
                        )));
                    }
                }
            }
            return Ok(InducedVerdict::Simple {
                generator: j + 1,
                exponent: w.weight_exponent(j),
                checked_range: DISTINCT_RANGE,
            });
        }
    }
    let p = weight_period(w);
    let pi = p as i64;
    // pi(w_k) = e_{k mod p}; U is spanned by w_{k+p} - w_k and U = ker pi
    let project = |v: &InducedVec| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); p as usize];
        for (&k, c) in v {
            let i = k.rem_euclid(pi) as usize;
            out[i] = out[i].add(c);
        }
        out
    };
    for k in -pi..2 * pi {
        let u: InducedVec = [(k + pi, Scalar::one()), (k, Scalar::one().neg())]
            .into_iter()
            .collect();
        for g in 0..n {
            for power in [1, -1] {
                let img = w.act_generator(&u, g, power);
                if project(&img).iter().any(|x| !x.is_zero()) {
                    return Err(Error::Verification(format!(
                        "witness submodule not closed under x{}^{power}",
                        g + 1
                    )));
                }
            }
        }
    }
    let w0: InducedVec = [(0, Scalar::one())].into_iter().collect();
    if project(&w0).iter().all(|x| x.is_zero()) {
        return Err(Error::Verification(
            "witness submodule is not proper".into(),
        ));
    }
    Ok(InducedVerdict::ProperSubmodule {
        period: p,
        quotient_dim: p,
        witness: format!("(t^{p} - 1) W = span{{w_(k+{p}) - w_k}}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ExponentSystem;
    use std::sync::Arc;

    fn plane(mode: FieldMode) -> Context {
        Arc::new(ExponentSystem::quantum_plane(mode))
    }

    #[test]
    fn weights_generic() {
        let c = plane(FieldMode::Generic { r: 1 });
        let w = build_induced(&Character::new(&c, vec![Scalar::one()]).unwrap()).unwrap();
        let q = FieldMode::Generic { r: 1 }.parameter(1).unwrap();
        assert_eq!(w.weight(3, 0), q.pow(-3).unwrap());
        assert_eq!(w.weight(-2, 0), q.pow(2).unwrap());
        let chi = Character::new(&c, vec![Scalar::from_int(5)]).unwrap();
        assert_eq!(
            build_induced(&chi).unwrap().weight(0, 0),
            Scalar::from_int(5)
        );
        assert!(matches!(
            induced_simplicity_verdict(&w).unwrap(),
            InducedVerdict::Simple { .. }
        ));
        assert_eq!(
            Character::new(&c, vec![Scalar::zero()]),
            Err(Error::ZeroCharacterValue(1))
        );
    }

    #[test]
    fn root_mode_witness() {
        let mode = FieldMode::RootOfUnity { m: 3 };
        let c = plane(mode);
        let w = build_induced(&Character::new(&c, vec![Scalar::one()]).unwrap()).unwrap();
        let z = mode.parameter(1).unwrap();
        assert_eq!(w.weight(1, 0), z.pow(-1).unwrap());
        assert_eq!(w.weight(3, 0), Scalar::one());
        match induced_simplicity_verdict(&w).unwrap() {
            InducedVerdict::ProperSubmodule {
                period,
                quotient_dim,
                ..
            } => {
                assert_eq!((period, quotient_dim), (3, 3));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn three_generators() {
        let sys = ExponentSystem::single(
            FieldMode::Generic { r: 1 },
            vec![vec![0, 0, 1], vec![0, 0, 1], vec![-1, -1, 0]],
        )
        .unwrap();
        let c: Context = Arc::new(sys);
        let w = build_induced(&Character::new(&c, vec![Scalar::one(), Scalar::one()]).unwrap())
            .unwrap();
        let q = FieldMode::Generic { r: 1 }.parameter(1).unwrap();
        assert_eq!(w.weights(1), vec![q.pow(-1).unwrap(), q.pow(-1).unwrap()]);
        assert!(matches!(
            induced_simplicity_verdict(&w).unwrap(),
            InducedVerdict::Simple { .. }
        ));
        let central = Arc::new(
            ExponentSystem::single(
                FieldMode::Generic { r: 1 },
                vec![vec![0, 1, 0], vec![-1, 0, 0], vec![0, 0, 0]],
            )
            .unwrap(),
        );
        assert!(matches!(
            Character::new(&central, vec![Scalar::one(), Scalar::from_int(2)]),
            Err(Error::NonCommutativeCoefficients(_))
        ));
    }
}
