//! Empirical growth of `W_m = W_0 V_0^m` for contraction modules.
//!
//! `W_0` is spanned by the free basis and `V_0 = F + sum F x_i + F x_i^{-1}`.
//! Dimensions are computed after specializing the ground field into `F_p`,
//! so each `f(m)` is a lower bound that is exact for all but finitely many
//! parameter choices.

use std::collections::HashMap;

use serde::Serialize;

use super::contraction::ContractionModule;
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg::sparse::{SparseEchelon, SparseVec};
use crate::scalars::modp::Specialization;
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthEstimate {
    /// `f(0), ..., f(max_steps)`.
    pub table: Vec<usize>,
    pub slope: f64,
    /// Inclusive range of `m` used for the fit.
    pub window: (usize, usize),
    pub prime: u64,
}

/// Cap on `dim W_m` before giving up.
pub const DEFAULT_GROWTH_BUDGET: usize = 400_000;

struct Interner {
    ids: HashMap<(usize, Vec<i64>), usize>,
    keys: Vec<(usize, Vec<i64>)>,
}

impl Interner {
    fn id(&mut self, key: (usize, Vec<i64>)) -> usize {
        if let Some(&i) = self.ids.get(&key) {
            return i;
        }
        let i = self.keys.len();
        self.ids.insert(key.clone(), i);
        self.keys.push(key);
        i
    }
}

struct Actions<'a> {
    module: &'a ContractionModule,
    spec: Specialization,
    interner: Interner,
    /// Image of interned monomial under generator slot `2g + (power < 0)`.
    cache: HashMap<(usize, usize), SparseVec>,
}

impl Actions<'_> {
    fn image(&mut self, idx: usize, slot: usize) -> Result<SparseVec> {
        if let Some(v) = self.cache.get(&(idx, slot)) {
            return Ok(v.clone());
        }
        let (i, b) = self.interner.keys[idx].clone();
        let ctx = self.module.ctx().clone();
        let mut v = self.module.zero();
        let mut a = b.clone();
        a.push(0);
        v[i] = AlgebraElement::monomial(&ctx, a, Scalar::one());
        let g = slot / 2;
        let power = if slot % 2 == 0 { 1 } else { -1 };
        let img = self.module.act_generator(&v, g, power);
        let mut out = Vec::new();
        for (k, beta) in img.iter().enumerate() {
            for (e, c) in beta.terms() {
                let val = self.spec.eval(c).ok_or_else(|| {
                    Error::Verification(format!(
                        "coefficient {} has a pole at the chosen specialization",
                        c.render()
                    ))
                })?;
                if val != 0 {
                    let id = self.interner.id((k, e[..e.len() - 1].to_vec()));
                    out.push((id, val));
                }
            }
        }
        out.sort_unstable_by_key(|x| x.0);
        self.cache.insert((idx, slot), out.clone());
        Ok(out)
    }

    fn apply(&mut self, v: &SparseVec, slot: usize) -> Result<SparseVec> {
        let f = self.spec.field;
        let mut acc: HashMap<usize, u64> = HashMap::new();
        for &(idx, c) in v {
            for (j, x) in self.image(idx, slot)? {
                let e = acc.entry(j).or_insert(0);
                *e = f.add(*e, f.mul(c, x));
            }
        }
        let mut out: SparseVec = acc.into_iter().filter(|x| x.1 != 0).collect();
        out.sort_unstable_by_key(|x| x.0);
        Ok(out)
    }
}

/// Least-squares slope of `ln f(m)` against `ln m` over `m` in the window.
pub fn log_log_slope(table: &[usize], lo: usize, hi: usize) -> f64 {
    let pts: Vec<(f64, f64)> = (lo.max(1)..=hi)
        .filter(|&m| table[m] > 0)
        .map(|m| ((m as f64).ln(), (table[m] as f64).ln()))
        .collect();
    if pts.len() < 2 {
        return 0.0;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

pub fn gk_growth_estimate(
    module: &ContractionModule,
    max_steps: usize,
    seed: u64,
) -> Result<GrowthEstimate> {
    gk_growth_estimate_with_budget(module, max_steps, seed, DEFAULT_GROWTH_BUDGET)
}

pub fn gk_growth_estimate_with_budget(
    module: &ContractionModule,
    max_steps: usize,
    seed: u64,
    budget: usize,
) -> Result<GrowthEstimate> {
    let n = module.n();
    let spec = Specialization::new(module.ctx().mode(), seed);
    let prime = spec.field.p;
    let mut act = Actions {
        module,
        spec,
        interner: Interner {
            ids: HashMap::new(),
            keys: Vec::new(),
        },
        cache: HashMap::new(),
    };
    let mut span = SparseEchelon::new(act.spec.field);
    let mut frontier = Vec::new();
    for i in 0..module.d() {
        let v = vec![(act.interner.id((i, vec![0; n - 1])), 1)];
        if span.insert(v.clone()) {
            frontier.push(v);
        }
    }
    let mut table = vec![span.dim()];
    // W_m = W_{m-1} + (new part of W_{m-1}) V_0
    for _ in 1..=max_steps {
        let mut next = Vec::new();
        for v in &frontier {
            for slot in 0..2 * n {
                let w = act.apply(v, slot)?;
                if span.insert(w.clone()) {
                    next.push(w);
                }
            }
            if span.dim() > budget {
                return Err(Error::BudgetExceeded(format!(
                    "growth dimension exceeds {budget} after {} steps",
                    table.len() - 1
                )));
            }
        }
        table.push(span.dim());
        frontier = next;
    }
    let lo = (max_steps / 2).max(1);
    let slope = log_log_slope(&table, lo, max_steps);
    Ok(GrowthEstimate {
        table,
        slope,
        window: (lo, max_steps),
        prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse;
    use crate::algebra::Context;
    use crate::lattice::ExponentSystem;
    use crate::representation::contraction::build_contraction;
    use crate::scalars::FieldMode;
    use std::sync::Arc;

    #[test]
    fn plane_table() {
        let c: Context = Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }));
        let m = build_contraction(&parse(&c, "t^2 - 1").unwrap()).unwrap();
        let g = gk_growth_estimate(&m, 24, 1).unwrap();
        for (k, &v) in g.table.iter().enumerate() {
            assert_eq!(v, 2 * (2 * k + 1));
        }
        assert!((g.slope - 1.0).abs() < 0.15);
    }

    #[test]
    fn rank_two_coefficients() {
        let sys = ExponentSystem::single(
            FieldMode::Generic { r: 1 },
            vec![vec![0, 0, 1], vec![0, 0, 1], vec![-1, -1, 0]],
        )
        .unwrap();
        let c: Context = Arc::new(sys);
        let m = build_contraction(&parse(&c, "t - 1").unwrap()).unwrap();
        let g = gk_growth_estimate(&m, 24, 1).unwrap();
        for (k, &v) in g.table.iter().enumerate() {
            assert_eq!(v, 2 * k * k + 2 * k + 1);
        }
        assert!((g.slope - 2.0).abs() < 0.15);
    }

    #[test]
    fn budget() {
        let c: Context = Arc::new(ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 }));
        let m = build_contraction(&parse(&c, "t - 1").unwrap()).unwrap();
        assert!(matches!(
            gk_growth_estimate_with_budget(&m, 30, 1, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
