//! The exponent lattice `A = Z^n` with its alternating pairing(s).
//!
//! An [`ExponentSystem`] stores `r` antisymmetric integer matrices `E^(k)`;
//! the multiparameters are `q_ij = prod_k q_k^{E^(k)_ij}` (or `zeta^{E_ij}`).

pub mod intmat;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{FieldMode, Scalar};
use intmat::{from_i64, hermite_rows, smith_normal_form, to_i64, IntMatrix};

pub use intmat::{smith_normal_form as snf, Snf};

/// Exponent matrices of the multiparameters together with the field mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentSystem {
    n: usize,
    mode: FieldMode,
    e: Vec<Vec<Vec<i64>>>,
}

/// Checks shape, zero diagonal and antisymmetry of every matrix. The
/// reported location is 1-based `(k, i, j)`.
pub fn validate(n: usize, mode: FieldMode, e: &[Vec<Vec<i64>>]) -> Result<()> {
    mode.validate()?;
    if n == 0 {
        return Err(Error::Config("n must be at least 1".into()));
    }
    if e.len() != mode.params() {
        return Err(Error::DimensionMismatch {
            expected: mode.params(),
            got: e.len(),
        });
    }
    for mat in e {
        if mat.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: mat.len(),
            });
        }
        for row in mat {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
    }
    for (k, mat) in e.iter().enumerate() {
        // each pair is checked once, at its lower-triangle position
        for i in 0..n {
            for j in 0..=i {
                let bad = if i == j {
                    (mat[i][i] != 0).then(|| format!("diagonal entry {} is not 0", mat[i][i]))
                } else {
                    (mat[i][j] != -mat[j][i]).then(|| {
                        format!(
                            "E[{}][{}] = {} but E[{}][{}] = {}",
                            i + 1,
                            j + 1,
                            mat[i][j],
                            j + 1,
                            i + 1,
                            mat[j][i]
                        )
                    })
                };
                if let Some(reason) = bad {
                    return Err(Error::InvalidExponentSystem {
                        k: k + 1,
                        i: i + 1,
                        j: j + 1,
                        reason,
                    });
                }
            }
        }
    }
    Ok(())
}

impl ExponentSystem {
    pub fn new(n: usize, mode: FieldMode, e: Vec<Vec<Vec<i64>>>) -> Result<ExponentSystem> {
        validate(n, mode, &e)?;
        Ok(ExponentSystem { n, mode, e })
    }

    /// One matrix; `r = 1`.
    pub fn single(mode: FieldMode, e: Vec<Vec<i64>>) -> Result<ExponentSystem> {
        ExponentSystem::new(e.len(), mode, vec![e])
    }

    /// The quantum plane: `n = 2`, `E_12 = 1`.
    pub fn quantum_plane(mode: FieldMode) -> ExponentSystem {
        ExponentSystem::single(mode, vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.e.len()
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn matrices(&self) -> &[Vec<Vec<i64>>] {
        &self.e
    }

    pub fn q_power(&self, e: &[i64]) -> Scalar {
        self.mode.q_power(e)
    }

    fn check_len(&self, a: &[i64]) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: a.len(),
            });
        }
        Ok(())
    }

    /// `(a^T E^(k) b)_k`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.pairing_unchecked(a, b))
    }

    pub fn pairing_unchecked(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.e
            .iter()
            .map(|mat| {
                let mut s = 0i64;
                for (i, &ai) in a.iter().enumerate() {
                    if ai == 0 {
                        continue;
                    }
                    for (j, &bj) in b.iter().enumerate() {
                        s += ai * mat[i][j] * bj;
                    }
                }
                s
            })
            .collect()
    }

    /// True when `x^a` and `x^b` commute.
    pub fn commute(&self, a: &[i64], b: &[i64]) -> bool {
        self.mode.is_trivial_exponent(&self.pairing_unchecked(a, b))
    }

    /// Exponent vector of the normal-ordering cocycle,
    /// `sum_{i>j} E_ij a_i b_j` per parameter.
    pub fn cocycle_exponent(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.e
            .iter()
            .map(|mat| {
                let mut s = 0i64;
                for i in 0..self.n {
                    if a[i] == 0 {
                        continue;
                    }
                    for j in 0..i {
                        s += mat[i][j] * a[i] * b[j];
                    }
                }
                s
            })
            .collect()
    }

    /// The system in new coordinates: `E' = P E P^T` where the rows of `P`
    /// are the new basis vectors written in the old coordinates.
    pub fn change_basis(&self, p: &[Vec<i64>]) -> Result<ExponentSystem> {
        check_unimodular(p, self.n)?;
        let e = self
            .e
            .iter()
            .map(|mat| {
                (0..self.n)
                    .map(|i| {
                        (0..self.n)
                            .map(|j| self.pairing_for(mat, &p[i], &p[j]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ExponentSystem::new(self.n, self.mode, e)
    }

    fn pairing_for(&self, mat: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.n {
            for j in 0..self.n {
                s += a[i] * mat[i][j] * b[j];
            }
        }
        s
    }

    /// Applies a split, returning the system in split coordinates where the
    /// distinguished generator `t` is the last coordinate.
    pub fn split(&self, s: &Split) -> Result<ExponentSystem> {
        self.change_basis(&s.ordered_rows(self.n)?)
    }
}

fn check_unimodular(p: &[Vec<i64>], n: usize) -> Result<()> {
    if p.len() != n || p.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidSplit(format!("basis change must be {n}x{n}")));
    }
    let det = intmat::determinant(&from_i64(p));
    if det.abs() != BigInt::one() {
        return Err(Error::InvalidSplit(format!(
            "basis change has determinant {det}, expected +-1"
        )));
    }
    Ok(())
}

/// A choice of basis `v_1..v_n` of `A` and of the vector playing the role of
/// `t`; the remaining vectors span `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    /// New basis vectors, one per row, in original coordinates.
    pub basis: Vec<Vec<i64>>,
    /// 1-based index into `basis` of the vector used as `t`.
    pub t: usize,
}

impl Split {
    /// Standard basis with `t = e_n`.
    pub fn standard(n: usize) -> Split {
        Split {
            basis: identity_i64(n),
            t: n,
        }
    }

    /// Standard basis with `t = e_t` (1-based).
    pub fn standard_with_t(n: usize, t: usize) -> Split {
        Split {
            basis: identity_i64(n),
            t,
        }
    }

    /// Basis rows reordered so that `t` is last.
    pub fn ordered_rows(&self, n: usize) -> Result<Vec<Vec<i64>>> {
        if self.t == 0 || self.t > n {
            return Err(Error::InvalidSplit(format!(
                "t index {} outside 1..={n}",
                self.t
            )));
        }
        check_unimodular(&self.basis, n)?;
        let mut rows: Vec<Vec<i64>> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i + 1 != self.t)
            .map(|(_, r)| r.clone())
            .collect();
        rows.push(self.basis[self.t - 1].clone());
        Ok(rows)
    }

    /// Converts split coordinates to original coordinates.
    pub fn to_original(&self, c: &[i64]) -> Result<Vec<i64>> {
        let rows = self.ordered_rows(c.len())?;
        let n = c.len();
        Ok((0..n)
            .map(|j| (0..n).map(|i| c[i] * rows[i][j]).sum())
            .collect())
    }

    /// Converts original coordinates to split coordinates.
    pub fn to_split(&self, a: &[i64]) -> Result<Vec<i64>> {
        let rows = self.ordered_rows(a.len())?;
        let sol = intmat::solve_in_span(
            &from_i64(&rows),
            &a.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(),
        )
        .expect("unimodular basis spans the lattice");
        Ok(sol.iter().map(|x| x.to_i64().unwrap()).collect())
    }
}

fn identity_i64(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// A subgroup of `Z^n` given by a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sublattice {
    pub n: usize,
    pub basis: Vec<Vec<i64>>,
    /// True when `Z^n / B` is torsion-free.
    pub saturated: bool,
}

impl Sublattice {
    /// The subgroup generated by arbitrary vectors, in Hermite normal form.
    pub fn from_generators(n: usize, gens: &[Vec<i64>]) -> Sublattice {
        let hnf = if gens.is_empty() {
            Vec::new()
        } else {
            to_i64(&hermite_rows(&from_i64(gens)))
        };
        let saturated = is_saturated(n, &hnf);
        Sublattice {
            n,
            basis: hnf,
            saturated,
        }
    }

    /// The span of the given standard basis vectors (0-based indices).
    pub fn coordinate(n: usize, idx: &[usize]) -> Sublattice {
        let basis = idx
            .iter()
            .map(|&i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Sublattice {
            n,
            basis,
            saturated: true,
        }
    }

    pub fn full(n: usize) -> Sublattice {
        Sublattice::coordinate(n, &(0..n).collect::<Vec<_>>())
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of `v` in the basis, if `v` lies in the lattice.
    pub fn coordinates_of(&self, v: &[i64]) -> Option<Vec<i64>> {
        if v.len() != self.n {
            return None;
        }
        let target: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        intmat::solve_in_span(&from_i64(&self.basis), &target)
            .map(|c| c.iter().map(|x| x.to_i64().unwrap()).collect())
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coordinates_of(v).is_some()
    }
}

fn is_saturated(n: usize, basis: &[Vec<i64>]) -> bool {
    if basis.is_empty() {
        return true;
    }
    let s = smith_normal_form(&from_i64(basis));
    let _ = n;
    s.diagonal().iter().all(|d| d.is_zero() || d.is_one())
}

/// The lattice of `a` with `x^a` central: the saturated common kernel in
/// generic mode, `{a : E a = 0 mod m}` at a root of unity.
pub fn center_lattice(sys: &ExponentSystem) -> Sublattice {
    let n = sys.n();
    let mut stacked: IntMatrix = Vec::new();
    for mat in sys.matrices() {
        stacked.extend(from_i64(mat));
    }
    let s = smith_normal_form(&stacked);
    let diag = s.diagonal();
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for j in 0..n {
        let d = diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        let scale = match sys.mode() {
            FieldMode::Generic { .. } => {
                if !d.is_zero() {
                    continue;
                }
                BigInt::one()
            }
            FieldMode::RootOfUnity { m } => {
                let m = BigInt::from(m);
                &m / d.gcd(&m)
            }
        };
        gens.push(
            (0..n)
                .map(|i| (&s.v[i][j] * &scale).to_i64().expect("entry fits in i64"))
                .collect(),
        );
    }
    Sublattice::from_generators(n, &gens)
}

/// True when every pair of basis vectors pairs trivially.
pub fn is_commutative_sublattice(b: &Sublattice, sys: &ExponentSystem) -> bool {
    for i in 0..b.basis.len() {
        for j in i + 1..b.basis.len() {
            if !sys.commute(&b.basis[i], &b.basis[j]) {
                return false;
            }
        }
    }
    true
}

/// Maximal rank of a commutative sublattice, exactly or as certified bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraDimension {
    pub lower: usize,
    pub upper: usize,
}

impl AlgebraDimension {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

impl std::fmt::Display for AlgebraDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.exact() {
            Some(d) => write!(f, "{d} (exact)"),
            None => write!(f, "between {} and {}", self.lower, self.upper),
        }
    }
}

fn rational_rank(mat: &[Vec<i64>]) -> usize {
    intmat::rank(&from_i64(mat))
}

/// Node budget of the bounded isotropic search used for lower bounds.
const LOWER_BOUND_BUDGET: u64 = 2_000_000;

pub fn algebra_dimension(sys: &ExponentSystem) -> AlgebraDimension {
    let n = sys.n();
    match sys.mode() {
        FieldMode::RootOfUnity { .. } => AlgebraDimension { lower: n, upper: n },
        FieldMode::Generic { r: 1 } => {
            let d = n - rational_rank(&sys.matrices()[0]) / 2;
            AlgebraDimension { lower: d, upper: d }
        }
        FieldMode::Generic { r } => {
            // a subgroup isotropic for every form is isotropic for any
            // integer combination of them
            let mut upper = n;
            let combos: Vec<Vec<i64>> = (0..r)
                .map(|k| (0..r).map(|l| i64::from(k == l)).collect())
                .chain(std::iter::once((0..r).map(|l| 1 + l as i64).collect()))
                .chain(std::iter::once((0..r).map(|l| 1 - 2 * l as i64).collect()))
                .collect();
            for c in combos {
                let comb: Vec<Vec<i64>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| (0..r).map(|k| c[k] * sys.matrices()[k][i][j]).sum())
                            .collect()
                    })
                    .collect();
                upper = upper.min(n - rational_rank(&comb) / 2);
            }
            let center = center_lattice(sys).rank();
            let mut lower = if center < n { center + 1 } else { n };
            for bound in [2, 1] {
                if let Ok(found) = brute_force_with_budget(sys, bound, LOWER_BOUND_BUDGET) {
                    lower = lower.max(found.rank);
                    break;
                }
            }
            AlgebraDimension {
                lower: lower.min(upper),
                upper,
            }
        }
    }
}

/// Result of the exhaustive isotropic search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropicSearch {
    pub rank: usize,
    /// Lexicographically smallest basis attaining `rank`.
    pub basis: Vec<Vec<i64>>,
    pub nodes: u64,
}

/// Default node budget for [`brute_force_max_isotropic`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// Largest rank of a pairwise-commuting independent set with entries in
/// `[-bound, bound]`.
pub fn brute_force_max_isotropic(sys: &ExponentSystem, bound: i64) -> Result<IsotropicSearch> {
    brute_force_with_budget(sys, bound, DEFAULT_SEARCH_BUDGET)
}

pub fn brute_force_with_budget(
    sys: &ExponentSystem,
    bound: i64,
    budget: u64,
) -> Result<IsotropicSearch> {
    let n = sys.n();
    if bound < 1 {
        return Err(Error::Config("coefficient bound must be at least 1".into()));
    }
    let side = (2 * bound + 1) as f64;
    if side.powi(n as i32) > 5.0e6 {
        return Err(Error::SearchSpaceTooLarge(format!(
            "box of side {} in dimension {n}",
            2 * bound + 1
        )));
    }
    let cands = box_vectors(n, bound);
    let mut search = Dfs {
        sys,
        cands: &cands,
        n,
        best: Vec::new(),
        nodes: 0,
        budget,
    };
    let mut chosen = Vec::new();
    let mut echelon = Vec::new();
    search.go(0, &mut chosen, &mut echelon)?;
    Ok(IsotropicSearch {
        rank: search.best.len(),
        basis: search.best.iter().map(|&i| cands[i].clone()).collect(),
        nodes: search.nodes,
    })
}

/// Nonzero vectors of the box whose first nonzero entry is positive, in
/// lexicographic order.
fn box_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-bound; n];
    loop {
        if let Some(first) = cur.iter().find(|&&x| x != 0) {
            if *first > 0 {
                out.push(cur.clone());
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < bound {
                cur[k] += 1;
                for x in cur.iter_mut().skip(k + 1) {
                    *x = -bound;
                }
                break;
            }
        }
    }
}

struct Dfs<'a> {
    sys: &'a ExponentSystem,
    cands: &'a [Vec<i64>],
    n: usize,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_> {
    fn go(
        &mut self,
        start: usize,
        chosen: &mut Vec<usize>,
        echelon: &mut Vec<Vec<i128>>,
    ) -> Result<bool> {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
            if self.best.len() == self.n {
                return Ok(true);
            }
        }
        for idx in start..self.cands.len() {
            if chosen.len() + (self.cands.len() - idx) <= self.best.len() {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchSpaceTooLarge(format!(
                    "more than {} search nodes",
                    self.budget
                )));
            }
            let v = &self.cands[idx];
            if !chosen.iter().all(|&c| self.sys.commute(&self.cands[c], v)) {
                continue;
            }
            let Some(reduced) = reduce_against(echelon, v) else {
                continue;
            };
            echelon.push(reduced);
            chosen.push(idx);
            let done = self.go(idx + 1, chosen, echelon)?;
            chosen.pop();
            echelon.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Fraction-free reduction of `v` against echelon rows; `None` if `v` is
/// dependent on them.
fn reduce_against(echelon: &[Vec<i128>], v: &[i64]) -> Option<Vec<i128>> {
    let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    for row in echelon {
        let piv = row.iter().position(|&x| x != 0).unwrap();
        if w[piv] != 0 {
            let a = row[piv];
            let b = w[piv];
            for (x, y) in w.iter_mut().zip(row.iter()) {
                *x = *x * a - *y * b;
            }
            let g = w.iter().fold(0i128, |g, &x| g.gcd(&x));
            if g > 1 {
                for x in w.iter_mut() {
                    *x /= g;
                }
            }
        }
    }
    if w.iter().all(|&x| x == 0) {
        return None;
    }
    Some(w)
}

/// The `2^n` coordinate subgroups, by descending rank and then
/// lexicographically by index set.
pub fn coordinate_family(n: usize) -> Vec<Sublattice> {
    let mut subsets: Vec<Vec<usize>> = (0u64..(1u64 << n))
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    subsets
        .iter()
        .map(|s| Sublattice::coordinate(n, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> ExponentSystem {
        ExponentSystem::quantum_plane(FieldMode::Generic { r: 1 })
    }

    fn plane_root(m: u32) -> ExponentSystem {
        ExponentSystem::quantum_plane(FieldMode::RootOfUnity { m })
    }

    fn three() -> ExponentSystem {
        ExponentSystem::single(
            FieldMode::Generic { r: 1 },
            vec![vec![0, 1, 0], vec![-1, 0, 0], vec![0, 0, 0]],
        )
        .unwrap()
    }

    #[test]
    fn validation_reports_location() {
        let g = FieldMode::Generic { r: 1 };
        assert!(ExponentSystem::single(g, vec![vec![0, 1], vec![-1, 0]]).is_ok());
        match ExponentSystem::single(g, vec![vec![1, 0], vec![0, 0]]) {
            Err(Error::InvalidExponentSystem { k, i, j, .. }) => assert_eq!((k, i, j), (1, 1, 1)),
            other => panic!("{other:?}"),
        }
        match ExponentSystem::single(g, vec![vec![0, 1], vec![1, 0]]) {
            Err(Error::InvalidExponentSystem { k, i, j, .. }) => assert_eq!((k, i, j), (1, 2, 1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pairing_examples() {
        let p = plane();
        assert_eq!(p.pairing(&[1, 0], &[0, 1]).unwrap(), vec![1]);
        assert_eq!(p.pairing(&[3, -2], &[3, -2]).unwrap(), vec![0]);
        assert_eq!(three().pairing(&[1, 1, 0], &[0, 1, 1]).unwrap(), vec![1]);
        assert!(p.pairing(&[1], &[0, 1]).is_err());
    }

    #[test]
    fn center_examples() {
        assert_eq!(center_lattice(&plane()).rank(), 0);
        let c = center_lattice(&three());
        assert_eq!(c.basis, vec![vec![0, 0, 1]]);
        assert!(c.saturated);
        let r = center_lattice(&plane_root(3));
        assert_eq!(r.basis, vec![vec![3, 0], vec![0, 3]]);
        assert!(!r.saturated);
    }

    #[test]
    fn commutative_sublattices() {
        let p = plane();
        assert!(is_commutative_sublattice(
            &Sublattice::from_generators(2, &[vec![2, 5]]),
            &p
        ));
        assert!(!is_commutative_sublattice(&Sublattice::full(2), &p));
        let b = Sublattice::from_generators(2, &[vec![3, 0], vec![0, 1]]);
        assert!(is_commutative_sublattice(&b, &plane_root(3)));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(algebra_dimension(&plane()).exact(), Some(1));
        assert_eq!(algebra_dimension(&three()).exact(), Some(2));
        assert_eq!(algebra_dimension(&plane_root(3)).exact(), Some(2));
    }

    #[test]
    fn oracle_examples() {
        let zero =
            ExponentSystem::single(FieldMode::Generic { r: 1 }, vec![vec![0; 3]; 3]).unwrap();
        assert_eq!(brute_force_max_isotropic(&zero, 1).unwrap().rank, 3);
        assert_eq!(brute_force_max_isotropic(&plane(), 3).unwrap().rank, 1);
        let found = brute_force_max_isotropic(&plane_root(3), 3).unwrap();
        assert_eq!(found.rank, 2);
        assert_eq!(found.basis, vec![vec![0, 1], vec![3, -3]]);
    }

    #[test]
    fn two_parameter_dimension() {
        let sys = ExponentSystem::new(
            3,
            FieldMode::Generic { r: 2 },
            vec![
                vec![vec![0, 0, 1], vec![0, 0, 0], vec![-1, 0, 0]],
                vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, -1, 0]],
            ],
        )
        .unwrap();
        assert_eq!(algebra_dimension(&sys).exact(), Some(2));
        assert_eq!(center_lattice(&sys).rank(), 0);
    }

    #[test]
    fn coordinate_family_counts() {
        let ranks = |n| {
            coordinate_family(n)
                .iter()
                .map(|s| s.rank())
                .collect::<Vec<_>>()
        };
        assert_eq!(ranks(1), vec![1, 0]);
        assert_eq!(ranks(2), vec![2, 1, 1, 0]);
        assert_eq!(ranks(3), vec![3, 2, 2, 2, 1, 1, 1, 0]);
    }

    #[test]
    fn splits_reorder_coordinates() {
        let s = Split::standard_with_t(3, 2);
        let sys = three().split(&s).unwrap();
        // new coordinates (e1, e3, e2)
        assert_eq!(sys.pairing(&[1, 0, 0], &[0, 0, 1]).unwrap(), vec![1]);
        assert_eq!(s.to_original(&[1, 2, 3]).unwrap(), vec![1, 3, 2]);
        assert_eq!(s.to_split(&[1, 3, 2]).unwrap(), vec![1, 2, 3]);
        let bad = Split {
            basis: vec![vec![2, 0], vec![0, 1]],
            t: 2,
        };
        assert!(plane().split(&bad).is_err());
    }

    #[test]
    fn membership() {
        let b = Sublattice::from_generators(2, &[vec![1, 2]]);
        assert!(b.contains(&[2, 4]));
        assert!(!b.contains(&[0, 1]));
        assert_eq!(b.coordinates_of(&[-3, -6]), Some(vec![-3]));
    }
}
