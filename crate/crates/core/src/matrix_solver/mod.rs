//! Exact classification of action matrices.
//!
//! A transitive action of the cell 2-subcategory sends `F = sum_i F(i,0)` to
//! a non-negative integer matrix `M` with `M^2 = (n+2) M`. This module lists
//! all such `M` up to simultaneous permutation and splits each into summands
//! `M_i`, the matrices of the individual `F(i,0)`, subject to their
//! multiplication rule and the diagonal and column constraints.

mod canonical;
mod flor;
mod partitions;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::int_matrix::IntMatrix;
use crate::linalg::Q;

pub use canonical::{canonical_form, canonical_matrix, canonical_permutation};
pub use flor::{
    flor_normal_form, is_positive_rank_one_idempotent, random_nonnegative_idempotent, FlorError,
    FlorForm,
};
pub use partitions::{count_set_partitions, set_partitions};
pub use search::summand_candidates;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "CELLREP_THREADS";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero matrix is nilpotent, no positive quasi-idempotent scalar")]
    ZeroMatrix,
    #[error("n must be at least 1, got {0}")]
    InvalidN(usize),
    #[error("{THREADS_ENV} must be a positive integer, got {0:?}")]
    BadThreadCount(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// How much is known about the action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstraintTier {
    /// Product rule, diagonal budget and no zero columns.
    Combinatorial,
    /// Additionally, the `F(i,0)` act as projective functors: each `M_i`
    /// reads 2 in the column of the diagonal 2 of `M_0`.
    ProjectiveFunctor,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(format!("unknown side {s:?}, expected left or right")),
        }
    }
}

impl fmt::Display for ConstraintTier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstraintTier::Combinatorial => "combinatorial",
            ConstraintTier::ProjectiveFunctor => "projective-functor",
        })
    }
}

impl FromStr for ConstraintTier {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "combinatorial" => Ok(ConstraintTier::Combinatorial),
            "projective-functor" => Ok(ConstraintTier::ProjectiveFunctor),
            _ => Err(format!(
                "unknown tier {s:?}, expected combinatorial or projective-functor"
            )),
        }
    }
}

/// `Some(lambda)` with `M^2 = lambda M` and `lambda > 0`, `None` when no such
/// scalar exists (including nilpotent `M` with `M^2 = 0`).
pub fn is_quasi_idempotent(m: &IntMatrix) -> Result<Option<Q>, SolverError> {
    if !m.is_square() {
        return Err(SolverError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let k = m
        .entries()
        .iter()
        .position(|&x| x != 0)
        .ok_or(SolverError::ZeroMatrix)?;
    let sq = m.mul(m);
    let lambda = Q::new(sq.entries()[k].into(), m.entries()[k].into());
    if lambda.is_zero() {
        return Ok(None);
    }
    let holds = sq
        .entries()
        .iter()
        .zip(m.entries())
        .all(|(&s, &x)| Q::from_integer(s.into()) == &lambda * Q::from_integer(x.into()));
    Ok(holds.then_some(lambda))
}

/// Irreducible non-negative integer `M` with `M^2 = (n+2) M` and at most
/// `r_max` rows (default `n + 2`), one canonical representative per
/// simultaneous-permutation class, ordered by size then entries.
///
/// Such `M` are positive of rank one and trace `n + 2`, so `M = v w^T` with
/// `gcd(v) = 1` and `w^T v = n + 2`, which determines `M` by the multiset of
/// pairs `(v_i, w_i)`.
pub fn enumerate_total_matrices(n: usize, r_max: Option<usize>) -> Vec<IntMatrix> {
    let t = n as u64 + 2;
    let r_max = r_max.unwrap_or(n + 2);
    let pairs: Vec<(u64, u64)> = (1..=t)
        .flat_map(|v| (1..=t / v).map(move |w| (v, w)))
        .collect();
    let mut found = BTreeSet::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(
        pairs: &[(u64, u64)],
        start: usize,
        left: u64,
        r_max: usize,
        stack: &mut Vec<usize>,
        found: &mut BTreeSet<(usize, IntMatrix)>,
    ) {
        if left == 0 {
            let v: Vec<u64> = stack.iter().map(|&k| pairs[k].0).collect();
            let w: Vec<u64> = stack.iter().map(|&k| pairs[k].1).collect();
            if v.iter().fold(0u64, |g, &x| g.gcd(&x)) == 1 {
                let m = canonical_matrix(&IntMatrix::outer(&v, &w));
                found.insert((m.rows(), m));
            }
            return;
        }
        if stack.len() == r_max {
            return;
        }
        for k in start..pairs.len() {
            let (v, w) = pairs[k];
            if v * w <= left {
                stack.push(k);
                go(pairs, k, left - v * w, r_max, stack, found);
                stack.pop();
            }
        }
    }
    go(&pairs, 0, t, r_max, &mut stack, &mut found);
    found.into_iter().map(|(_, m)| m).collect()
}

/// One solution `M = M_0 + ... + M_n` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolutionFamily {
    pub n: usize,
    pub r: usize,
    #[serde(rename = "M")]
    pub total: IntMatrix,
    #[serde(rename = "M_i")]
    pub summands: Vec<IntMatrix>,
    /// `phi[i]` is the 1-based index of the nonzero row of `M_i`, `i >= 1`.
    pub phi: BTreeMap<usize, usize>,
    pub canonical: bool,
}

impl SolutionFamily {
    fn from_summands(n: usize, summands: Vec<IntMatrix>) -> Self {
        let total = summands[1..]
            .iter()
            .fold(summands[0].clone(), |acc, m| acc.add(m));
        let phi = summands
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, m)| (i, m.nonzero_rows()[0] + 1))
            .collect();
        Self {
            n,
            r: total.rows(),
            total,
            summands,
            phi,
            canonical: true,
        }
    }

    /// Checks every structural invariant of a family on `side`, reporting
    /// the first violation.
    pub fn check(&self, side: Side) -> Result<(), String> {
        let n = self.n;
        if self.summands.len() != n + 1 {
            return Err(format!(
                "{} summands, expected {}",
                self.summands.len(),
                n + 1
            ));
        }
        if self
            .summands
            .iter()
            .any(|m| m.rows() != self.r || !m.is_square())
        {
            return Err("summand of the wrong size".into());
        }
        let sum = self.summands[1..]
            .iter()
            .fold(self.summands[0].clone(), |acc, m| acc.add(m));
        if sum != self.total {
            return Err("summands do not add up to M".into());
        }
        if self.total.mul(&self.total) != self.total.scale(n as u64 + 2) {
            return Err("M^2 != (n+2) M".into());
        }
        if !self.total.is_irreducible() {
            return Err("M is reducible".into());
        }
        for (i, mi) in self.summands.iter().enumerate() {
            if mi.is_zero() {
                return Err(format!("M_{i} is zero"));
            }
            for (j, mj) in self.summands.iter().enumerate() {
                let ok = match side {
                    Side::Left => mi.mul(mj) == mi.scale(search::coefficient(j)),
                    Side::Right => mi.mul(mj) == mj.scale(search::coefficient(i)),
                };
                if !ok {
                    return Err(format!("product rule fails for M_{i} M_{j}"));
                }
            }
        }
        let m0 = &self.summands[0];
        if m0.nonzero_rows() != vec![0] || m0.get(0, 0) != 2 {
            return Err("M_0 is not concentrated in the first row with diagonal 2".into());
        }
        for i in 1..=n {
            let rows = self.summands[i].nonzero_rows();
            if rows.len() != 1 || self.phi.get(&i) != Some(&(rows[0] + 1)) {
                return Err(format!("phi({i}) does not locate the row of M_{i}"));
            }
        }
        Ok(())
    }

    /// `phi` with values shifted to `0..`, or `None` when some `M_i` shares
    /// the row of `M_0`.
    pub fn phi_growth_string(&self) -> Option<Vec<usize>> {
        self.phi.values().map(|&k| k.checked_sub(2)).collect()
    }
}

/// Canonical families for one total matrix on the left side.
pub fn decompose(m: &IntMatrix, n: usize, tier: ConstraintTier) -> Vec<SolutionFamily> {
    decompose_side(m, n, Side::Left, tier)
}

pub fn decompose_side(
    m: &IntMatrix,
    n: usize,
    side: Side,
    tier: ConstraintTier,
) -> Vec<SolutionFamily> {
    search::decompositions(m, n, side, tier)
        .into_iter()
        .map(|s| SolutionFamily::from_summands(n, s))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub side: Side,
    pub tier: ConstraintTier,
    pub families: Vec<SolutionFamily>,
    /// Number of families up to simultaneous permutation.
    pub count: usize,
    pub count_label: String,
    /// Number of set partitions of `{1..n}`, reported for the left side at
    /// the projective-functor tier.
    pub oracle_count: Option<u64>,
    /// The action with every `F(i,0)` acting as zero, not included in
    /// `count`.
    pub trivial_apex_families: usize,
    pub total_matrices_examined: usize,
}

impl ClassificationReport {
    pub fn matches_oracle(&self) -> Option<bool> {
        self.oracle_count.map(|c| c == self.count as u64)
    }
}

/// Thread pool sized by `CELLREP_THREADS`, or `None` for rayon's default.
pub fn configured_pool() -> Result<Option<rayon::ThreadPool>, SolverError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| SolverError::BadThreadCount(raw.clone()))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| SolverError::BadThreadCount(e.to_string()))
}

pub fn classify(
    n: usize,
    side: Side,
    tier: ConstraintTier,
) -> Result<ClassificationReport, SolverError> {
    if n == 0 {
        return Err(SolverError::InvalidN(n));
    }
    let totals = enumerate_total_matrices(n, None);
    let run = || -> Vec<SolutionFamily> {
        let mut all: Vec<SolutionFamily> = totals
            .par_iter()
            .flat_map_iter(|m| decompose_side(m, n, side, tier))
            .collect();
        all.sort();
        all.dedup();
        all
    };
    let families = match configured_pool()? {
        Some(pool) => pool.install(run),
        None => run(),
    };
    Ok(ClassificationReport {
        n,
        side,
        tier,
        count: families.len(),
        families,
        count_label: "matrix families".into(),
        oracle_count: (side == Side::Left && tier == ConstraintTier::ProjectiveFunctor)
            .then(|| count_set_partitions(n)),
        trivial_apex_families: 1,
        total_matrices_examined: totals.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<u64>>) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn all_perms(r: usize) -> Vec<Vec<usize>> {
        if r == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in all_perms(r - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, r - 1);
                out.push(q);
            }
        }
        out
    }

    /// Permutation-class representative by exhaustive search, keyed on the
    /// entries in row-major order.
    fn class_of(x: &IntMatrix) -> IntMatrix {
        all_perms(x.rows())
            .into_iter()
            .map(|p| x.permuted(&p))
            .max_by(|a, b| a.entries().cmp(b.entries()))
            .unwrap()
    }

    #[test]
    fn quasi_idempotents() {
        assert_eq!(
            is_quasi_idempotent(&m(vec![vec![2, 1], vec![2, 1]])).unwrap(),
            Some(q(3))
        );
        assert_eq!(
            is_quasi_idempotent(&IntMatrix::identity(3)).unwrap(),
            Some(q(1))
        );
        assert_eq!(
            is_quasi_idempotent(&m(vec![vec![0, 1], vec![0, 0]])).unwrap(),
            None
        );
        assert_eq!(
            is_quasi_idempotent(&m(vec![vec![1, 1], vec![0, 2]])).unwrap(),
            None
        );
        assert_eq!(
            is_quasi_idempotent(&IntMatrix::zeros(2, 2)),
            Err(SolverError::ZeroMatrix)
        );
    }

    #[test]
    fn total_matrices_for_n_one() {
        let got = enumerate_total_matrices(1, None);
        assert_eq!(
            got,
            vec![
                m(vec![vec![3]]),
                m(vec![vec![2, 1], vec![2, 1]]),
                m(vec![vec![2, 2], vec![1, 1]]),
                IntMatrix::from_fn(3, 3, |_, _| 1),
            ]
        );
    }

    #[test]
    fn all_ones_always_present() {
        for n in 1..=6 {
            let ones = IntMatrix::from_fn(n + 2, n + 2, |_, _| 1);
            assert!(enumerate_total_matrices(n, None).contains(&ones));
        }
    }

    /// All positive `v w^T` with `v, w` in `[1, n+2]^r` and `M^2 = (n+2) M`.
    fn brute_force_rank_one(n: usize) -> BTreeSet<IntMatrix> {
        let t = n as u64 + 2;
        let mut out = BTreeSet::new();
        for r in 1..=n + 2 {
            let count = (t as usize).pow(r as u32);
            let vec_of = |mut code: usize| -> Vec<u64> {
                (0..r)
                    .map(|_| {
                        let d = code % t as usize;
                        code /= t as usize;
                        d as u64 + 1
                    })
                    .collect()
            };
            for a in 0..count {
                for b in 0..count {
                    let x = IntMatrix::outer(&vec_of(a), &vec_of(b));
                    if x.mul(&x) == x.scale(t) {
                        out.insert(class_of(&x));
                    }
                }
            }
        }
        out
    }

    /// All matrices of size `r <= 3` with entries in `[0, bound]`, filtered
    /// by `M^2 = 3M` and irreducibility.
    fn brute_force_n_one() -> BTreeSet<IntMatrix> {
        let mut out = BTreeSet::new();
        for (r, bound) in [(1usize, 4u64), (2, 4), (3, 2)] {
            let cells = r * r;
            let total = (bound as usize + 1).pow(cells as u32);
            for code in 0..total {
                let mut c = code;
                let x = IntMatrix::from_fn(r, r, |_, _| {
                    let d = c % (bound as usize + 1);
                    c /= bound as usize + 1;
                    d as u64
                });
                if !x.is_zero() && x.is_irreducible() && x.mul(&x) == x.scale(3) {
                    out.insert(class_of(&x));
                }
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let n1: BTreeSet<IntMatrix> = enumerate_total_matrices(1, None)
            .iter()
            .map(class_of)
            .collect();
        assert_eq!(n1, brute_force_n_one());
        for n in 1..=2 {
            let got: BTreeSet<IntMatrix> = enumerate_total_matrices(n, None)
                .iter()
                .map(class_of)
                .collect();
            assert_eq!(got.len(), enumerate_total_matrices(n, None).len());
            assert_eq!(got, brute_force_rank_one(n), "n = {n}");
        }
    }

    #[test]
    fn n_two_count_is_stable() {
        assert_eq!(enumerate_total_matrices(2, None).len(), 8);
        assert_eq!(enumerate_total_matrices(2, Some(2)).len(), 5);
    }

    #[test]
    fn enumerated_matrices_have_rank_one_and_right_trace() {
        for n in 1..=5 {
            for x in enumerate_total_matrices(n, None) {
                assert_eq!(x.to_qmatrix().rank(), 1);
                assert_eq!(x.trace(), n as u64 + 2);
                assert_eq!(canonical_matrix(&x), x);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let pf = ConstraintTier::ProjectiveFunctor;
        let fams = decompose(&m(vec![vec![2, 1], vec![2, 1]]), 1, pf);
        assert_eq!(fams.len(), 1);
        assert_eq!(
            fams[0].summands,
            vec![
                m(vec![vec![2, 1], vec![0, 0]]),
                m(vec![vec![0, 0], vec![2, 1]])
            ]
        );
        assert_eq!(fams[0].phi, BTreeMap::from([(1, 2)]));
        let second = m(vec![vec![2, 2], vec![1, 1]]);
        let fams = decompose(&second, 1, ConstraintTier::Combinatorial);
        assert_eq!(
            fams[0].summands,
            vec![
                m(vec![vec![2, 2], vec![0, 0]]),
                m(vec![vec![0, 0], vec![1, 1]])
            ]
        );
        assert!(decompose(&second, 1, pf).is_empty());
        assert!(decompose(&m(vec![vec![3]]), 1, pf).is_empty());
    }

    #[test]
    fn left_counts_are_set_partition_counts() {
        for n in 1..=5 {
            let rep = classify(n, Side::Left, ConstraintTier::ProjectiveFunctor).unwrap();
            assert_eq!(rep.count as u64, count_set_partitions(n), "n = {n}");
            assert_eq!(rep.matches_oracle(), Some(true));
            let strings: BTreeSet<Vec<usize>> = rep
                .families
                .iter()
                .map(|f| f.phi_growth_string().expect("phi avoids row 1"))
                .collect();
            let rgs: BTreeSet<Vec<usize>> = set_partitions(n).into_iter().collect();
            assert_eq!(strings, rgs);
            for f in &rep.families {
                f.check(Side::Left).unwrap();
                let image: BTreeSet<usize> = f.phi.values().copied().collect();
                assert_eq!(image, (2..=f.r).collect());
                let mut shape = vec![1u64; f.r];
                shape[0] = 2;
                for row in f.total.nonzero_rows() {
                    assert!(f
                        .summands
                        .iter()
                        .all(|s| s.row(row).iter().all(|&x| x == 0)
                            || s.row(row) == shape.as_slice()));
                }
            }
        }
    }

    #[test]
    fn combinatorial_tier_for_n_one() {
        let rep = classify(1, Side::Left, ConstraintTier::Combinatorial).unwrap();
        let totals: Vec<IntMatrix> = rep.families.iter().map(|f| f.total.clone()).collect();
        assert_eq!(
            totals,
            vec![
                m(vec![vec![3]]),
                m(vec![vec![2, 1], vec![2, 1]]),
                m(vec![vec![2, 2], vec![1, 1]]),
            ]
        );
        assert_eq!(rep.oracle_count, None);
    }

    #[test]
    fn tiers_are_monotone() {
        for n in 1..=4 {
            for x in enumerate_total_matrices(n, None) {
                let strict: BTreeSet<_> = decompose(&x, n, ConstraintTier::ProjectiveFunctor)
                    .into_iter()
                    .collect();
                let loose: BTreeSet<_> = decompose(&x, n, ConstraintTier::Combinatorial)
                    .into_iter()
                    .collect();
                assert!(strict.is_subset(&loose));
            }
        }
    }

    #[test]
    fn right_side_has_one_family() {
        for n in 1..=4 {
            for tier in [
                ConstraintTier::Combinatorial,
                ConstraintTier::ProjectiveFunctor,
            ] {
                let rep = classify(n, Side::Right, tier).unwrap();
                assert_eq!(rep.count, 1);
                let f = &rep.families[0];
                assert_eq!(f.r, 1);
                assert_eq!(f.summands[0], m(vec![vec![2]]));
                assert!(f.summands[1..].iter().all(|s| *s == m(vec![vec![1]])));
                f.check(Side::Right).unwrap();
                assert_eq!(rep.oracle_count, None);
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let rep = classify(1, Side::Left, ConstraintTier::ProjectiveFunctor).unwrap();
        let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["side"], "left");
        assert_eq!(v["tier"], "projective-functor");
        assert_eq!(v["count"], 1);
        assert_eq!(v["oracle_count"], 1);
        assert_eq!(v["families"][0]["M"], serde_json::json!([[2, 1], [2, 1]]));
        assert_eq!(v["families"][0]["phi"]["1"], 2);
        let back: ClassificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn rejects_n_zero() {
        assert_eq!(
            classify(0, Side::Left, ConstraintTier::Combinatorial).unwrap_err(),
            SolverError::InvalidN(0)
        );
    }

    proptest! {
        #[test]
        fn canonicalization_is_idempotent(entries in proptest::collection::vec(0u64..4, 16), k in 1usize..=4) {
            let x = IntMatrix::from_fn(k, k, |i, j| entries[i * 4 + j]);
            let c = canonical_matrix(&x);
            prop_assert_eq!(canonical_matrix(&c), c.clone());
            prop_assert_eq!(class_of(&c), class_of(&x));
        }

        #[test]
        fn families_reassemble(n in 1usize..=4, pick in any::<prop::sample::Index>()) {
            let totals = enumerate_total_matrices(n, None);
            let x = &totals[pick.index(totals.len())];
            for f in decompose(x, n, ConstraintTier::Combinatorial) {
                prop_assert_eq!(class_of(&f.total), class_of(x));
                for (i, s) in f.summands.iter().enumerate() {
                    let a = if i == 0 { 2 } else { 1 };
                    prop_assert_eq!(s.mul(s), s.scale(a));
                }
                prop_assert!(f.check(Side::Left).is_ok());
            }
        }
    }
}
