//! Backtracking over decompositions `M = M_0 + ... + M_n`.

use std::collections::BTreeSet;

use super::canonical::canonical_form;
use super::{ConstraintTier, Side};
use crate::int_matrix::IntMatrix;

/// Multiplier `a_i` of the rule `M_i M_j = a_j M_i` (left) or
/// `M_i M_j = b_i M_j` (right). Both are 2 for index 0 and 1 otherwise.
pub(crate) fn coefficient(i: usize) -> u64 {
    if i == 0 {
        2
    } else {
        1
    }
}

/// All `X <= limit` with exactly one diagonal entry, equal to `a`, other
/// diagonal entries zero, `X^2 = aX` and no zero column.
///
/// Such an `X` has `X/a` idempotent of trace one, hence rank one, and with
/// no zero column its single nonzero row is the row of the diagonal entry.
/// So it is enough to list single-row matrices with positive entries.
pub fn summand_candidates(limit: &IntMatrix, a: u64) -> Vec<IntMatrix> {
    let r = limit.rows();
    let mut out = Vec::new();
    for k in 0..r {
        if limit.get(k, k) < a || (0..r).any(|j| limit.get(k, j) == 0) {
            continue;
        }
        let mut row = vec![1u64; r];
        row[k] = a;
        loop {
            out.push(IntMatrix::single_row(r, k, &row));
            // odometer over the off-diagonal entries
            let mut j = 0;
            loop {
                if j == r {
                    break;
                }
                if j != k && row[j] < limit.get(k, j) {
                    row[j] += 1;
                    break;
                }
                if j != k {
                    row[j] = 1;
                }
                j += 1;
            }
            if j == r {
                break;
            }
        }
    }
    out
}

fn only_row(m: &IntMatrix) -> usize {
    let rows = m.nonzero_rows();
    debug_assert_eq!(rows.len(), 1);
    rows[0]
}

/// Checks the product rule between a new summand at index `i` and an
/// earlier one at index `j`, in both orders.
fn products_hold(side: Side, new: &IntMatrix, i: usize, old: &IntMatrix, j: usize) -> bool {
    let (ai, aj) = (coefficient(i), coefficient(j));
    match side {
        // M_i M_j = a_j M_i
        Side::Left => new.mul(old) == new.scale(aj) && old.mul(new) == old.scale(ai),
        // M_i M_j = b_i M_j
        Side::Right => new.mul(old) == old.scale(ai) && old.mul(new) == new.scale(aj),
    }
}

struct Search<'a> {
    n: usize,
    tier: ConstraintTier,
    out: &'a mut BTreeSet<Vec<IntMatrix>>,
}

impl Search<'_> {
    fn left(&mut self, rem: &IntMatrix, chosen: &mut Vec<IntMatrix>) {
        let i = chosen.len();
        if i == self.n + 1 {
            if rem.is_zero() {
                self.out.insert(canonical_form(chosen));
            }
            return;
        }
        let two_column = chosen.first().map(only_row);
        for cand in summand_candidates(rem, coefficient(i)) {
            if self.tier == ConstraintTier::ProjectiveFunctor && i > 0 {
                // the column of the diagonal 2 of M_0 must read 2 in M_i
                let c = two_column.expect("M_0 chosen first");
                if cand.get(only_row(&cand), c) != 2 {
                    continue;
                }
            }
            if !chosen
                .iter()
                .enumerate()
                .all(|(j, old)| products_hold(Side::Left, &cand, i, old, j))
            {
                continue;
            }
            let next = rem
                .checked_sub(&cand)
                .expect("candidate bounded by remainder");
            chosen.push(cand);
            self.left(&next, chosen);
            chosen.pop();
        }
    }

    fn right(&mut self, rem: &IntMatrix, chosen: &mut Vec<IntMatrix>) {
        let i = chosen.len();
        if i == self.n + 1 {
            if rem.is_zero() {
                self.out.insert(canonical_form(chosen));
            }
            return;
        }
        if i == 0 {
            for m0 in summand_candidates(rem, 2) {
                let k0 = only_row(&m0);
                let next = rem.checked_sub(&m0).expect("bounded");
                // M_0 M_i = 2 M_i puts every later summand in the row of M_0
                if next.nonzero_rows().iter().any(|&k| k != k0) {
                    continue;
                }
                chosen.push(m0);
                self.right(&next, chosen);
                chosen.pop();
            }
            return;
        }
        let k0 = only_row(&chosen[0]);
        let r = rem.rows();
        let bound = rem.row(k0).to_vec();
        let mut row = vec![0u64; r];
        loop {
            // odometer over 0..=bound, skipping the zero row
            let mut j = 0;
            while j < r {
                if row[j] < bound[j] {
                    row[j] += 1;
                    break;
                }
                row[j] = 0;
                j += 1;
            }
            if j == r {
                break;
            }
            let cand = IntMatrix::single_row(r, k0, &row);
            if !chosen
                .iter()
                .enumerate()
                .all(|(j, old)| products_hold(Side::Right, &cand, i, old, j))
            {
                continue;
            }
            let next = rem.checked_sub(&cand).expect("bounded");
            chosen.push(cand);
            self.right(&next, chosen);
            chosen.pop();
        }
    }
}

/// Canonical tuples `(M_0, ..., M_n)` summing to `m` that pass the filters.
pub(crate) fn decompositions(
    m: &IntMatrix,
    n: usize,
    side: Side,
    tier: ConstraintTier,
) -> BTreeSet<Vec<IntMatrix>> {
    let mut out = BTreeSet::new();
    let mut s = Search {
        n,
        tier,
        out: &mut out,
    };
    match side {
        Side::Left => s.left(m, &mut Vec::new()),
        Side::Right => s.right(m, &mut Vec::new()),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every `X <= limit` checked directly against the defining conditions.
    fn brute_force_candidates(limit: &IntMatrix, a: u64) -> BTreeSet<IntMatrix> {
        let r = limit.rows();
        let cells = r * r;
        let mut entries = vec![0u64; cells];
        let mut out = BTreeSet::new();
        loop {
            let x = IntMatrix::from_fn(r, r, |i, j| entries[i * r + j]);
            let diag = x.diagonal();
            let ok_diag = diag.iter().filter(|&&d| d == a).count() == 1
                && diag.iter().all(|&d| d == a || d == 0);
            if ok_diag && x.mul(&x) == x.scale(a) && !x.has_zero_column() {
                out.insert(x);
            }
            let mut k = 0;
            while k < cells {
                if entries[k] < limit.entries()[k] {
                    entries[k] += 1;
                    break;
                }
                entries[k] = 0;
                k += 1;
            }
            if k == cells {
                return out;
            }
        }
    }

    #[test]
    fn candidates_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let r = rng.gen_range(1..=3);
            let limit = IntMatrix::from_fn(r, r, |_, _| rng.gen_range(0..=3));
            for a in [1, 2] {
                let fast: BTreeSet<IntMatrix> = summand_candidates(&limit, a).into_iter().collect();
                assert_eq!(fast, brute_force_candidates(&limit, a), "{limit:?} a={a}");
            }
        }
    }

    fn m(rows: Vec<Vec<u64>>) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn two_by_two_cases() {
        let pf = ConstraintTier::ProjectiveFunctor;
        let comb = ConstraintTier::Combinatorial;
        let first = m(vec![vec![2, 1], vec![2, 1]]);
        let want = vec![
            m(vec![vec![2, 1], vec![0, 0]]),
            m(vec![vec![0, 0], vec![2, 1]]),
        ];
        assert_eq!(
            decompositions(&first, 1, Side::Left, pf)
                .into_iter()
                .collect::<Vec<_>>(),
            vec![want]
        );
        let second = m(vec![vec![2, 2], vec![1, 1]]);
        assert_eq!(
            decompositions(&second, 1, Side::Left, comb)
                .into_iter()
                .collect::<Vec<_>>(),
            vec![vec![
                m(vec![vec![2, 2], vec![0, 0]]),
                m(vec![vec![0, 0], vec![1, 1]])
            ]]
        );
        assert!(decompositions(&second, 1, Side::Left, pf).is_empty());
        let three = m(vec![vec![3]]);
        assert_eq!(decompositions(&three, 1, Side::Left, comb).len(), 1);
        assert!(decompositions(&three, 1, Side::Left, pf).is_empty());
    }

    #[test]
    fn right_side_keeps_only_rank_one() {
        for n in 1..=4usize {
            let t = (n + 2) as u64;
            let one = m(vec![vec![t]]);
            let got = decompositions(&one, n, Side::Right, ConstraintTier::Combinatorial);
            let mut want = vec![m(vec![vec![2]])];
            want.extend(std::iter::repeat_n(m(vec![vec![1]]), n));
            assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![want]);
        }
        let first = m(vec![vec![2, 1], vec![2, 1]]);
        assert!(decompositions(&first, 1, Side::Right, ConstraintTier::Combinatorial).is_empty());
    }
}
