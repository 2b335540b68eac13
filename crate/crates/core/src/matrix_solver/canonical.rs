//! Canonical representatives of square-matrix tuples under simultaneous row
//! and column permutation.
//!
//! The key of a permuted tuple lists, for each position `p` in turn and each
//! matrix in turn, the pairs `(m[p][q], m[q][p])` for `q < p` followed by
//! `m[p][p]`. The canonical form maximizes this key lexicographically. Since
//! the key of a prefix only depends on the indices placed so far, a
//! level-by-level search that keeps every tied prefix finds it exactly.

use crate::int_matrix::IntMatrix;

fn segment(mats: &[IntMatrix], placed: &[usize], x: usize) -> Vec<u64> {
    let mut s = Vec::with_capacity(mats.len() * (2 * placed.len() + 1));
    for m in mats {
        for &y in placed {
            s.push(m.get(x, y));
            s.push(m.get(y, x));
        }
        s.push(m.get(x, x));
    }
    s
}

/// `x` and `y` are twins when swapping them fixes every matrix.
fn twins(mats: &[IntMatrix], x: usize, y: usize) -> bool {
    let r = mats[0].rows();
    mats.iter().all(|m| {
        m.get(x, x) == m.get(y, y)
            && m.get(x, y) == m.get(y, x)
            && (0..r)
                .filter(|&z| z != x && z != y)
                .all(|z| m.get(x, z) == m.get(y, z) && m.get(z, x) == m.get(z, y))
    })
}

/// A permutation `perm` such that `m.permuted(&perm)` for each `m` in
/// `mats` is the canonical tuple.
pub fn canonical_permutation(mats: &[IntMatrix]) -> Vec<usize> {
    assert!(!mats.is_empty(), "empty matrix tuple");
    let r = mats[0].rows();
    assert!(
        mats.iter().all(|m| m.is_square() && m.rows() == r),
        "tuple of square matrices of one size expected"
    );
    // representative[x] is the smallest index twin to x
    let representative: Vec<usize> = (0..r)
        .map(|x| (0..x).find(|&y| twins(mats, x, y)).unwrap_or(x))
        .collect();

    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..r {
        let mut best: Option<Vec<u64>> = None;
        let mut next = Vec::new();
        for placed in &frontier {
            let mut used = vec![false; r];
            for &p in placed {
                used[p] = true;
            }
            for x in 0..r {
                if used[x] {
                    continue;
                }
                // among unused twins only the first needs exploring
                if (0..x).any(|y| !used[y] && representative[y] == representative[x]) {
                    continue;
                }
                let seg = segment(mats, placed, x);
                match best.as_ref().map(|b| seg.cmp(b)) {
                    Some(std::cmp::Ordering::Less) => continue,
                    Some(std::cmp::Ordering::Greater) | None => {
                        best = Some(seg);
                        next.clear();
                    }
                    Some(std::cmp::Ordering::Equal) => {}
                }
                let mut extended = placed.clone();
                extended.push(x);
                next.push(extended);
            }
        }
        frontier = next;
    }
    frontier.swap_remove(0)
}

pub fn canonical_form(mats: &[IntMatrix]) -> Vec<IntMatrix> {
    let perm = canonical_permutation(mats);
    mats.iter().map(|m| m.permuted(&perm)).collect()
}

pub fn canonical_matrix(m: &IntMatrix) -> IntMatrix {
    canonical_form(std::slice::from_ref(m)).swap_remove(0)
}
