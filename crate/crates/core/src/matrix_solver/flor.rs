//! Normal form of non-negative idempotent matrices: after a permutation,
//!
//! ```text
//! [ 0  AJ  AJB ]
//! [ 0  J   JB  ]
//! [ 0  0   0   ]
//! ```
//!
//! with `J` block diagonal and every block a positive rank-1 idempotent.

use num_traits::{One, Signed, Zero};
use rand::{seq::SliceRandom, Rng};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{q, QMatrix, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlorError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry ({row},{col}) is negative")]
    Negative { row: usize, col: usize },
    #[error("not idempotent: (M^2 - M)[{row}][{col}] = {excess}")]
    NotIdempotent { row: usize, col: usize, excess: Q },
    #[error("normal form check failed: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlorForm {
    /// Position `p` of the normal form holds original index `permutation[p]`.
    pub permutation: Vec<usize>,
    /// Rows with zero columns, restricted to the core columns.
    pub a: QMatrix,
    pub j_blocks: Vec<QMatrix>,
    /// Core rows restricted to the zero-row columns.
    pub b: QMatrix,
}

impl FlorForm {
    pub fn top_size(&self) -> usize {
        self.a.rows()
    }

    pub fn core_size(&self) -> usize {
        self.j_blocks.iter().map(QMatrix::rows).sum()
    }

    pub fn bottom_size(&self) -> usize {
        self.b.cols()
    }

    pub fn rank(&self) -> usize {
        self.j_blocks.len()
    }

    pub fn j(&self) -> QMatrix {
        let c = self.core_size();
        let mut j = QMatrix::zeros(c, c);
        let mut off = 0;
        for blk in &self.j_blocks {
            for r in 0..blk.rows() {
                for s in 0..blk.cols() {
                    j[(off + r, off + s)] = blk[(r, s)].clone();
                }
            }
            off += blk.rows();
        }
        j
    }

    /// The block matrix in normal-form coordinates.
    pub fn block_matrix(&self) -> QMatrix {
        let (t, c, b) = (self.top_size(), self.core_size(), self.bottom_size());
        let j = self.j();
        let aj = self.a.mul(&j);
        let jb = j.mul(&self.b);
        let ajb = aj.mul(&self.b);
        let size = t + c + b;
        let mut m = QMatrix::zeros(size, size);
        let mut put = |src: &QMatrix, r0: usize, c0: usize| {
            for r in 0..src.rows() {
                for s in 0..src.cols() {
                    m[(r0 + r, c0 + s)] = src[(r, s)].clone();
                }
            }
        };
        put(&aj, 0, t);
        put(&ajb, 0, t + c);
        put(&j, t, t);
        put(&jb, t, t + c);
        m
    }

    /// Undoes the permutation.
    pub fn reassemble(&self) -> QMatrix {
        let block = self.block_matrix();
        let size = self.permutation.len();
        let mut m = QMatrix::zeros(size, size);
        for a in 0..size {
            for b in 0..size {
                m[(self.permutation[a], self.permutation[b])] = block[(a, b)].clone();
            }
        }
        m
    }
}

impl Serialize for FlorForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let text = |m: &QMatrix| -> Vec<Vec<String>> {
            m.to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect()
        };
        let mut st = s.serialize_struct("FlorForm", 4)?;
        st.serialize_field("permutation", &self.permutation)?;
        st.serialize_field("A", &text(&self.a))?;
        st.serialize_field(
            "J_blocks",
            &self.j_blocks.iter().map(text).collect::<Vec<_>>(),
        )?;
        st.serialize_field("B", &text(&self.b))?;
        st.end()
    }
}

pub fn flor_normal_form(m: &QMatrix) -> Result<FlorForm, FlorError> {
    let size = m.rows();
    if m.cols() != size {
        return Err(FlorError::NotSquare {
            rows: size,
            cols: m.cols(),
        });
    }
    for i in 0..size {
        for j in 0..size {
            if m[(i, j)].is_negative() {
                return Err(FlorError::Negative { row: i, col: j });
            }
        }
    }
    let excess = m.mul(m).sub(m);
    for i in 0..size {
        for j in 0..size {
            if !excess[(i, j)].is_zero() {
                return Err(FlorError::NotIdempotent {
                    row: i,
                    col: j,
                    excess: excess[(i, j)].clone(),
                });
            }
        }
    }

    let positive = |i: usize, j: usize| m[(i, j)].is_positive();
    let core: Vec<usize> = (0..size).filter(|&i| positive(i, i)).collect();
    let zero_row = |i: usize| (0..size).all(|j| !positive(i, j));
    let top: Vec<usize> = (0..size)
        .filter(|&i| !positive(i, i) && !zero_row(i))
        .collect();
    let bottom: Vec<usize> = (0..size)
        .filter(|&i| !positive(i, i) && zero_row(i))
        .collect();

    // blocks of the core under i ~ j iff both M_ij and M_ji are positive
    let mut block_of = vec![usize::MAX; size];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &i in &core {
        if block_of[i] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![i];
        block_of[i] = id;
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &y in &core {
                if block_of[y] == usize::MAX && positive(x, y) && positive(y, x) {
                    block_of[y] = id;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        blocks.push(members);
    }
    let core_order: Vec<usize> = blocks.iter().flatten().copied().collect();

    let form = FlorForm {
        permutation: top
            .iter()
            .chain(&core_order)
            .chain(&bottom)
            .copied()
            .collect(),
        a: m.select(&top, &core_order),
        j_blocks: blocks.iter().map(|blk| m.select(blk, blk)).collect(),
        b: m.select(&core_order, &bottom),
    };

    for (k, blk) in form.j_blocks.iter().enumerate() {
        if blk.mul(blk) != *blk || blk.rank() != 1 {
            return Err(FlorError::Inconsistent(format!(
                "block {k} is not a rank-1 idempotent"
            )));
        }
    }
    if form.reassemble() != *m {
        return Err(FlorError::Inconsistent(
            "reassembly differs from input".into(),
        ));
    }
    Ok(form)
}

/// `true` when `m` is a non-negative idempotent of rank one with every entry
/// positive, the shape every `J` block takes.
pub fn is_positive_rank_one_idempotent(m: &QMatrix) -> bool {
    m.is_square()
        && m.to_rows().iter().flatten().all(Signed::is_positive)
        && m.mul(m) == *m
        && m.trace() == Q::one()
}

/// A random non-negative idempotent assembled from positive rank-1
/// blocks `x y^T` with `y^T x = 1`, random `A`, `B` and a permutation.
pub fn random_nonnegative_idempotent<R: Rng + ?Sized>(rng: &mut R) -> QMatrix {
    let k = rng.gen_range(0..=3);
    let mut blocks = Vec::new();
    for _ in 0..k {
        let s = rng.gen_range(1..=3);
        let x: Vec<Q> = (0..s).map(|_| q(rng.gen_range(1..=4))).collect();
        let y: Vec<Q> = (0..s).map(|_| q(rng.gen_range(1..=4))).collect();
        let dot: Q = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        blocks.push(QMatrix::from_rows(
            x.iter()
                .map(|a| y.iter().map(|b| a * b / &dot).collect())
                .collect(),
        ));
    }
    let c: usize = blocks.iter().map(QMatrix::rows).sum();
    let t = rng.gen_range(0..=2);
    let bsz = rng.gen_range(usize::from(t + c == 0)..=2);
    let rand_mat = |rng: &mut R, r: usize, s: usize| {
        let mut x = QMatrix::zeros(r, s);
        for i in 0..r {
            for j in 0..s {
                x[(i, j)] = q(rng.gen_range(0..=3));
            }
        }
        x
    };
    let form = FlorForm {
        permutation: {
            let mut p: Vec<usize> = (0..t + c + bsz).collect();
            p.shuffle(rng);
            p
        },
        a: rand_mat(rng, t, c),
        j_blocks: blocks,
        b: rand_mat(rng, c, bsz),
    };
    form.reassemble()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qf;
    use proptest::prelude::*;
    use rand::SeedableRng;

    #[test]
    fn identity_splits_into_unit_blocks() {
        for size in 1..=4 {
            let e = QMatrix::identity(size);
            let f = flor_normal_form(&e).unwrap();
            assert_eq!(f.permutation, (0..size).collect::<Vec<_>>());
            assert_eq!(f.j_blocks, vec![QMatrix::identity(1); size]);
            assert_eq!((f.top_size(), f.bottom_size()), (0, 0));
        }
    }

    #[test]
    fn one_block_with_tail() {
        let m = QMatrix::from_rows(vec![vec![q(1), qf(1, 2)], vec![q(0), q(0)]]);
        let f = flor_normal_form(&m).unwrap();
        assert_eq!(f.j_blocks, vec![QMatrix::identity(1)]);
        assert_eq!(f.b, QMatrix::from_rows(vec![vec![qf(1, 2)]]));
        assert_eq!(f.top_size(), 0);
        assert_eq!(f.reassemble(), m);
    }

    #[test]
    fn whole_matrix_is_one_block() {
        let m = QMatrix::from_i64_rows(&[vec![2, 1], vec![2, 1]]).scale(&qf(1, 3));
        let f = flor_normal_form(&m).unwrap();
        assert_eq!(f.j_blocks, vec![m.clone()]);
        assert!(is_positive_rank_one_idempotent(&f.j_blocks[0]));
        assert_eq!(f.reassemble(), m);
    }

    #[test]
    fn head_row_goes_on_top() {
        // e_0 maps onto the core index 1
        let m = QMatrix::from_i64_rows(&[vec![0, 3], vec![0, 1]]);
        let f = flor_normal_form(&m).unwrap();
        assert_eq!(f.permutation, vec![0, 1]);
        assert_eq!(f.a, QMatrix::from_i64_rows(&[vec![3]]));
        assert_eq!(f.reassemble(), m);
    }

    #[test]
    fn rejects_non_idempotent_with_witness() {
        let m = QMatrix::from_i64_rows(&[vec![2, 1], vec![2, 1]]);
        match flor_normal_form(&m).unwrap_err() {
            FlorError::NotIdempotent { row, col, excess } => {
                assert_eq!((row, col), (0, 0));
                assert_eq!(excess, q(4));
            }
            e => panic!("unexpected {e}"),
        }
        assert!(matches!(
            flor_normal_form(&QMatrix::from_i64_rows(&[vec![-1]])),
            Err(FlorError::Negative { row: 0, col: 0 })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn reassembly_is_exact(seed in any::<u64>()) {
            let m = random_nonnegative_idempotent(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(m.mul(&m), m.clone());
            let f = flor_normal_form(&m).unwrap();
            prop_assert_eq!(f.reassemble(), m.clone());
            prop_assert_eq!(f.rank(), m.rank());
            for blk in &f.j_blocks {
                prop_assert!(is_positive_rank_one_idempotent(blk));
            }
            prop_assert!(f.a.is_nonnegative() && f.b.is_nonnegative());
        }
    }
}
