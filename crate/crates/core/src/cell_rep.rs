//! Cell 2-representations, computed at the level of morphisms.
//!
//! Objects are the indecomposables `X = F(i,s)` above a left cell. A
//! bimodule map `F(i,s) -> F(j,s')` is fixed by the image of `e_i (x) e_s`,
//! an element of `e_i A e_j (x) e_s' A e_s`, so `Hom` has basis the pairs
//! `(p, q)` of a path `p: j -> i` and a path `q: s -> s'`. Composition is
//!
//! ```text
//! (p_g, q_g) o (p_f, q_f) = (p_f p_g, q_g q_f)
//! ```
//!
//! and `G = F(k,l)` sends `F(i,s)` to copies of `F(k,s)` indexed by the
//! paths `m: i -> l`, acting on `(p, q)` by the block
//! `(m' <- m) = [m'](m p) * (e_k, q)`.
//!
//! The maximal ideal not containing identities is the set of `f` such that
//! no action component of `f` has a nonzero identity coefficient on an
//! endomorphism space. That is a common kernel of linear functionals, which
//! is computed directly and checked against a fixed-point closure.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bimodule_2cat::{
    cell_structure, left_cell_subcategory, right_cell_subcategory, CategoryError, Label,
    TwoSubcategory,
};
use crate::int_matrix::IntMatrix;
use crate::linalg::{QMatrix, Subspace, Q};
use crate::quiver_algebra::NormalPath;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CellRepError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error("the cell contains the identity 1-morphism")]
    ContainsIdentity,
    #[error("{0:?} is not a left cell of the 2-subcategory")]
    NotALeftCell(Vec<Label>),
    #[error("{0} is not a 1-morphism of the 2-subcategory")]
    UnknownOneMorphism(Label),
    #[error("Cartan matrix is singular")]
    SingularCartan,
}

/// A morphism between two objects, as coordinates in the hom basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub coords: Vec<Q>,
}

/// `G(f)` as a block matrix of morphisms between the copies of `G X` and
/// `G Y`; `blocks[b][a]` goes from source copy `a` to target copy `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMorphism {
    pub source: usize,
    pub target: usize,
    pub blocks: Vec<Vec<Morphism>>,
}

/// The basis of one hom space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub source: Label,
    pub target: Label,
    /// Algebra basis indices `(p, q)`.
    pub basis: Vec<(usize, usize)>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The additive subcategory of the principal 2-representation spanned by
/// the indecomposables above a left cell.
#[derive(Clone, Debug)]
pub struct PrincipalSubrep {
    category: TwoSubcategory,
    cell: Vec<Label>,
    objects: Vec<Label>,
    ends: Vec<(usize, usize)>,
    homs: Vec<Vec<HomSpace>>,
}

fn endpoints(l: Label) -> (usize, usize) {
    match l {
        Label::F(i, s) => (i, s),
        Label::Id => unreachable!("identity is never an object"),
    }
}

pub fn principal_cell_subrep(
    c: &TwoSubcategory,
    cell: &[Label],
) -> Result<PrincipalSubrep, CellRepError> {
    if cell.contains(&Label::Id) {
        return Err(CellRepError::ContainsIdentity);
    }
    let mut sorted = cell.to_vec();
    sorted.sort();
    if !cell_structure(c).left_cells.contains(&sorted) {
        return Err(CellRepError::NotALeftCell(sorted));
    }
    let objects: Vec<Label> = c
        .non_identity()
        .into_iter()
        .filter(|&x| c.left_geq(x, sorted[0]))
        .collect();
    let ends: Vec<(usize, usize)> = objects.iter().map(|&l| endpoints(l)).collect();
    let a = c.algebra();
    let homs = ends
        .iter()
        .zip(&objects)
        .map(|(&(i, s), &x)| {
            ends.iter()
                .zip(&objects)
                .map(|(&(j, t), &y)| {
                    let mut basis = Vec::new();
                    for p in a.paths_between(j, i) {
                        for q in a.paths_between(s, t) {
                            basis.push((p, q));
                        }
                    }
                    HomSpace {
                        source: x,
                        target: y,
                        basis,
                    }
                })
                .collect()
        })
        .collect();
    Ok(PrincipalSubrep {
        category: c.clone(),
        cell: sorted,
        objects,
        ends,
        homs,
    })
}

impl PrincipalSubrep {
    pub fn objects(&self) -> &[Label] {
        &self.objects
    }

    pub fn cell(&self) -> &[Label] {
        &self.cell
    }

    pub fn category(&self) -> &TwoSubcategory {
        &self.category
    }

    pub fn object_index(&self, l: Label) -> Option<usize> {
        self.objects.iter().position(|&x| x == l)
    }

    pub fn hom(&self, x: usize, y: usize) -> &HomSpace {
        &self.homs[x][y]
    }

    pub fn hom_dims(&self) -> IntMatrix {
        let k = self.objects.len();
        IntMatrix::from_fn(k, k, |x, y| self.homs[x][y].dim() as u64)
    }

    pub fn zero(&self, x: usize, y: usize) -> Morphism {
        Morphism {
            source: x,
            target: y,
            coords: vec![Q::zero(); self.homs[x][y].dim()],
        }
    }

    pub fn basis_morphism(&self, x: usize, y: usize, k: usize) -> Morphism {
        let mut m = self.zero(x, y);
        m.coords[k] = Q::one();
        m
    }

    fn trivial_index(&self, v: usize) -> usize {
        self.category
            .algebra()
            .basis_index(&NormalPath::trivial(v))
            .expect("trivial paths are basis elements")
    }

    /// Position of `(e_i, e_s)` in the basis of `End(X)`.
    pub fn identity_position(&self, x: usize) -> usize {
        let (i, s) = self.ends[x];
        let key = (self.trivial_index(i), self.trivial_index(s));
        self.homs[x][x]
            .basis
            .iter()
            .position(|&b| b == key)
            .expect("identity pair in End")
    }

    pub fn identity(&self, x: usize) -> Morphism {
        self.basis_morphism(x, x, self.identity_position(x))
    }

    fn add_pair(&self, m: &mut Morphism, p: usize, q: usize, c: &Q) {
        let pos = self.homs[m.source][m.target]
            .basis
            .iter()
            .position(|&b| b == (p, q))
            .expect("pair lies in the hom basis");
        m.coords[pos] += c;
    }

    /// `g o f`.
    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Morphism {
        assert_eq!(f.target, g.source, "morphisms are not composable");
        let a = self.category.algebra();
        let mut out = self.zero(f.source, g.target);
        let fb = &self.homs[f.source][f.target].basis;
        let gb = &self.homs[g.source][g.target].basis;
        for (cf, &(pf, qf)) in f.coords.iter().zip(fb) {
            if cf.is_zero() {
                continue;
            }
            for (cg, &(pg, qg)) in g.coords.iter().zip(gb) {
                if cg.is_zero() {
                    continue;
                }
                let c = cf * cg;
                let p = a.mul_basis(pf, pg);
                let q = a.mul_basis(qg, qf);
                for (pp, pc) in p.terms() {
                    for (qq, qc) in q.terms() {
                        let coef = &c * pc * qc;
                        self.add_pair(
                            &mut out,
                            a.basis_index(pp).unwrap(),
                            a.basis_index(qq).unwrap(),
                            &coef,
                        );
                    }
                }
            }
        }
        out
    }

    /// `G X` as an object index and the copy basis (paths `i -> l`), or
    /// `None` when `G X = 0`.
    pub fn act_on_object(&self, g: Label, x: usize) -> Option<(usize, Vec<usize>)> {
        let (i, s) = self.ends[x];
        match g {
            Label::Id => Some((x, vec![usize::MAX])),
            Label::F(k, l) => {
                let copies = self.category.algebra().paths_between(i, l);
                if copies.is_empty() {
                    return None;
                }
                let y = self
                    .object_index(Label::F(k, s))
                    .expect("objects are closed under the action");
                Some((y, copies))
            }
        }
    }

    /// `G(f)`, or `None` when `G` kills the source or target.
    pub fn act(&self, g: Label, f: &Morphism) -> Option<BlockMorphism> {
        let (gx, src_copies) = self.act_on_object(g, f.source)?;
        let (gy, tgt_copies) = self.act_on_object(g, f.target)?;
        let Label::F(k, _) = g else {
            return Some(BlockMorphism {
                source: gx,
                target: gy,
                blocks: vec![vec![f.clone()]],
            });
        };
        let a = self.category.algebra();
        let mut blocks = vec![vec![self.zero(gx, gy); src_copies.len()]; tgt_copies.len()];
        let ek = self.trivial_index(k);
        let basis = &self.homs[f.source][f.target].basis;
        for (c, &(p, q)) in f.coords.iter().zip(basis) {
            if c.is_zero() {
                continue;
            }
            for (ai, &m) in src_copies.iter().enumerate() {
                for (path, coef) in a.mul_basis(m, p).terms() {
                    let mp = a.basis_index(path).unwrap();
                    let bi = tgt_copies
                        .iter()
                        .position(|&x| x == mp)
                        .expect("m p is a path into the target copies");
                    let coef = c * coef;
                    self.add_pair(&mut blocks[bi][ai], ek, q, &coef);
                }
            }
        }
        Some(BlockMorphism {
            source: gx,
            target: gy,
            blocks,
        })
    }

    /// Block composition `g o f` of two acted morphisms.
    pub fn compose_blocks(&self, g: &BlockMorphism, f: &BlockMorphism) -> BlockMorphism {
        let rows = g.blocks.len();
        let mid = f.blocks.len();
        let cols = f.blocks.first().map_or(0, Vec::len);
        let blocks = (0..rows)
            .map(|b| {
                (0..cols)
                    .map(|a| {
                        let mut acc = self.zero(f.source, g.target);
                        for k in 0..mid {
                            let term = self.compose(&g.blocks[b][k], &f.blocks[k][a]);
                            for (x, y) in acc.coords.iter_mut().zip(term.coords) {
                                *x += y;
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        BlockMorphism {
            source: f.source,
            target: g.target,
            blocks,
        }
    }

    /// `[G]`: column `y` holds the multiplicities of the objects in `G Y`.
    pub fn action_matrix(&self, g: Label) -> IntMatrix {
        let k = self.objects.len();
        let mut m = IntMatrix::zeros(k, k);
        for y in 0..k {
            if let Some((x, copies)) = self.act_on_object(g, y) {
                m.set(x, y, m.get(x, y) + copies.len() as u64);
            }
        }
        m
    }

    fn one_morphisms(&self) -> Vec<Label> {
        self.category.labels()
    }

    /// Smallest family of subspaces containing `seeds` that is closed under
    /// composition with all morphisms and under every 1-morphism.
    pub fn invariant_closure(&self, seeds: &InvariantIdeal) -> InvariantIdeal {
        let k = self.objects.len();
        let mut ideal = seeds.clone();
        let mut queue: Vec<Morphism> = Vec::new();
        for x in 0..k {
            for y in 0..k {
                for v in ideal.spaces[x][y].basis() {
                    queue.push(Morphism {
                        source: x,
                        target: y,
                        coords: v.to_vec(),
                    });
                }
            }
        }
        let push = |ideal: &mut InvariantIdeal, queue: &mut Vec<Morphism>, m: Morphism| {
            if ideal.spaces[m.source][m.target].insert(&m.coords) {
                queue.push(m);
            }
        };
        while let Some(f) = queue.pop() {
            for w in 0..k {
                for b in 0..self.homs[w][f.source].dim() {
                    let pre = self.compose(&f, &self.basis_morphism(w, f.source, b));
                    push(&mut ideal, &mut queue, pre);
                }
                for b in 0..self.homs[f.target][w].dim() {
                    let post = self.compose(&self.basis_morphism(f.target, w, b), &f);
                    push(&mut ideal, &mut queue, post);
                }
            }
            for g in self.one_morphisms() {
                if let Some(acted) = self.act(g, &f) {
                    for block in acted.blocks.into_iter().flatten() {
                        push(&mut ideal, &mut queue, block);
                    }
                }
            }
        }
        ideal
    }

    pub fn zero_ideal(&self) -> InvariantIdeal {
        let k = self.objects.len();
        InvariantIdeal {
            spaces: (0..k)
                .map(|x| {
                    (0..k)
                        .map(|y| Subspace::new(self.homs[x][y].dim()))
                        .collect()
                })
                .collect(),
        }
    }

    /// `true` when the ideal contains the identity of some object.
    pub fn contains_identity(&self, ideal: &InvariantIdeal) -> bool {
        (0..self.objects.len()).any(|x| ideal.spaces[x][x].contains(&self.identity(x).coords))
    }
}

/// One subspace of each hom space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantIdeal {
    pub spaces: Vec<Vec<Subspace>>,
}

impl InvariantIdeal {
    pub fn dims(&self) -> IntMatrix {
        let k = self.spaces.len();
        IntMatrix::from_fn(k, k, |x, y| self.spaces[x][y].dim() as u64)
    }
}

/// The largest ideal stable under the action that contains no identity.
pub fn maximal_invariant_ideal(rep: &PrincipalSubrep) -> InvariantIdeal {
    let k = rep.objects.len();
    let mut spaces = Vec::with_capacity(k);
    for x in 0..k {
        let mut row = Vec::with_capacity(k);
        for y in 0..k {
            let dim = rep.homs[x][y].dim();
            let mut functionals: Vec<Vec<Q>> = Vec::new();
            // columns[t]: identity coefficients of every action component of e_t
            let mut columns: Vec<Vec<Q>> = Vec::new();
            for t in 0..dim {
                let e = rep.basis_morphism(x, y, t);
                let mut column = Vec::new();
                for g in rep.one_morphisms() {
                    let Some(acted) = rep.act(g, &e) else {
                        continue;
                    };
                    if acted.source != acted.target {
                        continue;
                    }
                    let top = rep.identity_position(acted.source);
                    for block in acted.blocks.iter().flatten() {
                        column.push(block.coords[top].clone());
                    }
                }
                columns.push(column);
            }
            let n_funcs = columns.first().map_or(0, Vec::len);
            for r in 0..n_funcs {
                functionals.push(columns.iter().map(|c| c[r].clone()).collect());
            }
            let mut mat = QMatrix::zeros(functionals.len(), dim);
            for (r, f) in functionals.iter().enumerate() {
                for (c, v) in f.iter().enumerate() {
                    mat[(r, c)] = v.clone();
                }
            }
            let kernel = mat.nullspace();
            row.push(Subspace::from_vectors(
                dim,
                kernel.iter().map(Vec::as_slice),
            ));
        }
        spaces.push(row);
    }
    InvariantIdeal { spaces }
}

/// The simple transitive quotient of a principal cell subrepresentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRepresentation {
    pub objects: Vec<Label>,
    /// `[G]` for every non-identity 1-morphism of the 2-subcategory.
    pub action: BTreeMap<Label, IntMatrix>,
    /// `cartan[x][y] = dim Hom(X_x, X_y)` in the quotient.
    pub cartan: IntMatrix,
    pub hom_raw: IntMatrix,
    /// Reserved for matrix families realized by other constructions.
    pub family: Option<serde_json::Value>,
}

impl fmt::Display for CellRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let objs: Vec<String> = self.objects.iter().map(Label::to_string).collect();
        writeln!(f, "objects: {}", objs.join(", "))?;
        writeln!(f, "Cartan matrix:\n{}", self.cartan)?;
        writeln!(f, "raw hom dimensions:\n{}", self.hom_raw)?;
        for (g, m) in &self.action {
            writeln!(f, "[{g}]:\n{m}")?;
        }
        Ok(())
    }
}

pub fn cell_2rep(c: &TwoSubcategory, cell: &[Label]) -> Result<CellRepresentation, CellRepError> {
    let rep = principal_cell_subrep(c, cell)?;
    let ideal = maximal_invariant_ideal(&rep);
    let raw = rep.hom_dims();
    let cartan = IntMatrix::from_fn(raw.rows(), raw.cols(), |x, y| {
        raw.get(x, y) - ideal.spaces[x][y].dim() as u64
    });
    Ok(CellRepresentation {
        objects: rep.objects.clone(),
        action: c
            .non_identity()
            .into_iter()
            .map(|g| (g, rep.action_matrix(g)))
            .collect(),
        cartan,
        hom_raw: raw,
        family: None,
    })
}

/// The cell 2-representation of the left-cell 2-subcategory on the cell
/// `{F(0,0), ..., F(n,0)}`.
pub fn left_cell_rep(n: i64) -> Result<CellRepresentation, CellRepError> {
    let c = left_cell_subcategory(n)?;
    let cell: Vec<Label> = c.non_identity();
    cell_2rep(&c, &cell)
}

/// The cell 2-representation of the right-cell 2-subcategory on the
/// singleton left cell `{F(0,0)}`.
pub fn right_cell_rep(n: i64) -> Result<CellRepresentation, CellRepError> {
    let c = right_cell_subcategory(n)?;
    cell_2rep(&c, &[Label::F(0, 0)])
}

/// `C [G] C^{-1}`, the action of `G` in the basis of simple objects.
pub fn simples_action_matrix(rep: &CellRepresentation, g: Label) -> Result<QMatrix, CellRepError> {
    let k = rep.objects.len();
    let action = match g {
        Label::Id => IntMatrix::identity(k),
        _ => rep
            .action
            .get(&g)
            .cloned()
            .ok_or(CellRepError::UnknownOneMorphism(g))?,
    };
    let c = rep.cartan.to_qmatrix();
    let inv = c.inverse().ok_or(CellRepError::SingularCartan)?;
    Ok(c.mul(&action.to_qmatrix()).mul(&inv))
}
