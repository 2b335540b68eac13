//! The 2-category of projective bimodule functors over a path algebra, at the
//! level of its split Grothendieck data.
//!
//! Indecomposable 1-morphisms are the identity and `F(i,j) = A e_i (x) e_j A`.
//! Their composition is
//!
//! ```text
//! F(i,j) o F(k,l) = F(i,l)^{dim e_j A e_k}
//! ```
//!
//! which is all that cells and action matrices need.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::quiver_algebra::{build_star_algebra, AlgebraError, PathAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0} is not a 1-morphism of this algebra")]
    InvalidLabel(Label),
    #[error("{0} is not in the 2-subcategory {1}")]
    OutsideSubcategory(Label, String),
    #[error("cannot parse 1-morphism label {0:?}")]
    BadLabel(String),
}

/// An indecomposable 1-morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Id,
    /// `F(i, j)`, tensoring with `A e_i (x) e_j A`.
    F(usize, usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Id => write!(f, "Id"),
            Label::F(i, j) => write!(f, "F({i},{j})"),
        }
    }
}

impl FromStr for Label {
    type Err = CategoryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CategoryError::BadLabel(s.to_string());
        if s == "Id" {
            return Ok(Label::Id);
        }
        let inner = s
            .strip_prefix("F(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Label::F(
            i.trim().parse().map_err(|_| bad())?,
            j.trim().parse().map_err(|_| bad())?,
        ))
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A 1-morphism as a multiset of indecomposables. The empty multiset is the
/// zero 1-morphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OneMorphism {
    multiplicities: BTreeMap<Label, u64>,
}

impl OneMorphism {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn indecomposable(l: Label) -> Self {
        Self::from_pairs([(l, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Label, u64)>) -> Self {
        let mut m = Self::zero();
        for (l, k) in pairs {
            m.add_copies(l, k);
        }
        m
    }

    pub fn add_copies(&mut self, l: Label, k: u64) {
        if k > 0 {
            *self.multiplicities.entry(l).or_insert(0) += k;
        }
    }

    pub fn multiplicity(&self, l: Label) -> u64 {
        self.multiplicities.get(&l).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = Label> + '_ {
        self.multiplicities.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Label, u64)> + '_ {
        self.multiplicities.iter().map(|(l, k)| (*l, *k))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, k) in other.terms() {
            out.add_copies(l, k);
        }
        out
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::from_pairs(self.terms().map(|(l, m)| (l, m * k)))
    }
}

impl fmt::Display for OneMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(l, k)| {
                if k == 1 {
                    l.to_string()
                } else {
                    format!("{k}{l}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Composition of indecomposables over `algebra`.
pub fn compose_labels(algebra: &PathAlgebra, f: Label, g: Label) -> OneMorphism {
    match (f, g) {
        (Label::Id, x) | (x, Label::Id) => OneMorphism::indecomposable(x),
        (Label::F(i, j), Label::F(k, l)) => {
            OneMorphism::from_pairs([(Label::F(i, l), algebra.hom_dim(k, j) as u64)])
        }
    }
}

/// A one-object 2-subcategory given by a set of indecomposables closed under
/// taking summands of compositions.
#[derive(Clone, Debug)]
pub struct TwoSubcategory {
    algebra: Arc<PathAlgebra>,
    indecomposables: BTreeSet<Label>,
    name: String,
}

impl TwoSubcategory {
    pub fn algebra(&self) -> &PathAlgebra {
        &self.algebra
    }

    pub fn shared_algebra(&self) -> Arc<PathAlgebra> {
        Arc::clone(&self.algebra)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// All indecomposables in label order, `Id` first.
    pub fn labels(&self) -> Vec<Label> {
        self.indecomposables.iter().copied().collect()
    }

    /// Indecomposables other than the identity.
    pub fn non_identity(&self) -> Vec<Label> {
        self.indecomposables
            .iter()
            .copied()
            .filter(|l| *l != Label::Id)
            .collect()
    }

    pub fn contains(&self, l: Label) -> bool {
        self.indecomposables.contains(&l)
    }

    fn check(&self, m: &OneMorphism) -> Result<(), CategoryError> {
        match m.support().find(|l| !self.contains(*l)) {
            Some(l) => Err(CategoryError::OutsideSubcategory(l, self.name.clone())),
            None => Ok(()),
        }
    }

    pub fn compose(&self, f: &OneMorphism, g: &OneMorphism) -> Result<OneMorphism, CategoryError> {
        self.check(f)?;
        self.check(g)?;
        let mut out = OneMorphism::zero();
        for (a, ka) in f.terms() {
            for (b, kb) in g.terms() {
                out = out.add(&compose_labels(&self.algebra, a, b).scale(ka * kb));
            }
        }
        Ok(out)
    }

    fn compose_ix(&self, f: Label, g: Label) -> OneMorphism {
        compose_labels(&self.algebra, f, g)
    }

    /// `geq[x][y]` is `labels[x] >= labels[y]` in the preorder generated by
    /// "is a summand of `H o G`" (left), "of `G o H`" (right) or both.
    fn preorder(&self, left: bool, right: bool) -> Vec<Vec<bool>> {
        let labels = self.labels();
        let pos: BTreeMap<Label, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let n = labels.len();
        let mut geq = vec![vec![false; n]; n];
        for (gi, &g) in labels.iter().enumerate() {
            for &h in &labels {
                let mut products = Vec::new();
                if left {
                    products.push(self.compose_ix(h, g));
                }
                if right {
                    products.push(self.compose_ix(g, h));
                }
                for p in products {
                    for f in p.support() {
                        geq[pos[&f]][gi] = true;
                    }
                }
            }
        }
        // Warshall closure
        #[allow(clippy::needless_range_loop)]
        for k in 0..n {
            for i in 0..n {
                if geq[i][k] {
                    for j in 0..n {
                        if geq[k][j] {
                            geq[i][j] = true;
                        }
                    }
                }
            }
        }
        geq
    }

    /// True when `f >=_L g`.
    pub fn left_geq(&self, f: Label, g: Label) -> bool {
        let labels = self.labels();
        let (Some(a), Some(b)) = (
            labels.iter().position(|l| *l == f),
            labels.iter().position(|l| *l == g),
        ) else {
            return false;
        };
        self.preorder(true, false)[a][b]
    }
}

fn validate_label(algebra: &PathAlgebra, l: Label) -> Result<(), CategoryError> {
    match l {
        Label::Id => Ok(()),
        Label::F(i, j) if i < algebra.vertex_count() && j < algebra.vertex_count() => Ok(()),
        _ => Err(CategoryError::InvalidLabel(l)),
    }
}

/// Smallest 2-subcategory containing `Id` and `generators` that is closed
/// under summands of compositions.
pub fn subcategory_closure(
    algebra: Arc<PathAlgebra>,
    generators: &[Label],
    name: &str,
) -> Result<TwoSubcategory, CategoryError> {
    let mut set: BTreeSet<Label> = BTreeSet::from([Label::Id]);
    for &g in generators {
        validate_label(&algebra, g)?;
        set.insert(g);
    }
    loop {
        let current: Vec<Label> = set.iter().copied().collect();
        let mut grew = false;
        for &f in &current {
            for &g in &current {
                for l in compose_labels(&algebra, f, g).support() {
                    grew |= set.insert(l);
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(TwoSubcategory {
        algebra,
        indecomposables: set,
        name: name.to_string(),
    })
}

/// The left-cell 2-subcategory `add(Id, F(0,0), ..., F(n,0))` over the star
/// algebra on `n + 1` vertices.
pub fn left_cell_subcategory(n: i64) -> Result<TwoSubcategory, CategoryError> {
    let a = Arc::new(build_star_algebra(n)?);
    let gens: Vec<Label> = (0..a.vertex_count()).map(|i| Label::F(i, 0)).collect();
    subcategory_closure(a, &gens, &format!("C_{n}"))
}

/// The right-cell 2-subcategory `add(Id, F(0,0), ..., F(0,n))`.
pub fn right_cell_subcategory(n: i64) -> Result<TwoSubcategory, CategoryError> {
    let a = Arc::new(build_star_algebra(n)?);
    let gens: Vec<Label> = (0..a.vertex_count()).map(|j| Label::F(0, j)).collect();
    subcategory_closure(a, &gens, &format!("C^r_{n}"))
}

/// All projective bimodule functors over `algebra`.
pub fn full_subcategory(algebra: Arc<PathAlgebra>) -> Result<TwoSubcategory, CategoryError> {
    let k = algebra.vertex_count();
    let gens: Vec<Label> = (0..k)
        .flat_map(|i| (0..k).map(move |j| Label::F(i, j)))
        .collect();
    subcategory_closure(algebra, &gens, "C_A")
}

/// Left, right and two-sided cells with the order on two-sided cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellStructure {
    pub left_cells: Vec<Vec<Label>>,
    pub right_cells: Vec<Vec<Label>>,
    pub twosided_cells: Vec<Vec<Label>>,
    /// `[a, b]` means two-sided cell `a` is strictly above cell `b`.
    pub order: Vec<[usize; 2]>,
    pub idempotent: Vec<bool>,
}

fn classes(labels: &[Label], geq: &[Vec<bool>]) -> Vec<Vec<Label>> {
    let mut assigned = vec![false; labels.len()];
    let mut out = Vec::new();
    for i in 0..labels.len() {
        if assigned[i] {
            continue;
        }
        let class: Vec<usize> = (i..labels.len())
            .filter(|&j| !assigned[j] && geq[i][j] && geq[j][i])
            .collect();
        for &j in &class {
            assigned[j] = true;
        }
        out.push(class.into_iter().map(|j| labels[j]).collect());
    }
    out
}

pub fn cell_structure(c: &TwoSubcategory) -> CellStructure {
    let labels = c.labels();
    let left = c.preorder(true, false);
    let right = c.preorder(false, true);
    let both = c.preorder(true, true);
    let twosided_cells = classes(&labels, &both);
    let pos = |l: &Label| labels.iter().position(|x| x == l).unwrap();
    let mut order = Vec::new();
    for (a, ca) in twosided_cells.iter().enumerate() {
        for (b, cb) in twosided_cells.iter().enumerate() {
            if a != b && both[pos(&ca[0])][pos(&cb[0])] {
                order.push([a, b]);
            }
        }
    }
    let idempotent = twosided_cells
        .iter()
        .map(|cell| {
            cell.iter().any(|&g| {
                cell.iter()
                    .any(|&h| c.compose_ix(g, h).support().any(|f| cell.contains(&f)))
            })
        })
        .collect();
    CellStructure {
        left_cells: classes(&labels, &left),
        right_cells: classes(&labels, &right),
        twosided_cells,
        order,
        idempotent,
    }
}

impl CellStructure {
    /// Covering pairs of the two-sided order.
    pub fn hasse(&self) -> Vec<[usize; 2]> {
        let above = |a: usize, b: usize| self.order.contains(&[a, b]);
        self.order
            .iter()
            .copied()
            .filter(|&[a, b]| !(0..self.twosided_cells.len()).any(|m| above(a, m) && above(m, b)))
            .collect()
    }

    /// Graphviz Hasse diagram of the two-sided cells, bottom to top.
    pub fn hasse_dot(&self) -> String {
        let mut s = String::from("digraph cells {\n  rankdir=BT;\n");
        for (i, cell) in self.twosided_cells.iter().enumerate() {
            let members: Vec<String> = cell.iter().map(Label::to_string).collect();
            let _ = writeln!(
                s,
                "  J{i} [label=\"{}\"{}];",
                members.join(", "),
                if self.idempotent[i] {
                    ", peripheries=2"
                } else {
                    ""
                }
            );
        }
        for [a, b] in self.hasse() {
            let _ = writeln!(s, "  J{b} -> J{a};");
        }
        s.push_str("}\n");
        s
    }

    pub fn left_cell_of(&self, l: Label) -> Option<&[Label]> {
        self.left_cells
            .iter()
            .find(|c| c.contains(&l))
            .map(Vec::as_slice)
    }
}

/// Pairwise compositions `row o column`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionTable {
    pub labels: Vec<Label>,
    pub entries: Vec<Vec<OneMorphism>>,
}

impl CompositionTable {
    /// `tensor[r][c][k]` is the multiplicity of `labels[k]` in
    /// `labels[r] o labels[c]`.
    pub fn tensor(&self) -> Vec<Vec<Vec<u64>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| self.labels.iter().map(|l| m.multiplicity(*l)).collect())
                    .collect()
            })
            .collect()
    }

    pub fn get(&self, f: Label, g: Label) -> Option<&OneMorphism> {
        let r = self.labels.iter().position(|l| *l == f)?;
        let c = self.labels.iter().position(|l| *l == g)?;
        Some(&self.entries[r][c])
    }
}

impl fmt::Display for CompositionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain(self.labels.iter().map(|l| l.to_string().len()))
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$} |", "o")?;
        for l in &self.labels {
            write!(f, " {:>width$}", l.to_string())?;
        }
        for (l, row) in self.labels.iter().zip(&cells) {
            writeln!(f)?;
            write!(f, "{:>width$} |", l.to_string())?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
        }
        Ok(())
    }
}

/// Composition table of the non-identity indecomposables, or of all of them
/// when `include_identity` is set.
pub fn composition_table(c: &TwoSubcategory, include_identity: bool) -> CompositionTable {
    let labels = if include_identity {
        c.labels()
    } else {
        c.non_identity()
    };
    let entries = labels
        .iter()
        .map(|&f| labels.iter().map(|&g| c.compose_ix(f, g)).collect())
        .collect();
    CompositionTable { labels, entries }
}
