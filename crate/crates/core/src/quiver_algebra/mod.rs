//! Finite-dimensional quotients of path algebras.
//!
//! Paths are written left to right and composed right to left, as functions:
//! the word `b1*a1` means "first `a1`, then `b1`", so for the star algebras it
//! is a cycle at the centre vertex `0`. A path algebra is carried by its basis
//! of irreducible words under a monomial rewriting system together with the
//! full multiplication table.

mod quiver;
mod rewrite;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::int_matrix::IntMatrix;
use crate::linalg::{QMatrix, Q};

pub use quiver::{Arrow, Quiver, QuiverSpec, Relation, RelationKind};
pub use rewrite::{deglex, RewriteSystem, Rule};

/// Longest irreducible path searched for before declaring the quotient
/// infinite-dimensional.
pub const MAX_PATH_LENGTH: usize = 48;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("the star algebra needs n >= 1, got {0}")]
    InvalidStarSize(i64),
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("vertex ids must be 0, 1, ..., k-1 in order")]
    VertexIds,
    #[error("arrow id {0:?} used twice")]
    DuplicateArrow(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("empty arrow sequence; use the vertex idempotent instead")]
    EmptyPath,
    #[error("arrows {0} do not compose to a path")]
    NotComposable(String),
    #[error("relation sides {0} and {1} have different endpoints")]
    MismatchedEndpoints(String, String),
    #[error("path-equality relation on {0} has no right-hand side")]
    MissingRhs(String),
    #[error("relation side {0} is shorter than two arrows")]
    NonAdmissible(String),
    #[error("rewriting system is not confluent on {0}; add the missing consequence as a relation")]
    NonConfluent(String),
    #[error("quotient has irreducible paths of length {0}; it is not finite-dimensional")]
    InfiniteDimensional(usize),
}

/// A residue-class representative: an irreducible arrow word, or the trivial
/// path at a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalPath {
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl NormalPath {
    pub fn trivial(v: usize) -> Self {
        Self {
            arrows: Vec::new(),
            source: v,
            target: v,
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Sparse linear combination of normal paths with no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<NormalPath, Q>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: NormalPath) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, Q::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalPath, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &NormalPath) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, p: NormalPath, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// The single path, when this is a path with coefficient one.
    pub fn as_path(&self) -> Option<&NormalPath> {
        match self.terms.iter().next() {
            Some((p, c)) if self.terms.len() == 1 && c.is_one() => Some(p),
            _ => None,
        }
    }
}

/// Radical layers of an indecomposable projective: `layers[k]` lists the
/// simple tops (vertex indices, with repetition, sorted) in radical layer `k`.
pub type LoewyLayers = Vec<Vec<usize>>;

/// A finite-dimensional quotient of a path algebra by monomial relations.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    rewriting: RewriteSystem,
    basis: Vec<NormalPath>,
    index: HashMap<NormalPath, usize>,
    mult: Vec<Vec<AlgebraElement>>,
}

impl PathAlgebra {
    /// Builds the quotient of the path algebra of `quiver` by `relations`.
    ///
    /// Equalities are oriented by degree-lexicographic order. No completion
    /// is attempted: a rewriting system with an unresolved critical pair is
    /// rejected, and the caller has to add the missing consequence.
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self, AlgebraError> {
        let rewriting = RewriteSystem::from_relations(&quiver, &relations)?;
        if let Some(w) = rewriting.first_nonconfluent_overlap(&quiver) {
            return Err(AlgebraError::NonConfluent(quiver.word_to_string(&w)));
        }
        let basis = enumerate_basis(&quiver, &rewriting)?;
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut alg = Self {
            quiver,
            relations,
            rewriting,
            basis,
            index,
            mult: Vec::new(),
        };
        alg.mult = (0..alg.basis.len())
            .map(|i| {
                (0..alg.basis.len())
                    .map(|j| alg.multiply_paths(&alg.basis[i], &alg.basis[j]))
                    .collect()
            })
            .collect();
        Ok(alg)
    }

    pub fn from_spec(spec: &QuiverSpec) -> Result<Self, AlgebraError> {
        Self::new(spec.quiver()?, spec.relations.clone())
    }

    pub fn to_spec(&self) -> QuiverSpec {
        QuiverSpec {
            vertices: self.quiver.vertices().collect(),
            arrows: self.quiver.arrows().to_vec(),
            relations: self.relations.clone(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn rewriting(&self) -> &RewriteSystem {
        &self.rewriting
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[NormalPath] {
        &self.basis
    }

    pub fn basis_index(&self, p: &NormalPath) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Basis indices of the paths from `source` to `target`, i.e. a basis
    /// of `e_target * A * e_source`.
    pub fn paths_between(&self, source: usize, target: usize) -> Vec<usize> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, p)| p.source == source && p.target == target)
            .map(|(i, _)| i)
            .collect()
    }

    /// Product of two basis elements (table lookup).
    pub fn mul_basis(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.mult[i][j]
    }

    pub fn product(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (p, a) in x.terms() {
            let i = self.index[p];
            for (r, b) in y.terms() {
                let j = self.index[r];
                let ab = a * b;
                for (t, c) in self.mult[i][j].terms() {
                    out.add_term(t.clone(), c * &ab);
                }
            }
        }
        out
    }

    pub fn idempotent(&self, v: usize) -> AlgebraElement {
        AlgebraElement::from_path(NormalPath::trivial(v))
    }

    pub fn one(&self) -> AlgebraElement {
        self.quiver
            .vertices()
            .fold(AlgebraElement::zero(), |acc, v| {
                acc.add(&self.idempotent(v))
            })
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::from_path(self.basis[i].clone())
    }

    /// Coordinates of `x` in the basis.
    pub fn coordinates(&self, x: &AlgebraElement) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (p, c) in x.terms() {
            v[self.index[p]] = c.clone();
        }
        v
    }

    /// Residue class of an arrow word given by indices.
    pub fn normal_form(&self, word: &[usize]) -> Result<AlgebraElement, AlgebraError> {
        let (source, target) = self.quiver.endpoints(word)?;
        Ok(self.wrap(self.rewriting.reduce(word), source, target))
    }

    /// Residue class of an arrow word given by arrow ids.
    pub fn normal_form_named(&self, ids: &[&str]) -> Result<AlgebraElement, AlgebraError> {
        let word = self.quiver.resolve(ids)?;
        self.normal_form(&word)
    }

    /// Same as [`normal_form`](Self::normal_form) but picks redexes at random.
    pub fn normal_form_random<R: Rng + ?Sized>(
        &self,
        word: &[usize],
        rng: &mut R,
    ) -> Result<AlgebraElement, AlgebraError> {
        let (source, target) = self.quiver.endpoints(word)?;
        Ok(self.wrap(self.rewriting.reduce_random(word, rng), source, target))
    }

    fn wrap(&self, reduced: Option<Vec<usize>>, source: usize, target: usize) -> AlgebraElement {
        match reduced {
            None => AlgebraElement::zero(),
            Some(arrows) => AlgebraElement::from_path(NormalPath {
                arrows,
                source,
                target,
            }),
        }
    }

    fn multiply_paths(&self, p: &NormalPath, q: &NormalPath) -> AlgebraElement {
        if p.source != q.target {
            return AlgebraElement::zero();
        }
        if p.is_trivial() {
            return AlgebraElement::from_path(q.clone());
        }
        if q.is_trivial() {
            return AlgebraElement::from_path(p.clone());
        }
        let mut w = p.arrows.clone();
        w.extend_from_slice(&q.arrows);
        self.wrap(self.rewriting.reduce(&w), q.source, p.target)
    }

    /// `dim(e_j A e_i)`: the number of basis paths from `i` to `j`.
    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.basis
            .iter()
            .filter(|p| p.source == i && p.target == j)
            .count()
    }

    /// Cartan matrix with entry `(j, i)` equal to `hom_dim(i, j)`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let k = self.vertex_count();
        IntMatrix::from_fn(k, k, |j, i| self.hom_dim(i, j) as u64)
    }

    /// Radical layers of the projective at `v`, read off the path-length
    /// grading. See [`is_path_length_graded`](Self::is_path_length_graded)
    /// for when that grading is the radical filtration.
    pub fn projective_structure(&self, v: usize) -> LoewyLayers {
        let mut layers: LoewyLayers = Vec::new();
        for p in self.basis.iter().filter(|p| p.source == v) {
            if layers.len() <= p.len() {
                layers.resize(p.len() + 1, Vec::new());
            }
            layers[p.len()].push(p.target);
        }
        for l in &mut layers {
            l.sort_unstable();
        }
        layers
    }

    /// True when every product of two positive-length basis paths is zero or
    /// a combination of paths of exactly the summed length. Then the path
    /// length grading is the radical filtration.
    pub fn is_path_length_graded(&self) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                let (a, b) = (self.basis[i].len(), self.basis[j].len());
                a == 0 || b == 0 || self.mult[i][j].terms().all(|(t, _)| t.len() == a + b)
            })
        })
    }

    /// Socle of the projective `A e_v` as a multiset of simple indices.
    pub fn socle(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for w in self.quiver.vertices() {
            let space = self.paths_between(v, w);
            if space.is_empty() {
                continue;
            }
            // x in e_w A e_v lies in the socle iff alpha * x = 0 for all
            // arrows alpha starting at w
            let mut rows: Vec<Vec<Q>> = Vec::new();
            for (ax, arrow) in self.quiver.arrows().iter().enumerate() {
                if arrow.src != w {
                    continue;
                }
                let alpha = self.wrap(Some(vec![ax]), arrow.src, arrow.tgt);
                let images: Vec<Vec<Q>> = space
                    .iter()
                    .map(|&b| self.coordinates(&self.product(&alpha, &self.basis_element(b))))
                    .collect();
                for coord in 0..self.dim() {
                    rows.push(images.iter().map(|img| img[coord].clone()).collect());
                }
            }
            let kernel = if rows.is_empty() {
                space.len()
            } else {
                QMatrix::from_rows(rows).nullspace().len()
            };
            out.extend(std::iter::repeat_n(w, kernel));
        }
        out
    }

    /// Every projective has a simple socle and `top -> socle` permutes the
    /// simples. This is the Nakayama-permutation criterion, valid for basic
    /// algebras given by admissible relations.
    pub fn is_self_injective(&self) -> bool {
        let k = self.vertex_count();
        let mut hit = vec![false; k];
        for v in self.quiver.vertices() {
            let soc = self.socle(v);
            if soc.len() != 1 || hit[soc[0]] {
                return false;
            }
            hit[soc[0]] = true;
        }
        true
    }

    pub fn path_to_string(&self, p: &NormalPath) -> String {
        if p.is_trivial() {
            format!("e{}", p.source)
        } else {
            self.quiver.word_to_string(&p.arrows)
        }
    }

    pub fn element_to_string(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms()
            .map(|(p, c)| {
                if c.is_one() {
                    self.path_to_string(p)
                } else {
                    format!("{c}*{}", self.path_to_string(p))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for PathAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.basis.iter().map(|p| self.path_to_string(p)).collect();
        write!(
            f,
            "algebra of dimension {} with basis {{{}}}",
            self.dim(),
            names.join(", ")
        )
    }
}

fn enumerate_basis(quiver: &Quiver, rw: &RewriteSystem) -> Result<Vec<NormalPath>, AlgebraError> {
    let mut basis: Vec<NormalPath> = quiver.vertices().map(NormalPath::trivial).collect();
    // irreducible words are closed under subwords, so growing irreducible
    // words one arrow at a time reaches all of them
    let mut frontier: Vec<NormalPath> = (0..quiver.arrows().len())
        .filter(|&a| rw.is_irreducible(&[a]))
        .map(|a| NormalPath {
            arrows: vec![a],
            source: quiver.arrow(a).src,
            target: quiver.arrow(a).tgt,
        })
        .collect();
    let mut length = 1;
    while !frontier.is_empty() {
        if length > MAX_PATH_LENGTH {
            return Err(AlgebraError::InfiniteDimensional(length));
        }
        frontier.sort();
        basis.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for p in &frontier {
            for (a, arrow) in quiver.arrows().iter().enumerate() {
                if arrow.src != p.target {
                    continue;
                }
                let mut w = Vec::with_capacity(p.len() + 1);
                w.push(a);
                w.extend_from_slice(&p.arrows);
                if rw.is_irreducible(&w) {
                    next.push(NormalPath {
                        arrows: w,
                        source: p.source,
                        target: arrow.tgt,
                    });
                }
            }
        }
        frontier = next;
        length += 1;
    }
    Ok(basis)
}

fn star_arrow_names(i: usize) -> (String, String) {
    (format!("a{i}"), format!("b{i}"))
}

/// The star algebra on `n + 1` vertices: the doubled star quiver with
/// `a_i: 0 -> i`, `b_i: i -> 0` modulo
///
/// * `n = 1`: `b1*a1*b1 = a1*b1*a1 = 0`;
/// * `n > 1`: `b_i*a_i = b_1*a_1` and `a_j*b_i = 0` for `i != j`.
///
/// For `n > 1` the zero relations `a_i*b1*a1 = 0` and `b1*a1*b_i = 0`, which
/// follow from the others, are listed too so that the monomial rewriting
/// system is confluent without completion.
pub fn build_star_algebra(n: i64) -> Result<PathAlgebra, AlgebraError> {
    if n < 1 {
        return Err(AlgebraError::InvalidStarSize(n));
    }
    let n = n as usize;
    let mut arrows = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let (a, b) = star_arrow_names(i);
        arrows.push(Arrow {
            id: a,
            src: 0,
            tgt: i,
        });
        arrows.push(Arrow {
            id: b,
            src: i,
            tgt: 0,
        });
    }
    let quiver = Quiver::new(n + 1, arrows)?;
    let mut relations = Vec::new();
    if n == 1 {
        relations.push(Relation::zero(&["b1", "a1", "b1"]));
        relations.push(Relation::zero(&["a1", "b1", "a1"]));
    } else {
        for i in 2..=n {
            let (a, b) = star_arrow_names(i);
            relations.push(Relation::equal(&[&b, &a], &["b1", "a1"]));
        }
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    let (_, bi) = star_arrow_names(i);
                    let (aj, _) = star_arrow_names(j);
                    relations.push(Relation::zero(&[&aj, &bi]));
                }
            }
        }
        for i in 1..=n {
            let (a, b) = star_arrow_names(i);
            relations.push(Relation::zero(&[&a, "b1", "a1"]));
            relations.push(Relation::zero(&["b1", "a1", &b]));
        }
    }
    PathAlgebra::new(quiver, relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn names(a: &PathAlgebra) -> Vec<String> {
        a.basis().iter().map(|p| a.path_to_string(p)).collect()
    }

    #[test]
    fn lambda_one_basis() {
        let a = build_star_algebra(1).unwrap();
        assert_eq!(names(&a), ["e0", "e1", "a1", "b1", "a1*b1", "b1*a1"]);
    }

    #[test]
    fn lambda_two_basis_has_single_cycle_at_centre() {
        let a = build_star_algebra(2).unwrap();
        assert_eq!(a.dim(), 10);
        assert_eq!(a.hom_dim(0, 0), 2);
        assert_eq!(a.hom_dim(1, 2), 0);
    }

    #[test]
    fn rejects_nonpositive_n() {
        assert_eq!(
            build_star_algebra(0).unwrap_err(),
            AlgebraError::InvalidStarSize(0)
        );
        assert!(build_star_algebra(-3).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let a1 = build_star_algebra(1).unwrap();
        assert!(a1.normal_form_named(&["a1", "b1", "a1"]).unwrap().is_zero());
        let a2 = build_star_algebra(2).unwrap();
        assert!(a2.normal_form_named(&["a2", "b1"]).unwrap().is_zero());
        let a3 = build_star_algebra(3).unwrap();
        let x = a3.normal_form_named(&["b3", "a3"]).unwrap();
        assert_eq!(x, a3.normal_form_named(&["b1", "a1"]).unwrap());
        assert_eq!(a3.element_to_string(&x), "b1*a1");
        let e0 = a3.idempotent(0);
        assert_eq!(a3.product(&e0, &e0), e0);
    }

    #[test]
    fn rejects_non_composable_words() {
        let a = build_star_algebra(2).unwrap();
        assert!(matches!(
            a.normal_form_named(&["a1", "a2"]),
            Err(AlgebraError::NotComposable(_))
        ));
        assert_eq!(a.normal_form(&[]).unwrap_err(), AlgebraError::EmptyPath);
        assert!(matches!(
            a.normal_form_named(&["c7"]),
            Err(AlgebraError::UnknownArrow(_))
        ));
    }

    #[test]
    fn hom_dims_of_lambda_one() {
        let a = build_star_algebra(1).unwrap();
        assert_eq!(a.hom_dim(0, 0), 2);
        assert_eq!(a.hom_dim(0, 1), 1);
        assert_eq!(
            a.cartan_matrix(),
            IntMatrix::from_rows(vec![vec![2, 1], vec![1, 2]]).unwrap()
        );
    }

    #[test]
    fn cartan_of_lambda_two() {
        let a = build_star_algebra(2).unwrap();
        assert_eq!(
            a.cartan_matrix(),
            IntMatrix::from_rows(vec![vec![2, 1, 1], vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
        );
    }

    #[test]
    fn loewy_layers() {
        for n in 1..=4 {
            let a = build_star_algebra(n).unwrap();
            let leaves: Vec<usize> = (1..=n as usize).collect();
            assert_eq!(a.projective_structure(0), vec![vec![0], leaves, vec![0]]);
            for i in 1..=n as usize {
                assert_eq!(a.projective_structure(i), vec![vec![i], vec![0], vec![i]]);
            }
            assert!(a.is_path_length_graded());
        }
    }

    fn a2_quiver() -> PathAlgebra {
        let q = Quiver::new(
            2,
            vec![Arrow {
                id: "x".into(),
                src: 0,
                tgt: 1,
            }],
        )
        .unwrap();
        PathAlgebra::new(q, vec![]).unwrap()
    }

    #[test]
    fn self_injectivity() {
        for n in 1..=5 {
            assert!(build_star_algebra(n).unwrap().is_self_injective());
        }
        let a2 = a2_quiver();
        assert_eq!(a2.dim(), 3);
        assert_eq!(a2.socle(0), vec![1]);
        assert_eq!(a2.socle(1), vec![1]);
        assert!(!a2.is_self_injective());
        let k = PathAlgebra::new(Quiver::new(1, vec![]).unwrap(), vec![]).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.is_self_injective());
    }

    #[test]
    fn infinite_quotient_is_rejected() {
        let q = Quiver::new(
            1,
            vec![Arrow {
                id: "x".into(),
                src: 0,
                tgt: 0,
            }],
        )
        .unwrap();
        assert!(matches!(
            PathAlgebra::new(q, vec![]),
            Err(AlgebraError::InfiniteDimensional(_))
        ));
    }

    #[test]
    fn missing_consequence_is_reported() {
        // without the listed consequences a1*b1*a1 has two normal forms
        let a = build_star_algebra(2).unwrap();
        let spec = a.to_spec();
        let trimmed: Vec<Relation> = spec
            .relations
            .iter()
            .filter(|r| r.lhs.len() == 2)
            .cloned()
            .collect();
        let err = PathAlgebra::new(spec.quiver().unwrap(), trimmed).unwrap_err();
        assert!(matches!(err, AlgebraError::NonConfluent(_)));
    }

    #[test]
    fn json_spec_round_trip() {
        let a = build_star_algebra(3).unwrap();
        let text = serde_json::to_string(&a.to_spec()).unwrap();
        let spec: QuiverSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(spec, a.to_spec());
        let b = PathAlgebra::from_spec(&spec).unwrap();
        assert_eq!(b.basis(), a.basis());
    }

    #[test]
    fn dot_lists_every_arrow() {
        let a = build_star_algebra(2).unwrap();
        let dot = a.quiver().to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("0 -> 2 [label=\"a2\"]"));
        assert!(dot.contains("1 -> 0 [label=\"b1\"]"));
    }

    #[test]
    fn random_order_matches_default_order() {
        let a = build_star_algebra(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let word = a.quiver().resolve(&["b2", "a2", "b1", "a1"]).unwrap();
        for _ in 0..20 {
            assert_eq!(
                a.normal_form_random(&word, &mut rng).unwrap(),
                a.normal_form(&word).unwrap()
            );
        }
    }

    #[test]
    fn element_arithmetic() {
        let a = build_star_algebra(1).unwrap();
        let one = a.one();
        let x = a.normal_form_named(&["b1", "a1"]).unwrap().scale(&q(3));
        assert_eq!(a.product(&one, &x), x);
        assert_eq!(a.product(&x, &one), x);
        assert!(x.add(&x.scale(&q(-1))).is_zero());
    }
}
