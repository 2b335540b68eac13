use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// An arrow `src -> tgt` with a user-facing name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite quiver with vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    by_name: HashMap<String, usize>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        let mut by_name = HashMap::new();
        for (ix, a) in arrows.iter().enumerate() {
            for v in [a.src, a.tgt] {
                if v >= vertex_count {
                    return Err(AlgebraError::UnknownVertex(v));
                }
            }
            if by_name.insert(a.id.clone(), ix).is_some() {
                return Err(AlgebraError::DuplicateArrow(a.id.clone()));
            }
        }
        Ok(Self {
            vertex_count,
            arrows,
            by_name,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, ix: usize) -> &Arrow {
        &self.arrows[ix]
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.by_name.get(id).copied()
    }

    pub fn resolve(&self, ids: &[impl AsRef<str>]) -> Result<Vec<usize>, AlgebraError> {
        ids.iter()
            .map(|s| {
                self.arrow_index(s.as_ref())
                    .ok_or_else(|| AlgebraError::UnknownArrow(s.as_ref().to_string()))
            })
            .collect()
    }

    /// Checks that a word (written left to right, applied right to left) is
    /// a path and returns `(source, target)`.
    pub fn endpoints(&self, word: &[usize]) -> Result<(usize, usize), AlgebraError> {
        let (Some(&first), Some(&last)) = (word.first(), word.last()) else {
            return Err(AlgebraError::EmptyPath);
        };
        for w in word.windows(2) {
            if self.arrows[w[0]].src != self.arrows[w[1]].tgt {
                return Err(AlgebraError::NotComposable(self.word_to_string(word)));
            }
        }
        Ok((self.arrows[last].src, self.arrows[first].tgt))
    }

    pub fn word_to_string(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&a| self.arrows[a].id.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Graphviz rendering of the quiver.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n");
        for v in self.vertices() {
            let _ = writeln!(s, "  {v};");
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  {} -> {} [label=\"{}\"];", a.src, a.tgt, a.id);
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationKind {
    #[serde(rename = "zero-path")]
    ZeroPath,
    #[serde(rename = "path-equality")]
    PathEquality,
}

/// A monomial relation `lhs = 0` or `lhs = rhs`, paths given by arrow ids in
/// written order (`["b1", "a1"]` is `b1*a1`: first `a1`, then `b1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: Vec<String>,
    #[serde(default)]
    pub rhs: Option<Vec<String>>,
}

impl Relation {
    pub fn zero(lhs: &[&str]) -> Self {
        Self {
            kind: RelationKind::ZeroPath,
            lhs: lhs.iter().map(|s| s.to_string()).collect(),
            rhs: None,
        }
    }

    pub fn equal(lhs: &[&str], rhs: &[&str]) -> Self {
        Self {
            kind: RelationKind::PathEquality,
            lhs: lhs.iter().map(|s| s.to_string()).collect(),
            rhs: Some(rhs.iter().map(|s| s.to_string()).collect()),
        }
    }
}

/// JSON document describing a quiver with relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<usize>,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub relations: Vec<Relation>,
}

impl QuiverSpec {
    pub fn quiver(&self) -> Result<Quiver, AlgebraError> {
        if self.vertices.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(AlgebraError::VertexIds);
        }
        Quiver::new(self.vertices.len(), self.arrows.clone())
    }
}
