//! Monomial rewriting on arrow words.
//!
//! Rules have the form `lhs -> 0` or `lhs -> rhs` with `rhs` strictly smaller
//! than `lhs` in degree-lexicographic order, which makes every reduction
//! sequence terminate.

use std::cmp::Ordering;

use rand::Rng;

use super::quiver::{Quiver, Relation, RelationKind};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Vec<usize>,
    pub rhs: Option<Vec<usize>>,
}

/// Degree-lexicographic order on words of arrow indices.
pub fn deglex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, Default)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
}

impl RewriteSystem {
    /// Orients relations into rules. Relations must be admissible: every
    /// side has length at least two.
    pub fn from_relations(quiver: &Quiver, relations: &[Relation]) -> Result<Self, AlgebraError> {
        let mut rules = Vec::new();
        for rel in relations {
            let lhs = quiver.resolve(&rel.lhs)?;
            let lhs_ends = quiver.endpoints(&lhs)?;
            if lhs.len() < 2 {
                return Err(AlgebraError::NonAdmissible(quiver.word_to_string(&lhs)));
            }
            match (rel.kind, &rel.rhs) {
                (RelationKind::ZeroPath, _) => rules.push(Rule { lhs, rhs: None }),
                (RelationKind::PathEquality, None) => {
                    return Err(AlgebraError::MissingRhs(quiver.word_to_string(&lhs)))
                }
                (RelationKind::PathEquality, Some(rhs)) => {
                    let rhs = quiver.resolve(rhs)?;
                    if rhs.len() < 2 {
                        return Err(AlgebraError::NonAdmissible(quiver.word_to_string(&rhs)));
                    }
                    if quiver.endpoints(&rhs)? != lhs_ends {
                        return Err(AlgebraError::MismatchedEndpoints(
                            quiver.word_to_string(&lhs),
                            quiver.word_to_string(&rhs),
                        ));
                    }
                    match deglex(&lhs, &rhs) {
                        Ordering::Greater => rules.push(Rule {
                            lhs,
                            rhs: Some(rhs),
                        }),
                        Ordering::Less => rules.push(Rule {
                            lhs: rhs,
                            rhs: Some(lhs),
                        }),
                        Ordering::Equal => {}
                    }
                }
            }
        }
        Ok(Self { rules })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    fn matches(&self, word: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, rule) in self.rules.iter().enumerate() {
            let k = rule.lhs.len();
            if k > word.len() {
                continue;
            }
            for pos in 0..=word.len() - k {
                if word[pos..pos + k] == rule.lhs[..] {
                    out.push((r, pos));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, word: &[usize]) -> bool {
        self.rules.iter().all(|rule| {
            rule.lhs.len() > word.len() || !word.windows(rule.lhs.len()).any(|w| w == rule.lhs)
        })
    }

    fn apply(&self, word: &[usize], rule: usize, pos: usize) -> Option<Vec<usize>> {
        let rule = &self.rules[rule];
        let rhs = rule.rhs.as_ref()?;
        let mut out = Vec::with_capacity(word.len() - rule.lhs.len() + rhs.len());
        out.extend_from_slice(&word[..pos]);
        out.extend_from_slice(rhs);
        out.extend_from_slice(&word[pos + rule.lhs.len()..]);
        Some(out)
    }

    /// Reduces with the leftmost match of the first applicable rule.
    /// `None` means the word is zero in the quotient.
    pub fn reduce(&self, word: &[usize]) -> Option<Vec<usize>> {
        let mut w = word.to_vec();
        loop {
            let Some(&(r, p)) = self.matches(&w).first() else {
                return Some(w);
            };
            w = self.apply(&w, r, p)?;
        }
    }

    /// Reduces choosing a uniformly random redex at every step.
    pub fn reduce_random<R: Rng + ?Sized>(
        &self,
        word: &[usize],
        rng: &mut R,
    ) -> Option<Vec<usize>> {
        let mut w = word.to_vec();
        loop {
            let m = self.matches(&w);
            if m.is_empty() {
                return Some(w);
            }
            let (r, p) = m[rng.gen_range(0..m.len())];
            w = self.apply(&w, r, p)?;
        }
    }

    /// Resolves every critical pair (overlaps and inclusions of left-hand
    /// sides) and returns the first word whose two reductions disagree.
    pub fn first_nonconfluent_overlap(&self, quiver: &Quiver) -> Option<Vec<usize>> {
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                let mut candidates: Vec<(Vec<usize>, usize)> = Vec::new();
                // l2 strictly inside l1
                if i != j && l2.len() <= l1.len() {
                    for pos in 0..=l1.len() - l2.len() {
                        if l1[pos..pos + l2.len()] == l2[..] {
                            candidates.push((l1.clone(), pos));
                        }
                    }
                }
                // proper suffix of l1 equals proper prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut w = l1.clone();
                        w.extend_from_slice(&l2[k..]);
                        candidates.push((w, l1.len() - k));
                    }
                }
                for (w, pos2) in candidates {
                    if quiver.endpoints(&w).is_err() {
                        continue;
                    }
                    let via1 = self.apply(&w, i, 0).and_then(|x| self.reduce(&x));
                    let via2 = self.apply(&w, j, pos2).and_then(|x| self.reduce(&x));
                    if via1 != via2 {
                        return Some(w);
                    }
                }
            }
        }
        None
    }
}
