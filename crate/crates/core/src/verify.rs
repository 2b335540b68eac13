//! Reproduction suite: golden values and seeded property checks.
//!
//! Each check computes an actual value and compares it with an expected
//! value, both as JSON. A mutation replaces one expected value by a
//! perturbed copy, which must make the suite fail.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bimodule_2cat::{
    cell_structure, composition_table, full_subcategory, left_cell_subcategory,
    right_cell_subcategory, Label, OneMorphism,
};
use crate::cell_rep::{
    left_cell_rep, principal_cell_subrep, right_cell_rep, simples_action_matrix, CellRepresentation,
};
use crate::int_matrix::IntMatrix;
use crate::matrix_solver::{
    canonical_form, classify, count_set_partitions, decompose, enumerate_total_matrices,
    flor_normal_form, is_positive_rank_one_idempotent, random_nonnegative_idempotent,
    ConstraintTier, Side,
};
use crate::quiver_algebra::build_star_algebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: String,
    pub criterion: u8,
    pub anchor: String,
    pub expected: Value,
    pub actual: Value,
    pub passed: bool,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub mutation: Option<usize>,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn criterion_passed(&self, criterion: u8) -> bool {
        self.checks
            .iter()
            .filter(|c| c.criterion == criterion)
            .all(|c| c.passed)
    }

    /// Table with one line per check.
    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} [{}] {:<width$}  {}  ({} ms)\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.criterion,
                c.id,
                c.anchor,
                c.millis
            ));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{} checks, {} failed{}\n",
            self.checks.len(),
            failed,
            self.mutation
                .map(|k| format!(", mutation {k} applied"))
                .unwrap_or_default()
        ));
        out
    }
}

struct Check {
    id: &'static str,
    criterion: u8,
    anchor: &'static str,
    run: fn(u64) -> (Value, Value),
}

fn int(m: &IntMatrix) -> Value {
    json!(m.to_rows())
}

fn algebra_dimensions(_: u64) -> (Value, Value) {
    let expected: Vec<usize> = (1..=8).map(|n| 4 * n + 2).collect();
    let actual: Vec<usize> = (1..=8)
        .map(|n| build_star_algebra(n as i64).unwrap().dim())
        .collect();
    (json!(expected), json!(actual))
}

fn algebra_cartan(_: u64) -> (Value, Value) {
    let a1 = build_star_algebra(1).unwrap().cartan_matrix();
    let a2 = build_star_algebra(2).unwrap().cartan_matrix();
    (
        json!([[[2, 1], [1, 2]], [[2, 1, 1], [1, 2, 0], [1, 0, 2]]]),
        json!([int(&a1), int(&a2)]),
    )
}

fn algebra_loewy(_: u64) -> (Value, Value) {
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for n in 1..=8usize {
        let a = build_star_algebra(n as i64).unwrap();
        let mut exp = vec![json!([[0], (1..=n).collect::<Vec<_>>(), [0]])];
        exp.extend((1..=n).map(|i| json!([[i], [0], [i]])));
        expected.push(json!({"graded": true, "layers": exp}));
        let act: Vec<Value> = (0..=n).map(|v| json!(a.projective_structure(v))).collect();
        actual.push(json!({"graded": a.is_path_length_graded(), "layers": act}));
    }
    (json!(expected), json!(actual))
}

fn algebra_self_injective(_: u64) -> (Value, Value) {
    let actual: Vec<bool> = (1..=8)
        .map(|n| build_star_algebra(n).unwrap().is_self_injective())
        .collect();
    (json!(vec![true; 8]), json!(actual))
}

fn composition_n1(_: u64) -> (Value, Value) {
    let c = left_cell_subcategory(1).unwrap();
    let t = composition_table(&c, false);
    (
        json!([[[2, 0], [1, 0]], [[0, 2], [0, 1]]]),
        json!(t.tensor()),
    )
}

fn composition_square(_: u64) -> (Value, Value) {
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for n in 1..=6usize {
        let c = left_cell_subcategory(n as i64).unwrap();
        let sum = OneMorphism::from_pairs((0..=n).map(|i| (Label::F(i, 0), 1)));
        let sq = c.compose(&sum, &sum).unwrap();
        expected.push(vec![n as u64 + 2; n + 1]);
        actual.push(
            (0..=n)
                .map(|i| sq.multiplicity(Label::F(i, 0)))
                .collect::<Vec<_>>(),
        );
    }
    (json!(expected), json!(actual))
}

fn composition_right(_: u64) -> (Value, Value) {
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for n in 1..=6usize {
        let c = right_cell_subcategory(n as i64).unwrap();
        let mut b = vec![1u64; n + 1];
        b[0] = 2;
        expected.push(b);
        // coefficient b_i with F(0,i) o F(0,j) = b_i F(0,j), or 0 if the
        // product has another shape
        let coeffs: Vec<u64> = (0..=n)
            .map(|i| {
                let per_j: BTreeSet<u64> = (0..=n)
                    .map(|j| {
                        let p = c
                            .compose(
                                &OneMorphism::indecomposable(Label::F(0, i)),
                                &OneMorphism::indecomposable(Label::F(0, j)),
                            )
                            .unwrap();
                        if p.support().count() == 1 {
                            p.multiplicity(Label::F(0, j))
                        } else {
                            0
                        }
                    })
                    .collect();
                if per_j.len() == 1 {
                    *per_j.iter().next().unwrap()
                } else {
                    0
                }
            })
            .collect();
        actual.push(coeffs);
    }
    (json!(expected), json!(actual))
}

fn cell_sizes(cells: &[Vec<Label>]) -> Vec<usize> {
    cells
        .iter()
        .filter(|c| !c.contains(&Label::Id))
        .map(Vec::len)
        .collect()
}

fn cells_left(_: u64) -> (Value, Value) {
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for n in 1..=6usize {
        let cs = cell_structure(&left_cell_subcategory(n as i64).unwrap());
        expected.push(json!({"left": [n + 1], "right": vec![1; n + 1]}));
        actual.push(
            json!({"left": cell_sizes(&cs.left_cells), "right": cell_sizes(&cs.right_cells)}),
        );
    }
    (json!(expected), json!(actual))
}

fn cells_right(_: u64) -> (Value, Value) {
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for n in 1..=6usize {
        let cs = cell_structure(&right_cell_subcategory(n as i64).unwrap());
        expected.push(json!({"left": vec![1; n + 1], "right": [n + 1], "twosided": [n + 1]}));
        actual.push(json!({
            "left": cell_sizes(&cs.left_cells),
            "right": cell_sizes(&cs.right_cells),
            "twosided": cell_sizes(&cs.twosided_cells),
        }));
    }
    (json!(expected), json!(actual))
}

fn cells_full(_: u64) -> (Value, Value) {
    let a = std::sync::Arc::new(build_star_algebra(1).unwrap());
    let cs = cell_structure(&full_subcategory(a).unwrap());
    (
        json!([["Id"], ["F(0,0)", "F(1,0)"], ["F(0,1)", "F(1,1)"]]),
        json!(cs.left_cells),
    )
}

fn n1_totals(_: u64) -> (Value, Value) {
    let got: Vec<Value> = enumerate_total_matrices(1, None).iter().map(int).collect();
    (
        json!([
            [[3]],
            [[2, 1], [2, 1]],
            [[2, 2], [1, 1]],
            [[1, 1, 1], [1, 1, 1], [1, 1, 1]]
        ]),
        json!(got),
    )
}

fn n1_family(_: u64) -> (Value, Value) {
    let rep = classify(1, Side::Left, ConstraintTier::ProjectiveFunctor).unwrap();
    let fams: Vec<Vec<Value>> = rep
        .families
        .iter()
        .map(|f| f.summands.iter().map(int).collect())
        .collect();
    (json!([[[[2, 1], [0, 0]], [[0, 0], [2, 1]]]]), json!(fams))
}

fn n1_excluded(_: u64) -> (Value, Value) {
    let pf = ConstraintTier::ProjectiveFunctor;
    let three = IntMatrix::from_rows(vec![vec![3]]).unwrap();
    let second = IntMatrix::from_rows(vec![vec![2, 2], vec![1, 1]]).unwrap();
    (
        json!({"(3)": 0, "[[2,2],[1,1]]": 0}),
        json!({
            "(3)": decompose(&three, 1, pf).len(),
            "[[2,2],[1,1]]": decompose(&second, 1, pf).len(),
        }),
    )
}

fn general_counts(_: u64) -> (Value, Value) {
    let counts: Vec<usize> = (2..=5)
        .map(|n| {
            classify(n, Side::Left, ConstraintTier::ProjectiveFunctor)
                .unwrap()
                .count
        })
        .collect();
    (json!([2, 5, 15, 52]), json!(counts))
}

fn partition_oracle(_: u64) -> (Value, Value) {
    let oracle: Vec<u64> = (2..=5).map(count_set_partitions).collect();
    (json!([2, 5, 15, 52]), json!(oracle))
}

/// Row of `M_0` in the first and the projective-functor shape `(2,1,...,1)`
/// in every nonzero row, `phi` onto `{2..r}`.
fn has_first_case_shape(f: &crate::matrix_solver::SolutionFamily) -> bool {
    let mut shape = vec![1u64; f.r];
    shape[0] = 2;
    let rows_ok = f.summands.iter().all(|s| {
        let rows = s.nonzero_rows();
        rows.len() == 1 && s.row(rows[0]) == shape.as_slice()
    });
    let image: BTreeSet<usize> = f.phi.values().copied().collect();
    rows_ok && f.summands[0].nonzero_rows() == vec![0] && image == (2..=f.r).collect()
}

/// `M_0` row `(2,...,2)` and every other nonzero row `(1,...,1)`.
fn has_second_case_shape(f: &crate::matrix_solver::SolutionFamily) -> bool {
    f.summands.iter().enumerate().all(|(i, s)| {
        let want = if i == 0 { 2 } else { 1 };
        s.nonzero_rows()
            .iter()
            .all(|&k| s.row(k).iter().all(|&x| x == want))
    })
}

fn general_shapes(_: u64) -> (Value, Value) {
    let mut actual = Vec::new();
    let mut expected = Vec::new();
    for n in 2..=5 {
        let rep = classify(n, Side::Left, ConstraintTier::ProjectiveFunctor).unwrap();
        let first = rep.families.iter().all(has_first_case_shape);
        let second = rep
            .families
            .iter()
            .filter(|f| has_second_case_shape(f))
            .count();
        let checks = rep.families.iter().all(|f| f.check(Side::Left).is_ok());
        expected.push(json!({"first_shape": true, "second_shape": 0, "invariants": true}));
        actual.push(json!({"first_shape": first, "second_shape": second, "invariants": checks}));
    }
    (json!(expected), json!(actual))
}

fn right_classification(_: u64) -> (Value, Value) {
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for n in 1..=6usize {
        let mut want = vec![json!([[2]])];
        want.extend(std::iter::repeat_n(json!([[1]]), n));
        expected.push(json!({"count": 1, "r": [1], "M_i": [want]}));
        let rep = classify(n, Side::Right, ConstraintTier::ProjectiveFunctor).unwrap();
        actual.push(json!({
            "count": rep.count,
            "r": rep.families.iter().map(|f| f.r).collect::<Vec<_>>(),
            "M_i": rep.families.iter().map(|f| f.summands.iter().map(int).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }));
    }
    (json!(expected), json!(actual))
}

fn cellrep_n1(_: u64) -> (Value, Value) {
    let rep = left_cell_rep(1).unwrap();
    let s00 = simples_action_matrix(&rep, Label::F(0, 0)).unwrap();
    let s00: Vec<Vec<String>> = s00
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    (
        json!({
            "cartan": [[2, 1], [1, 1]],
            "F(0,0)": [[2, 1], [0, 0]],
            "F(1,0)": [[0, 0], [2, 1]],
            "simples F(0,0)": [["2", "0"], ["1", "0"]],
        }),
        json!({
            "cartan": int(&rep.cartan),
            "F(0,0)": int(&rep.action[&Label::F(0, 0)]),
            "F(1,0)": int(&rep.action[&Label::F(1, 0)]),
            "simples F(0,0)": s00,
        }),
    )
}

fn cellrep_right(_: u64) -> (Value, Value) {
    let cartans: Vec<Value> = (1..=4)
        .map(|n| int(&right_cell_rep(n).unwrap().cartan))
        .collect();
    (json!([[[2]], [[2]], [[2]], [[2]]]), json!(cartans))
}

fn cellrep_matches_classification(_: u64) -> (Value, Value) {
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for n in 1..=4usize {
        let rep = left_cell_rep(n as i64).unwrap();
        let tuple: Vec<IntMatrix> = (0..=n)
            .map(|i| rep.action[&Label::F(i, 0)].clone())
            .collect();
        let canon = canonical_form(&tuple);
        let report = classify(n, Side::Left, ConstraintTier::ProjectiveFunctor).unwrap();
        let matches: Vec<_> = report
            .families
            .iter()
            .filter(|f| f.summands == canon)
            .collect();
        // Cartan: 2 at the corner, 1 along the first row and column, identity elsewhere
        let cartan = IntMatrix::from_fn(n + 1, n + 1, |x, y| match (x, y) {
            (0, 0) => 2,
            (0, _) | (_, 0) => 1,
            _ => u64::from(x == y),
        });
        expected.push(json!({
            "families": 1,
            "phi": (1..=n).map(|i| (i, i + 1)).collect::<std::collections::BTreeMap<_, _>>(),
            "cartan": int(&cartan),
        }));
        actual.push(json!({
            "families": matches.len(),
            "phi": matches.first().map(|f| json!(f.phi)),
            "cartan": int(&rep.cartan),
        }));
    }
    (json!(expected), json!(actual))
}

fn flor_property(seed: u64) -> (Value, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    for _ in 0..1000 {
        let m = random_nonnegative_idempotent(&mut rng);
        let ok = flor_normal_form(&m).is_ok_and(|f| {
            f.reassemble() == m && f.j_blocks.iter().all(is_positive_rank_one_idempotent)
        });
        failures += usize::from(!ok);
    }
    (
        json!({"cases": 1000, "failures": 0}),
        json!({"cases": 1000, "failures": failures}),
    )
}

fn associativity_property(_: u64) -> (Value, Value) {
    let mut failures = 0usize;
    for n in 1..=4 {
        let a = build_star_algebra(n).unwrap();
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = a.mul_basis(i, j);
                for k in 0..d {
                    let left = a.product(ij, &a.basis_element(k));
                    let right = a.product(&a.basis_element(i), a.mul_basis(j, k));
                    failures += usize::from(left != right);
                }
            }
        }
    }
    (json!(0), json!(failures))
}

fn confluence_property(seed: u64) -> (Value, Value) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut failures = 0usize;
    for case in 0..1000 {
        let n = 1 + case % 4;
        let a = build_star_algebra(n as i64).unwrap();
        let quiver = a.quiver();
        // random walk: each next arrow starts where the previous one ended
        let len = rng.gen_range(1..=9);
        let mut word: Vec<usize> = Vec::new();
        let mut at = rng.gen_range(0..quiver.vertex_count());
        for _ in 0..len {
            let out: Vec<usize> = (0..quiver.arrows().len())
                .filter(|&x| quiver.arrow(x).src == at)
                .collect();
            let x = out[rng.gen_range(0..out.len())];
            at = quiver.arrow(x).tgt;
            word.insert(0, x);
        }
        let fixed = a.normal_form(&word).unwrap();
        let random = a.normal_form_random(&word, &mut rng).unwrap();
        failures += usize::from(fixed != random);
    }
    (json!(0), json!(failures))
}

fn computed_reps() -> Vec<(String, CellRepresentation)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("left n={n}"), left_cell_rep(n).unwrap()));
        out.push((format!("right n={n}"), right_cell_rep(n).unwrap()));
    }
    out
}

fn symmetry_property(_: u64) -> (Value, Value) {
    let asym: Vec<String> = computed_reps()
        .into_iter()
        .filter(|(_, r)| {
            let cm = r.cartan.mul(&r.action[&Label::F(0, 0)]);
            cm != cm.transpose()
        })
        .map(|(name, _)| name)
        .collect();
    (json!([]), json!(asym))
}

fn functoriality_property(_: u64) -> (Value, Value) {
    let mut bad = Vec::new();
    for n in 1..=4 {
        for (c, cell) in [
            (left_cell_subcategory(n).unwrap(), None),
            (
                right_cell_subcategory(n).unwrap(),
                Some(vec![Label::F(0, 0)]),
            ),
        ] {
            let cell = cell.unwrap_or_else(|| c.non_identity());
            let rep = principal_cell_subrep(&c, &cell).unwrap();
            for g in c.labels() {
                for h in c.labels() {
                    let k = rep.objects().len();
                    let mut want = IntMatrix::zeros(k, k);
                    for (l, mult) in crate::bimodule_2cat::compose_labels(c.algebra(), g, h).terms()
                    {
                        want = want.add(&rep.action_matrix(l).scale(mult));
                    }
                    if rep.action_matrix(g).mul(&rep.action_matrix(h)) != want {
                        bad.push(format!("{} {g} o {h}", c.name()));
                    }
                }
            }
        }
    }
    (json!([]), json!(bad))
}

const CHECKS: &[Check] = &[
    Check {
        id: "algebra.dimension",
        criterion: 1,
        anchor: "star algebra dimension 4n+2, n = 1..8",
        run: algebra_dimensions,
    },
    Check {
        id: "algebra.cartan",
        criterion: 1,
        anchor: "Cartan matrices of the star algebras, n = 1, 2",
        run: algebra_cartan,
    },
    Check {
        id: "algebra.loewy",
        criterion: 1,
        anchor: "projectives have Loewy length three, middle layer multiplicity free",
        run: algebra_loewy,
    },
    Check {
        id: "algebra.self_injective",
        criterion: 1,
        anchor: "star algebras are self-injective",
        run: algebra_self_injective,
    },
    Check {
        id: "composition.n1_table",
        criterion: 2,
        anchor: "composition table of F(0,0), F(1,0) for n = 1",
        run: composition_n1,
    },
    Check {
        id: "composition.square",
        criterion: 2,
        anchor: "sum of the F(i,0) squares to n+2 copies of itself",
        run: composition_square,
    },
    Check {
        id: "composition.right",
        criterion: 2,
        anchor: "F(0,i) o F(0,j) = b_i F(0,j) with b_0 = 2, b_i = 1",
        run: composition_right,
    },
    Check {
        id: "cells.left_subcategory",
        criterion: 3,
        anchor: "one left cell of size n+1 split into n+1 right cells",
        run: cells_left,
    },
    Check {
        id: "cells.right_subcategory",
        criterion: 3,
        anchor: "right cell subcategory: singleton left cells",
        run: cells_right,
    },
    Check {
        id: "cells.full_n1",
        criterion: 3,
        anchor: "left cells of all projective bimodule functors, n = 1",
        run: cells_full,
    },
    Check {
        id: "classify.n1_candidates",
        criterion: 4,
        anchor: "four candidate total matrices for n = 1",
        run: n1_totals,
    },
    Check {
        id: "classify.n1_family",
        criterion: 4,
        anchor: "unique action matrices for n = 1",
        run: n1_family,
    },
    Check {
        id: "classify.n1_excluded",
        criterion: 4,
        anchor: "(3) and [[2,2],[1,1]] admit no projective-functor split",
        run: n1_excluded,
    },
    Check {
        id: "classify.counts",
        criterion: 5,
        anchor: "family counts 2, 5, 15, 52 for n = 2..5",
        run: general_counts,
    },
    Check {
        id: "classify.partition_oracle",
        criterion: 5,
        anchor: "set partition enumeration gives the Bell numbers",
        run: partition_oracle,
    },
    Check {
        id: "classify.shapes",
        criterion: 5,
        anchor: "families have the (2,1,...,1) row shape with phi onto {2..r}",
        run: general_shapes,
    },
    Check {
        id: "classify.right",
        criterion: 6,
        anchor: "right cell actions have rank one, M_0 = (2), M_i = (1)",
        run: right_classification,
    },
    Check {
        id: "cellrep.n1",
        criterion: 7,
        anchor: "cell 2-representation for n = 1: Cartan, actions, simples",
        run: cellrep_n1,
    },
    Check {
        id: "cellrep.right",
        criterion: 7,
        anchor: "right cell 2-representation has Cartan matrix (2)",
        run: cellrep_right,
    },
    Check {
        id: "cellrep.matches_family",
        criterion: 7,
        anchor: "cell 2-representation realizes exactly one family, phi(i) = i+1",
        run: cellrep_matches_classification,
    },
    Check {
        id: "property.flor",
        criterion: 8,
        anchor: "normal form reassembles 1000 random idempotents",
        run: flor_property,
    },
    Check {
        id: "property.associativity",
        criterion: 8,
        anchor: "associativity on all basis triples, n <= 4",
        run: associativity_property,
    },
    Check {
        id: "property.confluence",
        criterion: 8,
        anchor: "random redex order gives the same normal form, 1000 paths",
        run: confluence_property,
    },
    Check {
        id: "property.symmetry",
        criterion: 8,
        anchor: "C [F(0,0)] is symmetric in every computed cell 2-representation",
        run: symmetry_property,
    },
    Check {
        id: "property.functoriality",
        criterion: 8,
        anchor: "[F o G] = [F][G] in every computed representation",
        run: functoriality_property,
    },
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

pub fn mutation_count() -> usize {
    CHECKS.len()
}

/// Perturbs the first number or boolean found in `v`, depth first. Strings
/// and empty containers get a marker appended.
pub fn mutate_value(v: &mut Value) {
    fn go(v: &mut Value) -> bool {
        match v {
            Value::Number(n) => {
                *v = match n.as_u64() {
                    Some(x) => json!(x + 1),
                    None => json!(n.as_f64().unwrap_or(0.0) + 1.0),
                };
                true
            }
            Value::Bool(b) => {
                *b = !*b;
                true
            }
            Value::Array(xs) => xs.iter_mut().any(go),
            Value::Object(m) => m.values_mut().any(go),
            _ => false,
        }
    }
    if !go(v) {
        match v {
            Value::Array(xs) => xs.push(json!("mutated")),
            Value::String(s) => s.push('*'),
            other => *other = json!(["mutated"]),
        }
    }
}

/// Runs every check. With `mutation = Some(k)` the expected value of check
/// `k` is perturbed first.
pub fn run_verify(seed: u64, mutation: Option<usize>) -> VerifyReport {
    VerifyReport {
        seed,
        mutation,
        checks: evaluate(seed, mutation, |_| true),
    }
}

/// Runs only the checks belonging to `criterion`.
pub fn run_criterion(seed: u64, criterion: u8) -> Vec<CheckOutcome> {
    evaluate(seed, None, |c| c == criterion)
}

fn evaluate(seed: u64, mutation: Option<usize>, keep: impl Fn(u8) -> bool) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .enumerate()
        .filter(|(_, c)| keep(c.criterion))
        .map(|(k, c)| {
            let start = Instant::now();
            let (mut expected, actual) = (c.run)(seed);
            if mutation == Some(k) {
                mutate_value(&mut expected);
            }
            CheckOutcome {
                id: c.id.to_string(),
                criterion: c.criterion,
                anchor: c.anchor.to_string(),
                passed: expected == actual,
                expected,
                actual,
                millis: start.elapsed().as_millis() as u64,
            }
        })
        .collect()
}
