//! Command-line front end. `run` is the whole program minus process exit.

use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bimodule_2cat::{
    cell_structure, composition_table, full_subcategory, left_cell_subcategory,
    right_cell_subcategory, CellStructure, CompositionTable,
};
use crate::cell_rep::{left_cell_rep, right_cell_rep};
use crate::int_matrix::IntMatrix;
use crate::matrix_solver::{classify, ClassificationReport, ConstraintTier, Side};
use crate::quiver_algebra::{build_star_algebra, LoewyLayers};
use crate::verify::{mutation_count, run_verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` accepted by `classify` without `--force`.
pub const CLASSIFY_N_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "cellrep",
    version,
    about = "Star algebras and their cell 2-representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basis, Cartan matrix and Loewy layers of the star algebra.
    Algebra {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "table")]
        output: OutputFormat,
    },
    /// Composition table and cells of a 2-subcategory.
    Cells {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "left")]
        side: Side,
        /// Use every projective bimodule functor instead of the cell subcategory.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value = "table")]
        output: OutputFormat,
    },
    /// Solve the action-matrix equations.
    Classify {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "left")]
        side: Side,
        #[arg(long, default_value = "projective-functor")]
        tier: ConstraintTier,
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value = "table")]
        output: OutputFormat,
    },
    /// The cell 2-representation: objects, Cartan and action matrices.
    Cellrep {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "left")]
        side: Side,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Golden values and property suites.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Perturb the expected value of one check.
        #[arg(long)]
        mutate: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        output: OutputFormat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub n: usize,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub cartan: IntMatrix,
    pub loewy_layers: Vec<LoewyLayers>,
    pub graded: bool,
    pub self_injective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellsReport {
    pub n: usize,
    pub subcategory: String,
    pub composition: CompositionTable,
    pub cells: CellStructure,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn positive(n: i64) -> Result<usize, Usage> {
    usize::try_from(n)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Usage(format!("n must be at least 1, got {n}")))
}

fn unsupported(cmd: &str, output: OutputFormat) -> Usage {
    Usage(format!("{cmd} has no {output:?} output"))
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("reports serialize") + "\n"
}

pub fn algebra_report(n: usize) -> AlgebraReport {
    let a = build_star_algebra(n as i64).expect("n >= 1");
    AlgebraReport {
        n,
        dimension: a.dim(),
        basis: a.basis().iter().map(|p| a.path_to_string(p)).collect(),
        cartan: a.cartan_matrix(),
        loewy_layers: (0..a.vertex_count())
            .map(|v| a.projective_structure(v))
            .collect(),
        graded: a.is_path_length_graded(),
        self_injective: a.is_self_injective(),
    }
}

fn cmd_algebra(n: i64, output: OutputFormat) -> Result<(String, i32), Usage> {
    let n = positive(n)?;
    let rep = algebra_report(n);
    let text = match output {
        OutputFormat::Json => json(&rep),
        OutputFormat::Dot => build_star_algebra(n as i64)?.quiver().to_dot(),
        OutputFormat::Table => {
            let mut s = format!("star algebra n = {n}\ndimension: {}\n", rep.dimension);
            s += &format!("basis: {}\n", rep.basis.join(", "));
            s += &format!("Cartan matrix:\n{}\n", rep.cartan);
            for (v, layers) in rep.loewy_layers.iter().enumerate() {
                s += &format!("Loewy layers of P{v}: {layers:?}\n");
            }
            s += &format!("path length graded: {}\n", rep.graded);
            s += &format!("self-injective: {}\n", rep.self_injective);
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn cmd_cells(n: i64, side: Side, full: bool, output: OutputFormat) -> Result<(String, i32), Usage> {
    let n = positive(n)?;
    let c = if full {
        full_subcategory(Arc::new(build_star_algebra(n as i64)?))?
    } else {
        match side {
            Side::Left => left_cell_subcategory(n as i64)?,
            Side::Right => right_cell_subcategory(n as i64)?,
        }
    };
    let rep = CellsReport {
        n,
        subcategory: c.name().to_string(),
        composition: composition_table(&c, true),
        cells: cell_structure(&c),
    };
    let text = match output {
        OutputFormat::Json => json(&rep),
        OutputFormat::Dot => rep.cells.hasse_dot(),
        OutputFormat::Table => {
            let list = |cells: &[Vec<crate::bimodule_2cat::Label>]| {
                cells
                    .iter()
                    .map(|c| {
                        let m: Vec<String> = c.iter().map(ToString::to_string).collect();
                        format!("{{{}}}", m.join(", "))
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let mut s = format!(
                "{} (n = {n})\ncomposition (row o column):\n{}\n",
                rep.subcategory, rep.composition
            );
            s += &format!("left cells: {}\n", list(&rep.cells.left_cells));
            s += &format!("right cells: {}\n", list(&rep.cells.right_cells));
            s += &format!("two-sided cells: {}\n", list(&rep.cells.twosided_cells));
            let order: Vec<String> = rep
                .cells
                .hasse()
                .iter()
                .map(|[a, b]| format!("J{a} > J{b}"))
                .collect();
            s += &format!(
                "order: {}\n",
                if order.is_empty() {
                    "-".into()
                } else {
                    order.join(", ")
                }
            );
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn classification_consistent(rep: &ClassificationReport) -> Result<(), String> {
    for f in &rep.families {
        f.check(rep.side)?;
    }
    if rep.matches_oracle() == Some(false) {
        return Err(format!(
            "{} families, set partition count {}",
            rep.count,
            rep.oracle_count.unwrap_or_default()
        ));
    }
    Ok(())
}

pub fn classification_table(rep: &ClassificationReport) -> String {
    let mut s = format!(
        "classify n = {}, side = {}, tier = {}\n{} candidate total matrices\n",
        rep.n, rep.side, rep.tier, rep.total_matrices_examined
    );
    for (k, f) in rep.families.iter().enumerate() {
        s += &format!("family {} (r = {}):\n", k + 1, f.r);
        for (i, m) in f.summands.iter().enumerate() {
            let rows: Vec<String> = m.to_rows().iter().map(|r| format!("{r:?}")).collect();
            s += &format!("  M_{i} = [{}]\n", rows.join(", "));
        }
        if !f.phi.is_empty() {
            let phi: Vec<String> = f.phi.iter().map(|(i, r)| format!("{i}->{r}")).collect();
            s += &format!("  phi: {}\n", phi.join(" "));
        }
    }
    s += &format!("{}: {}\n", rep.count_label, rep.count);
    s += &format!(
        "zero action (trivial apex): {}\n",
        rep.trivial_apex_families
    );
    if let Some(b) = rep.oracle_count {
        s += &format!(
            "set partitions of {{1..{}}}: {b} ({})\n",
            rep.n,
            if b == rep.count as u64 {
                "match"
            } else {
                "MISMATCH"
            }
        );
    }
    s
}

fn cmd_classify(
    n: i64,
    side: Side,
    tier: ConstraintTier,
    force: bool,
    output: OutputFormat,
    err: &mut dyn Write,
) -> Result<(String, i32), Usage> {
    let n = positive(n)?;
    if n > CLASSIFY_N_CAP && !force {
        return Err(Usage(format!(
            "classify with n > {CLASSIFY_N_CAP} is exponential in n; pass --force to run it"
        )));
    }
    let rep = classify(n, side, tier)?;
    let code = match classification_consistent(&rep) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "consistency check failed: {e}");
            EXIT_FAILURE
        }
    };
    let text = match output {
        OutputFormat::Json => json(&rep),
        OutputFormat::Table => classification_table(&rep),
        OutputFormat::Dot => return Err(unsupported("classify", output)),
    };
    Ok((text, code))
}

fn cmd_cellrep(n: i64, side: Side, output: OutputFormat) -> Result<(String, i32), Usage> {
    let n = positive(n)?;
    let rep = match side {
        Side::Left => left_cell_rep(n as i64)?,
        Side::Right => right_cell_rep(n as i64)?,
    };
    let text = match output {
        OutputFormat::Json => json(&rep),
        OutputFormat::Table => rep.to_string(),
        OutputFormat::Dot => return Err(unsupported("cellrep", output)),
    };
    Ok((text, EXIT_OK))
}

fn cmd_verify(
    seed: u64,
    mutate: Option<usize>,
    output: OutputFormat,
) -> Result<(String, i32), Usage> {
    if let Some(k) = mutate.filter(|&k| k >= mutation_count()) {
        return Err(Usage(format!(
            "mutation index {k} out of range 0..{}",
            mutation_count()
        )));
    }
    let rep = run_verify(seed, mutate);
    let code = if rep.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    let text = match output {
        OutputFormat::Json => json(&rep),
        OutputFormat::Table => rep.to_table(),
        OutputFormat::Dot => return Err(unsupported("verify", output)),
    };
    Ok((text, code))
}

/// Parses `args` (program name first), writes results to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Algebra { n, output } => cmd_algebra(n, output),
        Command::Cells {
            n,
            side,
            full,
            output,
        } => cmd_cells(n, side, full, output),
        Command::Classify {
            n,
            side,
            tier,
            force,
            output,
        } => cmd_classify(n, side, tier, force, output, err),
        Command::Cellrep { n, side, output } => cmd_cellrep(n, side, output),
        Command::Verify {
            seed,
            mutate,
            output,
        } => cmd_verify(seed, mutate, output),
    };
    match result {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                let _ = writeln!(err, "error: could not write output");
                return EXIT_FAILURE;
            }
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("cellrep").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn algebra_n1() {
        let (code, out, _) = call(&["algebra", "--n", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("dimension: 6"));
        let (_, out, _) = call(&["algebra", "--n", "1", "--output", "json"]);
        let rep: AlgebraReport = serde_json::from_str(&out).unwrap();
        assert_eq!(rep.cartan.to_rows(), vec![vec![2, 1], vec![1, 2]]);
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["algebra", "--n", "0"][..],
            &["algebra", "--n", "-3"],
            &["classify", "--n", "7"],
            &["classify", "--n", "1", "--side", "up"],
            &["classify", "--n", "1", "--output", "dot"],
            &["verify", "--mutate", "999"],
            &["frobnicate"],
        ] {
            let (code, out, err) = call(args);
            assert_eq!(code, EXIT_USAGE, "{args:?}");
            assert!(out.is_empty() && !err.is_empty(), "{args:?}");
        }
    }

    #[test]
    fn classify_table_mentions_count() {
        let (code, out, _) = call(&["classify", "--n", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("matrix families: 2"));
        assert!(out.contains("match"));
    }

    #[test]
    fn cells_dot() {
        let (code, out, _) = call(&["cells", "--n", "1", "--output", "dot"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("digraph"));
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("classify"));
    }
}
