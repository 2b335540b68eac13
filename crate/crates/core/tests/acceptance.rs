//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use cellrep::cli::{run, EXIT_FAILURE, EXIT_OK};
use cellrep::verify::{mutation_count, run_criterion};

const SEED: u64 = 0;

struct Outcome {
    passed: bool,
    detail: String,
}

fn golden(criterion: u8) -> Outcome {
    let checks = run_criterion(SEED, criterion);
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{} expected {} got {}", c.id, c.expected, c.actual))
        .collect();
    Outcome {
        passed: !checks.is_empty() && failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            failed.join("; ")
        },
    }
}

fn verify_exit(extra: &[String]) -> i32 {
    let mut args = vec![
        "cellrep".to_string(),
        "verify".into(),
        "--seed".into(),
        SEED.to_string(),
    ];
    args.extend_from_slice(extra);
    run(args, &mut std::io::sink(), &mut std::io::sink())
}

fn mutation_harness() -> Outcome {
    let clean = verify_exit(&[]);
    let unflipped: Vec<usize> = (0..mutation_count())
        .filter(|k| verify_exit(&["--mutate".into(), k.to_string()]) != EXIT_FAILURE)
        .collect();
    Outcome {
        passed: clean == EXIT_OK && unflipped.is_empty(),
        detail: format!(
            "clean exit {clean}, {} mutations, not flipped: {unflipped:?}",
            mutation_count()
        ),
    }
}

type Criterion = (u8, &'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "algebra golden values", Duration::from_secs(1), || {
            golden(1)
        }),
        (2, "composition", Duration::from_secs(1), || golden(2)),
        (3, "cells", Duration::from_secs(1), || golden(3)),
        (4, "n = 1 classification", Duration::from_secs(1), || {
            golden(4)
        }),
        (5, "general classification", Duration::from_secs(60), || {
            golden(5)
        }),
        (6, "right cell", Duration::from_secs(1), || golden(6)),
        (7, "cell 2-representations", Duration::from_secs(5), || {
            golden(7)
        }),
        (8, "property suites", Duration::from_secs(30), || golden(8)),
        (
            9,
            "verify aggregation and mutations",
            Duration::from_secs(600),
            mutation_harness,
        ),
    ];
    let mut failures = 0;
    for (id, name, bound, f) in criteria {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let in_time = elapsed < bound;
        let passed = out.passed && in_time;
        failures += usize::from(!passed);
        println!(
            "criterion {id} {}: {name} ({} ms, bound {} ms) {}{}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_millis(),
            bound.as_millis(),
            out.detail,
            if in_time { "" } else { ", over time bound" }
        );
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
