//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::process::{Command, ExitCode};

use lefschetz::harness::verify::{run_criterion, CriterionResult, CRITERIA};

const SEED: u64 = 42;

fn suite_output() -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(["verify-paper", "--seed", &SEED.to_string()])
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

/// Criterion 11 at the command line: two full runs, byte-identical.
fn cli_determinism() -> CriterionResult {
    let mut r = run_criterion(11, SEED);
    let (first, second) = (suite_output(), suite_output());
    if first.0 != Some(0) {
        r.passed = false;
        r.detail = format!("verify-paper exited with {:?}", first.0);
    } else if first != second {
        r.passed = false;
        r.detail = "two verify-paper runs differ".into();
    } else {
        r.detail = format!("{}; two verify-paper runs byte-identical ({} bytes)", r.detail, first.1.len());
    }
    r
}

fn main() -> ExitCode {
    let mut failed = 0;
    for &(id, ..) in &CRITERIA {
        let r = if id == 11 { cli_determinism() } else { run_criterion(id, SEED) };
        println!("{r}");
        failed += usize::from(!r.passed);
    }
    println!("acceptance: {}/{} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
