//! Acceptance suite: runs every verification battery at full size and
//! prints one line per criterion.

use std::time::Instant;

use schubert_core::verify::{run_suite, suite_names};

#[test]
fn acceptance_criteria() {
    let mut failures = Vec::new();
    for (i, name) in suite_names().iter().enumerate() {
        let start = Instant::now();
        let outcome = run_suite(name, None);
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => {
                println!("criterion {:>2} [{name}] PASS ({elapsed:.2}s): {detail}", i + 1);
            }
            Err(msg) => {
                println!("criterion {:>2} [{name}] FAIL ({elapsed:.2}s): {msg}", i + 1);
                failures.push(format!("{name}: {msg}"));
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
