//! End-to-end acceptance gate: runs every verification suite and
//! prints one pass/fail line per criterion.

use skein_core::verify::{run_suite, SUITE_IDS};

#[test]
fn acceptance() {
    let mut failures = Vec::new();
    for id in SUITE_IDS {
        match run_suite(id) {
            Ok(report) => println!(
                "{} PASS ({:.2?} of {:.0?} budget) — {}",
                report.id, report.elapsed, report.budget, report.detail
            ),
            Err(err) => {
                println!("{} FAIL — {}", id, err);
                failures.push(id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {:?}", failures);
}
