//! Runs every verification suite and prints a summary line per assertion.

use std::time::Instant;

use order_chain::verify::{run_suite, SUITES};

fn main() -> order_chain::Result<()> {
    for slug in SUITES {
        let start = Instant::now();
        let report = run_suite(slug)?;
        println!("{slug}: {} ({:.2?})", if report.passed { "pass" } else { "FAIL" }, start.elapsed());
        for a in &report.assertions {
            println!("  [{}] {} :: {} {}", if a.passed { "ok" } else { "FAIL" }, a.description, a.claim, a.detail);
        }
    }
    Ok(())
}
