//! Acceptance suite: criteria 1-12, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always print. Exits nonzero
//! if any criterion fails.

use std::process::ExitCode;

use perfcone::verify::CRITERIA;

fn main() -> ExitCode {
    let mut failed = 0;
    let mut flags = Vec::new();
    for c in &CRITERIA {
        let o = c.evaluate();
        println!("{o} {:>2} {} [{:.1}s] {}", c.id, c.title, o.elapsed.as_secs_f64(), o.detail);
        failed += usize::from(!o.passed);
        flags.extend(o.flags);
    }
    for f in &flags {
        println!("FLAG {f}");
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
