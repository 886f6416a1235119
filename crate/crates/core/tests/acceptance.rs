//! Acceptance criteria 1 to 10. Prints one pass/fail line per criterion and
//! exits nonzero if any fails. Numeric arguments select criteria:
//! `cargo test --test acceptance -- 1 7`.

use std::process::ExitCode;

use bicat_core::criteria;

fn main() -> ExitCode {
    let mut selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).filter(|n| (1..=10).contains(n)).collect();
    if selected.is_empty() {
        selected = (1..=10).collect();
    }
    let mut failed = 0;
    for n in selected {
        let outcome = criteria::run(n);
        println!("{outcome}");
        if !outcome.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
