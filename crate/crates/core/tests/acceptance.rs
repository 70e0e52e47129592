//! Prints one line per acceptance criterion and exits nonzero if any fails.

use std::process::ExitCode;

use wdeg_core::selfcheck::run_all;

fn main() -> ExitCode {
    let checks = run_all(|c| println!("{c}"));
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
