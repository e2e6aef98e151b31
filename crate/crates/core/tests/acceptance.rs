//! Runs the thirteen acceptance cases and prints one line per case. Built
//! without the libtest harness so the lines always reach the output.

use std::process::ExitCode;

use cotwist::{run_suite, Status};

fn main() -> ExitCode {
    let reports = run_suite(4);
    assert_eq!(reports.len(), 13);
    for r in &reports {
        let line = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        println!("{line} {}", r.name);
        if r.status != Status::Pass {
            println!("    {}", r.details);
        }
        for key in ["printed_pair_nonzero", "corrected_pair", "sl22_implied_unlisted"] {
            if let Some(v) = r.details.get(key) {
                println!("    {key}: {v}");
            }
        }
    }
    let failed = reports.iter().filter(|r| r.status != Status::Pass).count();
    println!("acceptance: {} passed, {failed} failed", reports.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
