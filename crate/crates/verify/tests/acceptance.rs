//! Acceptance run: one PASS/FAIL line per criterion at full scale.
//!
//! Runs without the libtest harness so the lines are always printed.

use std::process::ExitCode;

use mpl_verify::suite::{Ctx, Scale, CRITERIA};

const SEED: u64 = 20_240_601;

fn main() -> ExitCode {
    let ctx = Ctx::new(SEED, Scale::Full);
    let mut failed = Vec::new();
    for item in CRITERIA.iter() {
        let outcome = item.execute(&ctx);
        println!("{}", outcome.line());
        if !outcome.pass {
            failed.push(outcome.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
