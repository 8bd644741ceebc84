//! One line per acceptance criterion, at the default bounds.

use std::process::ExitCode;
use std::time::Instant;

use treeloc::suite::{run_suite, SuiteConfig};

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    println!("acceptance suite, seed {}", cfg.seed);
    let start = Instant::now();
    let verdicts = run_suite(&cfg);
    for v in &verdicts {
        println!("{}", v.line());
    }
    let failed = verdicts.iter().filter(|v| !v.ok).count();
    println!("{} of {} criteria pass in {:.1}s", verdicts.len() - failed, verdicts.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
