//! Runs every acceptance criterion once, prints one line each, and exits
//! nonzero if any fails. `QQMOD_SEED` overrides the default seed 0.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qqmod_core::oracle::run_suite;

const CRITERIA: [(u32, &str, &str, u64); 7] = [
    (1, "bijection round trip over the module catalog", "bijection", 5),
    (2, "membership agrees with the level decomposition", "decomp", 30),
    (3, "intersection and sum lattice laws", "lattice", 60),
    (4, "finite generation and rational decomposition", "fg", 60),
    (5, "pseudo-angular component axioms", "axioms", 30),
    (6, "characteristic-two classification", "char2", 30),
    (7, "closure of every catalog module in both characteristics", "closure", 60),
];

fn main() -> ExitCode {
    let seed = std::env::var("QQMOD_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut all = true;
    for (n, what, suite, limit) in CRITERIA {
        let start = Instant::now();
        let reports = run_suite(suite, seed, None).expect("known suite");
        let took = start.elapsed();
        let r = &reports[0];
        let in_time = took < Duration::from_secs(limit);
        let pass = r.ok() && in_time;
        all &= pass;
        println!(
            "[{}] criterion {n}: {what} (seed {seed}): checked {}, skipped {}, failed {}, {:.1} s of {limit} s{}",
            if pass { "PASS" } else { "FAIL" },
            r.checked,
            r.skipped,
            r.failed,
            took.as_secs_f64(),
            if in_time { "" } else { ", over the time limit" },
        );
        for f in &r.failures {
            println!("    {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
