//! Runs every verification suite with a fixed seed and prints the checks.
//!
//! cargo run --release --example verification_campaign -- [trials]

use std::time::Instant;

use lambert_core::verify::{run_suite, Suite, Tolerances};

fn main() {
    let trials: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("trials must be an integer"))
        .unwrap_or(100);
    let tol = Tolerances::default();
    let mut all = true;
    for suite in Suite::ALL {
        let clock = Instant::now();
        let report = run_suite(suite, trials, 7, &tol);
        println!("{suite} ({trials} trials, {:.1} s)", clock.elapsed().as_secs_f64());
        for c in &report.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            println!("  {mark} {:<28} {:>10.3e}  < {:.0e}  {}", c.name, c.observed, c.limit, c.detail);
        }
        all &= report.passed();
    }
    println!("{}", if all { "all suites pass" } else { "some checks failed" });
}
