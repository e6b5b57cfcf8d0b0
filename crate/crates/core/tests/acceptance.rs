//! One PASS/FAIL line per acceptance criterion.
//!
//! Failing criteria are reported, not turned into a non-zero exit, so that a
//! known shortfall stays visible next to the passing ones.

use qinv::verify::{run, Config, Report, Suite};
use std::time::Instant;

const CRITERIA: [(usize, &str, Suite); 9] = [
    (1, "figure-eight tables", Suite::Tables),
    (2, "Hopf closed forms", Suite::Hopf),
    (3, "Kashaev oracle", Suite::Kashaev),
    (4, "move suite", Suite::Moves),
    (5, "log-data laws", Suite::LogData),
    (6, "dilogarithm identities", Suite::Dilog),
    (7, "CS invariant", Suite::Cs),
    (8, "algebraic consistency", Suite::Algebra),
    (9, "gauge and cut-word independence", Suite::Gauge),
];

fn main() {
    let start = Instant::now();
    let cfg = Config { seed: 20240601, ..Default::default() };
    // Tables run alone so their runtime is not inflated by the other suites.
    let tables = run(Suite::Tables, &cfg);
    let reports: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA[1..]
            .iter()
            .map(|&(_, _, suite)| {
                let cfg = &cfg;
                s.spawn(move || run(suite, cfg))
            })
            .collect();
        std::iter::once(tables).chain(handles.into_iter().map(|h| h.join().expect("suite panicked"))).collect()
    });
    let mut failed = 0;
    for ((k, title, _), report) in CRITERIA.iter().zip(&reports) {
        let status = if report.passed() { "PASS" } else { "FAIL" };
        failed += usize::from(!report.passed());
        println!("{status} criterion {k}: {title} ({:.1} s)", report.seconds);
        for c in &report.checks {
            let mark = if c.passed() { "ok  " } else { "FAIL" };
            let err = c.error.as_deref().map(|e| format!("  [{e}]")).unwrap_or_default();
            println!("    {mark} {:<44} {:>10.3e} <= {:.0e}  (n={}){err}", c.name, c.residual, c.tol, c.samples);
        }
    }
    println!("{} of 9 criteria pass ({:.1} s)", 9 - failed, start.elapsed().as_secs_f64());
}
