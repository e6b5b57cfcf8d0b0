//! Run every verification suite and print one line per check.

use qinv::verify::{run, Config, Suite};

fn main() {
    let cfg = Config { seed: 1, ..Default::default() };
    for suite in Suite::ALL {
        let r = run(suite, &cfg);
        println!("{} ({:.1} s): {}", suite.name(), r.seconds, if r.passed() { "pass" } else { "FAIL" });
        for c in &r.checks {
            println!("  {:<44} {:.2e} / {:.0e}", c.name, c.residual, c.tol);
        }
    }
}
