//! The figure-eight knot at its two parabolic representations, N = 2..6,
//! with μ = λ = −1/2 (the second table uses the representative λ = −3/2).

use qinv::fixtures::{evaluate, FixtureParams};
use qinv::num::c;

fn main() -> qinv::Result<()> {
    for (name, lambda) in [("fig8-hyp-prime", -0.5), ("fig8-hypbar-prime", -1.5)] {
        println!("{name}");
        for n in 2..=6 {
            let p = FixtureParams { n, mu: vec![c(-0.5, 0.0)], lambda: vec![c(lambda, 0.0)], ..Default::default() };
            let z = evaluate(name, &p, 1)?.raw;
            println!("  N={n}  {:>10.5} {:>+10.5}i   log/N = {:.6}", z.re, z.im, z.ln() / n as f64);
        }
    }
    Ok(())
}
