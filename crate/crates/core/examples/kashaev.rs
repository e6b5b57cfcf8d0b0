//! At the trivial pinched coloring the figure-eight invariant is the
//! Kashaev invariant Σ_k |(ω;ω)_k|².

use qinv::dilog::omega_factorial;
use qinv::fixtures::{evaluate, FixtureParams};

fn main() -> qinv::Result<()> {
    for n in 2..=8 {
        let z = evaluate("kashaev-trivial", &FixtureParams { n, ..Default::default() }, 1)?.raw;
        let sum: f64 = (0..n).map(|k| omega_factorial(k, n).norm_sqr()).sum();
        println!("N={n}  state sum {:.10}  Σ|(ω;ω)_k|² {:.10}", z, sum);
    }
    Ok(())
}
