//! Hopf link invariants for both decorations against their closed forms.

use qinv::fixtures::{evaluate, FixtureParams};
use qinv::num::{c, omega};

fn main() -> qinv::Result<()> {
    let (mu1, mu2) = (c(0.3, 0.05), c(0.7, -0.1));
    for n in 2..=5 {
        let nm1 = (n - 1) as f64;
        let s: qinv::num::C64 = (0..n).map(|k| omega(-(mu1 * 2.0 + 1.0) * k as f64, n)).sum();
        let p = FixtureParams { n, mu: vec![mu1, mu2], ..Default::default() };
        let pinched = evaluate("hopf-pinched", &p, 1)?;
        let other = evaluate("hopf-other", &p, 1)?;
        println!("N={n}");
        println!("  pinched {:.8}  closed form {:.8}", pinched.raw, omega(-mu2 * nm1, n) * s);
        println!("  other   {:.8}  closed form {:.8}", other.raw, omega((mu1 * 2.0 + 1.0) * nm1 + mu2 * nm1, n) * s);
    }
    Ok(())
}
