//! Choose logarithms for a shadow coloring, read the induced
//! log-decoration and flattening, then move the decoration to a target.

use qinv::fixtures::{build, FixtureParams};
use qinv::logdata::LogColoring;

fn main() -> qinv::Result<()> {
    let fx = build("hopf-pinched", &FixtureParams::default())?;
    let col = fx.realize(1)?;
    let comb = &col.sc.comb;
    let principal = LogColoring::lift(&col.sc, &Default::default())?;
    println!("principal lift decoration: {:.4?}", principal.induced_decoration(comb));
    println!("target decoration:         {:.4?}", fx.decoration);
    let adjusted = principal.adjust_to_target(comb, &fx.decoration)?;
    println!("adjusted decoration:       {:.4?}", adjusted.induced_decoration(comb));
    for x in &comb.crossings {
        println!("crossing {:+}: log-longitude contributions {:.4?}", x.sign, adjusted.crossing_lambda(x));
    }
    Ok(())
}
