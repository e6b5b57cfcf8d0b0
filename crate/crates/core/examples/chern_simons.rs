//! The Chern–Simons invariant of the figure-eight knot: 2π·Re log of it is
//! the hyperbolic volume 2·Im Li₂(e^{iπ/3}).

use qinv::dilog::li2;
use qinv::fixtures::{chern_simons, FixtureParams};
use qinv::num::c;
use std::f64::consts::PI;

fn main() -> qinv::Result<()> {
    let cs = chern_simons("fig8-hyp", &FixtureParams::default(), 1)?;
    let vol = 2.0 * li2(c(0.5, 3f64.sqrt() / 2.0))?.im;
    println!("CS = {cs:.12}");
    println!("2π·Re log CS = {:.12}", 2.0 * PI * cs.ln().re);
    println!("volume       = {vol:.12}");
    Ok(())
}
