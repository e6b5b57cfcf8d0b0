//! The cyclic quantum dilogarithm at a root of unity: Φ_N, one period of the
//! qlf function and its closed form, and the lifted dilogarithm.

use qinv::dilog::{lifted_dilog, phi_n, qlf_exact, CoverPoint, QlfTable, RootOfUnity};
use qinv::num::c;

fn main() -> qinv::Result<()> {
    let ctx = RootOfUnity::new(5)?;
    let z = c(0.3, 0.1);
    println!("Φ_5({z}) = {:.10}", phi_n(ctx, z)?);
    let p = CoverPoint::over(z, 0);
    let t = QlfTable::new(ctx, p)?;
    for n in 0..5 {
        println!("qlf(ζ; {n}) = {:.10}", t.get(n));
    }
    println!("closed form qlf(ζ; 0) = {:.10}", qlf_exact(ctx, p)?);
    println!("L̂(ζ⁰, ζ¹) = {:.10}", lifted_dilog(p)?);
    Ok(())
}
