//! Build the tensor of a generic crossing, check that it intertwines the
//! coproduct action and compare its determinant with the closed form.

use qinv::dilog::RootOfUnity;
use qinv::fixtures::{colored_tangle, random_input_seeds};
use qinv::num::{determinant, rel, Col2};
use qinv::quantum::{crossing_determinant, crossing_tensor, intertwining_residual, segment_context};
use qinv::slcoloring::random_c;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qinv::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ctx = RootOfUnity::new(3)?;
    let top = Col2::new(random_c(&mut rng), random_c(&mut rng));
    let (sc, lc) = colored_tangle("xp", |c| random_input_seeds(c, &mut rng), top)?;
    let x = &sc.comb.crossings[0];
    let ct = crossing_tensor(ctx, &sc, &lc, x, 0)?;
    println!("kind {:?}, sign {:+}, max entry {:.4}", ct.kind, ct.sign, ct.tensor.max_abs());
    let m = |s| segment_context(ctx, &sc.comb, &lc, s);
    let r = intertwining_residual(&ct.tensor, [&m(x.s1), &m(x.s2)], [&m(x.s2p), &m(x.s1p)]);
    println!("intertwining residual {r:.2e}");
    let fl = ct.flattening.expect("generic crossing");
    let want = crossing_determinant(ctx, x.sign, &fl, &lc.local(&sc.comb, x))?;
    println!("determinant: dense vs closed form, relative gap {:.2e}", rel(determinant(&ct.tensor.as_matrix()), want));
    Ok(())
}
