//! Propagate a decorated SL₂(ℂ) coloring and shadow over an open tangle,
//! read off region/segment/meridian parameters, classify the crossings and
//! apply a gauge transformation.

use qinv::fixtures::{colored_tangle, random_input_seeds};
use qinv::num::Col2;
use qinv::slcoloring::{random_c, random_sl2, GaugeKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qinv::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let top = Col2::new(random_c(&mut rng), random_c(&mut rng));
    let (sc, _) = colored_tangle("xp id ; id xn ; xp id", |c| random_input_seeds(c, &mut rng), top)?;
    println!("region parameters a: {:.4?}", sc.a);
    println!("segment parameters b: {:.4?}", sc.b);
    println!("meridian parameters m: {:.4?}", sc.m);
    for x in &sc.comb.crossings {
        let class = sc.classify(x);
        println!("crossing sign {:+}: {:?}, K = {:.4?}", x.sign, class.kind, class.k_const);
    }
    println!("admissible: {}", sc.check_admissible().is_admissible());
    let h = random_sl2(&mut rng);
    let g = sc.gauge_transform(&h, GaugeKind::A)?;
    println!("after a type-A gauge, m = {:.4?}", g.m);
    Ok(())
}
