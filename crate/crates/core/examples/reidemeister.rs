//! Both sides of a Reidemeister III move give the same operator once the
//! log-longitudes are matched.

use qinv::dilog::RootOfUnity;
use qinv::evaluator::tangle_operator;
use qinv::fixtures::{colored_tangle, random_input_seeds};
use qinv::num::{max_abs, Col2};
use qinv::slcoloring::random_c;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qinv::Result<()> {
    let ctx = RootOfUnity::new(3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let top = Col2::new(random_c(&mut rng), random_c(&mut rng));
    let (left, right) = ("xp id ; id xp ; xp id", "id xp ; xp id ; id xp");
    let (sa, la) = colored_tangle(left, |c| random_input_seeds(c, &mut rng.clone()), top)?;
    let (sb, lb) = colored_tangle(right, |c| random_input_seeds(c, &mut rng.clone()), top)?;
    // Match each strand's log-longitude to the left-hand side's.
    let (ca, cb) = (&sa.comb, &sb.comb);
    let lam = la.lambda(ca);
    let mut target = lb.induced_decoration(cb);
    for (x, y) in ca.input_segments().into_iter().zip(cb.input_segments()) {
        target.lambda[cb.component_of(y)] = lam[ca.component_of(x)];
    }
    let lb = lb.adjust_to_target(cb, &target)?;
    let (ma, mb) = (tangle_operator(ctx, &sa, &la)?, tangle_operator(ctx, &sb, &lb)?);
    println!("operator size {}x{}", ma.nrows(), ma.ncols());
    println!("relative difference {:.2e}", max_abs(&(&ma - &mb)) / max_abs(&ma));
    Ok(())
}
