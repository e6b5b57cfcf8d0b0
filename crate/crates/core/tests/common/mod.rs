#![allow(dead_code)]

use qinv::diagram::{Combinatorics, Crossing, TangleDiagram};
use qinv::dilog::RootOfUnity;
use qinv::fixtures::random_input_seeds;
use qinv::logdata::LogColoring;
use qinv::num::{c, e2pi, inv2, mat2, to_sl2, Col2, Mat2, Row2, C64, ONE, ZERO};
use qinv::quantum::ModuleContext;
use qinv::slcoloring::{random_c, DecoratedMatrix, ShadowColoring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ctx(n: usize) -> RootOfUnity {
    RootOfUnity::new(n).unwrap()
}

pub fn open(word: &str) -> Combinatorics {
    Combinatorics::new(&TangleDiagram::parse(word).unwrap(), false).unwrap()
}

pub fn top(r: &mut ChaCha8Rng) -> Col2 {
    Col2::new(random_c(r), random_c(r))
}

/// Random generic coloring of an open tangle, principal log-coloring.
pub fn random_tangle(word: &str, r: &mut ChaCha8Rng) -> (ShadowColoring, LogColoring) {
    let comb = open(word);
    let seeds = random_input_seeds(&comb, r).unwrap();
    let sc = ShadowColoring::propagate(&comb, &seeds, top(r)).unwrap();
    let lc = LogColoring::lift(&sc, &Default::default()).unwrap();
    (sc, lc)
}

/// Crossing word with pinched input colors g_i = P⁻¹[[1/m_i,0],[c_i,m_i]]P
/// sharing the eigenline (1,0)P. With `e_nil` the colors are diag(m_i, 1/m_i)
/// with eigenline (0,1), which is E-nilpotent for every shadow.
pub fn pinched_crossing(word: &str, r: &mut ChaCha8Rng, ms: (C64, C64), e_nil: bool) -> (ShadowColoring, LogColoring) {
    let comb = open(word);
    let p = to_sl2(&mat2(random_c(r), random_c(r), random_c(r), random_c(r)));
    let pi = inv2(&p);
    let mut g = |m: C64| -> Mat2 {
        if e_nil {
            mat2(m, ZERO, ZERO, ONE / m)
        } else {
            pi * mat2(ONE / m, ZERO, random_c(r), m) * p
        }
    };
    let v = if e_nil { Row2::new(ZERO, ONE) } else { Row2::new(ONE, ZERO) * p };
    let ins = comb.input_segments();
    let (g1, g2) = (g(ms.0), g(ms.1));
    let seeds = vec![(ins[0], DecoratedMatrix::new(g1, v).unwrap()), (ins[1], DecoratedMatrix::new(g2, v).unwrap())];
    let sc = ShadowColoring::propagate(&comb, &seeds, top(r)).unwrap();
    let lc = LogColoring::lift(&sc, &Default::default()).unwrap();
    (sc, lc)
}

/// Input and output module contexts of a left-to-right crossing:
/// ([V₁, V₂], [V₂′, V₁′]).
pub fn crossing_modules(n: usize, sc: &ShadowColoring, lc: &LogColoring, x: &Crossing) -> ([ModuleContext; 2], [ModuleContext; 2]) {
    let m = |s: usize| ModuleContext::new(lc.label(&sc.comb, s), false, ctx(n));
    ([m(x.s1), m(x.s2)], [m(x.s2p), m(x.s1p)])
}

pub fn cplx(re: f64, im: f64) -> C64 {
    c(re, im)
}

pub fn unit_meridian(r: &mut ChaCha8Rng) -> C64 {
    e2pi(random_c(r) * 0.4)
}
