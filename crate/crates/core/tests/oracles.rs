//! Published and independently computed values.

use qinv::dilog::{li2, omega_factorial, RootOfUnity};
use qinv::evaluator::{cs_link, link_invariant};
use qinv::fixtures::{build, FixtureParams, FIG8_HYPBAR_TABLE, FIG8_HYP_TABLE};
use qinv::num::{c, omega, rel, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn params(n: usize) -> FixtureParams {
    FixtureParams { n, ..Default::default() }
}

fn fig8_value(name: &str, n: usize, word: usize) -> C64 {
    let fx = build(name, &FixtureParams { word, ..params(n) }).unwrap();
    let col = fx.realize(1).unwrap();
    link_invariant(RootOfUnity::new(n).unwrap(), &col.sc, &col.lc).unwrap().raw
}

#[test]
fn figure_eight_tables() {
    for n in 2..=6 {
        let (re, im) = FIG8_HYP_TABLE[n - 2];
        let z = fig8_value("fig8-hyp-prime", n, 0);
        assert!(rel(z, c(re, im)) < 1e-5, "hyp N={n}: {z}");
        let (re, im) = FIG8_HYPBAR_TABLE[n - 2];
        let z = fig8_value("fig8-hypbar-prime", n, 0);
        assert!(rel(z, c(re, im)) < 1e-5, "hypbar N={n}: {z}");
    }
}

#[test]
fn figure_eight_second_cut_word() {
    for n in 2..=4 {
        for name in ["fig8-hyp-prime", "fig8-hypbar-prime", "fig8-hyp", "fig8-hypbar"] {
            let a = fig8_value(name, n, 0);
            let b = fig8_value(name, n, 1);
            assert!(rel(a, b) < 1e-8, "{name} N={n}: {a} vs {b}");
        }
    }
}

fn kashaev_sum(n: usize) -> f64 {
    (0..n).map(|k| omega_factorial(k, n).norm_sqr()).sum()
}

#[test]
fn kashaev_oracle() {
    assert!((kashaev_sum(2) - 5.0).abs() < 1e-12);
    for n in 2..=8 {
        let fx = build("kashaev-trivial", &params(n)).unwrap();
        let col = fx.realize(1).unwrap();
        let z = link_invariant(RootOfUnity::new(n).unwrap(), &col.sc, &col.lc).unwrap().raw;
        assert!(rel(z, c(kashaev_sum(n), 0.0)) < 1e-8, "N={n}: {z}");
    }
}

fn hopf_sum(n: usize, mu1: C64) -> C64 {
    (0..n).map(|k| omega(-(mu1 * 2.0 + 1.0) * k as f64, n)).sum()
}

#[test]
fn hopf_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for trial in 0..12 {
        let mu1 = c(rng.gen_range(-1.0..1.0), rng.gen_range(-0.3..0.3));
        let mu2 = c(rng.gen_range(-1.0..1.0), rng.gen_range(-0.3..0.3));
        for n in 2..=5 {
            let nm1 = (n - 1) as f64;
            let ctx = RootOfUnity::new(n).unwrap();
            let p = FixtureParams { n, mu: vec![mu1, mu2], seed: trial, word: trial as usize % 4, ..Default::default() };
            let s = hopf_sum(n, mu1);
            let col = build("hopf-pinched", &p).unwrap().realize(1).unwrap();
            let r = link_invariant(ctx, &col.sc, &col.lc).unwrap();
            assert!(rel(r.raw, omega(-mu2 * nm1, n) * s) < 1e-9, "pinched raw N={n}");
            assert!(rel(r.shifted, omega(mu2 * 2.0 * (mu1 - nm1 / 2.0), n) * s) < 1e-9);
            let col = build("hopf-other", &p).unwrap().realize(1).unwrap();
            let r = link_invariant(ctx, &col.sc, &col.lc).unwrap();
            assert!(rel(r.raw, omega((mu1 * 2.0 + 1.0) * nm1 + mu2 * nm1, n) * s) < 1e-9, "other raw N={n}");
            assert!(rel(r.shifted, omega(-mu2 * 2.0 * (mu1 - nm1 / 2.0) + (mu1 * 2.0 + 1.0) * nm1, n) * s) < 1e-9);
        }
    }
}

#[test]
fn figure_eight_volume() {
    let vol = 2.0 * li2(c(0.5, (3f64).sqrt() / 2.0)).unwrap().im;
    assert!((vol - 2.029883212819307).abs() < 1e-12);
    let col = build("fig8-hyp", &params(2)).unwrap().realize(1).unwrap();
    let cs = cs_link(&col.sc, &col.lc).unwrap();
    assert!((2.0 * PI * cs.ln().re - vol).abs() < 1e-6, "{cs}");
}
