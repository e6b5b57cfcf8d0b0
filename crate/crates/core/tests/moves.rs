//! Reidemeister moves on open tangles: both sides of each move, colored by
//! the same input matrices and top shadow, give the same operator.

mod common;

use common::*;
use qinv::evaluator::tangle_operator;
use qinv::logdata::{LogColoring, LogDecoration};
use qinv::num::{max_abs, omega, Col2, C64};
use qinv::quantum::Matrix;
use qinv::slcoloring::{eigenvalues, random_sl2, DecoratedMatrix, ShadowColoring};
use rand_chacha::ChaCha8Rng;

/// Random colorings per move and level.
const TRIALS: usize = 20;

struct Side {
    sc: ShadowColoring,
    lc: LogColoring,
}

fn inputs(k: usize, r: &mut ChaCha8Rng) -> Vec<DecoratedMatrix> {
    (0..k)
        .map(|_| {
            let g = random_sl2(r);
            DecoratedMatrix::from_eigenvalue(g, eigenvalues(&g).0).unwrap()
        })
        .collect()
}

fn side(word: &str, gs: &[DecoratedMatrix], u: Col2) -> Side {
    let comb = open(word);
    let seeds: Vec<_> = comb.input_segments().into_iter().zip(gs.iter().cloned()).collect();
    let sc = ShadowColoring::propagate(&comb, &seeds, u).unwrap();
    let lc = LogColoring::lift(&sc, &Default::default()).unwrap();
    Side { sc, lc }
}

/// Adjusts `b` so that each component has the λ of the `a` component that
/// enters at the same input position.
fn align(a: &Side, b: &Side) -> LogColoring {
    let (ca, cb) = (&a.sc.comb, &b.sc.comb);
    let la = a.lc.lambda(ca);
    let mut target = b.lc.induced_decoration(cb);
    for (sa, sb) in ca.input_segments().into_iter().zip(cb.input_segments()) {
        target.lambda[cb.component_of(sb)] = la[ca.component_of(sa)];
    }
    b.lc.adjust_to_target(cb, &LogDecoration { ..target }).unwrap()
}

fn op(n: usize, s: &Side, lc: &LogColoring) -> Matrix {
    tangle_operator(ctx(n), &s.sc, lc).unwrap()
}

fn move_residual(w1: &str, w2: &str, k: usize, n: usize, r: &mut ChaCha8Rng) -> f64 {
    let gs = inputs(k, r);
    let u = top(r);
    let (a, b) = (side(w1, &gs, u), side(w2, &gs, u));
    let lb = align(&a, &b);
    let (ma, mb) = (op(n, &a, &a.lc), op(n, &b, &lb));
    max_abs(&(&ma - &mb)) / max_abs(&ma)
}

#[test]
fn reidemeister_two() {
    let mut r = rng(11);
    for n in 2..=4 {
        for (w1, w2) in [
            ("xp ; xn", "id id"),
            ("xn ; xp", "id id"),
            ("xp<< ; xn<<", "id< id<"),
        ] {
            for _ in 0..TRIALS {
                let e = move_residual(w1, w2, 2, n, &mut r);
                assert!(e < 1e-8, "{w1} N={n}: {e}");
            }
        }
    }
}

#[test]
fn sideways_reidemeister_two() {
    let mut r = rng(12);
    for n in 2..=4 {
        for (w1, w2) in [
            ("xp>< ; xn<>", "id> id<"),
            ("xn>< ; xp<>", "id> id<"),
            ("xp<> ; xn><", "id< id>"),
        ] {
            for _ in 0..TRIALS {
                let e = move_residual(w1, w2, 2, n, &mut r);
                assert!(e < 1e-8, "{w1} N={n}: {e}");
            }
        }
    }
}

#[test]
fn reidemeister_three() {
    let mut r = rng(13);
    for n in 2..=4 {
        for (w1, w2) in [
            ("xp id ; id xp ; xp id", "id xp ; xp id ; id xp"),
            ("xn id ; id xn ; xn id", "id xn ; xn id ; id xn"),
            ("xp id ; id xn ; xn id", "id xn ; xn id ; id xp"),
            ("xn id ; id xp ; xp id", "id xp ; xp id ; id xn"),
            ("xp id ; id xp ; xn id", "id xn ; xp id ; id xp"),
        ] {
            for _ in 0..TRIALS {
                let e = move_residual(w1, w2, 3, n, &mut r);
                assert!(e < 1e-8, "{w1} N={n}: {e}");
            }
        }
    }
}

/// A kink on a strand with log-meridian μ and longitude λ multiplies the
/// identity by ω^{−ε(N−1)μ − (λ−εμ)μ}.
#[test]
fn reidemeister_one_framing() {
    let mut r = rng(14);
    let kinks = [
        "id cupr ; xp id< ; id capr",
        "id cupl ; xp>< id ; capl id",
        "cupr id ; id xp<> ; id capr",
        "cupl id ; id xp>> ; capl id",
    ];
    for n in 2..=5 {
        for w in kinks {
            for sign in ["xp", "xn"] {
                let word = w.replace("xp", sign);
                let s = side(&word, &inputs(1, &mut r), top(&mut r));
                let m = op(n, &s, &s.lc);
                let comb = &s.sc.comb;
                let e = comb.crossings[0].sign as f64;
                let (mu, lam) = (s.lc.mu(0), s.lc.lambda(comb)[0]);
                let nm1 = (n - 1) as f64;
                let want: C64 = omega(-mu * e * nm1 - (lam - mu * e) * mu, n);
                let id = Matrix::identity(n, n) * want;
                let err = max_abs(&(&m - &id));
                assert!(err < 1e-8, "{word} N={n}: {err}");
            }
        }
    }
}

#[test]
fn snakes_are_identities() {
    let mut r = rng(15);
    for n in 2..=5 {
        for w in ["id cupl ; capr id", "cupr id ; id capl"] {
            let s = side(w, &inputs(1, &mut r), top(&mut r));
            let m = op(n, &s, &s.lc);
            assert!(max_abs(&(&m - Matrix::identity(n, n))) < 1e-12, "{w} N={n}");
        }
    }
}
