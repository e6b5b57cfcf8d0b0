//! Property tests: dilogarithm identities, log bookkeeping, gauge and
//! decoration behaviour of the invariant.

mod common;

use common::*;
use proptest::prelude::*;
use qinv::dilog::{lifted_dilog, phi_n, qlf, qlf_exact, CoverPoint};
use qinv::evaluator::{link_invariant, transform_decoration};
use qinv::fixtures::{build, FixtureParams};
use qinv::logdata::{LogColoring, LogDecoration, LogValue};
use qinv::num::{c, omega, rel, C64, I, ONE};
use qinv::slcoloring::{random_sl2, GaugeKind, ShadowColoring};
use std::f64::consts::PI;

fn zeta() -> impl Strategy<Value = C64> {
    (-2.5f64..2.5, -0.35f64..0.35)
        .prop_filter("away from integers", |(re, im)| (re - re.round()).abs() > 0.02 || im.abs() > 0.02)
        .prop_map(|(re, im)| c(re, im))
}

fn lift_to(sc: &ShadowColoring, d: &LogDecoration) -> LogColoring {
    LogColoring::with_meridians(sc, &d.mu).unwrap().adjust_to_target(&sc.comb, d).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phi_recurrence(n in 2usize..7, z in zeta()) {
        let cx = ctx(n);
        let lhs = phi_n(cx, z + 1.0).unwrap() * (ONE - omega(z + 1.0, n));
        prop_assert!(rel(lhs, phi_n(cx, z).unwrap()) < 1e-8);
    }

    #[test]
    fn qlf_is_periodic_and_recursive(n in 2usize..7, z in zeta(), k in -2i64..=2, m in -4i64..=4) {
        let cx = ctx(n);
        let p = CoverPoint::over(z, k);
        let q = |j| qlf(cx, p, j).unwrap();
        prop_assert!(rel(q(m + n as i64), q(m)) < 1e-8);
        let step = q(m + 1) * (ONE - omega(p.zeta0 + (m + 1) as f64, n));
        prop_assert!(rel(step, q(m) * omega(-p.zeta1, n)) < 1e-8);
        prop_assert!(rel(q(0), qlf_exact(cx, p).unwrap()) < 1e-8);
    }

    #[test]
    fn lifted_dilog_monodromy(z in zeta(), k in -2i64..=2, j in -3i64..=3) {
        let p = CoverPoint::over(z, k);
        let base = lifted_dilog(p).unwrap().exp();
        let a = lifted_dilog(CoverPoint { zeta0: p.zeta0 + j as f64, ..p }).unwrap().exp();
        prop_assert!(rel(a, base * (-I * PI * j as f64 * p.zeta1).exp()) < 1e-10);
        let b = lifted_dilog(CoverPoint { zeta1: p.zeta1 + j as f64, ..p }).unwrap().exp();
        prop_assert!(rel(b, base * (I * PI * j as f64 * p.zeta0).exp()) < 1e-10);
    }

    #[test]
    fn log_value_offsets(z in zeta(), k in -5i64..=5, j in -5i64..=5) {
        let base = (2.0 * PI * I * z).exp();
        let v = LogValue::with_value(z + k as f64, base).unwrap();
        prop_assert_eq!(v.shifted(j).offset, v.offset + j);
        prop_assert!((v.shifted(j).value() - (z + (k + j) as f64)).norm() < 1e-12);
        prop_assert!(((2.0 * PI * I * v.value()).exp() - base).norm() < 1e-9);
        prop_assert!(LogValue::with_value(z + 0.5, base).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn gauge_invariance(
        name in prop::sample::select(vec!["hopf-pinched", "hopf-other", "fig8-hyp", "unknot"]),
        n in 2usize..4,
        seed in any::<u64>(),
        type_b in any::<bool>(),
    ) {
        let fx = build(name, &FixtureParams { n, ..Default::default() }).unwrap();
        let col = fx.realize(1).unwrap();
        let v = link_invariant(ctx(n), &col.sc, &col.lc).unwrap().raw;
        let kind = if type_b { GaugeKind::B } else { GaugeKind::A };
        let h = random_sl2(&mut rng(seed));
        let sc = col.sc.gauge_transform(&h, kind).unwrap().repair_admissibility(seed).unwrap().2;
        let w = link_invariant(ctx(n), &sc, &lift_to(&sc, &fx.decoration)).unwrap().raw;
        prop_assert!(rel(w, v) < 1e-8, "{name} N={n} {kind:?}: {w} vs {v}");
    }

    #[test]
    fn longitude_adjustment_hits_target(
        seed in any::<u64>(),
        d1 in -3i64..=3,
        d2 in -3i64..=3,
    ) {
        let fx = build("hopf-pinched", &FixtureParams { seed, ..Default::default() }).unwrap();
        let col = fx.realize(1).unwrap();
        let comb = &col.sc.comb;
        let mut target = fx.decoration.clone();
        target.lambda[0] += d1 as f64;
        target.lambda[1] += d2 as f64;
        let lc = col.lc.adjust_to_target(comb, &target).unwrap();
        let got = lc.induced_decoration(comb);
        for i in 0..2 {
            prop_assert!((got.lambda[i] - target.lambda[i]).norm() < 1e-10);
            prop_assert!((got.mu[i] - target.mu[i]).norm() < 1e-10);
        }
    }

    #[test]
    fn decoration_shift_law(
        n in 2usize..4,
        dl in prop::collection::vec(-2i64..=2, 2),
        dm in prop::collection::vec(-1i64..=1, 2),
    ) {
        let fx = build("hopf-other", &FixtureParams { n, ..Default::default() }).unwrap();
        let col = fx.realize(1).unwrap();
        let base = link_invariant(ctx(n), &col.sc, &col.lc).unwrap();
        let dm: Vec<i64> = dm.iter().map(|d| d * n as i64).collect();
        let want = transform_decoration(&base, &dl, &dm).unwrap();
        let lc = lift_to(&col.sc, &want.decoration);
        let got = link_invariant(ctx(n), &col.sc, &lc).unwrap();
        prop_assert!(rel(got.raw, want.raw) < 1e-8, "{} vs {}", got.raw, want.raw);
        prop_assert!(rel(got.shifted, want.shifted) < 1e-8);
    }
}
