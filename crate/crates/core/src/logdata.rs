//! Log-colorings: logarithms (divided by 2πi) of every region, segment and
//! meridian parameter, the flattenings they induce at crossings, and the
//! induced log-decoration (μᵢ, λᵢ).

use crate::diagram::{Combinatorics, Crossing};
use crate::error::{Error, Result};
use crate::num::{e2pi, lg, rel, C64, ZERO};
use crate::slcoloring::{CrossingKind, ShadowColoring};
use serde::{Deserialize, Serialize};

const EXP_TOL: f64 = 1e-9;
const INT_TOL: f64 = 1e-8;

/// A logarithm kept as principal part plus an exact integer offset.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogValue {
    pub principal: C64,
    pub offset: i64,
}

impl LogValue {
    pub fn principal_of(x: C64) -> Self {
        Self { principal: lg(x), offset: 0 }
    }

    /// The given value split against the principal log of `base`.
    /// Fails unless e^{2πi·value} = base.
    pub fn with_value(value: C64, base: C64) -> Result<Self> {
        let p = lg(base);
        let k = nearest_int(value - p).ok_or_else(|| {
            Error::LogData(format!("exp(2πi·{value}) does not match {base}"))
        })?;
        Ok(Self { principal: value - C64::from(k as f64), offset: k })
    }

    pub fn value(self) -> C64 {
        self.principal + self.offset as f64
    }

    pub fn shifted(self, k: i64) -> Self {
        Self { offset: self.offset + k, ..self }
    }
}

/// Rounds to an integer when within 1e−8.
pub fn nearest_int(z: C64) -> Option<i64> {
    let k = z.re.round();
    ((z - k).norm() < INT_TOL).then_some(k as i64)
}

/// Integer offsets per region, segment and component.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branches {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub mu: Vec<i64>,
}

/// The module label of a segment: α on its left and right regions, β and μ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentLabel {
    pub alpha_left: C64,
    pub alpha_right: C64,
    pub beta: C64,
    pub mu: C64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingFlattening {
    /// ζ⁰ at N, W, S, E.
    pub zeta0: [C64; 4],
    /// ζ¹ at N, W, S, E; absent at pinched crossings.
    pub zeta1: Option<[C64; 4]>,
    pub kappa: Option<C64>,
}

impl CrossingFlattening {
    /// max over corners of |e^{2πiζ⁰} + e^{−2πiζ¹} − 1|.
    pub fn cover_residual(&self) -> f64 {
        let Some(z1) = self.zeta1 else { return 0.0 };
        self.zeta0
            .iter()
            .zip(z1)
            .map(|(a, b)| (e2pi(*a) + e2pi(-b) - 1.0).norm())
            .fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogDecoration {
    pub mu: Vec<C64>,
    pub lambda: Vec<C64>,
}

/// Crossing-local log parameters in the left-to-right frame.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalLogs {
    /// α at N, W, S, E.
    pub alpha: [C64; 4],
    /// β at 1, 2, 1′, 2′.
    pub beta: [C64; 4],
    pub mu1: C64,
    pub mu2: C64,
}

/// Standard log parameters at a pinched crossing and the integer shifts
/// taking the global ones to them.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PinchedStandard {
    pub local: LocalLogs,
    pub alpha_shift: [i64; 4],
    pub beta_shift: [i64; 4],
    pub e_nilpotent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogColoring {
    pub alpha: Vec<LogValue>,
    pub beta: Vec<LogValue>,
    pub mu: Vec<LogValue>,
}

impl LogColoring {
    /// Principal logarithms plus `branches` (missing entries count as 0).
    /// Closure outputs copy β of their inputs.
    pub fn lift(sc: &ShadowColoring, branches: &Branches) -> Result<Self> {
        let off = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
        let alpha = sc.a.iter().enumerate().map(|(j, a)| LogValue::principal_of(*a).shifted(off(&branches.alpha, j))).collect();
        let mut beta: Vec<LogValue> =
            sc.b.iter().enumerate().map(|(s, b)| LogValue::principal_of(*b).shifted(off(&branches.beta, s))).collect();
        for &(si, so) in &sc.comb.closure {
            if rel(sc.b[si], sc.b[so]) > 1e-8 {
                return Err(Error::LogData(format!("closure pair ({si}, {so}) has different b")));
            }
            beta[so] = beta[si];
        }
        let mu = sc.m.iter().enumerate().map(|(k, m)| LogValue::principal_of(*m).shifted(off(&branches.mu, k))).collect();
        Ok(Self { alpha, beta, mu })
    }

    /// Principal α, β with the given log-meridians.
    pub fn with_meridians(sc: &ShadowColoring, mu: &[C64]) -> Result<Self> {
        if mu.len() != sc.m.len() {
            return Err(Error::LogData(format!("{} log-meridians for {} components", mu.len(), sc.m.len())));
        }
        let mut lc = Self::lift(sc, &Branches::default())?;
        lc.mu = mu.iter().zip(&sc.m).map(|(x, m)| LogValue::with_value(*x, *m)).collect::<Result<_>>()?;
        Ok(lc)
    }

    pub fn alpha(&self, j: usize) -> C64 {
        self.alpha[j].value()
    }

    pub fn beta(&self, s: usize) -> C64 {
        self.beta[s].value()
    }

    pub fn mu(&self, k: usize) -> C64 {
        self.mu[k].value()
    }

    pub fn label(&self, comb: &Combinatorics, s: usize) -> SegmentLabel {
        let seg = &comb.segments[s];
        SegmentLabel {
            alpha_left: self.alpha(seg.left),
            alpha_right: self.alpha(seg.right),
            beta: self.beta(s),
            mu: self.mu(seg.component),
        }
    }

    /// Largest |e^{2πi·log} − x|/|x| over all parameters.
    pub fn exp_residual(&self, sc: &ShadowColoring) -> f64 {
        let r = |l: &[LogValue], x: &[C64]| l.iter().zip(x).map(|(l, x)| rel(e2pi(l.value()), *x)).fold(0.0, f64::max);
        r(&self.alpha, &sc.a).max(r(&self.beta, &sc.b)).max(r(&self.mu, &sc.m))
    }

    pub fn local(&self, comb: &Combinatorics, x: &Crossing) -> LocalLogs {
        LocalLogs {
            alpha: [self.alpha(x.n), self.alpha(x.w), self.alpha(x.s), self.alpha(x.e)],
            beta: [self.beta(x.s1), self.beta(x.s2), self.beta(x.s1p), self.beta(x.s2p)],
            mu1: self.mu(comb.component_of(x.s1)),
            mu2: self.mu(comb.component_of(x.s2)),
        }
    }

    /// Contributions (λ to the component of strand 1, λ to that of strand 2).
    pub fn crossing_lambda(&self, x: &Crossing) -> (C64, C64) {
        let e = x.sign as f64;
        (e / 2.0 * (self.beta(x.s1p) - self.beta(x.s1)), e / 2.0 * (self.beta(x.s2) - self.beta(x.s2p)))
    }

    pub fn lambda(&self, comb: &Combinatorics) -> Vec<C64> {
        let mut l = vec![ZERO; comb.component_count];
        for x in &comb.crossings {
            let (l1, l2) = self.crossing_lambda(x);
            l[comb.component_of(x.s1)] += l1;
            l[comb.component_of(x.s2)] += l2;
        }
        l
    }

    pub fn induced_decoration(&self, comb: &Combinatorics) -> LogDecoration {
        LogDecoration { mu: (0..self.mu.len()).map(|k| self.mu(k)).collect(), lambda: self.lambda(comb) }
    }

    /// Shifts β_s by k, keeping closure pairs equal.
    pub fn shift_beta(&mut self, comb: &Combinatorics, s: usize, k: i64) {
        self.beta[s] = self.beta[s].shifted(k);
        for &(si, so) in &comb.closure {
            if s == si {
                self.beta[so] = self.beta[so].shifted(k);
            } else if s == so {
                self.beta[si] = self.beta[si].shifted(k);
            }
        }
    }

    /// Integer shifts of μ and β (at the lowest-id over→under or
    /// under→over segment of each component) reaching `target`.
    pub fn adjust_to_target(&self, comb: &Combinatorics, target: &LogDecoration) -> Result<Self> {
        let n = comb.component_count;
        if target.mu.len() != n || target.lambda.len() != n {
            return Err(Error::Unreachable(format!("target has wrong length for {n} components")));
        }
        let mut out = self.clone();
        for k in 0..n {
            let dm = nearest_int(target.mu[k] - self.mu(k))
                .ok_or_else(|| Error::Unreachable(format!("μ of component {k} is not congruent mod 1")))?;
            out.mu[k] = out.mu[k].shifted(dm);
        }
        let cur = out.lambda(comb);
        for k in 0..n {
            let dl = nearest_int(target.lambda[k] - cur[k])
                .ok_or_else(|| Error::Unreachable(format!("λ of component {k} is not congruent mod 1")))?;
            if dl == 0 {
                continue;
            }
            let site = (0..comb.segment_count()).find_map(|s| {
                let eta = comb.eta(s)?;
                (eta != 0 && comb.component_of(s) == k && !comb.is_closure_output(s)).then_some((s, eta))
            });
            let (s, eta) = site.ok_or_else(|| {
                Error::Unreachable(format!("component {k} has no over/under segment to carry a λ shift"))
            })?;
            out.shift_beta(comb, s, dl * eta);
        }
        let got = out.lambda(comb);
        for k in 0..n {
            if (got[k] - target.lambda[k]).norm() > INT_TOL {
                return Err(Error::Unreachable(format!("λ shift on component {k} missed its target")));
            }
        }
        Ok(out)
    }

    /// Flattening parameters; ζ¹ and κ only at generic crossings.
    pub fn flattening(&self, sc: &ShadowColoring, x: &Crossing, kappa_branch: i64) -> Result<CrossingFlattening> {
        let loc = self.local(&sc.comb, x);
        let kind = sc.classify(x).kind;
        let zeta0 = flattening_zeta0(x.sign, &loc);
        if kind.is_pinched() {
            if zeta0.iter().any(|z| nearest_int(*z).is_none()) {
                return Err(Error::LogData("pinched crossing with non-integer ζ⁰".into()));
            }
            return Ok(CrossingFlattening { zeta0, zeta1: None, kappa: None });
        }
        let kappa = lg(sc.crossing_data(x).k_const()) + kappa_branch as f64;
        Ok(flattening_from(x.sign, &loc, kappa))
    }

    /// Local standard log parameters at a pinched crossing:
    /// β₂′ = β₁, β₂ = β₁ + μ₁, β₁′ = β₁ + μ₂, and when E-nilpotent also
    /// α_W = α_N + μ₁, α_E = α_N + μ₂, α_S = α_N + μ₁ + μ₂.
    pub fn pinched_standard(&self, sc: &ShadowColoring, x: &Crossing) -> Result<PinchedStandard> {
        let kind = sc.classify(x).kind;
        if !kind.is_pinched() {
            return Err(Error::LogData("crossing is not pinched".into()));
        }
        let e_nilpotent = kind == CrossingKind::ENilpotent;
        let g = self.local(&sc.comb, x);
        let b1 = g.beta[0];
        let beta = [b1, b1 + g.mu1, b1 + g.mu2, b1];
        let an = g.alpha[0];
        let alpha = if e_nilpotent { [an, an + g.mu1, an + g.mu1 + g.mu2, an + g.mu2] } else { g.alpha };
        let shift = |new: [C64; 4], old: [C64; 4], what: &str| -> Result<[i64; 4]> {
            let mut out = [0; 4];
            for i in 0..4 {
                out[i] = nearest_int(new[i] - old[i])
                    .ok_or_else(|| Error::LogData(format!("standard {what} differs by a non-integer")))?;
            }
            Ok(out)
        };
        Ok(PinchedStandard {
            alpha_shift: shift(alpha, g.alpha, "α")?,
            beta_shift: shift(beta, g.beta, "β")?,
            local: LocalLogs { alpha, beta, ..g },
            e_nilpotent,
        })
    }

    /// A copy made standard at one pinched crossing.
    pub fn standard_at(&self, sc: &ShadowColoring, x: &Crossing) -> Result<Self> {
        let st = self.pinched_standard(sc, x)?;
        let mut out = self.clone();
        for (s, k) in [x.s1, x.s2, x.s1p, x.s2p].into_iter().zip(st.beta_shift) {
            out.shift_beta(&sc.comb, s, k);
        }
        for (j, k) in [x.n, x.w, x.s, x.e].into_iter().zip(st.alpha_shift) {
            out.alpha[j] = out.alpha[j].shifted(k);
        }
        Ok(out)
    }
}

pub fn flattening_zeta0(sign: i8, l: &LocalLogs) -> [C64; 4] {
    let e = sign as f64;
    let [b1, b2, b1p, b2p] = l.beta;
    let (m1, m2) = (l.mu1, l.mu2);
    [e * (b2p - b1), e * (b2 - b1 - m1), e * (b2 - b1p + m2 - m1), e * (b2p - b1p + m2)]
}

pub fn flattening_from(sign: i8, l: &LocalLogs, kappa: C64) -> CrossingFlattening {
    let e = sign as f64;
    let [an, aw, asth, ae] = l.alpha;
    let (m1, m2) = (l.mu1, l.mu2);
    CrossingFlattening {
        zeta0: flattening_zeta0(sign, l),
        zeta1: Some([kappa - an, kappa - aw + e * m1, kappa - asth + e * (m1 - m2), kappa - ae - e * m2]),
        kappa: Some(kappa),
    }
}

/// Whether a log value reproduces its base parameter.
pub fn exp_matches(log: C64, x: C64) -> bool {
    rel(e2pi(log), x) < EXP_TOL
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::c;

    #[test]
    fn lift_examples() {
        assert_eq!(LogValue::principal_of(c(1.0, 0.0)).value(), c(0.0, 0.0));
        assert!((LogValue::principal_of(c(-1.0, 0.0)).value() - 0.5).norm() < 1e-15);
        assert!((LogValue::principal_of(c(-1.0, 0.0)).shifted(3).value() - 3.5).norm() < 1e-15);
    }

    #[test]
    fn with_value_keeps_exact_input() {
        let v = LogValue::with_value(c(-0.5, 0.0), c(-1.0, 0.0)).unwrap();
        assert_eq!(v.value(), c(-0.5, 0.0));
        assert_eq!(v.offset, -1);
        assert!(LogValue::with_value(c(0.25, 0.0), c(-1.0, 0.0)).is_err());
    }
}
