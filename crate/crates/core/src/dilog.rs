//! Special functions: the classical and lifted dilogarithm, Faddeev's
//! noncompact quantum dilogarithm at b = √N, the cyclic quantum dilogarithm
//! and the q-Pochhammer symbol.
//!
//! Logarithms are principal with `Im log ∈ (−π, π]`.

use crate::error::{Error, Result};
use crate::num::{c, e2pi, omega, two_pi_i, C64, I, ONE, ZERO};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// The level N together with ω = e^{2πi/N} and ξ = e^{πi/N}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub n: usize,
}

impl RootOfUnity {
    pub const MAX_LEVEL: usize = 16;

    pub fn new(n: usize) -> Result<Self> {
        if !(2..=Self::MAX_LEVEL).contains(&n) {
            return Err(Error::Invalid(format!("level N = {n} outside 2..=16")));
        }
        Ok(Self { n })
    }

    pub fn omega(&self) -> C64 {
        omega(ONE, self.n)
    }

    pub fn xi(&self) -> C64 {
        (I * PI / self.n as f64).exp()
    }

    /// ω^x
    pub fn pow(&self, x: C64) -> C64 {
        omega(x, self.n)
    }
}

/// Even Bernoulli numbers B_2, B_4, …, B_30.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Bernoulli series in u = −log(1 − z), accurate for |u| well inside 2π.
fn li2_series(z: C64) -> C64 {
    let u = -(ONE - z).ln();
    let u2 = u * u;
    let mut sum = u - u2 / 4.0;
    let mut pow = u; // u^{2k+1}
    let mut fact = 1.0; // (2k+1)!
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let m = 2 * k + 3;
        pow *= u2;
        fact *= ((m - 1) * m) as f64;
        let term = pow * (*b / fact);
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// Principal dilogarithm Li₂(z) = −∫₀ᶻ log(1−t)/t dt, cut along (1, ∞).
pub fn li2(z: C64) -> Result<C64> {
    if z.im == 0.0 && z.re > 1.0 {
        return Err(Error::Domain(format!("Li2 on its branch cut at {}", z.re)));
    }
    Ok(li2_unchecked(z))
}

fn li2_unchecked(z: C64) -> C64 {
    let pi2_6 = PI * PI / 6.0;
    if z == ZERO {
        return ZERO;
    }
    if z == ONE {
        return c(pi2_6, 0.0);
    }
    if z.norm() > 1.0 {
        let l = (-z).ln();
        return -pi2_6 - l * l / 2.0 - li2_unchecked(ONE / z);
    }
    if z.re > 0.5 {
        return pi2_6 - z.ln() * (ONE - z).ln() - li2_series(ONE - z);
    }
    li2_series(z)
}

/// Boundary value Li₂(x − i0) for real x > 1.
fn li2_below_cut(x: f64) -> C64 {
    let l = x.ln();
    let re = PI * PI / 3.0 - l * l / 2.0 - li2_unchecked(c(1.0 / x, 0.0)).re;
    c(re, -PI * l)
}

/// A point (ζ⁰, ζ¹) of the cover Σ: e^{2πiζ⁰} + e^{−2πiζ¹} = 1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverPoint {
    pub zeta0: C64,
    pub zeta1: C64,
}

impl CoverPoint {
    pub const TOL: f64 = 1e-9;

    pub fn new(zeta0: C64, zeta1: C64) -> Result<Self> {
        let p = Self { zeta0, zeta1 };
        let r = p.cover_residual();
        if r > Self::TOL {
            return Err(Error::Domain(format!("not on the cover (residual {r:e})")));
        }
        Ok(p)
    }

    /// The lift over ζ⁰ with ζ¹ = −lg(1 − e^{2πiζ⁰}) + k.
    pub fn over(zeta0: C64, k: i64) -> Self {
        let e = e2pi(zeta0);
        let zeta1 = -(ONE - e).ln() / two_pi_i() + k as f64;
        Self { zeta0, zeta1 }
    }

    pub fn cover_residual(&self) -> f64 {
        let a = e2pi(self.zeta0);
        let b = e2pi(-self.zeta1);
        (a + b - ONE).norm() / (1.0 + a.norm().max(b.norm()))
    }
}

/// Lifted dilogarithm
/// L̂(ζ⁰,ζ¹) = Li₂(e^{2πiζ⁰})/(2πi) + πiζ⁰ζ¹ + ζ⁰·log(1 − e^{2πiζ⁰}) + πi/12.
///
/// Points whose e^{2πiζ⁰} lies on the real ray (1, ∞) are evaluated from
/// below the cut for both Li₂ and the logarithm, which keeps e^{L̂} continuous.
pub fn lifted_dilog(p: CoverPoint) -> Result<C64> {
    let r = p.cover_residual();
    if r > CoverPoint::TOL {
        return Err(Error::Domain(format!("not on the cover (residual {r:e})")));
    }
    let e = e2pi(p.zeta0);
    let (li, lg1) = if e.re > 1.0 && e.im.abs() <= 1e-14 * e.re {
        (li2_below_cut(e.re), c((e.re - 1.0).ln(), PI))
    } else {
        (li2_unchecked(e), (ONE - e).ln())
    };
    Ok(li / two_pi_i() + I * PI * p.zeta0 * p.zeta1 + p.zeta0 * lg1 + I * PI / 12.0)
}

/// q-Pochhammer symbol (a; q)_k with the usual extension to k < 0.
pub fn q_pochhammer(a: C64, q: C64, k: i64) -> Result<C64> {
    if k >= 0 {
        let mut p = ONE;
        let mut t = a;
        for _ in 0..k {
            p *= ONE - t;
            t *= q;
        }
        return Ok(p);
    }
    let mut p = ONE;
    let qi = ONE / q;
    let mut t = a * qi;
    for _ in 0..(-k) {
        p *= ONE - t;
        t *= qi;
    }
    if p.norm() < 1e-300 {
        return Err(Error::Domain("vanishing factor in (a;q)_k for k < 0".into()));
    }
    Ok(ONE / p)
}

/// (ω;ω)_k for k ≥ 0.
pub fn omega_factorial(k: usize, n: usize) -> C64 {
    (1..=k).fold(ONE, |p, j| p * (ONE - omega(c(j as f64, 0.0), n)))
}

/// Faddeev's Φ_b(z) by the trapezoid rule on Im w = ε.
///
/// The integrand is analytic in the strip 0 < Im w < π/max(b, 1/b), so the
/// trapezoid rule converges exponentially in the step; ε sits inside that
/// strip and the step is tied to the distance to the nearest pole line.
pub fn faddeev(z: C64, b: f64) -> C64 {
    let bmax = b.max(1.0 / b);
    let pole = PI / bmax;
    let eps = 0.5_f64.min(pole / 2.0);
    let d = eps.min(pole - eps);
    let h = 2.0 * PI * d / 38.0;
    let f = |t: f64| -> C64 {
        let w = c(t, eps);
        (-2.0 * I * z * w).exp() / (4.0 * (w * b).sinh() * (w / b).sinh() * w)
    };
    let mut sum = f(0.0);
    let mut scale = sum.norm();
    for dir in [1.0, -1.0] {
        let mut quiet = 0;
        let mut k = 1;
        loop {
            let term = f(dir * k as f64 * h);
            sum += term;
            scale = scale.max(term.norm());
            if term.norm() < 1e-18 * scale {
                quiet += 1;
                if quiet >= 4 {
                    break;
                }
            } else {
                quiet = 0;
            }
            k += 1;
            if k > 200_000 {
                break;
            }
        }
    }
    (sum * h).exp()
}

/// The normalized quantum dilogarithm Φ_N(ζ) = Φ_{√N}(iζ/√N − c_{√N} + i/√N).
///
/// Quadrature is used on the band |Re ζ − (N−1)/2| ≤ ½; other points are
/// reached by the recurrence Φ_N(ζ+1) = Φ_N(ζ)/(1 − ω^{ζ+1}).
pub fn phi_n(ctx: RootOfUnity, zeta: C64) -> Result<C64> {
    let n = ctx.n;
    let center = (n as f64 - 1.0) / 2.0;
    let k = (zeta.re - center + 0.5).floor() as i64;
    let z0 = zeta - k as f64;
    let b = (n as f64).sqrt();
    let mut val = faddeev(I / b * (z0 - center), b);
    if k > 0 {
        for j in 1..=k {
            let f = ONE - omega(z0 + j as f64, n);
            if f.norm() < 1e-8 {
                return Err(Error::Pole(format!("{zeta}")));
            }
            val /= f;
        }
    } else {
        for j in 0..(-k) {
            val *= ONE - omega(z0 - j as f64, n);
        }
    }
    if !val.is_finite() {
        return Err(Error::Pole(format!("{zeta}")));
    }
    Ok(val)
}

/// Cyclic quantum dilogarithm ω^{−ζ⁰ζ¹/2}·ω^{−nζ¹}·Φ_N(ζ⁰+n).
pub fn qlf(ctx: RootOfUnity, p: CoverPoint, n: i64) -> Result<C64> {
    let nn = ctx.n;
    Ok(omega(-p.zeta0 * p.zeta1 / 2.0, nn)
        * omega(-(n as f64) * p.zeta1, nn)
        * phi_n(ctx, p.zeta0 + n as f64)?)
}

/// All N values of the cyclic quantum dilogarithm at one cover point.
///
/// One quadrature for n = 0, the rest from
/// qlf(n) = qlf(0)·ω^{−nζ¹}/(ω^{ζ⁰+1};ω)_n; periodic in n mod N.
#[derive(Clone, Debug)]
pub struct QlfTable {
    n: usize,
    vals: Vec<C64>,
}

impl QlfTable {
    pub fn new(ctx: RootOfUnity, p: CoverPoint) -> Result<Self> {
        let n = ctx.n;
        let q0 = qlf(ctx, p, 0)?;
        let mut vals = Vec::with_capacity(n);
        let mut poch = ONE;
        for k in 0..n {
            if k > 0 {
                let f = ONE - omega(p.zeta0 + k as f64, n);
                if f.norm() < 1e-8 {
                    return Err(Error::Pole(format!("qlf at ζ⁰ = {}", p.zeta0)));
                }
                poch *= f;
            }
            vals.push(q0 * omega(-(k as f64) * p.zeta1, n) / poch);
        }
        Ok(Self { n, vals })
    }

    pub fn get(&self, k: i64) -> C64 {
        self.vals[k.rem_euclid(self.n as i64) as usize]
    }
}

/// D(ζ) = exp((1/N)·Σ_{k=1}^{N−1} k·log(1 − ω^{ζ+k})).
pub fn d_function(ctx: RootOfUnity, zeta: C64) -> Result<C64> {
    let n = ctx.n;
    let mut s = ZERO;
    for k in 1..n {
        let f = ONE - omega(zeta + k as f64, n);
        if f.norm() < 1e-12 {
            return Err(Error::Domain(format!("D has a log singularity at {zeta}")));
        }
        s += k as f64 * f.ln();
    }
    Ok((s / n as f64).exp())
}

/// Q_N(ζ) = exp(−(πi/N)[ζ − (N−1)/2]²).
pub fn q_function(ctx: RootOfUnity, zeta: C64) -> C64 {
    let n = ctx.n as f64;
    let s = zeta - (n - 1.0) / 2.0;
    (-I * PI / n * s * s).exp()
}

/// Closed form of qlf(ζ⁰, ζ¹, 0) through the lifted dilogarithm and D.
///
/// Carries the constant e^{πi/(12N)} that the Faddeev normalization of Φ_N
/// requires.
pub fn qlf_exact(ctx: RootOfUnity, p: CoverPoint) -> Result<C64> {
    let n = ctx.n;
    let nf = n as f64;
    let l = lifted_dilog(p)?;
    let num = ONE - omega(nf * p.zeta0, n);
    let den = ONE - omega(p.zeta0, n);
    Ok((I * PI / (12.0 * nf)).exp() * (-l / nf).exp() * num / den / d_function(ctx, p.zeta0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn li2_classical_values() {
        assert_eq!(li2(ZERO).unwrap(), ZERO);
        assert_relative_eq!(li2(c(-1.0, 0.0)).unwrap().re, -PI * PI / 12.0, epsilon = 1e-14);
        let half = PI * PI / 12.0 - 2f64.ln().powi(2) / 2.0;
        assert_relative_eq!(li2(c(0.5, 0.0)).unwrap().re, half, epsilon = 1e-14);
        assert!(li2(c(2.0, 0.0)).is_err());
    }

    #[test]
    fn li2_matches_power_series_inside_disk() {
        for z in [c(0.3, 0.2), c(-0.5, 0.4), c(0.1, -0.6)] {
            let mut s = ZERO;
            let mut p = ONE;
            for k in 1..400 {
                p *= z;
                s += p / (k * k) as f64;
            }
            assert!(close(li2(z).unwrap(), s, 1e-13));
        }
    }

    #[test]
    fn li2_is_continuous_up_to_the_cut_from_below() {
        let x = 3.0;
        let near = li2(c(x, -1e-12)).unwrap();
        assert!(close(near, li2_below_cut(x), 1e-9));
    }

    #[test]
    fn lifted_dilog_at_half() {
        let p = CoverPoint::new(c(0.5, 0.0), c(0.0, 2f64.ln() / (2.0 * PI))).unwrap();
        let v = lifted_dilog(p).unwrap();
        assert!(close(v, c(2f64.ln() / 4.0, PI / 8.0), 1e-13));
    }

    #[test]
    fn pochhammer_examples() {
        let q = c(0.3, 0.9);
        assert_eq!(q_pochhammer(c(0.7, 0.1), q, 0).unwrap(), ONE);
        assert_eq!(q_pochhammer(ONE, q, 3).unwrap(), ZERO);
        let w = RootOfUnity::new(2).unwrap().omega();
        assert!(close(q_pochhammer(w, w, 1).unwrap(), c(2.0, 0.0), 1e-15));
        let a = c(0.4, -0.2);
        let prod = q_pochhammer(a, q, -2).unwrap() * q_pochhammer(a / (q * q), q, 2).unwrap();
        assert!(close(prod, ONE, 1e-13));
    }

    #[test]
    fn aux_functions() {
        for n in 2..6 {
            let ctx = RootOfUnity::new(n).unwrap();
            assert!(close(q_function(ctx, c((n as f64 - 1.0) / 2.0, 0.0)), ONE, 1e-15));
        }
        let ctx = RootOfUnity::new(2).unwrap();
        assert!(close(d_function(ctx, ZERO).unwrap(), c(2f64.sqrt(), 0.0), 1e-14));
    }

    #[test]
    fn phi_recurrence_across_band_edges() {
        for n in [2, 3, 5, 8] {
            let ctx = RootOfUnity::new(n).unwrap();
            let center = (n as f64 - 1.0) / 2.0;
            for z in [c(center + 0.45, 0.1), c(center - 0.55, -0.2), c(center + 1.3, 0.3)] {
                let a = phi_n(ctx, z + 1.0).unwrap();
                let b = phi_n(ctx, z).unwrap() / (ONE - ctx.pow(z + 1.0));
                assert!(close(a, b, 1e-10), "N={n} z={z}");
            }
        }
    }

    #[test]
    fn qlf_exact_agrees_with_quadrature() {
        for n in [2, 3, 4, 7] {
            let ctx = RootOfUnity::new(n).unwrap();
            for (z0, k) in [(c(0.31, 0.17), 0), (c(-1.2, -0.3), 1), (c(2.4, 0.05), -2)] {
                let p = CoverPoint::over(z0, k);
                let a = qlf(ctx, p, 0).unwrap();
                let b = qlf_exact(ctx, p).unwrap();
                assert!(close(a, b, 1e-10), "N={n}: {a} vs {b}");
            }
        }
    }
}
