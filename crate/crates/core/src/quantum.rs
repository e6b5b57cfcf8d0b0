//! The N-dimensional modules attached to log-colored segments, the Hopf
//! algebra actions on them, and the tensors assigned to crossings, cups and
//! caps.
//!
//! A segment with label (α_up, α_dn, β, μ) carries basis vectors v̂_n,
//! n ∈ ℤ/N, where (α_up, α_dn) are the α of the regions to the left and to
//! the right of the strand's direction.

use crate::diagram::{Combinatorics, Crossing};
use crate::dilog::{lifted_dilog, omega_factorial, CoverPoint, QlfTable, RootOfUnity};
use crate::error::{Error, Result};
use crate::logdata::{nearest_int, CrossingFlattening, LocalLogs, LogColoring, SegmentLabel};
use crate::num::{c, inverse, kron, md, omega, omega_r, C64, ONE, ZERO};
use crate::slcoloring::{CrossingKind, ShadowColoring};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

pub type Matrix = DMatrix<C64>;

/// Dense four-index tensor over ℤ/N, row-major in (i, j, k, l).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tensor4 {
    pub n: usize,
    pub data: Vec<C64>,
}

impl Tensor4 {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![ZERO; n.pow(4)] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize, usize) -> C64) -> Self {
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        t.data[((i * n + j) * n + k) * n + l] = f(i, j, k, l);
                    }
                }
            }
        }
        t
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> C64 {
        let n = self.n;
        self.data[((i * n + j) * n + k) * n + l]
    }

    /// Crossing tensors R[n₁,n₂,n₁′,n₂′] as the operator
    /// V₁⊗V₂ → V₂′⊗V₁′: M[n₂′N + n₁′, n₁N + n₂].
    pub fn as_matrix(&self) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zeros(n * n, n * n);
        for (idx, v) in self.data.iter().enumerate() {
            let (n1, n2, n1p, n2p) = (idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n);
            m[(n2p * n + n1p, n1 * n + n2)] = *v;
        }
        m
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let n = (m.nrows() as f64).sqrt().round() as usize;
        Self::from_fn(n, |n1, n2, n1p, n2p| m[(n2p * n + n1p, n1 * n + n2)])
    }

    /// out[idx permuted] with out[p[0],p[1],p[2],p[3]] = self[0,1,2,3]
    /// read positionally: axis k of `self` lands on axis `to[k]`.
    pub fn moved(&self, to: [usize; 4]) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for (idx, v) in self.data.iter().enumerate() {
            let a = [idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n];
            let mut b = [0; 4];
            for k in 0..4 {
                b[to[k]] = a[k];
            }
            out.data[((b[0] * n + b[1]) * n + b[2]) * n + b[3]] = *v;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, s: C64) -> Self {
        Self { n: self.n, data: self.data.iter().map(|z| z * s).collect() }
    }

    /// Debug dump as nested arrays of [re, im].
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.n;
        let v: Vec<Vec<Vec<Vec<[f64; 2]>>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| (0..n).map(|l| { let z = self.get(i, j, k, l); [z.re, z.im] }).collect()).collect())
                    .collect()
            })
            .collect();
        serde_json::json!(v)
    }
}

/// Module basis context: the segment label and whether the module is the
/// dual one.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleContext {
    pub label: SegmentLabel,
    pub dual: bool,
    pub ctx: RootOfUnity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    X,
    Y,
    Z,
    K,
    KInv,
    E,
    F,
}

impl ModuleContext {
    pub fn new(label: SegmentLabel, dual: bool, ctx: RootOfUnity) -> Self {
        Self { label, dual, ctx }
    }

    fn w(&self, x: C64) -> C64 {
        omega(x, self.ctx.n)
    }

    /// Matrix of a generator in the v̂ (or v̂*) basis. Columns are inputs.
    pub fn action(&self, g: Generator) -> Matrix {
        let n = self.ctx.n;
        let l = self.label;
        let d = l.alpha_right - l.alpha_left;
        let nf = |k: usize| c(k as f64, 0.0);
        let x = || {
            let mut m = Matrix::zeros(n, n);
            let v = if self.dual { self.w(-d) } else { self.w(d) };
            for k in 0..n {
                m[((k + n - 1) % n, k)] = v;
            }
            m
        };
        let y = || {
            Matrix::from_diagonal(&nalgebra::DVector::from_fn(n, |k, _| {
                if self.dual {
                    self.w(l.beta + nf(k) + l.mu + 1.0)
                } else {
                    self.w(l.beta + nf(k))
                }
            }))
        };
        let z = if self.dual { self.w(-l.mu - 1.0) } else { self.w(l.mu) };
        let id = Matrix::identity(n, n);
        match g {
            Generator::X | Generator::K => x(),
            Generator::KInv => inverse(&x()).expect("x is invertible"),
            Generator::Y => y(),
            Generator::Z => id * z,
            Generator::E => (y() * (id * z - x())) * self.ctx.xi(),
            Generator::F => {
                let yi = inverse(&y()).expect("y is invertible");
                let x_inv = inverse(&x()).expect("x is invertible");
                yi * (&id - x_inv / z)
            }
        }
    }
}

/// Δ(g) acting on A ⊗ B: Δ(K) = K⊗K, Δ(E) = E⊗K + 1⊗E, Δ(F) = F⊗1 + K⁻¹⊗F.
pub fn coproduct(g: Generator, a: &ModuleContext, b: &ModuleContext) -> Matrix {
    let n = a.ctx.n;
    let id = Matrix::identity(n, n);
    match g {
        Generator::K => kron(&a.action(Generator::K), &b.action(Generator::K)),
        Generator::E => kron(&a.action(Generator::E), &b.action(Generator::K)) + kron(&id, &b.action(Generator::E)),
        Generator::F => kron(&a.action(Generator::F), &id) + kron(&a.action(Generator::KInv), &b.action(Generator::F)),
        _ => kron(&a.action(g), &b.action(g)),
    }
}

/// Integer change of log data: (k_up, k_dn, l, p) shifts α_up, α_dn, β by
/// integers and μ by N·p.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelShift {
    pub k_up: i64,
    pub k_dn: i64,
    pub l: i64,
    pub p: i64,
}

/// C with (coefficients in the old basis) = C·(coefficients in the new basis).
pub fn change_matrix(label: &SegmentLabel, sh: LabelShift, dual: bool, n: usize) -> Matrix {
    let s = if dual { -1.0 } else { 1.0 };
    let (kup, kdn, l) = (sh.k_up as f64, sh.k_dn as f64, sh.l as f64);
    let a = Matrix::from_diagonal(&nalgebra::DVector::from_fn(n, |k, _| {
        omega(s * (0.5 * ((kdn - kup) * label.beta + kdn * label.mu)) + s * k as f64 * (kdn - kup), n)
    }));
    let (au, ad) = (label.alpha_left + kup, label.alpha_right + kdn);
    let mut b = Matrix::zeros(n, n);
    let bv = omega(-s * 0.5 * l * (ad - au), n);
    for k in 0..n {
        b[(md(k as i64 + sh.l, n), k)] = bv;
    }
    let m = omega(-s * 0.5 * (n as f64) * (sh.p as f64) * ad, n);
    a * b * m
}

/// Basis change between two contexts lifting the same coloring.
pub fn basis_change(from: &ModuleContext, to: &ModuleContext) -> Result<Matrix> {
    if from.dual != to.dual || from.ctx != to.ctx {
        return Err(Error::LogData("contexts of different modules".into()));
    }
    let n = from.ctx.n as i64;
    let int = |a: C64, b: C64, what: &str| {
        nearest_int(b - a).ok_or_else(|| Error::LogData(format!("{what} differ by a non-integer")))
    };
    let (f, t) = (from.label, to.label);
    let dmu = int(f.mu, t.mu, "μ")?;
    if dmu % n != 0 {
        return Err(Error::LogData("μ shift is not a multiple of N".into()));
    }
    let sh = LabelShift {
        k_up: int(f.alpha_left, t.alpha_left, "α_up")?,
        k_dn: int(f.alpha_right, t.alpha_right, "α_dn")?,
        l: int(f.beta, t.beta, "β")?,
        p: dmu / n,
    };
    Ok(change_matrix(&f, sh, from.dual, from.ctx.n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pivotal {
    CoevUp,
    CoevDown,
    EvUp,
    EvDown,
}

/// Cup and cap tensors T[top, bottom] in the v̂/v̂* bases of the arc with
/// the given label. coevUp/evDown have a rightward top arm.
pub fn ev_coev(kind: Pivotal, label: &SegmentLabel, n: usize) -> Matrix {
    let d = label.alpha_right - label.alpha_left;
    let nm1 = (n - 1) as f64;
    let mut t = Matrix::zeros(n, n);
    for j in 0..n {
        match kind {
            Pivotal::CoevUp | Pivotal::EvUp => t[(j, j)] = ONE,
            Pivotal::CoevDown => t[(j, (j + 1) % n)] = omega(d * nm1, n),
            Pivotal::EvDown => t[(j, (j + n - 1) % n)] = omega(-d * nm1, n),
        }
    }
    t
}

/// Generic crossing tensor from a flattening.
pub fn generic_tensor(ctx: RootOfUnity, sign: i8, fl: &CrossingFlattening) -> Result<Tensor4> {
    let n = ctx.n;
    let z1 = fl.zeta1.ok_or_else(|| Error::LogData("generic tensor needs ζ¹".into()))?;
    let mut tables = Vec::with_capacity(4);
    for k in 0..4 {
        tables.push(QlfTable::new(ctx, CoverPoint { zeta0: fl.zeta0[k], zeta1: z1[k] })?);
    }
    let q = |corner: usize, k: i64| tables[corner].get(k);
    let s = |corner: usize| fl.zeta0[corner] + z1[corner];
    let (cn, cw, cs, ce) = (0, 1, 2, 3);
    let nm1 = (n - 1) as f64;
    let nn = n as f64;
    let t = if sign > 0 {
        let pre = omega(-nm1 * s(cw), n) / nn;
        Tensor4::from_fn(n, |n1, n2, n1p, n2p| {
            let (n1, n2, n1p, n2p) = (n1 as i64, n2 as i64, n1p as i64, n2p as i64);
            pre * omega_r((n2 - n1) as f64, n) * q(cn, n2p - n1) * q(cs, n2 - n1p)
                / (q(cw, n2 - n1 - 1) * q(ce, n2p - n1p))
        })
    } else {
        let pre = omega(nm1 * (s(ce) - s(cs) - s(cn)), n) / nn;
        Tensor4::from_fn(n, |n1, n2, n1p, n2p| {
            let (n1, n2, n1p, n2p) = (n1 as i64, n2 as i64, n1p as i64, n2p as i64);
            pre * omega_r((n1 - n2) as f64, n) * q(cw, n1 - n2) * q(ce, n1p - n2p - 1)
                / (q(cn, n1 - n2p - 1) * q(cs, n1p - n2 - 1))
        })
    };
    if t.data.iter().any(|z| !z.is_finite()) {
        return Err(Error::Pole("non-finite crossing tensor entry".into()));
    }
    Ok(t)
}

fn chi_bar(k: i64, n: usize) -> i32 {
    i32::from((0..n as i64).contains(&k))
}

/// Positive pinched crossing tensor in a standard log-coloring. `a` are the
/// region parameters at N, W, S, E.
pub fn pinched_tensor(ctx: RootOfUnity, l: &LocalLogs, a: [C64; 4], m1: C64, m2: C64) -> Tensor4 {
    let n = ctx.n;
    let [an, aw, asth, ae] = a;
    let (a1, a2, a2p, a1p) = (aw / an, asth / aw, ae / an, asth / ae);
    let [al_n, al_w, al_s, al_e] = l.alpha;
    let (aa1, aa2, aa2p, aa1p) = (al_w - al_n, al_s - al_w, al_e - al_n, al_s - al_e);
    let (mu1, mu2) = (l.mu1, l.mu2);
    let poch: Vec<C64> = (0..n).map(|k| omega_factorial(k, n)).collect();
    let p = |k: i64| poch[md(k, n)];
    let r = |k: i64| md(k, n) as i64;
    let nn = n as f64;
    Tensor4::from_fn(n, |n1, n2, n1p, n2p| {
        let (n1, n2, n1p, n2p) = (n1 as i64, n2 as i64, n1p as i64, n2p as i64);
        let theta = chi_bar(r(n1 - n2) + r(n1p - n2p - 1), n) * chi_bar(r(n2p - n1) + r(n2 - n1p), n);
        if theta == 0 {
            return ZERO;
        }
        let amp = (a1p / a1)
            * (a1 / m1).powi(2 - chi_bar(n1 - n2, n) - chi_bar(n2 - n1p, n))
            * (a2 * m2).powi(-chi_bar(n2 - n1p, n))
            * (a2p * m2).powi(1 - chi_bar(n1p - n2p - 1, n));
        let f = |k: i64| k as f64;
        let ex = f(n1) * (aa1 - mu1 - 1.0) + f(n2) * (aa2 + mu2 + 1.0) - f(n1p) * (aa1p - mu1) - f(n2p) * (aa2p + mu2);
        amp * omega(ex, n) * p(n2p - n1p) * p(n2 - n1 - 1) / (p(n2p - n1) * p(n2 - n1p)) / nn
    })
}

/// Classification and provenance of a crossing tensor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingTensor {
    pub tensor: Tensor4,
    pub sign: i8,
    pub kind: CrossingKind,
    pub flattening: Option<CrossingFlattening>,
}

/// The same crossing read as a positive one with the strands exchanged.
fn matched_positive(x: &Crossing) -> Crossing {
    Crossing { sign: 1, s1: x.s2p, s2: x.s1p, s2p: x.s1, s1p: x.s2, w: x.e, e: x.w, ..x.clone() }
}

fn pinched_positive_global(ctx: RootOfUnity, sc: &ShadowColoring, lc: &LogColoring, x: &Crossing) -> Result<Matrix> {
    let n = ctx.n;
    let st = lc.pinched_standard(sc, x)?;
    let d = sc.crossing_data(x);
    let r = pinched_tensor(ctx, &st.local, d.a, d.m1, d.m2).as_matrix();
    let g = lc.local(&sc.comb, x);
    let [sn, sw, ss, se] = st.alpha_shift;
    let [sb1, sb2, sb1p, sb2p] = st.beta_shift;
    let [an, aw, asth, ae] = g.alpha;
    let [b1, b2, b1p, b2p] = g.beta;
    let lab = |up: C64, dn: C64, beta: C64, mu: C64| SegmentLabel { alpha_left: up, alpha_right: dn, beta, mu };
    let sh = |k_up, k_dn, l| LabelShift { k_up, k_dn, l, p: 0 };
    let c1 = change_matrix(&lab(an, aw, b1, g.mu1), sh(sn, sw, sb1), false, n);
    let c2 = change_matrix(&lab(aw, asth, b2, g.mu2), sh(sw, ss, sb2), false, n);
    let c2p = change_matrix(&lab(an, ae, b2p, g.mu2), sh(sn, se, sb2p), false, n);
    let c1p = change_matrix(&lab(ae, asth, b1p, g.mu1), sh(se, ss, sb1p), false, n);
    let dl1 = 0.5 * (sb1p - sb1) as f64;
    let dl2 = 0.5 * (sb2 - sb2p) as f64;
    let inv_in = inverse(&kron(&c1, &c2)).ok_or_else(|| Error::LogData("singular basis change".into()))?;
    Ok(kron(&c2p, &c1p) * r * inv_in * omega(g.mu1 * dl1 + g.mu2 * dl2, n))
}

/// Left-to-right crossing tensor in the global log-coloring.
pub fn crossing_tensor(
    ctx: RootOfUnity,
    sc: &ShadowColoring,
    lc: &LogColoring,
    x: &Crossing,
    kappa_branch: i64,
) -> Result<CrossingTensor> {
    let kind = sc.classify(x).kind;
    if !kind.is_pinched() {
        let fl = lc.flattening(sc, x, kappa_branch)?;
        let tensor = generic_tensor(ctx, x.sign, &fl)?;
        return Ok(CrossingTensor { tensor, sign: x.sign, kind, flattening: Some(fl) });
    }
    let m = if x.sign > 0 {
        pinched_positive_global(ctx, sc, lc, x)?
    } else {
        let p = pinched_positive_global(ctx, sc, lc, &matched_positive(x))?;
        inverse(&p).ok_or_else(|| Error::Pole("singular pinched tensor".into()))?
    };
    Ok(CrossingTensor { tensor: Tensor4::from_matrix(&m), sign: x.sign, kind, flattening: None })
}

/// Tensor with axes (inputs top to bottom, outputs top to bottom) for the
/// crossing's orientation pattern, built from the left-to-right tensor by
/// bending strands with the pivotal maps.
pub fn position_tensor(r: &Tensor4, x: &Crossing, lc: &LogColoring) -> Tensor4 {
    let n = r.n;
    match x.pattern {
        (1, 1) => r.moved([0, 1, 3, 2]),
        (-1, -1) => r.moved([3, 2, 0, 1]),
        (-1, 1) => r.moved([1, 3, 2, 0]),
        _ => {
            let nm1 = (n - 1) as f64;
            let f = omega(nm1 * (lc.alpha(x.w) - lc.alpha(x.n)), n) * omega(-nm1 * (lc.alpha(x.s) - lc.alpha(x.e)), n);
            Tensor4::from_fn(n, |n2, b, j, n2p| f * r.get((j + 1) % n, n2, (b + 1) % n, n2p))
        }
    }
}

/// Closed-form determinant of a generic crossing's N²×N² matrix.
pub fn crossing_determinant(ctx: RootOfUnity, sign: i8, fl: &CrossingFlattening, l: &LocalLogs) -> Result<C64> {
    let n = ctx.n;
    let nf = n as f64;
    let z1 = fl.zeta1.ok_or_else(|| Error::LogData("determinant needs ζ¹".into()))?;
    let lh = |k: usize| lifted_dilog(CoverPoint { zeta0: fl.zeta0[k], zeta1: z1[k] });
    let e = sign as f64;
    let dil = (lh(0)? + lh(2)? - lh(1)? - lh(3)?) * e;
    let gamma = l.alpha[1] - l.alpha[3];
    let [b1, b2, b1p, b2p] = l.beta;
    let lam = (b2 - b1 + b1p - b2p) * (e / 2.0);
    let d0 = crate::dilog::d_function(ctx, ZERO)?;
    let base = (nf / (d0 * d0)).powi(sign as i32 * (n * n) as i32);
    let binom = nf * (nf - 1.0) / 2.0;
    Ok(base * (-dil * nf + crate::num::two_pi_i() * binom * (gamma - lam * 2.0)).exp())
}

/// F[k][n] = ω^{nk}.
pub fn fourier(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |k, j| omega_r((j * k) as f64, n))
}

/// Conjugates a crossing tensor into the weight basis: (F⊗F)·M·(F⊗F)⁻¹.
pub fn to_weight_basis(t: &Tensor4) -> Tensor4 {
    let f = fourier(t.n);
    let ff = kron(&f, &f);
    let ffi = inverse(&ff).expect("Fourier matrix is invertible");
    Tensor4::from_matrix(&(&ff * t.as_matrix() * ffi))
}

/// Whether μ₁ = μ₂ is one of the colored-Jones values (N−1)/2, −1/2.
pub fn is_colored_jones_meridian(n: usize, mu1: C64, mu2: C64) -> bool {
    let ok = |m: C64| (m - (n as f64 - 1.0) / 2.0).norm() < 1e-12 || (m + 0.5).norm() < 1e-12;
    ok(mu1) && (mu1 - mu2).norm() < 1e-12
}

/// Colored-Jones R-matrix in the weight basis at μ₁ = μ₂ = μ:
/// δ_{n₁+n₂, n₁′+n₂′}·ω^{n₁′(n₂−2μ)}·(ω;ω)_{n₂′}(ω;ω)_{n₁}/((ω;ω)_{n₂}(ω;ω)_{n₂′−n₂}(ω;ω)_{n₁′}),
/// zero when n₂′ < n₂.
pub fn weight_basis_r(ctx: RootOfUnity, mu1: C64, mu2: C64) -> Result<Tensor4> {
    let n = ctx.n;
    if !is_colored_jones_meridian(n, mu1, mu2) {
        return Err(Error::Invalid("weight-basis R-matrix needs μ₁ = μ₂ ∈ {(N−1)/2, −1/2}".into()));
    }
    let poch: Vec<C64> = (0..n).map(|k| omega_factorial(k, n)).collect();
    Ok(Tensor4::from_fn(n, |n1, n2, n1p, n2p| {
        if n1 + n2 != n1p + n2p || n2p < n2 {
            return ZERO;
        }
        omega(c(n1p as f64, 0.0) * (c(n2 as f64, 0.0) - mu2 * 2.0), n) * poch[n2p] * poch[n1]
            / (poch[n2] * poch[n2p - n2] * poch[n1p])
    }))
}

/// Module context of a segment in the global log-coloring.
pub fn segment_context(ctx: RootOfUnity, comb: &Combinatorics, lc: &LogColoring, s: usize) -> ModuleContext {
    ModuleContext::new(lc.label(comb, s), false, ctx)
}

/// max over g ∈ {K, E, F} of |R·Δ(g)_in − Δ(g)_out·R|.
pub fn intertwining_residual(r: &Tensor4, ins: [&ModuleContext; 2], outs: [&ModuleContext; 2]) -> f64 {
    let m = r.as_matrix();
    [Generator::K, Generator::E, Generator::F]
        .into_iter()
        .map(|g| crate::num::max_abs(&(&m * coproduct(g, ins[0], ins[1]) - coproduct(g, outs[0], outs[1]) * &m)))
        .fold(0.0, f64::max)
}
