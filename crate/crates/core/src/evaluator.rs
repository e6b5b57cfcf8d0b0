//! Tensor-network evaluation of colored, log-decorated diagrams: operators
//! of tangles, scalar link invariants, the ψ normalization, modified
//! dimensions and the classical Chern–Simons invariant.

use crate::diagram::{Combinatorics, Op};
use crate::dilog::{lifted_dilog, CoverPoint, RootOfUnity};
use crate::error::{Error, Result};
use crate::logdata::{LogColoring, LogDecoration};
use crate::num::{max_abs, omega, C64, I, ONE, ZERO};
use crate::quantum::{crossing_tensor, ev_coev, position_tensor, Matrix, Pivotal};
use crate::slcoloring::{GaugeKind, ShadowColoring};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::f64::consts::PI;

/// Largest number of strands a cut may carry.
pub const MAX_WIDTH: usize = 12;
/// Largest number of entries of the intermediate state.
pub const MAX_STATE: usize = 1 << 26;

/// A tensor acting on `nin` consecutive strands starting at `pos`, stored
/// as its nonzero entries (input multi-index, output multi-index, value).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub pos: usize,
    pub nin: usize,
    pub nout: usize,
    pub entries: Vec<(usize, usize, C64)>,
    pub what: NodeKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeKind {
    Crossing(usize),
    Cup(usize),
    Cap(usize),
}

/// Nodes in slice order together with the boundary widths.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorNetwork {
    pub n: usize,
    pub inputs: usize,
    pub outputs: usize,
    pub nodes: Vec<Node>,
    pub internal_legs: usize,
}

fn matrix_entries(m: &Matrix) -> Vec<(usize, usize, C64)> {
    // Cup/cap tensors T[top, bottom] flatten to top·N + bottom.
    let n = m.nrows();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let v = m[(a, b)];
            if v != ZERO {
                out.push((0, a * n + b, v));
            }
        }
    }
    out
}

/// One tensor per crossing and critical point, scheduled by slice.
pub fn build_network(ctx: RootOfUnity, sc: &ShadowColoring, lc: &LogColoring, kappa_branch: i64) -> Result<TensorNetwork> {
    let comb = &sc.comb;
    let n = ctx.n;
    if let Some(cut) = comb.cuts.iter().find(|c| c.strands.len() > MAX_WIDTH) {
        return Err(Error::Resource(format!("cut of width {} exceeds {MAX_WIDTH}", cut.strands.len())));
    }
    let mut nodes = Vec::new();
    for ops in &comb.ops {
        let mut p = 0;
        for op in ops {
            match *op {
                Op::Id => p += 1,
                Op::Crossing(k) => {
                    let x = &comb.crossings[k];
                    let r = crossing_tensor(ctx, sc, lc, x, kappa_branch)?;
                    let c = position_tensor(&r.tensor, x, lc);
                    let entries = c
                        .data
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| **v != ZERO)
                        .map(|(idx, v)| (idx / (n * n), idx % (n * n), *v))
                        .collect();
                    nodes.push(Node { pos: p, nin: 2, nout: 2, entries, what: NodeKind::Crossing(k) });
                    p += 2;
                }
                Op::Cup { segment, orient } => {
                    let kind = if orient > 0 { Pivotal::CoevUp } else { Pivotal::CoevDown };
                    let m = ev_coev(kind, &lc.label(comb, segment), n);
                    nodes.push(Node { pos: p, nin: 0, nout: 2, entries: matrix_entries(&m), what: NodeKind::Cup(segment) });
                    p += 2;
                }
                Op::Cap { segment, orient } => {
                    let kind = if orient < 0 { Pivotal::EvUp } else { Pivotal::EvDown };
                    let m = ev_coev(kind, &lc.label(comb, segment), n);
                    let entries = matrix_entries(&m).into_iter().map(|(_, i, v)| (i, 0, v)).collect();
                    nodes.push(Node { pos: p, nin: 2, nout: 0, entries, what: NodeKind::Cap(segment) });
                }
            }
        }
    }
    let inputs = comb.cuts[0].strands.len();
    let outputs = comb.cuts[comb.cuts.len() - 1].strands.len();
    let boundary: std::collections::BTreeSet<usize> =
        comb.input_segments().into_iter().chain(comb.output_segments()).collect();
    let internal_legs = comb.segment_count() - boundary.len();
    Ok(TensorNetwork { n, inputs, outputs, nodes, internal_legs })
}

/// Slice sweep. Returns the operator with rows indexed by outputs and
/// columns by inputs (top strand most significant).
pub fn contract(tn: &TensorNetwork) -> Result<Matrix> {
    let n = tn.n;
    let k = tn.inputs;
    let din = n.pow(k as u32);
    let mut width = k;
    // state[i·N^width + strands]
    let mut state = vec![ZERO; din * din];
    for i in 0..din {
        state[i * din + i] = ONE;
    }
    for node in &tn.nodes {
        let new_width = width + node.nout - node.nin;
        let size = din
            .checked_mul(n.checked_pow(new_width as u32).unwrap_or(usize::MAX))
            .filter(|s| *s <= MAX_STATE)
            .ok_or_else(|| Error::Resource("contraction state too large".into()))?;
        let right = n.pow((width - node.pos - node.nin) as u32);
        let left = n.pow(node.pos as u32);
        let mid_in = n.pow(node.nin as u32);
        let mid_out = n.pow(node.nout as u32);
        let old_row = n.pow(width as u32);
        let new_row = n.pow(new_width as u32);
        let mut next = vec![ZERO; size];
        for i in 0..din {
            for l in 0..left {
                for &(m, o, v) in &node.entries {
                    let src = i * old_row + (l * mid_in + m) * right;
                    let dst = i * new_row + (l * mid_out + o) * right;
                    for r in 0..right {
                        let x = state[src + r];
                        if x != ZERO {
                            next[dst + r] += x * v;
                        }
                    }
                }
            }
        }
        state = next;
        width = new_width;
    }
    let dout = n.pow(width as u32);
    Ok(Matrix::from_fn(dout, din, |o, i| state[i * dout + o]))
}

/// 𝒵 of a colored tangle diagram as an operator.
pub fn tangle_operator(ctx: RootOfUnity, sc: &ShadowColoring, lc: &LogColoring) -> Result<Matrix> {
    contract(&build_network(ctx, sc, lc, 0)?)
}

/// Operators below this max-entry size count as the scalar 0.
pub const ZERO_OPERATOR: f64 = 1e-10;

/// ⟨M⟩: the scalar of a multiple of the identity.
pub fn scalar_of(m: &Matrix) -> Result<C64> {
    let norm = max_abs(m);
    if m.nrows() == m.ncols() && norm < ZERO_OPERATOR {
        return Ok(ZERO);
    }
    let d = m.nrows().min(m.ncols());
    let mean = (0..d).map(|i| m[(i, i)]).sum::<C64>() / d as f64;
    let mut residual: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let want = if i == j { mean } else { ZERO };
            residual = residual.max((m[(i, j)] - want).norm() / norm);
        }
    }
    if m.nrows() != m.ncols() || residual > 1e-8 {
        return Err(Error::NotScalar { residual });
    }
    Ok(mean)
}

/// ψ = Σ over crossings of μ_{c(1)}λ₁(X) + μ_{c(2)}λ₂(X).
pub fn psi(comb: &Combinatorics, lc: &LogColoring) -> C64 {
    comb.crossings
        .iter()
        .map(|x| {
            let (l1, l2) = lc.crossing_lambda(x);
            lc.mu(comb.component_of(x.s1)) * l1 + lc.mu(comb.component_of(x.s2)) * l2
        })
        .sum()
}

/// ψ as the pairing Σ μᵢλᵢ of a decoration.
pub fn psi_of_decoration(d: &LogDecoration) -> C64 {
    d.mu.iter().zip(&d.lambda).map(|(m, l)| m * l).sum()
}

/// μᵀ·lk·μ.
pub fn linking_form(comb: &Combinatorics, mu: &[C64]) -> C64 {
    let lk = comb.linking_matrix();
    let mut s = ZERO;
    for i in 0..mu.len() {
        for j in 0..mu.len() {
            s += mu[i] * lk[i][j] * mu[j];
        }
    }
    s
}

/// d(μ) = N / Σ_{j=0}^{N−1} ω^{(N−1−2j)(μ+½)}.
pub fn modified_dimension(ctx: RootOfUnity, mu: C64) -> Result<C64> {
    let n = ctx.n;
    let den: C64 = (0..n).map(|j| omega((mu + 0.5) * (n as f64 - 1.0 - 2.0 * j as f64), n)).sum();
    if den.norm() < 1e-10 {
        return Err(Error::Domain(format!("μ = {mu} is not renormalizable")));
    }
    Ok(C64::from(n as f64) / den)
}

/// Exponent of the CS factor of one crossing (the factor is its exp).
pub fn cs_crossing_log(sc: &ShadowColoring, lc: &LogColoring, k: usize, kappa_branch: i64) -> Result<C64> {
    let x = &sc.comb.crossings[k];
    let fl = lc.flattening(sc, x, kappa_branch)?;
    let e = x.sign as f64;
    match fl.zeta1 {
        Some(z1) => {
            let lh = |c: usize| lifted_dilog(CoverPoint { zeta0: fl.zeta0[c], zeta1: z1[c] });
            Ok((lh(0)? + lh(2)? - lh(1)? - lh(3)?) * e)
        }
        None => {
            // Continuous extension of the generic factor to the pinch.
            let l = lc.local(&sc.comb, x);
            let z = fl.zeta0;
            let [an, aw, asth, ae] = l.alpha;
            Ok(I * PI
                * ((z[0] * an + z[2] * asth - z[1] * aw - z[3] * ae) * e
                    - l.mu1 * (z[2] - z[1])
                    - l.mu2 * (z[3] - z[2])))
        }
    }
}

pub fn cs_crossing_factor(sc: &ShadowColoring, lc: &LogColoring, k: usize, kappa_branch: i64) -> Result<C64> {
    Ok(cs_crossing_log(sc, lc, k, kappa_branch)?.exp())
}

/// CS of a link diagram under one global log-coloring.
pub fn cs_link(sc: &ShadowColoring, lc: &LogColoring) -> Result<C64> {
    let mut s = ZERO;
    for k in 0..sc.comb.crossings.len() {
        s += cs_crossing_log(sc, lc, k, 0)?;
    }
    Ok(s.exp())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalization {
    Raw,
    Shifted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub diagram: String,
    pub coloring: String,
    /// Gauge applied to reach admissibility, if any.
    pub gauge: Option<(String, GaugeKind)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantResult {
    /// The value in the requested normalization.
    pub value: C64,
    pub n: usize,
    pub decoration: LogDecoration,
    pub normalization: Normalization,
    pub raw: C64,
    pub shifted: C64,
    pub psi: C64,
    pub provenance: Provenance,
}

impl InvariantResult {
    pub fn normalized(mut self, how: Normalization) -> Self {
        self.normalization = how;
        self.value = match how {
            Normalization::Raw => self.raw,
            Normalization::Shifted => self.shifted,
        };
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pair = |z: C64| serde_json::json!([z.re, z.im]);
        let pairs = |v: &[C64]| v.iter().map(|z| pair(*z)).collect::<Vec<_>>();
        serde_json::json!({
            "value": pair(self.value),
            "N": self.n,
            "psi": pair(self.psi),
            "decoration": { "mu": pairs(&self.decoration.mu), "lambda": pairs(&self.decoration.lambda) },
            "normalization": {
                "selected": format!("{:?}", self.normalization).to_lowercase(),
                "raw": pair(self.raw),
                "shifted": pair(self.shifted),
            },
            "digests": { "diagram": self.provenance.diagram, "coloring": self.provenance.coloring },
            "gauge": self.provenance.gauge.as_ref().map(|(h, k)| serde_json::json!({"h": h, "kind": format!("{k:?}")})),
        })
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn diagram_digest(comb: &Combinatorics) -> String {
    hex(&Sha256::digest(comb.word.as_bytes()))
}

pub fn coloring_digest(sc: &ShadowColoring) -> String {
    let json = serde_json::to_vec(&(&sc.g, &sc.v, &sc.u)).expect("coloring serializes");
    hex(&Sha256::digest(&json))
}

/// The scalar invariant of a cut presentation (one open strand).
pub fn link_invariant(ctx: RootOfUnity, sc: &ShadowColoring, lc: &LogColoring) -> Result<InvariantResult> {
    let comb = &sc.comb;
    if comb.cuts[0].strands.len() != 1 {
        return Err(Error::Boundary("a cut presentation has exactly one open strand".into()));
    }
    let raw = scalar_of(&tangle_operator(ctx, sc, lc)?)?;
    let psi = psi(comb, lc);
    let shifted = omega(psi, ctx.n) * raw;
    Ok(InvariantResult {
        value: raw,
        n: ctx.n,
        decoration: lc.induced_decoration(comb),
        normalization: Normalization::Raw,
        raw,
        shifted,
        psi,
        provenance: Provenance { diagram: diagram_digest(comb), coloring: coloring_digest(sc), gauge: None },
    })
}

/// Predicted value after changing the decoration by Δλ ∈ ℤ and Δμ ∈ Nℤ per
/// component: ω^{−Σ Δλᵢμᵢ} first, then ω^{Σ Δμᵢλᵢ′}.
pub fn transform_decoration(r: &InvariantResult, dlambda: &[i64], dmu: &[i64]) -> Result<InvariantResult> {
    let n = r.n;
    let k = r.decoration.mu.len();
    if dlambda.len() != k || dmu.len() != k {
        return Err(Error::Invalid("shift vectors must have one entry per component".into()));
    }
    if dmu.iter().any(|d| d % n as i64 != 0) {
        return Err(Error::Unreachable("log-meridian shifts must lie in Nℤ".into()));
    }
    let mut dec = r.decoration.clone();
    let mut raw = r.raw;
    for i in 0..k {
        raw *= omega(-dec.mu[i] * dlambda[i] as f64, n);
        dec.lambda[i] += dlambda[i] as f64;
    }
    for i in 0..k {
        raw *= omega(dec.lambda[i] * dmu[i] as f64, n);
        dec.mu[i] += dmu[i] as f64;
    }
    let psi = psi_of_decoration(&dec);
    let out = InvariantResult { raw, shifted: omega(psi, n) * raw, psi, decoration: dec, ..r.clone() };
    Ok(out.normalized(r.normalization))
}
