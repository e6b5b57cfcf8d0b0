//! Decorated SL₂(ℂ) colorings, shadow colorings and the octahedral
//! parameters they induce.
//!
//! Conventions: the region below a segment is colored g^ε·(region above),
//! ε = ±1 the strand direction. Segment parameters use the region on the
//! left of the strand's direction (above, for rightward strands):
//! b = −(v·e₂)/(v·u_left). Region parameters are a = u[0].

use crate::diagram::{Combinatorics, Crossing};
use crate::error::{Error, Result};
use crate::num::{c, det2, inv2, max_abs2, mat2, rel, to_sl2, Col2, Mat2, Row2, C64, ONE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A matrix g ∈ SL₂(ℂ) with a left eigenline [v]: v·g = m⁻¹·v.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecoratedMatrix {
    pub g: Mat2,
    pub v: Row2,
    pub m: C64,
}

impl DecoratedMatrix {
    pub fn new(g: Mat2, v: Row2) -> Result<Self> {
        let d = det2(&g);
        if (d - ONE).norm() > 1e-12 * (1.0 + max_abs2(&g).powi(2)) {
            return Err(Error::Coloring(format!("det g = {d}, expected 1")));
        }
        if v.norm() == 0.0 {
            return Err(Error::Coloring("zero eigenline representative".into()));
        }
        let vg = v * g;
        let m = v.dot(&v.conjugate()) / vg.dot(&v.conjugate());
        if (vg * m - v).norm() > 1e-10 * v.norm() * (1.0 + max_abs2(&g)) {
            return Err(Error::Coloring("v is not a left eigenvector of g".into()));
        }
        Ok(Self { g, v, m })
    }

    /// Uses the left eigenvector for eigenvalue λ, so m = 1/λ.
    pub fn from_eigenvalue(g: Mat2, lambda: C64) -> Result<Self> {
        Self::new(g, left_eigenvector(&g, lambda))
    }
}

/// Eigenvalues of a 2×2 matrix.
pub fn eigenvalues(g: &Mat2) -> (C64, C64) {
    let tr = g[(0, 0)] + g[(1, 1)];
    let disc = (tr * tr - 4.0 * det2(g)).sqrt();
    ((tr + disc) / 2.0, (tr - disc) / 2.0)
}

/// A row vector v with v·g = λ·v.
pub fn left_eigenvector(g: &Mat2, lambda: C64) -> Row2 {
    let a = Row2::new(g[(1, 0)], lambda - g[(0, 0)]);
    let b = Row2::new(lambda - g[(1, 1)], g[(0, 1)]);
    let v = if a.norm() >= b.norm() { a } else { b };
    if v.norm() == 0.0 {
        Row2::new(ONE, c(0.0, 0.0))
    } else {
        v.unscale(v.norm())
    }
}

/// Region, segment and meridian parameters of one crossing in its
/// left-to-right frame.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingData {
    pub sign: i8,
    /// a_N, a_W, a_S, a_E
    pub a: [C64; 4],
    /// b₁, b₂, b₁′, b₂′
    pub b: [C64; 4],
    pub m1: C64,
    pub m2: C64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossingKind {
    Generic,
    Pinched,
    ENilpotent,
}

impl CrossingKind {
    pub fn is_pinched(self) -> bool {
        !matches!(self, Self::Generic)
    }
}

/// Classification with the octahedral shape parameters (z⁰, z¹) at the
/// corners N, W, S, E and the constant K. Shapes are absent when pinched.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingClass {
    pub kind: CrossingKind,
    pub shapes: Option<[(C64, C64); 4]>,
    pub k_const: Option<C64>,
}

pub const PINCH_TOL: f64 = 1e-9;

impl CrossingData {
    /// K = a_N/(1 − (b₂′/b₁)^ε).
    pub fn k_const(&self) -> C64 {
        let e = self.sign as i32;
        self.a[0] / (ONE - (self.b[3] / self.b[0]).powi(e))
    }

    /// z⁰ per corner.
    pub fn z0(&self) -> [C64; 4] {
        let e = self.sign as i32;
        let [b1, b2, b1p, b2p] = self.b;
        let (m1, m2) = (self.m1, self.m2);
        [
            (b2p / b1).powi(e),
            (b2 / (b1 * m1)).powi(e),
            (b2 * m2 / (b1p * m1)).powi(e),
            (b2p * m2 / b1p).powi(e),
        ]
    }

    /// z¹ per corner, from K.
    pub fn z1(&self) -> [C64; 4] {
        let e = self.sign as i32;
        let k = self.k_const();
        let (m1, m2) = (self.m1, self.m2);
        [k / self.a[0], k * m1.powi(e) / self.a[1], k * (m1 / m2).powi(e) / self.a[2], k * m2.powi(-e) / self.a[3]]
    }

    pub fn is_e_nilpotent(&self) -> bool {
        let [an, aw, asth, ae] = self.a;
        rel(aw, an * self.m1) < PINCH_TOL
            && rel(ae, an * self.m2) < PINCH_TOL
            && rel(asth, an * self.m1 * self.m2) < PINCH_TOL
    }

    /// Pinched relations b₂′ = b₁, b₂ = m₁b₁, m₂b₂ = m₁b₁′, m₂b₂′ = b₁′.
    pub fn pinched_residual(&self) -> f64 {
        let [b1, b2, b1p, b2p] = self.b;
        let (m1, m2) = (self.m1, self.m2);
        [rel(b2p, b1), rel(b2, m1 * b1), rel(m2 * b2, m1 * b1p), rel(m2 * b2p, b1p)]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// Outputs (b₁′, b₂′, a_E) of a crossing from its inputs.
#[allow(clippy::too_many_arguments)]
pub fn crossing_outputs(
    a_n: C64,
    a_w: C64,
    a_s: C64,
    b1: C64,
    b2: C64,
    m1: C64,
    m2: C64,
    sign: i8,
) -> Result<(C64, C64, C64)> {
    let (a1, a2) = (a_w / a_n, a_s / a_w);
    let guard = |z: C64, what: &str| -> Result<C64> {
        if z.norm() < 1e-300 || !z.is_finite() {
            Err(Error::Inadmissible(format!("vanishing denominator in {what}")))
        } else {
            Ok(z)
        }
    };
    let out = if sign > 0 {
        let t = ONE - b2 / (m1 * b1);
        let b1p = m2 * b2 / m1 / guard(ONE - m2 * a2 * t, "b1'")?;
        let b2p = b1 * (ONE - m1 / a1 * t);
        let ae = (a_n * a_s - m1 * b1 / b2 * (a_n - a_w / m1) * (a_s - a_w / m2)) / guard(a_w, "aE")?;
        (b1p, b2p, ae)
    } else {
        let t = ONE - m1 * b1 / b2;
        let b1p = m2 * b2 / m1 * (ONE - a2 / m2 * t);
        let b2p = b1 / guard(ONE - ONE / (m1 * a1) * t, "b2'")?;
        let ae = (a_n * a_s - b2 / (m1 * b1) * (a_n - m1 * a_w) * (a_s - m2 * a_w)) / guard(a_w, "aE")?;
        (b1p, b2p, ae)
    };
    if !(out.0.is_finite() && out.1.is_finite() && out.2.is_finite()) {
        return Err(Error::Inadmissible("non-finite crossing output".into()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GaugeKind {
    /// Arcs (h⁻¹gh, [v]h), regions h⁻¹u.
    A,
    /// Arcs unchanged, top region h⁻¹u, the rest re-propagated.
    B,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub bad_regions: Vec<usize>,
    pub bad_segments: Vec<usize>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.bad_regions.is_empty() && self.bad_segments.is_empty()
    }
}

/// Shadow coloring of a diagram: per-segment decorated matrices (constant
/// along arcs) and per-region vectors, with derived parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ShadowColoring {
    pub comb: Combinatorics,
    pub g: Vec<Mat2>,
    pub v: Vec<Row2>,
    pub u: Vec<Col2>,
    /// Region parameters a_j.
    pub a: Vec<C64>,
    /// Segment parameters b_i.
    pub b: Vec<C64>,
    /// Meridian parameter per component.
    pub m: Vec<C64>,
}

const MATCH_TOL: f64 = 1e-9;

impl ShadowColoring {
    /// Extends decorated matrices on `seeds` (segment ids) by the Wirtinger
    /// relations, then colors every region starting from `top` on the
    /// topmost region.
    pub fn propagate(comb: &Combinatorics, seeds: &[(usize, DecoratedMatrix)], top: Col2) -> Result<Self> {
        if top.norm() == 0.0 {
            return Err(Error::Coloring("zero top shadow".into()));
        }
        let narc = comb.arc_count;
        let arc = |s: usize| comb.segments[s].arc;
        let mut g: Vec<Option<Mat2>> = vec![None; narc];
        let mut v: Vec<Option<Row2>> = vec![None; narc];
        let set = |g: &mut Vec<Option<Mat2>>, v: &mut Vec<Option<Row2>>, a: usize, gm: Mat2, vr: Row2| -> Result<bool> {
            match g[a] {
                Some(old) => {
                    if max_abs2(&(old - gm)) > MATCH_TOL * (1.0 + max_abs2(&old)) {
                        return Err(Error::Coloring(format!("Wirtinger relation fails on arc {a}")));
                    }
                    let w = v[a].expect("set together");
                    let wedge = (w[0] * vr[1] - w[1] * vr[0]).norm() / (w.norm() * vr.norm());
                    if wedge > 1e-8 {
                        return Err(Error::Coloring(format!("eigenlines disagree on arc {a}")));
                    }
                    Ok(false)
                }
                None => {
                    g[a] = Some(gm);
                    v[a] = Some(vr.unscale(vr.norm()));
                    Ok(true)
                }
            }
        };
        for (s, dm) in seeds {
            if *s >= comb.segment_count() {
                return Err(Error::Invalid(format!("seed segment {s} out of range")));
            }
            set(&mut g, &mut v, arc(*s), dm.g, dm.v)?;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for x in &comb.crossings {
                let (o_in, o_out) = x.over();
                let (u_in, u_out) = x.under();
                // Kink: the over arc is one of its own under arcs, and
                // g = g⁻¹·h·g forces g = h.
                for (own, other) in [(arc(u_out), arc(u_in)), (arc(u_in), arc(u_out))] {
                    if own == arc(o_in) && g[own].is_none() {
                        if let (Some(h), Some(w)) = (g[other], v[other]) {
                            changed |= set(&mut g, &mut v, own, h, w)?;
                        }
                    }
                }
                let go = g[arc(o_in)].or(g[arc(o_out)]);
                let Some(go) = go else { continue };
                if g[arc(o_in)].is_none() {
                    let vv = v[arc(o_out)].expect("set together");
                    changed |= set(&mut g, &mut v, arc(o_in), go, vv)?;
                }
                // Positive: under_out = g₁⁻¹·under_in·g₁, v ↦ v·g₁.
                // Negative: under_out = g₂·under_in·g₂⁻¹, v ↦ v·g₂⁻¹.
                let (fwd, fwd_inv) = if x.sign > 0 { (go, inv2(&go)) } else { (inv2(&go), go) };
                if let Some(gu) = g[arc(u_in)] {
                    let vu = v[arc(u_in)].expect("set together");
                    changed |= set(&mut g, &mut v, arc(u_out), fwd_inv * gu * fwd, vu * fwd)?;
                }
                if let Some(gu) = g[arc(u_out)] {
                    let vu = v[arc(u_out)].expect("set together");
                    changed |= set(&mut g, &mut v, arc(u_in), fwd * gu * fwd_inv, vu * fwd_inv)?;
                }
            }
        }
        let nseg = comb.segment_count();
        let mut gs = Vec::with_capacity(nseg);
        let mut vs = Vec::with_capacity(nseg);
        for s in 0..nseg {
            let (Some(gm), Some(vr)) = (g[arc(s)], v[arc(s)]) else {
                return Err(Error::Coloring(format!("seeds do not determine segment {s}")));
            };
            gs.push(gm);
            vs.push(vr);
        }
        let u = propagate_regions(comb, &gs, top)?;
        Self::assemble(comb.clone(), gs, vs, u)
    }

    fn assemble(comb: Combinatorics, g: Vec<Mat2>, v: Vec<Row2>, u: Vec<Col2>) -> Result<Self> {
        let a = u.iter().map(|x| x[0]).collect();
        let b = (0..comb.segment_count())
            .map(|s| -v[s][1] / v[s].dot(&u[comb.segments[s].left].transpose()))
            .collect();
        let mut m: Vec<Option<C64>> = vec![None; comb.component_count];
        for s in 0..comb.segment_count() {
            let vg = v[s] * g[s];
            let ms = v[s].dot(&v[s].conjugate()) / vg.dot(&v[s].conjugate());
            let k = comb.component_of(s);
            match m[k] {
                Some(old) if rel(old, ms) > 1e-8 => {
                    return Err(Error::Coloring(format!("meridian parameter varies on component {k}")))
                }
                Some(_) => {}
                None => m[k] = Some(ms),
            }
        }
        let m = m.into_iter().map(|x| x.expect("every component has a segment")).collect();
        Ok(Self { comb, g, v, u, a, b, m })
    }

    pub fn decorated(&self, s: usize) -> DecoratedMatrix {
        DecoratedMatrix { g: self.g[s], v: self.v[s], m: self.m[self.comb.component_of(s)] }
    }

    pub fn meridian(&self, s: usize) -> C64 {
        self.m[self.comb.component_of(s)]
    }

    pub fn check_admissible(&self) -> AdmissibilityReport {
        let scale = self.u.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let bad_regions = (0..self.a.len())
            .filter(|&j| !self.a[j].is_finite() || self.a[j].norm() < 1e-12 * scale)
            .collect();
        let bad_segments = (0..self.b.len())
            .filter(|&i| !self.b[i].is_finite() || self.b[i].norm() < 1e-12 || self.b[i].norm() > 1e12)
            .collect();
        AdmissibilityReport { bad_regions, bad_segments }
    }

    pub fn crossing_data(&self, x: &Crossing) -> CrossingData {
        CrossingData {
            sign: x.sign,
            a: [self.a[x.n], self.a[x.w], self.a[x.s], self.a[x.e]],
            b: [self.b[x.s1], self.b[x.s2], self.b[x.s1p], self.b[x.s2p]],
            m1: self.meridian(x.s1),
            m2: self.meridian(x.s2),
        }
    }

    pub fn classify(&self, x: &Crossing) -> CrossingClass {
        let (v1, v2) = (self.v[x.s1], self.v[x.s2]);
        let wedge = (v1[0] * v2[1] - v1[1] * v2[0]).norm() / (v1.norm() * v2.norm());
        let d = self.crossing_data(x);
        if wedge < PINCH_TOL {
            let kind = if d.is_e_nilpotent() { CrossingKind::ENilpotent } else { CrossingKind::Pinched };
            return CrossingClass { kind, shapes: None, k_const: None };
        }
        let (z0, z1) = (d.z0(), d.z1());
        CrossingClass {
            kind: CrossingKind::Generic,
            shapes: Some([(z0[0], z1[0]), (z0[1], z1[1]), (z0[2], z1[2]), (z0[3], z1[3])]),
            k_const: Some(d.k_const()),
        }
    }

    pub fn gauge_transform(&self, h: &Mat2, kind: GaugeKind) -> Result<Self> {
        let hi = inv2(h);
        match kind {
            GaugeKind::A => {
                let g = self.g.iter().map(|x| hi * x * h).collect();
                let v = self.v.iter().map(|x| {
                    let y = x * h;
                    y.unscale(y.norm())
                }).collect();
                let u = self.u.iter().map(|x| hi * x).collect();
                Self::assemble(self.comb.clone(), g, v, u)
            }
            // Regions are re-propagated from the new top shadow: with arcs
            // acting on the left, u ↦ h⁻¹u everywhere would break the
            // shadow rule unless h commutes with every arc.
            GaugeKind::B => {
                let u = propagate_regions(&self.comb, &self.g, hi * self.u[self.comb.top_region])?;
                Self::assemble(self.comb.clone(), self.g.clone(), self.v.clone(), u)
            }
        }
    }

    /// Seeded search for a gauge making the coloring admissible: up to 64
    /// candidates h drawn from a ChaCha8 stream (entries uniform in the
    /// square [−1,1]², rescaled to det 1), each tried as type A and then as
    /// type B.
    pub fn repair_admissibility(&self, seed: u64) -> Result<(Mat2, GaugeKind, Self)> {
        if self.check_admissible().is_admissible() {
            return Ok((Mat2::identity(), GaugeKind::A, self.clone()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let h = random_sl2(&mut rng);
            for kind in [GaugeKind::A, GaugeKind::B] {
                if let Ok(sc) = self.gauge_transform(&h, kind) {
                    if sc.check_admissible().is_admissible() {
                        return Ok((h, kind, sc));
                    }
                }
            }
        }
        Err(Error::Inadmissible("no admissible gauge found in 64 attempts".into()))
    }

    /// Largest violation of the shadow rule over all segment sides.
    pub fn shadow_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        let scale = self.u.iter().map(|x| x.norm()).fold(0.0, f64::max);
        for (s, seg) in self.comb.segments.iter().enumerate() {
            let r = self.u[seg.right] - self.g[s] * self.u[seg.left];
            worst = worst.max(r.norm() / scale);
        }
        worst
    }
}

fn propagate_regions(comb: &Combinatorics, g: &[Mat2], top: Col2) -> Result<Vec<Col2>> {
    let mut u: Vec<Option<Col2>> = vec![None; comb.region_count];
    u[comb.top_region] = Some(top);
    // Every segment carries right = g·left; both crossings and cuts supply
    // the same (left, right) pairs, so a fixed point over segments suffices.
    let sides: Vec<(usize, usize, usize)> =
        comb.segments.iter().enumerate().map(|(s, seg)| (s, seg.left, seg.right)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(s, l, r) in &sides {
            match (u[l], u[r]) {
                (Some(ul), None) => {
                    u[r] = Some(g[s] * ul);
                    changed = true;
                }
                (None, Some(ur)) => {
                    u[l] = Some(inv2(&g[s]) * ur);
                    changed = true;
                }
                (Some(ul), Some(ur)) => {
                    let want = g[s] * ul;
                    if (ur - want).norm() > MATCH_TOL * (1.0 + ul.norm().max(ur.norm())) {
                        return Err(Error::Coloring(format!("shadow rule fails across segment {s}")));
                    }
                }
                (None, None) => {}
            }
        }
    }
    u.into_iter()
        .enumerate()
        .map(|(j, x)| x.ok_or_else(|| Error::Coloring(format!("region {j} unreachable"))))
        .collect()
}

/// A determinant-one matrix with entries uniform in the unit square.
pub fn random_sl2<R: Rng>(rng: &mut R) -> Mat2 {
    loop {
        let mut e = || c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let g = mat2(e(), e(), e(), e());
        if det2(&g).norm() > 0.05 {
            return to_sl2(&g);
        }
    }
}

pub fn random_c<R: Rng>(rng: &mut R) -> C64 {
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::TangleDiagram;
    use crate::num::ZERO;

    fn comb(w: &str) -> Combinatorics {
        Combinatorics::new(&TangleDiagram::parse(w).unwrap(), false).unwrap()
    }

    #[test]
    fn identity_matrices_keep_the_top_shadow() {
        let cb = comb("xp id ; id xn");
        let dm = DecoratedMatrix::new(Mat2::identity(), Row2::new(ONE, c(0.3, 0.0))).unwrap();
        let seeds: Vec<_> = cb.input_segments().into_iter().map(|s| (s, dm)).collect();
        let top = Col2::new(c(0.4, 0.1), c(1.0, -0.2));
        let sc = ShadowColoring::propagate(&cb, &seeds, top).unwrap();
        assert!(sc.u.iter().all(|x| (x - top).norm() < 1e-15));
    }

    #[test]
    fn single_strand_shadow() {
        let cb = comb("id");
        let g = to_sl2(&mat2(c(1.0, 0.2), c(0.5, 0.0), c(0.1, 0.1), c(0.8, 0.0)));
        let (l1, _) = eigenvalues(&g);
        let dm = DecoratedMatrix::from_eigenvalue(g, l1).unwrap();
        let top = Col2::new(c(1.0, 0.0), c(0.0, 1.0));
        let sc = ShadowColoring::propagate(&cb, &[(0, dm)], top).unwrap();
        let seg = &sc.comb.segments[0];
        assert_eq!(sc.u[seg.left], top);
        assert!((sc.u[seg.right] - g * top).norm() < 1e-14);
    }

    #[test]
    fn parameter_examples() {
        let cb = comb("id");
        let dm = DecoratedMatrix::new(Mat2::identity(), Row2::new(ONE, ONE)).unwrap();
        let sc = ShadowColoring::propagate(&cb, &[(0, dm)], Col2::new(ONE, ZERO)).unwrap();
        assert!((sc.a[cb.top_region] - ONE).norm() < 1e-15);
        assert!((sc.b[0] + ONE).norm() < 1e-15);
        let m = c(0.7, 0.4);
        let diag = mat2(m, ZERO, ZERO, ONE / m);
        let d = DecoratedMatrix::new(diag, Row2::new(ZERO, ONE)).unwrap();
        assert!((d.m - m).norm() < 1e-14);
    }

    #[test]
    fn inadmissible_colorings_are_repaired() {
        let cb = comb("id");
        let color = |v: Row2, u: Col2| {
            let dm = DecoratedMatrix::new(Mat2::identity(), v).unwrap();
            ShadowColoring::propagate(&cb, &[(0, dm)], u).unwrap()
        };
        let zero_a = color(Row2::new(ONE, ONE), Col2::new(ZERO, ONE));
        assert_eq!(zero_a.check_admissible().bad_regions.len(), 2);
        let zero_b = color(Row2::new(ONE, ZERO), Col2::new(ONE, ONE));
        assert_eq!(zero_b.check_admissible().bad_segments, vec![0]);
        for sc in [zero_a, zero_b] {
            let (_, _, fixed) = sc.repair_admissibility(5).unwrap();
            assert!(fixed.check_admissible().is_admissible());
        }
        // v·u is gauge invariant, so b = ∞ cannot be repaired.
        let stuck = color(Row2::new(ONE, ZERO), Col2::new(ZERO, ONE));
        assert!(matches!(stuck.repair_admissibility(5), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn gauge_b_round_trip() {
        let cb = comb("xp");
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let seeds: Vec<_> = cb
            .input_segments()
            .into_iter()
            .map(|s| {
                let g = random_sl2(&mut rng);
                (s, DecoratedMatrix::from_eigenvalue(g, eigenvalues(&g).0).unwrap())
            })
            .collect();
        let sc = ShadowColoring::propagate(&cb, &seeds, Col2::new(random_c(&mut rng), random_c(&mut rng))).unwrap();
        let h = random_sl2(&mut rng);
        let back = sc.gauge_transform(&h, GaugeKind::B).unwrap().gauge_transform(&inv2(&h), GaugeKind::B).unwrap();
        for (x, y) in sc.u.iter().zip(&back.u) {
            assert!((x - y).norm() < 1e-12);
        }
        let ga = sc.gauge_transform(&h, GaugeKind::A).unwrap();
        for (x, y) in sc.m.iter().zip(&ga.m) {
            assert!(rel(*x, *y) < 1e-12);
        }
    }
}
