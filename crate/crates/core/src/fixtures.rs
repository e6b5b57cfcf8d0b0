//! Named colored diagrams: the unknot, two Hopf link colorings, the
//! parabolic figure-eight representations, the trivial pinched coloring of
//! the figure-eight and diagonal colorings.

use crate::diagram::{Combinatorics, TangleDiagram};
use crate::dilog::RootOfUnity;
use crate::error::{Error, Result};
use crate::evaluator::{cs_link, link_invariant, InvariantResult};
use crate::logdata::{LogColoring, LogDecoration};
use crate::num::{c, e2pi, inv2, mat2, to_sl2, Col2, Mat2, Row2, C64, ONE, ZERO};
use crate::slcoloring::{eigenvalues, random_c, random_sl2, DecoratedMatrix, GaugeKind, ShadowColoring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

pub const NAMES: [&str; 9] = [
    "unknot",
    "hopf-pinched",
    "hopf-other",
    "fig8-hyp",
    "fig8-hyp-prime",
    "fig8-hypbar",
    "fig8-hypbar-prime",
    "kashaev-trivial",
    "diagonal",
];

pub const UNKNOT_WORDS: [&str; 2] = ["id", "id cupl ; capr id"];

pub const HOPF_WORDS: [&str; 4] = [
    "id cupr ; xp id< ; xp id< ; id capr",
    "cupr id ; id xp<> ; id xp>< ; capr id",
    "id cupl ; xp>< id ; xp<> id ; id capl",
    "cupl id ; id xp ; id xp ; capl id",
];

/// Closure of the 3-braid σ₁σ₂⁻¹σ₁σ₂⁻¹ with the lower two strands closed,
/// and the same closure of σ₂⁻¹σ₁σ₂⁻¹σ₁.
pub const FIG8_WORDS: [&str; 2] = [
    "id cupr ; id id cupr id ; xp id id id ; id xn id id ; xp id id id ; id xn id id ; id id capr id ; id capr",
    "id cupr ; id id cupr id ; id xn id id ; xp id id id ; id xn id id ; xp id id id ; id id capr id ; id capr",
];

/// Published values of the figure-eight invariant at the parabolic
/// representations, N = 2..6.
pub const FIG8_HYP_TABLE: [(f64, f64); 5] = [
    (-2.94739, 2.94739),
    (-10.09357, 5.82753),
    (-23.34933, 9.67161),
    (-46.12843, 14.98804),
    (-83.94377, 22.49266),
];
pub const FIG8_HYPBAR_TABLE: [(f64, f64); 5] =
    [(4.07140, 4.07140), (0.0, 13.8995), (-10.6599, 25.7353), (-30.0758, 41.3957), (-63.2698, 63.2698)];

/// Options shared by every fixture. Empty `mu`/`lambda` select the
/// fixture's defaults; Hopf parameters are (open component, other).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureParams {
    pub n: usize,
    pub mu: Vec<C64>,
    pub lambda: Vec<C64>,
    pub seed: u64,
    pub word: usize,
}

impl Default for FixtureParams {
    fn default() -> Self {
        Self { n: 2, mu: Vec::new(), lambda: Vec::new(), seed: 1, word: 0 }
    }
}

/// An uncolored-but-seeded fixture: diagram, Wirtinger seeds, top shadow
/// and target decoration (indexed by the diagram's components).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub comb: Combinatorics,
    pub seeds: Vec<(usize, DecoratedMatrix)>,
    pub top: Col2,
    pub decoration: LogDecoration,
}

/// Coloring of a user-supplied closed diagram: Wirtinger seeds by segment
/// id, top shadow and target decoration. This is the `--coloring` file
/// format of the command-line tool.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoringSpec {
    pub seeds: Vec<(usize, DecoratedMatrix)>,
    pub top: Col2,
    pub decoration: LogDecoration,
}

/// A fixture after propagation, admissibility repair and log-lifting.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Colored {
    pub sc: ShadowColoring,
    pub lc: LogColoring,
    pub gauge: Option<(Mat2, GaugeKind)>,
}

impl Fixture {
    pub fn realize(&self, repair_seed: u64) -> Result<Colored> {
        realize(&self.comb, &self.seeds, self.top, &self.decoration, repair_seed)
    }

    /// A closed cut presentation `word` colored by `spec`.
    pub fn from_word(name: &str, word: &str, spec: ColoringSpec) -> Result<Self> {
        Ok(Self { name: name.into(), comb: closed(word)?, seeds: spec.seeds, top: spec.top, decoration: spec.decoration })
    }

    pub fn coloring(&self) -> ColoringSpec {
        ColoringSpec { seeds: self.seeds.clone(), top: self.top, decoration: self.decoration.clone() }
    }

    pub fn word_count(name: &str) -> usize {
        match name {
            "unknot" => UNKNOT_WORDS.len(),
            n if n.starts_with("hopf") || n == "diagonal" => HOPF_WORDS.len(),
            _ => FIG8_WORDS.len(),
        }
    }
}

/// Propagates, repairs admissibility if needed and lifts to a log-coloring
/// inducing `decoration`.
pub fn realize(
    comb: &Combinatorics,
    seeds: &[(usize, DecoratedMatrix)],
    top: Col2,
    decoration: &LogDecoration,
    repair_seed: u64,
) -> Result<Colored> {
    let sc = ShadowColoring::propagate(comb, seeds, top)?;
    let (h, kind, sc) = sc.repair_admissibility(repair_seed)?;
    let gauge = (h != Mat2::identity()).then_some((h, kind));
    let lc = LogColoring::with_meridians(&sc, &decoration.mu)?.adjust_to_target(comb, decoration)?;
    Ok(Colored { sc, lc, gauge })
}

/// Invariant of a fixture at level `p.n`, with the repair gauge recorded.
pub fn evaluate(name: &str, p: &FixtureParams, repair_seed: u64) -> Result<InvariantResult> {
    let col = build(name, p)?.realize(repair_seed)?;
    let mut r = link_invariant(RootOfUnity::new(p.n)?, &col.sc, &col.lc)?;
    r.provenance.gauge = col.gauge.map(|(h, k)| (serde_json::to_string(&h).expect("matrix serializes"), k));
    Ok(r)
}

/// Chern–Simons invariant of a fixture.
pub fn chern_simons(name: &str, p: &FixtureParams, repair_seed: u64) -> Result<C64> {
    let col = build(name, p)?.realize(repair_seed)?;
    cs_link(&col.sc, &col.lc)
}

fn closed(word: &str) -> Result<Combinatorics> {
    Combinatorics::new(&TangleDiagram::parse(word)?, true)
}

fn pick(v: &[C64], i: usize, default: C64) -> C64 {
    v.get(i).copied().unwrap_or(default)
}

pub fn build(name: &str, p: &FixtureParams) -> Result<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let words = Fixture::word_count(name);
    if p.word >= words {
        return Err(Error::Invalid(format!("fixture {name} has {words} cut words")));
    }
    match name {
        "unknot" => unknot(p, &mut rng),
        "hopf-pinched" => hopf(p, &mut rng, true),
        "hopf-other" => hopf(p, &mut rng, false),
        "fig8-hyp" => fig8(p, 1.0 / 3.0, 1.0, c(0.0, 0.0), c(-0.5, 0.0)),
        "fig8-hyp-prime" => fig8(p, 1.0 / 3.0, -1.0, c(-0.5, 0.0), c(-0.5, 0.0)),
        "fig8-hypbar" => fig8(p, 2.0 / 3.0, 1.0, c(0.0, 0.0), c(-0.5, 0.0)),
        "fig8-hypbar-prime" => fig8(p, 2.0 / 3.0, -1.0, c(-0.5, 0.0), c(-1.5, 0.0)),
        "kashaev-trivial" => kashaev(p),
        "diagonal" => diagonal(p, &mut rng),
        _ => Err(Error::Invalid(format!("unknown fixture {name}; known: {}", NAMES.join(", ")))),
    }
}

fn unknot(p: &FixtureParams, rng: &mut ChaCha8Rng) -> Result<Fixture> {
    let comb = closed(UNKNOT_WORDS[p.word])?;
    let g = random_sl2(rng);
    let (l1, _) = eigenvalues(&g);
    let dm = DecoratedMatrix::from_eigenvalue(g, l1)?;
    let top = Col2::new(random_c(rng), random_c(rng));
    let mu = pick(&p.mu, 0, crate::num::lg(dm.m));
    let decoration = LogDecoration { mu: vec![mu], lambda: vec![pick(&p.lambda, 0, ZERO)] };
    Ok(Fixture { name: "unknot".into(), comb, seeds: vec![(0, dm)], top, decoration })
}

/// Hopf link with commuting arc matrices P⁻¹diag(1/mᵢ, mᵢ)P. Pinched: both
/// eigenlines are (1,0)P and the decoration is μ = (μ₁, μ₂), λ = (μ₂, μ₁).
/// Other: the second eigenline is (0,1)P, the second log-meridian is μ̃₂ and
/// λ = (−μ̃₂, −μ₁).
fn hopf(p: &FixtureParams, rng: &mut ChaCha8Rng, pinched: bool) -> Result<Fixture> {
    let comb = closed(HOPF_WORDS[p.word])?;
    let mu1 = pick(&p.mu, 0, c(0.3, 0.1));
    let mu2 = pick(&p.mu, 1, c(0.7, -0.2));
    let pm = to_sl2(&mat2(random_c(rng), random_c(rng), random_c(rng), random_c(rng)));
    let pi = inv2(&pm);
    let diag = |m: C64| pi * mat2(ONE / m, ZERO, ZERO, m) * pm;
    let m1 = e2pi(mu1);
    let g1 = diag(m1);
    let v = Row2::new(ONE, ZERO) * pm;
    let w = Row2::new(ZERO, ONE) * pm;
    let (g2, v2) = if pinched { (diag(e2pi(mu2)), v) } else { (diag(e2pi(-mu2)), w) };
    let s_in = comb.input_segments()[0];
    let open = comb.component_of(s_in);
    let other = (0..comb.segment_count()).find(|&s| comb.component_of(s) != open).expect("two components");
    let seeds = vec![(s_in, DecoratedMatrix::new(g1, v)?), (other, DecoratedMatrix::new(g2, v2)?)];
    let (l_open, l_other) = if pinched { (mu2, mu1) } else { (-mu2, -mu1) };
    let default_lambda = [l_open, l_other];
    let mut mu = vec![ZERO; 2];
    let mut lambda = vec![ZERO; 2];
    mu[open] = mu1;
    mu[1 - open] = mu2;
    lambda[open] = pick(&p.lambda, 0, default_lambda[0]);
    lambda[1 - open] = pick(&p.lambda, 1, default_lambda[1]);
    let top = Col2::new(random_c(rng), random_c(rng));
    let name = if pinched { "hopf-pinched" } else { "hopf-other" };
    Ok(Fixture { name: name.into(), comb, seeds, top, decoration: LogDecoration { mu, lambda } })
}

/// Parabolic representation with τ = e^{2πi·frac}, seeded on the first two
/// arcs in the gauge h, eigenvalue sign ±1.
fn fig8(p: &FixtureParams, frac: f64, sign: f64, mu: C64, lambda: C64) -> Result<Fixture> {
    let comb = closed(FIG8_WORDS[p.word])?;
    let tau = (c(0.0, 2.0 * PI * frac)).exp();
    let h = to_sl2(&mat2(c(1.1, 0.3), c(0.4, -0.2), c(0.3, 0.5), c(1.2, -0.1)));
    let hi = inv2(&h);
    let ga = hi * mat2(ONE, ZERO, ONE, ONE) * h * c(sign, 0.0);
    let gb = hi * mat2(ONE, -tau, ZERO, ONE) * h * c(sign, 0.0);
    let va = Row2::new(ONE, ZERO) * h;
    let vb = Row2::new(ZERO, ONE) * h;
    let top = Col2::new(c(0.7, 0.2), c(1.3, -0.4));
    let da = DecoratedMatrix::new(ga, va)?;
    let db = DecoratedMatrix::new(gb, vb)?;
    let nseg = comb.segment_count();
    let pairs = std::iter::once((0, 1)).chain((0..nseg).flat_map(|a| (0..nseg).filter(move |&b| b != a).map(move |b| (a, b))));
    for (a, b) in pairs {
        let seeds = vec![(a, da), (b, db)];
        if ShadowColoring::propagate(&comb, &seeds, top).is_ok() {
            let decoration =
                LogDecoration { mu: vec![pick(&p.mu, 0, mu)], lambda: vec![pick(&p.lambda, 0, lambda)] };
            let name = format!("fig8-{}{}", if frac < 0.5 { "hyp" } else { "hypbar" }, if sign < 0.0 { "-prime" } else { "" });
            return Ok(Fixture { name, comb, seeds, top, decoration });
        }
    }
    Err(Error::Coloring("no pair of arcs carries the parabolic seeds".into()))
}

/// Every arc (−1)^{N−1}·Id with eigenline (1,1), top shadow (1,0),
/// μ = (N−1)/2, λ = 0.
fn kashaev(p: &FixtureParams) -> Result<Fixture> {
    let comb = closed(FIG8_WORDS[p.word])?;
    let s = if p.n % 2 == 0 { -ONE } else { ONE };
    let dm = DecoratedMatrix::new(Mat2::identity() * s, Row2::new(ONE, ONE))?;
    let seeds = (0..comb.segment_count()).map(|k| (k, dm)).collect();
    let mu = pick(&p.mu, 0, c((p.n as f64 - 1.0) / 2.0, 0.0));
    let decoration = LogDecoration { mu: vec![mu], lambda: vec![pick(&p.lambda, 0, ZERO)] };
    Ok(Fixture { name: "kashaev-trivial".into(), comb, seeds, top: Col2::new(ONE, ZERO), decoration })
}

/// Diagonal arc matrices diag(mᵢ, 1/mᵢ) with the common eigenline (0,1)
/// on a Hopf cut word; every crossing is pinched and E-nilpotent. The
/// default decoration is the standard one, λ = lk·μ.
fn diagonal(p: &FixtureParams, rng: &mut ChaCha8Rng) -> Result<Fixture> {
    let comb = closed(HOPF_WORDS[p.word])?;
    let k = comb.component_count;
    let mu: Vec<C64> = (0..k).map(|i| pick(&p.mu, i, c(0.3 - 0.15 * i as f64, 0.1))).collect();
    let mut seeds = Vec::new();
    for comp in 0..k {
        let s = (0..comb.segment_count()).find(|&s| comb.component_of(s) == comp).expect("component has a segment");
        let m = e2pi(mu[comp]);
        seeds.push((s, DecoratedMatrix::new(mat2(m, ZERO, ZERO, ONE / m), Row2::new(ZERO, ONE))?));
    }
    let lk = comb.linking_matrix();
    let lambda = (0..k)
        .map(|i| pick(&p.lambda, i, (0..k).map(|j| mu[j] * lk[i][j]).sum()))
        .collect();
    let top = Col2::new(random_c(rng), random_c(rng));
    Ok(Fixture { name: "diagonal".into(), comb, seeds, top, decoration: LogDecoration { mu, lambda } })
}

/// Random decorated matrices on the input strands of an open tangle.
pub fn random_input_seeds(comb: &Combinatorics, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, DecoratedMatrix)>> {
    comb.input_segments()
        .into_iter()
        .map(|s| {
            let g = random_sl2(rng);
            Ok((s, DecoratedMatrix::from_eigenvalue(g, eigenvalues(&g).0)?))
        })
        .collect()
}

/// Random decorated matrices on one segment per component.
pub fn random_component_seeds(comb: &Combinatorics, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, DecoratedMatrix)>> {
    (0..comb.component_count)
        .map(|k| {
            let s = (0..comb.segment_count()).find(|&s| comb.component_of(s) == k).expect("component has a segment");
            let g = random_sl2(rng);
            Ok((s, DecoratedMatrix::from_eigenvalue(g, eigenvalues(&g).0)?))
        })
        .collect()
}

/// Principal log-coloring of a freshly propagated open tangle.
pub fn colored_tangle(
    word: &str,
    seeds_of: impl FnOnce(&Combinatorics) -> Result<Vec<(usize, DecoratedMatrix)>>,
    top: Col2,
) -> Result<(ShadowColoring, LogColoring)> {
    let comb = Combinatorics::new(&TangleDiagram::parse(word)?, false)?;
    let seeds = seeds_of(&comb)?;
    let sc = ShadowColoring::propagate(&comb, &seeds, top)?;
    let lc = LogColoring::lift(&sc, &Default::default())?;
    Ok((sc, lc))
}
