//! Framed oriented tangle diagrams as slice words.
//!
//! A diagram is read left to right as a sequence of vertical slices separated
//! by `;`. Each slice lists its items from top to bottom: `id`, `xp`, `xn`,
//! `cupr`, `cupl`, `capr`, `capl`. Orientation marks `>` (rightward) and `<`
//! (leftward) may follow `id` (one mark) or a crossing (two marks, top strand
//! first). `cupr` opens a pair whose top arm runs rightward; `cupl` the
//! opposite. `capr` closes a pair whose top strand runs rightward, `capl` the
//! opposite. Framing is the blackboard framing.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Strand direction: `+1` rightward, `-1` leftward.
pub type Orient = i8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ItemKind {
    Id,
    Xp,
    Xn,
    Cupr,
    Cupl,
    Capr,
    Capl,
}

impl ItemKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "id" => Self::Id,
            "xp" => Self::Xp,
            "xn" => Self::Xn,
            "cupr" => Self::Cupr,
            "cupl" => Self::Cupl,
            "capr" => Self::Capr,
            "capl" => Self::Capl,
            _ => return None,
        })
    }

    pub fn token(self) -> &'static str {
        match self {
            Self::Id => "id",
            Self::Xp => "xp",
            Self::Xn => "xn",
            Self::Cupr => "cupr",
            Self::Cupl => "cupl",
            Self::Capr => "capr",
            Self::Capl => "capl",
        }
    }

    /// (strands consumed, strands produced)
    pub fn arity(self) -> (usize, usize) {
        match self {
            Self::Id => (1, 1),
            Self::Xp | Self::Xn => (2, 2),
            Self::Cupr | Self::Cupl => (0, 2),
            Self::Capr | Self::Capl => (2, 0),
        }
    }
}

/// One slice item with the orientations of the strands it consumes
/// (for cups: of the strands it produces, top first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub kind: ItemKind,
    pub orient: Vec<Orient>,
}

impl Item {
    fn token(&self) -> String {
        let mut s = self.kind.token().to_string();
        if matches!(self.kind, ItemKind::Id | ItemKind::Xp | ItemKind::Xn) {
            for &o in &self.orient {
                s.push(if o > 0 { '>' } else { '<' });
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slice {
    pub items: Vec<Item>,
}

/// A validated slice-word diagram. All orientations are resolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleDiagram {
    pub slices: Vec<Slice>,
    pub inputs: Vec<Orient>,
    pub outputs: Vec<Orient>,
}

struct RawItem {
    kind: ItemKind,
    marks: Vec<Orient>,
    token: usize,
}

fn lex(text: &str) -> Result<Vec<Vec<RawItem>>> {
    let mut out = Vec::new();
    for (si, sl) in text.split(';').enumerate() {
        let mut items = Vec::new();
        for (ti, tok) in sl.split_whitespace().enumerate() {
            let base = tok.trim_end_matches(['<', '>']);
            let kind = ItemKind::parse(base).ok_or_else(|| Error::Syntax {
                slice: si,
                token: ti,
                msg: format!("unknown token `{tok}`"),
            })?;
            let marks: Vec<Orient> =
                tok[base.len()..].chars().map(|ch| if ch == '>' { 1 } else { -1 }).collect();
            let allowed = match kind {
                ItemKind::Id => marks.len() <= 1,
                ItemKind::Xp | ItemKind::Xn => marks.is_empty() || marks.len() == 2,
                _ => marks.is_empty(),
            };
            if !allowed {
                return Err(Error::Syntax {
                    slice: si,
                    token: ti,
                    msg: format!("bad orientation marks on `{tok}`"),
                });
            }
            items.push(RawItem { kind, marks, token: ti });
        }
        if items.is_empty() {
            return Err(Error::Syntax { slice: si, token: 0, msg: "empty slice".into() });
        }
        out.push(items);
    }
    Ok(out)
}

impl TangleDiagram {
    pub fn parse(text: &str) -> Result<Self> {
        let raw = lex(text)?;
        let mut inputs = Vec::new();
        for it in &raw[0] {
            match it.kind {
                ItemKind::Id => inputs.push(it.marks.first().copied().unwrap_or(1)),
                ItemKind::Xp | ItemKind::Xn => {
                    if it.marks.is_empty() {
                        inputs.extend([1, 1]);
                    } else {
                        inputs.extend(&it.marks);
                    }
                }
                ItemKind::Capr => inputs.extend([1, -1]),
                ItemKind::Capl => inputs.extend([-1, 1]),
                ItemKind::Cupr | ItemKind::Cupl => {}
            }
        }
        let mut cur = inputs.clone();
        let mut slices = Vec::new();
        for (si, items) in raw.iter().enumerate() {
            let need: usize = items.iter().map(|it| it.kind.arity().0).sum();
            if need != cur.len() {
                return Err(Error::Arity {
                    slice: si,
                    msg: format!("slice consumes {need} strands but {} arrive", cur.len()),
                });
            }
            let mut i = 0;
            let mut next = Vec::new();
            let mut resolved = Vec::new();
            for it in items {
                let (k, _) = it.kind.arity();
                let incoming = &cur[i..i + k];
                if !it.marks.is_empty() && it.marks != incoming {
                    return Err(Error::Orientation {
                        slice: si,
                        msg: format!("token {} expects {:?}, strands are {:?}", it.token, it.marks, incoming),
                    });
                }
                let orient = match it.kind {
                    ItemKind::Id => {
                        next.push(incoming[0]);
                        incoming.to_vec()
                    }
                    ItemKind::Xp | ItemKind::Xn => {
                        next.extend([incoming[1], incoming[0]]);
                        incoming.to_vec()
                    }
                    ItemKind::Cupr => {
                        next.extend([1, -1]);
                        vec![1, -1]
                    }
                    ItemKind::Cupl => {
                        next.extend([-1, 1]);
                        vec![-1, 1]
                    }
                    ItemKind::Capr | ItemKind::Capl => {
                        let want: [Orient; 2] = if it.kind == ItemKind::Capr { [1, -1] } else { [-1, 1] };
                        if incoming != want {
                            return Err(Error::Orientation {
                                slice: si,
                                msg: format!("cap at token {} needs {:?}, strands are {:?}", it.token, want, incoming),
                            });
                        }
                        incoming.to_vec()
                    }
                };
                resolved.push(Item { kind: it.kind, orient });
                i += k;
            }
            slices.push(Slice { items: resolved });
            cur = next;
        }
        Ok(Self { slices, inputs, outputs: cur })
    }

    /// Serialized slice word with every orientation made explicit.
    pub fn to_word(&self) -> String {
        self.slices
            .iter()
            .map(|s| s.items.iter().map(Item::token).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" ; ")
    }

    pub fn identity(orients: &[Orient]) -> Self {
        let items = orients.iter().map(|&o| Item { kind: ItemKind::Id, orient: vec![o] }).collect();
        Self { slices: vec![Slice { items }], inputs: orients.to_vec(), outputs: orients.to_vec() }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.outputs != other.inputs {
            return Err(Error::Boundary(format!(
                "outputs {:?} do not match inputs {:?}",
                self.outputs, other.inputs
            )));
        }
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().cloned());
        Ok(Self { slices, inputs: self.inputs.clone(), outputs: other.outputs.clone() })
    }

    /// `self` stacked above `other`; the shorter one is padded with identities.
    pub fn union(&self, other: &Self) -> Self {
        let len = self.slices.len().max(other.slices.len());
        let pad = |d: &Self, i: usize| -> Vec<Item> {
            if i < d.slices.len() {
                d.slices[i].items.clone()
            } else {
                d.outputs.iter().map(|&o| Item { kind: ItemKind::Id, orient: vec![o] }).collect()
            }
        };
        let slices = (0..len)
            .map(|i| {
                let mut items = pad(self, i);
                items.extend(pad(other, i));
                Slice { items }
            })
            .collect();
        let cat = |a: &[Orient], b: &[Orient]| a.iter().chain(b).copied().collect::<Vec<_>>();
        Self { slices, inputs: cat(&self.inputs, &other.inputs), outputs: cat(&self.outputs, &other.outputs) }
    }

    /// Mirror image: every crossing changes sign.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for s in &mut d.slices {
            for it in &mut s.items {
                it.kind = match it.kind {
                    ItemKind::Xp => ItemKind::Xn,
                    ItemKind::Xn => ItemKind::Xp,
                    k => k,
                };
            }
        }
        d
    }

    pub fn crossing_count(&self) -> usize {
        self.slices
            .iter()
            .flat_map(|s| &s.items)
            .filter(|it| matches!(it.kind, ItemKind::Xp | ItemKind::Xn))
            .count()
    }
}

impl fmt::Display for TangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn with_len(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn add(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Dense class labels ordered by the smallest member.
    pub(crate) fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut map = BTreeMap::new();
        let mut out = vec![0; n];
        for (x, slot) in out.iter_mut().enumerate() {
            let r = self.find(x);
            let next = map.len();
            *slot = *map.entry(r).or_insert(next);
        }
        (out, map.len())
    }
}

/// Role of a strand at a crossing endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    Over,
    Under,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentInfo {
    pub component: usize,
    pub arc: usize,
    /// Region on the left and on the right of the strand's direction.
    pub left: usize,
    pub right: usize,
    /// Role at the crossing where the segment starts / ends, if any.
    pub start: Option<Role>,
    pub end: Option<Role>,
}

/// A crossing labelled in its left-to-right frame: incoming segments 1 (top
/// at the left) and 2, outgoing 2′ and 1′, regions N, W, S, E.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: i8,
    /// Orientations of the top and bottom strands entering from the left.
    pub pattern: (Orient, Orient),
    pub slice: usize,
    pub s1: usize,
    pub s2: usize,
    pub s1p: usize,
    pub s2p: usize,
    pub n: usize,
    pub w: usize,
    pub s: usize,
    pub e: usize,
}

impl Crossing {
    /// The segments whose right-hand region is `g`·(left-hand region):
    /// (segment, left region, right region).
    pub fn local_sides(&self) -> [(usize, usize, usize); 4] {
        [(self.s1, self.n, self.w), (self.s2, self.w, self.s), (self.s2p, self.n, self.e), (self.s1p, self.e, self.s)]
    }

    /// Over-strand segments (incoming, outgoing).
    pub fn over(&self) -> (usize, usize) {
        if self.sign > 0 {
            (self.s1, self.s1p)
        } else {
            (self.s2, self.s2p)
        }
    }

    pub fn under(&self) -> (usize, usize) {
        if self.sign > 0 {
            (self.s2, self.s2p)
        } else {
            (self.s1, self.s1p)
        }
    }
}

/// Evaluation step of one slice item.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Op {
    Id,
    Crossing(usize),
    /// Cup producing a segment whose top arm has the given orientation.
    Cup { segment: usize, orient: Orient },
    /// Cap consuming a segment whose top arm has the given orientation.
    Cap { segment: usize, orient: Orient },
}

/// Vertical cut between slices: the strands (segment, orientation) from top
/// to bottom and the regions between them (one more than strands).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    pub strands: Vec<(usize, Orient)>,
    pub regions: Vec<usize>,
}

/// Incidence data of a diagram. With `closed` set, boundary strand k on the
/// left is identified with boundary strand k on the right (the diagram is a
/// cut presentation); the two stay distinct segments.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Combinatorics {
    pub word: String,
    pub closed: bool,
    pub segments: Vec<SegmentInfo>,
    pub region_count: usize,
    pub arc_count: usize,
    pub component_count: usize,
    pub crossings: Vec<Crossing>,
    pub ops: Vec<Vec<Op>>,
    pub cuts: Vec<Cut>,
    /// (input segment, output segment) pairs identified by closure.
    pub closure: Vec<(usize, usize)>,
    pub top_region: usize,
}

struct RawCrossing {
    sign: i8,
    pattern: (Orient, Orient),
    slice: usize,
    a_left: usize,
    b_left: usize,
    b_right: usize,
    a_right: usize,
    top: usize,
    w: usize,
    e: usize,
    bot: usize,
}

impl Combinatorics {
    pub fn new(d: &TangleDiagram, closed: bool) -> Result<Self> {
        if closed && d.inputs != d.outputs {
            return Err(Error::Boundary("closure needs matching boundary orientations".into()));
        }
        let mut pieces = UnionFind::default();
        let mut regs = UnionFind::default();
        let mut cut: Vec<(usize, Orient)> = d.inputs.iter().map(|&o| (pieces.add(), o)).collect();
        let mut slots: Vec<usize> = (0..=cut.len()).map(|_| regs.add()).collect();
        let mut raw_cuts = vec![(cut.clone(), slots.clone())];
        let mut raw_x = Vec::new();
        enum RawOp {
            Id,
            X(usize),
            Cup(usize, Orient),
            Cap(usize, Orient),
        }
        let mut raw_ops = Vec::new();
        for (si, slice) in d.slices.iter().enumerate() {
            let mut ops = Vec::new();
            let mut i = 0;
            let mut next = Vec::new();
            let mut nslots = vec![regs.add()];
            regs.union(slots[0], nslots[0]);
            for it in &slice.items {
                match it.kind {
                    ItemKind::Id => {
                        next.push(cut[i]);
                        i += 1;
                        ops.push(RawOp::Id);
                    }
                    ItemKind::Xp | ItemKind::Xn => {
                        let ((pa, oa), (pb, ob)) = (cut[i], cut[i + 1]);
                        let (qa, qb) = (pieces.add(), pieces.add());
                        let e = regs.add();
                        next.extend([(qb, ob), (qa, oa)]);
                        nslots.push(e);
                        ops.push(RawOp::X(raw_x.len()));
                        raw_x.push(RawCrossing {
                            sign: if it.kind == ItemKind::Xp { 1 } else { -1 },
                            pattern: (oa, ob),
                            slice: si,
                            a_left: pa,
                            b_left: pb,
                            b_right: qb,
                            a_right: qa,
                            top: slots[i],
                            w: slots[i + 1],
                            e,
                            bot: slots[i + 2],
                        });
                        i += 2;
                    }
                    ItemKind::Cupr | ItemKind::Cupl => {
                        let o: Orient = if it.kind == ItemKind::Cupr { 1 } else { -1 };
                        let p = pieces.add();
                        next.extend([(p, o), (p, -o)]);
                        nslots.push(regs.add());
                        ops.push(RawOp::Cup(p, o));
                    }
                    ItemKind::Capr | ItemKind::Capl => {
                        let ((pa, oa), (pb, _)) = (cut[i], cut[i + 1]);
                        pieces.union(pa, pb);
                        regs.union(slots[i], slots[i + 2]);
                        ops.push(RawOp::Cap(pa, oa));
                        i += 2;
                    }
                }
                if matches!(it.kind, ItemKind::Capr | ItemKind::Capl) {
                    let last = *nslots.last().expect("slot");
                    regs.union(slots[i], last);
                } else {
                    let r = regs.add();
                    nslots.push(r);
                    regs.union(slots[i], r);
                }
            }
            cut = next;
            slots = nslots;
            raw_cuts.push((cut.clone(), slots.clone()));
            raw_ops.push(ops);
        }

        let (seg_of, nseg) = pieces.labels();
        let (reg_of, nreg) = regs.labels();
        let crossings: Vec<Crossing> = raw_x
            .iter()
            .map(|r| {
                let (al, bl, br, ar) = (seg_of[r.a_left], seg_of[r.b_left], seg_of[r.b_right], seg_of[r.a_right]);
                let (top, w, e, bot) = (reg_of[r.top], reg_of[r.w], reg_of[r.e], reg_of[r.bot]);
                let (s1, s2, s2p, s1p, n, ww, s, ee) = match r.pattern {
                    (1, 1) => (al, bl, br, ar, top, w, bot, e),
                    (-1, -1) => (ar, br, bl, al, bot, e, top, w),
                    (1, -1) => (br, al, ar, bl, e, top, w, bot),
                    _ => (bl, ar, al, br, w, bot, e, top),
                };
                Crossing { sign: r.sign, pattern: r.pattern, slice: r.slice, s1, s2, s1p, s2p, n, w: ww, s, e: ee }
            })
            .collect();
        let ops: Vec<Vec<Op>> = raw_ops
            .iter()
            .map(|ops| {
                ops.iter()
                    .map(|op| match *op {
                        RawOp::Id => Op::Id,
                        RawOp::X(k) => Op::Crossing(k),
                        RawOp::Cup(p, o) => Op::Cup { segment: seg_of[p], orient: o },
                        RawOp::Cap(p, o) => Op::Cap { segment: seg_of[p], orient: o },
                    })
                    .collect()
            })
            .collect();
        let cuts: Vec<Cut> = raw_cuts
            .iter()
            .map(|(c, s)| Cut {
                strands: c.iter().map(|&(p, o)| (seg_of[p], o)).collect(),
                regions: s.iter().map(|&r| reg_of[r]).collect(),
            })
            .collect();
        let closure: Vec<(usize, usize)> = if closed {
            cuts[0]
                .strands
                .iter()
                .zip(&cuts[cuts.len() - 1].strands)
                .map(|(&(a, _), &(b, _))| (a, b))
                .collect()
        } else {
            Vec::new()
        };

        let mut lr: Vec<Option<(usize, usize)>> = vec![None; nseg];
        let mut set_lr = |s: usize, v: (usize, usize)| -> Result<()> {
            match lr[s] {
                Some(old) if old != v => Err(Error::Invalid(format!("segment {s} has inconsistent sides"))),
                _ => {
                    lr[s] = Some(v);
                    Ok(())
                }
            }
        };
        for c in &cuts {
            for (k, &(s, o)) in c.strands.iter().enumerate() {
                let (above, below) = (c.regions[k], c.regions[k + 1]);
                set_lr(s, if o > 0 { (above, below) } else { (below, above) })?;
            }
        }
        for x in &crossings {
            for (s, l, r) in x.local_sides() {
                set_lr(s, (l, r))?;
            }
        }

        let mut comp = UnionFind::with_len(nseg);
        let mut arcs = UnionFind::with_len(nseg);
        for x in &crossings {
            comp.union(x.s1, x.s1p);
            comp.union(x.s2, x.s2p);
            let (a, b) = x.over();
            arcs.union(a, b);
        }
        for &(a, b) in &closure {
            comp.union(a, b);
            arcs.union(a, b);
        }
        let (comp_of, ncomp) = comp.labels();
        let (arc_of, narc) = arcs.labels();

        let mut start = vec![None; nseg];
        let mut end = vec![None; nseg];
        for x in &crossings {
            let (oi, oo) = x.over();
            let (ui, uo) = x.under();
            end[oi] = Some(Role::Over);
            end[ui] = Some(Role::Under);
            start[oo] = Some(Role::Over);
            start[uo] = Some(Role::Under);
        }
        for &(si, so) in &closure {
            if start[si].is_none() {
                start[si] = start[so];
            }
            if end[so].is_none() {
                end[so] = end[si];
            }
        }
        let segments = (0..nseg)
            .map(|s| {
                let (left, right) = lr[s].expect("every segment meets a cut or a crossing");
                SegmentInfo { component: comp_of[s], arc: arc_of[s], left, right, start: start[s], end: end[s] }
            })
            .collect();
        Ok(Self {
            word: d.to_word(),
            closed,
            segments,
            region_count: nreg,
            arc_count: narc,
            component_count: ncomp,
            crossings,
            ops,
            top_region: cuts[0].regions[0],
            cuts,
            closure,
        })
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn component_of(&self, s: usize) -> usize {
        self.segments[s].component
    }

    pub fn input_segments(&self) -> Vec<usize> {
        self.cuts[0].strands.iter().map(|&(s, _)| s).collect()
    }

    pub fn output_segments(&self) -> Vec<usize> {
        self.cuts[self.cuts.len() - 1].strands.iter().map(|&(s, _)| s).collect()
    }

    /// Segments on the right side of a closure pair.
    pub fn is_closure_output(&self, s: usize) -> bool {
        self.closure.iter().any(|&(_, so)| so == s)
    }

    /// η_k: +1 for over→under segments, −1 for under→over, 0 otherwise
    /// (only segments bounded by crossings at both ends get a value).
    pub fn eta(&self, s: usize) -> Option<i64> {
        let seg = &self.segments[s];
        match (seg.start?, seg.end?) {
            (Role::Over, Role::Under) => Some(1),
            (Role::Under, Role::Over) => Some(-1),
            _ => Some(0),
        }
    }

    /// lk(i,j) = ½·Σ signs over crossings of i with j; diagonal = writhe.
    pub fn linking_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.component_count;
        let mut m = vec![vec![0.0; n]; n];
        for x in &self.crossings {
            let (i, j) = (self.component_of(x.s1), self.component_of(x.s2));
            m[i][j] += x.sign as f64 / 2.0;
            m[j][i] += x.sign as f64 / 2.0;
        }
        m
    }

    pub fn wirtinger(&self) -> WirtingerPresentation {
        let arc = |s: usize| self.segments[s].arc;
        let relations = self
            .crossings
            .iter()
            .map(|x| {
                let (o, _) = x.over();
                let (ui, uo) = x.under();
                WirtingerRelation { sign: x.sign, over: arc(o), under_in: arc(ui), under_out: arc(uo) }
            })
            .collect();
        WirtingerPresentation { generators: self.arc_count, relations }
    }

    /// Face count predicted by the Euler characteristic of a connected
    /// diagram in the strip.
    pub fn euler_region_count(&self) -> usize {
        self.crossings.len() + self.cuts[0].strands.len().max(1) + 1
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("combinatorics serialize")
    }
}

/// Relation of one crossing. Positive: x_{2′} = x₁⁻¹x₂x₁ with x₁ the over
/// arc; negative: x_{1′} = x₂x₁x₂⁻¹ with x₂ the over arc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WirtingerRelation {
    pub sign: i8,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

impl WirtingerRelation {
    pub fn generators(&self) -> usize {
        let mut v = vec![self.over, self.under_in, self.under_out];
        v.sort_unstable();
        v.dedup();
        v.len()
    }
}

impl fmt::Display for WirtingerRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (o, i, u) = (self.over, self.under_in, self.under_out);
        if self.sign > 0 {
            write!(f, "x{u} = x{o}^-1 x{i} x{o}")
        } else {
            write!(f, "x{u} = x{o} x{i} x{o}^-1")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WirtingerPresentation {
    pub generators: usize,
    pub relations: Vec<WirtingerRelation>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comb(w: &str, closed: bool) -> Combinatorics {
        Combinatorics::new(&TangleDiagram::parse(w).unwrap(), closed).unwrap()
    }

    #[test]
    fn identity_strand() {
        let c = comb("id", false);
        assert_eq!((c.segment_count(), c.arc_count, c.region_count, c.component_count), (1, 1, 2, 1));
        assert_eq!(c.wirtinger().relations.len(), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(TangleDiagram::parse("id ; xp"), Err(Error::Arity { .. })));
        assert!(matches!(TangleDiagram::parse("id ; foo"), Err(Error::Syntax { slice: 1, .. })));
        assert!(matches!(TangleDiagram::parse("id id ; capl"), Err(Error::Orientation { .. })));
        assert!(matches!(TangleDiagram::parse("id> ; id<"), Err(Error::Orientation { .. })));
    }

    #[test]
    fn hopf_pinch_shape() {
        let c = comb("xp ; xp", false);
        assert_eq!(c.crossings.len(), 2);
        assert_eq!(c.segment_count(), 6);
        assert_eq!(c.linking_matrix(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let x0 = &c.crossings[0];
        let x1 = &c.crossings[1];
        assert_eq!((x1.s1, x1.s2), (x0.s2p, x0.s1p));
    }

    #[test]
    fn positive_crossing_keeps_over_arc() {
        let c = comb("xp", false);
        let x = &c.crossings[0];
        assert_eq!(c.segments[x.s1].arc, c.segments[x.s1p].arc);
        let r = &c.wirtinger().relations[0];
        assert_eq!(r.to_string(), format!("x{} = x{}^-1 x{} x{}", r.under_out, r.over, r.under_in, r.over));
    }

    #[test]
    fn kink_writhe_and_mirror() {
        let c = comb("id cupr ; xp id< ; id capr", true);
        assert_eq!(c.linking_matrix(), vec![vec![1.0]]);
        let m = Combinatorics::new(&TangleDiagram::parse("id cupr ; xp id< ; id capr").unwrap().mirror(), true).unwrap();
        assert_eq!(m.linking_matrix(), vec![vec![-1.0]]);
    }

    #[test]
    fn compose_and_union() {
        let id = TangleDiagram::parse("id").unwrap();
        assert_eq!(id.compose(&id).unwrap().inputs, vec![1]);
        let two = id.union(&id);
        assert_eq!(two.inputs, vec![1, 1]);
        assert_eq!(Combinatorics::new(&two, false).unwrap().component_count, 2);
        let left = TangleDiagram::parse("id<").unwrap();
        assert!(id.compose(&left).is_err());
    }
}
