//! Digraph transformations that leave the hike monoid unchanged, plus the
//! gluing construction used to grow realizable graphs.

use serde::Serialize;

use crate::graph::MultiDigraph;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformStep {
    ReverseAll,
    Jump(usize),
    CubicSplit(usize),
    /// Glue `other` on, identifying its vertex `v2` with vertex `v1`.
    Glue { other: MultiDigraph, v1: usize, v2: usize },
}

/// A replayable record of transformations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TransformLog {
    steps: Vec<TransformStep>,
}

impl TransformLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, step: TransformStep) {
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[TransformStep] {
        &self.steps
    }

    pub fn extend(&mut self, other: TransformLog) {
        self.steps.extend(other.steps);
    }

    pub fn replay(&self, g: &MultiDigraph) -> Result<MultiDigraph> {
        let mut g = g.clone();
        for step in &self.steps {
            g = match step {
                TransformStep::ReverseAll => reverse_all(&g),
                TransformStep::Jump(v) => jump(&g, *v)?,
                TransformStep::CubicSplit(v) => split_vertex(&g, *v)?,
                TransformStep::Glue { other, v1, v2 } => glue(&g, *v1, other, *v2)?,
            };
        }
        Ok(g)
    }
}

/// Reverses every arc. Cycles keep their vertex sets.
pub fn reverse_all(g: &MultiDigraph) -> MultiDigraph {
    g.transpose()
}

/// Why `v` cannot be jumped, if it cannot.
fn jump_obstacle(g: &MultiDigraph, v: usize) -> Option<&'static str> {
    if g.get(v, v) > 0 {
        return Some("vertex has a self-loop");
    }
    let single = |it: &mut dyn Iterator<Item = (usize, u64)>| it.take(2).count() <= 1;
    if single(&mut g.successors(v)) || single(&mut g.predecessors(v)) {
        None
    } else {
        Some("vertex has several in-neighbours and several out-neighbours")
    }
}

pub fn can_jump(g: &MultiDigraph, v: usize) -> bool {
    v < g.n() && jump_obstacle(g, v).is_none()
}

/// Removes the transit vertex `v`, replacing each pair of arcs `w → v ×a`,
/// `v → x ×b` by `w → x ×ab` (a self-loop when `w = x`).
///
/// Allowed when `v` has no self-loop and all its out-arcs go to one vertex or
/// all its in-arcs come from one vertex: cycles through `v` then correspond
/// one-to-one to cycles through that neighbour, and intersections are kept.
pub fn jump(g: &MultiDigraph, v: usize) -> Result<MultiDigraph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if let Some(why) = jump_obstacle(g, v) {
        return Err(Error::Jump { vertex: v, why });
    }
    let mut h = g.clone();
    for (w, a) in g.predecessors(v) {
        for (x, b) in g.successors(v) {
            let k = a.checked_mul(b).ok_or(Error::Overflow("jump multiplicity"))?;
            h.add_arcs(w, x, k);
        }
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    Ok(h.induced(&keep))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducePolicy {
    LowestFirst,
    HighestFirst,
}

/// Jumps vertices of in- or out-degree 1 (with multiplicity) until none is
/// left or one vertex remains, lowest index first.
pub fn reduce(g: &MultiDigraph) -> Result<(MultiDigraph, TransformLog)> {
    reduce_with(g, ReducePolicy::LowestFirst)
}

pub fn reduce_with(g: &MultiDigraph, policy: ReducePolicy) -> Result<(MultiDigraph, TransformLog)> {
    if !g.is_strongly_connected() {
        return Err(Error::Precondition("reduce expects a strongly connected digraph".into()));
    }
    let mut g = g.clone();
    let mut log = TransformLog::new();
    while g.n() > 1 {
        let eligible = |&v: &usize| (g.in_degree(v) == 1 || g.out_degree(v) == 1) && can_jump(&g, v);
        let pick = match policy {
            ReducePolicy::LowestFirst => (0..g.n()).find(eligible),
            ReducePolicy::HighestFirst => (0..g.n()).rev().find(eligible),
        };
        let Some(v) = pick else { break };
        g = jump(&g, v)?;
        log.push(TransformStep::Jump(v));
    }
    Ok((g, log))
}

/// Replaces `v` by a directed chain `w_1 → … → w_{p+k−2}` whose vertices all
/// have total degree 3, `p` and `k` being the in- and out-degree of `v`.
///
/// In-arcs (listed with multiplicity, tails ascending) enter `w_1, w_1, w_2, …,
/// w_{p−1}`; out-arcs (heads ascending) leave `w_p, …, w_{p+k−2}, w_{p+k−2}`.
/// A self-loop becomes an arc from its out-port back to its in-port. Other
/// vertices keep their order; the chain is appended at the end.
pub fn split_vertex(g: &MultiDigraph, v: usize) -> Result<MultiDigraph> {
    let n = g.n();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let expand = |it: &mut dyn Iterator<Item = (usize, u64)>| -> Vec<usize> {
        it.flat_map(|(u, k)| std::iter::repeat_n(u, k as usize)).collect()
    };
    let ins = expand(&mut g.predecessors(v));
    let outs = expand(&mut g.successors(v));
    let (p, k) = (ins.len(), outs.len());
    if p == 0 || k == 0 || p + k < 3 {
        return Err(Error::Precondition(format!("vertex {v} has in-degree {p} and out-degree {k}; need both ≥ 1 and total ≥ 3")));
    }
    let len = p + k - 2;
    let base = n - 1;
    let old = |u: usize| if u < v { u } else { u - 1 };
    let in_port = |s: usize| base + s.saturating_sub(1);
    let out_port = |q: usize| base + if q + 1 < k { p + q - 1 } else { len - 1 };

    let mut h = MultiDigraph::new(base + len);
    for a in (0..n).filter(|&a| a != v) {
        for (b, m) in g.successors(a).filter(|&(b, _)| b != v) {
            h.add_arcs(old(a), old(b), m);
        }
    }
    for c in 0..len - 1 {
        h.add_arcs(base + c, base + c + 1, 1);
    }
    let mut loop_in = Vec::new();
    for (s, &u) in ins.iter().enumerate() {
        if u == v {
            loop_in.push(in_port(s));
        } else {
            h.add_arcs(old(u), in_port(s), 1);
        }
    }
    let mut loops = loop_in.into_iter();
    for (q, &x) in outs.iter().enumerate() {
        if x == v {
            h.add_arcs(out_port(q), loops.next().expect("self-loops appear in both lists"), 1);
        } else {
            h.add_arcs(out_port(q), old(x), 1);
        }
    }
    Ok(h)
}

/// A digraph with every vertex of total degree 3 and the same hike monoid.
///
/// Requires a strongly connected digraph whose vertices all have total
/// degree at least 3 (as after [`reduce`]).
pub fn to_cubic(g: &MultiDigraph) -> Result<MultiDigraph> {
    to_cubic_logged(g).map(|(h, _)| h)
}

pub fn to_cubic_logged(g: &MultiDigraph) -> Result<(MultiDigraph, TransformLog)> {
    if !g.is_strongly_connected() {
        return Err(Error::Precondition("to_cubic expects a strongly connected digraph".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.in_degree(v) + g.out_degree(v) < 3) {
        return Err(Error::Precondition(format!("vertex {v} has total degree below 3")));
    }
    let mut h = g.clone();
    let mut log = TransformLog::new();
    for _ in 0..g.n() {
        h = split_vertex(&h, 0)?;
        log.push(TransformStep::CubicSplit(0));
    }
    Ok((h, log))
}

/// Disjoint union of `g1` and `g2` with `v2` fused onto `v1`. Vertices of
/// `g1` keep their indices; those of `g2` other than `v2` follow in order.
pub fn glue(g1: &MultiDigraph, v1: usize, g2: &MultiDigraph, v2: usize) -> Result<MultiDigraph> {
    if v1 >= g1.n() {
        return Err(Error::VertexOutOfRange { vertex: v1, n: g1.n() });
    }
    if v2 >= g2.n() {
        return Err(Error::VertexOutOfRange { vertex: v2, n: g2.n() });
    }
    let map = glue_map(g1.n(), v1, v2, g2.n());
    let mut h = MultiDigraph::new(g1.n() + g2.n() - 1);
    for i in 0..g1.n() {
        for (j, k) in g1.successors(i) {
            h.add_arcs(i, j, k);
        }
    }
    for i in 0..g2.n() {
        for (j, k) in g2.successors(i) {
            h.add_arcs(map[i], map[j], k);
        }
    }
    Ok(h)
}

/// Where each vertex of the second graph lands in [`glue`]'s result.
pub fn glue_map(n1: usize, v1: usize, v2: usize, n2: usize) -> Vec<usize> {
    (0..n2).map(|u| if u == v2 { v1 } else if u < v2 { n1 + u } else { n1 + u - 1 }).collect()
}
