use serde::Serialize;

use crate::graph::{enumerate_cliques, SimpleGraph, VertexSet};
use crate::{Error, Result};

/// Cliques of `H` covering all its vertices and edges, none contained in
/// another. Clique `i` stands for vertex `i` of a candidate realization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CliqueCover {
    cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(h: &SimpleGraph, cliques: Vec<VertexSet>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Precondition(msg));
        for (i, &k) in cliques.iter().enumerate() {
            if k.is_empty() || k.max().is_some_and(|m| m >= h.n()) {
                return bad(format!("clique {i} is empty or out of range"));
            }
            let vs = k.to_vec();
            if vs.iter().enumerate().any(|(a, &u)| vs[a + 1..].iter().any(|&v| !h.has_edge(u, v))) {
                return bad(format!("set {i} is not a clique"));
            }
            if cliques.iter().enumerate().any(|(j, &o)| j != i && k.is_subset(o)) {
                return bad(format!("clique {i} is contained in another"));
            }
        }
        let union = cliques.iter().fold(VertexSet::EMPTY, |a, &k| a.union(k));
        if union != VertexSet::full(h.n()) {
            return bad("some vertex is uncovered".into());
        }
        if let Some((u, v)) = h.edges().find(|&(u, v)| !cliques.iter().any(|k| k.contains(u) && k.contains(v))) {
            return bad(format!("edge {{{u}, {v}}} is uncovered"));
        }
        Ok(CliqueCover { cliques })
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// Default cap on cover size: a reduced realization has at most `|V_H| − 1`
/// vertices.
pub fn default_size_cap(h: &SimpleGraph) -> usize {
    h.n().saturating_sub(1).max(1)
}

/// Lazily enumerates every antichain clique cover of `h` with at most
/// `size_cap` cliques, by increasing size.
///
/// Within one size the search branches on the first uncovered element (edge,
/// or isolated vertex) over the cliques containing it; the `i`-th branch
/// forbids the cliques of branches `1..i` so each cover is produced once.
/// Once everything is covered, the remaining slots are filled with further
/// non-forbidden cliques, so covers containing redundant cliques are
/// produced too.
pub fn enumerate_clique_covers(h: &SimpleGraph, size_cap: usize) -> Result<CoverStream> {
    if size_cap == 0 {
        return Err(Error::Precondition("cover size cap must be at least 1".into()));
    }
    let all = enumerate_cliques(h)?;
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let isolated: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 0).collect();
    let ne = edges.len() + isolated.len();
    if ne > 128 {
        return Err(Error::SizeCap { what: "cover elements (edges + isolated vertices)", n: ne, cap: 128 });
    }
    // A singleton of a non-isolated vertex always sits inside a covering edge
    // clique, so it can never be part of an antichain cover.
    let cliques: Vec<VertexSet> =
        all.into_iter().filter(|k| k.len() > 1 || isolated.contains(&VertexSet::min(*k).expect("nonempty"))).collect();
    let elems: Vec<u128> = cliques
        .iter()
        .map(|k| {
            let mut m = 0u128;
            for (e, &(u, v)) in edges.iter().enumerate() {
                if k.contains(u) && k.contains(v) {
                    m |= 1 << e;
                }
            }
            for (e, &v) in isolated.iter().enumerate() {
                if k.contains(v) {
                    m |= 1 << (edges.len() + e);
                }
            }
            m
        })
        .collect();
    let by_elem: Vec<Vec<usize>> = (0..ne).map(|e| (0..cliques.len()).filter(|&c| elems[c] >> e & 1 == 1).collect()).collect();
    Ok(CoverStream {
        forbidden: vec![false; cliques.len()],
        cliques,
        elems,
        by_elem,
        all_elems: if ne == 128 { u128::MAX } else { (1u128 << ne) - 1 },
        size: 0,
        cap: size_cap,
        frames: Vec::new(),
        chosen: Vec::new(),
        pending_pop: false,
    })
}

enum Frame {
    /// Choose a clique containing `elem`; `next` indexes `by_elem[elem]`.
    Branch { elem: usize, next: usize, uncovered: u128, forbade: Vec<usize> },
    /// Fill `remaining` more slots from `pool[next..]`.
    Extend { pool: Vec<usize>, next: usize, remaining: usize },
}

pub struct CoverStream {
    cliques: Vec<VertexSet>,
    elems: Vec<u128>,
    by_elem: Vec<Vec<usize>>,
    all_elems: u128,
    forbidden: Vec<bool>,
    size: usize,
    cap: usize,
    frames: Vec<Frame>,
    chosen: Vec<usize>,
    pending_pop: bool,
}

impl CoverStream {
    /// Size of the covers currently being produced.
    pub fn current_size(&self) -> usize {
        self.size
    }

    fn compatible(&self, c: usize) -> bool {
        let k = self.cliques[c];
        self.chosen.iter().all(|&x| {
            let o = self.cliques[x];
            !k.is_subset(o) && !o.is_subset(k)
        })
    }

    fn emit(&mut self) -> CliqueCover {
        self.pending_pop = true;
        CliqueCover { cliques: self.chosen.iter().map(|&c| self.cliques[c]).collect() }
    }

    /// Pops an exhausted frame together with the choice that spawned it.
    fn pop_frame(&mut self) {
        if let Some(Frame::Branch { forbade, .. }) = self.frames.pop() {
            for c in forbade {
                self.forbidden[c] = false;
            }
        }
        if !self.frames.is_empty() {
            self.chosen.pop();
        }
    }
}

impl Iterator for CoverStream {
    type Item = CliqueCover;

    fn next(&mut self) -> Option<CliqueCover> {
        if self.pending_pop {
            self.chosen.pop();
            self.pending_pop = false;
        }
        loop {
            if self.frames.is_empty() {
                self.size += 1;
                if self.size > self.cap || self.all_elems == 0 {
                    return None;
                }
                let elem = self.all_elems.trailing_zeros() as usize;
                self.frames.push(Frame::Branch { elem, next: 0, uncovered: self.all_elems, forbade: Vec::new() });
                continue;
            }
            let depth = self.frames.len();
            match self.frames.last_mut().expect("nonempty") {
                Frame::Branch { elem, next, uncovered, forbade } => {
                    let (elem, uncovered) = (*elem, *uncovered);
                    // Returning from the previous branch: forbid its clique.
                    if *next > 0 {
                        let prev = self.by_elem[elem][*next - 1];
                        if !self.forbidden[prev] {
                            self.forbidden[prev] = true;
                            forbade.push(prev);
                        }
                    }
                    let start = *next;
                    let found = (start..self.by_elem[elem].len()).find(|&i| {
                        let c = self.by_elem[elem][i];
                        !self.forbidden[c] && self.compatible(c)
                    });
                    let Some(i) = found else {
                        self.pop_frame();
                        continue;
                    };
                    let c = self.by_elem[elem][i];
                    if let Some(Frame::Branch { next, .. }) = self.frames.last_mut() {
                        *next = i + 1;
                    }
                    self.chosen.push(c);
                    let rest = uncovered & !self.elems[c];
                    if rest == 0 {
                        if self.chosen.len() == self.size {
                            return Some(self.emit());
                        }
                        let pool: Vec<usize> = (0..self.cliques.len())
                            .filter(|&x| !self.forbidden[x] && !self.chosen.contains(&x) && self.compatible(x))
                            .collect();
                        let remaining = self.size - self.chosen.len();
                        if pool.len() >= remaining {
                            self.frames.push(Frame::Extend { pool, next: 0, remaining });
                        } else {
                            self.chosen.pop();
                        }
                    } else if self.chosen.len() < self.size {
                        let elem = rest.trailing_zeros() as usize;
                        self.frames.push(Frame::Branch { elem, next: 0, uncovered: rest, forbade: Vec::new() });
                    } else {
                        self.chosen.pop();
                    }
                }
                Frame::Extend { pool, next, remaining } => {
                    let remaining = *remaining;
                    let start = *next;
                    let pool_len = pool.len();
                    let found = (start..pool_len).take_while(|&i| pool_len - i >= remaining).find(|&i| {
                        let c = match &self.frames[depth - 1] {
                            Frame::Extend { pool, .. } => pool[i],
                            Frame::Branch { .. } => unreachable!(),
                        };
                        self.compatible(c)
                    });
                    let Some(i) = found else {
                        self.pop_frame();
                        continue;
                    };
                    let Some(Frame::Extend { pool, next, .. }) = self.frames.last_mut() else { unreachable!() };
                    *next = i + 1;
                    let c = pool[i];
                    let tail = pool[i + 1..].to_vec();
                    self.chosen.push(c);
                    if remaining == 1 {
                        return Some(self.emit());
                    }
                    self.frames.push(Frame::Extend { pool: tail, next: 0, remaining: remaining - 1 });
                }
            }
        }
    }
}
