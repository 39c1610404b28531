use std::fmt;

use super::VertexSet;
use crate::{Error, Result};

/// An undirected simple graph on `0..n`, adjacency stored as bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        SimpleGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut h = SimpleGraph::new(n);
        for &(u, v) in edges {
            h.try_add_edge(u, v)?;
        }
        Ok(h)
    }

    pub fn complete(n: usize) -> Self {
        let mut h = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                h.add_edge(u, v);
            }
        }
        h
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut h = SimpleGraph::new(n);
        for u in 0..n {
            h.add_edge(u, (u + 1) % n);
        }
        h
    }

    pub fn path(n: usize) -> Self {
        let mut h = SimpleGraph::new(n);
        for u in 1..n {
            h.add_edge(u - 1, u);
        }
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on a self-loop or out-of-range vertex; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {{{u}, {v}}} on {} vertices", self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(64 * k + b)
            })
        })
    }

    /// Neighbourhood as a [`VertexSet`]; requires `n ≤ VertexSet::CAPACITY`.
    pub fn neighbor_set(&self, u: usize) -> VertexSet {
        assert!(self.n <= VertexSet::CAPACITY);
        let r = self.row(u);
        let lo = r.first().copied().unwrap_or(0) as u128;
        let hi = r.get(1).copied().unwrap_or(0) as u128;
        VertexSet::from_bits(lo | hi << 64)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable();
        d
    }

    pub fn complement(&self) -> Self {
        let mut c = SimpleGraph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    c.add_edge(u, v);
                }
            }
        }
        c
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut h = SimpleGraph::new(self.n + other.n);
        for (u, v) in self.edges() {
            h.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            h.add_edge(self.n + u, self.n + v);
        }
        h
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut h = SimpleGraph::new(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Subgraph induced on `verts` in the given order.
    pub fn induced_on(&self, verts: &[usize]) -> Self {
        let mut h = SimpleGraph::new(verts.len());
        for a in 0..verts.len() {
            for b in a + 1..verts.len() {
                if self.has_edge(verts[a], verts[b]) {
                    h.add_edge(a, b);
                }
            }
        }
        h
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Subgraph induced on `s`, relabelled `0..|s|` in increasing vertex order.
pub fn induced_subgraph(h: &SimpleGraph, s: VertexSet) -> Result<SimpleGraph> {
    if let Some(m) = s.max() {
        if m >= h.n() {
            return Err(Error::VertexOutOfRange { vertex: m, n: h.n() });
        }
    }
    Ok(h.induced_on(&s.to_vec()))
}
