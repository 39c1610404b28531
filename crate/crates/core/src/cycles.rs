//! Simple cycles of a multidigraph, grouped by vertex set, and the hike
//! dependency graph φ(G) they determine.
//!
//! Two cycles commute in the hike monoid iff they are vertex-disjoint, so φ(G)
//! only depends on how many simple cycles live on each vertex set `W`. The
//! catalog `W ↦ N_W` is therefore the whole story; individual cycles are never
//! stored.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{strongly_connected_components, MultiDigraph, SimpleGraph, VertexSet};
use crate::{Error, Result};

pub const DEFAULT_CYCLE_BUDGET: u64 = 1_000_000;

/// `N_W` for every vertex set `W` carrying at least one simple cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCatalog {
    base_n: usize,
    counts: BTreeMap<VertexSet, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    #[serde(rename = "W")]
    pub w: Vec<usize>,
    pub count: u64,
}

impl CycleCatalog {
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn get(&self, w: VertexSet) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, u64)> + '_ {
        self.counts.iter().map(|(&w, &k)| (w, k))
    }

    /// Number of distinct vertex sets.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of simple cycles.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn records(&self) -> Vec<CatalogRecord> {
        self.iter().map(|(w, count)| CatalogRecord { w: w.to_vec(), count }).collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogOptions {
    /// Upper bound on the total number of cycles.
    pub budget: u64,
    /// Use Johnson's blocking scheme instead of plain depth-first search.
    pub johnson_blocking: bool,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions { budget: DEFAULT_CYCLE_BUDGET, johnson_blocking: false }
    }
}

/// `Σ_σ Π_{v∈W} A[v][σ(v)]` over the cyclic permutations σ of `W`, i.e. the
/// number of simple cycles with vertex set exactly `W`.
///
/// Panics if `W` is empty or the count overflows `u64`.
pub fn cycle_count_for_set(g: &MultiDigraph, w: VertexSet) -> u64 {
    let verts = w.to_vec();
    assert!(!verts.is_empty(), "cycle_count_for_set needs a nonempty vertex set");
    let k = verts.len();
    if k == 1 {
        return g.get(verts[0], verts[0]);
    }
    // Paths from verts[0] over subsets of the remaining vertices.
    let rest = k - 1;
    let mut dp = vec![0u128; (1 << rest) * rest];
    for a in 0..rest {
        dp[(1 << a) * rest + a] = g.get(verts[0], verts[a + 1]) as u128;
    }
    for mask in 1usize..1 << rest {
        for a in 0..rest {
            let cur = dp[mask * rest + a];
            if cur == 0 || mask >> a & 1 == 0 {
                continue;
            }
            for b in 0..rest {
                if mask >> b & 1 == 0 {
                    let m = g.get(verts[a + 1], verts[b + 1]) as u128;
                    if m > 0 {
                        let slot = &mut dp[(mask | 1 << b) * rest + b];
                        *slot = slot.checked_add(cur.checked_mul(m).expect("cycle count overflow")).expect("cycle count overflow");
                    }
                }
            }
        }
    }
    let full = (1 << rest) - 1;
    let total: u128 = (0..rest).map(|a| dp[full * rest + a] * g.get(verts[a + 1], verts[0]) as u128).sum();
    u64::try_from(total).expect("cycle count overflow")
}

pub fn build_cycle_catalog(g: &MultiDigraph) -> Result<CycleCatalog> {
    build_cycle_catalog_with(g, &CatalogOptions::default())
}

/// Enumerates simple cycles SCC by SCC, rooting each at its least vertex so
/// every vertex-cycle is found once; a cycle contributes the product of the
/// multiplicities of its arcs.
pub fn build_cycle_catalog_with(g: &MultiDigraph, opts: &CatalogOptions) -> Result<CycleCatalog> {
    if g.n() > VertexSet::CAPACITY {
        return Err(Error::Capacity(g.n()));
    }
    let mut acc = Accumulator { counts: BTreeMap::new(), total: 0, budget: opts.budget };
    for comp in strongly_connected_components(g) {
        for &r in &comp {
            acc.add(VertexSet::singleton(r), g.get(r, r))?;
        }
        if comp.len() < 2 {
            continue;
        }
        let mut allowed = vec![false; g.n()];
        for &v in &comp {
            allowed[v] = true;
        }
        let succ: Vec<Vec<(usize, u64)>> =
            (0..g.n()).map(|u| g.successors(u).filter(|&(v, _)| allowed[v] && v != u).collect()).collect();
        for &r in &comp {
            let mut search = Search { succ: &succ, allowed: &allowed, root: r, acc: &mut acc };
            if opts.johnson_blocking {
                search.johnson(r)?;
            } else {
                search.plain(r, VertexSet::singleton(r), 1)?;
            }
        }
    }
    Ok(CycleCatalog { base_n: g.n(), counts: acc.counts })
}

struct Accumulator {
    counts: BTreeMap<VertexSet, u64>,
    total: u64,
    budget: u64,
}

impl Accumulator {
    fn add(&mut self, w: VertexSet, k: u64) -> Result<()> {
        if k == 0 {
            return Ok(());
        }
        self.total = self.total.checked_add(k).ok_or(Error::Overflow("cycle catalog"))?;
        if self.total > self.budget {
            return Err(Error::CycleBudget { budget: self.budget, found: self.total - k });
        }
        *self.counts.entry(w).or_default() += k;
        Ok(())
    }
}

/// Cycles through `root` whose other vertices are all `allowed` (larger than
/// the root, same SCC).
struct Search<'a> {
    succ: &'a [Vec<(usize, u64)>],
    allowed: &'a [bool],
    root: usize,
    acc: &'a mut Accumulator,
}

impl Search<'_> {
    fn plain(&mut self, u: usize, path: VertexSet, weight: u64) -> Result<()> {
        let succ = self.succ;
        for &(v, k) in &succ[u] {
            let w = weight.checked_mul(k).ok_or(Error::Overflow("cycle weight"))?;
            if v == self.root {
                self.acc.add(path, w)?;
            } else if self.allowed[v] && v > self.root && !path.contains(v) {
                self.plain(v, path.with(v), w)?;
            }
        }
        Ok(())
    }

    fn johnson(&mut self, r: usize) -> Result<()> {
        let n = self.succ.len();
        let mut st = JohnsonState { blocked: vec![false; n], b: vec![Vec::new(); n], stack: Vec::new() };
        self.circuit(r, &mut st)?;
        Ok(())
    }

    fn circuit(&mut self, v: usize, st: &mut JohnsonState) -> Result<bool> {
        let mut found = false;
        st.stack.push(v);
        st.blocked[v] = true;
        let succ = self.succ;
        for &(w, _) in &succ[v] {
            if w == self.root {
                let path: VertexSet = st.stack.iter().copied().collect();
                let mut weight = 1u64;
                for pair in st.stack.windows(2) {
                    weight = weight.checked_mul(arc(self.succ, pair[0], pair[1])).ok_or(Error::Overflow("cycle weight"))?;
                }
                weight = weight.checked_mul(arc(self.succ, v, w)).ok_or(Error::Overflow("cycle weight"))?;
                self.acc.add(path, weight)?;
                found = true;
            } else if self.allowed[w] && w > self.root && !st.blocked[w] && self.circuit(w, st)? {
                found = true;
            }
        }
        if found {
            st.unblock(v);
        } else {
            for &(w, _) in &succ[v] {
                if !st.b[w].contains(&v) {
                    st.b[w].push(v);
                }
            }
        }
        st.stack.pop();
        Ok(found)
    }
}

fn arc(succ: &[Vec<(usize, u64)>], u: usize, v: usize) -> u64 {
    succ[u].iter().find(|&&(x, _)| x == v).map_or(0, |&(_, k)| k)
}

struct JohnsonState {
    blocked: Vec<bool>,
    b: Vec<Vec<usize>>,
    stack: Vec<usize>,
}

impl JohnsonState {
    fn unblock(&mut self, u: usize) {
        let mut work = vec![u];
        while let Some(x) = work.pop() {
            if !self.blocked[x] {
                continue;
            }
            self.blocked[x] = false;
            work.append(&mut self.b[x]);
        }
    }
}

/// φ(G) with the vertex set of the underlying cycle attached to each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiResult {
    /// Vertex count of the digraph the labels refer to.
    pub base_n: usize,
    pub h: SimpleGraph,
    pub labels: Vec<VertexSet>,
}

impl PhiResult {
    /// Expands a catalog into φ: `N_W` vertices labelled `W` for each entry,
    /// in catalog order.
    pub fn from_catalog(cat: &CycleCatalog) -> PhiResult {
        let labels: Vec<VertexSet> =
            cat.iter().flat_map(|(w, k)| std::iter::repeat_n(w, usize::try_from(k).expect("cycle count fits usize"))).collect();
        PhiResult::from_labels(cat.base_n(), labels)
    }

    pub fn from_labels(base_n: usize, labels: Vec<VertexSet>) -> PhiResult {
        let mut h = SimpleGraph::new(labels.len());
        for u in 0..labels.len() {
            for v in u + 1..labels.len() {
                if labels[u].intersects(labels[v]) {
                    h.add_edge(u, v);
                }
            }
        }
        PhiResult { base_n, h, labels }
    }
}

pub fn phi(g: &MultiDigraph) -> Result<PhiResult> {
    phi_with_budget(g, DEFAULT_CYCLE_BUDGET)
}

pub fn phi_with_budget(g: &MultiDigraph, budget: u64) -> Result<PhiResult> {
    let cat = build_cycle_catalog_with(g, &CatalogOptions { budget, ..Default::default() })?;
    Ok(PhiResult::from_catalog(&cat))
}

/// φ of a disjoint union of digraphs from the φ's of the parts; the labels of
/// part `k` are shifted by the vertex counts of the parts before it.
pub fn phi_of_disjoint_union(parts: &[PhiResult]) -> Result<PhiResult> {
    let base_n: usize = parts.iter().map(|p| p.base_n).sum();
    if base_n > VertexSet::CAPACITY {
        return Err(Error::Capacity(base_n));
    }
    let mut labels = Vec::new();
    let mut h = SimpleGraph::new(0);
    let mut off = 0;
    for p in parts {
        labels.extend(p.labels.iter().map(|w| VertexSet::from_bits(w.bits() << off)));
        h = h.disjoint_union(&p.h);
        off += p.base_n;
    }
    Ok(PhiResult { base_n, h, labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_ones(n: usize) -> MultiDigraph {
        MultiDigraph::from_rows(vec![vec![1; n]; n]).unwrap()
    }

    #[test]
    fn counts_per_set() {
        let b3 = MultiDigraph::from_arcs(1, &[(0, 0, 3)]).unwrap();
        assert_eq!(cycle_count_for_set(&b3, VertexSet::singleton(0)), 3);
        let two = MultiDigraph::from_arcs(2, &[(0, 1, 1), (1, 0, 1)]).unwrap();
        assert_eq!(cycle_count_for_set(&two, VertexSet::full(2)), 1);
        assert_eq!(cycle_count_for_set(&all_ones(3), VertexSet::full(3)), 2);
        assert_eq!(cycle_count_for_set(&all_ones(5), VertexSet::full(5)), 24);
    }

    #[test]
    fn catalog_agrees_with_set_counts() {
        let g = MultiDigraph::from_rows(vec![
            vec![1, 2, 0, 1],
            vec![0, 0, 1, 2],
            vec![1, 1, 2, 0],
            vec![1, 0, 1, 0],
        ])
        .unwrap();
        for johnson_blocking in [false, true] {
            let cat = build_cycle_catalog_with(&g, &CatalogOptions { johnson_blocking, ..Default::default() }).unwrap();
            for bits in 1u128..16 {
                let w = VertexSet::from_bits(bits);
                assert_eq!(cat.get(w), cycle_count_for_set(&g, w), "W = {w:?}");
            }
        }
    }

    #[test]
    fn acyclic_and_budget() {
        let path = MultiDigraph::from_arcs(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert!(build_cycle_catalog(&path).unwrap().is_empty());
        let err = build_cycle_catalog_with(&all_ones(5), &CatalogOptions { budget: 10, ..Default::default() });
        assert!(matches!(err, Err(Error::CycleBudget { budget: 10, .. })));
    }

    #[test]
    fn phi_labels_and_union() {
        let b2 = MultiDigraph::from_arcs(1, &[(0, 0, 2)]).unwrap();
        let p = phi(&b2).unwrap();
        assert_eq!(p.h, SimpleGraph::complete(2));
        let u = phi_of_disjoint_union(&[p.clone(), p]).unwrap();
        assert_eq!(u.h.edge_count(), 2);
        assert_eq!(u.labels, vec![VertexSet::singleton(0), VertexSet::singleton(0), VertexSet::singleton(1), VertexSet::singleton(1)]);
        let empty = phi(&MultiDigraph::new(2)).unwrap();
        let b3 = phi(&MultiDigraph::from_arcs(1, &[(0, 0, 3)]).unwrap()).unwrap();
        assert_eq!(phi_of_disjoint_union(&[empty, b3]).unwrap().h, SimpleGraph::complete(3));
    }
}
