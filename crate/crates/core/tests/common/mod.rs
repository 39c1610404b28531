//! Fixtures and brute-force oracles shared by the integration tests (and by
//! the acceptance suite, which includes this file by path).
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use cyclemonoid::{canonical_form, parse_graph6, MultiDigraph, SimpleGraph, VertexSet};
use rand::Rng;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/connected")
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_corpus(n: usize) -> Vec<SimpleGraph> {
    let path = data_dir().join(format!("graph{n}c.g6"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| parse_graph6(l).expect("corpus line")).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut p, &mut out);
    out
}

fn heap_permute(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    heap_permute(k - 1, p, out);
    for i in 0..k - 1 {
        let j = if k % 2 == 0 { i } else { 0 };
        p.swap(j, k - 1);
        heap_permute(k - 1, p, out);
    }
}

/// One digraph per class under relabelling, among all `n`-vertex digraphs
/// with every entry of the adjacency matrix (loops included) in
/// `0..=max_entry`: the lexicographically smallest matrix of each orbit.
pub fn digraphs_up_to_relabelling(n: usize, max_entry: u64) -> Vec<MultiDigraph> {
    let perms: Vec<Vec<usize>> = permutations(n).into_iter().filter(|p| p.iter().enumerate().any(|(i, &x)| i != x)).collect();
    let cells = n * n;
    let mut a = vec![0u64; cells];
    let mut out = Vec::new();
    'outer: loop {
        let minimal = perms.iter().all(|p| {
            for i in 0..n {
                for j in 0..n {
                    let (x, y) = (a[p[i] * n + p[j]], a[i * n + j]);
                    if x != y {
                        return x > y;
                    }
                }
            }
            true
        });
        if minimal {
            out.push(MultiDigraph::from_rows(a.chunks(n.max(1)).take(n).map(<[u64]>::to_vec).collect()).unwrap());
        }
        for c in (0..cells).rev() {
            if a[c] < max_entry {
                a[c] += 1;
                a[c + 1..].iter_mut().for_each(|x| *x = 0);
                continue 'outer;
            }
        }
        break;
    }
    out
}

/// Cycle counts per vertex set by brute force: every ordering of `W` that
/// starts at `min W` is a rooted closed walk through all of `W` exactly once,
/// weighted by the product of its arc multiplicities.
pub fn brute_force_catalog(g: &MultiDigraph) -> BTreeMap<VertexSet, u64> {
    let n = g.n();
    let mut out = BTreeMap::new();
    for mask in 1u128..1 << n {
        let w = VertexSet::from_bits(mask);
        let verts = w.to_vec();
        let root = verts[0];
        let mut total = 0u64;
        for p in permutations(verts.len() - 1) {
            let order: Vec<usize> = std::iter::once(root).chain(p.iter().map(|&i| verts[i + 1])).collect();
            let weight: u64 = (0..order.len()).map(|t| g.get(order[t], order[(t + 1) % order.len()])).product();
            total += weight;
        }
        if total > 0 {
            out.insert(w, total);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_by_permutations(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let edges: Vec<(usize, usize)> = a.edges().collect();
    permutations(a.n()).iter().any(|p| edges.iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

pub fn random_digraph(rng: &mut impl Rng, n: usize, arc_prob: f64, max_mult: u64) -> MultiDigraph {
    let mut g = MultiDigraph::new(n);
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(arc_prob) {
                g.set(i, j, rng.gen_range(1..=max_mult));
            }
        }
    }
    g
}

/// A random strongly connected digraph: a random Hamiltonian cycle plus
/// random extra arcs.
pub fn random_strong_digraph(rng: &mut impl Rng, n: usize, arc_prob: f64, max_mult: u64) -> MultiDigraph {
    let mut g = random_digraph(rng, n, arc_prob, max_mult);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    for t in 0..n {
        let (u, v) = (order[t], order[(t + 1) % n]);
        if g.get(u, v) == 0 {
            g.set(u, v, 1);
        }
    }
    g
}

pub fn random_simple_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut h = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Unlabelled trees on `n ≥ 1` vertices, grown leaf by leaf and deduplicated
/// by canonical form.
pub fn unlabelled_trees(n: usize) -> Vec<SimpleGraph> {
    let mut level = vec![SimpleGraph::new(1)];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..t.n() {
                let mut edges: Vec<(usize, usize)> = t.edges().collect();
                edges.push((attach, m - 1));
                let grown = SimpleGraph::from_edges(m, &edges).unwrap();
                if seen.insert(canonical_form(&grown).unwrap()) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}
