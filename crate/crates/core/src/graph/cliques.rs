use super::{SimpleGraph, VertexSet};
use crate::{Error, Result};

/// Every nonempty clique of `h`, each exactly once, singletons included.
///
/// Cliques are grown by adding vertices larger than the current maximum, so
/// the output is in depth-first lexicographic order.
pub fn enumerate_cliques(h: &SimpleGraph) -> Result<Vec<VertexSet>> {
    let n = h.n();
    if n > VertexSet::CAPACITY {
        return Err(Error::Capacity(n));
    }
    let nbr: Vec<VertexSet> = (0..n).map(|v| h.neighbor_set(v)).collect();
    let mut out = Vec::new();
    // (clique, candidates that extend it)
    let mut stack: Vec<(VertexSet, VertexSet)> = Vec::new();
    for v in (0..n).rev() {
        let above = VertexSet::full(n).difference(VertexSet::full(v + 1));
        stack.push((VertexSet::singleton(v), nbr[v].intersection(above)));
    }
    while let Some((clique, cand)) = stack.pop() {
        out.push(clique);
        let c: Vec<usize> = cand.to_vec();
        for &w in c.iter().rev() {
            let above = VertexSet::full(n).difference(VertexSet::full(w + 1));
            stack.push((clique.with(w), cand.intersection(nbr[w]).intersection(above)));
        }
    }
    Ok(out)
}
