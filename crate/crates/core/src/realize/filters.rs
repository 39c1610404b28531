//! Necessary conditions for realizability that can reject a graph without
//! any cover search.

use std::sync::OnceLock;

use crate::cycles::phi;
use crate::graph::{are_isomorphic, MultiDigraph, SimpleGraph, VertexSet};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterOutcome {
    Pass,
    /// Certified unrealizable; for the induced-cycle filter, the offending
    /// cycle in cyclic order.
    Fail(Vec<usize>),
}

impl FilterOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, FilterOutcome::Pass)
    }
}

/// Largest graph the exhaustive induced-cycle scan accepts.
pub const INDUCED_CYCLE_SCAN_CAP: usize = 24;

/// Induced cycles of length ≥ 4, each in cyclic order starting from its
/// smallest vertex.
pub fn induced_cycles(h: &SimpleGraph) -> Result<Vec<Vec<usize>>> {
    let n = h.n();
    if n > INDUCED_CYCLE_SCAN_CAP {
        return Err(Error::SizeCap { what: "induced cycle scan", n, cap: INDUCED_CYCLE_SCAN_CAP });
    }
    let nbr: Vec<u32> = (0..n).map(|v| h.neighbor_set(v).bits() as u32).collect();
    let mut out = Vec::new();
    for s in 0u32..1 << n {
        if s.count_ones() < 4 {
            continue;
        }
        let mut ok = true;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if (nbr[v] & s).count_ones() != 2 {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        // 2-regular: a single cycle iff walking from the minimum covers s.
        let start = s.trailing_zeros() as usize;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let mut cand = nbr[cur] & s;
            let mut next = cand.trailing_zeros() as usize;
            if next == prev {
                cand &= cand - 1;
                next = cand.trailing_zeros() as usize;
            }
            if next == start {
                break;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() == s.count_ones() as usize {
            out.push(order);
        }
    }
    Ok(out)
}

/// For every induced cycle `C = (c_1..c_k)`, `k ≥ 4`, a realizable graph has
/// distinct `w_1, w_2` adjacent to all of `C`, whose neighbourhoods lie in
/// `C ∪ N(C)`, and which are adjacent unless every consecutive pair
/// `c_i, c_{i+1}` has a further common neighbour `c_i'`.
///
/// The cycles built as `c_i'` in the argument for this condition avoid `C`,
/// `w_1` and `w_2`, so `c_i'` is required to lie outside `C ∪ {w_1, w_2}`.
/// (Without that restriction `w_1` itself would always qualify.)
pub fn induced_cycle_filter(h: &SimpleGraph) -> Result<FilterOutcome> {
    let n = h.n();
    for cyc in induced_cycles(h)? {
        let cset: VertexSet = cyc.iter().copied().collect();
        let reach = cyc.iter().fold(cset, |acc, &c| acc.union(h.neighbor_set(c)));
        let apexes: Vec<usize> =
            (0..n).filter(|&w| !cset.contains(w) && cset.is_subset(h.neighbor_set(w)) && h.neighbor_set(w).is_subset(reach)).collect();
        let k = cyc.len();
        let ok = apexes.iter().enumerate().any(|(a, &w1)| {
            apexes[a + 1..].iter().any(|&w2| {
                if h.has_edge(w1, w2) {
                    return true;
                }
                let banned = cset.with(w1).with(w2);
                (0..k).all(|i| {
                    let both = h.neighbor_set(cyc[i]).intersection(h.neighbor_set(cyc[(i + 1) % k]));
                    !both.difference(banned).is_empty()
                })
            })
        });
        if !ok {
            return Ok(FilterOutcome::Fail(cyc));
        }
    }
    Ok(FilterOutcome::Pass)
}

/// The two realizable 7-vertex graphs containing an induced square.
///
/// A realization of a graph with an induced square contains the square of
/// cycles (bidirected square, six cycles); any further arc other than a
/// self-loop adds at least two cycles. So on seven vertices the only options
/// are a self-loop on a vertex lying on exactly one of the four 2-cycles
/// (subdivide one of its arcs first), or on a square vertex itself. Their φ's
/// are computed here rather than typed in.
pub fn allowed_seven_vertex_square_graphs() -> &'static [SimpleGraph; 2] {
    static ALLOWED: OnceLock<[SimpleGraph; 2]> = OnceLock::new();
    ALLOWED.get_or_init(|| {
        let square = [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)];
        let private: Vec<_> = square
            .iter()
            .filter(|&&a| a != (0, 1))
            .map(|&(u, v)| (u, v, 1))
            .chain([(0, 4, 1), (4, 1, 1), (4, 4, 1)])
            .collect();
        let shared: Vec<_> = square.iter().map(|&(u, v)| (u, v, 1)).chain([(0, 0, 1)]).collect();
        let build = |n, arcs: &[(usize, usize, u64)]| {
            let g = MultiDigraph::from_arcs(n, arcs).expect("valid arcs");
            phi(&g).expect("tiny digraph").h
        };
        [build(5, &private), build(4, &shared)]
    })
}

/// Rejects 7-vertex graphs with an induced square other than the two
/// realizable ones.
pub fn seven_vertex_square_filter(h: &SimpleGraph) -> Result<FilterOutcome> {
    if h.n() != 7 || !induced_cycles(h)?.iter().any(|c| c.len() == 4) {
        return Ok(FilterOutcome::Pass);
    }
    for allowed in allowed_seven_vertex_square_graphs() {
        if are_isomorphic(h, allowed)? {
            return Ok(FilterOutcome::Pass);
        }
    }
    Ok(FilterOutcome::Fail(Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::square_with_apexes;

    #[test]
    fn square_fails_and_apexed_square_passes() {
        assert!(matches!(induced_cycle_filter(&SimpleGraph::cycle(4)).unwrap(), FilterOutcome::Fail(c) if c == vec![0, 1, 2, 3]));
        assert!(induced_cycle_filter(&square_with_apexes()).unwrap().passed());
        assert!(induced_cycle_filter(&SimpleGraph::path(6)).unwrap().passed());
    }

    #[test]
    fn induced_cycles_listing() {
        assert_eq!(induced_cycles(&SimpleGraph::cycle(5)).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        assert!(induced_cycles(&SimpleGraph::complete(5)).unwrap().is_empty());
        assert_eq!(induced_cycles(&square_with_apexes()).unwrap().len(), 1);
    }

    #[test]
    fn allowed_graphs_shape() {
        let [a, b] = allowed_seven_vertex_square_graphs();
        assert_eq!((a.n(), a.edge_count()), (7, 15));
        assert_eq!((b.n(), b.edge_count()), (7, 17));
        assert_eq!(a.degree_sequence()[0], 2);
        assert_eq!(b.degree_sequence()[0], 4);
        for g in [a, b] {
            assert!(seven_vertex_square_filter(g).unwrap().passed());
            assert!(induced_cycle_filter(g).unwrap().passed());
        }
    }
}
