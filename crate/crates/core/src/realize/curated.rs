//! Nine 7-vertex graphs known to be unrealizable.
//!
//! `H_1` has no induced cycle of length ≥ 4 and no triforce; any realization
//! would force a vertex common to the cycles `c, a_1, a_2, a_3`, and with it a
//! solution on a minimal cover, which does not exist. `H_2` to `H_9` contain an
//! induced square and differ from both realizable 7-vertex graphs that do.
//! Exhaustive search is out of reach for `H_5` and `H_6`, hence the table.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::families::square_with_apexes;
use crate::graph::{canonical_form, SimpleGraph};

/// `H_1`: hub `0`; triangle `1, 2, 3`; pendant triangles `0, i, i + 3`.
pub fn curated_h1() -> SimpleGraph {
    let mut h = SimpleGraph::new(7);
    for v in 1..7 {
        h.add_edge(0, v);
    }
    for i in 1..4 {
        h.add_edge(i, i + 3);
        h.add_edge(i, i % 3 + 1);
    }
    h
}

/// Neighbours of the seventh vertex `6` in `H_2..H_9`, over the square
/// `0-1-2-3` with apexes `4, 5`.
const EXTRA_NEIGHBOURS: [&[usize]; 8] = [
    &[0],
    &[0, 3],
    &[0, 3, 4],
    &[0, 5, 4],
    &[0, 5, 4, 2],
    &[0, 5, 4, 2, 1],
    &[0, 3, 4, 2, 1],
    &[0, 3, 4, 5, 2, 1],
];

/// `H_1, …, H_9` in order.
pub fn curated_graphs() -> Vec<SimpleGraph> {
    let mut out = vec![curated_h1()];
    for nb in EXTRA_NEIGHBOURS {
        let base = square_with_apexes();
        let mut h = SimpleGraph::new(7);
        for (u, v) in base.edges() {
            h.add_edge(u, v);
        }
        for &v in nb {
            h.add_edge(6, v);
        }
        out.push(h);
    }
    out
}

/// Index (0-based) of `h` in [`curated_graphs`], looked up by canonical form.
pub fn curated_lookup(h: &SimpleGraph) -> Option<usize> {
    static TABLE: OnceLock<HashMap<String, usize>> = OnceLock::new();
    if h.n() != 7 {
        return None;
    }
    let table = TABLE.get_or_init(|| {
        curated_graphs().iter().enumerate().map(|(i, g)| (canonical_form(g).expect("7 vertices"), i)).collect()
    });
    table.get(&canonical_form(h).ok()?).copied()
}
