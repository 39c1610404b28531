//! Named digraph and graph families.

use crate::graph::{MultiDigraph, SimpleGraph};

/// One vertex carrying `n` self-loops; φ = `K_n`.
pub fn bouquet(n: u64) -> MultiDigraph {
    MultiDigraph::from_arcs(1, &[(0, 0, n)]).expect("valid arcs")
}

/// The directed cycle `0 → 1 → … → n−1 → 0` (a self-loop when `n = 1`).
pub fn directed_cycle(n: usize) -> MultiDigraph {
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
    MultiDigraph::from_arcs(n, &arcs).expect("valid arcs")
}

/// Cycle on `n ≥ 3` vertices with both orientations of every edge.
pub fn bidirected_cycle(n: usize) -> MultiDigraph {
    assert!(n >= 3);
    let mut arcs = Vec::new();
    for i in 0..n {
        arcs.push((i, (i + 1) % n, 1));
        arcs.push(((i + 1) % n, i, 1));
    }
    MultiDigraph::from_arcs(n, &arcs).expect("valid arcs")
}

/// The ladder `L_n` (`n ≥ 3`): two directed rails of `n − 2` rungs from a
/// source `l` to a sink `r`, each rung crossing bottom to top, closed by
/// `r → l`. Every one of its `n` simple cycles uses `r → l`, so φ = `K_n`.
///
/// Vertex order: `l`, bottom rail, top rail, `r`.
pub fn ladder(n: usize) -> MultiDigraph {
    assert!(n >= 3);
    let k = n - 2;
    let (l, r) = (0, 2 * k + 1);
    let bot = |i: usize| 1 + i;
    let top = |i: usize| 1 + k + i;
    let mut arcs = vec![(l, bot(0), 1), (l, top(0), 1), (bot(k - 1), r, 1), (top(k - 1), r, 1), (r, l, 1)];
    for i in 0..k {
        arcs.push((bot(i), top(i), 1));
        if i + 1 < k {
            arcs.push((bot(i), bot(i + 1), 1));
            arcs.push((top(i), top(i + 1), 1));
        }
    }
    MultiDigraph::from_arcs(2 * k + 2, &arcs).expect("valid arcs")
}

/// The flower `F_n` (`n ≥ 1`): hub `0` joined both ways to each of the petals
/// `1..=n`, which themselves form a directed `n`-cycle. It has `n² + 1` simple
/// cycles, pairwise intersecting.
pub fn flower(n: usize) -> MultiDigraph {
    assert!(n >= 1);
    let mut arcs = Vec::new();
    for i in 1..=n {
        arcs.push((0, i, 1));
        arcs.push((i, 0, 1));
        arcs.push((i, i % n + 1, 1));
    }
    MultiDigraph::from_arcs(n + 1, &arcs).expect("valid arcs")
}

/// The square `0-1-2-3` plus two apexes `4, 5` adjacent to every square
/// vertex and to each other: φ of the bidirected square, whose 2-cycles form
/// the square and whose two 4-cycles are the apexes.
pub fn square_with_apexes() -> SimpleGraph {
    let mut h = SimpleGraph::new(6);
    for v in 0..4 {
        h.add_edge(v, (v + 1) % 4);
    }
    for apex in [4, 5] {
        for v in 0..4 {
            h.add_edge(apex, v);
        }
    }
    h.add_edge(4, 5);
    h
}

/// Dependency graph of the trace monoid `T_n`: letters `a, b, c, d` (`0..4`)
/// form a square (`a, c` and `b, d` commute) and `n` further letters depend
/// on everything.
pub fn trace_family_graph(n: usize) -> SimpleGraph {
    let mut h = SimpleGraph::complete(4 + n);
    h.remove_edge(0, 2);
    h.remove_edge(1, 3);
    h
}

/// The bidirected square `0-1-2-3` with each arc `i → i+1` replaced by a path
/// through `forward` new transit vertices and each arc `i+1 → i` by one
/// through `backward` of them. `(0, 0)` is the bidirected square itself.
pub fn subdivided_square(forward: usize, backward: usize) -> MultiDigraph {
    let mut arcs = Vec::new();
    let mut next = 4;
    let mut path = |from: usize, to: usize, k: usize, arcs: &mut Vec<(usize, usize, u64)>| {
        let mut prev = from;
        for _ in 0..k {
            arcs.push((prev, next, 1));
            prev = next;
            next += 1;
        }
        arcs.push((prev, to, 1));
    };
    for i in 0..4 {
        path(i, (i + 1) % 4, forward, &mut arcs);
        path((i + 1) % 4, i, backward, &mut arcs);
    }
    MultiDigraph::from_arcs(4 + 4 * (forward + backward), &arcs).expect("valid arcs")
}

/// Two digraphs with the same φ (a triangle `a, b, c` with a path `c - d - e`
/// attached) whose closed walks at vertex `0` differ in length only.
///
/// First: `0 ↔ 1`, `0 → 2 → 1`, `2 ↔ 3`, loops at `0` and `3`.
/// Second: two loops at `0`, `0 ↔ 1`, `1 → 4 → 3 → 2 → 1`, `2 ↔ 3`.
pub fn walk_example_pair() -> (MultiDigraph, MultiDigraph) {
    let g = MultiDigraph::from_arcs(
        4,
        &[(0, 1, 1), (1, 0, 1), (0, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1), (3, 3, 1), (0, 0, 1)],
    );
    let h = MultiDigraph::from_arcs(
        5,
        &[(0, 1, 1), (1, 0, 1), (3, 2, 1), (2, 3, 1), (2, 1, 1), (1, 4, 1), (4, 3, 1), (0, 0, 2)],
    );
    (g.expect("valid arcs"), h.expect("valid arcs"))
}

/// Two φ-equivalent digraphs on eight vertices related by a length-preserving
/// isomorphism of their hike monoids.
pub fn cospectral_pair() -> (MultiDigraph, MultiDigraph) {
    let one = |arcs: &[(usize, usize)]| {
        let arcs: Vec<_> = arcs.iter().map(|&(u, v)| (u - 1, v - 1, 1)).collect();
        MultiDigraph::from_arcs(8, &arcs).expect("valid arcs")
    };
    let g1 = one(&[
        (2, 5), (5, 3), (3, 2), (2, 6), (6, 3), (7, 3), (4, 7), (5, 5), (6, 6),
        (7, 8), (8, 7), (1, 2), (2, 1), (2, 4),
    ]);
    let g2 = one(&[
        (1, 3), (3, 2), (4, 5), (5, 1), (8, 1), (1, 6), (7, 8), (1, 2), (2, 1),
        (1, 4), (6, 7), (7, 6), (5, 5), (3, 3),
    ]);
    (g1, g2)
}
