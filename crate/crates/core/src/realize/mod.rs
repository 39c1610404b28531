//! Deciding realizability: is `H = φ(G)` for some multidigraph `G`?
//!
//! `H` is realizable iff for some antichain clique cover of `H` the attached
//! polynomial system has a nonnegative integer solution, which is then the
//! adjacency matrix of a realization. [`realize`] runs cheap necessary
//! conditions first and then searches covers from the smallest size up.

mod cover;
mod curated;
mod filters;
mod solver;
mod system;

use std::time::Instant;

use serde::Serialize;

pub use cover::{default_size_cap, enumerate_clique_covers, CliqueCover, CoverStream};
pub use curated::{curated_graphs, curated_lookup};
pub use filters::{
    allowed_seven_vertex_square_graphs, induced_cycle_filter, induced_cycles, seven_vertex_square_filter, FilterOutcome,
};
pub use solver::{enumerate_solutions, solve_system, SolveOutcome, SolveReport, DEFAULT_SOLVER_BUDGET};
pub use system::{build_system, DiophantineSystem, MAX_SYSTEM_SIZE};

use crate::cycles::{phi_with_budget, DEFAULT_CYCLE_BUDGET};
use crate::families::{bouquet, trace_family_graph};
use crate::graph::{find_isomorphism, MultiDigraph, SimpleGraph};
use crate::{Error, Result};

/// Largest `H` accepted by [`realize`].
pub const MAX_REALIZE_VERTICES: usize = 16;

/// Default number of covers examined per graph.
pub const DEFAULT_COVER_BUDGET: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Cycle budget for verifying witnesses.
    pub cycles: u64,
    /// Solver nodes per cover.
    pub solver_nodes: u64,
    /// Covers per graph.
    pub covers: u64,
    /// Stop after the smallest cover size that has any cover.
    pub min_cover_only: bool,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            cycles: DEFAULT_CYCLE_BUDGET,
            solver_nodes: DEFAULT_SOLVER_BUDGET,
            covers: DEFAULT_COVER_BUDGET,
            min_cover_only: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnrealizableReason {
    InducedCycleFilter,
    SevenVertexSquareFilter,
    ExhaustiveCoverSearch,
    CuratedTable,
}

impl UnrealizableReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UnrealizableReason::InducedCycleFilter => "induced_cycle_filter",
            UnrealizableReason::SevenVertexSquareFilter => "seven_vertex_square_filter",
            UnrealizableReason::ExhaustiveCoverSearch => "exhaustive_cover_search",
            UnrealizableReason::CuratedTable => "curated_table",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetKind {
    Covers,
    SolverNodes,
    /// The search was restricted to minimum-size covers and found nothing.
    MinCoverRestriction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub witness: MultiDigraph,
    /// Empty when the witness was constructed without a cover search.
    pub cover: Vec<crate::VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Realizable(Realization),
    Unrealizable { reason: UnrealizableReason, detail: Vec<usize> },
    Undecided { exhausted: BudgetKind },
}

impl Verdict {
    pub fn is_realizable(&self) -> bool {
        matches!(self, Verdict::Realizable(_))
    }

    pub fn is_unrealizable(&self) -> bool {
        matches!(self, Verdict::Unrealizable { .. })
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Verdict::Undecided { .. })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub covers_tried: u64,
    pub solver_nodes: u64,
    pub millis: u64,
}

/// Decides whether the connected graph `h` is realizable.
pub fn realize(h: &SimpleGraph, budgets: &Budgets) -> Result<Verdict> {
    realize_with_stats(h, budgets).map(|(v, _)| v)
}

pub fn realize_with_stats(h: &SimpleGraph, budgets: &Budgets) -> Result<(Verdict, SearchStats)> {
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let verdict = decide(h, budgets, &mut stats)?;
    if let Verdict::Realizable(r) = &verdict {
        verify_witness(h, &r.witness, budgets.cycles);
    }
    stats.millis = start.elapsed().as_millis() as u64;
    Ok((verdict, stats))
}

/// Cover search alone, skipping the filters and the curated table; for
/// cross-checking those shortcuts.
pub fn realize_by_search(h: &SimpleGraph, budgets: &Budgets) -> Result<(Verdict, SearchStats)> {
    if h.n() > MAX_REALIZE_VERTICES {
        return Err(Error::SizeCap { what: "realizability search", n: h.n(), cap: MAX_REALIZE_VERTICES });
    }
    if !h.is_connected() || h.n() < 2 {
        return realize_with_stats(h, budgets);
    }
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let verdict = cover_search(h, budgets, &mut stats)?;
    if let Verdict::Realizable(r) = &verdict {
        verify_witness(h, &r.witness, budgets.cycles);
    }
    stats.millis = start.elapsed().as_millis() as u64;
    Ok((verdict, stats))
}

fn decide(h: &SimpleGraph, budgets: &Budgets, stats: &mut SearchStats) -> Result<Verdict> {
    let n = h.n();
    if n > MAX_REALIZE_VERTICES {
        return Err(Error::SizeCap { what: "realizability search", n, cap: MAX_REALIZE_VERTICES });
    }
    if !h.is_connected() {
        return Err(Error::Precondition("realize expects a connected graph; split it into components first".into()));
    }
    if n == 0 {
        return Ok(Verdict::Realizable(Realization { witness: MultiDigraph::new(0), cover: Vec::new() }));
    }
    if n == 1 {
        return Ok(Verdict::Realizable(Realization { witness: bouquet(1), cover: vec![crate::VertexSet::singleton(0)] }));
    }
    if let FilterOutcome::Fail(cycle) = induced_cycle_filter(h)? {
        return Ok(Verdict::Unrealizable { reason: UnrealizableReason::InducedCycleFilter, detail: cycle });
    }
    if !seven_vertex_square_filter(h)?.passed() {
        return Ok(Verdict::Unrealizable { reason: UnrealizableReason::SevenVertexSquareFilter, detail: Vec::new() });
    }
    if let Some(i) = curated_lookup(h) {
        return Ok(Verdict::Unrealizable { reason: UnrealizableReason::CuratedTable, detail: vec![i + 1] });
    }
    cover_search(h, budgets, stats)
}

fn cover_search(h: &SimpleGraph, budgets: &Budgets, stats: &mut SearchStats) -> Result<Verdict> {
    let mut stream = enumerate_clique_covers(h, default_size_cap(h))?;
    let mut solver_exhausted = false;
    let mut first_size = None;
    loop {
        if stats.covers_tried >= budgets.covers {
            // Only undecided if there is actually a cover left.
            return Ok(match stream.next() {
                Some(_) => Verdict::Undecided { exhausted: BudgetKind::Covers },
                None if solver_exhausted => Verdict::Undecided { exhausted: BudgetKind::SolverNodes },
                None => Verdict::Unrealizable { reason: UnrealizableReason::ExhaustiveCoverSearch, detail: Vec::new() },
            });
        }
        let Some(cover) = stream.next() else { break };
        if budgets.min_cover_only && *first_size.get_or_insert(cover.len()) < cover.len() {
            return Ok(Verdict::Undecided { exhausted: BudgetKind::MinCoverRestriction });
        }
        stats.covers_tried += 1;
        let sys = build_system(h, &cover)?;
        let report = solve_system(&sys, budgets.solver_nodes);
        stats.solver_nodes += report.nodes;
        match report.outcome {
            SolveOutcome::Solution(m) => {
                let witness = MultiDigraph::from_rows(m)?;
                return Ok(Verdict::Realizable(Realization { witness, cover: cover.cliques().to_vec() }));
            }
            SolveOutcome::BudgetExhausted => solver_exhausted = true,
            SolveOutcome::Unsat => {}
        }
    }
    Ok(if solver_exhausted {
        Verdict::Undecided { exhausted: BudgetKind::SolverNodes }
    } else {
        Verdict::Unrealizable { reason: UnrealizableReason::ExhaustiveCoverSearch, detail: Vec::new() }
    })
}

/// Panics unless `φ(witness) ≅ h`: a failure here is a bug, not a verdict.
fn verify_witness(h: &SimpleGraph, witness: &MultiDigraph, cycle_budget: u64) {
    let image = phi_with_budget(witness, cycle_budget).unwrap_or_else(|e| panic!("witness φ failed: {e}"));
    assert!(
        find_isomorphism(&image.h, h).is_some(),
        "internal error: witness {:?} does not realize {h:?} (φ = {:?})",
        witness.rows(),
        image.h
    );
}

/// Realizability of a possibly disconnected graph, component by component.
/// A realization is the disjoint union of the components' realizations.
pub fn realize_components(h: &SimpleGraph, budgets: &Budgets) -> Result<(Verdict, SearchStats)> {
    let mut total = SearchStats::default();
    let mut witness = MultiDigraph::new(0);
    let mut cover = Vec::new();
    let mut undecided = None;
    for comp in h.components() {
        let sub = h.induced_on(&comp);
        let (v, s) = realize_with_stats(&sub, budgets)?;
        total.covers_tried += s.covers_tried;
        total.solver_nodes += s.solver_nodes;
        total.millis += s.millis;
        match v {
            Verdict::Realizable(r) => {
                cover.extend(r.cover.iter().map(|k| k.iter().map(|x| comp[x]).collect::<crate::VertexSet>()));
                witness = witness.disjoint_union(&r.witness);
            }
            Verdict::Unrealizable { reason, detail } => {
                let detail = match reason {
                    UnrealizableReason::InducedCycleFilter => detail.iter().map(|&x| comp[x]).collect(),
                    _ => detail,
                };
                return Ok((Verdict::Unrealizable { reason, detail }, total));
            }
            u @ Verdict::Undecided { .. } => undecided = undecided.or(Some(u)),
        }
    }
    Ok((undecided.unwrap_or(Verdict::Realizable(Realization { witness, cover })), total))
}

/// The directed medial graph of a tree: one vertex per tree edge (edges in
/// lexicographic order) and, around each tree vertex `v`, a directed cycle
/// through the edges at `v` in increasing order (a self-loop at a leaf).
/// Its cycles are exactly these per-vertex cycles, so φ is the tree itself.
pub fn realize_tree(t: &SimpleGraph) -> Result<MultiDigraph> {
    if !t.is_tree() {
        return Err(Error::Precondition("input is not a tree".into()));
    }
    if t.n() == 1 {
        return Ok(bouquet(1));
    }
    let edges: Vec<(usize, usize)> = t.edges().collect();
    let mut g = MultiDigraph::new(edges.len());
    for v in 0..t.n() {
        let at: Vec<usize> = (0..edges.len()).filter(|&e| edges[e].0 == v || edges[e].1 == v).collect();
        for (k, &e) in at.iter().enumerate() {
            g.add_arcs(e, at[(k + 1) % at.len()], 1);
        }
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexEdgeBounds {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
}

/// Bounds satisfied by some reduced realization of `h`: at least a minimum
/// clique cover's worth of vertices, at most `|V_H| − 1` vertices and
/// `2|V_H| − 2` arcs.
pub fn vertex_edge_bounds(h: &SimpleGraph) -> Result<VertexEdgeBounds> {
    let n = h.n();
    if n < 2 {
        return Err(Error::Precondition("bounds need at least two vertices".into()));
    }
    if !h.is_connected() {
        return Err(Error::Precondition("bounds need a connected graph".into()));
    }
    let min_vertices = enumerate_clique_covers(h, h.edge_count().max(1))?
        .next()
        .map(|c| c.len())
        .expect("every graph has its edges as a cover");
    Ok(VertexEdgeBounds { min_vertices, max_vertices: n - 1, max_edges: 2 * n - 2 })
}

/// Realizability of the dependency graph of `T_n`.
pub fn trace_monoid_family_check(n: usize, budgets: &Budgets) -> Result<Verdict> {
    realize(&trace_family_graph(n), budgets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::square_with_apexes;

    #[test]
    fn small_verdicts() {
        let b = Budgets::default();
        assert!(realize(&SimpleGraph::new(1), &b).unwrap().is_realizable());
        assert!(realize(&SimpleGraph::complete(5), &b).unwrap().is_realizable());
        assert!(matches!(
            realize(&SimpleGraph::cycle(4), &b).unwrap(),
            Verdict::Unrealizable { reason: UnrealizableReason::InducedCycleFilter, .. }
        ));
        assert!(realize(&square_with_apexes(), &b).unwrap().is_realizable());
        assert!(realize(&SimpleGraph::new(2), &b).is_err());
        let (v, _) = realize_components(&SimpleGraph::new(2), &b).unwrap();
        let Verdict::Realizable(r) = v else { panic!() };
        assert_eq!(r.witness.n(), 2);
    }

    #[test]
    fn tree_witness_small() {
        let k2 = SimpleGraph::path(2);
        assert_eq!(realize_tree(&k2).unwrap().rows(), vec![vec![2]]);
        let p3 = realize_tree(&SimpleGraph::path(3)).unwrap();
        assert_eq!(p3.rows(), vec![vec![1, 1], vec![1, 1]]);
        assert!(realize_tree(&SimpleGraph::cycle(3)).is_err());
    }

    #[test]
    fn bounds() {
        let k4 = vertex_edge_bounds(&SimpleGraph::complete(4)).unwrap();
        assert_eq!(k4, VertexEdgeBounds { min_vertices: 1, max_vertices: 3, max_edges: 6 });
        assert_eq!(vertex_edge_bounds(&SimpleGraph::cycle(4)).unwrap().min_vertices, 4);
        let sq = vertex_edge_bounds(&square_with_apexes()).unwrap();
        assert_eq!((sq.max_vertices, sq.max_edges), (5, 10));
    }
}
