//! Bounded backtracking search for nonnegative integer solutions of a
//! [`DiophantineSystem`].
//!
//! **Why bounded entries suffice.** Let `B_ij` be the largest target among the
//! sets `W ⊇ {i, j}`, the only equations in which `m_ij` occurs. Every monomial
//! is a nonnegative summand of its equation, so in a solution a monomial of
//! equation `W` is at most the target of `W`. If some entry `m_ij > B_ij`, every
//! monomial containing it must therefore vanish through another zero factor;
//! setting `m_ij = 0` keeps all those monomials at zero and touches no other
//! monomial, so it is again a solution. Repeating this yields a solution with
//! every `m_ij ≤ B_ij` (and so `≤ B`, the largest target), which makes the
//! bounded search exhaustive.
//!
//! **Search order.** Diagonal entries are forced: `m_vv = |K_{v}|`. Off-diagonal
//! entries are assigned in pairs `(m_ik, m_ki)` for `i < k`, ordered by `k`
//! then `i`, each pair drawn from the factorisations of `|K_{i,k}|`. After the
//! pair `(i, k)` every equation `W` with `max W = k` and second largest element `i`
//! has all its variables assigned and is checked at once. Those are exactly
//! the sets `{i, k} ∪ S`, `S ⊆ [0, i)`; their cycle sums come from a table of
//! weighted simple paths out of `k`, extended incrementally.

use super::DiophantineSystem;

/// Default node budget per system.
pub const DEFAULT_SOLVER_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A solution, as a row-major `n × n` matrix.
    Solution(Vec<Vec<u64>>),
    Unsat,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub outcome: SolveOutcome,
    /// Pair assignments tried.
    pub nodes: u64,
}

/// Finds one solution with entries in `[0, B]`, or proves there is none.
pub fn solve_system(sys: &DiophantineSystem, node_budget: u64) -> SolveReport {
    let mut found = None;
    let (status, nodes) = Solver::new(sys, node_budget).run(&mut |m| {
        found = Some(m);
        false
    });
    let outcome = match (status, found) {
        (_, Some(m)) => SolveOutcome::Solution(m),
        (Status::Budget, None) => SolveOutcome::BudgetExhausted,
        _ => SolveOutcome::Unsat,
    };
    SolveReport { outcome, nodes }
}

/// Every solution with entries in `[0, B]`, or `Err(nodes)` when the budget
/// runs out first.
pub fn enumerate_solutions(sys: &DiophantineSystem, node_budget: u64) -> Result<Vec<Vec<Vec<u64>>>, u64> {
    let mut all = Vec::new();
    let (status, nodes) = Solver::new(sys, node_budget).run(&mut |m| {
        all.push(m);
        true
    });
    match status {
        Status::Budget => Err(nodes),
        _ => Ok(all),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Done,
    Stopped,
    Budget,
}

struct Solver<'a> {
    sys: &'a DiophantineSystem,
    n: usize,
    m: Vec<u64>,
    pairs: Vec<(usize, usize)>,
    /// `paths[k][M * k + v]`: weighted simple paths `k → … → v` through
    /// exactly `M ∪ {k}`, for `M ⊆ [0, k)`.
    paths: Vec<Vec<u64>>,
    /// `cap[i * n + k]`: the bound `B_ik` above.
    cap: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl<'a> Solver<'a> {
    fn new(sys: &'a DiophantineSystem, budget: u64) -> Self {
        let n = sys.n();
        let mut m = vec![0; n * n];
        for v in 0..n {
            m[v * n + v] = sys.target(1 << v) as u64;
        }
        let pairs = (1..n).flat_map(|k| (0..k).map(move |i| (i, k))).collect();
        let paths = (0..n).map(|k| vec![0; (1 << k) * k]).collect();
        // Largest target over supersets, one coordinate at a time.
        let mut sup: Vec<u32> = (0..1u32 << n).map(|w| sys.target(w)).collect();
        for v in 0..n {
            for w in 0..sup.len() {
                if w & 1 << v == 0 {
                    sup[w] = sup[w].max(sup[w | 1 << v]);
                }
            }
        }
        let mut cap = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                cap[i * n + k] = sup[1 << i | 1 << k] as u64;
            }
        }
        Solver { sys, n, m, pairs, paths, cap, nodes: 0, budget }
    }

    fn run(mut self, on_solution: &mut dyn FnMut(Vec<Vec<u64>>) -> bool) -> (Status, u64) {
        let status = self.search(0, on_solution);
        (status, self.nodes)
    }

    fn options(&self, i: usize, k: usize) -> Vec<(u64, u64)> {
        let t = self.sys.target(1 << i | 1 << k) as u64;
        if t == 0 {
            let n = self.n;
            let mut v = vec![(0, 0)];
            v.extend((1..=self.cap[k * n + i]).map(|x| (0, x)));
            v.extend((1..=self.cap[i * n + k]).map(|x| (x, 0)));
            v
        } else {
            (1..=t).filter(|a| t % a == 0).map(|a| (a, t / a)).collect()
        }
    }

    fn search(&mut self, p: usize, on_solution: &mut dyn FnMut(Vec<Vec<u64>>) -> bool) -> Status {
        let n = self.n;
        let Some(&(i, k)) = self.pairs.get(p) else {
            let rows = self.m.chunks(n.max(1)).take(n).map(|r| r.to_vec()).collect();
            return if on_solution(rows) { Status::Done } else { Status::Stopped };
        };
        for (a, b) in self.options(i, k) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Status::Budget;
            }
            self.m[i * n + k] = a;
            self.m[k * n + i] = b;
            if self.extend_and_check(i, k) {
                match self.search(p + 1, on_solution) {
                    Status::Done => {}
                    other => return other,
                }
            }
        }
        self.m[i * n + k] = 0;
        self.m[k * n + i] = 0;
        Status::Done
    }

    /// Fills the path table for masks with maximum `i` and checks the
    /// equations `M ∪ {k}` they complete.
    fn extend_and_check(&mut self, i: usize, k: usize) -> bool {
        let n = self.n;
        let m = &self.m;
        let at = |u: usize, v: usize| m[u * n + v];
        let table = &mut self.paths[k];
        for s in 0..1usize << i {
            let mask = s | 1 << i;
            let mut count = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let val = if mask == 1 << v {
                    at(k, v)
                } else {
                    let prev = mask & !(1 << v);
                    let mut acc = 0u64;
                    let mut us = prev;
                    while us != 0 {
                        let u = us.trailing_zeros() as usize;
                        us &= us - 1;
                        let w = at(u, v);
                        if w != 0 {
                            acc = acc.saturating_add(table[prev * k + u].saturating_mul(w));
                        }
                    }
                    acc
                };
                table[mask * k + v] = val;
                count = count.saturating_add(val.saturating_mul(at(v, k)));
            }
            if count != self.sys.target((mask | 1 << k) as u32) as u64 {
                return false;
            }
        }
        true
    }
}
