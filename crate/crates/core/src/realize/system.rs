use crate::graph::{SimpleGraph, VertexSet};
use crate::realize::CliqueCover;
use crate::{Error, Result};

/// Largest number of cliques (candidate digraph vertices) a system may have.
pub const MAX_SYSTEM_SIZE: usize = 20;

/// The polynomial system attached to a clique cover `κ_0..κ_{n−1}`: for every
/// nonempty `W ⊆ [n]`,
///
/// ```text
/// Σ_{σ ∈ Cyc_W} Π_{v ∈ W} m[v][σ(v)] = |K_W|,   K_W = ∩_{v∈W} κ_v \ ∪_{v∉W} κ_v
/// ```
///
/// A nonnegative integer solution `m` is the adjacency matrix of a digraph
/// whose vertex `v` lies on exactly the cycles `κ_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSystem {
    n: usize,
    /// `targets[W]` with `W` as a bitmask over `0..n`.
    targets: Vec<u32>,
    bound: u32,
}

impl DiophantineSystem {
    /// Builds a system from explicit targets (`W` as bitmask, zero elsewhere).
    pub fn from_targets(n: usize, nonzero: &[(u32, u32)]) -> Result<Self> {
        if n > MAX_SYSTEM_SIZE {
            return Err(Error::SizeCap { what: "system variables", n, cap: MAX_SYSTEM_SIZE });
        }
        let mut targets = vec![0; 1 << n];
        for &(w, t) in nonzero {
            if w == 0 || w as usize >= targets.len() {
                return Err(Error::Precondition(format!("subset mask {w:#b} outside 1..2^{n}")));
            }
            targets[w as usize] = t;
        }
        let bound = targets.iter().copied().max().unwrap_or(0);
        Ok(DiophantineSystem { n, targets, bound })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn target(&self, w: u32) -> u32 {
        self.targets[w as usize]
    }

    /// `B = max_W |K_W|`.
    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `(W, |K_W|)` for nonzero targets, `W` in increasing size then
    /// lexicographic order.
    pub fn nonzero_targets(&self) -> Vec<(VertexSet, u32)> {
        let mut v: Vec<(VertexSet, u32)> = (1..self.targets.len())
            .filter(|&w| self.targets[w] > 0)
            .map(|w| (VertexSet::from_bits(w as u128), self.targets[w]))
            .collect();
        v.sort_by_key(|(w, _)| (w.len(), w.to_vec()));
        v
    }

    pub fn total(&self) -> u64 {
        self.targets.iter().map(|&t| t as u64).sum()
    }
}

pub fn build_system(h: &SimpleGraph, cover: &CliqueCover) -> Result<DiophantineSystem> {
    let n = cover.len();
    if n > MAX_SYSTEM_SIZE {
        return Err(Error::SizeCap { what: "system variables", n, cap: MAX_SYSTEM_SIZE });
    }
    let mut targets = vec![0u32; 1 << n];
    for x in 0..h.n() {
        let w: usize = cover.cliques().iter().enumerate().filter(|(_, k)| k.contains(x)).map(|(i, _)| 1 << i).sum();
        if w == 0 {
            return Err(Error::Precondition(format!("vertex {x} is not covered")));
        }
        targets[w] += 1;
    }
    let bound = targets.iter().copied().max().unwrap_or(0);
    Ok(DiophantineSystem { n, targets, bound })
}
