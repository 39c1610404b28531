use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::matrix::det_i_minus_za;
use super::poly::IntPolynomial;
use super::series::TruncatedSeries;
use crate::graph::MultiDigraph;
use crate::{Error, Result};

pub const RESOLVENT_CAP: usize = 20;
pub const DEFAULT_WALK_BUDGET: u64 = 10_000_000;

/// `(I − zA)^{-1}_{ii} = num / den`, the generating function of closed walks
/// at `i` by length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkResolvent {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
    pub series: TruncatedSeries,
}

/// Numerator: `det(I − zA)` with row and column `i` deleted (Cramer's rule).
pub fn walk_resolvent_gf(g: &MultiDigraph, i: usize, order: usize) -> Result<WalkResolvent> {
    let n = g.n();
    if i >= n {
        return Err(Error::VertexOutOfRange { vertex: i, n });
    }
    if n > RESOLVENT_CAP {
        return Err(Error::SizeCap { what: "walk resolvent", n, cap: RESOLVENT_CAP });
    }
    let rest: Vec<usize> = (0..n).filter(|&v| v != i).collect();
    let num = det_i_minus_za(&g.induced(&rest));
    let den = det_i_minus_za(g);
    let series = TruncatedSeries::ratio(&num, &den, order)?;
    Ok(WalkResolvent { num, den, series })
}

/// Rooted walks from `i` to `j` of length at most `max_len`, counted by the
/// number of loops Lawler's procedure erases from them. Complete only up to
/// that length: longer walks may erase few loops too.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopErasedSeries {
    pub series: TruncatedSeries,
    pub max_len: usize,
    pub walks: u64,
}

pub fn loop_erased_omega_gf(g: &MultiDigraph, i: usize, j: usize, max_len: usize, order: usize) -> Result<LoopErasedSeries> {
    loop_erased_omega_gf_with(g, i, j, max_len, order, DEFAULT_WALK_BUDGET)
}

pub fn loop_erased_omega_gf_with(
    g: &MultiDigraph,
    i: usize,
    j: usize,
    max_len: usize,
    order: usize,
    budget: u64,
) -> Result<LoopErasedSeries> {
    let n = g.n();
    for v in [i, j] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let succ: Vec<Vec<(usize, u64)>> = (0..n).map(|u| g.successors(u).collect()).collect();
    let mut st = Lawler { succ, target: j, max_len, acc: vec![BigInt::zero(); order + 1], visited: 0, budget, path: vec![i], pos: vec![usize::MAX; n], erased: 0 };
    st.pos[i] = 0;
    st.walk(i, 0, &BigInt::from(1))?;
    Ok(LoopErasedSeries { series: TruncatedSeries::new(st.acc, order), max_len, walks: st.visited })
}

struct Lawler {
    succ: Vec<Vec<(usize, u64)>>,
    target: usize,
    max_len: usize,
    acc: Vec<BigInt>,
    visited: u64,
    budget: u64,
    /// The loop-erased path so far; `pos[v]` is `v`'s index in it.
    path: Vec<usize>,
    pos: Vec<usize>,
    erased: usize,
}

impl Lawler {
    fn walk(&mut self, u: usize, len: usize, mult: &BigInt) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::WalkBudget(self.budget));
        }
        if u == self.target && self.erased < self.acc.len() {
            self.acc[self.erased] += mult;
        }
        if len == self.max_len {
            return Ok(());
        }
        for idx in 0..self.succ[u].len() {
            let (v, k) = self.succ[u][idx];
            let m = mult * k;
            if self.pos[v] == usize::MAX {
                self.pos[v] = self.path.len();
                self.path.push(v);
                self.walk(v, len + 1, &m)?;
                self.path.pop();
                self.pos[v] = usize::MAX;
            } else {
                // Arriving at a vertex already on the path closes a loop.
                let cut = self.pos[v] + 1;
                let tail = self.path.split_off(cut);
                for &x in &tail {
                    self.pos[x] = usize::MAX;
                }
                self.erased += 1;
                self.walk(v, len + 1, &m)?;
                self.erased -= 1;
                for (off, &x) in tail.iter().enumerate() {
                    self.pos[x] = cut + off;
                }
                self.path.extend(tail);
            }
        }
        Ok(())
    }
}
