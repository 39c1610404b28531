//! Hikes as traces over `φ(G)`: self-avoiding hikes, and hikes and walks
//! counted by their number of cycles `Ω`.
//!
//! Letters with the same closed neighbourhood in `H` (for `φ(G)`, cycles on
//! the same vertex set) are interchangeable: they all depend on each other and
//! on the same other letters. Everything here works on the quotient of `H` by
//! that relation, each class weighted by its size.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, One, Zero};
use serde::Serialize;

use super::poly::IntPolynomial;
use super::series::TruncatedSeries;
use crate::graph::SimpleGraph;
use crate::{Error, Result};

/// Largest twin quotient the self-avoiding hike polynomial accepts.
pub const SA_HIKE_CAP: usize = 30;
/// Largest twin quotient the normal-form counter accepts.
pub const TRACE_QUOTIENT_CAP: usize = 64;
pub const DEFAULT_TRACE_BUDGET: u64 = 50_000_000;

/// `H` with true twins merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinQuotient {
    /// Members of each class, ascending; classes ordered by first member.
    pub classes: Vec<Vec<usize>>,
    /// Class adjacency, without self-adjacency.
    pub adj: Vec<u64>,
}

impl TwinQuotient {
    pub fn new(h: &SimpleGraph, cap: usize) -> Result<Self> {
        let n = h.n();
        // Keyed by the closed neighbourhood as a bit row.
        let mut by_closed: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
        for v in 0..n {
            let mut closed = h.row(v).to_vec();
            closed[v / 64] |= 1 << (v % 64);
            by_closed.entry(closed).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = by_closed.into_values().collect();
        classes.sort();
        let q = classes.len();
        if q > cap {
            return Err(Error::SizeCap { what: "twin quotient", n: q, cap });
        }
        let mut class_of = vec![0; n];
        for (c, members) in classes.iter().enumerate() {
            for &v in members {
                class_of[v] = c;
            }
        }
        let mut adj = vec![0u64; q];
        for (c, members) in classes.iter().enumerate() {
            for u in h.neighbors(members[0]) {
                if class_of[u] != c {
                    adj[c] |= 1 << class_of[u];
                }
            }
        }
        Ok(TwinQuotient { classes, adj })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn weight(&self, c: usize) -> u64 {
        self.classes[c].len() as u64
    }

    fn full(&self) -> u64 {
        low_mask(self.len())
    }

    fn closed(&self, c: usize) -> u64 {
        self.adj[c] | 1 << c
    }

    /// Independent sets of the quotient, the empty set included.
    fn independent_sets(&self, budget: u64) -> Result<Vec<u64>> {
        let mut out = vec![0u64];
        let mut stack = vec![(0u64, 0usize)];
        while let Some((s, from)) = stack.pop() {
            for c in from..self.len() {
                if s & self.closed(c) == 0 {
                    let t = s | 1 << c;
                    out.push(t);
                    if out.len() as u64 > budget {
                        return Err(Error::TraceBudget(budget));
                    }
                    stack.push((t, c + 1));
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut s: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let c = s.trailing_zeros() as usize;
            s &= s - 1;
            c
        })
    })
}

/// `Σ_S k^{|S|}` over independent sets `S` of `H`, the empty set included:
/// the generating polynomial of self-avoiding hikes by number of cycles.
pub fn sa_hike_polynomial(h: &SimpleGraph) -> Result<IntPolynomial> {
    let q = TwinQuotient::new(h, SA_HIKE_CAP)?;
    let weights: Vec<u64> = (0..q.len()).map(|c| q.weight(c)).collect();
    Ok(weighted_independence(&q, &weights, q.full()))
}

/// Weighted independence polynomial of the quotient restricted to `mask`.
fn weighted_independence(q: &TwinQuotient, w: &[u64], mask: u64) -> IntPolynomial {
    if mask == 0 {
        return IntPolynomial::one();
    }
    let (v, deg) = bits(mask).map(|c| (c, (q.adj[c] & mask).count_ones())).max_by_key(|&(c, d)| (d, std::cmp::Reverse(c))).expect("nonempty");
    if deg == 0 {
        return bits(mask).fold(IntPolynomial::one(), |acc, c| &acc * &IntPolynomial::new(vec![BigInt::one(), BigInt::from(w[c])]));
    }
    let without = weighted_independence(q, w, mask & !(1 << v));
    let with = weighted_independence(q, w, mask & !q.closed(v));
    &without + &(&with * &IntPolynomial::monomial(BigInt::from(w[v]), 1))
}

/// `Σ_h z^{Ω(h)}` over all hikes, `= 1 / Σ_S (−z)^{|S|}`.
pub fn hike_gf_by_omega(h: &SimpleGraph, order: usize) -> Result<TruncatedSeries> {
    let den = sa_hike_polynomial(h)?.scale_var(-1);
    TruncatedSeries::from_poly(&den, order).inverse()
}

/// Walks (traces with exactly one maximal letter) by `Ω`, in closed form.
///
/// Traces whose maximal letters all equal the letter `v` are counted by
/// `N_{V∖v} / N_V`, `N_X` being the signed independence polynomial of
/// `H[X]`; dropping the empty trace and summing over `v`, then counting the
/// empty hike once, gives `1 + Σ_v (N_{V∖v} / N_V − 1)`.
pub fn walk_gf_closed_form(h: &SimpleGraph, order: usize) -> Result<TruncatedSeries> {
    let q = TwinQuotient::new(h, SA_HIKE_CAP)?;
    let mut w: Vec<u64> = (0..q.len()).map(|c| q.weight(c)).collect();
    let signed = |w: &[u64]| TruncatedSeries::from_poly(&weighted_independence(&q, w, q.full()).scale_var(-1), order);
    let inv = signed(&w).inverse()?;
    let one = TruncatedSeries::one(order);
    let mut acc = one.clone();
    for c in 0..q.len() {
        w[c] -= 1;
        let term = &(&signed(&w) * &inv) - &one;
        w[c] += 1;
        let times = TruncatedSeries::from_i64s(&[q.weight(c) as i64], order);
        acc = &acc + &(&term * &times);
    }
    Ok(acc)
}

/// Cartier–Foata normal form of a trace over the letters of `H`: every layer
/// is a nonempty set of pairwise commuting letters, and each letter of a
/// layer depends on (equals or is adjacent to) some letter of the previous one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NormalFormTrace {
    pub layers: Vec<Vec<usize>>,
}

impl NormalFormTrace {
    pub fn omega(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn is_valid(&self, h: &SimpleGraph) -> bool {
        let dep = |a: usize, b: usize| a == b || h.has_edge(a, b);
        self.layers.iter().all(|l| {
            !l.is_empty()
                && l.windows(2).all(|p| p[0] < p[1])
                && l.iter().all(|&x| x < h.n())
                && l.iter().enumerate().all(|(i, &a)| l[i + 1..].iter().all(|&b| !h.has_edge(a, b)))
        }) && self.layers.windows(2).all(|p| p[1].iter().all(|&b| p[0].iter().any(|&a| dep(a, b))))
    }

    /// The trace read backwards, in normal form.
    pub fn reversed(&self, h: &SimpleGraph) -> NormalFormTrace {
        let word: Vec<usize> = self.layers.iter().rev().flat_map(|l| l.iter().copied()).collect();
        NormalFormTrace::from_word(h, &word)
    }

    /// Normal form of a word: each letter goes to the layer just above the
    /// highest layer holding a letter it depends on.
    pub fn from_word(h: &SimpleGraph, word: &[usize]) -> NormalFormTrace {
        let mut layers: Vec<Vec<usize>> = Vec::new();
        let mut height: Vec<usize> = Vec::with_capacity(word.len());
        for (i, &x) in word.iter().enumerate() {
            let t = (0..i).filter(|&j| word[j] == x || h.has_edge(word[j], x)).map(|j| height[j] + 1).max().unwrap_or(0);
            height.push(t);
            if t == layers.len() {
                layers.push(Vec::new());
            }
            layers[t].push(x);
        }
        for l in &mut layers {
            l.sort_unstable();
        }
        NormalFormTrace { layers }
    }
}

/// Every nonempty trace with `Ω ≤ order`, in breadth-first order of `Ω`.
/// Meant for small `H`; counts grow like `|V_H|^order`.
pub fn enumerate_normal_forms(h: &SimpleGraph, order: usize, budget: u64) -> Result<Vec<NormalFormTrace>> {
    let n = h.n();
    let mut antichains: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(s) = stack.pop() {
        let from = s.last().map_or(0, |&x| x + 1);
        for x in from..n {
            if s.len() < order && s.iter().all(|&y| !h.has_edge(x, y)) {
                let mut t = s.clone();
                t.push(x);
                antichains.push(t.clone());
                stack.push(t);
            }
        }
    }
    antichains.sort();
    let mut by_omega: Vec<Vec<NormalFormTrace>> = vec![Vec::new(); order + 1];
    let mut produced = 0u64;
    for a in &antichains {
        by_omega[a.len()].push(NormalFormTrace { layers: vec![a.clone()] });
    }
    for om in 1..=order {
        let current = std::mem::take(&mut by_omega[om]);
        for t in &current {
            let last = t.layers.last().expect("nonempty trace");
            for a in antichains.iter().filter(|a| om + a.len() <= order) {
                if a.iter().all(|&b| last.iter().any(|&x| x == b || h.has_edge(x, b))) {
                    produced += 1;
                    if produced > budget {
                        return Err(Error::TraceBudget(budget));
                    }
                    let mut layers = t.layers.clone();
                    layers.push(a.clone());
                    by_omega[om + a.len()].push(NormalFormTrace { layers });
                }
            }
        }
        by_omega[om] = current;
    }
    Ok(by_omega.into_iter().flatten().collect())
}

/// Layer-by-layer normal-form count, aggregated over the twin quotient: the
/// state after a layer is the set of classes it uses, since which layers may
/// follow depends only on that.
fn count_normal_forms(h: &SimpleGraph, order: usize, budget: u64, singleton_start: bool) -> Result<TruncatedSeries> {
    let q = TwinQuotient::new(h, TRACE_QUOTIENT_CAP)?;
    let sets: Vec<u64> = q.independent_sets(budget)?.into_iter().filter(|&s| s != 0 && s.count_ones() as usize <= order).collect();
    let reach: Vec<u64> = sets.iter().map(|&s| bits(s).fold(0, |a, c| a | q.closed(c))).collect();
    // Successor lists, shared by sets with the same reach.
    let mut succ_of_reach: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut work = 0u64;
    for &r in &reach {
        succ_of_reach.entry(r).or_insert_with(|| {
            work += sets.len() as u64;
            sets.iter().enumerate().filter(|&(_, &t)| t & !r == 0).map(|(i, _)| i).collect()
        });
    }
    let dp = NormalFormDp { q: &q, sets: &sets, reach: &reach, succ: &succ_of_reach, order, budget, work, singleton_start };
    // Machine integers almost always suffice; redo in BigInt on overflow.
    let out = match dp.run::<u128>()? {
        Some(c) => c.into_iter().map(BigInt::from).collect(),
        None => dp.run::<BigInt>()?.expect("BigInt arithmetic does not overflow"),
    };
    Ok(TruncatedSeries::new(out, order))
}

struct NormalFormDp<'a> {
    q: &'a TwinQuotient,
    sets: &'a [u64],
    reach: &'a [u64],
    succ: &'a HashMap<u64, Vec<usize>>,
    order: usize,
    budget: u64,
    work: u64,
    singleton_start: bool,
}

impl NormalFormDp<'_> {
    /// `None` when `T` overflows.
    fn run<T: Clone + Zero + One + From<u64> + CheckedAdd + CheckedMul>(&self) -> Result<Option<Vec<T>>> {
        let sets = self.sets;
        let mut weight = Vec::with_capacity(sets.len());
        for &s in sets {
            let mut w = T::one();
            for c in bits(s) {
                let Some(x) = w.checked_mul(&T::from(self.q.weight(c))) else { return Ok(None) };
                w = x;
            }
            weight.push(w);
        }
        let order = self.order;
        let mut work = self.work;
        let mut f: Vec<Vec<T>> = vec![vec![T::zero(); sets.len()]; order + 1];
        for (i, &s) in sets.iter().enumerate() {
            if !self.singleton_start || s.count_ones() == 1 {
                f[s.count_ones() as usize][i] = weight[i].clone();
            }
        }
        let mut out = vec![T::zero(); order + 1];
        out[0] = T::one();
        for om in 1..=order {
            for i in 0..sets.len() {
                if f[om][i].is_zero() {
                    continue;
                }
                let cur = f[om][i].clone();
                let Some(x) = out[om].checked_add(&cur) else { return Ok(None) };
                out[om] = x;
                for &j in &self.succ[&self.reach[i]] {
                    let top = om + sets[j].count_ones() as usize;
                    if top > order {
                        continue;
                    }
                    work += 1;
                    if work > self.budget {
                        return Err(Error::TraceBudget(self.budget));
                    }
                    let Some(x) = cur.checked_mul(&weight[j]).and_then(|add| f[top][j].checked_add(&add)) else {
                        return Ok(None);
                    };
                    f[top][j] = x;
                }
            }
        }
        Ok(Some(out))
    }
}

/// All traces by `Ω`, counted from their normal forms (empty trace at `z^0`).
pub fn count_traces_by_omega(h: &SimpleGraph, order: usize) -> Result<TruncatedSeries> {
    count_traces_by_omega_with(h, order, DEFAULT_TRACE_BUDGET)
}

pub fn count_traces_by_omega_with(h: &SimpleGraph, order: usize, budget: u64) -> Result<TruncatedSeries> {
    count_normal_forms(h, order, budget, false)
}

/// Walks by `Ω`: traces with a single maximal letter, the empty hike counted
/// at `z^0`. Reading traces backwards swaps maximal and minimal letters, so
/// these are counted as normal forms whose first layer is a single letter.
pub fn walk_gf_by_omega(h: &SimpleGraph, order: usize) -> Result<TruncatedSeries> {
    walk_gf_by_omega_with(h, order, DEFAULT_TRACE_BUDGET)
}

pub fn walk_gf_by_omega_with(h: &SimpleGraph, order: usize, budget: u64) -> Result<TruncatedSeries> {
    count_normal_forms(h, order, budget, true)
}
