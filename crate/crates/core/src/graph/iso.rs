//! Isomorphism testing and canonical labelling by individualisation and
//! colour refinement.
//!
//! Both searches prune interchangeable twins (vertices with the same
//! neighbourhood apart from each other): swapping two twins is an
//! automorphism that fixes everything else, so only one of them needs to be
//! tried at any branch point.

use super::{to_graph6, SimpleGraph};
use crate::{Error, Result};

/// Size cap applied by [`are_isomorphic`] and [`canonical_form`].
pub const DEFAULT_ISO_CAP: usize = 12;

struct Colored {
    adj: Vec<Vec<usize>>,
}

impl Colored {
    fn new(parts: &[&SimpleGraph]) -> Self {
        let mut adj = Vec::new();
        for h in parts {
            let off = adj.len();
            adj.extend((0..h.n()).map(|u| h.neighbors(u).map(|v| v + off).collect::<Vec<_>>()));
        }
        Colored { adj }
    }

    /// Equitable refinement; colours are renumbered `0..k` by sorted signature,
    /// so the result depends only on the isomorphism class of the input.
    fn refine(&self, colors: &mut [u32]) {
        let n = colors.len();
        let mut classes = usize::MAX;
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        loop {
            sigs.clear();
            for u in 0..n {
                let mut nb: Vec<u32> = self.adj[u].iter().map(|&v| colors[v]).collect();
                nb.sort_unstable();
                sigs.push((colors[u], nb));
            }
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
            let mut k = 0u32;
            for (pos, &u) in idx.iter().enumerate() {
                if pos > 0 && sigs[u] != sigs[idx[pos - 1]] {
                    k += 1;
                }
                colors[u] = k;
            }
            let now = if n == 0 { 0 } else { k as usize + 1 };
            if now == classes {
                return;
            }
            classes = now;
        }
    }
}

/// `rep[u]` is the smallest vertex twin to `u` (possibly `u` itself).
fn twin_reps(h: &SimpleGraph) -> Vec<usize> {
    let n = h.n();
    let nb: Vec<Vec<usize>> = (0..n).map(|u| h.neighbors(u).collect()).collect();
    let mut rep: Vec<usize> = (0..n).collect();
    for w in 0..n {
        for u in 0..w {
            if rep[u] != u || nb[u].len() != nb[w].len() {
                continue;
            }
            let a = nb[u].iter().filter(|&&x| x != w);
            let b = nb[w].iter().filter(|&&x| x != u);
            if a.eq(b) {
                rep[w] = u;
                break;
            }
        }
    }
    rep
}

fn individualize(colors: &mut [u32], vs: &[usize]) {
    for c in colors.iter_mut() {
        *c = 2 * *c + 1;
    }
    for &v in vs {
        colors[v] -= 1;
    }
}

/// Smallest non-singleton colour class among `range`, ties broken by colour.
fn target_cell(colors: &[u32], range: std::ops::Range<usize>) -> Option<u32> {
    let mut count = std::collections::BTreeMap::<u32, usize>::new();
    for u in range {
        *count.entry(colors[u]).or_default() += 1;
    }
    count.into_iter().filter(|&(_, k)| k > 1).min_by_key(|&(c, k)| (k, c)).map(|(c, _)| c)
}

/// An isomorphism `h1 → h2` as a vertex map, if one exists. No size cap.
pub fn find_isomorphism(h1: &SimpleGraph, h2: &SimpleGraph) -> Option<Vec<usize>> {
    let n = h1.n();
    if n != h2.n() || h1.edge_count() != h2.edge_count() || h1.degree_sequence() != h2.degree_sequence() {
        return None;
    }
    let cg = Colored::new(&[h1, h2]);
    let reps = twin_reps(h2);
    let mut colors = vec![0u32; 2 * n];
    iso_search(&cg, h1, h2, &reps, &mut colors)
}

fn iso_search(cg: &Colored, h1: &SimpleGraph, h2: &SimpleGraph, reps: &[usize], colors: &mut [u32]) -> Option<Vec<usize>> {
    let n = h1.n();
    cg.refine(colors);
    let mut left: Vec<u32> = colors[..n].to_vec();
    let mut right: Vec<u32> = colors[n..].to_vec();
    left.sort_unstable();
    right.sort_unstable();
    if left != right {
        return None;
    }
    let Some(cell) = target_cell(colors, 0..n) else {
        let mut by_color = vec![usize::MAX; 2 * n];
        for w in 0..n {
            by_color[colors[n + w] as usize] = w;
        }
        let map: Vec<usize> = (0..n).map(|v| by_color[colors[v] as usize]).collect();
        let ok = h1.edges().all(|(u, v)| h2.has_edge(map[u], map[v]));
        return ok.then_some(map);
    };
    let v = (0..n).find(|&u| colors[u] == cell).expect("cell is nonempty");
    let mut tried: Vec<usize> = Vec::new();
    for w in (0..n).filter(|&w| colors[n + w] == cell) {
        if tried.contains(&reps[w]) {
            continue;
        }
        tried.push(reps[w]);
        let mut next = colors.to_vec();
        individualize(&mut next, &[v, n + w]);
        if let Some(map) = iso_search(cg, h1, h2, reps, &mut next) {
            return Some(map);
        }
    }
    None
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::SizeCap { what: "isomorphism search", n, cap });
    }
    Ok(())
}

/// Isomorphism test for graphs with at most [`DEFAULT_ISO_CAP`] vertices.
pub fn are_isomorphic(h1: &SimpleGraph, h2: &SimpleGraph) -> Result<bool> {
    are_isomorphic_with_cap(h1, h2, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_with_cap(h1: &SimpleGraph, h2: &SimpleGraph, cap: usize) -> Result<bool> {
    check_cap(h1.n().max(h2.n()), cap)?;
    Ok(find_isomorphism(h1, h2).is_some())
}

/// A string equal for two graphs iff they are isomorphic: the graph6 encoding
/// of the relabelling whose adjacency bits are lexicographically least among
/// the leaves of the refinement search tree.
pub fn canonical_form(h: &SimpleGraph) -> Result<String> {
    canonical_form_with_cap(h, DEFAULT_ISO_CAP)
}

pub fn canonical_form_with_cap(h: &SimpleGraph, cap: usize) -> Result<String> {
    check_cap(h.n(), cap)?;
    let cg = Colored::new(&[h]);
    let reps = twin_reps(h);
    let mut colors = vec![0u32; h.n()];
    let mut best: Option<String> = None;
    canon_search(&cg, h, &reps, &mut colors, &mut best)?;
    Ok(best.expect("search reaches at least one leaf"))
}

fn canon_search(cg: &Colored, h: &SimpleGraph, reps: &[usize], colors: &mut [u32], best: &mut Option<String>) -> Result<()> {
    let n = h.n();
    cg.refine(colors);
    let Some(cell) = target_cell(colors, 0..n) else {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let cert = to_graph6(&h.permute(&perm))?;
        if best.as_ref().is_none_or(|b| cert < *b) {
            *best = Some(cert);
        }
        return Ok(());
    };
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == cell) {
        if tried.contains(&reps[v]) {
            continue;
        }
        tried.push(reps[v]);
        let mut next = colors.to_vec();
        individualize(&mut next, &[v]);
        canon_search(cg, h, reps, &mut next, best)?;
    }
    Ok(())
}
