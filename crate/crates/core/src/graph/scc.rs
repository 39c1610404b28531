use super::MultiDigraph;

/// Strongly connected components (Kosaraju, iterative). Each part is sorted
/// and parts are ordered by their smallest vertex.
pub fn strongly_connected_components(g: &MultiDigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let succ: Vec<Vec<usize>> = (0..n).map(|i| g.successors(i).map(|(j, _)| j).collect()).collect();
    let pred: Vec<Vec<usize>> = (0..n).map(|j| g.predecessors(j).map(|(i, _)| i).collect()).collect();

    // First pass: vertices in order of DFS completion.
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0)];
        while let Some(top) = stack.last_mut() {
            let (u, k) = *top;
            if let Some(&v) = succ[u].get(k) {
                top.1 += 1;
                if !seen[v] {
                    seen[v] = true;
                    stack.push((v, 0));
                }
            } else {
                order.push(u);
                stack.pop();
            }
        }
    }

    let mut comp = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = parts.len();
        comp[s] = id;
        let mut part = vec![s];
        let mut k = 0;
        while k < part.len() {
            let u = part[k];
            k += 1;
            for &v in &pred[u] {
                if comp[v] == usize::MAX {
                    comp[v] = id;
                    part.push(v);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts.sort_unstable_by_key(|p| p[0]);
    parts
}
