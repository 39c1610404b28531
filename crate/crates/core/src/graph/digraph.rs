use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A directed multigraph given by its adjacency matrix: `get(i, j)` is the
/// number of parallel arcs `i → j`, the diagonal counts self-loops.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct MultiDigraph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    adj: Vec<Vec<u64>>,
}

impl TryFrom<MatrixRepr> for MultiDigraph {
    type Error = Error;

    fn try_from(m: MatrixRepr) -> Result<Self> {
        if m.adj.len() != m.n {
            return Err(Error::Precondition(format!("matrix has {} rows, expected {}", m.adj.len(), m.n)));
        }
        MultiDigraph::from_rows(m.adj)
    }
}

impl From<MultiDigraph> for MatrixRepr {
    fn from(g: MultiDigraph) -> Self {
        MatrixRepr { n: g.n, adj: g.rows() }
    }
}

impl MultiDigraph {
    pub fn new(n: usize) -> Self {
        MultiDigraph { n, adj: vec![0; n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        let mut g = MultiDigraph::new(n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Precondition(format!("row {i} has length {}, expected {n}", row.len())));
            }
            g.adj[i * n..(i + 1) * n].copy_from_slice(&row);
        }
        Ok(g)
    }

    /// Builds a graph from `(tail, head, multiplicity)` triples, summing repeats.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize, u64)]) -> Result<Self> {
        let mut g = MultiDigraph::new(n);
        for &(u, v, k) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            g.add_arcs(u, v, k);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.adj[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, k: u64) {
        self.adj[i * self.n + j] = k;
    }

    pub fn add_arcs(&mut self, i: usize, j: usize, k: u64) {
        self.adj[i * self.n + j] += k;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// `(head, multiplicity)` for every head with at least one arc from `i`.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.row(i).iter().enumerate().filter(|(_, &k)| k > 0).map(|(j, &k)| (j, k))
    }

    pub fn predecessors(&self, j: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        (0..self.n).map(move |i| (i, self.get(i, j))).filter(|&(_, k)| k > 0)
    }

    /// Out-degree counted with multiplicity (self-loops included).
    pub fn out_degree(&self, i: usize) -> u64 {
        self.row(i).iter().sum()
    }

    pub fn in_degree(&self, j: usize) -> u64 {
        (0..self.n).map(|i| self.get(i, j)).sum()
    }

    pub fn arc_count(&self) -> u64 {
        self.adj.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = MultiDigraph::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Subgraph induced on `verts`, relabelled `0..verts.len()` in the given order.
    pub fn induced(&self, verts: &[usize]) -> Self {
        let mut g = MultiDigraph::new(verts.len());
        for (a, &i) in verts.iter().enumerate() {
            for (b, &j) in verts.iter().enumerate() {
                g.set(a, b, self.get(i, j));
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut g = MultiDigraph::new(n);
        for i in 0..self.n {
            for j in 0..self.n {
                g.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                g.set(self.n + i, self.n + j, other.get(i, j));
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut g = MultiDigraph::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                g.set(perm[i], perm[j], self.get(i, j));
            }
        }
        g
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n > 0 && super::strongly_connected_components(self).len() == 1
    }
}
