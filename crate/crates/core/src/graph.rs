//! Finite simple undirected graphs with bitmask adjacency rows.
//!
//! Vertices are dense indices `0..n`. Adjacency is stored as one `u64`
//! bitmask per vertex, which keeps neighborhood intersection at a single
//! AND in the enumeration hot loops. Vertex counts are capped at 64.

use crate::error::GraphError;

pub const MAX_VERTICES: usize = 64;

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UndirectedGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl UndirectedGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds cap {MAX_VERTICES}");
        UndirectedGraph { n, rows: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = UndirectedGraph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    /// Adds the edge `uv`. Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).unwrap();
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The complete graph `K_k`.
    pub fn complete(k: usize) -> Self {
        let mut g = UndirectedGraph::new(k);
        for u in 0..k {
            for v in (u + 1)..k {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The edgeless graph `I_k`.
    pub fn edgeless(k: usize) -> Self {
        UndirectedGraph::new(k)
    }

    /// The complete bipartite graph `K_{m,n}` with partite sets
    /// `{0..m}` and `{m..m+n}`. Rejects empty parts.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self, GraphError> {
        if m == 0 || n == 0 {
            return Err(GraphError::EmptyPartiteSet { m, n });
        }
        let mut g = UndirectedGraph::new(m + n);
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are re-indexed by `+self.n`.
    pub fn disjoint_union(&self, other: &UndirectedGraph) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(self.n + other.n);
        for u in 0..self.n {
            g.rows[u] = self.rows[u];
        }
        for u in 0..other.n {
            g.rows[self.n + u] = other.rows[u] << self.n;
        }
        g
    }

    /// Edge present iff absent here; same vertex set.
    pub fn complement(&self) -> UndirectedGraph {
        let full: u64 = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut g = UndirectedGraph::new(self.n);
        for u in 0..self.n {
            g.rows[u] = (!self.rows[u]) & full & !(1 << u);
        }
        g
    }

    /// Connected components as disjoint sorted vertex sets, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            // BFS over bitmask frontiers.
            let mut comp: u64 = 1 << start;
            let mut frontier: u64 = 1 << start;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(mask_to_vec(comp));
        }
        out
    }

    /// Vertices of degree 0.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.rows[v] == 0).collect()
    }

    /// Vertices adjacent to all other `n - 1` vertices.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// The subgraph induced by the given vertex set, re-indexed to
    /// `0..keep.len()` in the order given.
    pub fn induced(&self, keep: &[usize]) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels by `perm`, where vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> UndirectedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = UndirectedGraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

pub(crate) fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// The path `P_3` (vertex 1 is the center). Handy in tests and docs.
pub fn path3() -> UndirectedGraph {
    UndirectedGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
}
