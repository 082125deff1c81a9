//! Finite loopless digraphs with bitmask out/in-neighborhood rows.

use crate::error::GraphError;
use crate::graph::{mask_to_vec, MAX_VERTICES};

/// A finite loopless digraph on vertices `0..n`.
///
/// Out- and in-neighborhoods are kept as parallel bitmask rows so that
/// the derived-graph operators reduce to single AND instructions per pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds cap {MAX_VERTICES}");
        Digraph { n, out: vec![0; n], inn: vec![0; n] }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut d = Digraph::new(n);
        for &(x, y) in arcs {
            d.try_add_arc(x, y)?;
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn try_add_arc(&mut self, x: usize, y: usize) -> Result<(), GraphError> {
        if x >= self.n || y >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: x.max(y), n: self.n });
        }
        if x == y {
            return Err(GraphError::Loop { vertex: x });
        }
        self.out[x] |= 1 << y;
        self.inn[y] |= 1 << x;
        Ok(())
    }

    /// Adds the arc `(x, y)`. Panics on loops or out-of-range endpoints.
    pub fn add_arc(&mut self, x: usize, y: usize) {
        self.try_add_arc(x, y).unwrap();
    }

    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        x < self.n && y < self.n && self.out[x] & (1 << y) != 0
    }

    /// `N⁺(x)` as a bitmask.
    pub fn out_row(&self, x: usize) -> u64 {
        self.out[x]
    }

    /// `N⁻(x)` as a bitmask.
    pub fn in_row(&self, x: usize) -> u64 {
        self.inn[x]
    }

    pub fn out_neighbors(&self, x: usize) -> Vec<usize> {
        mask_to_vec(self.out[x])
    }

    pub fn in_neighbors(&self, x: usize) -> Vec<usize> {
        mask_to_vec(self.inn[x])
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Arcs as pairs `(x, y)` in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in mask_to_vec(self.out[x]) {
                out.push((x, y));
            }
        }
        out
    }

    /// Every arc `(x, y)` becomes `(y, x)`.
    pub fn reverse(&self) -> Digraph {
        Digraph { n: self.n, out: self.inn.clone(), inn: self.out.clone() }
    }

    /// Relabels by `perm`, where vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let mut d = Digraph::new(self.n);
        for (x, y) in self.arcs() {
            d.add_arc(perm[x], perm[y]);
        }
        d
    }

    /// True iff the arc relation is transitive:
    /// `x → y` and `y → z` imply `x → z`.
    pub fn is_transitive(&self) -> bool {
        for x in 0..self.n {
            let mut reach = 0u64;
            let mut f = self.out[x];
            while f != 0 {
                let y = f.trailing_zeros() as usize;
                f &= f - 1;
                reach |= self.out[y];
            }
            if reach & !self.out[x] != 0 {
                return false;
            }
        }
        true
    }

    /// True iff no pair carries arcs in both directions.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|x| self.out[x] & self.inn[x] == 0)
    }
}
