//! Brute-force canonical labeling for small graphs.
//!
//! The canonical form is the lexicographically minimal adjacency encoding
//! over all vertex permutations, found by branch-and-bound: vertices are
//! placed into positions one at a time, and a branch is cut as soon as its
//! partial encoding exceeds the best complete encoding found so far.
//! Candidates are tried in order of increasing degree, which makes the
//! first complete encoding close to minimal and the pruning sharp.
//!
//! Hard cap at n = 10 (45 encoding bits, 10! permutations).

use crate::error::GraphError;
use crate::graph::UndirectedGraph;

pub const ISO_CAP: usize = 10;

/// Permutation-invariant encoding of a graph; equal iff isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

struct Search<'a> {
    g: &'a UndirectedGraph,
    n: usize,
    total_bits: usize,
    // placement[pos] = original vertex placed at pos
    placement: Vec<usize>,
    best: u64,
    have_best: bool,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    /// Bits contributed by placing `v` at position `pos`: adjacency of `v`
    /// to the already-placed vertices, earlier positions more significant.
    fn pair_bits(&self, v: usize, pos: usize) -> u64 {
        let mut bits = 0u64;
        for (i, &u) in self.placement[..pos].iter().enumerate() {
            if self.g.has_edge(u, v) {
                bits |= 1 << (pos - 1 - i);
            }
        }
        bits
    }

    fn recurse(&mut self, pos: usize, used: u64, prefix: u64, prefix_len: usize) {
        if pos == self.n {
            let full = prefix << (self.total_bits - prefix_len);
            if !self.have_best || full < self.best {
                self.best = full;
                self.have_best = true;
            }
            return;
        }
        for idx in 0..self.n {
            let v = self.order[idx];
            if used & (1 << v) != 0 {
                continue;
            }
            let bits = self.pair_bits(v, pos);
            let new_len = prefix_len + pos;
            let new_prefix = (prefix << pos) | bits;
            if self.have_best {
                let best_prefix = self.best >> (self.total_bits - new_len);
                if new_prefix > best_prefix {
                    continue;
                }
            }
            self.placement[pos] = v;
            self.recurse(pos + 1, used | (1 << v), new_prefix, new_len);
        }
    }
}

/// Computes the canonical form of `g`. Rejects graphs above the size cap.
pub fn canonical_form(g: &UndirectedGraph) -> Result<CanonicalForm, GraphError> {
    let n = g.n();
    if n > ISO_CAP {
        return Err(GraphError::IsomorphismCap { n, cap: ISO_CAP });
    }
    if n <= 1 {
        return Ok(CanonicalForm { n, bits: 0 });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| g.degree(v));
    let mut search = Search {
        g,
        n,
        total_bits: n * (n - 1) / 2,
        placement: vec![0; n],
        best: 0,
        have_best: false,
        order,
    };
    search.recurse(0, 0, 0, 0);
    Ok(CanonicalForm { n, bits: search.best })
}

pub fn are_isomorphic(g: &UndirectedGraph, h: &UndirectedGraph) -> Result<bool, GraphError> {
    if g.n() != h.n() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}
