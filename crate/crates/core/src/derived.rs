//! The three derived-graph operators mapping a digraph to an undirected
//! graph: competition, competition-common-enemy, and niche.
//!
//! Each operator is total on loopless digraphs. Neighborhood intersection
//! is a bitmask AND over the digraph's adjacency rows.

use crate::digraph::Digraph;
use crate::graph::UndirectedGraph;

/// Edge `xy` iff `x` and `y` share an out-neighbor (common prey).
pub fn competition(d: &Digraph) -> UndirectedGraph {
    derive(d, |d, x, y| d.out_row(x) & d.out_row(y) != 0)
}

/// Edge `xy` iff `x` and `y` share both an out-neighbor and an in-neighbor.
pub fn cce(d: &Digraph) -> UndirectedGraph {
    derive(d, |d, x, y| {
        d.out_row(x) & d.out_row(y) != 0 && d.in_row(x) & d.in_row(y) != 0
    })
}

/// Edge `xy` iff `x` and `y` share an out-neighbor or an in-neighbor.
pub fn niche(d: &Digraph) -> UndirectedGraph {
    derive(d, |d, x, y| {
        d.out_row(x) & d.out_row(y) != 0 || d.in_row(x) & d.in_row(y) != 0
    })
}

fn derive(d: &Digraph, adjacent: impl Fn(&Digraph, usize, usize) -> bool) -> UndirectedGraph {
    let n = d.n();
    let mut g = UndirectedGraph::new(n);
    for x in 0..n {
        for y in (x + 1)..n {
            if adjacent(d, x, y) {
                g.add_edge(x, y);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path3;
    use crate::order::{realize_interval, realize_semiorder, IntervalRep, Rat, SemiorderRep};

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    #[test]
    fn competition_basics() {
        assert!(competition(&Digraph::new(3)).is_edgeless());
        let d = Digraph::from_arcs(3, &[(1, 0), (2, 0)]).unwrap();
        assert_eq!(competition(&d).edges(), vec![(1, 2)]);

        // f = {0, 3/2, 3}, delta = 1: both upper vertices prey on vertex 0
        let rep = SemiorderRep::new(vec![rat(0), Rat::new(3, 2), rat(3)], rat(1));
        assert_eq!(competition(&realize_semiorder(&rep)).edges(), vec![(1, 2)]);
    }

    #[test]
    fn cce_basics() {
        assert!(cce(&Digraph::new(3)).is_edgeless());
        let d = Digraph::from_arcs(3, &[(1, 0), (2, 0)]).unwrap();
        assert!(cce(&d).is_edgeless());

        // p -> {x, y}, {x, y} -> q: x and y share enemy p and prey q
        let d = Digraph::from_arcs(4, &[(0, 2), (0, 3), (2, 1), (3, 1)]).unwrap();
        assert_eq!(cce(&d).edges(), vec![(2, 3)]);
    }

    #[test]
    fn niche_basics() {
        assert!(niche(&Digraph::new(3)).is_edgeless());

        // f = {1, 3, 5}, delta = 1 -> niche is P3 with the middle vertex
        // (index 1) as center... the center is the vertex NOT adjacent to
        // exactly one other; here edges are {0,1} via common in-neighbor 2
        // and {1,2} via common out-neighbor 0, no edge {0,2}.
        let rep = SemiorderRep::new(vec![rat(1), rat(3), rat(5)], rat(1));
        let g = niche(&realize_semiorder(&rep));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g, path3());

        // the interval-order separating example: niche is P3 ∪ I1
        let rep = IntervalRep::new(vec![
            (rat(1), rat(2)),
            (rat(3), rat(4)),
            (rat(5), rat(6)),
            (rat(1), rat(6)),
        ]);
        let g = niche(&realize_interval(&rep));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.isolated_vertices(), vec![3]);
    }

    #[test]
    fn competition_of_reverse_sees_in_neighborhoods() {
        let d = Digraph::from_arcs(4, &[(0, 2), (1, 2), (2, 3)]).unwrap();
        let r = competition(&d.reverse());
        for x in 0..4 {
            for y in (x + 1)..4 {
                assert_eq!(r.has_edge(x, y), d.in_row(x) & d.in_row(y) != 0);
            }
        }
    }
}
