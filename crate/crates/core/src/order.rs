//! Semiorder and interval-order representations, their realization as
//! digraphs, recognition of the two digraph classes, and the
//! representation-side case analysis that predicts the niche graph.
//!
//! All comparisons in this module are exact rational arithmetic. The case
//! boundaries (for instance `r2 = r1 + 2δ`) are knife-edge and must not be
//! perturbed by rounding, so floating point is not used anywhere here.

use num_rational::Rational64;
use num_traits::Zero;

use crate::digraph::Digraph;
use crate::recognize::NicheClassDescriptor;

pub type Rat = Rational64;

/// Vertex values `f` plus a positive threshold `delta`;
/// realizes the digraph with arc `(x, y)` iff `f(x) > f(y) + delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiorderRep {
    pub f: Vec<Rat>,
    pub delta: Rat,
}

impl SemiorderRep {
    pub fn new(f: Vec<Rat>, delta: Rat) -> Self {
        assert!(delta > Rat::zero(), "delta must be positive");
        SemiorderRep { f, delta }
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }
}

/// Closed nonempty intervals `J(v) = [lo, hi]`;
/// realizes the digraph with arc `(x, y)` iff `lo(x) > hi(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    pub intervals: Vec<(Rat, Rat)>,
}

impl IntervalRep {
    pub fn new(intervals: Vec<(Rat, Rat)>) -> Self {
        for &(lo, hi) in &intervals {
            assert!(lo <= hi, "interval must be nonempty: [{lo}, {hi}]");
        }
        IntervalRep { intervals }
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }
}

pub fn realize_semiorder(rep: &SemiorderRep) -> Digraph {
    let n = rep.n();
    let mut d = Digraph::new(n);
    for x in 0..n {
        for y in 0..n {
            if x != y && rep.f[x] > rep.f[y] + rep.delta {
                d.add_arc(x, y);
            }
        }
    }
    d
}

pub fn realize_interval(rep: &IntervalRep) -> Digraph {
    let n = rep.n();
    let mut d = Digraph::new(n);
    for x in 0..n {
        for y in 0..n {
            if x != y && rep.intervals[x].0 > rep.intervals[y].1 {
                d.add_arc(x, y);
            }
        }
    }
    d
}

/// Unit-interval view of a semiorder: `J(v) = [f(v), f(v) + delta]`.
/// Realizing the result gives the same digraph as `realize_semiorder`.
pub fn semiorder_to_interval(rep: &SemiorderRep) -> IntervalRep {
    IntervalRep::new(
        rep.f
            .iter()
            .map(|&v| (v, v + rep.delta))
            .collect(),
    )
}

/// True iff `D` is a strict order (irreflexive, transitive, antisymmetric)
/// with no 2+2 suborder: two disjoint 2-chains with no arcs between them.
///
/// This is the classical forbidden-suborder characterization of interval
/// orders; the verification harness re-derives it at small n from the
/// definitional grid enumeration, so it is a cross-checked shortcut here.
pub fn is_interval_order(d: &Digraph) -> bool {
    d.is_antisymmetric() && d.is_transitive() && !has_two_plus_two(d)
}

/// True iff `D` is an interval order with no 3+1 suborder: a 3-chain plus
/// a vertex incomparable to all of it.
pub fn is_semiorder(d: &Digraph) -> bool {
    is_interval_order(d) && !has_three_plus_one(d)
}

fn has_two_plus_two(d: &Digraph) -> bool {
    let arcs = d.arcs();
    for &(a, b) in &arcs {
        for &(c, e) in &arcs {
            if a != c && a != e && b != c && b != e && !d.has_arc(a, e) && !d.has_arc(c, b) {
                return true;
            }
        }
    }
    false
}

fn has_three_plus_one(d: &Digraph) -> bool {
    let n = d.n();
    for a in 0..n {
        for b in 0..n {
            if !d.has_arc(a, b) {
                continue;
            }
            for c in 0..n {
                if !d.has_arc(b, c) {
                    continue;
                }
                for x in 0..n {
                    if x == a || x == b || x == c {
                        continue;
                    }
                    let incomparable = |u: usize| !d.has_arc(x, u) && !d.has_arc(u, x);
                    if incomparable(a) && incomparable(b) && incomparable(c) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Which branch of the representation-side case analysis applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseId {
    /// The realized digraph has no arcs; the niche graph is edgeless.
    NoArcs,
    /// Two cliques with no span-crossing vertices (plus possible isolates).
    TwoCliqueCase,
    /// The full join shape `Γ(m, n, q, r)`.
    GammaCase,
}

/// Output of the representation-side analysis: the extremes `r1`, `r2`,
/// the vertex partition, and the niche-graph class it forces.
#[derive(Clone, Debug)]
pub struct RepresentationAnalysis {
    pub r1: Rat,
    pub r2: Rat,
    pub case_id: CaseId,
    /// Ordered partition (V1, V2, V3) or (V1, V2, V3, V4) of the vertices.
    pub parts: Vec<Vec<usize>>,
    pub predicted: NicheClassDescriptor,
}

impl RepresentationAnalysis {
    fn check_partition(&self, n: usize) {
        let mut seen = vec![false; n];
        for part in &self.parts {
            for &v in part {
                assert!(!seen[v], "partition parts overlap at {v}");
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "partition does not cover all vertices");
    }
}

/// Case analysis for a semiorder representation: computes
/// `r1 = min f`, `r2 = max f`, splits on the position of `r2` relative to
/// `r1 + delta` and `r1 + 2 delta`, and emits the vertex partition and
/// predicted niche-graph class for each branch.
pub fn analyze_semiorder_rep(rep: &SemiorderRep) -> RepresentationAnalysis {
    assert!(rep.n() >= 1, "analysis requires at least one vertex");
    let n = rep.n();
    let d = rep.delta;
    let r1 = *rep.f.iter().min().unwrap();
    let r2 = *rep.f.iter().max().unwrap();

    let analysis = if r1 + d >= r2 {
        RepresentationAnalysis {
            r1,
            r2,
            case_id: CaseId::NoArcs,
            parts: vec![(0..n).collect(), vec![], vec![]],
            predicted: NicheClassDescriptor::edgeless(n).unwrap(),
        }
    } else if r2 <= r1 + d + d {
        // V1 = [r1, r2-d), V2 = [r2-d, r1+d], V3 = (r1+d, r2]
        let v1: Vec<usize> = (0..n).filter(|&v| rep.f[v] < r2 - d).collect();
        let v2: Vec<usize> =
            (0..n).filter(|&v| r2 - d <= rep.f[v] && rep.f[v] <= r1 + d).collect();
        let v3: Vec<usize> = (0..n).filter(|&v| rep.f[v] > r1 + d).collect();
        let predicted = if v2.is_empty() {
            NicheClassDescriptor::two_cliques(v1.len(), v3.len()).unwrap()
        } else {
            NicheClassDescriptor::two_cliques_plus_isolated(v1.len(), v3.len(), v2.len())
                .unwrap()
        };
        RepresentationAnalysis {
            r1,
            r2,
            case_id: CaseId::TwoCliqueCase,
            parts: vec![v1, v2, v3],
            predicted,
        }
    } else {
        // V1 = [r1, r1+d], V2 = (r1+d, r2-d), V3 = [r2-d, r2]
        let v1: Vec<usize> = (0..n).filter(|&v| rep.f[v] <= r1 + d).collect();
        let v2: Vec<usize> =
            (0..n).filter(|&v| r1 + d < rep.f[v] && rep.f[v] < r2 - d).collect();
        let v3: Vec<usize> = (0..n).filter(|&v| rep.f[v] >= r2 - d).collect();
        let predicted = if v2.is_empty() {
            NicheClassDescriptor::two_cliques(v1.len(), v3.len()).unwrap()
        } else {
            NicheClassDescriptor::gamma(v1.len(), v3.len(), v2.len(), 0).unwrap()
        };
        RepresentationAnalysis {
            r1,
            r2,
            case_id: CaseId::GammaCase,
            parts: vec![v1, v2, v3],
            predicted,
        }
    };
    analysis.check_partition(n);
    analysis
}

/// Case analysis for an interval representation: computes
/// `r1 = min over v of hi(v)` and `r2 = max over v of lo(v)`. When
/// `r1 >= r2` the realized digraph has no arcs; otherwise the vertices
/// split into four parts by how their intervals sit relative to `r1` and
/// `r2`, forcing the niche graph `Γ(|V1|, |V3|, |V2|, |V4|)`.
pub fn analyze_interval_rep(rep: &IntervalRep) -> RepresentationAnalysis {
    assert!(rep.n() >= 1, "analysis requires at least one vertex");
    let n = rep.n();
    let r1 = rep.intervals.iter().map(|&(_, hi)| hi).min().unwrap();
    let r2 = rep.intervals.iter().map(|&(lo, _)| lo).max().unwrap();

    let analysis = if r1 >= r2 {
        RepresentationAnalysis {
            r1,
            r2,
            case_id: CaseId::NoArcs,
            parts: vec![(0..n).collect(), vec![], vec![], vec![]],
            predicted: NicheClassDescriptor::edgeless(n).unwrap(),
        }
    } else {
        let lo = |v: usize| rep.intervals[v].0;
        let hi = |v: usize| rep.intervals[v].1;
        let v1: Vec<usize> =
            (0..n).filter(|&v| lo(v) <= r1 && r1 <= hi(v) && hi(v) < r2).collect();
        let v2: Vec<usize> = (0..n).filter(|&v| r1 < lo(v) && hi(v) < r2).collect();
        let v3: Vec<usize> =
            (0..n).filter(|&v| r1 < lo(v) && lo(v) <= r2 && r2 <= hi(v)).collect();
        let v4: Vec<usize> = (0..n).filter(|&v| lo(v) <= r1 && r2 <= hi(v)).collect();
        let (m, nn, q, r) = (v1.len(), v3.len(), v2.len(), v4.len());
        let predicted = if q == 0 && r == 0 {
            NicheClassDescriptor::two_cliques(m, nn).unwrap()
        } else if q == 0 {
            NicheClassDescriptor::two_cliques_plus_isolated(m, nn, r).unwrap()
        } else {
            NicheClassDescriptor::gamma(m, nn, q, r).unwrap()
        };
        RepresentationAnalysis {
            r1,
            r2,
            case_id: CaseId::GammaCase,
            parts: vec![v1, v2, v3, v4],
            predicted,
        }
    };
    analysis.check_partition(n);
    analysis
}
