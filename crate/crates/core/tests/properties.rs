//! Property suite over randomized graphs, digraphs, and representations.

use proptest::prelude::*;

use nichegraph::canon::{are_isomorphic, canonical_form};
use nichegraph::derived::{cce, competition, niche};
use nichegraph::digraph::Digraph;
use nichegraph::graph::UndirectedGraph;
use nichegraph::order::{
    is_interval_order, is_semiorder, realize_interval, realize_semiorder,
    semiorder_to_interval, IntervalRep, Rat, SemiorderRep,
};
use nichegraph::recognize::{build_from_descriptor, classify_niche};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        (Just(n), 0u64..(1u64 << bits.max(1)))
            .prop_map(move |(n, mask)| {
                let mut g = UndirectedGraph::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if mask & (1 << k) != 0 {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
    })
}

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1);
        (Just(n), 0u64..(1u64 << bits.max(1))).prop_map(move |(n, mask)| {
            let mut d = Digraph::new(n);
            let mut k = 0;
            for x in 0..n {
                for y in 0..n {
                    if x != y {
                        if mask & (1 << k) != 0 {
                            d.add_arc(x, y);
                        }
                        k += 1;
                    }
                }
            }
            d
        })
    })
}

fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (UndirectedGraph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation_strategy(n))
    })
}

fn digraph_and_perm(max_n: usize) -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    digraph_strategy(max_n).prop_flat_map(|d| {
        let n = d.n();
        (Just(d), permutation_strategy(n))
    })
}

fn rational_strategy() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rat::new(n, d))
}

fn semiorder_rep_strategy(max_n: usize) -> impl Strategy<Value = SemiorderRep> {
    (
        prop::collection::vec(rational_strategy(), 1..=max_n),
        (1i64..=8, 1i64..=4),
    )
        .prop_map(|(f, (dn, dd))| SemiorderRep::new(f, Rat::new(dn, dd)))
}

fn interval_rep_strategy(max_n: usize) -> impl Strategy<Value = IntervalRep> {
    prop::collection::vec((rational_strategy(), rational_strategy()), 1..=max_n).prop_map(
        |pairs| {
            IntervalRep::new(
                pairs
                    .into_iter()
                    .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
                    .collect(),
            )
        },
    )
}

proptest! {
    #[test]
    fn canonical_form_is_permutation_invariant((g, perm) in graph_and_perm(7)) {
        prop_assert_eq!(
            canonical_form(&g.permuted(&perm)).unwrap(),
            canonical_form(&g).unwrap()
        );
    }

    #[test]
    fn complement_involution_and_edge_split(g in graph_strategy(8)) {
        prop_assert_eq!(&g.complement().complement(), &g);
        let n = g.n();
        prop_assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            n * n.saturating_sub(1) / 2
        );
    }

    #[test]
    fn derived_operator_identities(d in digraph_strategy(7)) {
        let c = competition(&d);
        let cr = competition(&d.reverse());
        let ni = niche(&d);
        let cc = cce(&d);
        prop_assert_eq!(ni.n(), d.n());
        for x in 0..d.n() {
            for y in (x + 1)..d.n() {
                let e_c = c.has_edge(x, y);
                let e_cr = cr.has_edge(x, y);
                prop_assert_eq!(ni.has_edge(x, y), e_c || e_cr);
                prop_assert_eq!(cc.has_edge(x, y), e_c && e_cr);
            }
        }
    }

    #[test]
    fn derived_operators_are_equivariant((d, perm) in digraph_and_perm(6)) {
        prop_assert_eq!(niche(&d.permuted(&perm)), niche(&d).permuted(&perm));
        prop_assert_eq!(competition(&d.permuted(&perm)), competition(&d).permuted(&perm));
        prop_assert_eq!(cce(&d.permuted(&perm)), cce(&d).permuted(&perm));
    }

    #[test]
    fn semiorder_embeds_into_interval_orders(rep in semiorder_rep_strategy(8)) {
        let d = realize_semiorder(&rep);
        prop_assert_eq!(&realize_interval(&semiorder_to_interval(&rep)), &d);
        prop_assert!(is_semiorder(&d));
    }

    #[test]
    fn realize_semiorder_shift_and_scale_invariant(
        rep in semiorder_rep_strategy(6),
        shift in rational_strategy(),
        scale in (1i64..=5, 1i64..=3).prop_map(|(n, d)| Rat::new(n, d)),
    ) {
        let base = realize_semiorder(&rep);
        let shifted = SemiorderRep::new(
            rep.f.iter().map(|&v| v + shift).collect(),
            rep.delta,
        );
        prop_assert_eq!(&realize_semiorder(&shifted), &base);
        let scaled = SemiorderRep::new(
            rep.f.iter().map(|&v| v * scale).collect(),
            rep.delta * scale,
        );
        prop_assert_eq!(&realize_semiorder(&scaled), &base);
    }

    #[test]
    fn interval_realizations_are_interval_orders(rep in interval_rep_strategy(8)) {
        prop_assert!(is_interval_order(&realize_interval(&rep)));
    }

    #[test]
    fn classification_is_permutation_invariant((g, perm) in graph_and_perm(7)) {
        prop_assert_eq!(classify_niche(&g.permuted(&perm)), classify_niche(&g));
    }

    #[test]
    fn niche_semiorder_class_is_contained_in_interval_class(g in graph_strategy(7)) {
        let v = classify_niche(&g);
        prop_assert!(!v.is_niche_semiorder || v.is_niche_interval);
    }

    #[test]
    fn reported_descriptors_rebuild_the_input(g in graph_strategy(7)) {
        for d in classify_niche(&g).niche_descriptors {
            let rebuilt = build_from_descriptor(&d).unwrap();
            prop_assert!(are_isomorphic(&g, &rebuilt).unwrap());
        }
    }
}
