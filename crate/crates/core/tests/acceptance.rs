//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines.

use std::collections::{BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use nichegraph::canon::canonical_form;
use nichegraph::derived::{cce, competition, niche};
use nichegraph::digraph::Digraph;
use nichegraph::graph::UndirectedGraph;
use nichegraph::order::{
    analyze_interval_rep, analyze_semiorder_rep, realize_interval, realize_semiorder,
    IntervalRep, Rat, SemiorderRep,
};
use nichegraph::recognize::{build_from_descriptor, NicheClassDescriptor};
use nichegraph::verify::{
    enumerate_interval_orders, enumerate_interval_orders_by_grid, enumerate_semiorders,
    enumerate_semiorders_by_grid, verify_theorem, Theorem,
};
use nichegraph::witness::{niche_witness_interval, niche_witness_semiorder};

fn report(criterion: usize, label: &str, ok: bool) {
    println!(
        "criterion {criterion} ({label}): {}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} ({label}) failed");
}

#[test]
fn criterion_1_theorem_3_exhaustive() {
    let r = verify_theorem(Theorem::NicheSemiorder, 5, 1).unwrap();
    report(1, "niche graphs of semiorders, n <= 5", r.passed());
}

#[test]
fn criterion_2_theorem_4_exhaustive_and_separating_example() {
    let r = verify_theorem(Theorem::NicheInterval, 5, 1).unwrap();

    let p3i1 = UndirectedGraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
    let key = canonical_form(&p3i1).unwrap();
    let interval_niches: BTreeSet<_> = enumerate_interval_orders(4)
        .unwrap()
        .iter()
        .map(|d| canonical_form(&niche(d)).unwrap())
        .collect();
    let semiorder_niches: BTreeSet<_> = enumerate_semiorders(4)
        .unwrap()
        .iter()
        .map(|d| canonical_form(&niche(d)).unwrap())
        .collect();

    let ok = r.passed() && interval_niches.contains(&key) && !semiorder_niches.contains(&key);
    report(2, "niche graphs of interval orders, n <= 5, P3+I1 separates", ok);
}

#[test]
fn criterion_3_theorems_1_and_2_exhaustive() {
    let r1 = verify_theorem(Theorem::Competition, 5, 1).unwrap();
    let r2 = verify_theorem(Theorem::Cce, 5, 1).unwrap();
    report(3, "competition and CCE classes, n <= 5", r1.passed() && r2.passed());
}

fn theorem3_descriptors(max_vertices: usize) -> Vec<NicheClassDescriptor> {
    let mut out = Vec::new();
    for q in 1..=max_vertices {
        out.push(NicheClassDescriptor::edgeless(q).unwrap());
    }
    for m in 1..=max_vertices {
        for n in m..=max_vertices {
            if m + n <= max_vertices {
                out.push(NicheClassDescriptor::two_cliques(m, n).unwrap());
            }
            for q in 1..=max_vertices {
                if m + n + q <= max_vertices {
                    out.push(
                        NicheClassDescriptor::two_cliques_plus_isolated(m, n, q).unwrap(),
                    );
                    out.push(NicheClassDescriptor::gamma(m, n, q, 0).unwrap());
                }
            }
        }
    }
    out
}

fn theorem4_descriptors(max_vertices: usize) -> Vec<NicheClassDescriptor> {
    let mut out = theorem3_descriptors(max_vertices);
    for m in 1..=max_vertices {
        for n in m..=max_vertices {
            for q in 1..=max_vertices {
                for r in 1..=max_vertices {
                    if m + n + q + r <= max_vertices {
                        out.push(NicheClassDescriptor::gamma(m, n, q, r).unwrap());
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_4_witness_round_trips() {
    let mut count = 0;
    let mut ok = true;
    for d in theorem3_descriptors(8) {
        let rep = niche_witness_semiorder(&d).unwrap();
        let built = build_from_descriptor(&d).unwrap();
        if niche(&realize_semiorder(&rep)) != built {
            ok = false;
        }
        count += 1;
    }
    for d in theorem4_descriptors(8) {
        let rep = niche_witness_interval(&d).unwrap();
        let built = build_from_descriptor(&d).unwrap();
        if niche(&realize_interval(&rep)) != built {
            ok = false;
        }
        count += 1;
    }
    assert!(count > 200, "sweep too small: {count} descriptors");
    report(4, "witness round-trips, all descriptors up to 8 vertices", ok);
}

fn arc_sets(digraphs: &[Digraph]) -> BTreeSet<Vec<(usize, usize)>> {
    digraphs.iter().map(|d| d.arcs()).collect()
}

#[test]
fn criterion_5_dual_oracle_enumeration_equality() {
    let mut ok = true;
    for n in 1..=4 {
        let semi_pattern = arc_sets(&enumerate_semiorders(n).unwrap());
        let semi_grid = arc_sets(&enumerate_semiorders_by_grid(n).unwrap());
        let intv_pattern = arc_sets(&enumerate_interval_orders(n).unwrap());
        let intv_grid = arc_sets(&enumerate_interval_orders_by_grid(n).unwrap());
        if semi_pattern != semi_grid || intv_pattern != intv_grid {
            ok = false;
        }
    }
    report(5, "pattern vs definitional-grid enumeration, n <= 4", ok);
}

fn edge_set(g: &UndirectedGraph) -> BTreeSet<(usize, usize)> {
    g.edges().into_iter().collect()
}

fn identities_hold(d: &Digraph) -> bool {
    let c = edge_set(&competition(d));
    let cr = edge_set(&competition(&d.reverse()));
    let ni = edge_set(&niche(d));
    let cc = edge_set(&cce(d));
    let union: BTreeSet<_> = c.union(&cr).copied().collect();
    let inter: BTreeSet<_> = c.intersection(&cr).copied().collect();
    ni == union && cc == inter && cc.is_subset(&c) && c.is_subset(&ni)
}

#[test]
fn criterion_6_operator_identities() {
    let mut ok = true;

    // exhaustive over all loopless digraphs with n <= 4
    for n in 0..=4usize {
        let ordered_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        for mask in 0u64..(1 << ordered_pairs.len()) {
            let mut d = Digraph::new(n);
            for (k, &(x, y)) in ordered_pairs.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    d.add_arc(x, y);
                }
            }
            if !identities_hold(&d) {
                ok = false;
            }
        }
    }

    // 1000 random digraphs with n <= 7
    let mut rng = StdRng::seed_from_u64(0x6e69636865);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=7);
        let mut d = Digraph::new(n);
        for x in 0..n {
            for y in 0..n {
                if x != y && rng.gen_bool(0.3) {
                    d.add_arc(x, y);
                }
            }
        }
        if !identities_hold(&d) {
            ok = false;
        }
    }
    report(6, "niche/competition/cce edge-set identities", ok);
}

#[test]
fn criterion_7_representation_analysis_fidelity() {
    let mut ok = true;
    let mut niche_canon: HashMap<(usize, Vec<(usize, usize)>), _> = HashMap::new();
    let mut built_canon: HashMap<NicheClassDescriptor, _> = HashMap::new();

    // semiorder grid: all f on the half-integer lattice of [0, 2n], delta 1
    for n in 1..=4usize {
        let values: Vec<Rat> = (0..=(4 * n as i64)).map(|k| Rat::new(k, 2)).collect();
        let mut pick = vec![0usize; n];
        loop {
            let rep =
                SemiorderRep::new(pick.iter().map(|&i| values[i]).collect(), Rat::from(1));
            let d = realize_semiorder(&rep);
            let actual = *niche_canon
                .entry((d.n(), d.arcs()))
                .or_insert_with(|| canonical_form(&niche(&d)).unwrap());
            let predicted = analyze_semiorder_rep(&rep).predicted;
            let predicted_canon = *built_canon.entry(predicted).or_insert_with(|| {
                canonical_form(&build_from_descriptor(&predicted).unwrap()).unwrap()
            });
            if actual != predicted_canon {
                ok = false;
            }
            if !advance(&mut pick, values.len()) {
                break;
            }
        }
    }

    // interval grid: all assignments with endpoints in 1..=2n
    for n in 1..=4usize {
        let mut intervals = Vec::new();
        for lo in 1..=(2 * n as i64) {
            for hi in lo..=(2 * n as i64) {
                intervals.push((Rat::from(lo), Rat::from(hi)));
            }
        }
        let mut pick = vec![0usize; n];
        loop {
            let rep = IntervalRep::new(pick.iter().map(|&i| intervals[i]).collect());
            let d = realize_interval(&rep);
            let actual = *niche_canon
                .entry((d.n(), d.arcs()))
                .or_insert_with(|| canonical_form(&niche(&d)).unwrap());
            let predicted = analyze_interval_rep(&rep).predicted;
            let predicted_canon = *built_canon.entry(predicted).or_insert_with(|| {
                canonical_form(&build_from_descriptor(&predicted).unwrap()).unwrap()
            });
            if actual != predicted_canon {
                ok = false;
            }
            if !advance(&mut pick, intervals.len()) {
                break;
            }
        }
    }
    report(7, "analysis-predicted class matches the realized niche graph", ok);
}

fn advance(pick: &mut [usize], len: usize) -> bool {
    for slot in pick.iter_mut() {
        *slot += 1;
        if *slot < len {
            return true;
        }
        *slot = 0;
    }
    false
}
