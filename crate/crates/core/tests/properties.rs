//! Randomized invariants over the seeded instance stream. Proptest drives
//! the seeds so failures shrink to small reproducible cases.

use std::collections::BTreeSet;

use proptest::prelude::*;

use branchdual::embedding::{embedded_isomorphic, Sign};
use branchdual::gen::{self, GenOptions};
use branchdual::measures;
use branchdual::solver::{exact_bw, exact_mu_bw, MeasureKind};
use branchdual::{EdgeId, EmbeddedGraph};

fn any_graph(max_edges: usize, max_genus: u32) -> impl Strategy<Value = EmbeddedGraph> {
    (0u64..1 << 48, 0u64..64).prop_map(move |(seed, index)| {
        gen::random_graph(seed, index, &GenOptions::new(max_edges, max_genus))
            .expect("generator succeeds")
    })
}

fn connected_graph(max_edges: usize) -> impl Strategy<Value = EmbeddedGraph> {
    any_graph(max_edges, 4)
}

fn subset_of(g: &EmbeddedGraph, mask: u64) -> BTreeSet<EdgeId> {
    g.edge_ids()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn genus_is_even_when_orientable(g in connected_graph(10)) {
        let rotations: std::collections::BTreeMap<_, _> = g
            .vertex_ids()
            .map(|v| (v, g.rotation(v).unwrap().to_vec()))
            .collect();
        let edges: std::collections::BTreeMap<_, _> = g
            .edge_ids()
            .map(|e| {
                let mut rec = g.edge(e).unwrap().clone();
                rec.sign = Sign::Plus;
                (e, rec)
            })
            .collect();
        let all_plus = EmbeddedGraph::from_parts(rotations, edges).unwrap();
        prop_assert_eq!(all_plus.euler_genus() % 2, 0);
    }

    #[test]
    fn contraction_preserves_genus_and_edge_ids(g in connected_graph(10)) {
        let genus = g.euler_genus();
        for e in g.edge_ids() {
            if g.is_loop(e) {
                continue;
            }
            let c = g.contract(e).unwrap();
            prop_assert_eq!(c.euler_genus(), genus);
            let mut expect = g.edge_set();
            expect.remove(&e);
            prop_assert_eq!(c.edge_set(), expect);
        }
    }

    #[test]
    fn deletion_never_raises_genus(g in connected_graph(10)) {
        let genus = g.euler_genus();
        for e in g.edge_ids() {
            prop_assert!(g.delete(e).unwrap().euler_genus() <= genus);
        }
    }

    #[test]
    fn dual_is_involutive(g in connected_graph(10)) {
        let d1 = g.dual().unwrap();
        prop_assert_eq!(d1.graph.euler_genus(), g.euler_genus());
        let d2 = d1.graph.dual().unwrap();
        let composed: std::collections::BTreeMap<EdgeId, EdgeId> = d1
            .edge_bijection
            .iter()
            .map(|(a, b)| (*a, d2.edge_bijection[b]))
            .collect();
        prop_assert!(composed.iter().all(|(a, b)| a == b));
        prop_assert!(embedded_isomorphic(&g, &d2.graph, &composed).unwrap());
    }

    #[test]
    fn contraction_commutes_with_duality(g in connected_graph(9)) {
        // Contracting a non-loop edge of the primal is deleting its dual
        // edge in the dual.
        let dual = g.dual().unwrap().graph;
        for e in g.edge_ids() {
            if g.is_loop(e) {
                continue;
            }
            let lhs = g.contract(e).unwrap().dual().unwrap().graph;
            let rhs = dual.delete(e).unwrap();
            let id_map = lhs.edge_ids().map(|x| (x, x)).collect();
            prop_assert!(embedded_isomorphic(&lhs, &rhs, &id_map).unwrap());
        }
    }

    #[test]
    fn border_and_mu_are_symmetric(g in connected_graph(8), mask in any::<u64>()) {
        let f = subset_of(&g, mask);
        let complement: BTreeSet<EdgeId> = g.edge_ids().filter(|e| !f.contains(e)).collect();
        prop_assert_eq!(measures::border(&g, &f), measures::border(&g, &complement));
        prop_assert_eq!(measures::mu(&g, &f), measures::mu(&g, &complement));
    }

    #[test]
    fn rank_matches_exhaustive_search(g in connected_graph(8), mask in any::<u64>()) {
        let f = subset_of(&g, mask);
        let items: Vec<EdgeId> = f.iter().copied().collect();
        let mut best = 0u32;
        for sub in 0u32..1 << items.len() {
            let cand: BTreeSet<EdgeId> = items
                .iter()
                .enumerate()
                .filter(|(i, _)| sub >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if measures::circuit_rank(&g, &cand) == 0 {
                best = best.max(cand.len() as u32);
            }
        }
        prop_assert_eq!(measures::rank(&g, &f), best);
    }

    #[test]
    fn loopless_duals_have_no_bridges(seed in 0u64..1 << 48, index in 0u64..64) {
        let opts = GenOptions::new(10, 4).loopless();
        let g = gen::random_graph(seed, index, &opts).unwrap();
        prop_assert!(!g.dual().unwrap().graph.has_bridges());
    }

    #[test]
    fn mu_branchwidth_never_exceeds_branchwidth(g in connected_graph(9)) {
        let bw = exact_bw(&g, MeasureKind::Delta).unwrap().value;
        let mbw = exact_mu_bw(&g).unwrap().value;
        prop_assert!(mbw <= bw);
    }
}
