mod common;

use std::collections::HashSet;

use graph_hypersurface::count::{count_zeros, projective_point_count, PointCounter};
use graph_hypersurface::embedding::RotationSystem;
use graph_hypersurface::graph::{edges_on_common_cycle, EdgeSubset, Family, Multigraph};
use graph_hypersurface::irred::{classify_graph, classify_poly, duality_irreducibility_check, Verdict};
use graph_hypersurface::kirchhoff::{psi, psi_of_subgraph};
use graph_hypersurface::multipoly::SubsetPoly;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_edges: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_edges, any::<u64>()).prop_map(|(n, seed)| {
        common::random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n)
    })
}

/// Connectivity of the graph after removing one vertex and its edges.
fn connected_without(g: &Multigraph, v: usize) -> bool {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&u| u != v).collect();
    if keep.is_empty() {
        return true;
    }
    let index = |u: usize| keep.iter().position(|&k| k == u).unwrap();
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| e.tail != v && e.head != v)
        .map(|e| (index(e.tail), index(e.head)))
        .collect();
    Multigraph::new(keep.len(), pairs).unwrap().is_connected()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spanning_trees_match_matrix_tree(g in graph_strategy(10)) {
        let trees = g.spanning_trees().unwrap();
        prop_assert_eq!(trees.len() as u128, g.spanning_tree_count().unwrap());
        let distinct: HashSet<EdgeSubset> = trees.iter().copied().collect();
        prop_assert_eq!(distinct.len(), trees.len());
        for t in trees {
            prop_assert_eq!(t.len(), g.vertex_count() - 1);
        }
    }

    #[test]
    fn blocks_partition_the_edges(g in graph_strategy(10)) {
        let d = g.blocks().unwrap();
        let mut seen = EdgeSubset::EMPTY;
        for &b in &d.blocks {
            prop_assert!(!b.is_empty());
            prop_assert!(seen.is_disjoint(b));
            seen = seen.union(b);
        }
        prop_assert_eq!(seen, g.all_edges());
    }

    #[test]
    fn cut_vertices_disconnect_loopless_graphs(g in graph_strategy(9)) {
        prop_assume!(g.loops().is_empty());
        let d = g.blocks().unwrap();
        for v in 0..g.vertex_count() {
            let is_cut = d.cut_vertices.contains(&v);
            prop_assert_eq!(is_cut, !connected_without(&g, v), "vertex {}", v);
        }
    }

    #[test]
    fn psi_is_reciprocal_of_complement_sum(g in graph_strategy(10)) {
        // Ψ(t) = Σ_T Π_{e ∉ T} t_e, so its reciprocal transform lists the trees.
        let p = psi(&g).unwrap();
        let trees: HashSet<EdgeSubset> = g.spanning_trees().unwrap().into_iter().collect();
        let recip = p.reciprocal_transform();
        let support: HashSet<EdgeSubset> = recip.terms().map(|(s, _)| s).collect();
        prop_assert_eq!(support, trees);
    }

    #[test]
    fn block_polys_use_disjoint_variables(g in graph_strategy(10)) {
        let d = g.blocks().unwrap();
        let mut product = SubsetPoly::one(g.edge_count());
        for &b in &d.blocks {
            let f = psi_of_subgraph(&g, b).unwrap();
            prop_assert!(f.support().is_subset(b));
            product = product.mul_disjoint(&f).unwrap();
        }
        prop_assert_eq!(product, psi(&g).unwrap());
    }

    #[test]
    fn verdicts_agree(g in graph_strategy(9)) {
        let p = psi(&g).unwrap();
        let a = classify_graph(&g).unwrap();
        let b = classify_poly(&p).unwrap();
        prop_assert_eq!(a.kind(), b.kind());
        if let Verdict::Reducible(w) = &b {
            prop_assert!(w.first.is_disjoint(w.second));
            prop_assert_eq!(w.factors.0.mul_disjoint(&w.factors.1).unwrap(), p);
        }
    }

    #[test]
    fn relabelled_wheels_are_self_dual(k in 3usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = common::random_wheel_embedding(&mut rng, k);
        let faces = r.faces().unwrap();
        let dual = r.dual().unwrap();
        prop_assert_eq!(dual.graph().vertex_count(), faces.len());
        prop_assert_eq!(dual.graph().vertex_count(), k + 1);
        let back = dual.dual().unwrap();
        prop_assert!(back.graph().is_isomorphic_preserving_ids(r.graph()));
        prop_assert_eq!(psi(r.graph()).unwrap(), psi(dual.graph()).unwrap().reciprocal_transform());
    }

    #[test]
    fn strata_add_up(g in graph_strategy(6), qi in 0usize..3) {
        let q = [2u64, 3, 5][qi];
        let p = psi(&g).unwrap();
        let c = count_zeros(&p, q).unwrap();
        prop_assert_eq!(c.total, c.off_sigma + c.on_sigma);
        prop_assert!(c.total <= projective_point_count(g.edge_count(), q));
    }
}

#[test]
fn whitney_blocks_on_all_small_graphs() {
    // Two edges lie in the same block exactly when some simple cycle contains
    // both (or they coincide).
    for g in common::all_connected(6) {
        let d = g.blocks().unwrap();
        let together = edges_on_common_cycle(&g);
        let block_of = |e: u32| d.blocks.iter().position(|b| b.contains(e)).unwrap();
        let n = g.edge_count() as u32;
        for a in 1..=n {
            for b in a + 1..=n {
                assert_eq!(
                    block_of(a) == block_of(b),
                    together.contains(&(a, b)),
                    "edges {a}, {b} in {g:?}"
                );
            }
        }
    }
}

#[test]
fn family_duals_through_random_labels() {
    let mut rng = common::rng(11);
    for kind in Family::ALL {
        for n in kind.min_size()..=8 {
            let base = RotationSystem::family(kind, n).unwrap();
            let perm = common::random_perm(&mut rng, n);
            let r = base.relabel_edges(&perm).unwrap();
            let dual = r.dual().unwrap();
            let expected = Multigraph::family(kind.dual(), n)
                .unwrap()
                .relabel_edges(&perm)
                .unwrap();
            assert_eq!(dual.graph().vertex_count(), r.faces().unwrap().len());
            assert!(
                dual.graph().is_isomorphic_preserving_ids(&expected),
                "{kind} n={n} perm {perm:?}"
            );
            assert!(dual.dual().unwrap().graph().is_isomorphic_preserving_ids(r.graph()));
        }
    }
}

#[test]
fn duality_preserves_irreducibility() {
    let mut embeddings: Vec<RotationSystem> = Family::ALL
        .iter()
        .flat_map(|&k| (k.min_size()..=6).map(move |n| RotationSystem::family(k, n).unwrap()))
        .collect();
    embeddings.extend((3..=6).map(|k| RotationSystem::wheel(k).unwrap()));
    for r in embeddings {
        let c = duality_irreducibility_check(&r).unwrap();
        assert!(c.holds, "{c:?}");
    }
}

#[test]
fn size_guard_refuses_without_enumerating() {
    let p = psi(&Multigraph::family(Family::Polygon, 30).unwrap()).unwrap();
    let err = PointCounter::default().count_zeros(&p, 7).unwrap_err();
    assert!(err.to_string().contains("2^24"), "{err}");
}
