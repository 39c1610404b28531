mod common;

use cyclemonoid::cycles::{build_cycle_catalog_with, CatalogOptions};
use cyclemonoid::families::{bouquet, flower, ladder};
use cyclemonoid::graph::find_isomorphism;
use cyclemonoid::{
    build_cycle_catalog, cycle_count_for_set, phi, phi_of_disjoint_union, strongly_connected_components, Error,
    SimpleGraph, VertexSet,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{brute_force_catalog, digraphs_up_to_relabelling, random_digraph, random_strong_digraph};

#[test]
fn catalog_matches_rooted_walk_oracle_up_to_three_vertices() {
    for n in 1..=3 {
        for g in digraphs_up_to_relabelling(n, 2) {
            let cat = build_cycle_catalog(&g).unwrap();
            assert_eq!(cat.iter().collect::<std::collections::BTreeMap<_, _>>(), brute_force_catalog(&g), "{:?}", g.rows());
        }
    }
}

#[test]
fn catalog_matches_oracle_on_random_larger_digraphs() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(4..=7);
        let g = random_digraph(&mut rng, n, 0.4, 3);
        let plain = build_cycle_catalog(&g).unwrap();
        let johnson = build_cycle_catalog_with(&g, &CatalogOptions { johnson_blocking: true, ..Default::default() }).unwrap();
        assert_eq!(plain, johnson);
        let oracle = brute_force_catalog(&g);
        assert_eq!(plain.iter().collect::<std::collections::BTreeMap<_, _>>(), oracle);
        for (w, k) in plain.iter() {
            assert_eq!(cycle_count_for_set(&g, w), k);
        }
    }
}

#[test]
fn phi_of_named_families() {
    for n in 1..=6 {
        assert!(find_isomorphism(&phi(&bouquet(n)).unwrap().h, &SimpleGraph::complete(n as usize)).is_some());
    }
    for n in 3..=8 {
        assert!(find_isomorphism(&phi(&ladder(n)).unwrap().h, &SimpleGraph::complete(n)).is_some());
    }
    for n in 1..=3 {
        let h = phi(&flower(n)).unwrap().h;
        assert!(find_isomorphism(&h, &SimpleGraph::complete(n * n + 1)).is_some());
    }
}

#[test]
fn labels_form_cliques_and_match_intersections() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..100 {
        let g = random_digraph(&mut rng, 5, 0.4, 2);
        let p = phi(&g).unwrap();
        for u in 0..p.h.n() {
            for v in u + 1..p.h.n() {
                assert_eq!(p.h.has_edge(u, v), p.labels[u].intersects(p.labels[v]));
                if p.labels[u] == p.labels[v] {
                    assert!(p.h.has_edge(u, v));
                }
            }
        }
    }
}

#[test]
fn strongly_connected_digraphs_have_connected_phi() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let g = random_strong_digraph(&mut rng, n, 0.3, 2);
        assert!(phi(&g).unwrap().h.is_connected());
    }
}

#[test]
fn phi_splits_over_strong_components() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let g = random_digraph(&mut rng, n, 0.3, 2);
        let parts: Vec<_> = strongly_connected_components(&g).into_iter().map(|c| (phi(&g.induced(&c)).unwrap(), c)).collect();
        let union = phi_of_disjoint_union(&parts.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>()).unwrap();
        let whole = phi(&g).unwrap();
        assert!(find_isomorphism(&union.h, &whole.h).is_some());
        // Labels map back through the component vertex lists.
        let order: Vec<usize> = parts.iter().flat_map(|(_, c)| c.iter().copied()).collect();
        let mut back: Vec<VertexSet> =
            union.labels.iter().map(|w| w.iter().map(|i| order[i]).collect()).collect();
        let mut direct = whole.labels.clone();
        back.sort();
        direct.sort();
        assert_eq!(back, direct);
    }
}

#[test]
fn acyclic_and_budget() {
    let path = cyclemonoid::MultiDigraph::from_arcs(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
    assert_eq!(phi(&path).unwrap().h.n(), 0);
    let err = build_cycle_catalog_with(&bouquet(5), &CatalogOptions { budget: 3, ..Default::default() }).unwrap_err();
    assert!(matches!(err, Error::CycleBudget { budget: 3, .. }));
}
