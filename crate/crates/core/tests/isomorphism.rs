mod common;

use cyclemonoid::graph::{are_isomorphic_with_cap, find_isomorphism};
use cyclemonoid::{are_isomorphic, canonical_form, parse_graph6, SimpleGraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashSet;

use common::{connected_corpus, isomorphic_by_permutations, random_simple_graph};

fn shuffled(rng: &mut StdRng, h: &SimpleGraph) -> SimpleGraph {
    let mut p: Vec<usize> = (0..h.n()).collect();
    for i in (1..p.len()).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    h.permute(&p)
}

#[test]
fn agrees_with_bijection_oracle_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.2..0.8);
        let a = random_simple_graph(&mut rng, n, p);
        let b = if rng.gen_bool(0.5) { shuffled(&mut rng, &a) } else { random_simple_graph(&mut rng, n, p) };
        let expected = isomorphic_by_permutations(&a, &b);
        assert_eq!(are_isomorphic(&a, &b).unwrap(), expected);
        assert_eq!(canonical_form(&a).unwrap() == canonical_form(&b).unwrap(), expected);
        if let Some(m) = find_isomorphism(&a, &b) {
            assert!(a.edges().all(|(u, v)| b.has_edge(m[u], m[v])));
        } else {
            assert!(!expected);
        }
    }
}

#[test]
fn corpus_classes_stay_distinct() {
    let mut rng = StdRng::seed_from_u64(4);
    for n in 1..=6 {
        let corpus = connected_corpus(n);
        let forms: HashSet<String> = corpus.iter().map(|h| canonical_form(h).unwrap()).collect();
        assert_eq!(forms.len(), corpus.len());
        for h in &corpus {
            assert_eq!(canonical_form(&shuffled(&mut rng, h)).unwrap(), canonical_form(h).unwrap());
        }
    }
    // Pairwise against the oracle on n = 5, where the bijection check is cheap.
    let five = connected_corpus(5);
    for (i, a) in five.iter().enumerate() {
        for b in &five[i..] {
            assert_eq!(isomorphic_by_permutations(a, b), std::ptr::eq(a, b));
        }
    }
}

#[test]
fn canonical_form_is_a_graph6_of_the_same_graph() {
    let h = parse_graph6("FD^[g").unwrap();
    let c = parse_graph6(&canonical_form(&h).unwrap()).unwrap();
    assert!(isomorphic_by_permutations(&h, &c));
}

#[test]
fn large_twin_heavy_graphs() {
    // K_40 minus a perfect matching, relabelled.
    let mut rng = StdRng::seed_from_u64(8);
    let mut h = SimpleGraph::complete(40);
    for i in 0..20 {
        h.remove_edge(2 * i, 2 * i + 1);
    }
    let g = shuffled(&mut rng, &h);
    assert!(find_isomorphism(&h, &g).is_some());
    assert!(are_isomorphic_with_cap(&h, &g, 40).unwrap());
    assert!(are_isomorphic(&h, &g).is_err());
}
