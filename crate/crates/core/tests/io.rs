mod common;

use cyclemonoid::graph::{parse_simple_edge_list, to_edge_list, to_graph6, to_simple_edge_list};
use cyclemonoid::{parse_edge_list, parse_graph6, Error};
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{connected_corpus, random_digraph, random_simple_graph};

#[test]
fn graph6_round_trips_the_corpus() {
    for n in 1..=7 {
        let text = std::fs::read_to_string(common::data_dir().join(format!("graph{n}c.g6"))).unwrap();
        for (line, h) in text.lines().zip(connected_corpus(n)) {
            assert_eq!(to_graph6(&h).unwrap(), line);
        }
    }
}

#[test]
fn edge_lists_round_trip() {
    let mut rng = StdRng::seed_from_u64(31);
    for n in 0..8 {
        let g = random_digraph(&mut rng, n, 0.4, 3);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        let h = random_simple_graph(&mut rng, n, 0.5);
        assert_eq!(parse_simple_edge_list(&to_simple_edge_list(&h)).unwrap(), h);
        if n > 0 {
            assert_eq!(parse_graph6(&to_graph6(&h).unwrap()).unwrap(), h);
        }
    }
}

#[test]
fn edge_list_details() {
    let g = parse_edge_list("# a bouquet\nn 1\n0 0 2\n0 0  # one more\n").unwrap();
    assert_eq!(g.rows(), vec![vec![3]]);
    assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap().edge_count(), 3);
}

fn line_of<T: std::fmt::Debug>(r: Result<T, Error>) -> usize {
    match r {
        Err(Error::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn malformed_input_is_reported_with_line_numbers() {
    assert_eq!(line_of(parse_edge_list("n 2\n0 1\n0 5\n")), 3);
    assert_eq!(line_of(parse_edge_list("n 2\n0 1 -1\n")), 2);
    assert_eq!(line_of(parse_edge_list("n 2\n0 x\n")), 2);
    assert_eq!(line_of(parse_edge_list("2\n")), 1);
    assert_eq!(line_of(parse_edge_list("")), 1);
    assert_eq!(line_of(parse_simple_edge_list("n 2\n1 1\n")), 2);
    assert!(matches!(parse_graph6("C"), Err(Error::Graph6(_))));
    assert!(matches!(parse_graph6("Bw~"), Err(Error::Graph6(_))));
    assert!(matches!(parse_graph6("B w"), Err(Error::Graph6(_))));
}
