//! Agreement with values frozen from networkx/numpy.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use turanlab::combinatorics::enumerate::CLASS_COUNTS;
use turanlab::combinatorics::{all_graphs, canonical_form, clique_number, enumerate_corpus};
use turanlab::graph::{emit_graph6, parse_graph6, read_graph6_lines};
use turanlab::spectral::{lambda, q};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn catalog_matches_the_graph_atlas() {
    let text = std::fs::read(data("atlas_n7.g6")).unwrap();
    let atlas = read_graph6_lines(text.as_slice()).unwrap();
    assert_eq!(atlas.len(), CLASS_COUNTS[1..=7].iter().sum::<usize>());
    for n in 1..=7 {
        let ours: BTreeSet<String> = all_graphs(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).as_str().to_owned())
            .collect();
        let theirs: BTreeSet<String> = atlas
            .iter()
            .filter(|g| g.n() == n)
            .map(|g| canonical_form(g).as_str().to_owned())
            .collect();
        assert_eq!(ours, theirs, "n = {n}");
    }
}

#[test]
fn corpus_loader_dedups_to_the_catalog() {
    for n in [5, 6] {
        let loaded = enumerate_corpus(&data("atlas_n7.g6"), n, |_| true).unwrap();
        assert_eq!(loaded.len(), all_graphs(n).unwrap().len());
    }
}

#[test]
fn spectra_and_cliques_match_numpy_and_networkx() {
    let text = std::fs::read_to_string(data("random_oracle.tsv")).unwrap();
    let mut rows = 0;
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let f: Vec<&str> = line.split('\t').collect();
        let g = parse_graph6(f[0].as_bytes()).unwrap();
        assert_eq!(emit_graph6(&g), f[0]);
        assert_eq!(g.m(), f[1].parse::<usize>().unwrap(), "{}", f[0]);
        let (l, qq): (f64, f64) = (f[2].parse().unwrap(), f[3].parse().unwrap());
        assert!((lambda(&g) - l).abs() < 1e-9, "{}: {} vs {l}", f[0], lambda(&g));
        assert!((q(&g) - qq).abs() < 1e-9, "{}: {} vs {qq}", f[0], q(&g));
        assert_eq!(clique_number(&g), f[4].parse::<usize>().unwrap(), "{}", f[0]);
        rows += 1;
    }
    assert_eq!(rows, 60);
}
