//! Inputs shared by the benchmarks in `benches/`.

use semikern_core::oracle::{random_digraph, RandomGraphSpec};
use semikern_core::{ClausalTheory, Digraph};

/// The running example: a two-cycle `a <-> a'`, a three-cycle `c -> d -> e -> c`
/// and `b` pointing into both.
pub fn our_gr() -> Digraph {
    Digraph::from_edges(&[
        ("a'", "a"),
        ("a", "a'"),
        ("b", "a"),
        ("b", "c"),
        ("c", "d"),
        ("d", "e"),
        ("e", "c"),
    ])
    .expect("valid names")
}

/// A fixed random digraph.
pub fn random(n: usize, edge_prob: f64, seed: u64) -> Digraph {
    random_digraph(&RandomGraphSpec { n, edge_prob, seed })
}

/// `v0 -> v1 -> ... -> v{n-1}`, whose closure stays small.
pub fn path(n: usize) -> Digraph {
    let names = semikern_core::oracle::vertex_names(n);
    let edges: Vec<(&str, &str)> = names
        .windows(2)
        .map(|w| (w[0].as_str(), w[1].as_str()))
        .collect();
    let vertices: Vec<&str> = names.iter().map(String::as_str).collect();
    Digraph::from_names(&vertices, &edges).expect("valid names")
}

pub fn cth(g: &Digraph) -> ClausalTheory {
    ClausalTheory::from_graph(g)
}
