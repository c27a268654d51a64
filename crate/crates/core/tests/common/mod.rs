#![allow(dead_code)]

use proptest::prelude::*;
use semikern_core::oracle::{random_digraph, vertex_names, RandomGraphSpec, SplitMix64};
use semikern_core::{Atom, AtomSet, ClausalTheory, Clause, Digraph, Literal, Universe};

/// A graph from an adjacency matrix, vertices `v0, v1, ...`.
pub fn graph_from_matrix(adj: &[Vec<bool>]) -> Digraph {
    let names = vertex_names(adj.len());
    let mut edges = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e {
                edges.push((Atom::new(&names[i]).unwrap(), Atom::new(&names[j]).unwrap()));
            }
        }
    }
    let vertices = names.iter().map(|n| Atom::new(n).unwrap());
    Digraph::new(vertices, edges).unwrap()
}

/// Digraphs with up to `max_n` vertices; each ordered pair, loops included,
/// is an edge with probability `p`.
pub fn graphs(max_n: usize, p: f64) -> impl Strategy<Value = Digraph> {
    (0..=max_n)
        .prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::vec(prop::bool::weighted(p), n), n)
        })
        .prop_map(|adj| graph_from_matrix(&adj))
}

pub fn nonempty_graphs(max_n: usize, p: f64) -> impl Strategy<Value = Digraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::vec(prop::bool::weighted(p), n), n)
        })
        .prop_map(|adj| graph_from_matrix(&adj))
}

/// A graph together with an arbitrary vertex subset.
pub fn graph_and_subset(max_n: usize, p: f64) -> impl Strategy<Value = (Digraph, AtomSet)> {
    graphs(max_n, p).prop_flat_map(|g| {
        let n = g.len();
        (Just(g), 0u128..(1u128 << n)).prop_map(|(g, bits)| (g, AtomSet::from_bits(bits)))
    })
}

pub fn atom_names(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("p{i}")).collect()
}

fn clause_over(names: &[String], lits: &[(usize, bool)]) -> Clause {
    lits.iter()
        .map(|&(i, negated)| Literal {
            atom: Atom::new(&names[i]).unwrap(),
            negated,
        })
        .collect()
}

/// A clause over the first `k` atoms `p0, p1, ...` with at most `max_len`
/// literals (possibly empty).
pub fn clauses_over(k: usize, max_len: usize) -> impl Strategy<Value = Clause> {
    let names = atom_names(k);
    prop::collection::vec((0..k.max(1), any::<bool>()), 0..=max_len).prop_map(move |lits| {
        if names.is_empty() {
            Clause::empty()
        } else {
            clause_over(&names, &lits)
        }
    })
}

/// Clausal theories over `1..=max_atoms` atoms, every atom in the universe.
pub fn theories(
    max_atoms: usize,
    max_clauses: usize,
    max_len: usize,
) -> impl Strategy<Value = ClausalTheory> {
    (1..=max_atoms).prop_flat_map(move |k| {
        let names = atom_names(k);
        prop::collection::vec(
            prop::collection::vec((0..k, any::<bool>()), 1..=max_len),
            0..=max_clauses,
        )
        .prop_map(move |cs| {
            let clauses: Vec<Clause> = cs.iter().map(|lits| clause_over(&names, lits)).collect();
            let universe = names.iter().map(|n| Atom::new(n).unwrap());
            ClausalTheory::new(clauses, universe).unwrap()
        })
    })
}

/// A clause drawn uniformly from all `4^n` literal sets over `universe`.
pub fn random_clause(universe: &Universe, rng: &mut SplitMix64) -> Clause {
    let mut lits = Vec::new();
    for a in universe.atoms() {
        match rng.below(4) {
            1 => lits.push(Literal::pos(a.clone())),
            2 => lits.push(Literal::neg(a.clone())),
            3 => {
                lits.push(Literal::pos(a.clone()));
                lits.push(Literal::neg(a.clone()));
            }
            _ => {}
        }
    }
    Clause::new(lits)
}

/// A short clause: each atom joins with probability `2/n` and a random sign.
pub fn short_clause(universe: &Universe, rng: &mut SplitMix64) -> Clause {
    let n = universe.len().max(1);
    let mut lits = Vec::new();
    for a in universe.atoms() {
        if rng.below(n) < 2 {
            lits.push(if rng.below(2) == 0 {
                Literal::pos(a.clone())
            } else {
                Literal::neg(a.clone())
            });
        }
    }
    Clause::new(lits)
}

/// Random graphs from the generator used throughout the test suites.
pub fn seeded_graphs(ns: std::ops::RangeInclusive<usize>, per: u64, base: u64) -> Vec<Digraph> {
    let mut out = Vec::new();
    for n in ns {
        for (pi, p) in [0.15, 0.3, 0.5].into_iter().enumerate() {
            for k in 0..per {
                let seed = base ^ ((n as u64) << 32 | (pi as u64) << 16 | k);
                out.push(random_digraph(&RandomGraphSpec {
                    n,
                    edge_prob: p,
                    seed,
                }));
            }
        }
    }
    out
}
