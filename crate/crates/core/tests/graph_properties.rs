mod common;

use common::*;
use proptest::prelude::*;
use semikern_core::clause::GraphClauseKind;
use semikern_core::graph::RawTheory;
use semikern_core::{Atom, AtomSet, ClausalTheory, Clause, Digraph, Direction, GnfTheory, Literal};

fn bfs(g: &Digraph, s: AtomSet, forward: bool) -> AtomSet {
    let mut seen = s;
    let mut queue: Vec<usize> = s.iter().collect();
    while let Some(i) = queue.pop() {
        for j in 0..g.len() {
            let edge = if forward {
                g.has_edge(i, j)
            } else {
                g.has_edge(j, i)
            };
            if edge && !seen.contains(j) {
                seen.insert(j);
                queue.push(j);
            }
        }
    }
    seen
}

fn connected(g: &Digraph, a: usize, b: usize) -> bool {
    let mut seen = AtomSet::singleton(a);
    let mut queue = vec![a];
    while let Some(i) = queue.pop() {
        for j in 0..g.len() {
            if (g.has_edge(i, j) || g.has_edge(j, i)) && !seen.contains(j) {
                seen.insert(j);
                queue.push(j);
            }
        }
    }
    seen.contains(b)
}

proptest! {
    #[test]
    fn theory_graph_round_trip(g in graphs(7, 0.3)) {
        prop_assert_eq!(g.to_theory().to_graph(), g.clone());
        prop_assert_eq!(g.to_theory().try_to_graph().unwrap(), g);
    }

    #[test]
    fn neighborhoods_match_edges((g, s) in graph_and_subset(7, 0.3)) {
        let nb = g.neighborhoods(s).unwrap();
        for j in 0..g.len() {
            prop_assert_eq!(nb.out.contains(j), s.iter().any(|i| g.has_edge(i, j)));
            prop_assert_eq!(nb.inn.contains(j), s.iter().any(|i| g.has_edge(j, i)));
        }
        prop_assert_eq!(nb.in_closed, s | nb.inn);
    }

    #[test]
    fn reachable_is_bfs((g, s) in graph_and_subset(7, 0.3)) {
        prop_assert_eq!(g.reachable(s, Direction::Forward).unwrap(), bfs(&g, s, true));
        prop_assert_eq!(g.reachable(s, Direction::Backward).unwrap(), bfs(&g, s, false));
    }

    #[test]
    fn induced_on_everything_is_identity(g in graphs(7, 0.3)) {
        prop_assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
    }

    #[test]
    fn induced_keeps_inner_edges((g, x) in graph_and_subset(7, 0.4)) {
        let h = g.induced_subgraph(x).unwrap();
        prop_assert_eq!(h.len(), x.len());
        let mut expected: Vec<(Atom, Atom)> = g
            .named_edges()
            .into_iter()
            .filter(|(a, b)| {
                let u = g.universe();
                x.contains(u.index_of(a).unwrap()) && x.contains(u.index_of(b).unwrap())
            })
            .collect();
        let mut got = h.named_edges();
        expected.sort();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn components_are_connectivity_classes(g in graphs(7, 0.2)) {
        let comps = g.underlying_components();
        let union = comps.iter().fold(AtomSet::EMPTY, |a, &c| a | c);
        prop_assert_eq!(union, g.vertices());
        prop_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), g.len());
        for a in 0..g.len() {
            for b in 0..g.len() {
                let same = comps.iter().any(|c| c.contains(a) && c.contains(b));
                prop_assert_eq!(same, connected(&g, a, b));
            }
        }
    }

    #[test]
    fn clausal_theory_of_graph((g, _) in graph_and_subset(6, 0.3)) {
        let t = ClausalTheory::from_graph(&g);
        let list = ClausalTheory::graph_clause_list(&g);
        prop_assert_eq!(list.len(), g.len() + g.edge_count());
        let ors = list.iter().filter(|(k, _)| matches!(k, GraphClauseKind::Ors)).count();
        prop_assert_eq!(ors, g.len());
        for (_, c) in &list {
            prop_assert!(t.contains(c));
        }
        prop_assert!(t.len() <= list.len());
    }

    #[test]
    fn remove_atoms_composes(
        t in theories(5, 8, 3),
        xa in 0u128..32,
        xb in 0u128..32,
    ) {
        let full = t.universe().full();
        let x = AtomSet::from_bits(xa) & full;
        let y = AtomSet::from_bits(xb) & full;
        let once = t.remove_atoms(x | y).unwrap();
        let first = t.remove_atoms(x).unwrap();
        let y_in_first = first.universe().translate(t.universe(), y - x).unwrap();
        prop_assert_eq!(first.remove_atoms(y_in_first).unwrap(), once.clone());
        for c in once.clauses() {
            prop_assert!(!c.is_empty());
            for l in c.literals() {
                let i = t.universe().index_of(&l.atom).unwrap();
                prop_assert!(!(x | y).contains(i));
            }
        }
    }

    #[test]
    fn clauses_are_literal_sets(lits in prop::collection::vec((0usize..4, any::<bool>()), 0..8)) {
        let names = atom_names(4);
        let mk = |order: &[(usize, bool)]| -> Clause {
            order
                .iter()
                .map(|&(i, negated)| Literal { atom: Atom::new(&names[i]).unwrap(), negated })
                .collect()
        };
        let mut reversed = lits.clone();
        reversed.reverse();
        let mut doubled = lits.clone();
        doubled.extend(lits.iter().copied());
        prop_assert_eq!(mk(&lits), mk(&reversed));
        prop_assert_eq!(mk(&lits), mk(&doubled));
        let c = mk(&lits);
        prop_assert_eq!(c.subclauses().len(), 1 << c.len());
    }
}

#[test]
fn loose_atoms_get_the_pair_gadget() {
    let raw: RawTheory = [(Atom::new("a").unwrap(), [Atom::new("b").unwrap()].into())]
        .into_iter()
        .collect();
    assert!(GnfTheory::new(raw.clone()).is_err());
    let g = GnfTheory::complete_loose_atoms(raw).to_graph();
    assert_eq!(g.len(), 3);
    let b = g.set(&["b"]).unwrap();
    let b1 = g.set(&["b'"]).unwrap();
    assert_eq!(g.successors(b), b1);
    assert_eq!(g.successors(b1), b);
}

#[test]
fn empty_graph_is_fine() {
    let g = Digraph::empty();
    assert!(g.underlying_components().is_empty());
    assert!(ClausalTheory::from_graph(&g).is_empty());
}
