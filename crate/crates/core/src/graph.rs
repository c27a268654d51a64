//! Digraphs and graph-normal-form theories.
//!
//! A GNF theory maps every atom `x` to the atoms it negates, reading
//! `x : y1 y2` as `x <=> ~y1 & ~y2`. Its graph has an edge `x -> y` for every
//! such `y`. The two presentations are interchangeable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::atoms::{Atom, AtomSet, Universe};
use crate::error::{Error, Result};

/// A finite directed graph over a [`Universe`]. Loops are allowed; parallel
/// edges are not representable.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    universe: Universe,
    out: Vec<AtomSet>,
    inn: Vec<AtomSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// One-step neighborhoods of a vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhoods {
    /// `E(S)`: successors of members.
    pub out: AtomSet,
    /// `←E(S)`: predecessors of members.
    pub inn: AtomSet,
    /// `←E[S] = S ∪ ←E(S)`.
    pub in_closed: AtomSet,
}

impl Digraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Atom>,
        E: IntoIterator<Item = (Atom, Atom)>,
    {
        let universe = Universe::new(vertices)?;
        let mut out = vec![AtomSet::EMPTY; universe.len()];
        for (x, y) in edges {
            let i = universe
                .index_of(&x)
                .ok_or_else(|| Error::UnknownAtom(x.to_string()))?;
            let j = universe
                .index_of(&y)
                .ok_or_else(|| Error::UnknownAtom(y.to_string()))?;
            out[i].insert(j);
        }
        Ok(Self::from_parts(universe, out))
    }

    /// Convenience constructor from names.
    pub fn from_names(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let vs = vertices
            .iter()
            .map(|v| Atom::new(v))
            .collect::<Result<Vec<_>>>()?;
        let es = edges
            .iter()
            .map(|(x, y)| Ok((Atom::new(x)?, Atom::new(y)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vs, es)
    }

    /// Builds a graph whose vertices are exactly the edge endpoints.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self> {
        let mut vs: Vec<&str> = edges.iter().flat_map(|&(x, y)| [x, y]).collect();
        vs.sort();
        vs.dedup();
        Self::from_names(&vs, edges)
    }

    /// `out[i]` is the successor set of vertex `i`.
    pub(crate) fn from_parts(universe: Universe, out: Vec<AtomSet>) -> Self {
        debug_assert_eq!(universe.len(), out.len());
        let mut inn = vec![AtomSet::EMPTY; out.len()];
        for (i, succ) in out.iter().enumerate() {
            for j in succ.iter() {
                inn[j].insert(i);
            }
        }
        Digraph { universe, out, inn }
    }

    pub fn empty() -> Self {
        Self::from_parts(Universe::empty(), Vec::new())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn vertices(&self) -> AtomSet {
        self.universe.full()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// Edges as index pairs, ordered by source then target.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |j| (i, j)))
    }

    pub fn named_edges(&self) -> Vec<(Atom, Atom)> {
        self.edges()
            .map(|(i, j)| (self.universe.atom(i).clone(), self.universe.atom(j).clone()))
            .collect()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.out[i].contains(j)
    }

    pub fn succ(&self, i: usize) -> AtomSet {
        self.out[i]
    }

    pub fn pred(&self, i: usize) -> AtomSet {
        self.inn[i]
    }

    pub fn set<S: AsRef<str>>(&self, names: &[S]) -> Result<AtomSet> {
        self.universe.set(names)
    }

    pub fn names(&self, s: AtomSet) -> Vec<String> {
        self.universe.names(s)
    }

    /// `E(S)`, without membership checks.
    pub fn successors(&self, s: AtomSet) -> AtomSet {
        s.iter().fold(AtomSet::EMPTY, |acc, i| acc | self.out[i])
    }

    /// `←E(S)`, without membership checks.
    pub fn predecessors(&self, s: AtomSet) -> AtomSet {
        s.iter().fold(AtomSet::EMPTY, |acc, i| acc | self.inn[i])
    }

    /// `←E[S] = S ∪ ←E(S)`.
    pub fn in_closure(&self, s: AtomSet) -> AtomSet {
        s | self.predecessors(s)
    }

    pub fn is_independent(&self, s: AtomSet) -> bool {
        self.successors(s).is_disjoint(s)
    }

    pub fn neighborhoods(&self, s: AtomSet) -> Result<Neighborhoods> {
        self.universe.check(s)?;
        let out = self.successors(s);
        let inn = self.predecessors(s);
        Ok(Neighborhoods {
            out,
            inn,
            in_closed: s | inn,
        })
    }

    /// Reflexive-transitive closure `E*(S)` or `←E*(S)`.
    pub fn reachable(&self, s: AtomSet, direction: Direction) -> Result<AtomSet> {
        self.universe.check(s)?;
        Ok(self.reach(s, direction))
    }

    pub(crate) fn reach(&self, s: AtomSet, direction: Direction) -> AtomSet {
        let adj = match direction {
            Direction::Forward => &self.out,
            Direction::Backward => &self.inn,
        };
        let mut seen = s;
        let mut frontier = s;
        while !frontier.is_empty() {
            let next = frontier.iter().fold(AtomSet::EMPTY, |acc, i| acc | adj[i]);
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// `←E(←E[S]) ⊆ ←E[S]`.
    pub fn is_inverse_closed(&self, s: AtomSet) -> Result<bool> {
        self.universe.check(s)?;
        Ok(self.inverse_closed(s))
    }

    pub(crate) fn inverse_closed(&self, s: AtomSet) -> bool {
        let closed = self.in_closure(s);
        self.predecessors(closed).is_subset(closed)
    }

    /// The subgraph induced by `x`; its universe holds exactly the atoms of `x`.
    pub fn induced_subgraph(&self, x: AtomSet) -> Result<Digraph> {
        self.universe.check(x)?;
        let universe = Universe::new(self.universe.atoms_of(x))?;
        let out = x
            .iter()
            .map(|i| {
                universe
                    .translate(&self.universe, self.out[i] & x)
                    .expect("induced edges stay inside x")
            })
            .collect();
        Ok(Self::from_parts(universe, out))
    }

    /// Connected components of the underlying undirected graph, ordered by
    /// their smallest atom.
    pub fn underlying_components(&self) -> Vec<AtomSet> {
        let mut left = self.vertices();
        let mut parts = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = AtomSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(AtomSet::EMPTY, |acc, i| acc | self.out[i] | self.inn[i]);
                frontier = next - comp;
                comp |= frontier;
            }
            left = left - comp;
            parts.push(comp);
        }
        parts
    }

    pub fn to_theory(&self) -> GnfTheory {
        let formulas = (0..self.len())
            .map(|i| {
                (
                    self.universe.atom(i).clone(),
                    self.universe.atoms_of(self.out[i]).into_iter().collect(),
                )
            })
            .collect();
        GnfTheory { formulas }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .named_edges()
            .iter()
            .map(|(x, y)| format!("{x}->{y}"))
            .collect();
        f.debug_struct("Digraph")
            .field("vertices", &self.universe)
            .field("edges", &edges)
            .finish()
    }
}

/// Formulas `x <=> ⋀ ~y` before the loose-atom check.
pub type RawTheory = BTreeMap<Atom, BTreeSet<Atom>>;

/// A theory in graph normal form: every atom that occurs has exactly one
/// formula, and an empty right side stands for `x <=> ⊤`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GnfTheory {
    formulas: RawTheory,
}

impl GnfTheory {
    /// Validates that no right-hand atom is loose.
    pub fn new(formulas: RawTheory) -> Result<Self> {
        if let Some(loose) = loose_atoms(&formulas).into_iter().next() {
            return Err(Error::LooseAtom(loose.to_string()));
        }
        Ok(GnfTheory { formulas })
    }

    pub fn from_names(formulas: &[(&str, &[&str])]) -> Result<Self> {
        let mut raw = RawTheory::new();
        for (x, ys) in formulas {
            let ys = ys.iter().map(|y| Atom::new(y)).collect::<Result<_>>()?;
            raw.insert(Atom::new(x)?, ys);
        }
        Self::new(raw)
    }

    /// Adds, for each loose atom `b`, a fresh `b'` with `b <=> ~b'` and
    /// `b' <=> ~b`. Fresh names get apostrophes appended until unused.
    pub fn complete_loose_atoms(mut formulas: RawTheory) -> Self {
        let loose = loose_atoms(&formulas);
        let mut used: BTreeSet<Atom> = formulas.keys().cloned().collect();
        used.extend(formulas.values().flatten().cloned());
        for b in loose {
            let mut name = format!("{b}'");
            let fresh = loop {
                let candidate = Atom::new(&name).expect("apostrophes keep names valid");
                if !used.contains(&candidate) {
                    break candidate;
                }
                name.push('\'');
            };
            used.insert(fresh.clone());
            formulas.insert(b.clone(), BTreeSet::from([fresh.clone()]));
            formulas.insert(fresh, BTreeSet::from([b]));
        }
        GnfTheory { formulas }
    }

    pub fn formulas(&self) -> &RawTheory {
        &self.formulas
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn to_graph(&self) -> Digraph {
        let universe = Universe::new(self.formulas.keys().cloned())
            .expect("universe size is checked by callers that build large theories");
        let out = self
            .formulas
            .values()
            .map(|ys| universe.set_of_atoms(ys).expect("well-formed theory"))
            .collect();
        Digraph::from_parts(universe, out)
    }

    /// Like [`GnfTheory::to_graph`] but reports oversized universes.
    pub fn try_to_graph(&self) -> Result<Digraph> {
        let universe = Universe::new(self.formulas.keys().cloned())?;
        let out = self
            .formulas
            .values()
            .map(|ys| universe.set_of_atoms(ys))
            .collect::<Result<_>>()?;
        Ok(Digraph::from_parts(universe, out))
    }
}

fn loose_atoms(formulas: &RawTheory) -> BTreeSet<Atom> {
    formulas
        .values()
        .flatten()
        .filter(|y| !formulas.contains_key(*y))
        .cloned()
        .collect()
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn names(g: &Digraph, s: AtomSet) -> Vec<String> {
        g.names(s)
    }

    fn delta() -> GnfTheory {
        GnfTheory::from_names(&[
            ("a'", &["a"]),
            ("a", &["a'"]),
            ("b", &["a", "c"]),
            ("c", &["d"]),
            ("d", &["e"]),
            ("e", &["c"]),
        ])
        .unwrap()
    }

    #[test]
    fn theory_to_graph_matches_drawing() {
        let g = delta().to_graph();
        assert_eq!(g, our_gr());
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn sink_and_loop_theories() {
        let g = GnfTheory::from_names(&[("s", &[])]).unwrap().to_graph();
        assert_eq!(g.len(), 1);
        assert_eq!(g.edge_count(), 0);

        let g = GnfTheory::from_names(&[("f", &["f", "s"]), ("s", &[])])
            .unwrap()
            .to_graph();
        assert_eq!(g, f1());
    }

    #[test]
    fn loose_atom_is_rejected() {
        let err = GnfTheory::from_names(&[("a", &["b"])]).unwrap_err();
        assert_eq!(err, Error::LooseAtom("b".into()));
    }

    #[test]
    fn graph_to_theory_round_trip() {
        assert_eq!(our_gr().to_theory(), delta());
        assert!(Digraph::empty().to_theory().is_empty());
        let g = Digraph::from_edges(&[("x", "x")]).unwrap();
        let t = g.to_theory();
        assert_eq!(t, GnfTheory::from_names(&[("x", &["x"])]).unwrap());
        assert_eq!(t.to_graph(), g);
    }

    #[test]
    fn neighborhoods_of_examples() {
        let g = our_gr();
        let n = g.neighborhoods(g.set(&["a"]).unwrap()).unwrap();
        assert_eq!(names(&g, n.out), ["a'"]);
        assert_eq!(names(&g, n.inn), ["a'", "b"]);
        assert_eq!(names(&g, n.in_closed), ["a", "a'", "b"]);

        let n = g.neighborhoods(AtomSet::EMPTY).unwrap();
        assert!(n.out.is_empty() && n.inn.is_empty() && n.in_closed.is_empty());

        let n = g.neighborhoods(g.set(&["c", "d", "e"]).unwrap()).unwrap();
        assert_eq!(names(&g, n.out), ["c", "d", "e"]);
        assert_eq!(names(&g, n.inn), ["b", "c", "d", "e"]);
        assert_eq!(names(&g, n.in_closed), ["b", "c", "d", "e"]);

        assert!(g.neighborhoods(AtomSet::singleton(40)).is_err());
        assert!(g.set(&["zz"]).is_err());
    }

    #[test]
    fn reachability() {
        let g = our_gr();
        let r = g
            .reachable(g.set(&["b"]).unwrap(), Direction::Forward)
            .unwrap();
        assert_eq!(names(&g, r), ["a", "a'", "b", "c", "d", "e"]);
        let r = g
            .reachable(g.set(&["a"]).unwrap(), Direction::Forward)
            .unwrap();
        assert_eq!(names(&g, r), ["a", "a'"]);
        assert!(g
            .reachable(AtomSet::EMPTY, Direction::Backward)
            .unwrap()
            .is_empty());
        let r = g
            .reachable(g.set(&["c"]).unwrap(), Direction::Backward)
            .unwrap();
        assert_eq!(names(&g, r), ["b", "c", "d", "e"]);
    }

    #[test]
    fn inverse_closedness() {
        let g = our_gr();
        assert!(g.is_inverse_closed(g.set(&["a"]).unwrap()).unwrap());
        assert!(!g.is_inverse_closed(g.set(&["a'"]).unwrap()).unwrap());
        assert!(g.is_inverse_closed(AtomSet::EMPTY).unwrap());
    }

    #[test]
    fn induced_subgraphs() {
        let g = our_gr();
        let h = g
            .induced_subgraph(g.set(&["a'", "a", "b"]).unwrap())
            .unwrap();
        assert_eq!(
            h,
            Digraph::from_edges(&[("a'", "a"), ("a", "a'"), ("b", "a")]).unwrap()
        );
        assert!(g.induced_subgraph(AtomSet::EMPTY).unwrap().is_empty());
        let h = g
            .induced_subgraph(g.set(&["c", "d", "e"]).unwrap())
            .unwrap();
        assert_eq!(
            h,
            Digraph::from_edges(&[("c", "d"), ("d", "e"), ("e", "c")]).unwrap()
        );
        assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
    }

    #[test]
    fn components() {
        let g = Digraph::from_edges(&[("a", "c"), ("d", "b")]).unwrap();
        let comps: Vec<_> = g
            .underlying_components()
            .into_iter()
            .map(|c| g.names(c))
            .collect();
        assert_eq!(comps, vec![vec!["a", "c"], vec!["b", "d"]]);
        assert_eq!(our_gr().underlying_components().len(), 1);
        assert!(Digraph::empty().underlying_components().is_empty());
    }

    #[test]
    fn loose_atom_completion() {
        let mut raw = RawTheory::new();
        raw.insert(
            Atom::new("a").unwrap(),
            BTreeSet::from([Atom::new("b").unwrap()]),
        );
        let t = GnfTheory::complete_loose_atoms(raw);
        let expected =
            GnfTheory::from_names(&[("a", &["b"]), ("b", &["b'"]), ("b'", &["b"])]).unwrap();
        assert_eq!(t, expected);

        assert_eq!(
            GnfTheory::complete_loose_atoms(delta().formulas().clone()),
            delta()
        );

        let mut raw = RawTheory::new();
        raw.insert(
            Atom::new("a").unwrap(),
            BTreeSet::from([Atom::new("b").unwrap(), Atom::new("c").unwrap()]),
        );
        let t = GnfTheory::complete_loose_atoms(raw);
        let expected = GnfTheory::from_names(&[
            ("a", &["b", "c"]),
            ("b", &["b'"]),
            ("b'", &["b"]),
            ("c", &["c'"]),
            ("c'", &["c"]),
        ])
        .unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn fresh_names_skip_used_ones() {
        let mut raw = RawTheory::new();
        raw.insert(
            Atom::new("a").unwrap(),
            BTreeSet::from([Atom::new("b").unwrap()]),
        );
        raw.insert(Atom::new("b'").unwrap(), BTreeSet::new());
        let t = GnfTheory::complete_loose_atoms(raw);
        let keys: Vec<_> = t.formulas().keys().map(|a| a.to_string()).collect();
        assert_eq!(keys, ["a", "b", "b'", "b''"]);
    }
}
