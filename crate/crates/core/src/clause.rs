//! Literals, clauses and clausal theories.

use std::collections::BTreeSet;
use std::fmt;

use crate::atoms::{Atom, AtomSet, Universe};
use crate::error::{Error, Result};
use crate::graph::Digraph;

/// An atom or its negation. Ordered by atom, positive before negative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub negated: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal {
            atom,
            negated: true,
        }
    }

    pub fn complement(&self) -> Literal {
        Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// A finite set of literals. The empty clause is a valid value and prints
/// as `[]`; a clause may hold both `x` and `~x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Clause(BTreeSet<Literal>);

impl Clause {
    pub fn new<I: IntoIterator<Item = Literal>>(literals: I) -> Self {
        Clause(literals.into_iter().collect())
    }

    pub fn empty() -> Self {
        Clause(BTreeSet::new())
    }

    pub fn unit(literal: Literal) -> Self {
        Clause(BTreeSet::from([literal]))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> + '_ {
        self.0.iter()
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.0.contains(l)
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.0.iter().map(|l| l.atom.clone()).collect()
    }

    pub fn is_subset(&self, other: &Clause) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &Clause) -> Clause {
        Clause(self.0.union(&other.0).cloned().collect())
    }

    /// `C⁻`: one unit clause per literal, with flipped polarity.
    pub fn complement_units(&self) -> BTreeSet<Clause> {
        self.0
            .iter()
            .map(|l| Clause::unit(l.complement()))
            .collect()
    }

    /// All subclauses, including the empty one and `self`.
    pub fn subclauses(&self) -> Vec<Clause> {
        let lits: Vec<&Literal> = self.0.iter().collect();
        assert!(
            lits.len() < 32,
            "subclause enumeration is for short clauses"
        );
        (0u32..1 << lits.len())
            .map(|mask| {
                Clause(
                    lits.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, l)| (*l).clone())
                        .collect(),
                )
            })
            .collect()
    }

    pub(crate) fn pack(&self, universe: &Universe) -> Result<Packed> {
        let mut p = Packed::default();
        for l in &self.0 {
            let i = universe
                .index_of(&l.atom)
                .ok_or_else(|| Error::UnknownAtom(l.atom.to_string()))?;
            if l.negated {
                p.neg.insert(i);
            } else {
                p.pos.insert(i);
            }
        }
        Ok(p)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("[]");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromIterator<Literal> for Clause {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Self {
        Clause::new(iter)
    }
}

/// A clause as two bit masks over a universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub(crate) struct Packed {
    pub pos: AtomSet,
    pub neg: AtomSet,
}

impl Packed {
    pub fn atoms(self) -> AtomSet {
        self.pos | self.neg
    }

    pub fn len(self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn is_empty(self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    pub fn is_subset(self, other: Packed) -> bool {
        self.pos.is_subset(other.pos) && self.neg.is_subset(other.neg)
    }

    pub fn unit(atom: usize, negated: bool) -> Packed {
        let s = AtomSet::singleton(atom);
        if negated {
            Packed {
                pos: AtomSet::EMPTY,
                neg: s,
            }
        } else {
            Packed {
                pos: s,
                neg: AtomSet::EMPTY,
            }
        }
    }

    pub fn axiom(atom: usize) -> Packed {
        let s = AtomSet::singleton(atom);
        Packed { pos: s, neg: s }
    }

    /// `(self ∖ {a}) ∪ (other ∖ {¬a})`.
    pub fn resolve(self, other: Packed, atom: usize) -> Packed {
        let bit = AtomSet::singleton(atom);
        Packed {
            pos: (self.pos - bit) | other.pos,
            neg: self.neg | (other.neg - bit),
        }
    }

    /// Drops every literal over `x`.
    pub fn without(self, x: AtomSet) -> Packed {
        Packed {
            pos: self.pos - x,
            neg: self.neg - x,
        }
    }

    pub fn unpack(self, universe: &Universe) -> Clause {
        let pos = self
            .pos
            .iter()
            .map(|i| Literal::pos(universe.atom(i).clone()));
        let neg = self
            .neg
            .iter()
            .map(|i| Literal::neg(universe.atom(i).clone()));
        Clause::new(pos.chain(neg))
    }
}

/// The two clause families of a graph's clausal theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClauseKind {
    /// `x ∨ y1 ∨ … ∨ yn` for a vertex `x` with successors `yi`.
    Ors,
    /// `¬x ∨ ¬y` for an edge `x -> y`.
    Nand,
}

/// A finite set of clauses over an explicit atom universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClausalTheory {
    universe: Universe,
    clauses: BTreeSet<Clause>,
}

impl ClausalTheory {
    /// The universe is the occurring atoms plus `extra_atoms`.
    pub fn new<I, A>(clauses: I, extra_atoms: A) -> Result<Self>
    where
        I: IntoIterator<Item = Clause>,
        A: IntoIterator<Item = Atom>,
    {
        let clauses: BTreeSet<Clause> = clauses.into_iter().collect();
        let mut atoms: BTreeSet<Atom> = extra_atoms.into_iter().collect();
        for c in &clauses {
            atoms.extend(c.atoms());
        }
        Ok(ClausalTheory {
            universe: Universe::new(atoms)?,
            clauses,
        })
    }

    pub fn with_universe<I: IntoIterator<Item = Clause>>(
        clauses: I,
        universe: Universe,
    ) -> Result<Self> {
        let clauses: BTreeSet<Clause> = clauses.into_iter().collect();
        for c in &clauses {
            for l in c.literals() {
                if universe.index_of(&l.atom).is_none() {
                    return Err(Error::UnknownAtom(l.atom.to_string()));
                }
            }
        }
        Ok(ClausalTheory { universe, clauses })
    }

    /// The clausal theory of a graph, one entry per generated clause before
    /// set semantics merges duplicates.
    pub fn graph_clause_list(g: &Digraph) -> Vec<(GraphClauseKind, Clause)> {
        let u = g.universe();
        let mut list = Vec::new();
        for x in 0..g.len() {
            let ors = Packed {
                pos: AtomSet::singleton(x) | g.succ(x),
                neg: AtomSet::EMPTY,
            };
            list.push((GraphClauseKind::Ors, ors.unpack(u)));
            for y in g.succ(x).iter() {
                let nand = Packed {
                    pos: AtomSet::EMPTY,
                    neg: AtomSet::singleton(x) | AtomSet::singleton(y),
                };
                list.push((GraphClauseKind::Nand, nand.unpack(u)));
            }
        }
        list
    }

    /// `cth(G)`: for every vertex `x` the clause `{x} ∪ E(x)`, and for every
    /// edge `x -> y` the clause `{¬x, ¬y}`.
    pub fn from_graph(g: &Digraph) -> Self {
        ClausalTheory {
            universe: g.universe().clone(),
            clauses: Self::graph_clause_list(g)
                .into_iter()
                .map(|(_, c)| c)
                .collect(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn clauses(&self) -> &BTreeSet<Clause> {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn contains(&self, c: &Clause) -> bool {
        self.clauses.contains(c)
    }

    /// Adds clauses over the same universe.
    pub fn with_clauses<I: IntoIterator<Item = Clause>>(&self, extra: I) -> Result<Self> {
        Self::with_universe(
            self.clauses.iter().cloned().chain(extra),
            self.universe.clone(),
        )
    }

    /// `Γ ⊘ X`: removes every literal over `x`, drops clauses that become
    /// empty, and shrinks the universe to `universe ∖ x`.
    pub fn remove_atoms(&self, x: AtomSet) -> Result<Self> {
        self.universe.check(x)?;
        let kept = self.universe.full() - x;
        let universe = Universe::new(self.universe.atoms_of(kept))?;
        let clauses = self
            .packed()
            .into_iter()
            .map(|p| p.without(x))
            .filter(|p| !p.is_empty())
            .map(|p| p.unpack(&self.universe))
            .collect();
        Ok(ClausalTheory { universe, clauses })
    }

    pub(crate) fn packed(&self) -> Vec<Packed> {
        self.clauses
            .iter()
            .map(|c| {
                c.pack(&self.universe)
                    .expect("clauses stay inside the universe")
            })
            .collect()
    }

    /// Checks that every atom of `c` is in the universe.
    pub fn check_clause(&self, c: &Clause) -> Result<()> {
        c.pack(&self.universe).map(|_| ())
    }
}

impl fmt::Display for ClausalTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::test_util::*;
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn set_semantics() {
        assert_eq!(cl("~b ~b a"), cl("a ~b"));
        assert_eq!(cl("a ~b").to_string(), "a ~b");
        assert_eq!(cl("~a a").to_string(), "a ~a");
        assert_eq!(Clause::empty().to_string(), "[]");
        assert_eq!(cl("a' a").to_string(), "a a'");
    }

    #[test]
    fn clausal_theory_of_our_gr() {
        let t = ClausalTheory::from_graph(&our_gr());
        let expected = clauses(&[
            "a a'", "~a ~a'", "b a c", "~b ~a", "~b ~c", "c d", "~c ~d", "d e", "~d ~e", "e c",
            "~e ~c",
        ]);
        assert_eq!(t.clauses(), &expected);
    }

    #[test]
    fn clausal_theory_of_sink_and_f2() {
        let g = Digraph::from_names(&["s"], &[]).unwrap();
        assert_eq!(ClausalTheory::from_graph(&g).clauses(), &clauses(&["s"]));

        let t = ClausalTheory::from_graph(&f2());
        assert_eq!(
            t.clauses(),
            &clauses(&["f y", "~f", "~f ~y", "y s", "~y ~s", "s"])
        );
    }

    #[test]
    fn clause_list_counts_before_dedup() {
        for g in [our_gr(), f1(), f2()] {
            let list = ClausalTheory::graph_clause_list(&g);
            let ors = list
                .iter()
                .filter(|(k, _)| *k == GraphClauseKind::Ors)
                .count();
            let nands = list.len() - ors;
            assert_eq!(ors, g.len());
            assert_eq!(nands, g.edge_count());
        }
        // the 2-cycle a <-> a' produces the nand clause twice
        let list = ClausalTheory::graph_clause_list(&our_gr());
        assert_eq!(list.len(), 13);
        assert_eq!(ClausalTheory::from_graph(&our_gr()).len(), 11);
    }

    #[test]
    fn complement_units_flip_polarity() {
        assert_eq!(cl("a ~b").complement_units(), clauses(&["~a", "b"]));
        assert!(Clause::empty().complement_units().is_empty());
        assert_eq!(cl("x").complement_units(), clauses(&["~x"]));
    }

    #[test]
    fn remove_atoms_on_delta() {
        let t = ClausalTheory::from_graph(&our_gr());
        let x = t.universe().set(&["c", "d", "e"]).unwrap();
        let r = t.remove_atoms(x).unwrap();
        assert_eq!(
            r.clauses(),
            &clauses(&["a a'", "~a ~a'", "b a", "~b ~a", "~b"])
        );
        assert_eq!(r.universe().len(), 3);

        assert_eq!(t.remove_atoms(AtomSet::EMPTY).unwrap(), t);

        let t = theory(&["c d"]);
        let r = t.remove_atoms(t.universe().full()).unwrap();
        assert!(r.is_empty());
        assert!(r.universe().is_empty());
    }

    #[test]
    fn universe_must_cover_clauses() {
        let u = Universe::from_names(&["a"]).unwrap();
        assert!(ClausalTheory::with_universe(clauses(&["a b"]), u).is_err());
        let t = ClausalTheory::new(clauses(&["a"]), [Atom::new("b").unwrap()]).unwrap();
        assert_eq!(t.universe().len(), 2);
    }

    #[test]
    fn packed_resolution() {
        let u = Universe::from_names(&["a", "b", "c"]).unwrap();
        let p = cl("a b").pack(&u).unwrap();
        let q = cl("~a c").pack(&u).unwrap();
        assert_eq!(p.resolve(q, 0).unpack(&u), cl("b c"));
        // resolution keeps other complementary pairs
        let p = cl("a b").pack(&u).unwrap();
        let q = cl("~a ~b").pack(&u).unwrap();
        assert_eq!(p.resolve(q, 0).unpack(&u), cl("b ~b"));
    }
}
