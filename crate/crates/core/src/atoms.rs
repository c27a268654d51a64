//! Atoms, atom universes and the dense bit sets used by every engine.
//!
//! A [`Universe`] fixes a lexicographically ordered list of atoms and assigns
//! each a dense index. [`AtomSet`] is a bit set over those indices; it carries
//! no reference to its universe, so callers must only combine sets drawn from
//! the same universe.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest universe an [`AtomSet`] can index.
pub const MAX_UNIVERSE: usize = 128;

/// A propositional variable. Names are non-empty and use letters, digits,
/// `_` and `'`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Self> {
        if Self::is_valid_name(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(Error::InvalidAtom(name.to_string()))
        }
    }

    pub fn is_valid_name(name: &str) -> bool {
        !name.is_empty()
            && name
                .chars()
                .all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl std::str::FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Atom::new(s)
    }
}

impl AsRef<str> for Atom {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A set of atoms as a 128-bit mask over universe indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AtomSet(u128);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn from_bits(bits: u128) -> Self {
        AtomSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        if n >= 128 {
            AtomSet(u128::MAX)
        } else {
            AtomSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        AtomSet(1u128 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 128 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }

    pub fn difference(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: AtomSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: AtomSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> AtomSetIter {
        AtomSetIter(self.0)
    }

    /// Canonical order used for deterministic listings: by cardinality, then
    /// by the ascending member sequence.
    pub fn canonical_cmp(&self, other: &AtomSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for AtomSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = AtomSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for AtomSet {
    type Item = usize;
    type IntoIter = AtomSetIter;

    fn into_iter(self) -> AtomSetIter {
        self.iter()
    }
}

impl std::ops::BitOr for AtomSet {
    type Output = AtomSet;
    fn bitor(self, rhs: AtomSet) -> AtomSet {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for AtomSet {
    type Output = AtomSet;
    fn bitand(self, rhs: AtomSet) -> AtomSet {
        self.intersection(rhs)
    }
}

impl std::ops::Sub for AtomSet {
    type Output = AtomSet;
    fn sub(self, rhs: AtomSet) -> AtomSet {
        self.difference(rhs)
    }
}

impl std::ops::BitOrAssign for AtomSet {
    fn bitor_assign(&mut self, rhs: AtomSet) {
        self.0 |= rhs.0;
    }
}

/// Ascending iterator over the members of an [`AtomSet`].
#[derive(Clone)]
pub struct AtomSetIter(u128);

impl Iterator for AtomSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for AtomSetIter {}

struct UniverseInner {
    atoms: Vec<Atom>,
    index: HashMap<Atom, usize>,
}

/// A finite, lexicographically ordered set of atoms with dense indices.
///
/// Cloning is cheap. Two universes are equal when they hold the same atoms,
/// which (because the order is canonical) also means the same indices.
#[derive(Clone)]
pub struct Universe(Arc<UniverseInner>);

impl Universe {
    pub fn new<I: IntoIterator<Item = Atom>>(atoms: I) -> Result<Self> {
        let mut atoms: Vec<Atom> = atoms.into_iter().collect();
        atoms.sort();
        atoms.dedup();
        if atoms.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: atoms.len(),
                max: MAX_UNIVERSE,
            });
        }
        let index = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        Ok(Universe(Arc::new(UniverseInner { atoms, index })))
    }

    pub fn empty() -> Self {
        Universe::new(std::iter::empty()).expect("empty universe")
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let atoms = names
            .iter()
            .map(|n| Atom::new(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Universe::new(atoms)
    }

    pub fn len(&self) -> usize {
        self.0.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0.atoms
    }

    pub fn atom(&self, i: usize) -> &Atom {
        &self.0.atoms[i]
    }

    pub fn index_of(&self, atom: &Atom) -> Option<usize> {
        self.0.index.get(atom).copied()
    }

    pub fn index_of_name(&self, name: &str) -> Result<usize> {
        let atom = Atom::new(name)?;
        self.index_of(&atom)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    pub fn full(&self) -> AtomSet {
        AtomSet::full(self.len())
    }

    /// Builds a set from atom names; unknown names are an error.
    pub fn set<S: AsRef<str>>(&self, names: &[S]) -> Result<AtomSet> {
        names
            .iter()
            .map(|n| self.index_of_name(n.as_ref()))
            .collect()
    }

    pub fn set_of_atoms<'a, I: IntoIterator<Item = &'a Atom>>(&self, atoms: I) -> Result<AtomSet> {
        atoms
            .into_iter()
            .map(|a| {
                self.index_of(a)
                    .ok_or_else(|| Error::UnknownAtom(a.to_string()))
            })
            .collect()
    }

    /// Checks that every member of `s` indexes an atom of this universe.
    pub fn check(&self, s: AtomSet) -> Result<()> {
        match s.difference(self.full()).first() {
            None => Ok(()),
            Some(i) => Err(Error::UnknownAtom(format!("#{i}"))),
        }
    }

    pub fn atoms_of(&self, s: AtomSet) -> Vec<Atom> {
        s.iter().map(|i| self.0.atoms[i].clone()).collect()
    }

    /// Member names in lexicographic order.
    pub fn names(&self, s: AtomSet) -> Vec<String> {
        s.iter().map(|i| self.0.atoms[i].to_string()).collect()
    }

    /// Re-indexes `s` from `other` into this universe. Atoms of `s` that are
    /// missing here are an error.
    pub fn translate(&self, other: &Universe, s: AtomSet) -> Result<AtomSet> {
        if self == other {
            return Ok(s);
        }
        self.set_of_atoms(s.iter().map(|i| other.atom(i)))
    }

    pub fn ptr_eq(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.0.atoms == other.0.atoms
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.atoms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_names() {
        assert!(Atom::new("a'").is_ok());
        assert!(Atom::new("y_1").is_ok());
        assert!(Atom::new("").is_err());
        assert!(Atom::new("a b").is_err());
        assert!(Atom::new("~a").is_err());
    }

    #[test]
    fn universe_is_sorted_and_deduplicated() {
        let u = Universe::from_names(&["b", "a'", "a", "b"]).unwrap();
        let names: Vec<_> = u.atoms().iter().map(|a| a.name()).collect();
        assert_eq!(names, ["a", "a'", "b"]);
        assert_eq!(u.index_of_name("a'").unwrap(), 1);
        assert!(matches!(u.index_of_name("z"), Err(Error::UnknownAtom(_))));
    }

    #[test]
    fn universe_cap() {
        let names: Vec<String> = (0..129).map(|i| format!("x{i}")).collect();
        assert!(matches!(
            Universe::from_names(&names),
            Err(Error::UniverseTooLarge { size: 129, .. })
        ));
        let names: Vec<String> = (0..128).map(|i| format!("x{i}")).collect();
        let u = Universe::from_names(&names).unwrap();
        assert_eq!(u.full().len(), 128);
    }

    #[test]
    fn set_algebra() {
        let a: AtomSet = [0, 2, 5].into_iter().collect();
        let b: AtomSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).iter().collect::<Vec<_>>(), [0, 2, 3, 5]);
        assert_eq!((a & b).iter().collect::<Vec<_>>(), [2]);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), [0, 5]);
        assert!(AtomSet::singleton(2).is_proper_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(AtomSet::full(3).len(), 3);
        assert_eq!(AtomSet::EMPTY.first(), None);
    }

    #[test]
    fn canonical_order() {
        let mut sets: Vec<AtomSet> = vec![
            [0, 2].into_iter().collect(),
            [1].into_iter().collect(),
            AtomSet::EMPTY,
            [0].into_iter().collect(),
        ];
        sets.sort_by(AtomSet::canonical_cmp);
        let listed: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().collect()).collect();
        assert_eq!(listed, vec![vec![], vec![0], vec![1], vec![0, 2]]);
    }
}
