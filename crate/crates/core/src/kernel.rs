//! Kernels, semikernels and the paraconsistent models of a digraph.
//!
//! A set `S` is a *semikernel* when `E(S) ⊆ ←E(S) ⊆ G ∖ S`, and a *kernel*
//! when additionally `←E(S) = G ∖ S`. A model is a semikernel that is
//! `←E`-closed and whose boolean domain `←E[S]` is maximal among such sets;
//! it is presented as the 3-partition `⟨S, ←E(S), G ∖ ←E[S]⟩`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomSet, Universe};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Direction};
use crate::Limits;

/// A 3-partition `⟨true, false, paradox⟩` of a universe.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition3 {
    pub universe: Universe,
    pub true_set: AtomSet,
    pub false_set: AtomSet,
    pub paradox_set: AtomSet,
}

impl Partition3 {
    /// Checks disjointness and that the three parts cover the universe.
    pub fn new(
        universe: Universe,
        true_set: AtomSet,
        false_set: AtomSet,
        paradox_set: AtomSet,
    ) -> Result<Self> {
        for s in [true_set, false_set, paradox_set] {
            universe.check(s)?;
        }
        let disjoint = true_set.is_disjoint(false_set)
            && true_set.is_disjoint(paradox_set)
            && false_set.is_disjoint(paradox_set);
        if !disjoint || (true_set | false_set | paradox_set) != universe.full() {
            return Err(Error::Precondition(
                "partition parts must be disjoint and cover the universe".into(),
            ));
        }
        Ok(Partition3 {
            universe,
            true_set,
            false_set,
            paradox_set,
        })
    }

    /// `α⊤ ∪ α⊥`, the atoms with a boolean value.
    pub fn boolean_domain(&self) -> AtomSet {
        self.true_set | self.false_set
    }

    pub fn names(&self) -> PartitionNames {
        PartitionNames {
            true_atoms: self.universe.names(self.true_set),
            false_atoms: self.universe.names(self.false_set),
            paradox_atoms: self.universe.names(self.paradox_set),
        }
    }
}

impl fmt::Debug for Partition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.names();
        write!(
            f,
            "⟨{{{}}}, {{{}}}, {{{}}}⟩",
            n.true_atoms.join(","),
            n.false_atoms.join(","),
            n.paradox_atoms.join(",")
        )
    }
}

/// Name-level view of a [`Partition3`], serialized as
/// `{"true": [...], "false": [...], "paradox": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionNames {
    #[serde(rename = "true")]
    pub true_atoms: Vec<String>,
    #[serde(rename = "false")]
    pub false_atoms: Vec<String>,
    #[serde(rename = "paradox")]
    pub paradox_atoms: Vec<String>,
}

/// Every set-level property of a vertex subset at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubsetReport {
    pub independent: bool,
    pub kernel: bool,
    pub semikernel: bool,
    pub inverse_closed: bool,
    pub psk: bool,
}

pub fn classify_subset(g: &Digraph, s: AtomSet) -> Result<SubsetReport> {
    g.universe().check(s)?;
    let semikernel = is_semikernel_unchecked(g, s);
    let inverse_closed = g.inverse_closed(s);
    Ok(SubsetReport {
        independent: g.is_independent(s),
        kernel: is_kernel_unchecked(g, s),
        semikernel,
        inverse_closed,
        psk: semikernel && inverse_closed,
    })
}

pub fn is_semikernel(g: &Digraph, s: AtomSet) -> Result<bool> {
    g.universe().check(s)?;
    Ok(is_semikernel_unchecked(g, s))
}

pub fn is_kernel(g: &Digraph, s: AtomSet) -> Result<bool> {
    g.universe().check(s)?;
    Ok(is_kernel_unchecked(g, s))
}

fn is_semikernel_unchecked(g: &Digraph, s: AtomSet) -> bool {
    let inn = g.predecessors(s);
    g.successors(s).is_subset(inn) && inn.is_disjoint(s)
}

fn is_kernel_unchecked(g: &Digraph, s: AtomSet) -> bool {
    g.is_independent(s) && g.predecessors(s) == g.vertices() - s
}

fn is_psk_unchecked(g: &Digraph, s: AtomSet) -> bool {
    is_semikernel_unchecked(g, s) && g.inverse_closed(s)
}

/// `α_S = ⟨S, ←E(S), G ∖ ←E[S]⟩` for an independent `S`.
pub fn partition_of(g: &Digraph, s: AtomSet) -> Result<Partition3> {
    g.universe().check(s)?;
    if !g.is_independent(s) {
        return Err(Error::Precondition(format!(
            "{{{}}} is not independent",
            g.names(s).join(",")
        )));
    }
    Ok(partition_unchecked(g, s))
}

fn partition_unchecked(g: &Digraph, s: AtomSet) -> Partition3 {
    let false_set = g.predecessors(s);
    Partition3 {
        universe: g.universe().clone(),
        true_set: s,
        false_set,
        paradox_set: g.vertices() - s - false_set,
    }
}

/// True when `p` is the partition of an `←E`-closed semikernel.
pub fn is_psk_partition(g: &Digraph, p: &Partition3) -> bool {
    p.universe == *g.universe()
        && is_psk_unchecked(g, p.true_set)
        && partition_unchecked(g, p.true_set) == *p
}

fn check_cap(g: &Digraph, limits: &Limits) -> Result<()> {
    if g.len() > limits.max_atoms {
        return Err(Error::ResourceCap {
            what: "vertices for subset enumeration",
            limit: limits.max_atoms,
        });
    }
    Ok(())
}

/// Visits every independent set of `g`, growing sets in index order.
fn independent_sets(g: &Digraph, mut visit: impl FnMut(AtomSet)) {
    fn go(g: &Digraph, i: usize, s: AtomSet, blocked: AtomSet, visit: &mut impl FnMut(AtomSet)) {
        if i == g.len() {
            visit(s);
            return;
        }
        go(g, i + 1, s, blocked, visit);
        if !blocked.contains(i) && !g.has_edge(i, i) {
            let blocked = blocked | g.succ(i) | g.pred(i);
            go(g, i + 1, s | AtomSet::singleton(i), blocked, visit);
        }
    }
    go(g, 0, AtomSet::EMPTY, AtomSet::EMPTY, &mut visit);
}

fn collect_sorted(g: &Digraph, keep: impl Fn(AtomSet) -> bool) -> Vec<AtomSet> {
    let mut found = Vec::new();
    independent_sets(g, |s| {
        if keep(s) {
            found.push(s)
        }
    });
    found.sort_by(AtomSet::canonical_cmp);
    found
}

pub fn enumerate_kernels(g: &Digraph) -> Result<Vec<AtomSet>> {
    enumerate_kernels_with(g, &Limits::default())
}

/// All kernels, by cardinality then member order.
pub fn enumerate_kernels_with(g: &Digraph, limits: &Limits) -> Result<Vec<AtomSet>> {
    check_cap(g, limits)?;
    let all = g.vertices();
    Ok(collect_sorted(g, |s| g.predecessors(s) == all - s))
}

pub fn enumerate_semikernels(g: &Digraph) -> Result<Vec<AtomSet>> {
    enumerate_semikernels_with(g, &Limits::default())
}

/// All semikernels including `∅`, by cardinality then member order.
pub fn enumerate_semikernels_with(g: &Digraph, limits: &Limits) -> Result<Vec<AtomSet>> {
    check_cap(g, limits)?;
    Ok(collect_sorted(g, |s| is_semikernel_unchecked(g, s)))
}

pub fn models(g: &Digraph) -> Result<Vec<Partition3>> {
    models_with(g, &Limits::default())
}

/// The models of `g`: `←E`-closed semikernels whose `←E[S]` is maximal.
/// Never empty, since `∅` always qualifies as a candidate.
pub fn models_with(g: &Digraph, limits: &Limits) -> Result<Vec<Partition3>> {
    check_cap(g, limits)?;
    let candidates: Vec<(AtomSet, AtomSet)> = collect_sorted(g, |s| is_psk_unchecked(g, s))
        .into_iter()
        .map(|s| (s, g.in_closure(s)))
        .collect();
    Ok(candidates
        .iter()
        .filter(|(_, dom)| {
            !candidates
                .iter()
                .any(|(_, other)| dom.is_proper_subset(*other))
        })
        .map(|&(s, _)| partition_unchecked(g, s))
        .collect())
}

/// `S ∩ E*(T)` for `T ⊆ S ∈ SK(G)`; the result is again a semikernel.
pub fn sk_intersect_reach(g: &Digraph, s: AtomSet, t: AtomSet) -> Result<AtomSet> {
    g.universe().check(s | t)?;
    if !t.is_subset(s) {
        return Err(Error::Precondition("T must be a subset of S".into()));
    }
    if !is_semikernel_unchecked(g, s) {
        return Err(Error::Precondition("S is not a semikernel".into()));
    }
    let r = s & g.reach(t, Direction::Forward);
    debug_assert!(is_semikernel_unchecked(g, r));
    Ok(r)
}

/// `S ∪ T` for semikernels with `←E(S) ∩ T = ∅`; the result is again a
/// semikernel.
pub fn sk_union(g: &Digraph, s: AtomSet, t: AtomSet) -> Result<AtomSet> {
    g.universe().check(s | t)?;
    if !is_semikernel_unchecked(g, s) || !is_semikernel_unchecked(g, t) {
        return Err(Error::Precondition("both sets must be semikernels".into()));
    }
    if !g.predecessors(s).is_disjoint(t) {
        return Err(Error::Precondition("←E(S) meets T".into()));
    }
    let r = s | t;
    debug_assert!(is_semikernel_unchecked(g, r));
    Ok(r)
}

/// Extends a pSK partition `alpha` by the part of `beta` lying in `alpha`'s
/// paradox set: the result is the partition of `α⊤ ∪ (β⊤ ∩ α°)`, a pSK
/// partition whose boolean domain strictly contains `alpha`'s.
pub fn lemma1_combine(g: &Digraph, alpha: &Partition3, beta: &Partition3) -> Result<Partition3> {
    if !is_psk_partition(g, alpha) {
        return Err(Error::NotPsk("first"));
    }
    if beta.universe != *g.universe() {
        return Err(Error::NotPsk("second"));
    }
    if beta.boolean_domain().is_disjoint(alpha.paradox_set) {
        return Err(Error::NoExtension);
    }
    if !is_psk_partition(g, beta) {
        return Err(Error::NotPsk("second"));
    }
    let q = beta.true_set & alpha.paradox_set;
    let gamma = partition_unchecked(g, alpha.true_set | q);
    debug_assert!(is_psk_partition(g, &gamma));
    debug_assert!(alpha
        .boolean_domain()
        .is_proper_subset(gamma.boolean_domain()));
    Ok(gamma)
}
