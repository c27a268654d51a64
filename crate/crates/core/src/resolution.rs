//! Direct resolution: saturation, paradoxical atoms and the consistent
//! subdiscourse.
//!
//! The calculus has the axiom `x ∨ ¬x` for every atom of the universe and the
//! binary resolution rule. There is no subsumption, no tautology deletion and
//! no weakening, so membership in the saturated set is exactly derivability.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::atoms::{Atom, AtomSet, Universe};
use crate::clause::{ClausalTheory, Clause, Packed};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::kernel::{enumerate_kernels_with, Partition3};
use crate::saturation::{self, Index, Trace};
use crate::Limits;

/// How a clause first entered a closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Input,
    Axiom,
    Resolvent,
}

/// The set of clauses derivable from a theory, with one recorded derivation
/// per clause.
pub struct Closure {
    universe: Universe,
    clauses: Vec<Packed>,
    index: Index,
    origin: Vec<Origin>,
    trace: Trace,
    paradox: AtomSet,
    minimal: OnceLock<Vec<Packed>>,
}

pub fn saturate(t: &ClausalTheory) -> Result<Closure> {
    saturate_with(t, &Limits::default())
}

/// Saturates `t` together with the axioms `x ∨ ¬x` for every atom.
///
/// Input clauses are saturated first and the axioms are added afterwards, so
/// a clause that follows from the theory alone is recorded with a derivation
/// that does not use axioms. The final set does not depend on this order.
pub fn saturate_with(t: &ClausalTheory, limits: &Limits) -> Result<Closure> {
    let universe = t.universe().clone();
    let raw = saturation::run(universe.len(), t.packed(), limits)?;

    let mut pos_units = AtomSet::EMPTY;
    let mut neg_units = AtomSet::EMPTY;
    for c in &raw.clauses {
        if c.len() == 1 {
            pos_units |= c.pos;
            neg_units |= c.neg;
        }
    }
    let closure = Closure {
        universe,
        clauses: raw.clauses,
        index: raw.index,
        origin: raw.origin,
        trace: raw.trace,
        paradox: pos_units & neg_units,
        minimal: OnceLock::new(),
    };
    debug_assert_eq!(closure.contains_empty(), !closure.paradox.is_empty());
    Ok(closure)
}

/// Which weakening rules extend plain derivability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weakening {
    /// Derivability alone.
    None,
    /// Weakening of premises that are not purely paradoxical, plus
    /// disjunctions of paradoxical atoms.
    AwBw,
    /// Unrestricted classical weakening.
    Cw,
}

impl FromStr for Weakening {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Weakening::None),
            "awbw" => Ok(Weakening::AwBw),
            "cw" => Ok(Weakening::Cw),
            other => Err(Error::Unsupported(format!(
                "unknown weakening mode {other:?} (expected none, awbw or cw)"
            ))),
        }
    }
}

impl fmt::Display for Weakening {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Weakening::None => "none",
            Weakening::AwBw => "awbw",
            Weakening::Cw => "cw",
        })
    }
}

impl Closure {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Whether `□` was derived.
    pub fn contains_empty(&self) -> bool {
        self.contains_packed(Packed::default())
    }

    /// All derived clauses in canonical order.
    pub fn clauses(&self) -> BTreeSet<Clause> {
        self.clauses
            .iter()
            .map(|p| p.unpack(&self.universe))
            .collect()
    }

    pub fn unit_clauses(&self) -> BTreeSet<Clause> {
        self.clauses
            .iter()
            .filter(|p| p.len() == 1)
            .map(|p| p.unpack(&self.universe))
            .collect()
    }

    pub(crate) fn packed(&self) -> &[Packed] {
        &self.clauses
    }

    pub(crate) fn contains_packed(&self, p: Packed) -> bool {
        self.index.get(p).is_some()
    }

    fn parents(&self, id: u32) -> Option<(u32, u32, u32)> {
        match &self.trace {
            Trace::Parents(parents) => parents[id as usize],
            Trace::Steps { stamp, step_atom } => saturation::dense_parents(
                &self.index,
                stamp,
                step_atom,
                id,
                self.clauses[id as usize],
            ),
        }
    }

    pub(crate) fn pack(&self, c: &Clause) -> Result<Packed> {
        c.pack(&self.universe)
    }

    pub fn derives(&self, c: &Clause) -> Result<bool> {
        Ok(self.contains_packed(self.pack(c)?))
    }

    pub fn origin(&self, c: &Clause) -> Result<Option<Origin>> {
        let p = self.pack(c)?;
        Ok(self.index.get(p).map(|id| self.origin[id as usize]))
    }

    /// A derivable `B ⊆ c`: the smallest nonempty one, ties broken by
    /// literal order, and `□` only when no nonempty subclause is derivable.
    pub fn witness_subclause(&self, c: &Clause) -> Result<Option<Clause>> {
        let p = self.pack(c)?;
        Ok(self
            .clauses
            .iter()
            .filter(|b| b.is_subset(p))
            .map(|b| b.unpack(&self.universe))
            .min_by_key(|b| (b.is_empty(), b.len(), b.clone())))
    }

    /// `G⊥`: atoms `x` with both `x` and `¬x` derivable.
    pub fn paradoxical_atoms(&self) -> AtomSet {
        self.paradox
    }

    pub fn healthy_atoms(&self) -> AtomSet {
        self.universe.full() - self.paradox
    }

    /// Nonempty derived clauses with no nonempty proper derived subclause.
    pub(crate) fn minimal(&self) -> &[Packed] {
        self.minimal.get_or_init(|| {
            let mut by_len: Vec<Packed> = self
                .clauses
                .iter()
                .copied()
                .filter(|p| !p.is_empty())
                .collect();
            by_len.sort_by_key(|p| p.len());
            let mut min: Vec<Packed> = Vec::new();
            for p in by_len {
                if !min.iter().any(|m| m.is_subset(p)) {
                    min.push(p);
                }
            }
            min
        })
    }

    /// The entailment decision read off the closure: either every atom of
    /// `a` is paradoxical (and some atom is), or a nonempty derivable
    /// subclause of `a` mentions only healthy atoms.
    pub fn entails_para(&self, a: &Clause) -> Result<bool> {
        let p = self.pack(a)?;
        Ok(self.entails_packed(p))
    }

    pub(crate) fn entails_packed(&self, p: Packed) -> bool {
        if !self.paradox.is_empty() && p.atoms().is_subset(self.paradox) {
            return true;
        }
        let healthy = self.healthy_atoms();
        self.minimal()
            .iter()
            .any(|b| b.atoms().is_subset(healthy) && b.is_subset(p))
    }

    /// A nonempty derivable healthy subclause of `a`, if one exists.
    pub fn healthy_witness(&self, a: &Clause) -> Result<Option<Clause>> {
        let p = self.pack(a)?;
        let healthy = self.healthy_atoms();
        Ok(self
            .minimal()
            .iter()
            .filter(|b| b.atoms().is_subset(healthy) && b.is_subset(p))
            .map(|b| b.unpack(&self.universe))
            .min_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y))))
    }

    /// Derivability extended by a weakening mode.
    pub fn provable_weakened(&self, c: &Clause, mode: Weakening) -> Result<bool> {
        let p = self.pack(c)?;
        Ok(match mode {
            Weakening::None => self.contains_packed(p),
            Weakening::Cw => self.clauses.iter().any(|b| b.is_subset(p)),
            Weakening::AwBw => {
                self.contains_packed(p)
                    || self.clauses.iter().any(|b| {
                        !b.is_empty() && b.is_subset(p) && !b.atoms().is_subset(self.paradox)
                    })
                    || (!p.is_empty() && p.atoms().is_subset(self.paradox))
            }
        })
    }

    /// A replayable derivation of `c` from inputs and axioms.
    pub fn proof_of(&self, c: &Clause) -> Result<Proof> {
        let p = self.pack(c)?;
        let Some(root) = self.index.get(p) else {
            return Err(Error::NotDerivable(c.to_string()));
        };
        // iterative post-order over parent links
        let mut order: Vec<u32> = Vec::new();
        let mut step_of: HashMap<u32, usize> = HashMap::new();
        let mut stack: Vec<(u32, bool)> = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if step_of.contains_key(&id) {
                continue;
            }
            match (expanded, self.parents(id)) {
                (false, Some((l, r, _))) => {
                    stack.push((id, true));
                    stack.push((r, false));
                    stack.push((l, false));
                }
                _ => {
                    step_of.insert(id, order.len());
                    order.push(id);
                }
            }
        }
        let steps = order
            .iter()
            .map(|&id| {
                let justification = match (self.origin[id as usize], self.parents(id)) {
                    (_, Some((l, r, a))) => Justification::Resolution {
                        left: step_of[&l],
                        right: step_of[&r],
                        atom: self.universe.atom(a as usize).clone(),
                    },
                    (Origin::Axiom, None) => Justification::Axiom,
                    _ => Justification::Input,
                };
                ProofStep {
                    clause: self.clauses[id as usize].unpack(&self.universe),
                    justification,
                }
            })
            .collect();
        Ok(Proof {
            conclusion: c.clone(),
            steps,
        })
    }
}

impl fmt::Debug for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Closure")
            .field("universe", &self.universe)
            .field("clauses", &self.clauses.len())
            .field("paradox", &self.universe.names(self.paradox))
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Input,
    Axiom,
    /// Resolvent of two earlier steps; `left` holds `atom` positively.
    Resolution {
        left: usize,
        right: usize,
        atom: Atom,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub clause: Clause,
    pub justification: Justification,
}

/// A derivation as a list of steps ending at the conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub conclusion: Clause,
    pub steps: Vec<ProofStep>,
}

impl Proof {
    /// Re-checks every resolution step and the final clause. Leaves are
    /// checked against `theory`: inputs must belong to it and axioms must be
    /// `x ∨ ¬x` over its universe.
    pub fn replay(&self, theory: &ClausalTheory) -> bool {
        for (i, step) in self.steps.iter().enumerate() {
            let ok = match &step.justification {
                Justification::Input => theory.contains(&step.clause),
                Justification::Axiom => {
                    let atoms = step.clause.atoms();
                    step.clause.len() == 2
                        && atoms.len() == 1
                        && atoms
                            .iter()
                            .all(|a| theory.universe().index_of(a).is_some())
                }
                Justification::Resolution { left, right, atom } => {
                    if *left >= i || *right >= i {
                        return false;
                    }
                    let pos = crate::Literal::pos(atom.clone());
                    let neg = crate::Literal::neg(atom.clone());
                    let l = &self.steps[*left].clause;
                    let r = &self.steps[*right].clause;
                    l.contains(&pos) && r.contains(&neg) && {
                        let resolvent: Clause = l
                            .literals()
                            .filter(|x| **x != pos)
                            .chain(r.literals().filter(|x| **x != neg))
                            .cloned()
                            .collect();
                        resolvent == step.clause
                    }
                }
            };
            if !ok {
                return false;
            }
        }
        self.steps.last().map(|s| &s.clause) == Some(&self.conclusion)
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            write!(f, "{}: {} ", i + 1, step.clause)?;
            match &step.justification {
                Justification::Input => writeln!(f, "[input]")?,
                Justification::Axiom => writeln!(f, "[axiom]")?,
                Justification::Resolution { left, right, atom } => {
                    writeln!(f, "[res {} {} on {}]", left + 1, right + 1, atom)?
                }
            }
        }
        Ok(())
    }
}

/// The split of a theory into paradoxical atoms and its consistent part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdiscourseReport {
    pub universe: Universe,
    /// `G⊥`.
    pub paradox_atoms: AtomSet,
    /// `G° = G ∖ G⊥`.
    pub healthy_atoms: AtomSet,
    /// `Γ° = Γ ⊘ G⊥`.
    pub theory: ClausalTheory,
    /// Healthy vertices with an edge into `G⊥`; empty without a graph.
    pub border: AtomSet,
}

pub fn consistent_subtheory(t: &ClausalTheory, g: Option<&Digraph>) -> Result<SubdiscourseReport> {
    let closure = saturate(t)?;
    consistent_subtheory_from(&closure, t, g)
}

/// As [`consistent_subtheory`], reusing a closure of `t`.
pub fn consistent_subtheory_from(
    closure: &Closure,
    t: &ClausalTheory,
    g: Option<&Digraph>,
) -> Result<SubdiscourseReport> {
    if closure.universe() != t.universe() {
        return Err(Error::Precondition(
            "closure and theory universes differ".into(),
        ));
    }
    let paradox = closure.paradoxical_atoms();
    let healthy = t.universe().full() - paradox;
    let border = match g {
        None => AtomSet::EMPTY,
        Some(g) => {
            if g.universe() != t.universe() || ClausalTheory::from_graph(g) != *t {
                return Err(Error::Precondition(
                    "theory is not the clausal theory of the graph".into(),
                ));
            }
            healthy
                .iter()
                .filter(|&x| !g.succ(x).is_subset(healthy))
                .collect()
        }
    };
    Ok(SubdiscourseReport {
        universe: t.universe().clone(),
        paradox_atoms: paradox,
        healthy_atoms: healthy,
        theory: t.remove_atoms(paradox)?,
        border,
    })
}

/// A 2-partition `⟨true, false⟩`, indexed over the full graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoPartition {
    pub true_set: AtomSet,
    pub false_set: AtomSet,
}

impl TwoPartition {
    /// Adds `paradox` as the third component.
    pub fn extend(&self, universe: &Universe, paradox: AtomSet) -> Result<Partition3> {
        Partition3::new(universe.clone(), self.true_set, self.false_set, paradox)
    }
}

pub fn cmod_okk(r: &SubdiscourseReport, g: &Digraph) -> Result<Vec<TwoPartition>> {
    cmod_okk_with(r, g, &Limits::default())
}

/// Classical models of `Γ°`: kernels `L` of the healthy induced subgraph with
/// every border vertex in `←E(L)`.
pub fn cmod_okk_with(
    r: &SubdiscourseReport,
    g: &Digraph,
    limits: &Limits,
) -> Result<Vec<TwoPartition>> {
    if r.universe != *g.universe() {
        return Err(Error::Precondition(
            "report was not produced from this graph".into(),
        ));
    }
    let h = g.induced_subgraph(r.healthy_atoms)?;
    let mut out = Vec::new();
    for l in enumerate_kernels_with(&h, limits)? {
        let true_set = g.universe().translate(h.universe(), l)?;
        let false_set = g.universe().translate(h.universe(), h.predecessors(l))?;
        if r.border.is_subset(g.predecessors(true_set)) {
            out.push(TwoPartition {
                true_set,
                false_set,
            });
        }
    }
    Ok(out)
}

pub fn entails_para(t: &ClausalTheory, a: &Clause) -> Result<bool> {
    t.check_clause(a)?;
    saturate(t)?.entails_para(a)
}

pub fn provable_weakened(t: &ClausalTheory, c: &Clause, mode: Weakening) -> Result<bool> {
    t.check_clause(c)?;
    saturate(t)?.provable_weakened(c, mode)
}

/// `RES(Γ, A⁻)`: the closure of `t` with the complements of `a` added as
/// unit clauses.
pub fn closure_with_assumptions(t: &ClausalTheory, a: &Clause) -> Result<Closure> {
    closure_with_assumptions_with(t, a, &Limits::default())
}

pub fn closure_with_assumptions_with(
    t: &ClausalTheory,
    a: &Clause,
    limits: &Limits,
) -> Result<Closure> {
    t.check_clause(a)?;
    saturate_with(&t.with_clauses(a.complement_units())?, limits)
}
