//! Three-valued satisfaction, entailment over models, classical entailment,
//! relevance and minimal provable clauses.

use std::collections::BTreeSet;

use crate::atoms::AtomSet;
use crate::clause::{ClausalTheory, Clause, Packed};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::kernel::{models_with, Partition3};
use crate::resolution::{consistent_subtheory_from, saturate, saturate_with, Closure};
use crate::Limits;

/// `α ⊨ A B̄` iff `A ∩ α⊤ ≠ ∅`, or `B ∩ α⊥ ≠ ∅`, or all atoms of the clause
/// are paradoxical and `α° ≠ ∅`. The empty clause holds exactly when some
/// atom is paradoxical.
pub fn satisfies(p: &Partition3, cl: &Clause) -> Result<bool> {
    let c = cl.pack(&p.universe)?;
    Ok(satisfies_packed(p, c))
}

pub(crate) fn satisfies_packed(p: &Partition3, c: Packed) -> bool {
    !c.pos.is_disjoint(p.true_set)
        || !c.neg.is_disjoint(p.false_set)
        || (!p.paradox_set.is_empty() && c.atoms().is_subset(p.paradox_set))
}

/// Why an entailment holds or fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Via {
    /// Every model satisfies the literals of this subclause over atoms that
    /// are not paradoxical.
    HealthyWitness(Clause),
    /// The clause mentions only paradoxical atoms and some atom is one.
    AllParadox,
    /// A model that does not satisfy the clause.
    Countermodel(Partition3),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntailmentVerdict {
    pub holds: bool,
    pub via: Via,
}

pub fn entails_semantic(g: &Digraph, cl: &Clause) -> Result<EntailmentVerdict> {
    entails_semantic_with(g, cl, &Limits::default())
}

/// `Γ ⊨ C` checked against every model of `g`.
pub fn entails_semantic_with(
    g: &Digraph,
    cl: &Clause,
    limits: &Limits,
) -> Result<EntailmentVerdict> {
    let c = cl.pack(g.universe())?;
    let models = models_with(g, limits)?;
    if let Some(bad) = models.iter().find(|m| !satisfies_packed(m, c)) {
        return Ok(EntailmentVerdict {
            holds: false,
            via: Via::Countermodel(bad.clone()),
        });
    }
    // all models share the paradox component, so the first one explains it
    let paradox = models[0].paradox_set;
    let via = if !paradox.is_empty() && c.atoms().is_subset(paradox) {
        Via::AllParadox
    } else {
        Via::HealthyWitness(c.without(paradox).unpack(g.universe()))
    };
    Ok(EntailmentVerdict { holds: true, via })
}

pub fn classical_entails(t: &ClausalTheory, cl: &Clause) -> Result<bool> {
    classical_entails_with(t, cl, &Limits::default())
}

/// Two-valued entailment by running through every total assignment.
pub fn classical_entails_with(t: &ClausalTheory, cl: &Clause, limits: &Limits) -> Result<bool> {
    let n = t.universe().len();
    if n > limits.max_atoms {
        return Err(Error::ResourceCap {
            what: "atoms for truth tables",
            limit: limits.max_atoms,
        });
    }
    let goal = cl.pack(t.universe())?;
    let theory = t.packed();
    let holds = |c: &Packed, v: AtomSet| !c.pos.is_disjoint(v) || !c.neg.is_subset(v);
    for bits in 0u64..(1u64 << n) {
        let v = AtomSet::from_bits(bits as u128);
        if theory.iter().all(|c| holds(c, v)) && !holds(&goal, v) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_relevant(t: &ClausalTheory, cl: &Clause) -> Result<bool> {
    t.check_clause(cl)?;
    is_relevant_in(&saturate(t)?, cl)
}

/// `Γ ⊨ᵣ C`: `C` is entailed and no nonempty proper subclause is.
pub fn is_relevant_in(closure: &Closure, cl: &Clause) -> Result<bool> {
    if cl.is_empty() {
        return Err(Error::EmptyClause);
    }
    let c = closure.pack(cl)?;
    if !closure.entails_packed(c) {
        return Ok(false);
    }
    let lits: Vec<Packed> = c
        .pos
        .iter()
        .map(|a| Packed::unit(a, false))
        .chain(c.neg.iter().map(|a| Packed::unit(a, true)))
        .collect();
    let full = (1u64 << lits.len()) - 1;
    for mask in 1..full {
        let sub = lits
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(Packed::default(), |acc, (_, l)| Packed {
                pos: acc.pos | l.pos,
                neg: acc.neg | l.neg,
            });
        if closure.entails_packed(sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn min_clauses(t: &ClausalTheory) -> Result<BTreeSet<Clause>> {
    Ok(min_clauses_in(&saturate(t)?))
}

/// `Min(Γ)`: nonempty derivable clauses without a nonempty proper derivable
/// subclause.
pub fn min_clauses_in(closure: &Closure) -> BTreeSet<Clause> {
    closure
        .minimal()
        .iter()
        .map(|p| p.unpack(closure.universe()))
        .collect()
}

/// `Min(Γ)` assembled from the consistent part: the minimal clauses of
/// `Γ°` together with both unit clauses of every paradoxical atom.
pub fn min_clauses_split(t: &ClausalTheory, limits: &Limits) -> Result<BTreeSet<Clause>> {
    let closure = saturate_with(t, limits)?;
    let report = consistent_subtheory_from(&closure, t, None)?;
    let healthy = saturate_with(&report.theory, limits)?;
    let mut out = min_clauses_in(&healthy);
    for a in closure.universe().atoms_of(report.paradox_atoms) {
        out.insert(Clause::unit(crate::Literal::pos(a.clone())));
        out.insert(Clause::unit(crate::Literal::neg(a)));
    }
    Ok(out)
}

pub fn component_claim_check(g: &Digraph) -> Result<bool> {
    component_claim_check_with(g, &Limits::default())
}

/// Checks that derived clauses of `cth(g)` never mix atoms of different
/// underlying components, and that any two atoms of one component occur
/// together in some derived clause.
pub fn component_claim_check_with(g: &Digraph, limits: &Limits) -> Result<bool> {
    let closure = saturate_with(&ClausalTheory::from_graph(g), limits)?;
    let components = g.underlying_components();
    let mut component_of = vec![AtomSet::EMPTY; g.len()];
    for &c in &components {
        for x in c.iter() {
            component_of[x] = c;
        }
    }
    let mut together = vec![AtomSet::EMPTY; g.len()];
    for c in closure.packed() {
        let atoms = c.atoms();
        let Some(first) = atoms.first() else { continue };
        if !atoms.is_subset(component_of[first]) {
            return Ok(false);
        }
        for x in atoms.iter() {
            together[x] |= atoms;
        }
    }
    Ok((0..g.len()).all(|x| (component_of[x] - AtomSet::singleton(x)).is_subset(together[x])))
}
