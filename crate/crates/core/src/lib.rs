//! Digraph semantics for propositional logic.
//!
//! Theories in graph normal form are digraphs; their kernels are the
//! classical models. Inconsistent theories still get models, taken from the
//! `←E`-closed semikernels with a maximal boolean domain, and direct
//! resolution (no refutation, no weakening) decides the induced
//! consequence relation.
//!
//! Module map:
//! - [`graph`]: digraphs, GNF theories, neighborhoods and closures
//! - [`clause`]: literals, clauses, clausal theories, `Γ ⊘ X`
//! - [`kernel`]: kernels, semikernels, models, semikernel combinators
//! - [`resolution`]: saturation, paradoxical atoms, the consistent
//!   subdiscourse, weakening modes and proofs
//! - [`consequence`]: 3-valued satisfaction, entailment, relevance
//! - [`oracle`]: brute-force reference implementations and random graphs
//! - [`io`]: text formats and JSON output

pub mod atoms;
pub mod clause;
pub mod consequence;
pub mod error;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod resolution;
mod saturation;

pub use atoms::{Atom, AtomSet, Universe};
pub use clause::{ClausalTheory, Clause, Literal};
pub use error::{Error, Result};
pub use graph::{Digraph, Direction, GnfTheory};
pub use kernel::{Partition3, SubsetReport};
pub use resolution::{Closure, Proof, SubdiscourseReport, Weakening};

/// Size caps for the exponential procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex or atom count for subset and truth-table enumeration.
    pub max_atoms: usize,
    /// Largest number of clauses a saturation may hold.
    pub max_clauses: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: 20,
            max_clauses: 1_000_000,
        }
    }
}
