//! Brute-force reference implementations.
//!
//! Everything here works on plain edge lists and `Vec<bool>` membership
//! vectors and tries every subset or assignment. None of it shares code with
//! the enumeration in [`crate::kernel`] or the saturation in
//! [`crate::resolution`].

use std::collections::BTreeSet;

use crate::atoms::{AtomSet, Universe};
use crate::clause::{ClausalTheory, Clause, Literal};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::kernel::Partition3;

/// Largest vertex count the subset oracles accept.
pub const MAX_ORACLE_VERTICES: usize = 16;
/// Largest universe the truth-table oracle accepts.
pub const MAX_TRUTH_TABLE_ATOMS: usize = 20;

struct Subsets {
    n: usize,
    edges: Vec<(usize, usize)>,
}

struct Evaluated {
    members: Vec<bool>,
    out: Vec<bool>,
    inn: Vec<bool>,
}

impl Subsets {
    fn new(g: &Digraph) -> Result<Self> {
        if g.len() > MAX_ORACLE_VERTICES {
            return Err(Error::ResourceCap {
                what: "vertices for the oracle",
                limit: MAX_ORACLE_VERTICES,
            });
        }
        Ok(Subsets {
            n: g.len(),
            edges: g.edges().collect(),
        })
    }

    fn evaluate(&self, mask: u32) -> Evaluated {
        let members: Vec<bool> = (0..self.n).map(|i| mask >> i & 1 == 1).collect();
        let mut out = vec![false; self.n];
        let mut inn = vec![false; self.n];
        for &(u, v) in &self.edges {
            if members[u] {
                out[v] = true;
            }
            if members[v] {
                inn[u] = true;
            }
        }
        Evaluated { members, out, inn }
    }

    fn all(&self) -> impl Iterator<Item = Evaluated> + '_ {
        (0..(1u32 << self.n)).map(|m| self.evaluate(m))
    }

    fn is_semikernel(&self, e: &Evaluated) -> bool {
        (0..self.n).all(|v| (!e.out[v] || e.inn[v]) && !(e.inn[v] && e.members[v]))
    }

    fn is_kernel(&self, e: &Evaluated) -> bool {
        let independent = self
            .edges
            .iter()
            .all(|&(u, v)| !(e.members[u] && e.members[v]));
        independent && (0..self.n).all(|v| e.members[v] != e.inn[v])
    }

    /// `←E(←E[S]) ⊆ ←E[S]`.
    fn is_closed(&self, e: &Evaluated) -> bool {
        let domain: Vec<bool> = (0..self.n).map(|v| e.members[v] || e.inn[v]).collect();
        self.edges.iter().all(|&(u, v)| !domain[v] || domain[u])
    }
}

fn to_set(flags: &[bool]) -> AtomSet {
    flags
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i)
        .collect()
}

fn sorted(mut sets: Vec<AtomSet>) -> Vec<AtomSet> {
    sets.sort_by(AtomSet::canonical_cmp);
    sets
}

/// Every subset `S` with `E(S) ⊆ ←E(S) ⊆ G ∖ S`.
pub fn brute_semikernels(g: &Digraph) -> Result<Vec<AtomSet>> {
    let s = Subsets::new(g)?;
    Ok(sorted(
        s.all()
            .filter(|e| s.is_semikernel(e))
            .map(|e| to_set(&e.members))
            .collect(),
    ))
}

/// Every independent subset whose in-neighbourhood is its complement.
pub fn brute_kernels(g: &Digraph) -> Result<Vec<AtomSet>> {
    let s = Subsets::new(g)?;
    Ok(sorted(
        s.all()
            .filter(|e| s.is_kernel(e))
            .map(|e| to_set(&e.members))
            .collect(),
    ))
}

/// Closed semikernels with a maximal boolean domain, as 3-partitions.
pub fn brute_models(g: &Digraph) -> Result<Vec<Partition3>> {
    let s = Subsets::new(g)?;
    let candidates: Vec<(Vec<bool>, Vec<bool>)> = s
        .all()
        .filter(|e| s.is_semikernel(e) && s.is_closed(e))
        .map(|e| (e.members, e.inn))
        .collect();
    let domain = |(m, i): &(Vec<bool>, Vec<bool>)| -> Vec<bool> {
        m.iter().zip(i).map(|(a, b)| *a || *b).collect()
    };
    let strictly_below = |x: &[bool], y: &[bool]| x.iter().zip(y).all(|(a, b)| !a || *b) && x != y;
    let mut out = Vec::new();
    for c in &candidates {
        let d = domain(c);
        if candidates.iter().any(|o| strictly_below(&d, &domain(o))) {
            continue;
        }
        let paradox: Vec<bool> = d.iter().map(|b| !b).collect();
        out.push(Partition3::new(
            g.universe().clone(),
            to_set(&c.0),
            to_set(&c.1),
            to_set(&paradox),
        )?);
    }
    out.sort_by(|a, b| a.true_set.canonical_cmp(&b.true_set));
    Ok(out)
}

/// All total assignments satisfying every clause, each given as its set of
/// true atoms.
pub fn truth_table_models(t: &ClausalTheory) -> Result<Vec<AtomSet>> {
    let u = t.universe();
    if u.len() > MAX_TRUTH_TABLE_ATOMS {
        return Err(Error::ResourceCap {
            what: "atoms for truth tables",
            limit: MAX_TRUTH_TABLE_ATOMS,
        });
    }
    let clauses: Vec<Vec<(usize, bool)>> = t
        .clauses()
        .iter()
        .map(|c| {
            c.literals()
                .map(|l| (u.index_of(&l.atom).expect("atom in universe"), l.negated))
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    for bits in 0u32..(1u32 << u.len()) {
        let value: Vec<bool> = (0..u.len()).map(|i| bits >> i & 1 == 1).collect();
        let ok = clauses
            .iter()
            .all(|c| c.iter().any(|&(a, negated)| value[a] != negated));
        if ok {
            found.push(to_set(&value));
        }
    }
    Ok(found)
}

/// Largest universe [`naive_closure`] accepts.
pub const MAX_NAIVE_CLOSURE_ATOMS: usize = 5;

/// Resolution closure by repeated all-pairs passes over ordinary clause sets.
pub fn naive_closure(t: &ClausalTheory) -> Result<BTreeSet<Clause>> {
    let u = t.universe();
    if u.len() > MAX_NAIVE_CLOSURE_ATOMS {
        return Err(Error::ResourceCap {
            what: "atoms for the naive closure",
            limit: MAX_NAIVE_CLOSURE_ATOMS,
        });
    }
    let mut all: BTreeSet<Clause> = t.clauses().clone();
    for a in u.atoms() {
        all.insert(Clause::new([
            Literal::pos(a.clone()),
            Literal::neg(a.clone()),
        ]));
    }
    loop {
        let current: Vec<Clause> = all.iter().cloned().collect();
        let mut added = false;
        for c1 in &current {
            for c2 in &current {
                for l in c1.literals().filter(|l| !l.negated) {
                    let neg = l.complement();
                    if c2.contains(&neg) {
                        let r: Clause = c1
                            .literals()
                            .filter(|x| *x != l)
                            .chain(c2.literals().filter(|x| **x != neg))
                            .cloned()
                            .collect();
                        added |= all.insert(r);
                    }
                }
            }
        }
        if !added {
            return Ok(all);
        }
    }
}

/// Parameters of a random digraph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub edge_prob: f64,
    pub seed: u64,
}

/// SplitMix64 (Steele, Lea and Flood), the seeding generator of the
/// xoshiro family. State advances by `0x9E3779B97F4A7C15`; the output is the
/// state passed through two xor-shift-multiply rounds and a final xor-shift.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` (`bound > 0`), by multiply-shift.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

/// Vertex names `v0, v1, ...`, zero-padded to a common width so that name
/// order equals index order.
pub fn vertex_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}

/// Draws one number per ordered pair `(i, j)`, loops included, in row-major
/// order; the pair is an edge iff the draw is below `edge_prob`.
pub fn random_digraph(spec: &RandomGraphSpec) -> Digraph {
    let mut rng = SplitMix64::new(spec.seed);
    let universe = Universe::from_names(&vertex_names(spec.n)).expect("valid generated names");
    let mut out = vec![AtomSet::EMPTY; spec.n];
    for row in out.iter_mut() {
        for j in 0..spec.n {
            if rng.next_f64() < spec.edge_prob {
                row.insert(j);
            }
        }
    }
    Digraph::from_parts(universe, out)
}
