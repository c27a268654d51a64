//! The two saturation engines behind [`crate::resolution::saturate`].
//!
//! Without subsumption the closure of a paradoxical theory tends towards all
//! `4^n` clauses, so pairwise resolution is quadratic in a set that is itself
//! exponential. For small universes the *dense* engine stores clauses as codes
//! `pos | neg << n` and computes every resolvent on an atom `a` in one go:
//! the resolvents are exactly the unions `X ∪ Y` with `X ∪ {a}` and
//! `Y ∪ {¬a}` in the set, which is an OR-convolution over the `2n` literal
//! bits, done with a zeta transform, a pointwise product and a Möbius
//! transform. Pair counts stay below `2^64`, so wrapping arithmetic is exact.
//!
//! Larger universes use a given-clause worklist with a per-literal
//! occurrence index.
//!
//! Both engines saturate the inputs first and add the axioms `x ∨ ¬x` only
//! afterwards, so derivations of theory consequences prefer the theory.

use rustc_hash::FxHashMap;

use crate::atoms::AtomSet;
use crate::clause::Packed;
use crate::error::{Error, Result};
use crate::resolution::Origin;
use crate::Limits;

/// Universes up to this size always use the dense engine.
pub(crate) const DENSE_ALWAYS: usize = 7;
/// Largest universe the dense engine handles.
pub(crate) const DENSE_MAX: usize = 10;
/// Clause count at which a worklist run on a universe of at most
/// [`DENSE_MAX`] atoms is abandoned in favour of the dense engine.
const WORKLIST_BUDGET: usize = 2048;

const NONE: u32 = u32::MAX;

pub(crate) enum Index {
    Dense { n: usize, ids: Vec<u32> },
    Sparse(FxHashMap<Packed, u32>),
}

impl Index {
    pub fn get(&self, p: Packed) -> Option<u32> {
        match self {
            Index::Dense { n, ids } => {
                if (p.pos | p.neg).bits() >> n != 0 {
                    return None;
                }
                let id = ids[encode(p, *n)];
                (id != NONE).then_some(id)
            }
            Index::Sparse(map) => map.get(&p).copied(),
        }
    }
}

/// How to recover one derivation per clause.
pub(crate) enum Trace {
    /// Explicit premises `(positive side, negative side, atom)`.
    Parents(Vec<Option<(u32, u32, u32)>>),
    /// The step at which each clause appeared; `step_atom[s]` is the atom
    /// resolved on in step `s`. Premises are recovered by search.
    Steps {
        stamp: Vec<u32>,
        step_atom: Vec<u32>,
    },
}

pub(crate) struct Raw {
    pub clauses: Vec<Packed>,
    pub origin: Vec<Origin>,
    pub index: Index,
    pub trace: Trace,
}

fn cap_error(limit: usize) -> Error {
    Error::ResourceCap {
        what: "clauses in saturation",
        limit,
    }
}

pub(crate) fn run(n: usize, inputs: Vec<Packed>, limits: &Limits) -> Result<Raw> {
    if n <= DENSE_ALWAYS {
        return dense(n, inputs, limits);
    }
    let budget = if n <= DENSE_MAX {
        limits.max_clauses.min(WORKLIST_BUDGET)
    } else {
        limits.max_clauses
    };
    match worklist(n, inputs.clone(), budget) {
        Err(Error::ResourceCap { .. }) if budget < limits.max_clauses => dense(n, inputs, limits),
        Err(Error::ResourceCap { .. }) => Err(cap_error(limits.max_clauses)),
        other => other,
    }
}

fn encode(p: Packed, n: usize) -> usize {
    p.pos.bits() as usize | (p.neg.bits() as usize) << n
}

fn decode(code: usize, n: usize) -> Packed {
    let mask = (1usize << n) - 1;
    Packed {
        pos: AtomSet::from_bits((code & mask) as u128),
        neg: AtomSet::from_bits((code >> n) as u128),
    }
}

struct DenseState {
    n: usize,
    cap: usize,
    ids: Vec<u32>,
    codes: Vec<usize>,
    origin: Vec<Origin>,
    stamp: Vec<u32>,
    step_atom: Vec<u32>,
    f: Vec<u64>,
    g: Vec<u64>,
}

impl DenseState {
    fn add(&mut self, code: usize, origin: Origin) -> Result<()> {
        if self.ids[code] != NONE {
            return Ok(());
        }
        if self.codes.len() >= self.cap {
            return Err(cap_error(self.cap));
        }
        self.ids[code] = self.codes.len() as u32;
        self.codes.push(code);
        self.origin.push(origin);
        self.stamp.push(self.step_atom.len() as u32 - 1);
        Ok(())
    }

    fn resolve_on(&mut self, a: usize) -> Result<()> {
        let n = self.n;
        let pa = 1usize << a;
        let na = 1usize << (n + a);
        self.f.fill(0);
        self.g.fill(0);
        let (mut any_f, mut any_g) = (false, false);
        for &c in &self.codes {
            if c & pa != 0 {
                self.f[c & !pa] = 1;
                any_f = true;
            }
            if c & na != 0 {
                self.g[c & !na] = 1;
                any_g = true;
            }
        }
        self.step_atom.push(a as u32);
        if !(any_f && any_g) {
            return Ok(());
        }
        zeta(&mut self.f);
        zeta(&mut self.g);
        for (x, y) in self.f.iter_mut().zip(&self.g) {
            *x = x.wrapping_mul(*y);
        }
        mobius(&mut self.f);
        for code in 0..self.f.len() {
            if self.f[code] != 0 {
                self.add(code, Origin::Resolvent)?;
            }
        }
        Ok(())
    }

    fn fixpoint(&mut self) -> Result<()> {
        // an atom needs another pass only if the set grew since its last one
        let mut seen = vec![usize::MAX; self.n];
        loop {
            let before = self.codes.len();
            for (a, last) in seen.iter_mut().enumerate() {
                if *last == self.codes.len() {
                    continue;
                }
                *last = self.codes.len();
                self.resolve_on(a)?;
            }
            if self.codes.len() == before {
                return Ok(());
            }
        }
    }
}

/// Subset sums: `f[x] = Σ_{y ⊆ x} f[y]`.
fn zeta(f: &mut [u64]) {
    let mut bit = 1;
    while bit < f.len() {
        for block in (0..f.len()).step_by(2 * bit) {
            let (lo, hi) = f[block..block + 2 * bit].split_at_mut(bit);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h = h.wrapping_add(*l);
            }
        }
        bit <<= 1;
    }
}

/// Inverse of [`zeta`].
fn mobius(f: &mut [u64]) {
    let mut bit = 1;
    while bit < f.len() {
        for block in (0..f.len()).step_by(2 * bit) {
            let (lo, hi) = f[block..block + 2 * bit].split_at_mut(bit);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h = h.wrapping_sub(*l);
            }
        }
        bit <<= 1;
    }
}

fn dense(n: usize, inputs: Vec<Packed>, limits: &Limits) -> Result<Raw> {
    let size = 1usize << (2 * n);
    let mut st = DenseState {
        n,
        cap: limits.max_clauses,
        ids: vec![NONE; size],
        codes: Vec::new(),
        origin: Vec::new(),
        stamp: Vec::new(),
        // step 0 holds the inputs
        step_atom: vec![NONE],
        f: vec![0; size],
        g: vec![0; size],
    };
    for p in inputs {
        st.add(encode(p, n), Origin::Input)?;
    }
    st.fixpoint()?;
    st.step_atom.push(NONE);
    for a in 0..n {
        st.add(encode(Packed::axiom(a), n), Origin::Axiom)?;
    }
    st.fixpoint()?;
    Ok(Raw {
        clauses: st.codes.iter().map(|&c| decode(c, n)).collect(),
        origin: st.origin,
        index: Index::Dense { n, ids: st.ids },
        trace: Trace::Steps {
            stamp: st.stamp,
            step_atom: st.step_atom,
        },
    })
}

/// Premises for a clause recorded by the dense engine: among all ways of
/// producing it in its step from strictly older clauses, the pair whose
/// younger member is oldest.
pub(crate) fn dense_parents(
    index: &Index,
    stamp: &[u32],
    step_atom: &[u32],
    id: u32,
    clause: Packed,
) -> Option<(u32, u32, u32)> {
    let Index::Dense { n, ids } = index else {
        return None;
    };
    let n = *n;
    let s = stamp[id as usize];
    let a = step_atom[s as usize];
    if a == NONE {
        return None;
    }
    let a = a as usize;
    let (pa, na) = (1usize << a, 1usize << (n + a));
    let r = encode(clause, n);
    let older = |code: usize| {
        let i = ids[code];
        (i != NONE && stamp[i as usize] < s).then_some(i)
    };
    let mut best: Option<(u32, u32, u32)> = None;
    let mut best_key = u32::MAX;
    let xmask = r & !pa;
    let mut x = xmask;
    loop {
        let need = r & !x;
        if need & na == 0 {
            if let Some(ci) = older(x | pa) {
                let zmask = x & !na;
                let mut z = zmask;
                loop {
                    if let Some(di) = older(need | z | na) {
                        let key = stamp[ci as usize].max(stamp[di as usize]);
                        if key < best_key {
                            best_key = key;
                            best = Some((ci, di, a as u32));
                        }
                    }
                    if z == 0 {
                        break;
                    }
                    z = (z - 1) & zmask;
                }
            }
        }
        if x == 0 {
            break;
        }
        x = (x - 1) & xmask;
    }
    best
}

struct Worklist {
    clauses: Vec<Packed>,
    index: FxHashMap<Packed, u32>,
    origin: Vec<Origin>,
    parents: Vec<Option<(u32, u32, u32)>>,
    occ_pos: Vec<Vec<u32>>,
    occ_neg: Vec<Vec<u32>>,
    next: usize,
    cap: usize,
}

impl Worklist {
    fn add(&mut self, c: Packed, origin: Origin, parents: Option<(u32, u32, u32)>) -> Result<()> {
        if self.index.contains_key(&c) {
            return Ok(());
        }
        if self.clauses.len() >= self.cap {
            return Err(cap_error(self.cap));
        }
        self.index.insert(c, self.clauses.len() as u32);
        self.clauses.push(c);
        self.origin.push(origin);
        self.parents.push(parents);
        Ok(())
    }

    /// Each clause is resolved against every clause processed before it,
    /// then joins the processed set.
    fn fixpoint(&mut self) -> Result<()> {
        while self.next < self.clauses.len() {
            let id = self.next as u32;
            let c = self.clauses[self.next];
            for a in c.pos.iter() {
                for k in 0..self.occ_neg[a].len() {
                    let d = self.occ_neg[a][k];
                    let r = c.resolve(self.clauses[d as usize], a);
                    self.add(r, Origin::Resolvent, Some((id, d, a as u32)))?;
                }
            }
            for a in c.neg.iter() {
                for k in 0..self.occ_pos[a].len() {
                    let d = self.occ_pos[a][k];
                    let r = self.clauses[d as usize].resolve(c, a);
                    self.add(r, Origin::Resolvent, Some((d, id, a as u32)))?;
                }
            }
            for a in c.pos.iter() {
                self.occ_pos[a].push(id);
            }
            for a in c.neg.iter() {
                self.occ_neg[a].push(id);
            }
            self.next += 1;
        }
        Ok(())
    }
}

fn worklist(n: usize, inputs: Vec<Packed>, cap: usize) -> Result<Raw> {
    let mut w = Worklist {
        clauses: Vec::new(),
        index: FxHashMap::default(),
        origin: Vec::new(),
        parents: Vec::new(),
        occ_pos: vec![Vec::new(); n],
        occ_neg: vec![Vec::new(); n],
        next: 0,
        cap,
    };
    for p in inputs {
        w.add(p, Origin::Input, None)?;
    }
    w.fixpoint()?;
    for a in 0..n {
        w.add(Packed::axiom(a), Origin::Axiom, None)?;
    }
    w.fixpoint()?;
    Ok(Raw {
        clauses: w.clauses,
        origin: w.origin,
        index: Index::Sparse(w.index),
        trace: Trace::Parents(w.parents),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn clause_set(raw: &Raw) -> BTreeSet<(u128, u128)> {
        raw.clauses
            .iter()
            .map(|p| (p.pos.bits(), p.neg.bits()))
            .collect()
    }

    #[test]
    fn transforms_invert() {
        let mut f: Vec<u64> = (0..16).map(|i| (i * 7 + 3) % 5).collect();
        let orig = f.clone();
        zeta(&mut f);
        assert_eq!(f[0b1111], orig.iter().sum::<u64>());
        mobius(&mut f);
        assert_eq!(f, orig);
    }

    #[test]
    fn engines_agree() {
        // a small paradoxical theory: x <-> ~x next to y <-> ~z, z sink
        let u = |a: usize, neg: bool| Packed::unit(a, neg);
        let inputs = vec![
            u(0, false),
            u(0, true),
            Packed {
                pos: AtomSet::from_bits(0b110),
                neg: AtomSet::EMPTY,
            },
            Packed {
                pos: AtomSet::EMPTY,
                neg: AtomSet::from_bits(0b110),
            },
            u(2, false),
        ];
        let limits = Limits::default();
        let d = dense(3, inputs.clone(), &limits).unwrap();
        let w = worklist(3, inputs, limits.max_clauses).unwrap();
        assert_eq!(clause_set(&d), clause_set(&w));
        for (i, p) in d.clauses.iter().enumerate() {
            assert_eq!(d.index.get(*p), Some(i as u32));
        }
    }
}
