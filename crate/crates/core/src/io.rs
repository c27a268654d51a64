//! Text formats and JSON output.
//!
//! Three input formats are understood:
//!
//! * theories, one formula per line: `x : y1 y2` for `x <=> ~y1 & ~y2`, and
//!   `x :` for a sink;
//! * edge lists: `a -> b` per edge and `vertex x` for isolated vertices;
//! * clause sets: one clause per line (`a ~b`, `[]` for the empty clause),
//!   plus `@atoms x y` to put atoms into the universe without a clause.
//!
//! `#` starts a comment in all three.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::atoms::{Atom, AtomSet, Universe};
use crate::clause::{ClausalTheory, Clause, Literal};
use crate::consequence::{EntailmentVerdict, Via};
use crate::error::{Error, Result};
use crate::graph::{Digraph, GnfTheory, RawTheory};
use crate::kernel::{Partition3, PartitionNames};
use crate::resolution::{SubdiscourseReport, TwoPartition};

/// Version of the JSON output layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    GnfTheory,
    EdgeList,
    ClauseSet,
}

impl InputKind {
    pub fn from_extension(path: &str) -> Option<Self> {
        let ext = path.rsplit_once('.')?.1;
        match ext {
            "gnf" => Some(InputKind::GnfTheory),
            "edges" => Some(InputKind::EdgeList),
            "cls" => Some(InputKind::ClauseSet),
            _ => None,
        }
    }

    /// Guesses from content: arrows or `vertex` lines mean an edge list, a
    /// colon means a theory, anything else is a clause set.
    pub fn sniff(text: &str) -> Self {
        let lines = || {
            text.lines()
                .map(strip_comment)
                .filter(|l| !l.trim().is_empty())
        };
        if lines().any(|l| l.contains("->") || l.trim_start().starts_with("vertex ")) {
            InputKind::EdgeList
        } else if lines().any(|l| l.contains(':')) {
            InputKind::GnfTheory
        } else {
            InputKind::ClauseSet
        }
    }
}

impl FromStr for InputKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gnf" | "theory" => Ok(InputKind::GnfTheory),
            "edges" => Ok(InputKind::EdgeList),
            "cls" | "clauses" => Ok(InputKind::ClauseSet),
            other => Err(Error::Unsupported(format!(
                "unknown input format {other:?} (expected gnf, edges or cls)"
            ))),
        }
    }
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputKind::GnfTheory => "gnf",
            InputKind::EdgeList => "edges",
            InputKind::ClauseSet => "cls",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Theory(GnfTheory),
    Graph(Digraph),
    Clauses(ClausalTheory),
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub kind: InputKind,
    pub payload: Payload,
    pub source: String,
}

impl InputDocument {
    /// Parses `text`, taking the format from `kind`, else from the source's
    /// extension, else from the content.
    pub fn parse(
        text: &str,
        source: &str,
        kind: Option<InputKind>,
        complete_loose: bool,
    ) -> Result<Self> {
        let kind = kind
            .or_else(|| InputKind::from_extension(source))
            .unwrap_or_else(|| InputKind::sniff(text));
        let payload = match kind {
            InputKind::GnfTheory => Payload::Theory(parse_theory(text, complete_loose)?),
            InputKind::EdgeList => Payload::Graph(parse_edge_list(text)?),
            InputKind::ClauseSet => Payload::Clauses(parse_clause_set(text)?),
        };
        Ok(InputDocument {
            kind,
            payload,
            source: source.to_string(),
        })
    }

    pub fn graph(&self) -> Option<Result<Digraph>> {
        match &self.payload {
            Payload::Theory(t) => Some(t.try_to_graph()),
            Payload::Graph(g) => Some(Ok(g.clone())),
            Payload::Clauses(_) => None,
        }
    }

    /// The clausal theory: `cth` of the graph for graph inputs.
    pub fn clausal(&self) -> Result<ClausalTheory> {
        match &self.payload {
            Payload::Clauses(t) => Ok(t.clone()),
            _ => Ok(ClausalTheory::from_graph(
                &self.graph().expect("graph input")?,
            )),
        }
    }

    pub fn serialize(&self) -> String {
        match &self.payload {
            Payload::Theory(t) => write_theory(t),
            Payload::Graph(g) => write_edge_list(g),
            Payload::Clauses(t) => write_clause_set(t),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// 1-based character column of `token` inside `line`.
fn column_of(line: &str, token: &str) -> usize {
    let offset = token.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset].chars().count() + 1
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn atom_at(line_no: usize, line: &str, token: &str) -> Result<Atom> {
    Atom::new(token).map_err(|_| {
        syntax(
            line_no,
            column_of(line, token),
            format!("invalid atom name {token:?}"),
        )
    })
}

pub fn parse_theory(text: &str, complete_loose: bool) -> Result<GnfTheory> {
    let mut raw = RawTheory::new();
    for (k, full) in text.lines().enumerate() {
        let n = k + 1;
        let line = strip_comment(full);
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            let first = line.split_whitespace().next().unwrap_or(line);
            return Err(syntax(
                n,
                column_of(full, first),
                "expected `atom : successors`",
            ));
        };
        let lhs: Vec<&str> = line[..colon].split_whitespace().collect();
        let x = match lhs.as_slice() {
            [x] => atom_at(n, full, x)?,
            [] => {
                return Err(syntax(
                    n,
                    column_of(full, &line[colon..]),
                    "missing atom before `:`",
                ))
            }
            [_, extra, ..] => {
                return Err(syntax(
                    n,
                    column_of(full, extra),
                    "one atom expected before `:`",
                ))
            }
        };
        let mut ys = BTreeSet::new();
        for token in line[colon + 1..].split_whitespace() {
            ys.insert(atom_at(n, full, token)?);
        }
        if raw.contains_key(&x) {
            return Err(Error::DuplicateDefinition {
                atom: x.to_string(),
                line: n,
            });
        }
        raw.insert(x, ys);
    }
    if complete_loose {
        Ok(GnfTheory::complete_loose_atoms(raw))
    } else {
        GnfTheory::new(raw)
    }
}

pub fn write_theory(t: &GnfTheory) -> String {
    let mut out = String::new();
    for (x, ys) in t.formulas() {
        out.push_str(x.name());
        out.push_str(" :");
        for y in ys {
            out.push(' ');
            out.push_str(y.name());
        }
        out.push('\n');
    }
    out
}

fn clause_at(line_no: usize, line: &str, text: &str) -> Result<Clause> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens == ["[]"] {
        return Ok(Clause::empty());
    }
    let mut lits = Vec::with_capacity(tokens.len());
    for token in tokens {
        let (negated, name) = match token.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        let atom = Atom::new(name).map_err(|_| {
            syntax(
                line_no,
                column_of(line, token),
                format!("invalid literal {token:?}"),
            )
        })?;
        lits.push(Literal { atom, negated });
    }
    Ok(Clause::new(lits))
}

/// `a ~b c`; `[]` is the empty clause. Blank input is rejected so that an
/// empty clause is always written explicitly.
pub fn parse_clause(text: &str) -> Result<Clause> {
    if text.trim().is_empty() {
        return Err(syntax(1, 1, "empty input; write [] for the empty clause"));
    }
    clause_at(1, text, text)
}

pub fn parse_clause_set(text: &str) -> Result<ClausalTheory> {
    let mut clauses = BTreeSet::new();
    let mut extra = Vec::new();
    for (k, full) in text.lines().enumerate() {
        let n = k + 1;
        let line = strip_comment(full);
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.trim_start().strip_prefix("@atoms") {
            for token in rest.split_whitespace() {
                extra.push(atom_at(n, full, token)?);
            }
            continue;
        }
        clauses.insert(clause_at(n, full, line)?);
    }
    ClausalTheory::new(clauses, extra)
}

pub fn write_clause_set(t: &ClausalTheory) -> String {
    let mut out = String::new();
    let mentioned: BTreeSet<Atom> = t.clauses().iter().flat_map(|c| c.atoms()).collect();
    let silent: Vec<&str> = t
        .universe()
        .atoms()
        .iter()
        .filter(|a| !mentioned.contains(*a))
        .map(|a| a.name())
        .collect();
    if !silent.is_empty() {
        out.push_str("@atoms ");
        out.push_str(&silent.join(" "));
        out.push('\n');
    }
    for c in t.clauses() {
        out.push_str(&c.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    for (k, full) in text.lines().enumerate() {
        let n = k + 1;
        let line = strip_comment(full);
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.trim_start().strip_prefix("vertex ") {
            for token in rest.split_whitespace() {
                vertices.insert(atom_at(n, full, token)?);
            }
            continue;
        }
        let Some((l, r)) = line.split_once("->") else {
            let first = line.split_whitespace().next().unwrap_or(line);
            return Err(syntax(
                n,
                column_of(full, first),
                "expected `a -> b` or `vertex x`",
            ));
        };
        let endpoint = |side: &str, what: &str| -> Result<Atom> {
            match side.split_whitespace().collect::<Vec<_>>().as_slice() {
                [name] => atom_at(n, full, name),
                _ => Err(syntax(
                    n,
                    column_of(full, side),
                    format!("expected one {what} atom"),
                )),
            }
        };
        let (a, b) = (endpoint(l, "source")?, endpoint(r, "target")?);
        vertices.insert(a.clone());
        vertices.insert(b.clone());
        edges.push((a, b));
    }
    Digraph::new(vertices, edges)
}

pub fn write_edge_list(g: &Digraph) -> String {
    let mut out = String::new();
    let mut touched = AtomSet::EMPTY;
    for (i, j) in g.edges() {
        touched.insert(i);
        touched.insert(j);
    }
    let isolated = g.names(g.vertices() - touched);
    if !isolated.is_empty() {
        out.push_str("vertex ");
        out.push_str(&isolated.join(" "));
        out.push('\n');
    }
    for (a, b) in g.named_edges() {
        out.push_str(&format!("{a} -> {b}\n"));
    }
    out
}

/// Wraps a command result with the schema version.
pub fn envelope(command: &str, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "result": result,
    })
}

pub fn models_json(models: &[Partition3]) -> Value {
    Value::Array(
        models
            .iter()
            .map(|m| serde_json::to_value(m.names()).expect("plain data"))
            .collect(),
    )
}

/// Reads back the output of [`models_json`].
pub fn models_from_json(value: &Value, universe: &Universe) -> Result<Vec<Partition3>> {
    let names: Vec<PartitionNames> = serde_json::from_value(value.clone())
        .map_err(|e| Error::Unsupported(format!("malformed models JSON: {e}")))?;
    names
        .into_iter()
        .map(|n| {
            Partition3::new(
                universe.clone(),
                universe.set(&n.true_atoms)?,
                universe.set(&n.false_atoms)?,
                universe.set(&n.paradox_atoms)?,
            )
        })
        .collect()
}

pub fn sets_json(universe: &Universe, sets: &[AtomSet]) -> Value {
    json!(sets.iter().map(|&s| universe.names(s)).collect::<Vec<_>>())
}

pub fn two_partitions_json(universe: &Universe, parts: &[TwoPartition]) -> Value {
    json!(parts
        .iter()
        .map(|p| json!({
            "true": universe.names(p.true_set),
            "false": universe.names(p.false_set),
        }))
        .collect::<Vec<_>>())
}

/// Clause strings, sorted.
pub fn clauses_json<'a, I: IntoIterator<Item = &'a Clause>>(clauses: I) -> Value {
    let mut v: Vec<String> = clauses.into_iter().map(|c| c.to_string()).collect();
    v.sort();
    json!(v)
}

pub fn clauses_from_json(value: &Value) -> Result<BTreeSet<Clause>> {
    let strings: Vec<String> = serde_json::from_value(value.clone())
        .map_err(|e| Error::Unsupported(format!("malformed clause list: {e}")))?;
    strings.iter().map(|s| parse_clause(s)).collect()
}

pub fn report_json(r: &SubdiscourseReport) -> Value {
    json!({
        "paradox": r.universe.names(r.paradox_atoms),
        "healthy": r.universe.names(r.healthy_atoms),
        "border": r.universe.names(r.border),
        "theory": clauses_json(r.theory.clauses()),
    })
}

pub fn verdict_json(v: &EntailmentVerdict) -> Value {
    let via = match &v.via {
        Via::HealthyWitness(c) => json!({"healthy_witness": c.to_string()}),
        Via::AllParadox => json!("all_paradox"),
        Via::Countermodel(m) => {
            json!({"countermodel": serde_json::to_value(m.names()).expect("plain data")})
        }
    };
    json!({"holds": v.holds, "via": via})
}

/// One clause per line, shorter clauses first.
pub fn clause_lines<'a, I: IntoIterator<Item = &'a Clause>>(clauses: I) -> String {
    let mut grouped: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for c in clauses {
        grouped.entry(c.len()).or_default().push(c.to_string());
    }
    let mut out = String::new();
    for (_, mut lines) in grouped {
        lines.sort();
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
    }
    out
}
