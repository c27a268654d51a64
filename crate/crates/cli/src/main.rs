//! `semikern`: models, paradoxes and resolution for theories in graph normal form.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use semikern_core::consequence::{
    classical_entails_with, entails_semantic_with, is_relevant_in, min_clauses_in,
};
use semikern_core::io::{self, InputDocument, InputKind};
use semikern_core::kernel::{enumerate_kernels_with, enumerate_semikernels_with, models_with};
use semikern_core::oracle::{
    brute_kernels, brute_models, brute_semikernels, naive_closure, random_digraph, RandomGraphSpec,
};
use semikern_core::resolution::{cmod_okk_with, consistent_subtheory_from, saturate_with};
use semikern_core::{
    AtomSet, ClausalTheory, Clause, Digraph, Limits, Partition3, Universe, Weakening,
};

const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "semikern",
    version,
    about = "Paraconsistent models and direct resolution for GNF theories"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Input file; `-` reads standard input.
    #[arg(short, long, global = true, default_value = "-")]
    input: String,
    /// Input format; otherwise taken from the extension or the content.
    #[arg(long, global = true, value_name = "gnf|edges|cls")]
    format: Option<InputKind>,
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use the brute-force reference implementations.
    #[arg(long, global = true)]
    oracle: bool,
    /// Complete loose right-hand atoms with a fresh pair instead of failing.
    #[arg(long, global = true)]
    complete_loose: bool,
    #[arg(long, global = true, default_value_t = Limits::default().max_atoms)]
    max_atoms: usize,
    #[arg(long, global = true, default_value_t = Limits::default().max_clauses)]
    max_clauses: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Models: `←E`-closed semikernels with a maximal boolean domain.
    Models,
    /// Kernels, the classical models.
    Kernels,
    /// All semikernels, the empty one included.
    Semikernels,
    /// Atoms with both `x` and `~x` derivable.
    Paradox,
    /// The consistent part of the theory after deleting paradoxical atoms.
    Subdiscourse,
    /// Every clause derivable by direct resolution.
    Closure {
        /// Only the unit clauses.
        #[arg(long)]
        units: bool,
    },
    /// Is CLAUSE provable? Exit 0 for yes, 1 for no.
    Prove {
        clause: String,
        #[arg(long, default_value_t = Weakening::None)]
        weakening: Weakening,
        /// Print a derivation of the derivable subclause used.
        #[arg(long)]
        proof: bool,
    },
    /// Is CLAUSE entailed? Exit 0 for yes, 1 for no.
    Entails {
        clause: String,
        /// Two-valued entailment by truth table.
        #[arg(long, conflicts_with = "semantic")]
        classical: bool,
        /// Check every model instead of reading the closure.
        #[arg(long)]
        semantic: bool,
    },
    /// Is CLAUSE entailed with no entailed nonempty proper subclause?
    Relevant { clause: String },
    /// The minimal derivable clauses.
    Min,
    /// Compares the engines with the oracles on random digraphs.
    CheckRandom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Models => "models",
            Command::Kernels => "kernels",
            Command::Semikernels => "semikernels",
            Command::Paradox => "paradox",
            Command::Subdiscourse => "subdiscourse",
            Command::Closure { .. } => "closure",
            Command::Prove { .. } => "prove",
            Command::Entails { .. } => "entails",
            Command::Relevant { .. } => "relevant",
            Command::Min => "min",
            Command::CheckRandom { .. } => "check-random",
        }
    }
}

/// What a command prints, and its exit status.
struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: 0,
        }
    }

    fn decision(holds: bool, text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: if holds { 0 } else { EXIT_NO },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.global.json {
                let doc = io::envelope(cli.command.name(), out.json);
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("JSON values serialize")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let cap = e
                .chain()
                .filter_map(|c| c.downcast_ref::<semikern_core::Error>())
                .any(|c| c.is_resource_cap());
            ExitCode::from(if cap { EXIT_CAP } else { EXIT_USAGE })
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let limits = Limits {
        max_atoms: g.max_atoms,
        max_clauses: g.max_clauses,
    };
    if let Command::CheckRandom { n, p, seed, count } = cli.command {
        return check_random(n, p, seed, count, &limits);
    }
    let doc = read_input(g)?;
    match &cli.command {
        Command::Models => {
            let graph = need_graph(&doc)?;
            let ms = if g.oracle {
                brute_models(&graph)?
            } else {
                models_with(&graph, &limits)?
            };
            let text = ms
                .iter()
                .map(|m| format!("{}\n", partition_text(m)))
                .collect();
            Ok(Outcome::ok(text, io::models_json(&ms)))
        }
        Command::Kernels | Command::Semikernels => {
            let graph = need_graph(&doc)?;
            let sets = match (&cli.command, g.oracle) {
                (Command::Kernels, true) => brute_kernels(&graph)?,
                (Command::Kernels, false) => enumerate_kernels_with(&graph, &limits)?,
                (_, true) => brute_semikernels(&graph)?,
                (_, false) => enumerate_semikernels_with(&graph, &limits)?,
            };
            let u = graph.universe();
            let text = sets
                .iter()
                .map(|&s| format!("{}\n", set_text(u, s)))
                .collect();
            Ok(Outcome::ok(text, io::sets_json(u, &sets)))
        }
        Command::Paradox => {
            let t = doc.clausal()?;
            let c = saturate_with(&t, &limits)?;
            let names = t.universe().names(c.paradoxical_atoms());
            Ok(Outcome::ok(format!("{}\n", names.join(" ")), json!(names)))
        }
        Command::Subdiscourse => subdiscourse(&doc, &limits),
        Command::Closure { units } => {
            let t = doc.clausal()?;
            let all = if g.oracle {
                naive_closure(&t)?
            } else {
                saturate_with(&t, &limits)?.clauses()
            };
            let shown: Vec<&Clause> = all.iter().filter(|c| !units || c.len() == 1).collect();
            Ok(Outcome::ok(
                io::clause_lines(shown.iter().copied()),
                io::clauses_json(shown.iter().copied()),
            ))
        }
        Command::Prove {
            clause,
            weakening,
            proof,
        } => {
            let t = doc.clausal()?;
            let cl = parse_clause_in(&t, clause)?;
            let c = saturate_with(&t, &limits)?;
            let holds = c.provable_weakened(&cl, *weakening)?;
            let mut text = format!("{}\n", yes_no(holds));
            let mut out = json!({"holds": holds, "weakening": weakening.to_string()});
            if holds && *proof {
                let target = if c.derives(&cl)? {
                    cl.clone()
                } else {
                    c.witness_subclause(&cl)?
                        .ok_or_else(|| anyhow!("no derivable subclause of {cl}"))?
                };
                let p = c.proof_of(&target)?;
                text.push_str(&p.to_string());
                out["proof"] = json!(p.to_string().lines().collect::<Vec<_>>());
            }
            Ok(Outcome::decision(holds, text, out))
        }
        Command::Entails {
            clause,
            classical,
            semantic,
        } => {
            let t = doc.clausal()?;
            let cl = parse_clause_in(&t, clause)?;
            if *classical {
                let holds = classical_entails_with(&t, &cl, &limits)?;
                return Ok(Outcome::decision(
                    holds,
                    format!("{}\n", yes_no(holds)),
                    json!({"holds": holds}),
                ));
            }
            if *semantic {
                let graph = need_graph(&doc)?;
                let v = entails_semantic_with(&graph, &cl, &limits)?;
                let via = match &v.via {
                    semikern_core::consequence::Via::HealthyWitness(w) => {
                        format!("healthy witness {w}")
                    }
                    semikern_core::consequence::Via::AllParadox => {
                        "all atoms paradoxical".to_string()
                    }
                    semikern_core::consequence::Via::Countermodel(m) => {
                        format!("countermodel {}", partition_text(m))
                    }
                };
                let text = format!("{} ({via})\n", yes_no(v.holds));
                return Ok(Outcome::decision(v.holds, text, io::verdict_json(&v)));
            }
            let c = saturate_with(&t, &limits)?;
            let holds = c.entails_para(&cl)?;
            let mut out = json!({"holds": holds});
            let mut text = format!("{}\n", yes_no(holds));
            if let Some(w) = c.healthy_witness(&cl)? {
                text = format!("{} (healthy witness {w})\n", yes_no(holds));
                out["via"] = json!({"healthy_witness": w.to_string()});
            } else if holds {
                text = format!("{} (all atoms paradoxical)\n", yes_no(holds));
                out["via"] = json!("all_paradox");
            }
            Ok(Outcome::decision(holds, text, out))
        }
        Command::Relevant { clause } => {
            let t = doc.clausal()?;
            let cl = parse_clause_in(&t, clause)?;
            let c = saturate_with(&t, &limits)?;
            let holds = is_relevant_in(&c, &cl)?;
            Ok(Outcome::decision(
                holds,
                format!("{}\n", yes_no(holds)),
                json!({"holds": holds}),
            ))
        }
        Command::Min => {
            let t = doc.clausal()?;
            let min = min_clauses_in(&saturate_with(&t, &limits)?);
            Ok(Outcome::ok(io::clause_lines(&min), io::clauses_json(&min)))
        }
        Command::CheckRandom { .. } => unreachable!("handled above"),
    }
}

fn read_input(g: &Global) -> Result<InputDocument> {
    let text = if g.input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else {
        std::fs::read_to_string(&g.input).with_context(|| format!("reading {}", g.input))?
    };
    InputDocument::parse(&text, &g.input, g.format, g.complete_loose)
        .with_context(|| format!("parsing {}", g.input))
}

fn need_graph(doc: &InputDocument) -> Result<Digraph> {
    match doc.graph() {
        Some(g) => Ok(g?),
        None => bail!("this command needs a GNF theory or an edge list, not a clause set"),
    }
}

fn parse_clause_in(t: &ClausalTheory, text: &str) -> Result<Clause> {
    let cl = io::parse_clause(text).with_context(|| format!("parsing clause {text:?}"))?;
    t.check_clause(&cl)
        .with_context(|| format!("clause {cl} mentions an atom outside the theory"))?;
    Ok(cl)
}

fn subdiscourse(doc: &InputDocument, limits: &Limits) -> Result<Outcome> {
    let t = doc.clausal()?;
    let graph = doc.graph().transpose()?;
    let c = saturate_with(&t, limits)?;
    let r = consistent_subtheory_from(&c, &t, graph.as_ref())?;
    let u = &r.universe;
    let mut text = format!(
        "paradox: {}\nhealthy: {}\nborder: {}\ntheory:\n",
        u.names(r.paradox_atoms).join(" "),
        u.names(r.healthy_atoms).join(" "),
        u.names(r.border).join(" "),
    );
    for cl in r.theory.clauses() {
        text.push_str(&format!("  {cl}\n"));
    }
    let mut out = io::report_json(&r);
    if let Some(graph) = graph {
        let cmod = cmod_okk_with(&r, &graph, limits)?;
        text.push_str("classical models:\n");
        for m in &cmod {
            text.push_str(&format!(
                "  true={} false={}\n",
                set_text(u, m.true_set),
                set_text(u, m.false_set)
            ));
        }
        out["classical_models"] = io::two_partitions_json(u, &cmod);
    }
    Ok(Outcome::ok(text, out))
}

fn check_random(n: usize, p: f64, seed: u64, count: u64, limits: &Limits) -> Result<Outcome> {
    if !(0.0..=1.0).contains(&p) {
        bail!("edge probability must lie in [0, 1]");
    }
    let mut mismatches = Vec::new();
    for k in 0..count {
        let spec = RandomGraphSpec {
            n,
            edge_prob: p,
            seed: seed.wrapping_add(k),
        };
        let g = random_digraph(&spec);
        for what in compare_engines(&g, limits)? {
            mismatches.push(json!({"seed": spec.seed, "check": what}));
        }
    }
    let mut text = format!("checked {count} graphs, {} mismatches\n", mismatches.len());
    for m in &mismatches {
        text.push_str(&format!(
            "  seed {} {}\n",
            m["seed"],
            m["check"].as_str().unwrap_or("")
        ));
    }
    let holds = mismatches.is_empty();
    Ok(Outcome::decision(
        holds,
        text,
        json!({"checked": count, "mismatches": mismatches}),
    ))
}

/// Names of the checks on which engine and oracle disagree.
fn compare_engines(g: &Digraph, limits: &Limits) -> Result<Vec<&'static str>> {
    let mut bad = Vec::new();
    if enumerate_kernels_with(g, limits)? != brute_kernels(g)? {
        bad.push("kernels");
    }
    if enumerate_semikernels_with(g, limits)? != brute_semikernels(g)? {
        bad.push("semikernels");
    }
    let ms = models_with(g, limits)?;
    if ms != brute_models(g)? {
        bad.push("models");
    }
    let t = ClausalTheory::from_graph(g);
    let c = saturate_with(&t, limits)?;
    let r = consistent_subtheory_from(&c, &t, Some(g))?;
    let mut extended: Vec<Partition3> = cmod_okk_with(&r, g, limits)?
        .iter()
        .map(|m| m.extend(g.universe(), r.paradox_atoms))
        .collect::<semikern_core::Result<_>>()?;
    extended.sort_by(|a, b| a.true_set.canonical_cmp(&b.true_set));
    if extended != ms {
        bad.push("classical models");
    }
    if ms.iter().any(|m| m.paradox_set != c.paradoxical_atoms()) {
        bad.push("paradox");
    }
    Ok(bad)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set_text(u: &Universe, s: AtomSet) -> String {
    format!("{{{}}}", u.names(s).join(","))
}

fn partition_text(m: &Partition3) -> String {
    format!(
        "true={} false={} paradox={}",
        set_text(&m.universe, m.true_set),
        set_text(&m.universe, m.false_set),
        set_text(&m.universe, m.paradox_set)
    )
}
