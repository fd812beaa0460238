//! Command-line front end. Machine-readable output goes to stdout, notes to
//! stderr. Exit codes: 0 success, 1 negative verification, 2 usage or input
//! error.

use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::builder::{
    better_side, bounds_report, construct_general, construct_zeta, represent, BuildError, Mode, ModeChoice,
    RepresentOptions,
};
use crate::families::{
    complete_bipartite, crown, crown_with_pendants, crown_with_universal, cycle_word, extended_crown,
    random_reduced_bipartite, type2_word,
};
use crate::format::{format_perms, format_word, parse_bipartite, parse_poset, parse_word, GraphJson};
use crate::graph::{reduce, BipartiteGraph, Graph, Side, VertexId};
use crate::oracle::{dimension, prn_exact, sweep_width2, OracleBudget};
use crate::poset::{Poset, Realizer};
use crate::words::{is_uniform, represents, PermSequence, Verdict};

#[derive(Debug, Parser)]
#[command(name = "prn", version, about = "Permutational representations of bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a word represents a graph.
    CheckWord {
        /// Graph file (JSON or edge list), `-` for stdin.
        graph: String,
        /// Word file, or the word itself.
        word: String,
    },
    /// Build permutations whose concatenation represents the graph.
    Represent {
        graph: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = SideArg::Auto, ignore_case = true)]
        side: SideArg,
        /// Emit permutations over the original vertices when the graph has twins.
        #[arg(long)]
        expand_twins: bool,
        /// Write the construction details as JSON to this file.
        #[arg(long)]
        sidecar: Option<String>,
        /// Chain cover to build on: chains separated by `,`, vertices by spaces,
        /// each chain listed upward. The graph must be reduced.
        #[arg(long)]
        cover: Option<String>,
        /// In zeta mode, also emit the leading permutation of the general
        /// construction in front.
        #[arg(long)]
        with_p0: bool,
    },
    /// Bounds on the number of permutations needed.
    Bounds {
        graph: String,
        /// Also search for induced crowns and forbidden subgraphs.
        #[arg(long)]
        crown: bool,
    },
    /// Merge vertices with equal neighborhoods.
    Reduce { graph: String },
    /// Generate a family member.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Exact answers by exhaustive search.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Exhaustive sweeps.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    General,
    Zeta,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Auto,
    A,
    B,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Complete bipartite graph.
    Kmn { m: usize, n: usize },
    /// Crown graph.
    Crown { n: usize },
    /// Crown with pendant vertices.
    CrownPendant { k: usize, pa: usize, pb: usize },
    /// Crown with a universal vertex on each side.
    CrownUniversal { k: usize },
    /// Extended crown graph of a poset file.
    Ecg {
        poset: String,
        /// Comma-separated maximum antichain.
        #[arg(long)]
        antichain: Option<String>,
    },
    /// Two permutations for the extended crown graph of a path-shaped poset.
    Type2Word {
        poset: String,
        #[arg(long)]
        antichain: Option<String>,
    },
    /// Double-occurrence word for the extended crown graph of a cycle poset.
    CycleWord {
        poset: String,
        #[arg(long)]
        antichain: Option<String>,
    },
    /// Random connected reduced bipartite graph.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum OracleQuery {
    /// Fewest permutations representing a bipartite graph.
    Prn {
        graph: String,
        #[arg(long, default_value_t = 16)]
        max_elements: usize,
    },
    /// Dimension of a poset.
    Dim {
        poset: String,
        #[arg(long, default_value_t = 16)]
        max_elements: usize,
    },
}

#[derive(Debug, Subcommand)]
enum SweepKind {
    /// Width-two posets: predicted against exact counts for their extended crown graphs.
    Width2 {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

/// Failure that maps to an exit code.
struct Exit {
    code: i32,
    msg: String,
}

fn usage(msg: impl std::fmt::Display) -> Exit {
    Exit { code: 2, msg: msg.to_string() }
}

type Outcome = Result<i32, Exit>;

/// Runs the command line `argv` (including the program name).
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.msg);
            e.code
        }
    }
}

fn read_input(arg: &str, what: &str) -> Result<String, Exit> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("{what}: reading stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| usage(format!("{what}: {arg}: {e}")))
}

fn load_graph(arg: &str) -> Result<BipartiteGraph, Exit> {
    parse_bipartite(&read_input(arg, "graph")?).map_err(|e| usage(format!("graph: {e}")))
}

fn load_poset(arg: &str) -> Result<Poset, Exit> {
    parse_poset(&read_input(arg, "poset")?).map_err(|e| usage(format!("poset: {e}")))
}

fn parse_antichain(p: &Poset, spec: Option<&str>) -> Result<Option<Vec<usize>>, Exit> {
    let Some(spec) = spec else { return Ok(None) };
    spec.split(',')
        .map(|s| {
            let s = s.trim();
            p.index(s).ok_or_else(|| usage(format!("antichain: unknown element {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn write_line(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<(), Exit> {
    writeln!(out, "{text}").map_err(|e| Exit { code: 2, msg: format!("writing output: {e}") })
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable value")
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::CheckWord { graph, word } => check_word(&graph, &word, out),
        Command::Represent { graph, mode, side, expand_twins, sidecar, cover, with_p0 } => {
            let g = load_graph(&graph)?;
            let side = match side {
                SideArg::Auto => None,
                SideArg::A => Some(Side::A),
                SideArg::B => Some(Side::B),
            };
            if cover.is_some() || with_p0 {
                return represent_on_cover(&g, mode, side, cover.as_deref(), with_p0, sidecar.as_deref(), out);
            }
            let opts = RepresentOptions {
                mode: match mode {
                    ModeArg::Auto => ModeChoice::Auto,
                    ModeArg::General => ModeChoice::General,
                    ModeArg::Zeta => ModeChoice::Zeta,
                },
                side,
                expand_twins,
            };
            let r = represent(&g, &opts).map_err(build_failure)?;
            if r.reduced {
                let _ = writeln!(err, "note: graph has twins; permutations are over the reduced graph");
            }
            write_line(out, format_perms(&r.perms, r.graph.graph()))?;
            if let Some(path) = sidecar {
                // chains are recorded in ids of the graph that was built on
                let built_on = if r.reduced || !r.graph.is_reduced() { reduce(&g).reduced } else { r.graph.clone() };
                let cars: Vec<_> = r.builds.iter().map(|b| b.sidecar(built_on.graph())).collect();
                let text = if cars.len() == 1 { to_json(&cars[0]) } else { to_json(&cars) };
                write_sidecar(&path, text)?;
            }
            Ok(0)
        }
        Command::Bounds { graph, crown } => {
            let g = load_graph(&graph)?;
            let report = bounds_report(&g, crown).map_err(|e| usage(format!("bounds: {e}")))?;
            write_line(out, to_json(&report))?;
            Ok(0)
        }
        Command::Reduce { graph } => {
            let g = load_graph(&graph)?;
            let red = reduce(&g);
            let twins: Vec<Vec<&str>> =
                red.twins.iter().map(|t| t.iter().map(|&v| g.graph().label(v)).collect()).collect();
            let payload = json!({ "graph": GraphJson::from_bipartite(&red.reduced), "twins": twins });
            write_line(out, to_json(&payload))?;
            Ok(0)
        }
        Command::Generate { family } => generate(family, out),
        Command::Oracle { query } => match query {
            OracleQuery::Prn { graph, max_elements } => {
                let g = load_graph(&graph)?;
                let budget = OracleBudget::for_elements(max_elements);
                let (k, r) = prn_exact(&g, &budget).map_err(|e| usage(format!("oracle: {e}")))?;
                write_line(out, k)?;
                write_realizer(out, g.graph().labels(), &r)?;
                Ok(0)
            }
            OracleQuery::Dim { poset, max_elements } => {
                let p = load_poset(&poset)?;
                let budget = OracleBudget::for_elements(max_elements);
                let (k, r) = dimension(&p, &budget).map_err(|e| usage(format!("oracle: {e}")))?;
                write_line(out, k)?;
                write_realizer(out, p.labels(), &r)?;
                Ok(0)
            }
        },
        Command::Sweep { kind: SweepKind::Width2 { max_n } } => {
            let report = sweep_width2(max_n).map_err(|e| usage(format!("sweep: {e}")))?;
            for rec in &report.records {
                write_line(out, serde_json::to_string(rec).expect("serialisable record"))?;
            }
            let bad = report.mismatches().len();
            let _ = writeln!(err, "{} posets, {} mismatches", report.records.len(), bad);
            Ok(if bad == 0 { 0 } else { 1 })
        }
    }
}

/// A failed condition check is a negative answer, anything else bad input.
fn build_failure(e: BuildError) -> Exit {
    let code = if matches!(e, BuildError::ZetaViolated(..)) { 1 } else { 2 };
    Exit { code, msg: format!("represent: {e}") }
}

fn write_sidecar(path: &str, text: String) -> Result<(), Exit> {
    std::fs::write(path, text + "\n").map_err(|e| usage(format!("sidecar: {path}: {e}")))
}

fn represent_on_cover(
    g: &BipartiteGraph,
    mode: ModeArg,
    side: Option<Side>,
    cover: Option<&str>,
    with_p0: bool,
    sidecar: Option<&str>,
    out: &mut dyn Write,
) -> Outcome {
    let gr = g.graph();
    let chains: Option<Vec<Vec<VertexId>>> = match cover {
        None => None,
        Some(spec) => Some(
            spec.split(',')
                .map(|c| {
                    c.split_whitespace()
                        .map(|v| gr.id(v).ok_or_else(|| usage(format!("cover: unknown vertex {v:?}"))))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<_, _>>()?,
        ),
    };
    let first = chains.as_ref().and_then(|c| c.iter().flatten().next().copied());
    let side = match (side, first) {
        (Some(s), _) => s,
        (None, Some(v)) => g.side_of(v),
        (None, None) => better_side(g).map_err(build_failure)?,
    };
    let cover = chains.as_deref();
    let result = match mode {
        ModeArg::General if with_p0 => return Err(usage("--with-p0 applies to zeta mode")),
        ModeArg::General => construct_general(g, side, cover),
        ModeArg::Zeta => construct_zeta(g, side, cover, with_p0),
        ModeArg::Auto => construct_zeta(g, side, cover, with_p0).or_else(|_| construct_general(g, side, cover)),
    }
    .map_err(build_failure)?;
    let mut rows = Vec::new();
    if let Some(p0) = result.p0.as_ref().filter(|_| result.mode == Mode::Zeta) {
        rows.push(p0.clone());
    }
    rows.extend(result.perms.perms().iter().cloned());
    let seq = PermSequence::new(rows).map_err(|e| usage(format!("represent: {e}")))?;
    write_line(out, format_perms(&seq, gr))?;
    if let Some(path) = sidecar {
        write_sidecar(path, to_json(&result.sidecar(gr)))?;
    }
    Ok(0)
}

fn write_realizer(out: &mut dyn Write, labels: &[String], r: &Realizer) -> Result<(), Exit> {
    for l in &r.linexts {
        let names: Vec<&str> = l.iter().map(|&x| labels[x].as_str()).collect();
        write_line(out, names.join(" "))?;
    }
    Ok(())
}

fn check_word(graph: &str, word: &str, out: &mut dyn Write) -> Outcome {
    let g = load_graph(graph)?;
    let text = if word == "-" || Path::new(word).is_file() { read_input(word, "word")? } else { word.to_string() };
    let parsed = parse_word(&text, g.graph()).map_err(|e| usage(format!("word: {e}")))?;
    let verdict = represents(&parsed.word, g.graph()).map_err(|e| usage(format!("word: {e}")))?;
    let gr: &Graph = g.graph();
    match verdict {
        Verdict::Represents => {
            let k = is_uniform(&parsed.word).map_or("none".to_string(), |k| k.to_string());
            let full = parsed.segments.iter().all(|s| s.len() == gr.n());
            let perms = match PermSequence::new(parsed.segments.clone()) {
                Ok(p) if full => p.len().to_string(),
                _ => "none".to_string(),
            };
            write_line(out, format!("OK k-uniform={k} perms={perms}"))?;
            Ok(0)
        }
        Verdict::Counterexample { u, v, adjacent, projection } => {
            write_line(
                out,
                format!(
                    "FAIL {} {} {} projection={}",
                    gr.label(u),
                    gr.label(v),
                    if adjacent { "adjacent" } else { "non-adjacent" },
                    format_word(&projection, gr)
                ),
            )?;
            Ok(1)
        }
    }
}

fn generate(family: Family, out: &mut dyn Write) -> Outcome {
    let fam = |e: crate::families::FamilyError| usage(format!("generate: {e}"));
    let graph = match family {
        Family::Kmn { m, n } => complete_bipartite(m, n).map_err(fam)?,
        Family::Crown { n } => crown(n).map_err(fam)?,
        Family::CrownPendant { k, pa, pb } => crown_with_pendants(k, pa, pb).map_err(fam)?,
        Family::CrownUniversal { k } => crown_with_universal(k).map_err(fam)?,
        Family::Random { seed, max_n } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_reduced_bipartite(&mut rng, max_n)
        }
        Family::Ecg { poset, antichain } => {
            let p = load_poset(&poset)?;
            let m = parse_antichain(&p, antichain.as_deref())?;
            extended_crown(&p, m.as_deref()).map_err(fam)?.graph
        }
        Family::Type2Word { poset, antichain } => {
            let p = load_poset(&poset)?;
            let m = parse_antichain(&p, antichain.as_deref())?;
            let (ecg, perms) = type2_word(&p, m.as_deref()).map_err(fam)?;
            write_line(out, format_perms(&perms, ecg.graph.graph()))?;
            return Ok(0);
        }
        Family::CycleWord { poset, antichain } => {
            let p = load_poset(&poset)?;
            let m = parse_antichain(&p, antichain.as_deref())?;
            let (ecg, w) = cycle_word(&p, m.as_deref()).map_err(fam)?;
            write_line(out, format_word(&w, ecg.graph.graph()))?;
            return Ok(0);
        }
    };
    write_line(out, to_json(&GraphJson::from_bipartite(&graph)))?;
    Ok(0)
}
