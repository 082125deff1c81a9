//! Command-line surface: derive, realize, analyze, classify, witness,
//! and verify subcommands over the structured document formats.
//!
//! Exit codes: 0 success (including negative classification verdicts),
//! 1 input error, 3 verification failure. Code 2 is reserved.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::derived::{cce, competition, niche};
use crate::doc::{
    digraph_from_document, digraph_to_document, emit_dot, graph_from_document,
    graph_to_document, interval_from_document, parse_named_graph, parse_representation,
    semiorder_from_document, serialize_named_graph, serialize_representation, GraphKind,
    NamedGraphDocument, RepresentationDocument,
};
use crate::order::{
    analyze_interval_rep, analyze_semiorder_rep, realize_interval, realize_semiorder, CaseId,
    RepresentationAnalysis,
};
use crate::recognize::{classify_niche, NicheClassDescriptor};
use crate::verify::{verify_theorem, Theorem, VerificationReport};
use crate::witness::{niche_witness_interval, niche_witness_semiorder};

#[derive(Parser)]
#[command(name = "nichegraph", version, about = "Competition, CCE, and niche graphs of digraphs: derivation, recognition, witnesses, and exhaustive verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeriveKind {
    Competition,
    Cce,
    Niche,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Semiorder,
    Interval,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a derived graph of a digraph document
    Derive {
        #[arg(long, value_enum)]
        kind: DeriveKind,
        #[arg(long = "in")]
        input: PathBuf,
        /// Emit DOT instead of the structured format
        #[arg(long)]
        dot: bool,
    },
    /// Realize a representation document as a digraph document
    Realize {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Case analysis of a representation: r1, r2, partition, predicted class
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Classify a graph document against all four characterizations
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Emit a representation whose niche graph has the given shape
    Witness {
        #[arg(long, value_enum)]
        model: Model,
        /// Shape spec: edgeless:Q, two-cliques:M,N,
        /// two-cliques-isolated:M,N,Q, or gamma:M,N,Q,R
        #[arg(long)]
        shape: String,
    },
    /// Exhaustively verify one of the four characterizations
    Verify {
        #[arg(long)]
        theorem: u8,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
}

/// Runs the CLI on the given argument vector, writing results to `out`.
/// Errors go to stderr. Returns the process exit code.
pub fn run<I, S, W>(argv: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return 1;
        }
        Err(e) => {
            // --help / --version
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn dispatch(cmd: Command, out: &mut impl Write) -> Result<i32, String> {
    match cmd {
        Command::Derive { kind, input, dot } => {
            let doc = parse_named_graph(&read_file(&input)?).map_err(|e| e.to_string())?;
            if doc.kind != GraphKind::Digraph {
                return Err("derive expects a digraph document".into());
            }
            let (d, names) = digraph_from_document(&doc).map_err(|e| e.to_string())?;
            let g = match kind {
                DeriveKind::Competition => competition(&d),
                DeriveKind::Cce => cce(&d),
                DeriveKind::Niche => niche(&d),
            };
            let gdoc = graph_to_document(&g, &names);
            emit_named(out, &gdoc, dot);
            Ok(0)
        }
        Command::Realize { input } => {
            let rep = parse_representation(&read_file(&input)?).map_err(|e| e.to_string())?;
            let (d, names) = match &rep {
                RepresentationDocument::Semiorder { delta, f } => {
                    let (r, names) = semiorder_from_document(*delta, f);
                    (realize_semiorder(&r), names)
                }
                RepresentationDocument::Interval { j } => {
                    let (r, names) = interval_from_document(j);
                    (realize_interval(&r), names)
                }
            };
            emit_named(out, &digraph_to_document(&d, &names), false);
            Ok(0)
        }
        Command::Analyze { input } => {
            let rep = parse_representation(&read_file(&input)?).map_err(|e| e.to_string())?;
            let (analysis, names) = match &rep {
                RepresentationDocument::Semiorder { delta, f } => {
                    if f.is_empty() {
                        return Err("analyze requires at least one vertex".into());
                    }
                    let (r, names) = semiorder_from_document(*delta, f);
                    (analyze_semiorder_rep(&r), names)
                }
                RepresentationDocument::Interval { j } => {
                    if j.is_empty() {
                        return Err("analyze requires at least one vertex".into());
                    }
                    let (r, names) = interval_from_document(j);
                    (analyze_interval_rep(&r), names)
                }
            };
            print_analysis(out, &analysis, &names);
            Ok(0)
        }
        Command::Classify { input } => {
            let doc = parse_named_graph(&read_file(&input)?).map_err(|e| e.to_string())?;
            if doc.kind != GraphKind::Graph {
                return Err("classify expects a graph document".into());
            }
            let (g, _) = graph_from_document(&doc).map_err(|e| e.to_string())?;
            let v = classify_niche(&g);
            let lines = [
                ("competition_semiorder", v.is_competition_semiorder),
                ("competition_interval", v.is_competition_interval),
                ("cce_semiorder", v.is_cce_semiorder),
                ("cce_interval", v.is_cce_interval),
                ("niche_semiorder", v.is_niche_semiorder),
                ("niche_interval", v.is_niche_interval),
            ];
            wl(out, "verdict {");
            for (k, b) in lines {
                wl(out, &format!("  {k}: {b}"));
            }
            let shapes: Vec<String> =
                v.niche_descriptors.iter().map(|d| d.to_string()).collect();
            wl(out, &format!("  niche_shapes: {}", shapes.join(" ")));
            if let Some(c) = v.competition_descriptor {
                wl(out, &format!("  clique_isolated: {},{}", c.r, c.q));
            }
            wl(out, "}");
            Ok(0)
        }
        Command::Witness { model, shape } => {
            let d = parse_shape(&shape)?;
            let n = d.vertex_count();
            let names = block_names(n);
            let rep = match model {
                Model::Semiorder => {
                    let r = niche_witness_semiorder(&d).map_err(|e| e.to_string())?;
                    RepresentationDocument::Semiorder {
                        delta: r.delta,
                        f: names.iter().cloned().zip(r.f).collect(),
                    }
                }
                Model::Interval => {
                    let r = niche_witness_interval(&d).map_err(|e| e.to_string())?;
                    RepresentationDocument::Interval {
                        j: names.iter().cloned().zip(r.intervals).collect(),
                    }
                }
            };
            let _ = out.write_all(serialize_representation(&rep).as_bytes());
            Ok(0)
        }
        Command::Verify { theorem, n_max, shards } => {
            let theorem = Theorem::from_id(theorem)
                .ok_or_else(|| format!("unknown theorem {theorem}, expected 1..4"))?;
            let report = verify_theorem(theorem, n_max, shards).map_err(|e| e.to_string())?;
            print_report(out, &report);
            Ok(if report.passed() { 0 } else { 3 })
        }
    }
}

fn emit_named(out: &mut impl Write, doc: &NamedGraphDocument, dot: bool) {
    let text = if dot { emit_dot(doc) } else { serialize_named_graph(doc) };
    let _ = out.write_all(text.as_bytes());
}

fn wl(out: &mut impl Write, line: &str) {
    let _ = writeln!(out, "{line}");
}

fn print_analysis(out: &mut impl Write, a: &RepresentationAnalysis, names: &[String]) {
    wl(out, "analysis {");
    let case = match a.case_id {
        CaseId::NoArcs => "no-arcs",
        CaseId::TwoCliqueCase => "two-cliques",
        CaseId::GammaCase => "gamma",
    };
    wl(out, &format!("  case: {case}"));
    wl(out, &format!("  r1: {}", a.r1));
    wl(out, &format!("  r2: {}", a.r2));
    for (i, part) in a.parts.iter().enumerate() {
        let members: Vec<&str> = part.iter().map(|&v| names[v].as_str()).collect();
        wl(out, &format!("  V{}: {}", i + 1, members.join(" ")));
    }
    wl(out, &format!("  predicted: {}", a.predicted));
    wl(out, "}");
}

fn print_report(out: &mut impl Write, report: &VerificationReport) {
    wl(out, "verify {");
    wl(out, &format!("  theorem: {}", report.theorem.id()));
    wl(out, &format!("  n_max: {}", report.n_max));
    for s in &report.per_n {
        wl(
            out,
            &format!(
                "  n={}: digraphs={} produced={} predicted={} missing={} unexpected={}",
                s.n,
                s.enumerated_digraphs,
                s.produced_classes,
                s.predicted_classes,
                s.missing.len(),
                s.unexpected.len()
            ),
        );
    }
    wl(
        out,
        &format!("  verdict: {}", if report.passed() { "pass" } else { "fail" }),
    );
    wl(out, "}");
}

fn parse_shape(spec: &str) -> Result<NicheClassDescriptor, String> {
    let (name, params) = spec
        .split_once(':')
        .ok_or_else(|| format!("shape spec {spec:?} must look like name:params"))?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad parameter {p:?}")))
        .collect::<Result<_, _>>()?;
    let wrong_arity =
        |want: usize| format!("shape {name:?} takes {want} parameters, got {}", nums.len());
    let d = match name {
        "edgeless" => {
            if nums.len() != 1 {
                return Err(wrong_arity(1));
            }
            NicheClassDescriptor::edgeless(nums[0])
        }
        "two-cliques" => {
            if nums.len() != 2 {
                return Err(wrong_arity(2));
            }
            NicheClassDescriptor::two_cliques(nums[0], nums[1])
        }
        "two-cliques-isolated" => {
            if nums.len() != 3 {
                return Err(wrong_arity(3));
            }
            NicheClassDescriptor::two_cliques_plus_isolated(nums[0], nums[1], nums[2])
        }
        "gamma" => {
            if nums.len() != 4 {
                return Err(wrong_arity(4));
            }
            NicheClassDescriptor::gamma(nums[0], nums[1], nums[2], nums[3])
        }
        other => return Err(format!("unknown shape {other:?}")),
    };
    d.map_err(|e| e.to_string())
}

/// Deterministic vertex names `v00, v01, ...` padded so that sorted name
/// order equals index order.
pub fn block_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}
