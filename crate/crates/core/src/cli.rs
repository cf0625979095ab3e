//! The `cyclic5` command line. Exit codes: 0 success or a true verdict,
//! 1 a false verdict, 2 a usage or input error, 3 an exhausted search
//! budget.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::connectivity::{
    is_cyclically_5_connected, is_cyclically_k_connected, is_dodecahedrally_connected, is_planar, is_quad_connected,
};
use crate::embedding::{find_embedding, FixConstraint, SearchOutcome, DEFAULT_BUDGET};
use crate::expansions::{ExpansionStep, ExpansionType, StepKind};
use crate::families::is_biladder;
use crate::generator::{brute_c5c, brute_cubic_connected, generate_catalog, Catalog, Ops};
use crate::graph::{from_adjacency_text, from_graph6, to_adjacency_text, to_graph6, Graph};
use crate::verify::{
    base_containment_campaign, handle_or_circuit_campaign, lemma_suite, one_extension_campaign, quad_connected_graphs,
    two_extension_campaign, typed_expansion_campaign, Campaign, CampaignConfig, LemmaConfig, Outcome,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Overrides where `gen` writes and `verify` looks for a saved catalog.
pub const CATALOG_ENV: &str = "CYCLIC5_CATALOG_DIR";

#[derive(Parser, Debug)]
#[command(name = "cyclic5", version, about = "Cyclically 5-connected cubic graphs")]
struct Cli {
    /// graph file format
    #[arg(long, value_enum, global = true, default_value_t = Format::Graph6)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(name = "g6")]
    Graph6,
    Adj,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Test a predicate on each input graph; prints true or false per graph.
    Check {
        #[arg(long, value_enum)]
        pred: Pred,
        /// input file, `-` for standard input
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Build the catalog by handle and circuit expansion.
    Gen {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "handle,circuit")]
        ops: Ops,
        /// defaults to $CYCLIC5_CATALOG_DIR
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Every connected cubic graph on n vertices, optionally filtered.
    Brute {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Search for a topological embedding of the guest in the host.
    Embed {
        #[arg(long)]
        guest: String,
        #[arg(long)]
        host: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// also write the embedding here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one expansion to the input graph.
    Expand {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, num_args = 1.., value_delimiter = ',', allow_negative_numbers = false)]
        args: Vec<usize>,
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Run a theorem over the catalog, or the lemma batteries.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        max_n: Option<usize>,
        /// seed for sampling pairs with hosts above 14 vertices
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// write summary.tsv and witness files here
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Pred {
    C4c,
    C5c,
    Quad,
    Dodec,
    Planar,
    Biladder,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Filter {
    C5c,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Handle,
    Circuit,
    One,
    Amp,
    #[value(name = "typeA")]
    TypeA,
    #[value(name = "typeB")]
    TypeB,
    #[value(name = "typeC")]
    TypeC,
    #[value(name = "typeD")]
    TypeD,
    #[value(name = "typeE")]
    TypeE,
    #[value(name = "typeF")]
    TypeF,
    #[value(name = "typeG")]
    TypeG,
    #[value(name = "typeH")]
    TypeH,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    #[value(name = "1.6", alias = "base-containment")]
    BaseContainment,
    #[value(name = "1.7", alias = "closure")]
    Closure,
    #[value(name = "3.6", alias = "one-extension")]
    OneExtension,
    #[value(name = "4.6", alias = "typed-expansion")]
    TypedExpansion,
    #[value(name = "6.1", alias = "two-extension-dodecahedral")]
    TwoExtensionDodecahedral,
    #[value(name = "6.2", alias = "two-extension")]
    TwoExtension,
    #[value(name = "7.6", alias = "handle-or-circuit")]
    HandleOrCircuit,
    Lemmas,
}

/// Failure that ends a command: the message goes to stderr on one line.
struct Fail(i32, String);

fn usage(msg: impl std::fmt::Display) -> Fail {
    Fail(EXIT_USAGE, msg.to_string())
}

/// Parse `args` (program name first) and run. Output goes to `out`,
/// diagnostics to `err`.
pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let text = e.render().to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli, input, out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {}", msg.replace('\n', " "));
            code
        }
    }
}

fn dispatch(cli: Cli, input: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Fail> {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Check { pred, input: src } => check(pred, &read_graphs(&src, fmt, input)?, out),
        Cmd::Gen { max_n, ops, out: dir, threads } => {
            let dir = match dir.or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from)) {
                Some(d) => d,
                None => return Err(usage(format!("--out is required when {CATALOG_ENV} is unset"))),
            };
            with_threads(threads, out, |o| gen(max_n, ops, &dir, o))
        }
        Cmd::Brute { n, filter, out: file, threads } => with_threads(threads, out, |o| brute(n, filter, &file, fmt, o)),
        Cmd::Embed { guest, host, budget, out: file } => {
            let g = single(&guest, fmt, input)?;
            let h = single(&host, fmt, input)?;
            embed(&g, &h, budget, file.as_deref(), out)
        }
        Cmd::Expand { kind, args, input: src } => {
            let g = single(&src, fmt, input)?;
            let h = expand(&g, kind, args)?;
            write_graph(out, &h, fmt)?;
            Ok(EXIT_OK)
        }
        Cmd::Verify { theorem, max_n, seed, budget, out: dir, threads } => {
            with_threads(threads, out, |o| verify(theorem, max_n, seed, budget, dir.as_deref(), o))
        }
    }
}

/// Run `f` on a pool of `threads` workers, buffering its output.
fn with_threads<F>(threads: Option<usize>, out: &mut dyn Write, f: F) -> Result<i32, Fail>
where
    F: FnOnce(&mut dyn Write) -> Result<i32, Fail> + Send,
{
    let mut buf: Vec<u8> = Vec::new();
    let res = match threads {
        None => f(&mut buf),
        Some(0) => return Err(usage("--threads must be positive")),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().map_err(usage)?;
            pool.install(|| f(&mut buf))
        }
    };
    out.write_all(&buf).map_err(io_fail)?;
    res
}

fn io_fail(e: io::Error) -> Fail {
    Fail(EXIT_USAGE, e.to_string())
}

fn read_source(src: &str, input: &mut dyn Read) -> Result<String, Fail> {
    if src == "-" {
        let mut s = String::new();
        input.read_to_string(&mut s).map_err(io_fail)?;
        Ok(s)
    } else {
        fs::read_to_string(src).map_err(|e| usage(format!("{src}: {e}")))
    }
}

/// Graphs in `text`: one graph6 string per line, or adjacency blocks each
/// starting with an `n=` line.
pub fn parse_graphs(text: &str, adj: bool) -> Result<Vec<Graph>, String> {
    if adj {
        let mut blocks: Vec<String> = Vec::new();
        for line in text.lines() {
            if line.trim_start().starts_with("n=") {
                blocks.push(String::new());
            }
            match blocks.last_mut() {
                Some(b) => {
                    b.push_str(line);
                    b.push('\n');
                }
                None if line.trim().is_empty() || line.trim_start().starts_with('#') => {}
                None => return Err(format!("expected an n= line, found {:?}", line.trim())),
            }
        }
        blocks.iter().map(|b| from_adjacency_text(b).map_err(|e| e.to_string())).collect()
    } else {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| from_graph6(l).map_err(|e| format!("{l:?}: {e}")))
            .collect()
    }
}

fn read_graphs(src: &str, fmt: Format, input: &mut dyn Read) -> Result<Vec<Graph>, Fail> {
    let text = read_source(src, input)?;
    let gs = parse_graphs(&text, fmt == Format::Adj).map_err(usage)?;
    if gs.is_empty() {
        return Err(usage(format!("{src}: no graph found")));
    }
    Ok(gs)
}

fn single(src: &str, fmt: Format, input: &mut dyn Read) -> Result<Graph, Fail> {
    let mut gs = read_graphs(src, fmt, input)?;
    if gs.len() != 1 {
        return Err(usage(format!("{src}: expected one graph, found {}", gs.len())));
    }
    Ok(gs.pop().unwrap())
}

fn render(g: &Graph, fmt: Format) -> String {
    match fmt {
        Format::Graph6 => format!("{}\n", to_graph6(g)),
        Format::Adj => to_adjacency_text(g),
    }
}

fn write_graph(out: &mut dyn Write, g: &Graph, fmt: Format) -> Result<(), Fail> {
    out.write_all(render(g, fmt).as_bytes()).map_err(io_fail)
}

fn check(pred: Pred, graphs: &[Graph], out: &mut dyn Write) -> Result<i32, Fail> {
    let mut all = true;
    for g in graphs {
        let v = match pred {
            Pred::C4c => is_cyclically_k_connected(g, 4),
            Pred::C5c => is_cyclically_5_connected(g),
            Pred::Quad => is_quad_connected(g),
            // a graph that is not c5c is not dodecahedrally connected
            Pred::Dodec => is_dodecahedrally_connected(g).unwrap_or(false),
            Pred::Planar => is_planar(g),
            Pred::Biladder => is_biladder(g).is_some(),
        };
        all &= v;
        writeln!(out, "{v}").map_err(io_fail)?;
    }
    Ok(if all { EXIT_OK } else { EXIT_FALSE })
}

fn gen(max_n: usize, ops: Ops, dir: &Path, out: &mut dyn Write) -> Result<i32, Fail> {
    if !(10..=64).contains(&max_n) {
        return Err(usage("--max-n must lie between 10 and 64"));
    }
    if !ops.handle && !ops.circuit {
        return Err(usage("--ops names no operation"));
    }
    let cat = generate_catalog(max_n, ops).map_err(usage)?;
    cat.save(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    for n in (10..=max_n).step_by(2) {
        writeln!(out, "n={n}\t{}", cat.of_order(n).len()).map_err(io_fail)?;
    }
    writeln!(out, "total\t{}", cat.len()).map_err(io_fail)?;
    Ok(EXIT_OK)
}

fn brute(n: usize, filter: Option<Filter>, file: &Path, fmt: Format, out: &mut dyn Write) -> Result<i32, Fail> {
    let gs = match filter {
        Some(Filter::C5c) => brute_c5c(n),
        None => brute_cubic_connected(n),
    }
    .map_err(usage)?;
    let text: String = gs.iter().map(|g| render(g, fmt)).collect();
    fs::write(file, text).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    writeln!(out, "n={n}\t{}", gs.len()).map_err(io_fail)?;
    Ok(EXIT_OK)
}

fn embed(g: &Graph, h: &Graph, budget: u64, file: Option<&Path>, out: &mut dyn Write) -> Result<i32, Fail> {
    match find_embedding(g, h, &FixConstraint::null(), budget) {
        SearchOutcome::Found(eta) => {
            let text = eta.to_text();
            if let Some(f) = file {
                fs::write(f, &text).map_err(|e| usage(format!("{}: {e}", f.display())))?;
            }
            out.write_all(text.as_bytes()).map_err(io_fail)?;
            Ok(EXIT_OK)
        }
        SearchOutcome::NotFound => {
            writeln!(out, "no embedding").map_err(io_fail)?;
            Ok(EXIT_FALSE)
        }
        SearchOutcome::BudgetExceeded => {
            writeln!(out, "budget-exceeded").map_err(io_fail)?;
            Ok(EXIT_BUDGET)
        }
    }
}

fn expand(g: &Graph, kind: Kind, args: Vec<usize>) -> Result<Graph, Fail> {
    let (step_kind, delta) = match kind {
        Kind::Handle => (StepKind::Handle, 2),
        Kind::One => (StepKind::OneExtension, 2),
        Kind::Amp => (StepKind::Ampersand, 4),
        Kind::Circuit => (StepKind::Circuit, 10),
        typed => {
            let t = ExpansionType::ALL[typed as usize - Kind::TypeA as usize];
            (StepKind::Typed(t), t.delta())
        }
    };
    if let Some(&v) = args.iter().find(|&&v| v >= g.order()) {
        return Err(usage(format!("vertex {v} is out of range for a graph on {} vertices", g.order())));
    }
    let n = g.order();
    let step = ExpansionStep { kind: step_kind, args, new_vertices: (n..n + delta).collect() };
    step.apply(g).map(|(h, _)| h).map_err(usage)
}

fn catalog_graphs(max_n: usize) -> Result<Vec<Graph>, Fail> {
    let saved = std::env::var_os(CATALOG_ENV)
        .map(PathBuf::from)
        .filter(|d| d.join("index.txt").exists())
        .and_then(|d| Catalog::load(&d).ok())
        .filter(|c| c.max_n >= max_n);
    let cat = match saved {
        Some(c) => c,
        None => generate_catalog(max_n, Ops::ALL).map_err(usage)?,
    };
    let mut gs: Vec<&crate::generator::CatalogEntry> = cat.entries().filter(|e| e.graph.order() <= max_n).collect();
    gs.sort_by(|a, b| (a.graph.order(), &a.form).cmp(&(b.graph.order(), &b.form)));
    Ok(gs.into_iter().map(|e| e.graph.clone()).collect())
}

fn verify(
    theorem: TheoremArg,
    max_n: Option<usize>,
    seed: u64,
    budget: u64,
    dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let default_n = match theorem {
        TheoremArg::BaseContainment | TheoremArg::Closure => 14,
        _ => 12,
    };
    let max_n = max_n.unwrap_or(default_n);
    if !(10..=crate::generator::BRUTE_MAX).contains(&max_n) {
        return Err(usage(format!("--max-n must lie between 10 and {}", crate::generator::BRUTE_MAX)));
    }
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(io_fail);
    match theorem {
        TheoremArg::Closure => {
            let cat = generate_catalog(max_n, Ops::ALL).map_err(usage)?;
            let mut equal = true;
            for n in (10..=max_n).step_by(2) {
                let brute: std::collections::BTreeSet<_> =
                    brute_c5c(n).map_err(usage)?.iter().map(crate::graph::canonical_form).collect();
                let gen = cat.forms_of_order(n);
                let diff = gen.symmetric_difference(&brute).count();
                equal &= diff == 0;
                w(out, format!("n={n}\tcatalog={}\tbrute={}\tsymmetric-difference={diff}", gen.len(), brute.len()))?;
            }
            w(out, format!("closure\t{}", if equal { "equal" } else { "DIFFERENT" }))?;
            Ok(if equal { EXIT_OK } else { EXIT_FALSE })
        }
        TheoremArg::Lemmas => {
            let cfg = LemmaConfig { max_n, budget, ..LemmaConfig::default() };
            let rep = lemma_suite(&cfg).map_err(usage)?;
            out.write_all(rep.to_text().as_bytes()).map_err(io_fail)?;
            Ok(if rep.passed() {
                EXIT_OK
            } else if rep.results.iter().all(|r| r.violations.is_empty()) {
                EXIT_BUDGET
            } else {
                EXIT_FALSE
            })
        }
        _ => {
            let cfg = CampaignConfig { budget, seed, ..CampaignConfig::default() };
            let graphs = catalog_graphs(max_n)?;
            let camp = match theorem {
                TheoremArg::BaseContainment => base_containment_campaign(&graphs, &cfg),
                TheoremArg::OneExtension => one_extension_campaign(&graphs, &cfg),
                TheoremArg::TypedExpansion => {
                    let guests = quad_connected_graphs(max_n - 2).map_err(usage)?;
                    let guests: Vec<Graph> =
                        guests.into_iter().filter(|g| !crate::graph::quadrangles(g).is_empty()).collect();
                    typed_expansion_campaign(&guests, &graphs, &cfg)
                }
                TheoremArg::TwoExtension => two_extension_campaign(&graphs, false, &cfg),
                TheoremArg::TwoExtensionDodecahedral => two_extension_campaign(&graphs, true, &cfg),
                _ => handle_or_circuit_campaign(&graphs, &cfg),
            }
            .map_err(usage)?;
            out.write_all(camp.to_text().as_bytes()).map_err(io_fail)?;
            w(out, format!("summary\t{}", camp.summary()))?;
            if let Some(dir) = dir {
                write_campaign(&camp, dir)?;
            }
            Ok(match camp.outcome() {
                Outcome::AllWitnessed => EXIT_OK,
                Outcome::Falsified => EXIT_FALSE,
                Outcome::BudgetExceeded => EXIT_BUDGET,
            })
        }
    }
}

/// `summary.tsv` with one record per instance and a witness file for each
/// witness found.
fn write_campaign(camp: &Campaign, dir: &Path) -> Result<(), Fail> {
    let err = |e: io::Error| usage(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(err)?;
    let mut summary = String::from("theorem\tinstance\tverdict\twitness\n");
    for (i, r) in camp.reports.iter().enumerate() {
        let path = match r.verdict.witness() {
            Some(wit) => {
                let name = format!("witness-{i:05}.txt");
                let mut text = format!("label {}\ngraph {}\n", wit.label, to_graph6(&wit.graph));
                for s in &wit.steps {
                    text.push_str(&format!("step {}\n", s.to_line()));
                }
                text.push_str(&wit.embedding.to_text());
                fs::write(dir.join(&name), text).map_err(err)?;
                name
            }
            None => "-".into(),
        };
        summary.push_str(&format!("{}\t{}\t{}\t{path}\n", r.theorem, r.instance, r.verdict));
    }
    fs::write(dir.join("summary.tsv"), summary).map_err(err)
}
