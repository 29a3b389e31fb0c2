//! Command-line front end. `run` is the whole program minus process exit,
//! so it can be driven from tests with in-memory streams.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classes::{
    asteroidal_triple, chordless_cycle, is_bipartite, is_split, odd_cycle,
};
use crate::dh::{hellify_dh, pruning_sequence};
use crate::error::Error;
use crate::generators::{
    cocomparability_family, crown_family, fixture, random_chordal, random_connected, random_dh,
    split_family,
};
use crate::graph::{parse_edge_list, power, Graph, DEFAULT_MAX_VERTICES};
use crate::helly::{
    maximal_two_sets_with_budget, pseudo_modular_violation, TwoSet, DEFAULT_CLIQUE_BUDGET,
};
use crate::hyperbolicity::{delta_with_budget, DEFAULT_QUADRUPLE_BUDGET};
use crate::tight_span::{
    build_injective_hull_with, helly_gap, hull_dot, hull_json, nearest_real_distance, HullConfig,
    MetricFunction,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hellify", version, about = "Injective hulls and Helly recognition for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the injective hull by extremal-function enumeration.
    Hull(HullArgs),
    /// Build the injective hull of a distance-hereditary graph.
    HellifyDh(OutputArgs),
    /// Report membership in each supported graph class.
    Recognize(RecognizeArgs),
    /// Exact hyperbolicity with a witness quadruple.
    Hyperbolicity(AnalyzeArgs),
    /// List maximal 2-sets and their suspension witnesses.
    TwoSets(AnalyzeArgs),
    /// Write a generated graph in edge-list format.
    Generate(GenerateArgs),
    /// Convert an edge-list file to DOT.
    ExportDot(OutputArgs),
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Edge-list file, or `-` for stdin.
    file: String,
    /// Work budget for the underlying enumeration.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct HullArgs {
    #[command(flatten)]
    input: AnalyzeArgs,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    file: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RecognizeArgs {
    #[command(flatten)]
    input: AnalyzeArgs,
    /// Print a certificate next to each answer where one exists.
    #[arg(long)]
    witness: bool,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// split, cocomparability, crown, random-chordal, random-dh,
    /// random-connected, or a fixture name (house, domino, gem,
    /// fig4-permutation, C<k>, W<k>, K<n>, P<n>).
    family: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability for random-connected.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Json,
    Dot,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Parse { .. }
        | Error::EmptyGraph
        | Error::LoopEdge(_)
        | Error::VertexOutOfRange { .. }
        | Error::UnknownFixture(_)
        | Error::InvalidParameter(_) => EXIT_USAGE,
        _ => EXIT_PRECONDITION,
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(io.stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_graph(&mut self, file: &str) -> Result<Graph, Failure> {
        let text = if file == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            s
        } else {
            std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?
        };
        Ok(parse_edge_list(&text)?)
    }

    /// Writes `body` to `output` when given, otherwise to stdout.
    fn emit(&mut self, body: &str, output: &Option<PathBuf>) -> Result<(), Failure> {
        match output {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
            None => Ok(self.stdout.write_all(body.as_bytes())?),
        }
    }

    /// The summary goes to stdout unless stdout carries the document.
    fn summary(&mut self, line: &str, document_on_stdout: bool) -> Result<(), Failure> {
        if document_on_stdout {
            writeln!(self.stderr, "{line}")?;
        } else {
            writeln!(self.stdout, "{line}")?;
        }
        Ok(())
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<(), Failure> {
    match command {
        Command::Hull(args) => hull(args, io),
        Command::HellifyDh(args) => hellify(args, io),
        Command::Recognize(args) => recognize(args, io),
        Command::Hyperbolicity(args) => {
            let g = io.read_graph(&args.file)?;
            let report = delta_with_budget(&g, args.budget.unwrap_or(DEFAULT_QUADRUPLE_BUDGET))?;
            writeln!(io.stdout, "{report}")?;
            Ok(())
        }
        Command::TwoSets(args) => {
            let g = io.read_graph(&args.file)?;
            let sets = maximal_two_sets_with_budget(&g, args.budget.unwrap_or(DEFAULT_CLIQUE_BUDGET))?;
            let mut out = String::new();
            for s in &sets {
                let ids: Vec<String> = s.members.iter().map(|v| v.to_string()).collect();
                let _ = match s.suspended_by {
                    Some(v) => writeln!(out, "{} suspended_by={v}", ids.join(" ")),
                    None => writeln!(out, "{} UNSUSPENDED", ids.join(" ")),
                };
            }
            let open = sets.iter().filter(|s| !s.is_suspended()).count();
            let _ = writeln!(out, "total={} unsuspended={open}", sets.len());
            io.stdout.write_all(out.as_bytes())?;
            Ok(())
        }
        Command::Generate(args) => generate(args, io),
        Command::ExportDot(args) => {
            let g = io.read_graph(&args.file)?;
            io.emit(&g.to_dot(), &args.output)
        }
    }
}

fn hull(args: HullArgs, io: &mut Io<'_>) -> Result<(), Failure> {
    let g = io.read_graph(&args.input.file)?;
    let mut config = HullConfig::default();
    if let Some(b) = args.input.budget {
        config.node_budget = b;
    }
    let h = build_injective_hull_with(&g, &config)?;
    let summary = format!(
        "n_real={} n_helly={} helly_gap={}",
        h.n_real(),
        h.n_helly(),
        helly_gap(&h)
    );
    if let Some(format) = args.format {
        let body = match format {
            Format::Json => h.to_json(),
            Format::Dot => h.to_dot(),
            Format::Edgelist => h.hull.to_edge_list(),
        };
        io.emit(&body, &args.output)?;
    }
    io.summary(&summary, args.format.is_some() && args.output.is_none())
}

fn hellify(args: OutputArgs, io: &mut Io<'_>) -> Result<(), Failure> {
    let g = io.read_graph(&args.file)?;
    let r = hellify_dh(&g)?;
    let n_real = r.real_map.len();
    let mut real = vec![false; r.hull.n()];
    for &v in &r.real_map {
        real[v] = true;
    }
    let gap = nearest_real_distance(&r.hull, &real)
        .into_iter()
        .max()
        .unwrap_or(0);
    let summary = format!(
        "n_real={n_real} n_helly={} helly_gap={gap} edges={}",
        r.hull.n() - n_real,
        r.hull.m()
    );
    if let Some(format) = args.format {
        let body = match format {
            Format::Json => {
                let dm = r.hull.distances();
                let vectors: Vec<MetricFunction> = (0..r.hull.n())
                    .map(|h| MetricFunction(r.real_map.iter().map(|&z| dm.get(h, z) as u32).collect()))
                    .collect();
                hull_json(&r.hull, &real, &vectors, Some(&r.added))
            }
            Format::Dot => hull_dot(&r.hull, &real),
            Format::Edgelist => r.hull.to_edge_list(),
        };
        io.emit(&body, &args.output)?;
    }
    io.summary(&summary, args.format.is_some() && args.output.is_none())?;
    writeln!(io.stderr, "size bound: {}", r.bound_report())?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn tuple(vs: &[usize]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

fn recognize(args: RecognizeArgs, io: &mut Io<'_>) -> Result<(), Failure> {
    let g = io.read_graph(&args.input.file)?;
    let budget = args.input.budget.unwrap_or(DEFAULT_CLIQUE_BUDGET);
    let sq = power(&g, 2);
    let two_sets = maximal_two_sets_with_budget(&g, budget)?;
    let unsuspended: Option<&TwoSet> = two_sets.iter().find(|s| !s.is_suspended());
    let mut lines: Vec<(String, bool, Option<String>)> = Vec::new();

    let cycle = chordless_cycle(&g);
    lines.push(("chordal".into(), cycle.is_none(), cycle.map(|c| format!("cycle={}", tuple(&c)))));

    let bip = is_bipartite(&g);
    let bip_witness = match &bip {
        Some(b) => Some(format!("left={} right={}", tuple(&b.left), tuple(&b.right))),
        None => odd_cycle(&g).map(|c| format!("odd_cycle={}", tuple(&c))),
    };
    lines.push(("bipartite".into(), bip.is_some(), bip_witness));

    let split = is_split(&g);
    lines.push((
        "split".into(),
        split.is_some(),
        split.map(|(c, i)| format!("clique={} independent={}", tuple(&c), tuple(&i))),
    ));

    let at = asteroidal_triple(&g);
    lines.push((
        "at-free".into(),
        at.is_none(),
        at.map(|(a, b, c)| format!("asteroidal_triple={}", tuple(&[a, b, c]))),
    ));

    let seq = pruning_sequence(&g);
    lines.push((
        "distance-hereditary".into(),
        seq.is_some(),
        seq.map(|s| format!("order={}", tuple(&s.order()))),
    ));

    let sq_cycle = chordless_cycle(&sq);
    let square_chordal = sq_cycle.is_none();
    lines.push((
        "square-chordal".into(),
        square_chordal,
        sq_cycle.map(|c| format!("square_cycle={}", tuple(&c))),
    ));

    let pm = pseudo_modular_violation(&g);
    let helly_witness = match (pm, unsuspended) {
        (Some((u, v, w)), _) => Some(format!("pseudo_modular_violation={}", tuple(&[u, v, w]))),
        (None, Some(s)) => Some(format!("unsuspended={}", tuple(&s.members))),
        (None, None) => None,
    };
    lines.push(("helly".into(), pm.is_none() && unsuspended.is_none(), helly_witness));

    let dually_witness = match unsuspended {
        Some(s) => Some(format!("unsuspended={}", tuple(&s.members))),
        None => chordless_cycle(&sq).map(|c| format!("square_cycle={}", tuple(&c))),
    };
    lines.push(("dually-chordal".into(), unsuspended.is_none() && square_chordal, dually_witness));

    let mut out = String::new();
    for (name, ok, witness) in lines {
        let _ = write!(out, "{name}={}", yes_no(ok));
        if args.witness {
            if let Some(w) = witness {
                let _ = write!(out, " {w}");
            }
        }
        out.push('\n');
    }
    io.stdout.write_all(out.as_bytes())?;
    Ok(())
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    labels: Vec<String>,
}

fn generate(args: GenerateArgs, io: &mut Io<'_>) -> Result<(), Failure> {
    let need = |v: Option<usize>, flag: &str| match v {
        None => Err(Failure::Usage(format!("`{}` requires --{flag}", args.family))),
        Some(x) if x > DEFAULT_MAX_VERTICES => Err(Failure::Usage(format!(
            "--{flag} {x} exceeds the {DEFAULT_MAX_VERTICES}-vertex limit"
        ))),
        Some(x) => Ok(x),
    };
    let mut comment = None;
    let g = match args.family.as_str() {
        "split" => split_family(need(args.k, "k")?)?,
        "cocomparability" => {
            let (g, order) = cocomparability_family(need(args.k, "k")?)?;
            comment = Some(format!("# cocomparability order {}\n", tuple(&order)));
            g
        }
        "crown" => crown_family(need(args.k, "k")?)?,
        "random-chordal" => random_chordal(need(args.n, "n")?, args.seed),
        "random-dh" => random_dh(need(args.n, "n")?, args.seed),
        "random-connected" => {
            if !(0.0..=1.0).contains(&args.p) {
                return Err(Failure::Usage("--p must lie in [0, 1]".into()));
            }
            random_connected(need(args.n, "n")?, args.p, args.seed)
        }
        name => fixture(name)?,
    };
    let body = match args.format.unwrap_or(Format::Edgelist) {
        Format::Edgelist => comment.unwrap_or_default() + &g.to_edge_list(),
        Format::Dot => g.to_dot(),
        Format::Json => {
            let doc = GraphJson {
                n: g.n(),
                edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
                labels: (0..g.n()).map(|v| g.label(v)).collect(),
            };
            serde_json::to_string_pretty(&doc).expect("graph JSON serializes") + "\n"
        }
    };
    io.emit(&body, &args.output)
}
