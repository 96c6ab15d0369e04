//! Command-line front end.
//!
//! ```text
//! stable-kneser <vertices|classes|sck|tree|cycle|verify|stats|claims>
//!     --n N --k K --s S [--format text|jsonl|dot] [--in FILE] [--out FILE]
//! ```
//!
//! Exit codes: 0 success, 1 not Hamiltonian or a failed check, 2 invalid
//! parameters or usage.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classgraph::build_sck;
use crate::enumerate::{enumerate_classes, enumerate_vertices};
use crate::error::Error;
use crate::format::{
    edge_records, parse_cycle, tree_records, write_jsonl, write_sck_dot, write_tree_dot, ClassRecord, VertexRecord,
};
use crate::hamilton::Construction;
use crate::model::Params;
use crate::verify::{replay_claims, verify_cycle, ClaimStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Vertices,
    Classes,
    Sck,
    Tree,
    Cycle,
    Verify,
    Stats,
    Claims,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Jsonl,
    Dot,
}

/// Parsed invocation.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub n: u32,
    pub k: u32,
    pub s: u32,
    pub command: Command,
    pub format: Format,
    pub input_path: Option<PathBuf>,
    pub output_path: Option<PathBuf>,
}

#[derive(Parser)]
#[command(name = "stable-kneser", version, about = "Hamiltonian cycles in s-stable Kneser graphs")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Stream every vertex in lexicographic order
    Vertices(Common),
    /// List rotation classes with their orders
    Classes(Common),
    /// Friend-class graph with witnesses
    Sck(Common),
    /// BFS spanning tree of the friend-class graph
    Tree(Common),
    /// Construct a Hamiltonian cycle
    Cycle(Common),
    /// Check a cycle read from --in or standard input
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Counts and degree/order histograms
    Stats(Common),
    /// Replay the structural claims on the instance
    Claims(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    s: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CliConfig {
    /// Parses process-style arguments (the first item is the program name).
    pub fn try_parse_from<I, T>(args: I) -> Result<CliConfig, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let (command, common, input_path) = match cli.command {
            Sub::Vertices(c) => (Command::Vertices, c, None),
            Sub::Classes(c) => (Command::Classes, c, None),
            Sub::Sck(c) => (Command::Sck, c, None),
            Sub::Tree(c) => (Command::Tree, c, None),
            Sub::Cycle(c) => (Command::Cycle, c, None),
            Sub::Verify { common, input } => (Command::Verify, common, input),
            Sub::Stats(c) => (Command::Stats, c, None),
            Sub::Claims(c) => (Command::Claims, c, None),
        };
        Ok(CliConfig {
            n: common.n,
            k: common.k,
            s: common.s,
            command,
            format: common.format,
            input_path,
            output_path: common.out,
        })
    }
}

enum Failure {
    Usage(String),
    Check(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::MalformedSet(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    match CliConfig::try_parse_from(std::env::args_os()) {
        Ok(config) => run(&config),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                2
            } else {
                0
            }
        }
    }
}

/// Runs against the real standard streams (or `--in` / `--out`).
pub fn run(config: &CliConfig) -> i32 {
    let stdin = io::stdin();
    let stderr = io::stderr();
    let sink: Box<dyn Write> = match &config.output_path {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                let _ = writeln!(stderr.lock(), "error: cannot create {}: {e}", path.display());
                return 2;
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    run_with(config, &mut stdin.lock(), &mut BufWriter::new(sink), &mut stderr.lock())
}

/// Runs with explicit streams; `input` is read only by `verify` without `--in`.
pub fn run_with(config: &CliConfig, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = dispatch(config, input, out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(config: &CliConfig, input: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = Params::new(config.n, config.k, config.s)?;
    if config.format == Format::Dot && !matches!(config.command, Command::Sck | Command::Tree) {
        return Err(Failure::Usage("--format dot is only available for sck and tree".into()));
    }
    let jsonl = config.format == Format::Jsonl;
    match config.command {
        Command::Vertices => {
            for v in enumerate_vertices(&p) {
                if jsonl {
                    write_jsonl(out, &VertexRecord::from(&v))?;
                } else {
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Classes => {
            for c in enumerate_classes(&p).iter() {
                if jsonl {
                    write_jsonl(out, &ClassRecord::from(c))?;
                } else {
                    writeln!(out, "{} order={} base={}", c.necklace, c.order, c.base_vertex)?;
                }
            }
        }
        Command::Sck => {
            let g = build_sck(&p);
            match config.format {
                Format::Dot => write_sck_dot(out, &g)?,
                Format::Jsonl => {
                    for record in edge_records(&g) {
                        write_jsonl(out, &record)?;
                    }
                }
                Format::Text => {
                    for e in &g.edges {
                        let w = &e.witness;
                        writeln!(
                            out,
                            "{} -> {} i={} witness {} {}",
                            w.from_class.necklace, w.to_class.necklace, w.move_index, w.witness_u, w.witness_v
                        )?;
                    }
                }
            }
        }
        Command::Tree => {
            let c = Construction::build(&p)?;
            match config.format {
                Format::Dot => write_tree_dot(out, &c.sck, &c.tree)?,
                Format::Jsonl => {
                    for record in tree_records(&c.sck, &c.tree, &c.indexing) {
                        write_jsonl(out, &record)?;
                    }
                }
                Format::Text => {
                    for &idx in &c.tree.order {
                        let class = c.sck.class(idx);
                        let parent = match c.tree.parent[idx] {
                            Some((b, _)) => c.sck.class(b).necklace.to_string(),
                            None => "root".to_string(),
                        };
                        writeln!(
                            out,
                            "level={} {} <- {} anchor={}",
                            c.tree.level[idx], class.necklace, parent, c.indexing.anchors[idx]
                        )?;
                    }
                }
            }
        }
        Command::Cycle => {
            let c = Construction::build(&p)?;
            for v in &c.cycle {
                if jsonl {
                    write_jsonl(out, &VertexRecord::from(v))?;
                } else {
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Verify => {
            let mut text = String::new();
            match &config.input_path {
                Some(path) => {
                    File::open(path)?.read_to_string(&mut text)?;
                }
                None => {
                    input.read_to_string(&mut text)?;
                }
            }
            let seq = parse_cycle(&text)?;
            let report = verify_cycle(&p, &seq);
            if jsonl {
                write_jsonl(out, &report)?;
            } else {
                writeln!(
                    out,
                    "{} entries={} expected={} missing={} duplicates={} bad_edges={} bad_vertices={}",
                    if report.ok { "ok" } else { "FAILED" },
                    report.vertex_count,
                    report.expected_count,
                    report.missing,
                    report.duplicates,
                    report.bad_edges.len(),
                    report.bad_vertices.len()
                )?;
            }
            return Ok(if report.ok { 0 } else { 1 });
        }
        Command::Stats => {
            let stats = Stats::collect(&p);
            if jsonl {
                write_jsonl(out, &stats)?;
            } else {
                stats.write_text(out)?;
            }
        }
        Command::Claims => {
            let report = replay_claims(&p);
            if jsonl {
                write_jsonl(out, &report)?;
            } else {
                for c in &report.claims {
                    let tag = match c.status {
                        ClaimStatus::Pass => "PASS",
                        ClaimStatus::Fail => "FAIL",
                        ClaimStatus::Skipped => "SKIP",
                    };
                    writeln!(out, "{tag} {}: {}", c.name, c.detail)?;
                }
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct Stats {
    params: Params,
    vertices: u64,
    classes: usize,
    sck_edges: usize,
    order_histogram: BTreeMap<u32, usize>,
    degree_histogram: BTreeMap<usize, usize>,
}

impl Stats {
    fn collect(p: &Params) -> Stats {
        let g = build_sck(p);
        let mut order_histogram = BTreeMap::new();
        let mut degree_histogram = BTreeMap::new();
        for (idx, c) in g.catalog.iter().enumerate() {
            *order_histogram.entry(c.order).or_default() += 1;
            *degree_histogram.entry(g.degree(idx)).or_default() += 1;
        }
        Stats {
            params: *p,
            vertices: g.catalog.total_vertices,
            classes: g.catalog.len(),
            sck_edges: g.edges.len(),
            order_histogram,
            degree_histogram,
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        let hist = |h: Vec<String>| h.join(" ");
        writeln!(out, "params n={} k={} s={} r={}", self.params.n, self.params.k, self.params.s, self.params.r)?;
        writeln!(out, "vertices {}", self.vertices)?;
        writeln!(out, "classes {}", self.classes)?;
        writeln!(out, "sck_edges {}", self.sck_edges)?;
        writeln!(
            out,
            "class_orders {}",
            hist(self.order_histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect())
        )?;
        writeln!(
            out,
            "sck_degrees {}",
            hist(self.degree_histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect())
        )
    }
}
