use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hamcert::certificates::validate_outcome;
use hamcert::engine::extract;
use hamcert::family::{generate, FamilySpec};
use hamcert::graph6::{parse_graph6, parse_graph6_lines, write_graph6};
use hamcert::harness::{run_sweep, tightness, GraphSource, PairPolicy, SweepConfig};
use hamcert::invariants::hypothesis_check;
use hamcert::outcome::{CertificateRecord, ExtractionOutcome};
use hamcert::{Error, Graph};

/// Certified Hamilton-path extraction and theorem sweeps.
#[derive(Parser)]
#[command(name = "hamcert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Connectivity, toughness and (P2 ∪ kP1)-freeness of each input graph.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Extract a Hamilton (u,v)-path or a certificate.
    Extract {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// Write the certificate record (one JSON line) here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sweep graphs and check the theorem on every (graph, k).
    Sweep {
        #[command(flatten)]
        input: GraphInput,
        /// k values: `2`, `1,2` or `1..3`.
        #[arg(long, default_value = "1")]
        k: String,
        /// `all` or `sample:N`; hypothesis-satisfying graphs always get all pairs.
        #[arg(long, default_value = "all")]
        pairs: String,
        /// Graphs drawn from each random family.
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for random families written without one, and for pair sampling.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// JSONL destination; records go to stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Include per-record elapsed milliseconds.
        #[arg(long)]
        timing: bool,
    },
    /// Show that K_{n/2,n/2} meets every hypothesis but τ > 1 and is not
    /// hamiltonian-connected.
    Tightness {
        /// Even orders, e.g. `--n 4 --n 8`.
        #[arg(long, required = true)]
        n: Vec<usize>,
    },
    /// Re-check certificate records (JSON lines) against a graph.
    Validate {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Args)]
struct GraphInput {
    /// A graph6 word.
    #[arg(long, conflicts_with_all = ["family", "input"])]
    graph6: Option<String>,
    /// A family such as `complete:5`, `bipartite:4,4`, `gnp:10,1/2,42`, `exhaustive:6`.
    #[arg(long, conflicts_with = "input")]
    family: Vec<String>,
    /// A file of graph6 lines.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    /// Bad input or a capacity limit.
    Input(String),
    /// A violation, rejection or engine fault.
    Found(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalLogic(_) => Failure::Found(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants { input, k } => cmd_invariants(&input, k),
        Command::Extract {
            input,
            k,
            u,
            v,
            output,
        } => cmd_extract(&input, k, u, v, output),
        Command::Sweep {
            input,
            k,
            pairs,
            samples,
            seed,
            jobs,
            output,
            timing,
        } => cmd_sweep(&input, &k, &pairs, samples, seed, jobs, output, timing),
        Command::Tightness { n } => cmd_tightness(&n),
        Command::Validate { input, certificate } => cmd_validate(&input, certificate),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Found(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Parses a family, filling in `seed` for `gnp:N,P` written without one.
fn parse_family(text: &str, seed: Option<u64>) -> Result<FamilySpec, Failure> {
    let text = text.trim();
    if let Some(args) = text.strip_prefix("gnp:") {
        if args.split(',').count() == 2 {
            let seed = seed.ok_or_else(|| {
                Failure::Input(format!(
                    "random family '{text}' needs a seed (--seed or gnp:N,P,SEED)"
                ))
            })?;
            return Ok(format!("{text},{seed}").parse()?);
        }
    }
    Ok(text.parse()?)
}

fn sources(input: &GraphInput, seed: Option<u64>) -> Result<Vec<GraphSource>, Failure> {
    if let Some(word) = &input.graph6 {
        return Ok(vec![GraphSource::Graphs(vec![parse_graph6(word)?])]);
    }
    if let Some(path) = &input.input {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        return Ok(vec![GraphSource::Graphs(parse_graph6_lines(&text)?)]);
    }
    if input.family.is_empty() {
        return Err(Failure::Input(
            "give one of --graph6, --family or --input".into(),
        ));
    }
    input
        .family
        .iter()
        .map(|f| parse_family(f, seed).map(GraphSource::Family))
        .collect()
}

/// All graphs of a bounded input.
fn graphs(input: &GraphInput) -> Result<Vec<Graph>, Failure> {
    let mut out = Vec::new();
    for source in sources(input, None)? {
        match source {
            GraphSource::Graphs(gs) => out.extend(gs),
            GraphSource::Family(spec) => {
                if spec.size().is_none() {
                    return Err(Failure::Input(format!(
                        "{spec} is unbounded; use the sweep command"
                    )));
                }
                out.extend(generate(&spec)?);
            }
        }
    }
    Ok(out)
}

fn single_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let mut gs = graphs(input)?;
    if gs.len() != 1 {
        return Err(Failure::Input(format!(
            "expected exactly one graph, got {}",
            gs.len()
        )));
    }
    Ok(gs.pop().unwrap())
}

fn parse_ks(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Input(format!("cannot read k values from '{text}'"));
    if let Some((a, b)) = text.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect()
}

fn cmd_invariants(input: &GraphInput, k: usize) -> Outcome {
    let out = io::stdout();
    let mut out = out.lock();
    for g in graphs(input)? {
        let report = hypothesis_check(&g, k)?;
        let mut line = serde_json::to_value(&report).expect("report serializes");
        line["graph6"] = json!(write_graph6(&g));
        line["n"] = json!(g.order());
        writeln!(out, "{line}")?;
    }
    Ok(true)
}

fn cmd_extract(
    input: &GraphInput,
    k: usize,
    u: usize,
    v: usize,
    output: Option<PathBuf>,
) -> Outcome {
    let g = single_graph(input)?;
    let ex = extract(&g, k, u, v)?;
    let trace: Vec<String> = ex
        .trace
        .iter()
        .map(|s| match s.rule.number() {
            Some(num) => format!("{num}:{}", s.rule.name()),
            None => s.rule.name().to_string(),
        })
        .collect();
    let outcome = match ex.result {
        Ok(o) => o,
        Err(stall) => {
            println!("outcome: stalled");
            println!("trace: {}", trace.join(" -> "));
            println!(
                "{}",
                serde_json::to_string(&stall).expect("stall serializes")
            );
            return Ok(false);
        }
    };
    let record = CertificateRecord { k, u, v, outcome };
    let check = validate_outcome(&g, k, u, v, &record.outcome);
    let line = serde_json::to_string(&record).expect("record serializes");
    println!("outcome: {}", record.outcome.kind().as_str());
    if let ExtractionOutcome::HamiltonPath(path) = &record.outcome {
        println!(
            "path: {}",
            path.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    println!("trace: {}", trace.join(" -> "));
    println!("check: {check}");
    println!("{line}");
    if let Some(path) = output {
        fs::write(&path, format!("{line}\n"))?;
    }
    if !check.accepted() {
        return Err(Failure::Found(format!(
            "engine emitted an invalid outcome: {check}"
        )));
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    input: &GraphInput,
    ks: &str,
    pairs: &str,
    samples: Option<u64>,
    seed: Option<u64>,
    jobs: usize,
    output: Option<PathBuf>,
    timing: bool,
) -> Outcome {
    let config = SweepConfig {
        sources: sources(input, seed)?,
        ks: parse_ks(ks)?,
        pairs: pairs.parse::<PairPolicy>()?,
        samples,
        seed: seed.unwrap_or(0),
        jobs,
        timing,
    };
    config.validate()?;
    let mut sink: Box<dyn Write> = match &output {
        Some(path) => Box::new(BufWriter::new(fs::File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let mut flagged = Vec::new();
    let summary = run_sweep(&config, |r| {
        if !r.violations.is_empty() {
            flagged.push(format!(
                "{} k={}: {}",
                r.graph6,
                r.k,
                r.violations.join("; ")
            ));
        }
        writeln!(
            sink,
            "{}",
            serde_json::to_string(r).expect("record serializes")
        )
        .map_err(|e| Error::InvalidInput(format!("writing records: {e}")))
    })?;
    sink.flush()?;
    drop(sink);

    let text = serde_json::to_string_pretty(&summary).expect("summary serializes");
    let mut report: Box<dyn Write> = if output.is_some() {
        Box::new(io::stdout())
    } else {
        Box::new(io::stderr())
    };
    writeln!(report, "{text}")?;
    for f in &flagged {
        writeln!(report, "VIOLATION {f}")?;
    }
    writeln!(
        report,
        "{}",
        if summary.is_clean() {
            "clean"
        } else {
            "violations found"
        }
    )?;
    Ok(summary.is_clean())
}

fn cmd_tightness(ns: &[usize]) -> Outcome {
    let mut all_hold = true;
    for &n in ns {
        let r = tightness(n)?;
        let holds = r.toughness.to_string() == "1/1"
            && r.connectivity == n / 2
            && r.forbidden_free
            && !r.hamiltonian_connected
            && r.validation.accepted()
            && r.cut_is_part;
        all_hold &= holds;
        println!(
            "K_{{{h},{h}}}: n={n} k={}{} toughness={} connectivity={} forbidden_free={} hamiltonian_connected={} witness_cut_is_part={} check={}",
            r.k,
            if r.k_rounded { " (n/4 rounded down)" } else { "" },
            r.toughness,
            r.connectivity,
            r.forbidden_free,
            r.hamiltonian_connected,
            r.cut_is_part,
            r.validation,
            h = n / 2,
        );
        println!("{}", serde_json::to_string(&r).expect("report serializes"));
    }
    Ok(all_hold)
}

fn cmd_validate(input: &GraphInput, certificate: PathBuf) -> Outcome {
    let g = single_graph(input)?;
    let text = fs::read_to_string(&certificate)
        .map_err(|e| Failure::Input(format!("{}: {e}", certificate.display())))?;
    let mut all = true;
    let mut seen = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: CertificateRecord = serde_json::from_str(line).map_err(|e| {
            Failure::Input(format!("{} line {}: {e}", certificate.display(), i + 1))
        })?;
        let report = validate_outcome(&g, record.k, record.u, record.v, &record.outcome);
        println!("{report}");
        all &= report.accepted();
        seen += 1;
    }
    if seen == 0 {
        return Err(Failure::Input("no certificate records found".into()));
    }
    Ok(all)
}
