//! `rna` — compute rna numbers of small graphs, verify the catalog of known
//! values, and export graphs (optionally with a signing) as DOT or JSON.
//!
//! Exit codes: 0 success / all verifications pass, 1 verification failure,
//! 2 usage or validation error, 3 input too large for the chosen operation,
//! 4 I/O error.

mod gspec;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gspec::{GraphSpec, IoFailure, ResolvedGraph};
use rna_core::graph::to_dot;
use rna_core::signing::{signs_from_labeling, ParityLabeling};
use rna_core::solver::{proof_labeling, solve, ProofLabelingKind, RnaResult, SolverKind};
use verify::{RangeFilter, Status};

#[derive(Parser, Debug)]
#[command(
    name = "rna",
    version,
    about = "Exact rna numbers (minimum nearly balanced edge cuts) of small graphs",
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    compute: ComputeArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify a cataloged claim (or `all`) against the exact solver
    Verify(VerifyArgs),
    /// Write a graph, optionally with a signing, as DOT or JSON
    Export(ExportArgs),
}

#[derive(Args, Debug, Default)]
struct ComputeArgs {
    #[command(flatten)]
    spec: GraphSpec,

    /// Solver to use
    #[arg(long, value_enum, default_value_t = SolverChoice::Fast)]
    solver: SolverChoice,

    /// Override the solver's order guard
    #[arg(long, value_name = "N", env = "RNA_MAX_ORDER")]
    max_order: Option<usize>,

    /// Output format
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Claim id (e.g. thm4.4, lem3.2, ex5.1) or `all`
    id: String,

    /// Instance range A..B (inclusive), overriding the catalog default
    #[arg(long, value_name = "A..B")]
    n: Option<String>,

    /// Keep only even n
    #[arg(long)]
    even: bool,

    /// Keep only odd n
    #[arg(long, conflicts_with = "even")]
    odd: bool,

    /// Smaller default ranges (full branch coverage, less enumeration)
    #[arg(long)]
    quick: bool,

    /// Parallelize instances across this many threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[command(flatten)]
    spec: GraphSpec,

    /// Labeling whose negative edges are drawn dashed
    #[arg(long, value_enum, default_value_t = LabelingSource::None)]
    labeling: LabelingSource,

    /// Output file
    #[arg(long, short, value_name = "PATH")]
    out: PathBuf,

    /// Output format
    #[arg(long, value_enum, default_value_t = DotOrJson::Dot)]
    format: DotOrJson,

    /// Solver for --labeling witness
    #[arg(long, value_enum, default_value_t = SolverChoice::Fast)]
    solver: SolverChoice,

    /// Override the solver's order guard
    #[arg(long, value_name = "N", env = "RNA_MAX_ORDER")]
    max_order: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
enum SolverChoice {
    Naive,
    #[default]
    Fast,
    Bb,
}

impl From<SolverChoice> for SolverKind {
    fn from(c: SolverChoice) -> SolverKind {
        match c {
            SolverChoice::Naive => SolverKind::Naive,
            SolverChoice::Fast => SolverKind::Fast,
            SolverChoice::Bb => SolverKind::BranchBound,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq)]
enum TextOrJson {
    #[default]
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq)]
enum DotOrJson {
    #[default]
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq)]
enum LabelingSource {
    /// No signing; all edges solid
    #[default]
    None,
    /// The reference labeling carried by --famous / --construct fig9
    Famous,
    /// The all-spokes-negative labeling (generalized Petersen graphs)
    Upper,
    /// The labeling found by running the solver
    Witness,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Some(Command::Verify(args)) => cmd_verify(args),
        Some(Command::Export(args)) => cmd_export(args),
        None => cmd_rna(cli.compute),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(classify(&err))
        }
    }
}

/// Exit code for an error: capacity 3, I/O 4, anything else 2.
fn classify(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(core) = cause.downcast_ref::<rna_core::Error>() {
            return if core.is_capacity() { 3 } else { 2 };
        }
        if cause.downcast_ref::<IoFailure>().is_some()
            || cause.downcast_ref::<std::io::Error>().is_some()
        {
            return 4;
        }
    }
    2
}

fn cmd_rna(args: ComputeArgs) -> Result<ExitCode> {
    let resolved = args.spec.resolve()?;
    let kind: SolverKind = args.solver.into();
    let result = solve(&resolved.graph, kind, args.max_order).map_err(gspec::core_err)?;
    match args.format {
        TextOrJson::Text => {
            println!(
                "graph: {} (order {}, {} edges)",
                resolved.describe,
                resolved.graph.order(),
                resolved.graph.edge_count()
            );
            println!("rna: {}", result.value);
            println!(
                "witness_side: [{}]",
                result
                    .witness_side
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!("witness_labels: {:?}", result.witness_labeling.labels());
            println!("subsets_examined: {}", result.stats.subsets_examined);
            println!("solver: {}", result.kind.as_str());
            println!("elapsed: {:.2?}", result.stats.elapsed);
        }
        TextOrJson::Json => println!("{}", result_json(&result)),
    }
    Ok(ExitCode::SUCCESS)
}

fn result_json(result: &RnaResult) -> String {
    #[derive(serde::Serialize)]
    struct ResultJson<'a> {
        rna: usize,
        witness_side: Vec<usize>,
        witness_labels: &'a [usize],
        subsets_examined: u64,
        solver: &'static str,
    }
    serde_json::to_string(&ResultJson {
        rna: result.value,
        witness_side: result.witness_side.iter().collect(),
        witness_labels: result.witness_labeling.labels(),
        subsets_examined: result.stats.subsets_examined,
        solver: result.kind.as_str(),
    })
    .expect("result serialization cannot fail")
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let filter = RangeFilter {
        range: match &args.n {
            Some(text) => Some(parse_range(text)?),
            None => None,
        },
        even_only: args.even,
        odd_only: args.odd,
    };
    let reports = if args.id == "all" {
        verify::run_all(args.quick, args.jobs)
    } else {
        match verify::run(&args.id, filter, args.quick, args.jobs) {
            Some(report) => {
                if report.instances.is_empty() {
                    return Err(anyhow!(
                        "the requested range leaves no valid instances for {}",
                        args.id
                    ));
                }
                vec![report]
            }
            None => {
                return Err(anyhow!(
                    "unknown claim id {:?}; known ids: all, {}",
                    args.id,
                    verify::CATALOG.join(", ")
                ))
            }
        }
    };

    match args.format {
        TextOrJson::Json => {
            if args.id == "all" {
                println!("{}", serde_json::to_string(&reports)?);
            } else {
                println!("{}", serde_json::to_string(&reports[0])?);
            }
        }
        TextOrJson::Text => {
            for report in &reports {
                let mark = match report.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                };
                println!(
                    "{:<8} {} ({} instance(s), {:.2?})",
                    report.theorem,
                    mark,
                    report.instances.len(),
                    report.elapsed
                );
                for inst in &report.instances {
                    let ok = inst.expected == inst.computed;
                    if !ok || reports.len() == 1 {
                        println!(
                            "    {} {} expected {} computed {}",
                            if ok { "ok " } else { "BAD" },
                            inst.params,
                            inst.expected,
                            inst.computed
                        );
                    }
                }
            }
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            println!("{} claim(s), {} failed", reports.len(), failed);
        }
    }

    if reports.iter().any(|r| r.status == Status::Fail) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_export(args: ExportArgs) -> Result<ExitCode> {
    let resolved = args.spec.resolve()?;
    let labeling = export_labeling(&args, &resolved)?;
    let negative: Vec<(usize, usize)> = match &labeling {
        Some(f) => signs_from_labeling(&resolved.graph, f)
            .map_err(gspec::core_err)?
            .negative()
            .to_vec(),
        None => Vec::new(),
    };
    let payload = match args.format {
        DotOrJson::Dot => to_dot(&resolved.graph, resolved.names, &negative),
        DotOrJson::Json => {
            let mut value: serde_json::Value =
                serde_json::from_str(&resolved.graph.to_json()).expect("graph json is valid");
            if let Some(f) = &labeling {
                value["labels"] = json!(f.labels());
                value["negative_edges"] = json!(negative);
            }
            format!("{value}\n")
        }
    };
    std::fs::File::create(&args.out)
        .and_then(|mut file| file.write_all(payload.as_bytes()))
        .map_err(|e| anyhow!(IoFailure(format!("{}: {e}", args.out.display()))))?;
    eprintln!("wrote {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn export_labeling(args: &ExportArgs, resolved: &ResolvedGraph) -> Result<Option<ParityLabeling>> {
    match args.labeling {
        LabelingSource::None => Ok(None),
        LabelingSource::Famous => resolved
            .reference_labeling
            .clone()
            .ok_or_else(|| anyhow!("--labeling famous needs --famous or --construct fig9"))
            .map(Some),
        LabelingSource::Upper => {
            let desc = resolved
                .petersen
                .ok_or_else(|| anyhow!("--labeling upper needs a generalized Petersen graph"))?;
            proof_labeling(ProofLabelingKind::PetersenUpper, desc.n)
                .map_err(gspec::core_err)
                .map(Some)
        }
        LabelingSource::Witness => {
            let result = solve(&resolved.graph, args.solver.into(), args.max_order)
                .map_err(gspec::core_err)?;
            Ok(Some(result.witness_labeling))
        }
    }
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| anyhow!("range must be A..B (inclusive), got {text:?}"))?;
    let lo: usize = a
        .trim()
        .parse()
        .map_err(|_| anyhow!("bad range start {a:?}"))?;
    let hi: usize = b
        .trim()
        .parse()
        .map_err(|_| anyhow!("bad range end {b:?}"))?;
    if lo > hi {
        return Err(anyhow!("empty range {text:?}"));
    }
    Ok((lo, hi))
}
