//! Command-line front end: run check suites, analyze single instances,
//! scan for counterexamples, and print worked examples.
//!
//! Exit codes: 0 when every check passed (or a search found nothing),
//! 1 when a suite reported failures or a search found a counterexample,
//! 2 for configuration or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nestlab::lab::SearchStatus;
use nestlab::{
    analyze_instance, analyze_relation, list_claims, list_suites, run_suite, search_counterexample,
    Error, Instance, InstanceAnalysis, Relation, SuiteMode, SuiteReport, SuiteSpec, Universe,
};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "nestlab",
    version,
    about = "Finite-model laboratory for nest-induced orders and the topologies they generate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named check suite over enumerated or sampled instances.
    Verify(VerifyArgs),
    /// Analyze one instance file and print the requested derived objects.
    Check(CheckArgs),
    /// Scan for counterexamples to a named claim.
    Search(SearchArgs),
    /// Print a worked three-point example with all derived topologies.
    Demo {
        /// Which example relation to analyze.
        #[arg(value_enum)]
        example: DemoExample,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite identifier (unknown identifiers list the catalog).
    #[arg(long)]
    suite: String,
    /// Universe-size bound: exhaustive runs cover n = 0..=max-n, sampled
    /// runs draw at exactly max-n.
    #[arg(long = "max-n")]
    max_n: usize,
    /// Check every instance up to the bound (the default mode).
    #[arg(long, conflicts_with_all = ["samples", "seed"])]
    exhaustive: bool,
    /// Switch to sampled mode with this many seeded pseudo-random draws.
    #[arg(long)]
    samples: Option<u64>,
    /// Seed for sampled mode (default 0).
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
    /// Worker threads; the report does not depend on this.
    #[arg(long)]
    jobs: Option<usize>,
    /// Also write the canonical JSON report (wall time zeroed) here.
    #[arg(long, value_name = "out.json")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Instance file: {"kind": "nest" | "nest_pair" | "relation" |
    /// "family" | "topology", ...} with labeled sets or pairs.
    #[arg(long)]
    input: PathBuf,
    /// Which derived objects to print.
    #[arg(long, value_enum)]
    query: Query,
}

#[derive(Args)]
struct SearchArgs {
    /// Claim identifier (unknown identifiers list the catalog).
    #[arg(long)]
    claim: String,
    /// Scan instances of size n = 0..=max-n.
    #[arg(long = "max-n")]
    max_n: usize,
    /// Wall-clock budget in seconds; omitted means run to exhaustion.
    #[arg(long, value_name = "SECONDS")]
    budget: Option<u64>,
    /// Also write the canonical JSON report (wall time zeroed) here.
    #[arg(long, value_name = "out.json")]
    json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Query {
    /// Is the family a nest? Reports the first incomparable pair if not.
    Nest,
    /// T0 separation, with the first failing pair.
    T0,
    /// T1 separation, with the first failing pair.
    T1,
    /// Is the family interlocking?
    Interlocking,
    /// The induced or given order and its predicates.
    Order,
    /// Every topology derived from the instance.
    Topologies,
    /// The four ray-versus-topology conditions (transitive relations).
    Conditions,
    /// The full analysis in one object.
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DemoExample {
    /// The strict total order a < b < c.
    Chain,
    /// The empty relation on three points.
    Antichain,
    /// a < b and a < c with b, c incomparable.
    Vee,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true) = clean, Ok(false) = failures/findings were reported,
/// Err = configuration or input problem.
fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Check(args) => run_check(args),
        Command::Search(args) => run_search(args),
        Command::Demo { example } => run_demo(example),
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Renders engine errors, appending the catalog when an identifier was
/// simply unknown.
fn describe(error: Error) -> String {
    match &error {
        Error::UnknownSuite(_) => {
            let ids: Vec<&str> = list_suites().iter().map(|s| s.id).collect();
            format!("{error}; available suites: {}", ids.join(", "))
        }
        Error::UnknownClaim(_) => {
            let ids: Vec<&str> = list_claims().iter().map(|c| c.id).collect();
            format!("{error}; available claims: {}", ids.join(", "))
        }
        _ => error.to_string(),
    }
}

fn run_verify(args: VerifyArgs) -> Result<bool, String> {
    let spec = match args.samples {
        Some(samples) => {
            SuiteSpec::sampled(&args.suite, args.max_n, samples, args.seed.unwrap_or(0))
        }
        None => SuiteSpec::exhaustive(&args.suite, args.max_n),
    };
    let jobs = args.jobs.unwrap_or_else(default_jobs);
    if jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    let report = run_suite(&spec, jobs).map_err(describe)?;
    print_report(&report, args.json.as_deref())?;
    Ok(report.passed())
}

fn run_search(args: SearchArgs) -> Result<bool, String> {
    let budget = args.budget.map(Duration::from_secs);
    let report = search_counterexample(&args.claim, args.max_n, budget).map_err(describe)?;
    print_report(&report, args.json.as_deref())?;
    Ok(report.passed())
}

fn print_report(report: &SuiteReport, json_path: Option<&Path>) -> Result<(), String> {
    let config = &report.config;
    let mode = match config.mode {
        SuiteMode::Exhaustive => "exhaustive".to_string(),
        SuiteMode::Sampled => format!(
            "sampled, samples = {}, seed = {}",
            config.samples.unwrap_or(0),
            config.seed.unwrap_or(0)
        ),
    };
    println!(
        "suite {} ({mode}, max n = {})",
        report.suite_id, config.max_n
    );
    if let Some(status) = report.status {
        let status = match status {
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::BudgetSpent => "budget spent",
        };
        println!("search status: {status}");
    }
    println!("instances checked: {}", report.instances_checked);
    println!("failures: {}", report.failures.len());
    for failure in report.failures.iter().take(5) {
        println!("  {}: {}", failure.predicate, failure.detail);
        let instance = serde_json::to_string(&failure.instance).expect("instance serializes");
        println!("    instance: {instance}");
    }
    if report.failures.len() > 5 {
        println!(
            "  ... and {} more (write --json for the full list)",
            report.failures.len() - 5
        );
    }
    println!("wall time: {} ms", report.wall_time_ms);
    if let Some(path) = json_path {
        std::fs::write(path, report.to_canonical_json())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("canonical report written to {}", path.display());
    }
    Ok(())
}

fn run_check(args: CheckArgs) -> Result<bool, String> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| format!("cannot read {}: {e}", args.input.display()))?;
    let instance: Instance = serde_json::from_str(&text)
        .map_err(|e| format!("{} is not an instance: {e}", args.input.display()))?;
    let analysis = analyze_instance(&instance).map_err(|e| e.to_string())?;
    let view = query_view(&analysis, args.query)?;
    let mut rendered = serde_json::to_string_pretty(&view).expect("view serializes");
    rendered.push('\n');
    print!("{rendered}");
    Ok(true)
}

fn query_view(analysis: &InstanceAnalysis, query: Query) -> Result<serde_json::Value, String> {
    match analysis {
        InstanceAnalysis::Family(family) => match query {
            Query::All => Ok(serde_json::to_value(family).expect("analysis serializes")),
            Query::Nest => Ok(json!({
                "is_nest": family.is_nest,
                "incomparable_members": family.incomparable_members,
            })),
            Query::T0 => Ok(json!({
                "t0_separating": family.t0_separating,
                "t0_failing_pair": family.t0_failing_pair,
            })),
            Query::T1 => Ok(json!({
                "t1_separating": family.t1_separating,
                "t1_failing_pair": family.t1_failing_pair,
            })),
            Query::Interlocking => Ok(json!({ "interlocking": family.interlocking })),
            Query::Order => family
                .order
                .as_ref()
                .map(|order| {
                    json!({
                        "strict_pairs": order.strict_pairs,
                        "linear": order.linear,
                    })
                })
                .ok_or_else(|| "the family is not a nest, so it induces no order".to_string()),
            Query::Topologies => Ok(json!({
                "generated_topology": family.generated_topology,
                "order_topologies": family.order.as_ref().and_then(|o| o.topologies.as_ref()),
            })),
            Query::Conditions => {
                Err("the conditions query applies to relation instances".to_string())
            }
        },
        InstanceAnalysis::Relation(relation) => match query {
            Query::All => Ok(serde_json::to_value(relation).expect("analysis serializes")),
            Query::Order => Ok(json!({
                "pairs": relation.pairs,
                "reflexive": relation.reflexive,
                "irreflexive": relation.irreflexive,
                "transitive": relation.transitive,
                "antisymmetric": relation.antisymmetric,
                "linear": relation.linear,
            })),
            Query::Topologies => Ok(json!({ "topologies": relation.topologies })),
            Query::Conditions => relation
                .conditions
                .as_ref()
                .map(|c| serde_json::to_value(c).expect("analysis serializes"))
                .ok_or_else(|| {
                    "the conditions are defined for transitive relations only".to_string()
                }),
            Query::Nest | Query::T0 | Query::T1 | Query::Interlocking => {
                Err(format!("the {:?} query applies to family instances", query).to_lowercase())
            }
        },
    }
}

fn run_demo(example: DemoExample) -> Result<bool, String> {
    let (title, pairs): (&str, &[(&str, &str)]) = match example {
        DemoExample::Chain => (
            "chain: a < b < c, the strict total order on three points",
            &[("a", "b"), ("a", "c"), ("b", "c")],
        ),
        DemoExample::Antichain => ("antichain: no related pairs on {a, b, c}", &[]),
        DemoExample::Vee => (
            "vee: a < b and a < c, with b and c incomparable",
            &[("a", "b"), ("a", "c")],
        ),
    };
    let relation =
        Relation::from_label_pairs(Universe::alphabetic(3), pairs).map_err(|e| e.to_string())?;
    println!("{title}");
    print!("{}", analyze_relation(&relation).to_json());
    Ok(true)
}
