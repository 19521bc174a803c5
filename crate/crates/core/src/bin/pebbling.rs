use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pebbling::bounds::BoundName;
use pebbling::harness::{
    cmd_bounds, cmd_exact, cmd_verify, default_corpus, to_csv, with_jobs, BoundReport,
    ExactOptions, GraphSource, HarnessError, VerifyOptions,
};
use pebbling::pebbling::SearchBudget;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "pebbling", version, about = "Exact pebbling numbers and bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Args)]
struct GlobalArgs {
    /// Output format: one JSON object per line, or one CSV row per graph.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report stream here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (0 = one per core). Never changes results.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, env = "PEBBLING_MAX_PEBBLES")]
    max_pebbles: Option<u32>,
    #[arg(long, global = true, env = "PEBBLING_MAX_CONFIGS")]
    max_configs: Option<u64>,
    #[arg(long, global = true, env = "PEBBLING_MAX_VERTICES")]
    max_vertices: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, domination, bounds and constructions, without an exact solve.
    Bounds {
        /// Family specs (`star:4`, `corona:cycle:4`) or edge-list files.
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Everything `bounds` reports plus an exact pebbling number.
    Exact {
        #[arg(required = true)]
        graphs: Vec<String>,
        /// Rooted number at this vertex instead of the global maximum.
        #[arg(long)]
        root: Option<usize>,
        /// Number of pebbles that must reach the root.
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Runs the full check suite; exits 0 iff every check passes.
    Verify {
        /// Graphs to verify (family spec or file); defaults to the built-in corpus.
        #[arg(long = "family")]
        families: Vec<String>,
        /// Enumerate all size-f distributions for graphs up to this order.
        #[arg(long, default_value_t = 6)]
        exhaustive_max_n: usize,
        /// Test fixture: overwrite a bound with 1 to exercise failure reporting.
        #[arg(long, hide = true, value_parser = parse_bound_name)]
        corrupt_bound: Option<BoundName>,
    },
}

fn parse_bound_name(s: &str) -> Result<BoundName, String> {
    BoundName::UPPER_PRIORITY
        .into_iter()
        .chain([BoundName::TrivialLower])
        .find(|b| b.as_str() == s)
        .ok_or_else(|| format!("unknown bound {s:?}"))
}

impl GlobalArgs {
    fn budget(&self) -> SearchBudget {
        let def = SearchBudget::default();
        SearchBudget {
            max_vertices: self.max_vertices.unwrap_or(def.max_vertices),
            max_pebbles: self.max_pebbles.unwrap_or(def.max_pebbles),
            max_configs: self.max_configs.unwrap_or(def.max_configs),
        }
    }
}

struct Output {
    sink: Box<dyn Write>,
    format: Format,
}

impl Output {
    fn open(args: &GlobalArgs) -> Result<Self, HarnessError> {
        let sink: Box<dyn Write> = match &args.out {
            Some(path) => Box::new(std::fs::File::create(path).map_err(|source| {
                HarnessError::Io {
                    path: path.clone(),
                    source,
                }
            })?),
            None => Box::new(std::io::stdout().lock()),
        };
        Ok(Output {
            sink,
            format: args.format,
        })
    }

    fn reports(&mut self, reports: &[BoundReport]) -> Result<(), HarnessError> {
        let text = match self.format {
            Format::Json => reports
                .iter()
                .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
                .collect(),
            Format::Csv => to_csv(reports)?,
        };
        self.write(&text)
    }

    fn json_line(&mut self, v: &serde_json::Value) -> Result<(), HarnessError> {
        self.write(&format!("{v}\n"))
    }

    fn write(&mut self, text: &str) -> Result<(), HarnessError> {
        self.sink
            .write_all(text.as_bytes())
            .and_then(|_| self.sink.flush())
            .map_err(|source| HarnessError::Io {
                path: PathBuf::from("<output>"),
                source,
            })
    }
}

fn error_code(e: &HarnessError) -> u8 {
    if e.is_budget() {
        EXIT_BUDGET
    } else {
        EXIT_INVALID
    }
}

fn run_each(
    graphs: &[String],
    jobs: usize,
    out: &mut Output,
    f: impl Fn(&GraphSource) -> Result<BoundReport, HarnessError> + Sync,
) -> Result<u8, HarnessError> {
    let sources: Vec<GraphSource> = graphs
        .iter()
        .map(|g| g.parse())
        .collect::<Result<_, _>>()?;
    let mut reports = Vec::new();
    let mut code = 0;
    for s in &sources {
        match with_jobs(jobs, || f(s)) {
            Ok(r) => reports.push(r),
            Err(e) => {
                eprintln!("{}: {e}", s.id());
                code = code.max(error_code(&e));
            }
        }
    }
    out.reports(&reports)?;
    for r in &reports {
        for c in r.failed_checks() {
            eprintln!("{}: check {} failed: {}", r.graph_id, c.name, c.details);
            code = code.max(EXIT_CHECK_FAILED);
        }
    }
    Ok(code)
}

fn run(cli: Cli) -> Result<u8, HarnessError> {
    let budget = cli.global.budget();
    let jobs = cli.global.jobs;
    let mut out = Output::open(&cli.global)?;
    match cli.command {
        Command::Bounds { graphs } => run_each(&graphs, jobs, &mut out, cmd_bounds),
        Command::Exact { graphs, root, k } => {
            let opts = ExactOptions { root, k, budget };
            run_each(&graphs, jobs, &mut out, |s| cmd_exact(s, &opts))
        }
        Command::Verify {
            families,
            exhaustive_max_n,
            corrupt_bound,
        } => {
            let corpus = if families.is_empty() {
                default_corpus()
            } else {
                families
                    .iter()
                    .map(|f| f.parse())
                    .collect::<Result<_, _>>()?
            };
            let opts = VerifyOptions {
                budget,
                jobs,
                corrupt: corrupt_bound,
                exhaustive_max_n,
            };
            let outcome = cmd_verify(&corpus, &opts);
            out.reports(&outcome.reports)?;
            let tail = serde_json::json!({
                "global_checks": outcome.global_checks,
                "notes": outcome.notes,
                "summary": outcome.summary,
            });
            match out.format {
                Format::Json => out.json_line(&tail)?,
                Format::Csv => eprintln!("{tail}"),
            }
            for line in outcome
                .summary
                .failures
                .iter()
                .chain(&outcome.summary.errors)
                .chain(&outcome.summary.budget_exceeded)
            {
                eprintln!("{line}");
            }
            Ok(outcome.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
