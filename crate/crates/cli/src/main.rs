//! `rainbowlab`: constructions, rainbow-triangle analysis, packing search and
//! anti-Ramsey oracles from the command line.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rainbowlab::analysis::{
    claim_audit, lemma_bounds_check, max_rf21, ClaimAudit, RainbowCounts, Verdict,
};
use rainbowlab::constructions::{
    argmax_runs, build_construction, comparison_csv, counterexample_report, curves_csv, family_curves,
    transition_table, transitions_csv, Family,
};
use rainbowlab::io::{self, ParseError};
use rainbowlab::oracle::{brute_force_ar, OracleOptions};
use rainbowlab::packing::{
    dirac_rainbow_check, find_packing, PackingMode, SearchOptions, SearchStatus, DEFAULT_BUDGET,
};
use rainbowlab::{EdgeColoredGraph, Error};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;
const EX_SOFTWARE: u8 = 70;
const EX_CANTCREAT: u8 = 73;

#[derive(Parser)]
#[command(name = "rainbowlab", version, about = "Rainbow triangles in edge-colored graphs")]
struct Cli {
    /// Worker threads for the exact searches.
    #[arg(long, global = true, env = "RAINBOWLAB_WORKERS", default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the extremal colorings G1..G4 as graph JSON.
    Construct(ConstructArgs),
    /// Rainbow-triangle statistics of a graph.
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
    /// Exact packing search.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Brute-force anti-Ramsey numbers.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Tables and CSV sweeps over the constructions.
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum AnalyzeCommand {
    /// Count rainbow triangles.
    Rt {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        per_vertex: bool,
        #[arg(long)]
        per_edge: bool,
    },
    /// Audit the counting inequalities for a (k-1)-packing.
    Claims {
        #[arg(long = "in")]
        input: PathBuf,
        /// Packing context JSON; only the triples are used, hourglasses are recomputed.
        #[arg(long)]
        packing: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check the rainbow-triangle lower bounds.
    Lemmas {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Decide whether k vertex-disjoint rainbow triangles exist.
    /// Exit status: 0 found, 1 none, 2 budget exhausted.
    Packing {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        mode: PackingMode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Compute ar(n, kC3) by exhaustive enumeration. Exit status 2 if the budget runs out.
    Ar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ReportCommand {
    /// Boundary formulas between the best families, as CSV.
    Transitions {
        #[arg(long)]
        k: usize,
        /// Instead print the observed best family runs for 3k <= n <= N_MAX.
        #[arg(long, value_name = "N_MAX")]
        observed: Option<usize>,
    },
    /// Color counts of all families for 3k <= n <= n_max, as CSV.
    Curves {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        csv: PathBuf,
    },
    /// Compare the best construction with the conjectured value.
    Disprove {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Output file; stdout if omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check the color-degree condition for k disjoint rainbow triangles.
    Dirac {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    /// Library errors caused by command-line values.
    fn usage(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::new(EX_SOFTWARE, e.to_string()),
            _ => Failure::new(EX_USAGE, e.to_string()),
        }
    }

    /// Library errors caused by input file contents.
    fn data(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::new(EX_SOFTWARE, e.to_string()),
            _ => Failure::new(EX_DATAERR, e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(EX_NOINPUT, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<EdgeColoredGraph, Failure> {
    io::parse_graph(&read(path)?).map_err(|e| parse_failure(path, e))
}

fn parse_failure(path: &Path, e: ParseError) -> Failure {
    match e {
        ParseError::Graph(Error::Invariant(m)) => Failure::new(EX_SOFTWARE, m),
        e => Failure::new(EX_DATAERR, format!("{}: {e}", path.display())),
    }
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let fail = |e: std::io::Error| Failure::new(EX_CANTCREAT, format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(contents.as_bytes()).map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write_atomic(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn search_options(budget: u64, workers: usize) -> SearchOptions {
    SearchOptions { budget, workers: workers.max(1), ..SearchOptions::default() }
}

fn construct(args: ConstructArgs) -> Outcome {
    let g = build_construction(args.family, args.n, args.k).map_err(Failure::usage)?;
    emit(args.out.as_deref(), &io::graph_to_json(&g))?;
    if args.out.is_some() {
        eprintln!(
            "{}({},{}): {} vertices, {} edges, {} colors",
            args.family,
            args.n,
            args.k,
            g.n(),
            g.edge_count(),
            g.color_number()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn analyze(cmd: AnalyzeCommand, workers: usize) -> Outcome {
    match cmd {
        AnalyzeCommand::Rt { input, per_vertex, per_edge } => {
            let g = load_graph(&input)?;
            let counts = RainbowCounts::new(&g);
            let mut out = format!("rt {}\n", counts.total);
            if per_vertex {
                for (v, c) in counts.per_vertex.iter().enumerate() {
                    writeln!(out, "vertex {v} {c}").unwrap();
                }
            }
            if per_edge {
                for (u, v, _) in g.edges() {
                    writeln!(out, "edge {u} {v} {}", counts.edge(u, v)).unwrap();
                }
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        AnalyzeCommand::Claims { input, packing, budget } => {
            let g = load_graph(&input)?;
            let given = io::parse_context(&g, &read(&packing)?).map_err(|e| parse_failure(&packing, e))?;
            let (t, ctx) = max_rf21(&g, &given.triples).map_err(Failure::data)?;
            let audit = claim_audit(&g, &ctx, &search_options(budget, workers)).map_err(Failure::data)?;
            print!("{}", render_audit(&ctx, t, &audit));
            Ok(ExitCode::SUCCESS)
        }
        AnalyzeCommand::Lemmas { input, k } => {
            let g = load_graph(&input)?;
            let r = lemma_bounds_check(&g, k).map_err(Failure::data)?;
            let mut out = format!("n {} k {} rt {} min_color_degree {}\n", r.n, r.k, r.rt, r.min_color_degree);
            match &r.reduced {
                Some(b) => {
                    writeln!(
                        out,
                        "reduced edges {} min_color_degree {} rt {}",
                        b.edges, b.min_color_degree, b.rt
                    )
                    .unwrap();
                    writeln!(out, "edge-bound rt >= {} {}", b.edge_bound, b.edge_verdict).unwrap();
                    writeln!(out, "degree-bound rt >= {} {}", b.degree_bound, b.degree_verdict).unwrap();
                }
                None => writeln!(out, "edge-bound {}", Verdict::HypothesisNotMet).unwrap(),
            }
            writeln!(out, "density-bound rt >= {} {}", r.density_bound, r.density_verdict).unwrap();
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn render_audit(ctx: &rainbowlab::analysis::PackingContext, t: usize, audit: &ClaimAudit) -> String {
    let mut out = String::new();
    writeln!(out, "context {}", io::context_to_json(ctx).trim_end()).unwrap();
    writeln!(out, "t {t}").unwrap();
    match audit {
        ClaimAudit::NotApplicable { reason, witness } => {
            writeln!(out, "NOT_APPLICABLE {reason}").unwrap();
            if let Some(w) = witness {
                writeln!(out, "witness {}", io::witness_to_json(w).trim_end()).unwrap();
            }
        }
        ClaimAudit::Audited { stats, checks } => {
            writeln!(
                out,
                "rt {} two_outside {} one_outside {} inside {} outside {}",
                stats.rt_total, stats.rt_two_outside, stats.rt_one_outside, stats.rt_inside, stats.rt_outside
            )
            .unwrap();
            let sizes = stats.classification.sizes();
            writeln!(out, "classes {sizes:?} rt2_sums {:?}", stats.class_sums).unwrap();
            writeln!(
                out,
                "split_bound {} combined_bound {} density_bound {} density_hypothesis {}",
                stats.split_bound, stats.combined_bound, stats.density_bound, stats.density_hypothesis
            )
            .unwrap();
            for c in checks {
                writeln!(out, "{} [{}] {} <= {} {}", c.kind, c.scope, c.lhs, c.bound, c.verdict).unwrap();
            }
            let failed = audit.failures().len();
            writeln!(out, "{} checks, {failed} failed", checks.len()).unwrap();
        }
    }
    out
}

fn search(cmd: SearchCommand, workers: usize) -> Outcome {
    let SearchCommand::Packing { input, k, mode, budget, witness_out } = cmd;
    let g = load_graph(&input)?;
    let r = find_packing(&g, k, mode, &search_options(budget, workers)).map_err(Failure::usage)?;
    let code = match r.status {
        SearchStatus::Found => {
            let w = r.witness.as_ref().expect("found carries a witness");
            w.validate(&g).map_err(|e| Failure::new(EX_SOFTWARE, e.to_string()))?;
            println!("FOUND nodes {}", r.nodes);
            print!("{}", io::witness_to_json(w));
            if let Some(path) = &witness_out {
                write_atomic(path, &io::witness_to_json(w))?;
            }
            0
        }
        SearchStatus::None => {
            println!("NONE nodes {}", r.nodes);
            1
        }
        SearchStatus::BudgetExceeded => {
            println!("BUDGET_EXCEEDED nodes {}", r.nodes);
            2
        }
    };
    Ok(ExitCode::from(code))
}

fn oracle(cmd: OracleCommand, workers: usize) -> Outcome {
    let OracleCommand::Ar { n, k, budget, witness_out } = cmd;
    let opts = OracleOptions { budget, workers: workers.max(1), ..OracleOptions::default() };
    let r = brute_force_ar(n, k, &opts).map_err(Failure::usage)?;
    if r.completed {
        println!("ar({n}, {k}C3) = {} complete nodes {} leaves {}", r.value, r.nodes, r.leaves);
    } else {
        println!("ar({n}, {k}C3) >= {} budget_exceeded nodes {}", r.value, r.nodes);
    }
    if let (Some(path), Some(w)) = (&witness_out, &r.witness) {
        write_atomic(path, &io::graph_to_json(w))?;
    }
    Ok(ExitCode::from(if r.completed { 0 } else { 2 }))
}

fn report(cmd: ReportCommand, workers: usize) -> Outcome {
    match cmd {
        ReportCommand::Transitions { k, observed: None } => {
            print!("{}", transitions_csv(&transition_table(k).map_err(Failure::usage)?));
        }
        ReportCommand::Transitions { k, observed: Some(n_max) } => {
            if n_max < 3 * k {
                return Err(Failure::new(EX_USAGE, format!("--observed must be at least 3k = {}", 3 * k)));
            }
            let runs = argmax_runs(k, 3 * k..n_max + 1).map_err(Failure::usage)?;
            let mut out = String::from("family,n_from,n_to\n");
            for (f, a, b) in runs {
                writeln!(out, "{f},{a},{b}").unwrap();
            }
            print!("{out}");
        }
        ReportCommand::Curves { k, n_max, csv } => {
            let rows = family_curves(k, n_max).map_err(Failure::usage)?;
            write_atomic(&csv, &curves_csv(&rows))?;
        }
        ReportCommand::Disprove { k, n_min, n_max, csv } => {
            if n_min > n_max {
                return Err(Failure::new(EX_USAGE, "--n-min exceeds --n-max"));
            }
            let rows = counterexample_report(k, n_min..=n_max).map_err(Failure::usage)?;
            emit(csv.as_deref(), &comparison_csv(&rows))?;
        }
        ReportCommand::Dirac { input, k, budget } => {
            let g = load_graph(&input)?;
            let r = dirac_rainbow_check(&g, k, &search_options(budget, workers)).map_err(Failure::usage)?;
            println!("n {} k {} min_color_degree {}", r.n, r.k, r.min_color_degree);
            println!("color_degree_condition {}", r.color_degree_ok);
            println!("order_condition {}", r.order_ok);
            let status = match r.search.status {
                SearchStatus::Found => "FOUND",
                SearchStatus::None => "NONE",
                SearchStatus::BudgetExceeded => "BUDGET_EXCEEDED",
            };
            println!("search {status} nodes {}", r.search.nodes);
            if r.theorem_violation {
                println!("THEOREM_VIOLATION");
                return Err(Failure::new(EX_SOFTWARE, "hypotheses hold but no packing exists"));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    let workers = cli.workers;
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Analyze(cmd) => analyze(cmd, workers),
        Command::Search(cmd) => search(cmd, workers),
        Command::Oracle(cmd) => oracle(cmd, workers),
        Command::Report(cmd) => report(cmd, workers),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EX_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("rainbowlab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
