use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use maxstc_core::incompat::strong_weight;
use maxstc_core::reductions::{
    gen_disjointnn_from_3sp, gen_maxstc_from_disjointnn, gen_random_proper_interval, gen_random_trivially_perfect,
    ReductionError, SetPackingInstance,
};
use maxstc_core::solvers::{
    solve_auto, solve_bipartite, solve_oracle, solve_pig_dp, solve_trivially_perfect, AutoOptions, MwisOptions,
    SolveError, SolveResult, DEFAULT_CAP,
};
use maxstc_core::{build_incompat, validate_stc, Graph, StcCheck};

mod classes;
mod format;

use format::{parse_edge_list, parse_labeling, threshold_table, write_edge_list, ParseError, ResultDocument};

#[derive(Parser)]
#[command(name = "maxstc", version, about = "Exact maximum strong triadic closure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an edge list and print a JSON result document.
    Solve {
        /// Edge-list file, or `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SolverChoice::Auto)]
        solver: SolverChoice,
        /// Largest edge count the brute-force oracle accepts.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        oracle_cap: usize,
        /// Accepted for scripts; every solver is already deterministic.
        #[arg(long)]
        seedless: bool,
    },
    /// Check a labeling against a graph.
    Verify { graph: PathBuf, labeling: PathBuf },
    /// Generate an instance as an edge list.
    Generate {
        #[arg(value_enum)]
        kind: GenerateKind,
        /// Vertex count for random generators.
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Universe size for the reductions.
        #[arg(long)]
        universe: Option<usize>,
        /// Triplets for the reductions, e.g. `1,2,3;4,5,6`.
        #[arg(long, default_value = "")]
        triplets: String,
        /// Write the edge list here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the `k threshold` table of a reduction here.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Report membership in the supported graph classes.
    Recognize { input: PathBuf },
    /// Print the line-incompatibility graph as an edge list.
    Incompat { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverChoice {
    Auto,
    Pig,
    Tp,
    Bip,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenerateKind {
    Pig,
    Tp,
    #[value(name = "3sp-reduction")]
    SetPackingReduction,
    #[value(name = "stc-reduction")]
    StcReduction,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    WrongClass(SolveError),
    #[error("{0}")]
    Unsupported(SolveError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Parse(_) => 2,
            CliError::WrongClass(_) => 3,
            CliError::Unsupported(_) => 4,
            CliError::Internal(_) => 5,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::WrongClass { .. } => CliError::WrongClass(e),
            SolveError::CapExceeded { .. } | SolveError::Unsupported(_) => CliError::Unsupported(e),
            SolveError::Graph(g) => CliError::Input(g.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Solve(s) => s.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let res = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    };
    res.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read_input(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn solve(g: &Graph, choice: SolverChoice, cap: usize) -> Result<SolveResult, SolveError> {
    let oracle = MwisOptions::with_cap(cap);
    match choice {
        SolverChoice::Auto => solve_auto(g, AutoOptions { oracle }),
        SolverChoice::Pig => solve_pig_dp(g),
        SolverChoice::Tp => solve_trivially_perfect(g),
        SolverChoice::Bip => solve_bipartite(g),
        SolverChoice::Oracle => solve_oracle(g, oracle),
    }
}

fn cmd_solve(input: &Path, choice: SolverChoice, cap: usize) -> Result<String, CliError> {
    let g = read_graph(input)?;
    let result = solve(&g, choice, cap)?;
    let text = ResultDocument::from_result(&result).to_json();
    // re-read what is about to be printed and check it from scratch
    let lab = parse_labeling(&text)?;
    let recheck = validate_stc(&g, &lab).map_err(|e| CliError::Internal(e.to_string()))?;
    let weight = strong_weight(&g, &lab).map_err(|e| CliError::Internal(e.to_string()))?;
    if recheck != StcCheck::Valid || weight != result.value {
        return Err(CliError::Internal("result document failed re-validation".to_string()));
    }
    Ok(text)
}

/// Returns the verdict line and whether the labeling is valid.
fn cmd_verify(graph: &Path, labeling: &Path) -> Result<(String, bool), CliError> {
    let g = read_graph(graph)?;
    let lab = parse_labeling(&read_input(labeling)?)?;
    let coverage = |e: maxstc_core::LabelingError| CliError::Input(format!("{}: {e}", labeling.display()));
    match validate_stc(&g, &lab).map_err(coverage)? {
        StcCheck::Valid => Ok((format!("VALID value={}\n", strong_weight(&g, &lab).map_err(coverage)?), true)),
        StcCheck::Violation(u, v, w) => Ok((format!("INVALID {u} {v} {w}\n"), false)),
    }
}

fn parse_triplets(text: &str) -> Result<Vec<[usize; 3]>, CliError> {
    let bad = |t: &str| CliError::Input(format!("triplet `{t}` is not three comma-separated integers"));
    text.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let parts: Vec<usize> =
                t.split(',').map(|x| x.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| bad(t))?;
            <[usize; 3]>::try_from(parts).map_err(|_| bad(t))
        })
        .collect()
}

struct Generated {
    text: String,
    table: Option<String>,
}

fn cmd_generate(kind: GenerateKind, n: usize, seed: u64, universe: Option<usize>, triplets: &str) -> Result<Generated, CliError> {
    let packing = || -> Result<SetPackingInstance, CliError> {
        let universe = universe.ok_or_else(|| CliError::Input("--universe is required for reductions".to_string()))?;
        let ts = parse_triplets(triplets)?;
        let k = ts.len();
        Ok(SetPackingInstance::new(universe, ts, k)?)
    };
    match kind {
        GenerateKind::Pig => Ok(Generated { text: write_edge_list(&gen_random_proper_interval(n, seed), &[]), table: None }),
        GenerateKind::Tp => Ok(Generated { text: write_edge_list(&gen_random_trivially_perfect(n, seed), &[]), table: None }),
        GenerateKind::SetPackingReduction => {
            let sp = packing()?;
            let si = gen_disjointnn_from_3sp(&sp);
            si.verify()?;
            // the packing target carries over unchanged
            let rows: Vec<(usize, u64)> = (0..=si.independent.len()).map(|k| (k, k as u64)).collect();
            let table = threshold_table(&rows);
            let mut comments = vec![
                format!("clique {}", si.clique.join(" ")),
                format!("independent {}", si.independent.join(" ")),
            ];
            comments.extend(table.lines().map(str::to_string));
            Ok(Generated { text: write_edge_list(&si.graph, &comments), table: Some(table) })
        }
        GenerateKind::StcReduction => {
            let sp = packing()?;
            let (gp, threshold) = gen_maxstc_from_disjointnn(&gen_disjointnn_from_3sp(&sp))?;
            let table = threshold_table(&threshold.table(sp.triplets().len()));
            let mut comments = vec![
                format!("clique {}", gp.clique.join(" ")),
                format!("independent {}", gp.independent.join(" ")),
            ];
            comments.extend(table.lines().map(str::to_string));
            Ok(Generated { text: write_edge_list(&gp.graph, &comments), table: Some(table) })
        }
    }
}

fn cmd_recognize(input: &Path) -> Result<String, CliError> {
    let g = read_graph(input)?;
    classes::report(&g).map_err(|u| CliError::Internal(format!("{} failed its re-check", u.0)))
}

fn cmd_incompat(input: &Path) -> Result<String, CliError> {
    let g = read_graph(input)?;
    Ok(write_edge_list(&build_incompat(&g).to_graph(), &[]))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Solve { input, solver, oracle_cap, seedless: _ } => {
            print!("{}", cmd_solve(&input, solver, oracle_cap)?);
        }
        Command::Verify { graph, labeling } => {
            let (line, valid) = cmd_verify(&graph, &labeling)?;
            print!("{line}");
            if !valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Generate { kind, n, seed, universe, triplets, output, sidecar } => {
            let generated = cmd_generate(kind, n, seed, universe, &triplets)?;
            if let (Some(path), Some(table)) = (&sidecar, &generated.table) {
                write_output(Some(path), table)?;
            }
            write_output(output.as_deref(), &generated.text)?;
        }
        Command::Recognize { input } => print!("{}", cmd_recognize(&input)?),
        Command::Incompat { input } => print!("{}", cmd_incompat(&input)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
