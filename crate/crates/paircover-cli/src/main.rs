//! One binary, six subcommands: field, mols, bibd, assign, bounds, oracle.
//!
//! Exit status: 0 on success, 1 when a requested validation fails (for
//! example `bibd check` on a flawed design), 2 on usage or precondition
//! errors, with the violated condition named on stderr.

mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use paircover::{
    are_orthogonal, assign, check_disjoint_lines, compare, construct_q2_bibd, is_latin, juxtapose,
    make_instance, min_cover_exact, mols_complete, validate_bibd, FieldSpec, SearchBudget,
    SearchResult,
};

use crate::input::{read_design, read_labels, CliError};
use crate::render::{
    assign_csv, assign_json, assign_table, bounds_grid_csv, bounds_report, design_json,
    design_lines, field_summary, field_tables, report_line, square_csv,
};

#[derive(Parser)]
#[command(
    name = "paircover",
    version,
    about = "Referee assignments that co-review every pair of proposals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe GF(q) and optionally print its operation tables
    Field {
        /// Field order (a prime power)
        #[arg(long)]
        order: usize,
        /// Print addition and multiplication tables as CSV
        #[arg(long)]
        table: bool,
    },
    /// Print the complete set of q-1 mutually orthogonal Latin squares
    Mols {
        /// Square order (a prime power)
        #[arg(long)]
        order: usize,
        /// Append a pass/fail property report
        #[arg(long)]
        verify: bool,
    },
    /// Construct a (q^2, q, 1) block design, or check a design file
    Bibd(BibdArgs),
    /// Assign proposals to referees so every pair shares a referee
    Assign {
        /// Number of proposals n
        #[arg(long)]
        proposals: usize,
        /// Per-referee capacity k
        #[arg(long)]
        capacity: usize,
        #[arg(long, value_enum, default_value_t = AssignFormat::Table)]
        format: AssignFormat,
        /// File with one proposal label per line (table rendering only)
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Referee-count bounds and method comparison
    Bounds {
        /// Number of proposals n
        #[arg(long)]
        proposals: Option<usize>,
        /// Per-referee capacity k
        #[arg(long)]
        capacity: Option<usize>,
        /// Sweep all 2 <= k <= n <= NMAX to CSV instead of one report
        #[arg(long, value_name = "NMAX")]
        grid: Option<usize>,
    },
    /// Exact minimum-covering search for tiny instances
    Oracle {
        /// Number of proposals n (at most 10)
        #[arg(long)]
        proposals: usize,
        /// Per-referee capacity k
        #[arg(long)]
        capacity: usize,
        /// Largest covering size to consider
        #[arg(long)]
        max_blocks: Option<usize>,
        /// Wall-clock cap in seconds
        #[arg(long, value_name = "SECONDS")]
        time_limit: Option<u64>,
        /// Cap on explored search nodes
        #[arg(long)]
        node_limit: Option<u64>,
    },
}

#[derive(Args)]
struct BibdArgs {
    #[command(subcommand)]
    action: Option<BibdAction>,
    /// Design order (a prime power)
    #[arg(long)]
    q: Option<usize>,
    /// Append a validation verdict for the constructed design
    #[arg(long)]
    validate: bool,
    #[arg(long, value_enum, default_value_t = BibdFormat::Csv)]
    format: BibdFormat,
}

#[derive(Subcommand)]
enum BibdAction {
    /// Validate a design file; omit FILE or pass "-" to read stdin
    Check { file: Option<PathBuf> },
}

#[derive(Clone, Copy, ValueEnum)]
enum BibdFormat {
    /// One block per line, comma-separated point labels
    Csv,
    /// {"v","t","lambda","blocks"} envelope
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AssignFormat {
    /// One row per referee, one column per proposal
    Table,
    /// One referee per line, comma-separated proposals
    Csv,
    /// {"n","k","referees"} envelope
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(2)
        }
    }
}

/// Returns Ok(false) when a requested validation failed.
fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Field { order, table } => {
            let field = FieldSpec::new(order)?;
            println!("{}", field_summary(&field));
            if table {
                print!("{}", field_tables(&field)?);
            }
            Ok(true)
        }
        Command::Mols { order, verify } => {
            let squares = mols_complete(order)?;
            let blocks: Vec<String> = squares.iter().map(|s| square_csv(s.rows())).collect();
            print!("{}", blocks.join("\n"));
            if !verify {
                return Ok(true);
            }
            let latin_ok = squares.iter().all(|s| is_latin(s.rows()));
            let mut orthogonal_ok = true;
            for i in 0..squares.len() {
                for j in i + 1..squares.len() {
                    orthogonal_ok &= are_orthogonal(&squares[i], &squares[j])?;
                }
            }
            let disjoint_ok = check_disjoint_lines(&juxtapose(&squares)?);
            println!();
            println!("latin: {}", if latin_ok { "pass" } else { "fail" });
            println!(
                "orthogonal: {}",
                if orthogonal_ok { "pass" } else { "fail" }
            );
            println!(
                "disjoint-lines: {}",
                if disjoint_ok { "pass" } else { "fail" }
            );
            Ok(latin_ok && orthogonal_ok && disjoint_ok)
        }
        Command::Bibd(args) => run_bibd(args),
        Command::Assign {
            proposals,
            capacity,
            format,
            labels,
        } => {
            let instance = make_instance(proposals, capacity)?;
            let assignment = assign(&instance);
            match format {
                AssignFormat::Table => {
                    let labels = labels
                        .map(|path| read_labels(&path, proposals))
                        .transpose()?;
                    print!("{}", assign_table(&assignment, labels.as_deref()));
                }
                AssignFormat::Csv => print!("{}", assign_csv(&assignment)),
                AssignFormat::Json => println!("{}", assign_json(&assignment)),
            }
            Ok(true)
        }
        Command::Bounds {
            proposals,
            capacity,
            grid,
        } => {
            if let Some(nmax) = grid {
                print!("{}", bounds_grid_csv(nmax)?);
                return Ok(true);
            }
            let (Some(n), Some(k)) = (proposals, capacity) else {
                return Err(CliError::Input(
                    "bounds needs --proposals and --capacity, or --grid".into(),
                ));
            };
            print!("{}", bounds_report(&compare(n, k)?));
            Ok(true)
        }
        Command::Oracle {
            proposals,
            capacity,
            max_blocks,
            time_limit,
            node_limit,
        } => {
            let mut budget = SearchBudget::default();
            if let Some(cap) = max_blocks {
                budget.max_blocks = cap;
            }
            if let Some(secs) = time_limit {
                budget.time_limit = Duration::from_secs(secs);
            }
            if let Some(nodes) = node_limit {
                budget.node_limit = nodes;
            }
            match min_cover_exact(proposals, capacity, &budget)? {
                SearchResult::Exact { size, blocks } => {
                    println!("minimum={size}");
                    print!("{}", design_lines(blocks.iter()));
                }
                SearchResult::Exhausted { limit, best } => {
                    println!("exhausted={limit}");
                    if let Some(blocks) = best {
                        println!("best={}", blocks.len());
                        print!("{}", design_lines(blocks.iter()));
                    }
                }
            }
            Ok(true)
        }
    }
}

fn run_bibd(args: BibdArgs) -> Result<bool, CliError> {
    if let Some(BibdAction::Check { file }) = args.action {
        let (design, t, lambda) = read_design(file.as_deref())?;
        let report = validate_bibd(&design, t, lambda);
        println!("{}", report_line("check", &report));
        return Ok(report.pass());
    }
    let q = args
        .q
        .ok_or_else(|| CliError::Input("bibd needs --q <q>, or the check subcommand".into()))?;
    let design = construct_q2_bibd(q)?;
    match args.format {
        BibdFormat::Csv => print!("{}", design_lines(design.blocks.iter().map(|b| &b.points))),
        BibdFormat::Json => println!("{}", design_json(&design, q, 1)),
    }
    if args.validate {
        let report = validate_bibd(&design, q, 1);
        println!("{}", report_line("validate", &report));
        return Ok(report.pass());
    }
    Ok(true)
}
