//! delcat: run exact verification suites and validate group table files.
//!
//! Exit codes: 0 when every non-skipped check passes, 1 when any check fails
//! or errors, 2 on input errors (unknown suite, bad parameters, unreadable or
//! invalid table files).

use clap::{Parser, Subcommand, ValueEnum};
use delcat_core::chartheory::{build_table, check_invariants, parse_group_table, GroupTableFile};
use delcat_core::report::SuiteParams;
use delcat_core::suites::run_suite;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "delcat", version, about = "exact verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite and print its report.
    Verify(VerifyArgs),
    /// Group table file operations.
    Table {
        #[command(subcommand)]
        command: TableCommand,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// all, lambda_identities, hgroup, trichotomy_scan, delannoy, ofrob, scalars
    #[arg(long)]
    suite: String,
    /// Injectivity scan bound on word length (2..=16).
    #[arg(long, default_value_t = 12)]
    max_weight_length: usize,
    /// Ordered-model bound on the base set size (1..=6).
    #[arg(long, default_value_t = 6)]
    max_ordered_set: usize,
    /// Tournament enumeration bound (1..=8).
    #[arg(long, default_value_t = 6)]
    max_tournament: usize,
    /// Symmetric-function degree bound (4..=10).
    #[arg(long, default_value_t = 6)]
    degree_bound: u32,
    /// Extra group table (JSON) to include in the trichotomy scan.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Parse a group table file and print the status of every invariant.
    Validate { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let extra_table = match &args.table {
        Some(path) => match load_table(path) {
            Ok(t) => Some(t),
            Err(message) => return input_error(message),
        },
        None => None,
    };
    let params = SuiteParams {
        max_weight_length: args.max_weight_length,
        max_ordered_set: args.max_ordered_set,
        max_tournament: args.max_tournament,
        degree_bound: args.degree_bound,
        table_name: extra_table.as_ref().map(|t| t.name.clone()),
    };
    let report = match run_suite(&args.suite, params, extra_table.as_ref()) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    match args.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load_table(path: &Path) -> Result<delcat_core::GroupTable, String> {
    let contents =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_group_table(&contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn validate_table(path: &Path) -> ExitCode {
    let contents = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => return input_error(format!("{}: {e}", path.display())),
    };
    let file: GroupTableFile = match serde_json::from_str(&contents) {
        Ok(f) => f,
        Err(e) => return input_error(format!("{}: parse error: {e}", path.display())),
    };
    let table = match build_table(&file) {
        Ok(t) => t,
        Err(e) => return input_error(format!("{}: {e}", path.display())),
    };
    let mut all_ok = true;
    for check in check_invariants(&table) {
        let status = if check.ok { "ok  " } else { "FAIL" };
        println!("{status} {:28} {}", check.name, check.detail);
        all_ok &= check.ok;
    }
    if all_ok {
        println!("valid: {} ({} classes, order {})", table.name, table.classes.len(), table.order);
        ExitCode::SUCCESS
    } else {
        input_error(format!("{}: table violates invariants", path.display()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Table { command } => match command {
            TableCommand::Validate { path } => validate_table(&path),
        },
    }
}
