use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use degloci::scenario::{parse_order, parse_scenario, run, Overrides, Report, RunOptions};
use degloci::ring::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

/// Run degeneracy-locus scenarios and report the results.
#[derive(Debug, Parser)]
#[command(name = "degloci", version)]
struct Args {
    /// Scenario file to run. May be given more than once.
    #[arg(long, value_name = "PATH")]
    scenario: Vec<PathBuf>,

    /// Directory whose `*.scn` files are run in name order.
    #[arg(long, value_name = "DIR")]
    corpus: Option<PathBuf>,

    /// Override the characteristic of every ring (0 or a prime).
    #[arg(long = "char", value_name = "P")]
    characteristic: Option<u32>,

    /// Override the monomial order of every ring.
    #[arg(long, value_parser = order_arg, value_name = "grevlex|lex|block:K")]
    order: Option<MonomialOrder>,

    /// Cap on intermediate degrees during Gröbner computations.
    #[arg(long, env = "DEGLOCI_MAX_DEGREE", value_name = "N")]
    max_degree: Option<u32>,

    /// Largest Frobenius exponent tried by ampleness checks.
    #[arg(long, value_name = "N")]
    a_max: Option<u32>,

    /// Seed for randomly generated maps.
    #[arg(long, value_name = "U64")]
    seed: Option<u64>,

    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,

    /// Parse and validate without running any task.
    #[arg(long)]
    dry_run: bool,

    /// Run the tasks of each scenario on separate threads.
    #[arg(long)]
    parallel: bool,
}

fn order_arg(s: &str) -> Result<MonomialOrder, String> {
    parse_order(s).ok_or_else(|| format!("unknown monomial order `{s}`"))
}

fn scenario_files(args: &Args) -> std::io::Result<Vec<PathBuf>> {
    let mut files = args.scenario.clone();
    if let Some(dir) = &args.corpus {
        let mut found: Vec<PathBuf> = std::fs::read_dir(dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "scn"))
            .collect();
        found.sort();
        files.extend(found);
    }
    Ok(files)
}

fn display_name(p: &Path) -> String {
    p.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| p.display().to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let files = match scenario_files(&args) {
        Ok(f) if !f.is_empty() => f,
        Ok(_) => {
            eprintln!("degloci: nothing to run; pass --scenario or --corpus");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("degloci: {e}");
            return ExitCode::from(2);
        }
    };
    let ov = Overrides {
        characteristic: args.characteristic,
        order: args.order,
        max_degree: args.max_degree,
        seed: args.seed,
        a_max: args.a_max,
    };
    let opts = RunOptions {
        dry_run: args.dry_run,
        parallel: args.parallel,
        a_max: args.a_max,
    };

    let mut reports: Vec<Report> = Vec::new();
    for path in &files {
        let name = display_name(path);
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("degloci: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        };
        let scenario = match parse_scenario(&name, &text, &ov) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("{name}:{e}");
                return ExitCode::from(2);
            }
        };
        let report = run(&scenario, &opts);
        match args.report {
            ReportFormat::Json => print!("{}", report.to_json_lines()),
            ReportFormat::Text => print!("{}", report.to_text()),
        }
        reports.push(report);
    }
    let code = reports.iter().map(Report::exit_code).fold(0, |acc, c| match (acc, c) {
        (1, _) | (_, 1) => 1,
        (3, _) | (_, 3) => 3,
        _ => 0,
    });
    ExitCode::from(code as u8)
}
