use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hopfcyc::scenario::{emit, parse_field, parse_scenario, run, Format, RunOptions, TaskKind};

#[derive(Parser)]
#[command(name = "hopfcyc", version, about = "Run Hopf-cyclic scenario files")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Structure checks (`validate` tasks)
    Validate(Args),
    /// Hochschild, cyclic and Lie-Rinehart homology (`homology` tasks)
    Homology(Args),
    /// Measuring checks (`measure` tasks)
    Measure(Args),
    /// Induced maps and Hopf-Galois squares (`induced`, `hopf_galois` tasks)
    Induced(Args),
    /// Every task in the scenario
    Report(Args),
}

#[derive(clap::Args)]
struct Args {
    scenario: PathBuf,
    /// Highest homology degree; overrides the tasks' own value
    #[arg(long)]
    max_degree: Option<usize>,
    /// `Q` or `F<p>`; overrides the scenario's field
    #[arg(long)]
    field: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Run tasks concurrently; the report order is unchanged
    #[arg(long)]
    parallel: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, kinds) = match cli.verb {
        Verb::Validate(a) => (a, vec![TaskKind::Validate]),
        Verb::Homology(a) => (a, vec![TaskKind::Homology]),
        Verb::Measure(a) => (a, vec![TaskKind::Measure]),
        Verb::Induced(a) => (a, vec![TaskKind::Induced, TaskKind::HopfGalois]),
        Verb::Report(a) => (a, vec![]),
    };
    let outcome = (|| {
        let field = args.field.as_deref().map(parse_field).transpose()?;
        let doc = parse_scenario(&args.scenario)?;
        let opts = RunOptions { max_degree: args.max_degree, field, kinds, parallel: args.parallel };
        run(&doc, &opts)
    })();
    match outcome {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(&emit(&report, args.format)).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{}: {e}", e.kind());
            ExitCode::from(2)
        }
    }
}
