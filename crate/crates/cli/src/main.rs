use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use catena::analyzer::AnalysisConfig;
use catena::exec::{execute, Format, EXIT_PARSE, REPORT_SCHEMA};
use catena::groebner::DEFAULT_GB_STEPS;
use catena::poly::MonomialOrder;
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

/// Classify complete local rings K[[x]]/I given as a script.
#[derive(Debug, Parser)]
#[command(name = "catena", version)]
struct Cli {
    /// Script file; reads stdin when absent or `-`.
    script: Option<PathBuf>,
    /// Output format: text, json or dot.
    #[arg(long, default_value = "text")]
    format: String,
    /// Monomial order for Gröbner computations.
    #[arg(long, value_enum, default_value = "grevlex")]
    order: OrderArg,
    #[arg(long, default_value_t = DEFAULT_GB_STEPS)]
    budget_gb_steps: usize,
    #[arg(long, default_value_t = catena::analyzer::DEFAULT_REGULAR_CANDIDATES)]
    budget_regular_candidates: usize,
    #[arg(long, default_value_t = catena::spectra::DEFAULT_MAX_POSET_VARS)]
    max_poset_vars: usize,
    /// Print the JSON schema of the analysis report and exit.
    #[arg(long)]
    print_schema: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.print_schema {
        print!("{REPORT_SCHEMA}");
        return ExitCode::SUCCESS;
    }
    let format: Format = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE as u8);
        }
    };
    let mut src = String::new();
    let read = match &cli.script {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map(|s| src = s),
        _ => std::io::stdin().read_to_string(&mut src).map(|_| ()),
    };
    if let Err(e) = read {
        eprintln!("error: cannot read script: {e}");
        return ExitCode::from(EXIT_PARSE as u8);
    }
    let config = AnalysisConfig {
        gb_steps: cli.budget_gb_steps,
        regular_candidates: cli.budget_regular_candidates,
        max_poset_vars: cli.max_poset_vars,
        order: match cli.order {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        },
    };
    let (out, err, code) = execute(&src, &config, format);
    print!("{out}");
    eprint!("{err}");
    ExitCode::from(code as u8)
}
