use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hqcert::run::{self, PairConfig, RunConfig, Suite};
use hqcert::Result;

#[derive(Parser)]
#[command(name = "hqcert", version, about = "Exact verification of half-quantum matrix identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Comma-separated suite names, or `all`.
        #[arg(long, default_value = "all")]
        suites: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the pair only (axioms suite).
    CertifyPair {
        #[arg(long)]
        config: PathBuf,
    },
    /// Print R, F, Psi and D of the certified pair.
    PrintRmatrix {
        #[arg(long)]
        config: PathBuf,
    },
}

fn load(path: &PathBuf) -> std::result::Result<PairConfig, ExitCode> {
    PairConfig::load(path).map_err(|e| {
        eprintln!("error: cannot read config {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn report(outcome: &run::RunOutcome) -> ExitCode {
    for r in &outcome.reports {
        let status = if r.skipped { "skip" } else if r.pass { "pass" } else { "FAIL" };
        let params = serde_json::to_string(&r.params).unwrap_or_default();
        println!("{status:4} {:<20} {params} ({} ms)", r.check, r.elapsed_ms);
    }
    ExitCode::from(outcome.exit_code() as u8)
}

fn verify(config: RunConfig) -> Result<ExitCode> {
    let outcome = run::run_and_write(&config)?;
    if config.out.is_none() {
        println!("{}", outcome.to_json());
        return Ok(ExitCode::from(outcome.exit_code() as u8));
    }
    Ok(report(&outcome))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { config, suites, max_degree, out } => {
            let pair = match load(&config) {
                Ok(p) => p,
                Err(code) => return code,
            };
            let suites = match Suite::parse_list(&suites) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            if max_degree == 0 {
                eprintln!("error: --max-degree must be at least 1");
                return ExitCode::from(2);
            }
            verify(RunConfig { pair, max_degree, suites, out })
        }
        Command::CertifyPair { config } => match load(&config) {
            Ok(pair) => run::run(&RunConfig { pair, max_degree: 1, suites: vec![Suite::Axioms], out: None })
                .map(|o| report(&o)),
            Err(code) => return code,
        },
        Command::PrintRmatrix { config } => match load(&config) {
            Ok(pair) => pair.certify().and_then(|p| run::operator_dump(&p)).map(|text| {
                println!("{text}");
                ExitCode::SUCCESS
            }),
            Err(code) => return code,
        },
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })
}
