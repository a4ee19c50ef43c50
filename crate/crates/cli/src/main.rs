use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use formchase_cli::{execute_script, parse_script, selftest::selftest, Format, Options};
use formchase_core::suite::{HomCoverage, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "formchase",
    version,
    about = "Subobject chasing and isomorphism-theorem checks over finite groups and rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a script (`-` reads standard input).
    Run {
        script: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Stop at the first failing statement.
        #[arg(long)]
        fail_fast: bool,
        /// Largest object a declaration may build.
        #[arg(long, default_value_t = formchase_core::elemset::MAX_ORDER)]
        max_order: usize,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Largest catalogue group order used by the exhaustive criteria.
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        /// Seed for the randomized criteria.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Stop after the first failing criterion.
        #[arg(long)]
        fail_fast: bool,
        /// Run the image theorem over one homomorphism per codomain
        /// automorphism orbit instead of every homomorphism.
        #[arg(long)]
        quick: bool,
    },
}

fn read_script(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Run { script, format, fail_fast, max_order } => {
            let text = match read_script(&script) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("formchase: cannot read {}: {e}", script.display());
                    return ExitCode::from(2);
                }
            };
            let parsed = match parse_script(&text) {
                Ok(s) => s,
                Err(e) => {
                    match Format::from(format) {
                        Format::Text => eprintln!("{}: {e}", script.display()),
                        Format::Json => {
                            let record = serde_json::json!({
                                "error": e.kind.as_str(),
                                "line": e.line,
                                "column": e.column,
                                "message": e.message,
                            });
                            let _ = writeln!(stdout, "{record}");
                        }
                    }
                    return ExitCode::from(2);
                }
            };
            let run = execute_script(&parsed, &Options { fail_fast, max_order });
            let _ = stdout.write_all(run.render(format.into()).as_bytes());
            ExitCode::from(run.exit_code() as u8)
        }
        Command::Selftest { max_order, seed, format, fail_fast, quick } => {
            let cfg = SuiteConfig {
                max_order,
                seed,
                fail_fast,
                image_homs: if quick { HomCoverage::OrbitRepresentatives } else { HomCoverage::All },
                ..SuiteConfig::default()
            };
            let passed = selftest(&cfg, format.into(), |s| {
                let _ = stdout.write_all(s.as_bytes());
                let _ = stdout.flush();
            });
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
