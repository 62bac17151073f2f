use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nlalg::{parse_problem_file, run_command, run_oracle, CliError, OracleKind, Report};
use serde_json::json;

#[derive(Parser)]
#[command(name = "nlalg", version, about = "Exact componentwise linear algebra over n-fields")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the command in a problem file and print its report.
    Run {
        file: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Check engine results against a brute-force oracle.
    Oracle {
        kind: Kind,
        file: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Parse and validate a problem file without running it.
    Validate { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Det,
    Roots,
    Factor,
    Minpoly,
}

impl From<Kind> for OracleKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Det => OracleKind::Det,
            Kind::Roots => OracleKind::Roots,
            Kind::Factor => OracleKind::Factor,
            Kind::Minpoly => OracleKind::Minpoly,
        }
    }
}

fn emit(report: &Report, pretty: bool, out: Option<&PathBuf>) -> ExitCode {
    let text = report.render(pretty);
    if let Some(path) = out {
        if let Err(e) = std::fs::write(path, &text) {
            let err = CliError::Io(format!("{}: {e}", path.display()));
            print!("{}", Report::from_error(&err).render(pretty));
            return ExitCode::from(2);
        }
    } else {
        print!("{text}");
    }
    ExitCode::from(report.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Run { file, out, pretty } => {
            let report = match parse_problem_file(&file) {
                Ok(p) => run_command(&p),
                Err(e) => Report::from_error(&e),
            };
            emit(&report, pretty, out.as_ref())
        }
        Cmd::Oracle { kind, file, pretty } => {
            let report = match parse_problem_file(&file) {
                Ok(p) => run_oracle(kind.into(), &p),
                Err(e) => Report::from_error(&e),
            };
            emit(&report, pretty, None)
        }
        Cmd::Validate { file } => {
            let report = match parse_problem_file(&file) {
                Ok(p) => Report {
                    value: json!({
                        "schema": nlalg::report::REPORT_SCHEMA,
                        "status": "ok",
                        "exit_code": 0,
                        "nfield": p.fields.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                        "valid_nfield": p.nfield.is_some(),
                        "objects": p.objects.iter().map(|(n, o)| json!({"name": n, "kind": o.kind.name()})).collect::<Vec<_>>(),
                        "command": p.command.name,
                    }),
                    exit_code: 0,
                },
                Err(e) => Report::from_error(&e),
            };
            emit(&report, false, None)
        }
    }
}
