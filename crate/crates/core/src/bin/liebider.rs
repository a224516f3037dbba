use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use liebider::bider::Mode;
use liebider::cli::commands::{cmd_bider, cmd_der, cmd_export, cmd_h1, cmd_suite, cmd_validate, load};
use liebider::cli::registry::{Instance, BUILTINS};
use liebider::cli::report::ReportDocument;
use liebider::cli::suites::SUITES;
use liebider::Parity;

#[derive(Parser)]
#[command(name = "liebider", version, about = "Exact biderivation and derivation spaces of Lie (super)algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct Source {
    /// Builtin algebra: sl2, sl3, sp4, heisenberg:n, takiff:sl2, reductive-sl2, oscillator:n, sl21, abelian:n.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    /// Algebra file in the line-oriented text format.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> liebider::Result<Instance> {
        load(self.builtin.as_deref(), self.file.as_deref())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Subcommand)]
enum Command {
    /// Check the algebra axioms and every representation in the file.
    Validate {
        #[command(flatten)]
        source: Source,
    },
    /// Solve for biderivations (super-biderivations for graded algebras).
    Bider {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "adjoint")]
        rep: String,
        /// full, symmetric, skew or super-symmetric.
        #[arg(long, default_value = "full", value_parser = parse_mode)]
        mode: Mode,
        /// Parity of the super-biderivation; graded algebras only.
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
    },
    /// Derivations, inner derivations and first cohomology of a module.
    Der {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "adjoint")]
        rep: String,
    },
    /// Dimension of the first cohomology of a module.
    H1 {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "adjoint")]
        rep: String,
    },
    /// Run a named suite of checks.
    Suite {
        /// whitehead, theorem31, skew, applications, super, oracle, properties or all.
        name: String,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print an algebra in the text file format.
    Export {
        #[command(flatten)]
        source: Source,
        /// Write to this path instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List builtin algebras and suites.
    List,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: liebider::Error| e.to_string())
}

fn finish(report: &ReportDocument, text: Option<String>, json: Option<&PathBuf>) -> Result<ExitCode, String> {
    if let Some(t) = text {
        print!("{t}");
    }
    println!("{report}");
    if let Some(path) = json {
        std::fs::write(path, report.to_json()).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let err = |e: liebider::Error| e.to_string();
    let json = cli.json.as_ref();
    match cli.command {
        Command::Validate { source } => finish(&cmd_validate(&source.load().map_err(err)?), None, json),
        Command::Bider { source, rep, mode, parity } => {
            let parity = parity.map(|p| match p {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            });
            let (report, text) = cmd_bider(&source.load().map_err(err)?, &rep, mode, parity).map_err(err)?;
            finish(&report, Some(text), json)
        }
        Command::Der { source, rep } => {
            let (report, text) = cmd_der(&source.load().map_err(err)?, &rep).map_err(err)?;
            finish(&report, Some(text), json)
        }
        Command::H1 { source, rep } => {
            let (report, text) = cmd_h1(&source.load().map_err(err)?, &rep).map_err(err)?;
            finish(&report, Some(text), json)
        }
        Command::Suite { name, jobs } => finish(&cmd_suite(&name, jobs).map_err(err)?, None, json),
        Command::Export { source, out } => {
            let text = cmd_export(&source.load().map_err(err)?);
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::List => {
            println!("builtins: {}", BUILTINS.join(", "));
            println!("suites: {}", SUITES.join(", "));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
