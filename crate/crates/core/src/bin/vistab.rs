use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vistab::cli::{self, Command, CommandRequest, DimpolySource, Format, Horizon, HORIZON_ENV};
use vistab::irreps::IrrepLabel;

#[derive(Parser, Debug)]
#[command(name = "vistab", version, about = "Stable decompositions of free VI-modules over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args, Debug)]
struct Common {
    /// Field size.
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Decompose M(m) at level n into irreducibles.
    Decompose {
        #[arg(long = "gen")]
        generator: u32,
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Stable multiplicities of a sum of free modules.
    Stabilize {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension polynomial of a module or of one stable irreducible.
    Dimpoly {
        #[arg(long, value_delimiter = ',', conflicts_with = "label", required_unless_present = "label")]
        gens: Vec<u32>,
        /// Stable label as JSON, e.g. '{"iota":[1]}'.
        #[arg(long)]
        label: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// List the irreducible representations of GL_n(F_q).
    Enumerate {
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run the oracle suite.
    Verify {
        #[arg(long)]
        deep: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn request(sub: Sub) -> Result<(CommandRequest, bool), String> {
    let fmt = |f: FormatArg| match f {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let build = |command, c: Common| CommandRequest {
        command,
        q: c.q,
        format: fmt(c.format),
        output: c.output,
    };
    Ok(match sub {
        Sub::Decompose {
            generator,
            level,
            common,
        } => (build(Command::Decompose { generator, level }, common), false),
        Sub::Stabilize { gens, common } => {
            (build(Command::Stabilize { generators: gens }, common), false)
        }
        Sub::Dimpoly {
            gens,
            label,
            common,
        } => {
            let source = match label {
                Some(text) => DimpolySource::Label(
                    text.parse::<IrrepLabel>().map_err(|e| e.to_string())?,
                ),
                None => DimpolySource::Generators(gens),
            };
            (build(Command::Dimpoly { source }, common), false)
        }
        Sub::Enumerate { level, common } => {
            (build(Command::Enumerate { level }, common), false)
        }
        Sub::Verify {
            deep,
            format,
            output,
        } => (
            CommandRequest {
                command: Command::Verify { deep },
                q: 2,
                format: fmt(format),
                output,
            },
            deep,
        ),
    })
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (req, deep) = match request(args.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let base = if deep { Horizon::deep() } else { Horizon::default() };
    let horizon = match std::env::var(HORIZON_ENV) {
        Ok(spec) => match base.with_overrides(&spec) {
            Ok(h) => h,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Err(_) => base,
    };
    let outcome = match cli::run(&req, &horizon) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &req.output {
        Some(path) => std::fs::write(path, &outcome.rendered),
        None => std::io::stdout().lock().write_all(outcome.rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("one or more checks failed");
        ExitCode::from(1)
    }
}
