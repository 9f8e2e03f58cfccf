use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hcc_cli::commands::{self, CupRequest, Variant};
use hcc_cli::error::CliError;
use hcc_cli::output::Output;
use hcc_cli::spec::Catalog;

const DEFAULT_CAP: usize = 4;

#[derive(Parser)]
#[command(name = "hcc", version, about = "Exact Hopf cyclic cohomology and cup products over the rationals")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Highest cochain degree any command may request.
    #[arg(long, env = "HCC_MAX_DEGREE", default_value_t = DEFAULT_CAP, global = true)]
    max_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliVariant {
    Ac,
    Aa,
    AcGeneral,
    AaGeneral,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of the named objects, or of everything in the catalog file.
    Check {
        #[arg(value_name = "CATALOG")]
        spec: PathBuf,
        names: Vec<String>,
    },
    /// Hochschild and cyclic cohomology of a construction.
    Cohomology {
        #[arg(value_name = "CATALOG")]
        spec: PathBuf,
        construction: String,
        #[arg(long)]
        max_degree: usize,
    },
    /// Cup product of two stored cochains.
    Cup {
        #[arg(value_name = "CATALOG")]
        spec: PathBuf,
        #[arg(long, value_enum)]
        variant: CliVariant,
        /// Degree of the cochain on the module algebra with contramodule coefficients.
        #[arg(long)]
        p: usize,
        /// Degree of the other cochain.
        #[arg(long)]
        q: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        action: Option<String>,
        #[arg(long)]
        pair: Option<String>,
    },
}

fn load(path: &PathBuf) -> Result<Catalog, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Catalog::from_json(&text)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let cap = cli.max_cap;
    match &cli.command {
        Command::Check { spec, names } => commands::check(&load(spec)?, names, cap),
        Command::Cohomology {
            spec,
            construction,
            max_degree,
        } => commands::cohomology(&load(spec)?, construction, *max_degree, cap),
        Command::Cup {
            spec,
            variant,
            p,
            q,
            left,
            right,
            action,
            pair,
        } => {
            let variant = match variant {
                CliVariant::Ac => Variant::Ac,
                CliVariant::Aa => Variant::Aa,
                CliVariant::AcGeneral => Variant::AcGeneral,
                CliVariant::AaGeneral => Variant::AaGeneral,
            };
            let req = CupRequest {
                variant,
                p: *p,
                q: *q,
                left: left.clone(),
                right: right.clone(),
                action: action.clone(),
                pair: pair.clone(),
            };
            commands::cup(&load(spec)?, &req, cap)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match cli.command {
        Command::Check { .. } => "check",
        Command::Cohomology { .. } => "cohomology",
        Command::Cup { .. } => "cup",
    };
    let (output, code) = match run(&cli) {
        Ok(o) => {
            let code = o.exit_code();
            (o, code)
        }
        Err(e) => {
            let code = e.exit_code();
            let mut o = Output::error(name, cli.max_cap, e.to_string());
            if code == 1 {
                o.status = hcc_cli::output::Status::Fail;
            }
            (o, code)
        }
    };
    match cli.format {
        Format::Json => print!("{}", output.to_json()),
        Format::Text if output.error.is_some() => eprint!("{}", output.to_text()),
        Format::Text => print!("{}", output.to_text()),
    }
    ExitCode::from(code as u8)
}
