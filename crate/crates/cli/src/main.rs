use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homhopf::linalg::Field;
use homhopf_cli::{run, Command, Format, RunConfig};

#[derive(Parser)]
#[command(name = "homhopf", version, about = "Exact checks for monoidal Hom-Hopf algebras, crossed products, cleft and Galois extensions")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Ground field: Q or Fp:<p>. Overrides the field declared in input files.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Seed for the normal-basis search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Directory for emitted files.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the axiom suite for a structure, group, system, comodule or cleft file.
    Verify { path: PathBuf },
    /// Check a crossed system and write its crossed product.
    Crossed {
        path: PathBuf,
        /// Write the product even when the conditions fail.
        #[arg(long)]
        force: bool,
    },
    /// Check a cleft extension and recover its crossed system.
    Cleft { path: PathBuf },
    /// Galois map, normal-basis witness and the cleft structure it induces.
    Galois { path: PathBuf },
    /// Crossed→cleft→crossed, cleft→crossed→cleft and Galois→cleft→crossed chains.
    Roundtrip { path: PathBuf },
    /// Emit fixtures for a group extension such as `S3/A3 conj:(12)`.
    Example { name: String, params: Vec<String> },
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::from_flag(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Verify { path } => Command::Verify { path },
        Cmd::Crossed { path, force } => Command::Crossed { path, force },
        Cmd::Cleft { path } => Command::Cleft { path },
        Cmd::Galois { path } => Command::Galois { path },
        Cmd::Roundtrip { path } => Command::Roundtrip { path },
        Cmd::Example { name, params } => Command::Example { name, params },
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    let cfg = RunConfig {
        command,
        field: cli.field,
        seed: cli.seed,
        format,
        out: cli.out,
    };
    let report = run(&cfg);
    print!("{}", report.render(format));
    ExitCode::from(report.exit_code() as u8)
}
