use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use relres::cli::{self, Command, Options};

#[derive(Parser)]
#[command(
    name = "relres",
    version,
    about = "Sectional and relative pseudocomplements, residuation and congruences on finite posets"
)]
struct Args {
    /// Carrier limit for congruence enumeration and exhaustive subset scans.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a structure and check the tables it carries.
    Check { file: PathBuf },
    /// Compute the sectional pseudocomplement table.
    Synthesize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate Con A and test permutability, distributivity, weak regularity.
    Congruences { file: PathBuf },
    /// Direct product of two structures with componentwise shared tables.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the property suites that apply to the structure.
    Properties { file: PathBuf },
    /// Check the canonical subset operators M and R.
    Operators {
        file: PathBuf,
        #[arg(long)]
        exhaustive_subsets: bool,
    },
    /// List posets or lattices of a given size.
    Enumerate {
        size: usize,
        #[arg(long, default_value = "lattices")]
        filter: String,
        /// Keep isomorphic copies.
        #[arg(long)]
        labeled: bool,
    },
    /// Print a built-in structure (N5, P6, EX1, M3, CHAIN(k), BOOLE(k)).
    Fixture { name: String },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::Check { file } => Command::Check { file },
        Cmd::Synthesize { file, output } => Command::Synthesize { file, output },
        Cmd::Congruences { file } => Command::Congruences { file },
        Cmd::Product {
            left,
            right,
            output,
        } => Command::Product {
            left,
            right,
            output,
        },
        Cmd::Properties { file } => Command::Properties { file },
        Cmd::Operators {
            file,
            exhaustive_subsets,
        } => Command::Operators {
            file,
            exhaustive_subsets,
        },
        Cmd::Enumerate {
            size,
            filter,
            labeled,
        } => Command::Enumerate {
            size,
            filter,
            labeled,
        },
        Cmd::Fixture { name } => Command::Fixture { name },
    };
    let outcome = cli::run(
        &command,
        &Options {
            budget: args.budget,
        },
    );
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    ExitCode::from(outcome.code as u8)
}
