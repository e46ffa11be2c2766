use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod run;

use kmbraid_core::table::{DeltaMap, TableFormat};

#[derive(Parser, Debug)]
#[command(
    name = "kmbraid",
    version,
    about = "Exact Kac-Moody Lie bialgebras and their braided pieces"
)]
struct Cli {
    /// Render tensors with ⊗, ∧ and − instead of ASCII.
    #[arg(long, global = true)]
    unicode: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named Cartan matrix.
    Cartan {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the untwisted affinization of a finite Cartan matrix.
    Affinize {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Structure tables of an algebra.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// The cobracket of an element.
    Cobracket { spec: String, expr: String },
    /// The braided cobracket of a carrier element.
    Braided {
        spec: String,
        expr: String,
        #[command(flatten)]
        carrier: Carrier,
    },
    /// A table of cobrackets over loop degrees 1..=N.
    Table {
        spec: String,
        #[arg(long, default_value_t = 4)]
        max_degree: i64,
        #[arg(long, default_value = "text")]
        format: TableFormat,
        #[arg(long, default_value = "cobracket")]
        map: DeltaMap,
        #[command(flatten)]
        carrier: Carrier,
    },
    /// Run a verification suite: bialgebra, quasitriangular, braided, dbos or
    /// bosonisation.
    Verify {
        suite: String,
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[command(flatten)]
        carrier: Carrier,
    },
    /// Double-bosonisation checks against the ambient algebra.
    Dbos {
        spec: String,
        #[arg(long, conflicts_with = "affinization")]
        delete: Option<String>,
        #[arg(long)]
        affinization: bool,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Golden table files.
    Golden {
        #[command(subcommand)]
        command: GoldenCommand,
    },
}

#[derive(Args, Debug, Default)]
struct Carrier {
    /// Finite specs: the node whose deletion defines the grading.
    #[arg(long)]
    delete: Option<String>,
}

#[derive(Subcommand, Debug)]
enum AlgebraCommand {
    Build {
        spec: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

#[derive(Subcommand, Debug)]
enum GoldenCommand {
    Compare {
        file: String,
        #[arg(long, default_value = "affine:A2")]
        spec: String,
        /// Overrides the map inferred from the file name.
        #[arg(long)]
        map: Option<DeltaMap>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(run::exit_code(&e))
        }
    }
}
