use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gdu_cli::{commands, SourceArgs};

#[derive(Parser)]
#[command(name = "gdu", version, about = "Certify and explore generalized down-up algebras")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Gröbner certificate, PBW counts, solvable table and ordering axioms.
    Certify {
        #[command(flatten)]
        source: SourceArgs,
        /// Highest degree for the PBW count comparison.
        #[arg(long, default_value_t = 8)]
        degree: u64,
        /// Degree bound for the ordering-axiom check.
        #[arg(long, default_value_t = 4)]
        bound: u64,
    },
    /// Normal form of an expression such as "X3*X1 - 2*X2^2".
    Nf {
        #[command(flatten)]
        source: SourceArgs,
        expression: String,
        /// Reduce in the homogenized algebra (generator T available).
        #[arg(long)]
        homogenized: bool,
    },
    /// Associated graded, homogenized and Rees structures.
    Graded {
        #[command(subcommand)]
        op: GradedOp,
    },
    /// Named presets.
    Presets {
        #[command(subcommand)]
        op: PresetsOp,
    },
}

#[derive(Subcommand)]
enum GradedOp {
    /// Leading homogeneous relations and the dimension ladder.
    Assoc {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 10)]
        degree: u64,
    },
    /// Homogenized relations with a central variable T.
    Homogenize {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Hilbert series of the homogenized algebra.
    Hilbert {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 12)]
        degree: u64,
    },
    /// Growth (GK dimension) of the leading-word algebras.
    Gk {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Homogenized dimensions against the PBW filtration.
    Rees {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 10)]
        degree: u64,
    },
    /// Whether the homogenized relations are quadratic.
    Quadratic {
        #[command(flatten)]
        source: SourceArgs,
    },
}

#[derive(Subcommand)]
enum PresetsOp {
    /// List presets with their parameters.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Certify { source, degree, bound } => commands::certify(&source, degree, bound),
        Command::Nf { source, expression, homogenized } => commands::normal_form(&source, &expression, homogenized),
        Command::Graded { op } => match op {
            GradedOp::Assoc { source, degree } => commands::assoc(&source, degree),
            GradedOp::Homogenize { source } => commands::homogenize(&source),
            GradedOp::Hilbert { source, degree } => commands::hilbert(&source, degree),
            GradedOp::Gk { source } => commands::gk(&source),
            GradedOp::Rees { source, degree } => commands::rees(&source, degree),
            GradedOp::Quadratic { source } => commands::quadratic(&source),
        },
        Command::Presets { op: PresetsOp::List } => commands::presets_list(),
    };
    match result {
        Ok(report) => {
            let text = match cli.format {
                Format::Text => report.render_text(),
                Format::Machine => report.render_machine(),
            };
            print!("{text}");
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
