use std::process::exit;

use clap::{Parser, Subcommand};

use coxcomb::cli;
use coxcomb::invariants::Rank2Side;
use coxcomb::Error;

/// Exact combinatorics of bunched rings: invariants of varieties given by a
/// graded Cox ring presentation and an F-bunch.
#[derive(Parser)]
#[command(name = "coxcomb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Bound on the number of generators admitted by the 2^r face scans.
    #[arg(long, global = true, value_name = "N")]
    max_generators: Option<usize>,
    /// Downgrade the bunch maximality check to a warning.
    #[arg(long, global = true)]
    skip_maximality: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a document describes a valid bunched ring.
    Validate { path: String },
    /// Compute all invariants and print a report.
    Analyze {
        path: String,
        /// Emit the machine-readable JSON report (schema 1).
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit the aligned text report (the default).
        #[arg(long)]
        text: bool,
    },
    /// Print the minimal ambient fan in the text export format.
    Fan { path: String },
    /// Build an intrinsic quadric family member, analyze it, and assert its
    /// classification.
    Quadric {
        #[command(subcommand)]
        family: QuadricCommand,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Rewrite the bunch so that the associated variety is projective.
    Projectivize { path: String },
}

#[derive(Subcommand)]
enum QuadricCommand {
    /// Divisor class group Z: complementary weights with multiplicities.
    Rank1 {
        /// Strictly increasing positive weights, e.g. `1,2,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<i64>,
        /// One multiplicity per weight, mirrored, e.g. `1,4,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        multiplicities: Vec<usize>,
    },
    /// Divisor class group Z^2: the two-parameter classification.
    Rank2 {
        #[command(subcommand)]
        side: Rank2Command,
    },
}

#[derive(Subcommand)]
enum Rank2Command {
    /// Paired classes (1,0) and (0,1), both of multiplicity mu.
    Left {
        #[arg(long)]
        mu: usize,
    },
    /// Classes (1,0) and (-1,2) of multiplicity mu1, squared class (0,1) of
    /// multiplicity mu2.
    Right {
        #[arg(long)]
        mu1: usize,
        #[arg(long)]
        mu2: usize,
    },
}

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

fn run(cli: Cli) -> Result<String, Error> {
    let max = cli.max_generators;
    let skip = cli.skip_maximality;
    match cli.command {
        Command::Validate { path } => cli::cmd_validate(&read(&path)?, max, skip),
        Command::Analyze { path, json, .. } => cli::cmd_analyze(&read(&path)?, json, max, skip),
        Command::Fan { path } => cli::cmd_fan(&read(&path)?, max, skip),
        Command::Projectivize { path } => cli::cmd_projectivize(&read(&path)?, max, skip),
        Command::Quadric { family, json } => match family {
            QuadricCommand::Rank1 {
                weights,
                multiplicities,
            } => cli::cmd_quadric_rank1(&weights, &multiplicities, json, max),
            QuadricCommand::Rank2 { side } => match side {
                Rank2Command::Left { mu } => {
                    cli::cmd_quadric_rank2(Rank2Side::Left, mu, 0, json, max)
                }
                Rank2Command::Right { mu1, mu2 } => {
                    cli::cmd_quadric_rank2(Rank2Side::Right, mu1, mu2, json, max)
                }
            },
        },
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit(e.exit_code());
        }
    }
}
