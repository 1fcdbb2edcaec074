//! `dcoal`: exact double domination / double coalition solvers and the theorem scan harness.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod input;

/// Exit statuses: 0 ok, 1 validation failure or theorem violation, 2 input error, 3 resource limit.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Input(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Input(m) | Failure::Resource(m) => m,
        }
    }
}

impl From<dcoal_core::Error> for Failure {
    fn from(e: dcoal_core::Error) -> Self {
        use dcoal_core::Error as E;
        match e {
            E::ResourceLimit(_) => Failure::Resource(e.to_string()),
            E::NoDds { .. } | E::Contract(_) => Failure::Invalid(e.to_string()),
            E::Input(_) | E::Parse { .. } | E::Structural(_) | E::NotApplicable(_) => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

pub type CmdResult = Result<(), Failure>;

#[derive(Parser)]
#[command(name = "dcoal", version, about = "Double domination and double coalition numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate graphs as graph6, one per line.
    Gen(commands::gen::GenArgs),
    /// Compute γ×2, d×2 and DC for each input graph, one JSON object per line.
    Solve(commands::solve::SolveArgs),
    /// Check a partition file against a graph.
    VerifyPartition(commands::verify::VerifyArgs),
    /// Build a dc-partition from a maximum double domatic partition.
    Construct(commands::construct::ConstructArgs),
    /// Solve a corpus and check every closed form and bound; writes CSV.
    Scan(commands::scan::ScanArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => commands::gen::run(args),
        Command::Solve(args) => commands::solve::run(args),
        Command::VerifyPartition(args) => commands::verify::run(args),
        Command::Construct(args) => commands::construct::run(args),
        Command::Scan(args) => commands::scan::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message().is_empty() {
                eprintln!("dcoal: {}", f.message());
            }
            ExitCode::from(f.code())
        }
    }
}
