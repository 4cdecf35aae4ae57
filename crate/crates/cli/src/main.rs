//! `bqo`: batch front end for the quasi-order toolkit.

mod cmd;
mod fixtures;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Finite window the checks are quantified over (at least 2).
    #[arg(long, global = true, default_value_t = 16)]
    pub window: u64,
    /// Seed for randomized batteries.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Enumerate instead of sampling where a battery supports both.
    #[arg(long, global = true)]
    pub exhaustive: bool,
}

impl RunConfig {
    pub fn json(&self) -> bool {
        self.format == Format::Json
    }
}

#[derive(Parser)]
#[command(
    name = "bqo",
    version,
    about = "Window-bounded checks on well- and better-quasi-orders"
)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quasi-order files and built-in orders.
    #[command(subcommand)]
    Qo(cmd::qo::QoCmd),
    /// Rado's order.
    #[command(subcommand)]
    Rado(cmd::rado::RadoCmd),
    /// Fronts on infinite subsets of ω.
    #[command(subcommand)]
    Front(cmd::front::FrontCmd),
    /// Super-sequences given by named valuations.
    #[command(subcommand)]
    Seq(cmd::seq::SeqCmd),
    /// The game on hereditarily finite sets.
    #[command(subcommand)]
    Game(cmd::game::GameCmd),
    /// Ramsey-type extraction.
    #[command(subcommand)]
    Extract(cmd::extract::ExtractCmd),
    /// Increasing injections and generalised shifts.
    #[command(subcommand)]
    Shift(cmd::shift::ShiftCmd),
}

const SUBCOMMANDS: &str = "\
qo validate|relations|product|sum
rado witness|demo
front member|step|ray|restrict|rank|verify
seq eval|spare|sparsify|bad|perfect
game solve|play|supp|string|tilde
extract ramsey|nw|dichotomy|laver
shift rho|sigma|critical|orbit|perfect";

fn command_name(c: &Command) -> String {
    let (group, sub) = match c {
        Command::Qo(s) => ("qo", s.name()),
        Command::Rado(s) => ("rado", s.name()),
        Command::Front(s) => ("front", s.name()),
        Command::Seq(s) => ("seq", s.name()),
        Command::Game(s) => ("game", s.name()),
        Command::Extract(s) => ("extract", s.name()),
        Command::Shift(s) => ("shift", s.name()),
    };
    format!("{group} {sub}")
}

fn dispatch(c: Command, cfg: &RunConfig) -> report::CliResult {
    match c {
        Command::Qo(s) => s.run(cfg),
        Command::Rado(s) => s.run(cfg),
        Command::Front(s) => s.run(cfg),
        Command::Seq(s) => s.run(cfg),
        Command::Game(s) => s.run(cfg),
        Command::Extract(s) => s.run(cfg),
        Command::Shift(s) => s.run(cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            if informational {
                return ExitCode::SUCCESS;
            }
            eprintln!("\nvalid subcommands:\n{SUBCOMMANDS}");
            return ExitCode::from(2);
        }
    };
    let cfg = cli.config;
    let name = command_name(&cli.command);
    let outcome = if cfg.window < 2 {
        Err(CliError::usage(format!(
            "--window must be at least 2, got {}",
            cfg.window
        )))
    } else {
        dispatch(cli.command, &cfg)
    };
    match outcome {
        Ok(r) => {
            println!("{}", r.render(&cfg));
            if !cfg.json() {
                eprintln!("{}", report::Report::footer(&cfg));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                CliError::Usage(_) => {
                    eprintln!("{}", e.render(&name, &cfg));
                    eprintln!("\nvalid subcommands:\n{SUBCOMMANDS}");
                }
                CliError::Domain { .. } if cfg.json() => {
                    println!("{}", e.render(&name, &cfg));
                    eprintln!("error: {e}");
                }
                CliError::Domain { .. } => eprintln!("{}", e.render(&name, &cfg)),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
