use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qcft::io::commands;
use qcft::io::config::{parse_formats, parse_logical, parse_range, parse_tiling, Format, LogicalSpec, RunConfig};
use qcft::io::IoError;

/// Hyperbolic tilings, Majorana-dimer networks and their boundary states.
#[derive(Parser)]
#[command(name = "qcft", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Letter sequences, parent maps and letter counts per inflation step.
    Inflate(Opts),
    /// Build the tile graph.
    Build(Opts),
    /// Contract the dimer network into a boundary state.
    Contract(Opts),
    /// Entropy profile, central charge, correlations, fidelity and the cut bound.
    Analyze(Opts),
    /// Disk picture and analysis figures as SVG.
    Render(Opts),
    /// Every stage, plus a report.json index.
    Report(Opts),
}

#[derive(Args)]
struct Opts {
    /// Schläfli symbol n,k.
    #[arg(long, value_parser = parse_tiling, default_value = "5,4")]
    tiling: (u32, u32),
    #[arg(long, default_value_t = 4)]
    steps: u32,
    /// all0, all1 or file:<path> (JSON list or map of tile id to 0/1).
    #[arg(long, value_parser = parse_logical, default_value = "all0")]
    logical: LogicalSpec,
    /// Boundary site reported as site 0.
    #[arg(long, default_value_t = 0)]
    anchor: usize,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Comma-separated subset of json,csv,svg.
    #[arg(long, value_parser = parse_formats, default_value = "json,csv,svg")]
    format: BTreeSet<Format>,
    /// Subsystem sizes LO,HI used by the central-charge fit.
    #[arg(long, value_parser = parse_range)]
    fit_range: Option<(usize, usize)>,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Permit more than six inflation steps.
    #[arg(long)]
    allow_large: bool,
}

impl From<Opts> for RunConfig {
    fn from(o: Opts) -> Self {
        RunConfig {
            tiling: o.tiling,
            steps: o.steps,
            logical: o.logical,
            seed_anchor: o.anchor,
            output_dir: o.out,
            formats: o.format,
            fit_range: o.fit_range,
            rng_seed: o.rng_seed,
            allow_large: o.allow_large,
        }
    }
}

fn run(command: Command) -> Result<Vec<PathBuf>, IoError> {
    match command {
        Command::Inflate(o) => commands::cmd_inflate(&o.into()),
        Command::Build(o) => commands::cmd_build(&o.into()),
        Command::Contract(o) => commands::cmd_contract(&o.into()),
        Command::Analyze(o) => commands::cmd_analyze(&o.into()),
        Command::Render(o) => commands::cmd_render(&o.into()),
        Command::Report(o) => commands::cmd_report(&o.into()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(files) => {
            for f in files {
                println!("wrote {}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
