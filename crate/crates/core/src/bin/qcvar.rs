use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qcvar::cli::{cmd_construct, cmd_counterexample, cmd_curve, cmd_variation, cmd_verify, write_output, Format};
use qcvar::io::{read_numbers, read_path_csv};
use qcvar::PhiSpec;

#[derive(Parser)]
#[command(name = "qcvar", version, about = "Variation of quasiconformal maps on lines")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output path, `-` for standard output
    #[arg(long, global = true, default_value = "-")]
    out: String,

    /// csv, json or svg (default depends on the command)
    #[arg(long, global = true)]
    format: Option<Format>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the lacunary map on a horizontal segment
    Curve {
        #[arg(long, default_value_t = 0.0)]
        start: f64,
        #[arg(long, default_value_t = 8.0)]
        end: f64,
        #[arg(long, default_value_t = 0.0)]
        height: f64,
        #[arg(long, default_value_t = 5)]
        depth: u32,
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
    },
    /// φ-variation of a path read from CSV (`t,x1,..,xd`)
    Variation {
        /// CSV file, `-` for standard input
        input: String,
        #[arg(long, default_value = "pow:1")]
        phi: PhiSpec,
    },
    /// Table of V_N and the Jensen floors for N = 1..depth
    Counterexample {
        #[arg(long, default_value_t = 10)]
        depth: u32,
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
    },
    /// Run verification suites; exits nonzero if any check fails
    Verify {
        /// Suite names, or `all`
        #[arg(required = true)]
        suites: Vec<String>,
        /// Samples per suite
        #[arg(long)]
        n: Option<usize>,
    },
    /// Coefficients of the parallel-lines map for heights read from a file
    Construct {
        heights: String,
        #[arg(long)]
        m_trunc: Option<usize>,
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
        /// Sampling depth of the SVG images
        #[arg(long, default_value_t = 4)]
        depth: u32,
    },
}

fn read_input(path: &str) -> qcvar::Result<Vec<u8>> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read(path)?)
    }
}

fn run(cli: Cli) -> qcvar::Result<bool> {
    let (bytes, pass) = match cli.command {
        Command::Curve { start, end, height, depth, eps } => {
            (cmd_curve(start, end, height, depth, eps, cli.format.unwrap_or(Format::Csv))?, true)
        }
        Command::Variation { input, phi } => {
            let path = read_path_csv(&read_input(&input)?[..])?;
            (cmd_variation(&path, phi, cli.format.unwrap_or(Format::Json))?, true)
        }
        Command::Counterexample { depth, eps } => {
            (cmd_counterexample(depth, eps, cli.format.unwrap_or(Format::Json))?, true)
        }
        Command::Verify { suites, n } => cmd_verify(&suites, cli.seed, n, cli.format.unwrap_or(Format::Json))?,
        Command::Construct { heights, m_trunc, eps, depth } => {
            let hs = read_numbers(&read_input(&heights)?[..])?;
            (cmd_construct(&hs, m_trunc, eps, depth, cli.format.unwrap_or(Format::Json))?, true)
        }
    };
    write_output(&cli.out, &bytes)?;
    Ok(pass)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
