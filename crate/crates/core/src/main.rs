use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use realbott::cli::{self, CommandOutput, Options};

#[derive(Parser)]
#[command(name = "realbott", version, about = "Stiefel-Whitney classes of real Bott manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print w_0..w_n, orientability and holonomy rank for a matrix file
    Compute {
        /// Matrix file (text or JSON); `-` reads stdin
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Only report w_k for these k
        #[arg(long)]
        k: Vec<usize>,
    },
    /// Check the even-degree decomposition over elementary components
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Only report the decomposition of w_{2k} for these k
        #[arg(long)]
        k: Vec<usize>,
    },
    /// Run the checks over every Bott matrix of dimension n
    Sweep {
        n: usize,
        #[arg(long)]
        json: bool,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest allowed n(n-1)/2
        #[arg(long)]
        max_bits: Option<u32>,
    },
    /// Recompute the built-in 7-dimensional example
    Example,
}

fn read_input(file: &PathBuf) -> Result<String, CommandOutput> {
    let read = if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(file)
    };
    read.map_err(|e| CommandOutput {
        stdout: String::new(),
        stderr: format!("error: {}: {e}\n", file.display()),
        status: cli::ExitStatus::InputError,
    })
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let output = match args.command {
        Command::Compute { file, json, k } => {
            read_input(&file).map(|text| cli::compute(&text, &Options { json, k })).unwrap_or_else(|e| e)
        }
        Command::Verify { file, json, k } => {
            read_input(&file).map(|text| cli::verify(&text, &Options { json, k })).unwrap_or_else(|e| e)
        }
        Command::Sweep { n, json, jobs, max_bits } => cli::sweep(n, jobs, max_bits, json),
        Command::Example => cli::example(),
    };
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    ExitCode::from(output.status.code())
}
