use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pmat::commands::{self, CertKind, INPUT_ERROR};

/// Exact-arithmetic deciders and reductions from max cut down to P-matrices.
///
/// Exit codes: 0 yes/consistent/valid, 1 no/invalid, 2 inconsistent chain,
/// 3 input error.
#[derive(Parser)]
#[command(name = "pmat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has a cut of size at least K.
    Maxcut {
        graph: PathBuf,
        k: u64,
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Compute r(A), or decide r(A) >= K when K is given.
    Rnorm {
        matrix: PathBuf,
        k: Option<String>,
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Decide whether an interval matrix contains a singular matrix.
    IntervalSing {
        interval: PathBuf,
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Decide whether a matrix is a P-matrix.
    Pmatrix {
        matrix: PathBuf,
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Reduce a max cut instance to an r-norm instance.
    ReduceMaxcut {
        graph: PathBuf,
        k: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce an r-norm instance to an interval singularity instance.
    ReduceRnorm {
        matrix: PathBuf,
        k: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce an interval singularity instance to a P-matrix instance.
    ReduceInterval {
        interval: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every stage of the chain and check the answers agree.
    Pipeline {
        graph: PathBuf,
        k: u64,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Directory receiving the intermediate instances and certificates.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Recheck a certificate file against an instance file.
    Verify {
        #[arg(value_enum)]
        kind: CertKind,
        instance: PathBuf,
        cert: PathBuf,
        /// Cut target (cut) or norm threshold (norm-witness).
        #[arg(long)]
        threshold: Option<String>,
    },
    /// Exhaustive chain check on small graphs plus random interval instances.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(command: Command) -> commands::Result<commands::Output> {
    match command {
        Command::Maxcut { graph, k, cert_out } => commands::maxcut(&graph, k, cert_out.as_deref()),
        Command::Rnorm { matrix, k, cert_out } => {
            commands::rnorm(&matrix, k.as_deref(), cert_out.as_deref())
        }
        Command::IntervalSing { interval, cert_out } => {
            commands::interval_sing(&interval, cert_out.as_deref())
        }
        Command::Pmatrix { matrix, cert_out } => commands::pmatrix(&matrix, cert_out.as_deref()),
        Command::ReduceMaxcut { graph, k, out } => commands::reduce_maxcut(&graph, k, out.as_deref()),
        Command::ReduceRnorm { matrix, k, out } => commands::reduce_rnorm(&matrix, &k, out.as_deref()),
        Command::ReduceInterval { interval, out } => {
            commands::reduce_interval(&interval, out.as_deref())
        }
        Command::Pipeline {
            graph,
            k,
            max_n,
            cert_out,
        } => commands::pipeline(&graph, k, max_n, cert_out.as_deref()),
        Command::Verify {
            kind,
            instance,
            cert,
            threshold,
        } => commands::verify_file(kind, &instance, &cert, threshold.as_deref()),
        Command::Sweep { max_n, random, seed } => commands::sweep(max_n, random, seed),
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which would read as an inconsistent
    // chain; report them as input errors instead.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(output) => {
            print!("{}", output.text);
            ExitCode::from(output.outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
