use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use greenseq_cli::{
    load_quiver, run_all_orientations, run_catalog, run_count, run_hasse, run_oracle,
    run_oracle_check, run_prec, Failure, Format, Outcome, EXIT_BAD_INPUT,
};

/// Count maximal green sequences of Dynkin and extended Dynkin quivers.
#[derive(Parser, Debug)]
#[command(name = "greenseq", version)]
struct Cli {
    /// Quiver as JSON: {"vertices":m,"arrows":[[s,t],...],"name":...}
    #[arg(long, global = true, value_name = "FILE")]
    quiver: Option<PathBuf>,

    /// Built-in quiver such as A:3, Dtilde:5, Etilde8-paper
    #[arg(long, global = true, value_name = "NAME")]
    preset: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the result here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads; results do not depend on this
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Print stage sizes and timings to stderr
    #[arg(long, global = true)]
    stats: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of maximal green sequences of each length
    Count,
    /// Size of the finite Hasse quiver
    Hasse {
        /// Also write the Graphviz rendering to this file
        #[arg(long, value_name = "PATH")]
        emit_dot: Option<PathBuf>,
    },
    /// The finite module catalog
    Catalog,
    /// Decide X ≺ Y for two catalog triples
    Prec {
        #[arg(long, value_name = "(a,b,c)")]
        x: String,
        #[arg(long, value_name = "(a,b,c)")]
        y: String,
    },
    /// Enumerate green sequences on the framed quiver
    Oracle {
        #[arg(long)]
        max_len: usize,
    },
    /// Longest length for every acyclic orientation of the underlying graph
    Orientations,
    /// Compare the Hasse-quiver count with the framed-quiver enumeration
    Check {
        /// Length cap for the enumeration; defaults to the longest length
        #[arg(long)]
        max_len: Option<usize>,
    },
}

fn run(cli: &Cli) -> Outcome {
    let q = load_quiver(cli.quiver.as_deref(), cli.preset.as_deref())?;
    match &cli.command {
        Command::Count => run_count(&q, cli.format),
        Command::Hasse { emit_dot } => run_hasse(&q, cli.format, emit_dot.as_deref()),
        Command::Catalog => run_catalog(&q, cli.format),
        Command::Prec { x, y } => run_prec(&q, x, y, cli.format),
        Command::Oracle { max_len } => run_oracle(&q, *max_len, cli.format),
        Command::Orientations => run_all_orientations(&q, cli.format),
        Command::Check { max_len } => run_oracle_check(&q, *max_len, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(EXIT_BAD_INPUT as u8);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .expect("thread pool is configured once");

    let report = match run(&cli) {
        Ok(r) => r,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            return ExitCode::from(code as u8);
        }
    };
    if cli.stats {
        if let Some(stats) = &report.stats {
            eprint!("{stats}");
        }
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_BAD_INPUT as u8);
            }
        }
        None => print!("{}", report.stdout),
    }
    ExitCode::from(report.code as u8)
}
