mod commands;
mod report;

use clap::{Parser, Subcommand};
use geomcodes::codes::DEFAULT_ENUM_BUDGET;

use commands::{CliError, RunCfg};

/// Exact verifier for five code families over finite-field towers: builds
/// each code, enumerates or certifies its minimum-weight structure, and
/// writes one machine-readable report per run to standard output.
///
/// Exit codes: 0 every claim passed, 1 a claim failed, 2 invalid
/// invocation, 3 the run needs a larger enumeration budget.
#[derive(Parser)]
#[command(name = "geomcodes", version)]
struct Cli {
    /// Worker threads for codeword enumeration (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Largest number of codewords a single run may enumerate
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ENUM_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cyclic code of length p^m + 1 over F_{p^m} whose minimum zero sets
    /// are the F_{p^s}-sublines of PG(1, p^m)
    Op18 {
        /// Odd prime of the field tower
        #[arg(long)]
        p: u64,
        /// Field degree: the alphabet is F_{p^m}
        #[arg(long)]
        m: u32,
        /// Subline degree: zero sets live over F_{p^s}, s a proper divisor of m
        #[arg(long)]
        s: u32,
        /// Write the support-design blocks to this path
        #[arg(long, value_name = "PATH")]
        emit_blocks: Option<String>,
    },
    /// Negacyclic code of length q² + 1 over F_{q²} whose minimum zero
    /// sets are the Baer sublines of PG(1, q²), q ≡ 1 (mod 4)
    Op27 {
        /// Odd prime power with q ≡ 1 (mod 4)
        #[arg(long)]
        q: u64,
        /// Write the support-design blocks to this path
        #[arg(long, value_name = "PATH")]
        emit_blocks: Option<String>,
    },
    /// λ-constacyclic ovoid code of length q² + 1 over F_q: exists exactly
    /// when the multiplier λ is a nonsquare of F_q
    Op28 {
        /// Odd prime power
        #[arg(long)]
        q: u64,
        /// Multiplier as an index into the canonical enumeration of F_q
        /// (for prime q the index is the element itself)
        #[arg(
            long,
            value_name = "K",
            conflicts_with = "exhaustive",
            required_unless_present = "exhaustive"
        )]
        lambda: Option<u64>,
        /// Sweep every multiplier in F_q* and the whole tower above it
        #[arg(long)]
        exhaustive: bool,
    },
    /// Closed-form weight enumerator of the ovoid code read over the
    /// extension alphabet F_{q^e}
    Lift {
        /// Odd prime power
        #[arg(long)]
        q: u64,
        /// Lift degree: the alphabet becomes F_{q^e}
        #[arg(long)]
        e: u32,
        /// Cross-check the formula by full enumeration (needs e | 4)
        #[arg(long)]
        brute_force: bool,
    },
    /// Negacyclic MDS code of length (q−1)/2 and dimension k whose minimum
    /// supports saturate every coordinate subset
    Mds {
        /// Odd prime power, at least 5
        #[arg(long)]
        q: u64,
        /// Code dimension, between 1 and (q−1)/2
        #[arg(long)]
        k: usize,
        /// Also verify the minimum supports as a t-design at this t
        #[arg(long, value_name = "T")]
        design_t: Option<usize>,
        /// Write the minimum-support blocks to this path
        #[arg(long, value_name = "PATH")]
        emit_blocks: Option<String>,
    },
    /// Check a blocks file as a t-design: uniform block size and a
    /// point-count independent of the chosen t points
    DesignVerify {
        /// Blocks file: one block per line, space-separated ascending indices
        #[arg(long, value_name = "PATH")]
        blocks: String,
        /// Design order to verify
        #[arg(long)]
        t: usize,
        /// Number of points (default: largest index + 1)
        #[arg(long)]
        v: Option<u16>,
    },
}

fn main() {
    let cli = Cli::parse();
    let cfg = RunCfg {
        budget: cli.budget,
        threads: cli.threads.unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        }),
    };
    let outcome = match cli.command {
        Command::Op18 {
            p,
            m,
            s,
            emit_blocks,
        } => commands::run_op18(p, m, s, emit_blocks.as_deref(), &cfg),
        Command::Op27 { q, emit_blocks } => commands::run_op27(q, emit_blocks.as_deref(), &cfg),
        Command::Op28 {
            q,
            lambda,
            exhaustive,
        } => commands::run_op28(q, lambda, exhaustive, &cfg),
        Command::Lift { q, e, brute_force } => commands::run_lift(q, e, brute_force, &cfg),
        Command::Mds {
            q,
            k,
            design_t,
            emit_blocks,
        } => commands::run_mds(q, k, design_t, emit_blocks.as_deref(), &cfg),
        Command::DesignVerify { blocks, t, v } => commands::run_design_verify(&blocks, t, v),
    };
    match outcome {
        Ok(report) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            );
            std::process::exit(if report.pass { 0 } else { 1 });
        }
        Err(CliError::Param(message)) => {
            eprintln!("parameter error: {message}");
            std::process::exit(2);
        }
        Err(CliError::Budget { needed, budget }) => {
            eprintln!(
                "budget exceeded: the run needs {needed} codeword evaluations \
                 but the budget is {budget}; rerun with --budget {needed}"
            );
            std::process::exit(3);
        }
    }
}
