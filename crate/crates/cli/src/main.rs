//! Command-line front end: renders exact coefficient tables, the accuracy
//! benchmark grids, the limit-shift explorer and single-cell evaluations
//! as markdown, CSV or JSON.

use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use gamma_asymp_cli::commands::{self, CommonOpts, PairMode};
use gamma_asymp_cli::output::Format;

#[derive(Parser)]
#[command(
    name = "gamma-asymp",
    version,
    about = "Exact coefficients and accuracy benchmarks for Gamma-function asymptotic expansions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown, env = "GAMMA_ASYMP_FORMAT")]
    format: Format,

    /// Working precision in decimal digits for numerical commands.
    #[arg(long, global = true, default_value_t = 120, env = "GAMMA_ASYMP_PRECISION")]
    precision: usize,

    /// Write output to this path instead of standard output.
    #[arg(long, global = true, env = "GAMMA_ASYMP_OUT")]
    out: Option<PathBuf>,

    /// Ceiling on user-supplied orders and pair indices.
    #[arg(long, global = true, default_value_t = 64, env = "GAMMA_ASYMP_MAX_ORDER")]
    max_order: usize,

    /// Continue the pair recurrence in float arithmetic past index 7.
    #[arg(long, global = true, default_value_t = false, env = "GAMMA_ASYMP_FLOAT_PAIRS")]
    float_pairs: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact coefficients of one expansion family.
    Coeffs {
        /// One of: laplace, stirling_log, ramanujan, karatsuba, mortici,
        /// gosper_base, nemes_shifted, central_binomial,
        /// central_binomial_shifted.
        family: String,
        /// Highest coefficient index to emit.
        order: usize,
    },
    /// The pair sequences g_0..g_M and v_1..v_M.
    Pairs {
        /// Largest pair index M.
        max_index: usize,
        /// Exact fractions or 15-digit decimals.
        #[arg(long, value_enum, default_value_t = PairMode::Exact)]
        mode: PairMode,
    },
    /// Accuracy grid of the five comparison formulas at orders (1)..(8).
    Table1,
    /// Accuracy grid of the even-power series at orders (2),(4),...,(10).
    Table2,
    /// The shifts v_m and their distance to 1/4.
    Conjecture {
        /// Largest pair index M (at least 2).
        max_index: usize,
        /// Decimal digits to print.
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// One approximation cell: log value, exact decimal digits, sign.
    Eval {
        /// One of: stirling, laplace, ramanujan, mortici, nemes_shifted,
        /// nemes_even.
        family: String,
        /// Order of the highest retained term.
        order: usize,
        /// Evaluation point (integer, decimal literal, or p/q).
        x: String,
        /// Significant digits to print.
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let opts = CommonOpts {
        precision: cli.precision,
        max_order: cli.max_order,
        float_pairs: cli.float_pairs,
    };
    let doc = match &cli.command {
        Command::Coeffs { family, order } => commands::cmd_coeffs(family, *order, &opts)?,
        Command::Pairs { max_index, mode } => commands::cmd_pairs(*max_index, *mode, &opts)?,
        Command::Table1 => commands::cmd_table1(&opts)?,
        Command::Table2 => commands::cmd_table2(&opts)?,
        Command::Conjecture { max_index, digits } => {
            commands::cmd_conjecture(*max_index, *digits, &opts)?
        }
        Command::Eval {
            family,
            order,
            x,
            digits,
        } => commands::cmd_eval(family, *order, x, *digits, &opts)?,
    };
    let rendered = doc.render(cli.format);
    match &cli.out {
        Some(path) => fs::write(path, rendered)
            .with_context(|| format!("writing output to {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}
