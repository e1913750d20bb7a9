mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "superq", version, about = "Exact checks for U_q(sl(2|1)) at odd roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Odd order of the root of unity.
    #[arg(long)]
    d: i64,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report (or the exported artifact) here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct RepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    mu: i64,
}

#[derive(Args, Debug, Clone)]
struct TensorArgs {
    #[command(flatten)]
    rep: RepArgs,
    #[arg(long)]
    n: usize,
    /// Raise the default cap on n from 4 to 5.
    #[arg(long)]
    enable_n5: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hopf superalgebra axioms.
    Hopf {
        #[command(subcommand)]
        action: HopfAction,
    },
    /// Consistency of the dual X with the pairing.
    Dual {
        #[command(subcommand)]
        action: VerifyOnly,
    },
    /// Relations of the quantum double and the map chi.
    Double {
        #[command(subcommand)]
        action: VerifyOnly,
    },
    /// Export or verify the universal R-matrix.
    #[command(args_conflicts_with_subcommands = true)]
    Rmatrix {
        #[command(subcommand)]
        action: Option<RmatrixAction>,
        #[command(flatten)]
        export: RmatrixExport,
    },
    /// The module V_mu and its braiding.
    Rep {
        #[command(subcommand)]
        action: RepAction,
    },
    /// Braid relations on tensor powers of V_mu.
    Braid {
        #[command(subcommand)]
        action: BraidAction,
    },
    /// Centralizer algebras L_{n,mu}.
    Centralizer {
        #[command(subcommand)]
        action: CentralizerAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algebra {
    Ubar,
    Bplus,
    Bminus,
    X,
}

#[derive(Subcommand, Debug)]
enum HopfAction {
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Algebra::Ubar)]
        algebra: Algebra,
        /// Number of sampled basis monomials; all of them when omitted and d = 3.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyOnly {
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    Mult,
    Coeff,
}

#[derive(Args, Debug)]
struct RmatrixExport {
    #[arg(long)]
    d: Option<i64>,
    #[arg(long, value_enum)]
    form: Option<Form>,
    /// Write the R-matrix here instead of embedding it in the report.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum RmatrixAction {
    Verify {
        #[command(flatten)]
        common: Common,
        /// Also run the identities in U^{⊗3} and the antipode identities (default only for d = 3).
        #[arg(long)]
        full: bool,
        /// Check the Yang-Baxter equation in U^{⊗3}.
        #[arg(long)]
        enable_abstract_ybe: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum RepAction {
    Check {
        #[command(flatten)]
        args: RepArgs,
    },
    CMatrix {
        #[command(flatten)]
        args: RepArgs,
        /// Output format; inferred from the `--out` extension when omitted.
        #[arg(long, value_enum)]
        format: Option<MatrixFormat>,
    },
}

#[derive(Subcommand, Debug)]
enum BraidAction {
    Verify {
        #[command(flatten)]
        args: TensorArgs,
    },
}

#[derive(Subcommand, Debug)]
enum CentralizerAction {
    Basis {
        #[command(flatten)]
        args: TensorArgs,
    },
    Relations {
        #[command(flatten)]
        args: TensorArgs,
    },
    Decomposition {
        #[command(flatten)]
        args: TensorArgs,
        /// Basis words sampled for the closure check when n > 3.
        #[arg(long, default_value_t = 40)]
        samples: usize,
    },
    Commutant {
        #[command(flatten)]
        args: TensorArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(output::exit_code_for(&e))
        }
    }
}
