//! `uthopf`: enumeration, structure constants, specialization and
//! verification suites.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "uthopf",
    version,
    about = "Hopf algebras of class functions of unipotent groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Natural unit interval orders.
    #[command(subcommand)]
    Nuio(NuioCommand),
    /// The symbolic algebra on `δ̄_π` with coefficients in `t = 1/q`.
    #[command(subcommand)]
    Scf(ScfCommand),
    /// Class functions on `UT_n(F_q)`.
    #[command(subcommand)]
    Ut(UtCommand),
    /// Class functions on `GL_n(F_q)`.
    #[command(subcommand)]
    Gl(GlCommand),
    /// Verification suites; exit status 1 when any check fails.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
enum NuioCommand {
    /// Every natural unit interval order on `[n]`.
    List {
        #[arg(long)]
        n: usize,
        /// Also print the Dyck word of each order.
        #[arg(long)]
        dyck: bool,
    },
}

/// Operands: `--input` files first, then `--poset` strings, in the order given.
#[derive(Args, Debug, Default)]
pub struct Operands {
    /// File holding an element `{"terms": [...]}` or a poset `{"n", "strict"}`.
    #[arg(long)]
    input: Vec<std::path::PathBuf>,
    /// Poset JSON `{"n": N, "strict": [[i, j], ...]}` standing for `δ̄_π`.
    #[arg(long)]
    poset: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum ScfCommand {
    /// Product of two operands.
    Product(Operands),
    /// Coproduct of one operand.
    Coproduct {
        #[command(flatten)]
        operands: Operands,
        /// One term per subset `I ⊆ [n]` of each basis element, unmerged.
        #[arg(long)]
        by_subset: bool,
    },
    /// Antipode of one operand.
    Antipode(Operands),
    /// The antiautomorphism `δ̄_π ↦ δ̄_{π†}` on one operand.
    Dagger(Operands),
}

#[derive(Subcommand, Debug)]
enum UtCommand {
    /// Evaluates an element at `t = 1/q` as class functions on `UT_n(F_q)`.
    Specialize {
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        operands: Operands,
    },
}

#[derive(Subcommand, Debug)]
enum GlCommand {
    /// Specializes an element at `q` and induces it to `GL_n(F_q)`.
    Induce {
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        operands: Operands,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Hopf monoid diagrams on ground sets `[k]`, `k ≤ n`.
    MonoidAxioms {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Brute-force coproduct and product on `UT_n(F_q)` against the symbolic formulas.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Induction to `GL_•` preserves product and coproduct.
    InductionHom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// Required for `n ≥ 4`.
        #[arg(long)]
        extended: bool,
    },
    /// Product and coproduct witnesses of noncommutativity.
    Noncocommutativity,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
