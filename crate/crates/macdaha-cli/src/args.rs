use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "macdaha", version, about = "Exact DAHA and Macdonald polynomial computations")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Root system data.
    Roots {
        #[command(subcommand)]
        what: RootsCmd,
    },
    /// Macdonald polynomials and their identities.
    Mac {
        #[command(subcommand)]
        what: MacCmd,
    },
    /// The polynomial representation.
    Daha {
        #[command(subcommand)]
        what: DahaCmd,
    },
    /// Modular data at roots of unity.
    Modular {
        #[command(subcommand)]
        what: ModularCmd,
    },
    /// Run a verification suite: daha, macdonald, modular or all.
    Suite { name: String },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum RootsCmd {
    Show,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum MacCmd {
    /// p_b and its eigenvalue law.
    Poly,
    /// Principal specialization against the product formula.
    Eval,
    /// Constant term, norm and orthogonality at t = q^k.
    Norm,
    /// The duality identity for b, c.
    Duality,
    /// Pieri expansion of m_a pi_b.
    Pieri,
    /// Shift operator and key lemma.
    Shift,
    /// Gaussian eigen identity and self-adjointness.
    Gauss,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum DahaCmd {
    /// Defining relations on monomials in a box.
    Verify,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum ModularCmd {
    Build,
    Verify,
    Export,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Rational,
    Symbolic,
    Cyclotomic,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Root system label such as A2, B3, G2.
    #[arg(long, global = true)]
    pub system: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "rational")]
    pub mode: Mode,
    /// Rational q0 with q = q0^(2 mhat).
    #[arg(long, global = true, default_value = "3/7", allow_hyphen_values = true)]
    pub q0: String,
    /// t per length class (long first); each must be a rational square.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// k per length class, or one value for all; sets t = q^k.
    #[arg(long, global = true)]
    pub k: Option<String>,
    #[arg(long = "N", global = true)]
    pub n: Option<i64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Length classes for the shift operator, 0 = long.
    #[arg(long, global = true)]
    pub classes: Option<String>,
    #[arg(long, global = true)]
    pub cap: Option<i64>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, default_value_t = 3)]
    pub max_rank: usize,
}
