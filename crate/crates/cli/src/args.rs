use clap::{Args, Parser, Subcommand, ValueEnum};
use clifftwist_core::forms::ProductKind;

#[derive(Debug, Parser)]
#[command(name = "clifftwist", version, about = "Exact computations in real Clifford algebras Cl(p,q)")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Factor signs of the primitive idempotent, e.g. `+-` (single signature only).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub signs: Option<String>,

    /// Seed for randomly sampled checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Print per-clause details and timings.
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The seven-element data record of Cl(p,q).
    Clidata { p: u32, q: u32 },
    /// Vee group, stabilizer, idempotent and field groups, and transversals.
    Groups { p: u32, q: u32 },
    /// Check the structure theorem, the transposition/star identity and the matrix dagger law.
    Verify {
        p: Option<u32>,
        q: Option<u32>,
        /// Check every signature with p + q <= MAX_N.
        #[arg(long, value_name = "MAX_N", conflicts_with_all = ["p", "q"])]
        all: Option<u32>,
        /// Random elements per signature for the sampled checks.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Automorphism groups of a spinor scalar product for all p + q <= MAX_N.
    Tables {
        max_n: u32,
        /// tp, beta+ or beta-.
        #[arg(value_parser = parse_product)]
        product: Option<ProductKind>,
        #[arg(long = "product", value_parser = parse_product, conflicts_with = "product")]
        product_flag: Option<ProductKind>,
    },
}

fn parse_product(s: &str) -> Result<ProductKind, String> {
    s.parse()
}
