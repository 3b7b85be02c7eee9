use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sgdigit",
    version,
    about = "Base-b digit expansions, numerical monoids and digital semigroups",
    after_help = "Negative positional integers must follow a `--` separator, e.g. \
                  `sgdigit repr --base -2 -- -1`. Option values such as `--base -2` \
                  need no separator.\n\n\
                  Exit codes: 0 success or affirmative verdict, 1 negative verdict or \
                  domain error, 2 usage error, 3 overflow or resource limit.\n\
                  SGDIGIT_MAX_TABLE caps the size of monoid membership tables."
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    L,
    Lminus,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the base-b digit string of an integer, or parse one back.
    Repr(ReprArgs),
    /// The band of integers with exactly n digits, or its size.
    Delta(DeltaArgs),
    /// Smallest member of a class containing the given integers.
    Closure(ClosureArgs),
    /// Decide class membership of the monoid generated by --gens.
    Check(CheckArgs),
    /// Digital semigroups: membership, complement, smallest containing a set.
    Theta(ThetaArgs),
    /// Minimal generators, Frobenius number, gaps and factorization lengths.
    Monoid(MonoidArgs),
    /// Class members breadth first by genus, one per line.
    Tree(TreeArgs),
}

#[derive(Debug, Args)]
pub struct ClassSelect {
    /// l (offsets -1) or lminus (offsets -3, -1, 1).
    #[arg(long, value_enum)]
    pub class: Option<ClassArg>,

    /// Pick the class from the sign of this base.
    #[arg(long, allow_hyphen_values = true)]
    pub base: Option<i64>,
}

#[derive(Debug, Args)]
pub struct ReprArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub base: Option<i64>,

    /// Parse a digit string such as `111_-2` and print its value.
    #[arg(long, conflicts_with = "value")]
    pub parse: Option<String>,

    #[arg(required_unless_present = "parse")]
    pub value: Option<String>,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub base: i64,

    #[arg(long)]
    pub n: u32,

    /// Print only the number of elements.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    #[command(flatten)]
    pub class: ClassSelect,

    /// Iteration budget before reporting overflow.
    #[arg(long, default_value_t = 1000)]
    pub bound: usize,

    #[arg(required = true)]
    pub values: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub class: ClassSelect,

    /// Comma-separated generators, e.g. 4,6,7,9.
    #[arg(long)]
    pub gens: String,
}

#[derive(Debug, Args)]
pub struct ThetaArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub base: i64,

    /// Generators of the length monoid.
    #[arg(
        long,
        required_unless_present = "smallest",
        conflicts_with = "smallest"
    )]
    pub gens: Option<String>,

    /// Comma-separated integers; computes the smallest digital semigroup
    /// containing them.
    #[arg(long, allow_hyphen_values = true)]
    pub smallest: Option<String>,

    /// List Z_b minus the semigroup.
    #[arg(long)]
    pub complement: bool,

    /// Test one integer for membership.
    #[arg(long, allow_hyphen_values = true)]
    pub contains: Option<String>,

    #[arg(long, default_value_t = 1000)]
    pub bound: usize,
}

#[derive(Debug, Args)]
pub struct MonoidArgs {
    #[arg(long)]
    pub gens: String,

    /// Maximal factorization length P(s).
    #[arg(long)]
    pub p_of: Option<u64>,

    #[arg(long)]
    pub contains: Option<u64>,
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    #[command(flatten)]
    pub class: ClassSelect,

    #[arg(long)]
    pub max_genus: usize,
}
