use clap::{Args, Parser, Subcommand, ValueEnum};

/// Pushouts and balanced squares in the simplex category, completeness
/// checks for finite simplicial sets, and acyclic filler construction.
///
/// Inputs are file paths, `-` for standard input, or inline JSON. Every
/// command prints a JSON verdict and exits with 0 (positive or constructed
/// result), 1 (negative verdict, with a witness) or 2 (input error).
#[derive(Debug, Parser)]
#[command(name = "sfill", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monotone maps between finite ordinals.
    #[command(subcommand)]
    Delta(DeltaCommand),
    /// Commutative squares, pushouts and their factorizations.
    #[command(subcommand)]
    Square(SquareCommand),
    /// ∨-decompositions and ∨-products of maps.
    #[command(subcommand)]
    Vee(VeeCommand),
    /// Acyclicity of simplicial complexes.
    #[command(subcommand)]
    Complex(ComplexCommand),
    /// Finite truncated simplicial sets.
    #[command(subcommand)]
    Sset(SsetCommand),
    /// Build a simplex restricting to given simplices on the facets of an
    /// acyclic configuration.
    Fill(FillArgs),
    /// Relational tables.
    #[command(subcommand)]
    Db(DbCommand),
    /// List generating squares.
    Catalog(CatalogArgs),
}

#[derive(Debug, Subcommand)]
pub enum DeltaCommand {
    /// The composite `outer ∘ inner`.
    Compose { outer: String, inner: String },
    /// Epi-mono factorization and a factorization into generators.
    Factor { map: String },
    /// The defect `m + n + 2 - 2|im f|`.
    Defect { map: String },
}

#[derive(Debug, Subcommand)]
pub enum SquareCommand {
    /// Whether a square is a pushout (or balanced, with `--balanced`).
    Check {
        square: String,
        #[arg(long)]
        balanced: bool,
    },
    /// The pushout of a span `{"f": …, "g": …}`.
    Pushout {
        #[arg(long)]
        span: String,
    },
    /// Two cocones showing a span has no pushout.
    Witness {
        #[arg(long)]
        span: String,
    },
    /// Factor a pushout square into basic pushouts.
    Factor { square: String },
    /// Factor a balanced square into basic coface squares.
    FactorBalanced { square: String },
}

#[derive(Debug, Subcommand)]
pub enum VeeCommand {
    /// Components of a decomposition `{"base": map}`, and the parts of
    /// each given map along it.
    Decompose { decomposition: String, maps: Vec<String> },
    /// The ∨-product of a family `{"parts": [map, …]}`.
    Product { family: String },
}

#[derive(Debug, Subcommand)]
pub enum ComplexCommand {
    /// Graham reduction, filled spheres, chordality and running
    /// intersection order.
    Check {
        complex: String,
        #[arg(long)]
        directed: bool,
    },
    /// A running intersection order of the facets.
    Rip {
        complex: String,
        #[arg(long)]
        directed: bool,
        /// Print the order as an indented tree instead of JSON.
        #[arg(long)]
        tree: bool,
    },
    /// Shorthand for `check --directed`.
    DirectedCheck { complex: String },
    /// Cross-check the acyclicity characterizations on random complexes.
    Sample(SampleArgs),
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, default_value_t = 6)]
    pub vertices: usize,
    #[arg(long, value_enum, default_value_t = SampleKind::Any)]
    pub kind: SampleKind,
    #[command(flatten)]
    pub run: RandomRun,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleKind {
    /// Arbitrary vertex sets.
    Any,
    /// Acyclic configurations.
    Acyclic,
    /// Acyclic configurations containing their spine.
    Directed,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RandomRun {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

/// A simplicial set: a JSON file with `cells`/`faces`/`degeneracies`, a
/// finite category (`objects`/`morphisms`/…) whose nerve is taken, or a
/// built-in fixture `builtin:NAME` with NAME one of `walking-arrow`,
/// `cyclic:K`, `order:K`, `hollow-triangle`, `discrete:a,b,…`.
#[derive(Debug, Args)]
pub struct SsetInput {
    pub sset: String,
    /// Truncation dimension.
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
}

#[derive(Debug, Subcommand)]
pub enum SsetCommand {
    /// Check the simplicial identities.
    Validate(SsetInput),
    /// Check completeness and exactness properties up to the truncation.
    Classify {
        #[command(flatten)]
        input: SsetInput,
        #[arg(long = "property", value_enum, default_values_t = [Property::All])]
        properties: Vec<Property>,
    },
    /// Find `z` in `X_n` with `d_j z = a` and `d_i z = b`.
    Filler {
        #[command(flatten)]
        input: SsetInput,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        a: String,
        b: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    All,
    Kan,
    Quasicategory,
    SpanComplete,
    InnerSpanComplete,
    Segal,
    Split,
    Stiff,
    TwoSegal,
    ForcedDiscrete,
}

#[derive(Debug, Args)]
pub struct FillArgs {
    #[arg(long, value_enum)]
    pub provider: ProviderKind,
    /// `{"ground": n+1, "facets": [[…], …], "directed": bool}`.
    #[arg(long)]
    pub complex: String,
    /// Object keyed by facet (`"0,1,2"`) holding the simplex for it: a
    /// cell name, a table, a distance matrix or a distribution.
    #[arg(long)]
    pub assignment: String,
    /// The simplicial set, for `--provider sset`.
    #[arg(long)]
    pub sset: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    /// Use the directed construction (only inner spans are filled).
    #[arg(long)]
    pub directed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProviderKind {
    Sset,
    Table,
    Metric,
    Distribution,
}

#[derive(Debug, Subcommand)]
pub enum DbCommand {
    /// The largest table on the glued columns restricting to both inputs.
    /// Tables are JSON, or CSV when the path ends in `.csv`.
    Join {
        left: String,
        right: String,
        /// The shared columns inside the left table, as a map.
        #[arg(long)]
        u: String,
        /// The shared columns inside the right table, as a map.
        #[arg(long)]
        v: String,
        /// Print the joined table as CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Which list; without it, both generator lists.
    #[arg(long, value_enum)]
    pub kind: Option<CatalogChoice>,
    /// The ordinal for `basic-pushout`, `basic-coface` and `minimal-vee`.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CatalogChoice {
    BasicPushout,
    BasicCoface,
    GeneratorsPushout,
    GeneratorsBalanced,
    MinimalVee,
}
