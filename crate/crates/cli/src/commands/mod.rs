mod complex;
mod db;
mod delta;
mod fill;
mod square;
mod sset;
mod vee;

use serde_json::json;
use simplex_fill::squares::{catalog, CatalogKind};

use crate::args::{
    CatalogArgs, CatalogChoice, Command, ComplexCommand, DbCommand, DeltaCommand, SquareCommand, SsetCommand,
    VeeCommand,
};
use crate::report::{CliError, Outcome};

/// The command's name for the verdict, and its outcome.
pub fn run(command: &Command) -> (&'static str, Result<Outcome, CliError>) {
    match command {
        Command::Delta(c) => match c {
            DeltaCommand::Compose { outer, inner } => ("delta compose", delta::compose(outer, inner)),
            DeltaCommand::Factor { map } => ("delta factor", delta::factor(map)),
            DeltaCommand::Defect { map } => ("delta defect", delta::defect(map)),
        },
        Command::Square(c) => match c {
            SquareCommand::Check { square, balanced } => ("square check", square::check(square, *balanced)),
            SquareCommand::Pushout { span } => ("square pushout", square::pushout(span)),
            SquareCommand::Witness { span } => ("square witness", square::witness(span)),
            SquareCommand::Factor { square } => ("square factor", square::factor(square)),
            SquareCommand::FactorBalanced { square } => ("square factor-balanced", square::factor_balanced_cmd(square)),
        },
        Command::Vee(c) => match c {
            VeeCommand::Decompose { decomposition, maps } => ("vee decompose", vee::decompose(decomposition, maps)),
            VeeCommand::Product { family } => ("vee product", vee::product(family)),
        },
        Command::Complex(c) => match c {
            ComplexCommand::Check { complex, directed } => ("complex check", complex::check(complex, *directed)),
            ComplexCommand::Rip { complex, directed, tree } => ("complex rip", complex::rip(complex, *directed, *tree)),
            ComplexCommand::DirectedCheck { complex } => ("complex directed-check", complex::check(complex, true)),
            ComplexCommand::Sample(args) => ("complex sample", complex::sample(args)),
        },
        Command::Sset(c) => match c {
            SsetCommand::Validate(input) => ("sset validate", sset::validate(input)),
            SsetCommand::Classify { input, properties } => ("sset classify", sset::classify(input, properties)),
            SsetCommand::Filler { input, n, i, j, a, b } => ("sset filler", sset::filler(input, *n, *i, *j, a, b)),
        },
        Command::Fill(args) => ("fill", fill::fill(args)),
        Command::Db(DbCommand::Join { left, right, u, v, csv }) => ("db join", db::join_cmd(left, right, u, v, *csv)),
        Command::Catalog(args) => ("catalog", Ok(catalog_cmd(args))),
    }
}

fn catalog_cmd(args: &CatalogArgs) -> Outcome {
    let kind = |c: CatalogChoice| match c {
        CatalogChoice::BasicPushout => CatalogKind::BasicPushout(args.n),
        CatalogChoice::BasicCoface => CatalogKind::BasicCoface(args.n),
        CatalogChoice::GeneratorsPushout => CatalogKind::GeneratorsPushout,
        CatalogChoice::GeneratorsBalanced => CatalogKind::GeneratorsBalanced,
        CatalogChoice::MinimalVee => CatalogKind::MinimalVee(args.n),
    };
    match args.kind {
        Some(c) => Outcome::positive(json!({ "entries": catalog(kind(c)) })),
        None => Outcome::positive(json!({
            "generators_pushout": catalog(CatalogKind::GeneratorsPushout),
            "generators_balanced": catalog(CatalogKind::GeneratorsBalanced),
        })),
    }
}
