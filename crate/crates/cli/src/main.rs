use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use numsemi::conjecture::{classify, scan, search, ScanRow, DEFAULT_CAP};
use numsemi::torsion::torsion_length;
use numsemi::{Error, MonomialIdeal, NumericalSemigroup};

mod render;
mod reproduce;

use render::{EndRingReport, InfoReport, Render, ScanReport};

#[derive(Parser)]
#[command(name = "numsemi", version, about = "Numerical semigroup rings and their monomial ideals")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the semigroup generated by GENS.
    Info { gens: String },
    /// The canonical ideal K_R.
    Canonical { gens: String },
    /// The colon ideal A : B = {x : x + B ⊆ A}.
    Colon {
        gens: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// The product ideal A·B.
    Product {
        gens: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// The canonical dual K_R : I.
    Dual {
        gens: String,
        #[arg(allow_hyphen_values = true)]
        ideal: String,
    },
    /// The endomorphism ring I : I with I and its canonical ideal over it.
    Endring {
        gens: String,
        #[arg(allow_hyphen_values = true)]
        ideal: String,
    },
    /// Torsion of I ⊗ J; J defaults to K_R : I. Exits 1 when torsion is found.
    Torsion {
        gens: String,
        #[arg(allow_hyphen_values = true)]
        ideal: String,
        #[arg(allow_hyphen_values = true)]
        other: Option<String>,
    },
    /// Full classification of one ideal.
    Classify {
        gens: String,
        #[arg(allow_hyphen_values = true)]
        ideal: String,
    },
    /// Classifies every monomial ideal R ⊆ I ⊆ V of one semigroup.
    Search {
        gens: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Searches every semigroup up to the given multiplicity and genus.
    Scan {
        #[arg(long, default_value_t = 7)]
        mult_max: i64,
        #[arg(long, default_value_t = 12)]
        genus_max: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Reruns a pinned computation and compares it with its golden values.
    Reproduce {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(reproduce::IDS))]
        id: String,
    },
}

fn semigroup(gens: &str) -> Result<NumericalSemigroup, Error> {
    gens.parse()
}

fn ideal(h: &NumericalSemigroup, exps: &str) -> Result<MonomialIdeal, Error> {
    MonomialIdeal::parse(h, exps)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    let mut code = ExitCode::SUCCESS;
    match cli.command {
        Command::Info { gens } => {
            InfoReport::new(&semigroup(&gens)?).emit(format);
        }
        Command::Canonical { gens } => {
            MonomialIdeal::canonical(&semigroup(&gens)?).emit(format);
        }
        Command::Colon { gens, a, b } => {
            let h = semigroup(&gens)?;
            ideal(&h, &a)?.colon(&ideal(&h, &b)?)?.emit(format);
        }
        Command::Product { gens, a, b } => {
            let h = semigroup(&gens)?;
            ideal(&h, &a)?.product(&ideal(&h, &b)?)?.emit(format);
        }
        Command::Dual { gens, ideal: i } => {
            let h = semigroup(&gens)?;
            ideal(&h, &i)?.dual().emit(format);
        }
        Command::Endring { gens, ideal: i } => {
            let h = semigroup(&gens)?;
            EndRingReport::from(ideal(&h, &i)?.end_ring()).emit(format);
        }
        Command::Torsion { gens, ideal: i, other } => {
            let h = semigroup(&gens)?;
            let i = ideal(&h, &i)?;
            let j = match other {
                Some(j) => ideal(&h, &j)?,
                None => i.dual(),
            };
            let report = torsion_length(&i, &j)?;
            if !report.torsionfree {
                code = ExitCode::from(1);
            }
            report.emit(format);
        }
        Command::Classify { gens, ideal: i } => {
            let h = semigroup(&gens)?;
            classify(&ideal(&h, &i)?).emit(format);
        }
        Command::Search { gens, cap } => {
            search(&semigroup(&gens)?, cap)?.emit(format);
        }
        Command::Scan { mult_max, genus_max, cap } => {
            let rows: Vec<ScanRow> = scan(mult_max, genus_max, cap)?.iter().map(ScanRow::from).collect();
            ScanReport { mult_max, genus_max, rows }.emit(format);
        }
        Command::Reproduce { id } => {
            let report = reproduce::run(&id);
            if !report.passed {
                code = ExitCode::from(1);
            }
            report.emit(format);
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::EnumerationBudgetExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
