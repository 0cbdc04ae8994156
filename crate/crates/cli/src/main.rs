//! `superbider`: exact computations and identity checks on Lie superalgebras.

mod commands;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use superbider_core::catalog::{self, AlgebraSpec};
use superbider_core::{lsa, Error, Result};

use commands::{DegreeArg, Loaded, SpaceKind, TheoremKind};
use report::{Report, Status};

#[derive(Parser)]
#[command(name = "superbider", version, about = "Super-biderivations, centroids and commuting maps of Lie superalgebras, computed exactly")]
struct Cli {
    /// Emit a flat JSON document instead of a text table
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Source {
    /// Catalog algebra: `sl2`, `abelian M N`, `gl M N`, `sl M N`, `sum A B`
    #[arg(value_name = "SPEC")]
    spec: Vec<String>,

    /// Catalog algebra, same grammar as the positional form
    #[arg(long, num_args = 1.., value_name = "SPEC", allow_hyphen_values = false)]
    algebra: Option<Vec<String>>,

    /// Structure constants in LSA format
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, structural hypotheses and solution-space dimensions
    Info(Source),
    /// Check super skew-symmetry, grading and the super-Jacobi identity
    Verify(Source),
    /// Compute a solution space and print its canonical basis
    Compute {
        #[arg(value_enum)]
        space: SpaceKind,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "both")]
        degree: DegreeArg,
    },
    /// Check one theorem and print its certificate
    Theorem {
        #[arg(value_enum)]
        theorem: TheoremKind,
        #[command(flatten)]
        source: Source,
    },
    /// Print the algebra in LSA format
    Dump(Source),
    /// Read an LSA file, validate it, and print its canonical form
    Load {
        path: PathBuf,
    },
}

fn load_file(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map_or_else(|| "lsa".to_string(), |s| s.to_string_lossy().into_owned());
    Ok(Loaded {
        algebra: lsa::load_named(&text, &name)?,
        source: path.display().to_string(),
    })
}

impl Source {
    fn resolve(&self) -> Result<Loaded> {
        let given = [!self.spec.is_empty(), self.algebra.is_some(), self.file.is_some()];
        match given.iter().filter(|g| **g).count() {
            0 => return Err(Error::Input("no algebra given; use SPEC, --algebra or --file".into())),
            1 => {}
            _ => return Err(Error::Input("give exactly one of SPEC, --algebra, --file".into())),
        }
        if let Some(path) = &self.file {
            return load_file(path);
        }
        let tokens = self.algebra.as_ref().unwrap_or(&self.spec);
        let spec = AlgebraSpec::from_tokens(tokens)?;
        Ok(Loaded {
            algebra: catalog::make(&spec)?,
            source: "catalog".into(),
        })
    }
}

enum Output {
    Report(Report),
    Raw(String),
}

fn run(cli: &Cli) -> Result<Output> {
    Ok(match &cli.command {
        Command::Info(source) => Output::Report(commands::info(&source.resolve()?)),
        Command::Verify(source) => match source.resolve() {
            Ok(loaded) => Output::Report(commands::verify(&loaded)),
            Err(Error::Invalid(validation)) => {
                let mut report = Report::new("verify");
                if let Some(path) = &source.file {
                    report.set("algebra.source", path.display().to_string());
                }
                commands::verification(&mut report, &validation);
                Output::Report(report)
            }
            Err(e) => return Err(e),
        },
        Command::Compute { space, source, degree } => {
            Output::Report(commands::compute(&source.resolve()?, *space, *degree))
        }
        Command::Theorem { theorem, source } => {
            Output::Report(commands::theorem(&source.resolve()?, *theorem)?)
        }
        Command::Dump(source) => Output::Raw(commands::dump(&source.resolve()?, cli.json)),
        Command::Load { path } => Output::Raw(commands::dump(&load_file(path)?, cli.json)),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Output::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(report)) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.status() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Invalid(validation) = &e {
                for v in &validation.violations {
                    eprintln!("  {v}");
                }
            }
            ExitCode::from(match e {
                Error::TheoremViolation(_) => Status::Critical as u8,
                _ => Status::Failed as u8,
            })
        }
    }
}
