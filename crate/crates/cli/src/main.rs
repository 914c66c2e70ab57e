//! `eulerplex` command-line interface.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check ran and
//! failed, 2 on usage or input errors.

mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use eulerplex_core::counting::{sweep_coface_sums, sweep_link_counts};
use eulerplex_core::euler_check::verify_theorem;
use eulerplex_core::generators::{self, Seed};
use eulerplex_core::star_link::{link, star};
use eulerplex_core::{io, CheckOptions, Complex};

#[derive(Parser)]
#[command(
    name = "eulerplex",
    version,
    about = "Abstract simplicial complexes and Euler complexes"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, purity, f-vector and Euler characteristic.
    Info { file: PathBuf },
    /// Check the Euler complex condition, and the odd-dimension theorem when it applies.
    Check {
        file: PathBuf,
        /// List passing link checks as well as failures.
        #[arg(long)]
        verbose: bool,
        /// Maximum number of failing links to list.
        #[arg(long, default_value_t = 100)]
        max_failures: usize,
    },
    /// Print the link of a simplex as a facet list.
    Link {
        file: PathBuf,
        #[arg(required = true)]
        simplex: Vec<String>,
    },
    /// Print the star of a simplex, one member simplex per line.
    Star {
        file: PathBuf,
        #[arg(required = true)]
        simplex: Vec<String>,
    },
    /// Check the coface-sum and link-count identities exhaustively.
    VerifyLemmas { file: PathBuf },
    /// Generate a complex.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Write to this file instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Bundled example complexes.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Boundary of the N-simplex (an (N-1)-sphere), N >= 1.
    BoundarySimplex { n: usize },
    /// The N-simplex with all faces.
    FullSimplex { n: usize },
    /// Boundary of the N-dimensional cross-polytope, N >= 1.
    CrossPolytope { n: usize },
    /// Cycle on M >= 3 vertices.
    Cycle { m: usize },
    /// Cone over a complex.
    Cone {
        file: PathBuf,
        #[arg(long, default_value = "apex")]
        apex: String,
    },
    /// Suspension of a complex.
    Suspension { file: PathBuf },
    /// Join of two complexes.
    Join { left: PathBuf, right: PathBuf },
    /// F distinct random N-simplices on V vertices.
    Random {
        seed: u64,
        n: usize,
        f: usize,
        v: usize,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Show { name: String },
}

fn load(path: &Path) -> Result<Complex> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    io::parse(&bytes).with_context(|| format!("cannot parse {}", path.display()))
}

fn emit_json(value: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json = cli.json;
    match cli.command {
        Command::Info { file } => {
            let x = load(&file)?;
            let info = render::Info::new(&x)?;
            if json {
                emit_json(&info)?;
            } else {
                println!("{info}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            file,
            verbose,
            max_failures,
        } => {
            let x = load(&file)?;
            let report = verify_theorem(
                &x,
                &CheckOptions {
                    verbose,
                    max_failures,
                },
            )?;
            if json {
                emit_json(&render::CheckJson::new(&x, &report))?;
            } else {
                print!("{}", render::check_text(&x, &report));
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Link { file, simplex } => {
            let x = load(&file)?;
            let s = x.simplex(&simplex)?;
            print!("{}", io::serialize(&link(&x, &s)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Star { file, simplex } => {
            let x = load(&file)?;
            let s = x.simplex(&simplex)?;
            let st = star(&x, &s)?;
            let mut lines: Vec<Vec<&str>> = st.iter().map(|m| x.simplex_labels(m)).collect();
            lines.sort();
            for line in lines {
                println!("{}", line.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyLemmas { file } => {
            let x = load(&file)?;
            let coface = sweep_coface_sums(&x)?;
            let links = sweep_link_counts(&x)?;
            let summary = render::LemmaSummary::new(coface, links);
            if json {
                emit_json(&summary)?;
            } else {
                print!("{summary}");
            }
            Ok(if summary.all_hold {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen { kind, out } => {
            let x = generate(kind)?;
            let text = io::serialize(&x);
            match out {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => std::io::stdout().write_all(text.as_bytes())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { action } => {
            match action {
                CorpusAction::List => {
                    for name in io::corpus_names() {
                        println!("{name}");
                    }
                }
                CorpusAction::Show { name } => {
                    print!("{}", io::serialize(&io::load_corpus(&name)?))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn generate(kind: GenKind) -> Result<Complex> {
    Ok(match kind {
        GenKind::BoundarySimplex { n } => {
            if n == 0 {
                bail!("boundary-simplex needs N >= 1");
            }
            generators::simplex_boundary(n - 1)
        }
        GenKind::FullSimplex { n } => generators::full_simplex(n),
        GenKind::CrossPolytope { n } => generators::cross_polytope_boundary(n)?,
        GenKind::Cycle { m } => generators::cycle(m)?,
        GenKind::Cone { file, apex } => generators::cone(&load(&file)?, &apex)?,
        GenKind::Suspension { file } => generators::suspension(&load(&file)?),
        GenKind::Join { left, right } => generators::join(&load(&left)?, &load(&right)?),
        GenKind::Random { seed, n, f, v } => generators::random_pure_complex(Seed(seed), n, f, v)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
