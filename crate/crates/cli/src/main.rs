//! Command-line front end: build the shuffling operators, print their exact
//! simultaneous eigenspace tables, run the verification suites, and manage
//! the character-table/seminormal caches.
//!
//! Exit codes: 0 success, 1 usage or verification failure, 2 an integrality
//! finding (a non-integer eigenvalue was detected and reported).

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use spectra_core::blocks;
use spectra_core::cache;
use spectra_core::rankone;
use spectra_core::rootsys::{CoxeterType, OrbitSelector, RootSystem};
use spectra_core::tables::Family;
use std::path::PathBuf;
use std::str::FromStr;

mod verify;

#[derive(Parser)]
#[command(name = "shuffle-spectra", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact spectra and eigenspace tables.
    Spectra {
        #[command(subcommand)]
        target: SpectraTarget,
    },
    /// Run verification suites; nonzero exit on failure.
    Verify(VerifyArgs),
    /// Build, inspect or clear the on-disk caches.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum SpectraTarget {
    /// Symmetric-group operator families on the group algebra.
    TypeA(TypeAArgs),
    /// Rank-one operators for hyperplane orbits of a reflection type.
    RankOne(RankOneArgs),
}

#[derive(Args)]
struct TypeAArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Allow n = 7, 8 (several minutes of exact arithmetic).
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct RankOneArgs {
    /// Type label: A3, B4, D5, F4, H3, H4, E6, E7, E8, I2(7), ...
    #[arg(long = "type")]
    ctype: String,
    /// Orbit of hyperplanes: short, long or all.
    #[arg(long, default_value = "long")]
    orbit: String,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Allow the minutes-scale E7/E8 computations.
    #[arg(long)]
    allow_long: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (or `all`): factorizations, commutativity, filtration,
    /// tableaux, gelfand-model, brown, eulerian, gr-identity, derangements,
    /// conjecture-1.6, conjecture-6.28, gelfand-pair.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Subcommand)]
enum CacheAction {
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    Inspect {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    Clear {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Md,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_str(s).map_err(|e| e.to_string())
}

fn emit(out: Option<&PathBuf>, contents: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, contents)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{contents}"),
    }
    Ok(())
}

fn run_type_a(args: &TypeAArgs) -> anyhow::Result<i32> {
    if args.n == 0 {
        bail!("n must be at least 1");
    }
    if args.n > 8 {
        bail!("n = {} is out of scope (max 8)", args.n);
    }
    if args.n > 6 && !args.allow_large {
        bail!(
            "n = {} takes minutes of exact arithmetic; pass --allow-large",
            args.n
        );
    }
    // two-blocks at n = 8 flows through the classwise trace formula; the
    // per-irreducible block path covers everything else
    let table = if args.family == Family::TwoBlocks && args.n == 8 {
        blocks::TwoBlocksTraceData::new(args.n).table()
    } else {
        blocks::simultaneous_table(args.n, args.family)?
    };
    let rendered = match args.format {
        Format::Tsv => table.to_tsv(),
        Format::Json => table.to_json(),
        Format::Md => table.to_markdown(),
    };
    emit(args.out.as_ref(), &rendered)?;
    if !table.integrality_violations.is_empty() {
        for v in &table.integrality_violations {
            eprintln!("integrality finding: {v}");
        }
        return Ok(2);
    }
    Ok(0)
}

fn run_rank_one(args: &RankOneArgs) -> anyhow::Result<i32> {
    let ctype = CoxeterType::from_str(&args.ctype)?;
    if matches!(ctype, CoxeterType::E7 | CoxeterType::E8) && !args.allow_long {
        bail!("{} is minutes-scale; pass --allow-long", args.ctype);
    }
    let selector = OrbitSelector::from_str(&args.orbit)?;
    // the all-hyperplanes union of B2 is the two-orbit counterexample and
    // runs through the exact group algebra of B2 itself
    if selector == OrbitSelector::All && ctype == CoxeterType::B(2) {
        let fact = rankone::b2_all_hyperplanes_charpoly()?;
        let rendered = render_factored(&args.ctype, "all", &fact, args.format);
        emit(args.out.as_ref(), &rendered)?;
        return Ok(2); // irreducible quadratic factors: an integrality finding
    }
    let rs = RootSystem::build(ctype)?;
    if selector == OrbitSelector::All && rs.hyperplane_orbits().len() > 1 {
        bail!("--orbit all is only supported for B2 (the counterexample) or single-orbit types");
    }
    let orbit = spectra_core::rootsys::select_orbit(&rs, selector);
    let fact = rankone::rank_one_charpoly(&rs, &orbit)?;
    let has_irrational = fact
        .factors
        .iter()
        .any(|(f, _)| f.degree() > 1);
    let rendered = render_factored(&args.ctype, &args.orbit, &fact, args.format);
    emit(args.out.as_ref(), &rendered)?;
    // quadratic factors appear for the non-crystallographic types; they are
    // algebraic integers, not a finding
    if has_irrational && ctype.is_crystallographic() {
        return Ok(2);
    }
    Ok(0)
}

fn render_factored(
    ctype: &str,
    orbit: &str,
    fact: &spectra_core::poly::FactoredPoly,
    format: Format,
) -> String {
    match format {
        Format::Tsv => format!("{ctype}\t{orbit}\t{fact}\n"),
        Format::Md => format!("| {ctype} | {orbit} | `{fact}` |\n"),
        Format::Json => {
            let factors: Vec<serde_json::Value> = fact
                .factors
                .iter()
                .map(|(p, e)| {
                    serde_json::json!({
                        "factor": p.to_string(),
                        "exponent": e,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "schema": 1,
                "type": ctype,
                "orbit": orbit,
                "characteristic_polynomial": fact.to_string(),
                "factors": factors,
            }))
            .expect("serializable")
                + "\n"
        }
    }
}

fn run_cache(action: &CacheAction) -> anyhow::Result<i32> {
    match action {
        CacheAction::Build { n, dir } => {
            let dir = cache::resolve_dir(dir.as_deref());
            let (a, b) = cache::build(&dir, *n)?;
            println!("wrote {}", a.display());
            println!("wrote {}", b.display());
        }
        CacheAction::Inspect { n, dir } => {
            let dir = cache::resolve_dir(dir.as_deref());
            for info in cache::inspect(&dir, *n)? {
                println!("{}\tdim {}", info.lambda, info.dim);
            }
        }
        CacheAction::Clear { dir } => {
            let dir = cache::resolve_dir(dir.as_deref());
            let removed = cache::clear(&dir)?;
            println!("removed {removed} files");
        }
    }
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectra { target } => match target {
            SpectraTarget::TypeA(args) => run_type_a(args),
            SpectraTarget::RankOne(args) => run_rank_one(args),
        },
        Command::Verify(args) => verify::run(args.suite.as_str(), args.n, args.format == Format::Json),
        Command::Cache { action } => run_cache(action),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
