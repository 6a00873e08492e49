//! `xalg` — census, homomorphism enumeration, crossed module and
//! cat¹-algebra construction from the command line.
//!
//! Exit codes: 0 success, 2 axiom/validation failure (witness printed),
//! 3 enumeration bound exceeded, 4 malformed JSON input, 5 unknown catalog id.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use xalg::algebra::{
    augmentation_ideal, group_algebra, span_closure, Algebra, AlgebraAction, Subspace, SubspaceKind,
};
use xalg::cat1alg::{identity_cat1, Cat1Alg};
use xalg::census::{
    format_csv, format_json, format_markdown, run_census, session_replay, CensusFilter,
};
use xalg::equiv::{roundtrip_iso_cat1, roundtrip_iso_xmod};
use xalg::ffield::FieldSpec;
use xalg::groups;
use xalg::homs::{all_homs, idempotent_endos};
use xalg::json::{
    cat1_from_json, cat1_to_json, hom_from_json, xmod_from_json, xmod_to_json, Cat1Json, HomJson,
    XModJson,
};
use xalg::xmodalg::{
    xmod_by_central_extension, xmod_by_ideal, xmod_by_module, xmod_by_multiplier, XModAlg,
};
use xalg::{Error, DEFAULT_MAX_ELEMENTS};

#[derive(Parser)]
#[command(
    name = "xalg",
    version,
    about = "crossed modules and cat1-algebras over group algebras"
)]
struct Cli {
    /// Worker thread count (default: all cores). Output is identical for any value.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce rows of the published (|End|, |IE|, |C|) table.
    Census(CensusArgs),
    /// Enumerate all algebra homomorphisms between two group algebras.
    Homs(HomsArgs),
    /// Build a crossed module of algebras.
    #[command(subcommand)]
    Xmod(XmodCommand),
    /// Build a cat1-algebra.
    #[command(subcommand)]
    Cat1(Cat1Command),
    /// Convert between crossed modules and cat1-algebras (JSON in, JSON out).
    Convert(ConvertArgs),
    /// Replay the checkable assertions of the reference computer sessions.
    Check,
}

#[derive(Args)]
struct CensusArgs {
    /// Comma-separated field names, e.g. GF(2),GF(3)
    #[arg(long, value_delimiter = ',')]
    fields: Vec<String>,
    /// Only groups of order at most this
    #[arg(long)]
    max_order: Option<u32>,
    /// Specific rows as order,index (repeatable)
    #[arg(long, value_parser = parse_gap_id)]
    rows: Vec<(u32, u32)>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Recompute instead of caching; accepted for compatibility (the census
    /// always streams and never stores the enumerated maps).
    #[arg(long)]
    low_mem: bool,
    /// Bound on exhaustive element scans; larger rows are flagged as skipped
    #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
    Json,
}

#[derive(Args)]
struct HomsArgs {
    #[arg(long, default_value = "GF(2)")]
    field: String,
    /// Source group: order,index or a catalog name
    #[arg(long)]
    group: String,
    /// Target group (defaults to the source group)
    #[arg(long)]
    target_group: Option<String>,
    /// Print every homomorphism matrix, not just the count
    #[arg(long)]
    matrices: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: u64,
}

#[derive(Args)]
struct IdealArgs {
    #[arg(long, default_value = "GF(2)")]
    field: String,
    #[arg(long)]
    group: String,
    /// "augmentation" or "gens"
    #[arg(long, default_value = "augmentation")]
    ideal: String,
    /// Generator element codes when --ideal gens is used
    #[arg(long, value_delimiter = ',')]
    gens: Vec<u64>,
}

#[derive(Subcommand)]
#[allow(clippy::enum_variant_names)] // the subcommands are by-ideal, by-module, ...
enum XmodCommand {
    /// Crossed module of an ideal: inclusion I -> FG with the multiplication action.
    ByIdeal(IdealArgs),
    /// Zero boundary on a square-zero ideal, seen as a module.
    ByModule(IdealArgs),
    /// Crossed module of a surjection with central kernel, read from a hom JSON file.
    ByCentralExtension { input: PathBuf },
    /// Crossed module S -> M(S) into the multiplier algebra of an ideal.
    ByMultiplier(IdealArgs),
}

#[derive(Subcommand)]
enum Cat1Command {
    /// The identity cat1-algebra of a group algebra.
    Identity {
        #[arg(long, default_value = "GF(2)")]
        field: String,
        #[arg(long)]
        group: String,
    },
    /// Count idempotent endomorphisms and cat1-structures of a group algebra.
    Enumerate {
        #[arg(long, default_value = "GF(2)")]
        field: String,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: u64,
    },
}

#[derive(Args)]
struct ConvertArgs {
    /// Target kind: cat1 (input is a crossed module) or xmod (input is a cat1-algebra)
    #[arg(long)]
    to: ConvertTarget,
    input: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Cat1,
    Xmod,
}

fn parse_gap_id(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected order,index")?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::BoundExceeded { .. } => 3,
        Error::Json(_) | Error::DimensionMismatch(_) => 4,
        Error::UnknownGroupId(_) => 5,
        _ => 2,
    }
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away (e.g. `xalg ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool configured once");
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

fn build_algebra(field: &str, group: &str) -> xalg::Result<Arc<Algebra>> {
    let f = FieldSpec::parse(field)?;
    let g = groups::parse_group(group)?;
    Ok(group_algebra(&f, &g))
}

fn build_ideal(a: &Arc<Algebra>, args: &IdealArgs) -> xalg::Result<Subspace> {
    match args.ideal.as_str() {
        "augmentation" => augmentation_ideal(a),
        "gens" => {
            let vecs: Vec<_> = args.gens.iter().map(|&c| a.decode(c)).collect();
            Ok(span_closure(a, &vecs, SubspaceKind::Ideal))
        }
        other => Err(Error::IncompatibleParents(format!(
            "unknown ideal kind {other:?}; use augmentation or gens"
        ))),
    }
}

fn report_xmod(x: &XModAlg) -> xalg::Result<()> {
    let s = x.size();
    println!("Size [{}, {}]", s[0], s[1]);
    println!("IsXModAlg: {}", x.is_xmod());
    println!("{}", serde_json::to_string_pretty(&xmod_to_json(x))?);
    Ok(())
}

fn report_cat1(c: &Cat1Alg) -> xalg::Result<()> {
    let s = c.size();
    println!("Size [{}, {}]", s[0], s[1]);
    println!("IsCat1Alg: {}", c.is_cat1());
    println!("{}", serde_json::to_string_pretty(&cat1_to_json(c))?);
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> xalg::Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn run(cmd: Command) -> xalg::Result<u8> {
    match cmd {
        Command::Census(a) => {
            let filter = CensusFilter {
                fields: a.fields,
                max_order: a.max_order,
                rows: a.rows,
            };
            let rows = run_census(&filter, a.max_elements)?;
            let out = match a.format {
                Format::Csv => format_csv(&rows),
                Format::Md => format_markdown(&rows),
                Format::Json => format_json(&rows),
            };
            print!("{out}");
            Ok(0)
        }
        Command::Homs(a) => {
            let src = build_algebra(&a.field, &a.group)?;
            let tgt = match &a.target_group {
                Some(g) => build_algebra(&a.field, g)?,
                None => src.clone(),
            };
            let homs = all_homs(&src, &tgt, a.max_elements)?;
            println!("count: {}", homs.len());
            if a.matrices {
                for h in &homs {
                    println!("{}", serde_json::to_string(&h.cols)?);
                }
            }
            Ok(0)
        }
        Command::Xmod(x) => {
            let xm = match &x {
                XmodCommand::ByIdeal(args) => {
                    let a = build_algebra(&args.field, &args.group)?;
                    let i = build_ideal(&a, args)?;
                    xmod_by_ideal(&a, &i)?
                }
                XmodCommand::ByModule(args) => {
                    let a = build_algebra(&args.field, &args.group)?;
                    let i = build_ideal(&a, args)?;
                    let (m, _incl) = i.as_algebra("module")?;
                    xmod_by_module(AlgebraAction::multiplication_on_ideal(&a, &i, &m)?)?
                }
                XmodCommand::ByCentralExtension { input } => {
                    let j: HomJson = read_json(input)?;
                    xmod_by_central_extension(&hom_from_json(&j)?)?
                }
                XmodCommand::ByMultiplier(args) => {
                    let a = build_algebra(&args.field, &args.group)?;
                    let i = build_ideal(&a, args)?;
                    let (s, _incl) = i.as_algebra("S")?;
                    xmod_by_multiplier(&s)?
                }
            };
            report_xmod(&xm)?;
            Ok(0)
        }
        Command::Cat1(c) => match c {
            Cat1Command::Identity { field, group } => {
                let a = build_algebra(&field, &group)?;
                report_cat1(&identity_cat1(&a))?;
                Ok(0)
            }
            Cat1Command::Enumerate {
                field,
                group,
                max_elements,
            } => {
                let a = build_algebra(&field, &group)?;
                let (end, idems) = idempotent_endos(&a, max_elements)?;
                let (ordered, unordered) = xalg::census::count_cat1_structures(&a, &idems);
                println!("end: {end}");
                println!("ie: {}", idems.len());
                println!("cat1: {ordered}");
                println!("cat1_unordered: {unordered}");
                Ok(0)
            }
        },
        Command::Convert(a) => match a.to {
            ConvertTarget::Cat1 => {
                let j: XModJson = read_json(&a.input)?;
                let x = xmod_from_json(&j)?;
                x.check()?;
                let x = Arc::new(x);
                let c = xalg::equiv::cat1_of_xmod(&x)?;
                println!("{}", serde_json::to_string_pretty(&cat1_to_json(&c))?);
                let (back, iso) = roundtrip_iso_xmod(&x)?;
                println!(
                    "roundtrip: {} (back Size [{}, {}], isomorphism bijective: {})",
                    if iso.is_bijective() { "ok" } else { "FAILED" },
                    back.size()[0],
                    back.size()[1],
                    iso.is_bijective()
                );
                Ok(0)
            }
            ConvertTarget::Xmod => {
                let j: Cat1Json = read_json(&a.input)?;
                let c = cat1_from_json(&j)?;
                c.check()?;
                let c = Arc::new(c);
                let x = xalg::equiv::xmod_of_cat1(&c)?;
                println!("{}", serde_json::to_string_pretty(&xmod_to_json(&x))?);
                let (back, iso) = roundtrip_iso_cat1(&c)?;
                println!(
                    "roundtrip: {} (back Size [{}, {}], isomorphism bijective: {})",
                    if iso.is_bijective() { "ok" } else { "FAILED" },
                    back.size()[0],
                    back.size()[1],
                    iso.is_bijective()
                );
                Ok(0)
            }
        },
        Command::Check => {
            let checks = session_replay();
            let mut failed = 0;
            for c in &checks {
                println!(
                    "{} {} — {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
                if !c.pass {
                    failed += 1;
                }
            }
            println!(
                "{} of {} checks passed",
                checks.len() - failed,
                checks.len()
            );
            Ok(if failed == 0 { 0 } else { 2 })
        }
    }
}
