use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::{mpsc, Arc};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;

use binomac::identities::{self, AMode, CheckConfig, CheckReport};
use binomac::interpolation::{closed_d, closed_e, closed_phi, preflight};
use binomac::scalars::parse_rational;
use binomac::{Cache, Composition, Error, FieldConfig, Gen, Interpolator, LaurentPoly, Scalar, Variant};

mod render;

#[derive(Parser)]
#[command(name = "binomac", version, about = "Interpolation Macdonald and Jack polynomials, binomial coefficients, and identity checks")]
struct Cli {
    /// Directory for the on-disk polynomial cache.
    #[arg(long, global = true, env = "CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial family member, a binomial coefficient, or a closed-form factor.
    Compute(ComputeArgs),
    /// Run one catalog check, or all of them.
    Check(CheckArgs),
    /// List the check catalog.
    ListChecks {
        #[arg(long)]
        json: bool,
        /// Keep entries whose id contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Inspect or clear the on-disk cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Stats,
    Clear,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Qt,
    R,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "G")]
    G,
    #[value(name = "E")]
    E,
    #[value(name = "Gprime")]
    Gprime,
    #[value(name = "Gplus")]
    Gplus,
    #[value(name = "R")]
    R,
    #[value(name = "Rprime")]
    Rprime,
    #[value(name = "O")]
    O,
    #[value(name = "binom")]
    Binom,
    #[value(name = "d")]
    D,
    #[value(name = "e")]
    ClosedE,
    #[value(name = "phi")]
    Phi,
}

/// Parameter values shared by `compute` and `check`.
#[derive(Args)]
struct FieldArgs {
    /// Rational value for q, e.g. 2 or -3/5.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    family: FamilyArg,
    /// Number of variables; defaults to the length of the index.
    #[arg(long)]
    n: Option<usize>,
    /// Composition as comma-separated parts, e.g. 0,1.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// qt for the Macdonald family, r for the Jack family.
    #[arg(long, value_enum, default_value = "qt")]
    variant: VariantArg,
    /// Keep every parameter symbolic (the default unless values are given).
    #[arg(long, conflicts_with_all = ["q", "t", "r", "a"])]
    symbolic: bool,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Print the canonical JSON serialization.
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Print with subscripts, superscripts and a true minus sign.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// A catalog id, or `all`.
    id: String,
    /// Number of variables.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Degree bound; defaults to 4 for n ≤ 2 and 3 otherwise.
    #[arg(long)]
    deg: Option<u32>,
    /// Seed for random instances and sampled a-values.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for running entries.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Keep q and t symbolic instead of q=2, t=3.
    #[arg(long, conflicts_with_all = ["q", "t"])]
    symbolic: bool,
    /// Keep a symbolic in the (q, t) checks instead of sampling it.
    #[arg(long)]
    symbolic_a: bool,
    #[command(flatten)]
    field: FieldArgs,
    /// Record wall-clock time per entry (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
    /// One JSON report per line.
    #[arg(long)]
    json: bool,
}

/// Exit statuses.
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const COLLISION: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SpecializationCollision(_) => COLLISION,
        Error::UsageError(_) | Error::Parse(_) | Error::IndexError(_) | Error::DimensionError(_) => USAGE,
        _ => FAILED,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => make_interpolator(cli.cache_dir).and_then(|ip| compute(&args, &ip)),
        Command::Check(args) => make_interpolator(cli.cache_dir).and_then(|ip| check(&args, ip)),
        Command::ListChecks { json, filter } => list_checks(json, filter.as_deref()),
        Command::Cache { action } => cache(action, cli.cache_dir),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn make_interpolator(dir: Option<PathBuf>) -> Result<Interpolator, Error> {
    Ok(match dir {
        Some(d) => Interpolator::with_cache(Arc::new(Cache::with_dir(d)?)),
        None => Interpolator::new(),
    })
}

fn parse_index(flag: &str, text: &str) -> Result<Composition, Error> {
    let parts = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::UsageError(format!("--{flag}: {s:?} is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Composition::from_signed(&parts).map_err(|e| match e {
        Error::UsageError(msg) => Error::UsageError(format!("--{flag}: {msg}")),
        other => other,
    })
}

fn parse_value(flag: &str, text: &str) -> Result<BigRational, Error> {
    parse_rational(text).map_err(|e| Error::UsageError(format!("--{flag}: {e}")))
}

fn field_values(field: &FieldArgs) -> Result<Vec<(Gen, BigRational)>, Error> {
    let mut out = Vec::new();
    for (g, v) in [(Gen::Q, &field.q), (Gen::T, &field.t), (Gen::R, &field.r)] {
        if let Some(v) = v {
            out.push((g, parse_value(g.name(), v)?));
        }
    }
    Ok(out)
}

enum Value {
    Poly(LaurentPoly),
    Scalar(Scalar),
}

fn compute(args: &ComputeArgs, ip: &Interpolator) -> Result<u8, Error> {
    let family = args.family;
    let symmetric = matches!(family, FamilyArg::R | FamilyArg::Rprime)
        || (family == FamilyArg::Binom && args.lambda.is_some());
    let (first, second) = if symmetric {
        (("lambda", &args.lambda), ("mu", &args.mu))
    } else {
        (("alpha", &args.alpha), ("beta", &args.beta))
    };
    let main = match first.1 {
        Some(s) => parse_index(first.0, s)?,
        None => return Err(Error::UsageError(format!("--{} is required", first.0))),
    };
    let other = match (family, second.1) {
        (FamilyArg::Binom, Some(s)) => Some(parse_index(second.0, s)?),
        (FamilyArg::Binom, None) => return Err(Error::UsageError(format!("--{} is required", second.0))),
        _ => None,
    };
    let n = args.n.unwrap_or(main.n());
    if main.n() != n || other.as_ref().is_some_and(|o| o.n() != n) {
        return Err(Error::UsageError(format!("indices must have length n = {n}")));
    }

    let needs_a = matches!(family, FamilyArg::O | FamilyArg::Phi) || args.a.is_some();
    let variant = match (args.variant, needs_a) {
        (VariantArg::Qt, false) => Variant::QT,
        (VariantArg::Qt, true) => Variant::QTA,
        (VariantArg::R, false) => Variant::R,
        (VariantArg::R, true) => Variant::RA,
    };
    let mut values = field_values(&args.field)?;
    if let Some(a) = &args.a {
        values.push((Gen::A, parse_value("a", a)?));
    }
    let cfg = FieldConfig::with_values(variant, values)?;
    let size = main.size().max(other.as_ref().map_or(0, |o| o.size()));
    let instance = format!("{}{}", family_label(family), main);
    if cfg.any_specialized() {
        preflight(n, size, &cfg).map_err(|e| e.in_context(true, &instance))?;
    }

    let value = evaluate(family, &main, other.as_ref(), symmetric, &cfg, ip)
        .map_err(|e| e.in_context(cfg.any_specialized(), &instance))?;
    let text = match (&value, args.json) {
        (Value::Poly(p), true) => p.to_json().to_string(),
        (Value::Scalar(s), true) => s.to_json().to_string(),
        (Value::Poly(p), false) => p.to_string(),
        (Value::Scalar(s), false) => s.to_string(),
    };
    if args.pretty {
        println!("{}", render::pretty(&text));
    } else {
        println!("{text}");
    }
    Ok(0)
}

fn family_label(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::G => "G",
        FamilyArg::E => "E",
        FamilyArg::Gprime => "Gprime",
        FamilyArg::Gplus => "Gplus",
        FamilyArg::R => "R",
        FamilyArg::Rprime => "Rprime",
        FamilyArg::O => "O",
        FamilyArg::Binom => "binom",
        FamilyArg::D => "d",
        FamilyArg::ClosedE => "e",
        FamilyArg::Phi => "phi",
    }
}

fn evaluate(
    family: FamilyArg,
    main: &Composition,
    other: Option<&Composition>,
    symmetric: bool,
    cfg: &FieldConfig,
    ip: &Interpolator,
) -> Result<Value, Error> {
    let cloned = |p: Arc<LaurentPoly>| Value::Poly((*p).clone());
    Ok(match family {
        FamilyArg::G => cloned(ip.g(main, cfg)?),
        FamilyArg::E => Value::Poly(ip.e(main, cfg)?),
        FamilyArg::Gprime => cloned(ip.gprime(main, cfg)?),
        FamilyArg::Gplus => Value::Poly(ip.gplus(main, cfg)?),
        FamilyArg::R => cloned(ip.r_sym(main, cfg)?),
        FamilyArg::Rprime => cloned(ip.rprime(main, cfg)?),
        FamilyArg::O => cloned(ip.okounkov(main, cfg)?),
        FamilyArg::Binom => {
            let other = other.expect("binom has a second index");
            if symmetric {
                Value::Scalar(ip.binom_sym(main, other, cfg)?)
            } else {
                Value::Scalar(ip.binom(main, other, cfg)?)
            }
        }
        FamilyArg::D => Value::Scalar(closed_d(main, cfg)),
        FamilyArg::ClosedE => Value::Scalar(closed_e(main, cfg)),
        FamilyArg::Phi => Value::Scalar(closed_phi(main, &cfg.a(), cfg)),
    })
}

fn check_config(args: &CheckArgs) -> Result<CheckConfig, Error> {
    if args.n == 0 {
        return Err(Error::UsageError("--n must be positive".into()));
    }
    let mut cfg = CheckConfig::desk(args.n, args.seed);
    if let Some(d) = args.deg {
        cfg.deg = d;
    }
    if args.symbolic {
        cfg.qt = FieldConfig::symbolic(Variant::QT);
    }
    for (g, v) in field_values(&args.field)? {
        if g == Gen::R {
            cfg.r = cfg.r.clone().assign(g, v)?;
        } else {
            cfg.qt = cfg.qt.clone().assign(g, v)?;
        }
    }
    if args.symbolic_a {
        cfg.a_mode = AMode::Symbolic;
    }
    Ok(cfg)
}

fn check(args: &CheckArgs, ip: Interpolator) -> Result<u8, Error> {
    let ids: Vec<&'static str> = if args.id == "all" {
        identities::catalog().iter().map(|c| c.id).collect()
    } else {
        vec![identities::find(&args.id)?.id]
    };
    let cfg = check_config(args)?;
    cfg.validate()?;
    if args.jobs == 0 {
        return Err(Error::UsageError("--jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Error::UsageError(format!("--jobs: {e}")))?;
    // Entries run on the pool; reports are printed in catalog order as soon
    // as every earlier entry has been printed.
    let (tx, rx) = mpsc::channel();
    let mut code = 0;
    std::thread::scope(|scope| {
        let (ids, cfg, ip) = (&ids, &cfg, &ip);
        scope.spawn(move || {
            pool.install(|| {
                ids.par_iter().enumerate().for_each_with(tx, |tx, (k, id)| {
                    let _ = tx.send((k, identities::run_check(id, cfg, ip, args.timings)));
                })
            })
        });
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (k, result) in rx {
            pending.insert(k, result);
            while let Some(result) = pending.remove(&next) {
                code = code.max(emit(ids[next], result, args.json));
                next += 1;
            }
        }
    });
    Ok(code)
}

/// Print one entry's outcome and return its exit status.
fn emit(id: &str, result: Result<CheckReport, Error>, json: bool) -> u8 {
    match result {
        Ok(report) => {
            print_report(&report, json);
            if report.passed() {
                0
            } else {
                FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {id}: {e}");
            if json {
                println!("{}", serde_json::json!({"id": id, "error": e.to_string()}));
            } else {
                println!("ERROR {id}");
            }
            exit_code(&e)
        }
    }
}

fn print_report(report: &CheckReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string(report).expect("reports serialize"));
        return;
    }
    let status = if report.passed() { "PASS" } else { "FAIL" };
    let cert = match &report.certification {
        identities::Certification::NoA => String::new(),
        identities::Certification::Symbolic => "  a=symbolic".into(),
        identities::Certification::Sampled { max_points } => format!("  a=sampled({max_points} points)"),
    };
    let time = report.elapsed_ms.map(|ms| format!("  {ms} ms")).unwrap_or_default();
    println!("{status} {}  instances={}{cert}{time}", report.id, report.instances);
    for f in &report.failures {
        println!("    {}: {} != {}", f.instance, f.lhs, f.rhs);
    }
}

fn list_checks(json: bool, filter: Option<&str>) -> Result<u8, Error> {
    let entries = identities::list(filter);
    if json {
        println!("{}", serde_json::to_string_pretty(&entries)?);
    } else {
        let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        for e in &entries {
            println!("{:width$}  {}  [{}]", e.id, e.statement, e.citation);
        }
    }
    Ok(0)
}

fn cache(action: CacheAction, dir: Option<PathBuf>) -> Result<u8, Error> {
    let dir = dir.ok_or_else(|| Error::UsageError("no cache directory: pass --cache-dir or set CACHE_DIR".into()))?;
    let cache = Cache::with_dir(dir)?;
    match action {
        CacheAction::Stats => {
            let s = cache.stats();
            println!("directory: {}", s.dir.map(|d| d.display().to_string()).unwrap_or_default());
            println!("entries on disk: {}", s.disk_entries);
        }
        CacheAction::Clear => {
            let removed = cache.clear()?;
            println!("removed {removed} entries");
        }
    }
    Ok(0)
}
