//! Command-line front end: validate algebra files, run verification suites,
//! manage the Gröbner cache, and regenerate the builtin fixture files.
//!
//! Exit codes: 0 when everything passed (inconclusive results count as
//! passing unless `--strict`), 1 when a check failed, 2 on input errors.

mod checks;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use hopfgen::cache::GroebnerCache;
use hopfgen::catalog;
use hopfgen::form::{BilinearForm, LinearForm};
use hopfgen::hopf::HopfAlgebra;
use hopfgen::json;

use checks::Ctx;
use report::{InputDigest, Inputs, Report};

#[derive(Parser)]
#[command(name = "hopfgen", version, about = "Exact Hopf-algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the Hopf algebra axioms of a structure-constant file.
    Validate {
        /// Path to the algebra JSON file.
        algebra: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification checks against an algebra (and optional forms).
    Verify {
        #[arg(long)]
        algebra: PathBuf,
        /// Bilinear form JSON; the trivial cocycle when absent.
        #[arg(long)]
        cocycle: Option<PathBuf>,
        /// Linear form JSON (needed by the `cohomologous` check).
        #[arg(long)]
        lambda: Option<PathBuf>,
        /// Comma-separated check identifiers.
        #[arg(long, value_delimiter = ',', required = true)]
        checks: Vec<String>,
        /// S-pair budget for elimination-based checks.
        #[arg(long)]
        budget: Option<usize>,
        /// Degree bound for elimination-based checks.
        #[arg(long)]
        degree_bound: Option<u32>,
        /// Run up to this many checks concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Treat inconclusive results as failures.
        #[arg(long)]
        strict: bool,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Gröbner cache directory (overrides HOPFGEN_CACHE).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Print wall-clock timings in the text output.
        #[arg(long)]
        timings: bool,
    },
    /// Inspect or clear the Gröbner cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// Write the builtin fixture files (algebras, cocycles, corrupted variants).
    Fixtures {
        /// Target directory.
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    List {
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    Stats {
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    Clear {
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { algebra, out } => cmd_validate(&algebra, out.as_deref()),
        Command::Verify {
            algebra,
            cocycle,
            lambda,
            checks,
            budget,
            degree_bound,
            jobs,
            strict,
            out,
            cache_dir,
            timings,
        } => cmd_verify(VerifyArgs {
            algebra,
            cocycle,
            lambda,
            checks,
            budget,
            degree_bound,
            jobs: jobs.max(1),
            strict,
            out,
            cache_dir,
            timings,
        }),
        Command::Cache { action } => cmd_cache(action),
        Command::Fixtures { out } => {
            write_fixtures(&out)?;
            println!("fixtures written to {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_to_string(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))
}

fn digest(path: &Path, text: &str) -> InputDigest {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let hash = hasher.finalize();
    InputDigest {
        path: path.display().to_string(),
        sha256: hash.iter().map(|b| format!("{b:02x}")).collect(),
    }
}

fn load_algebra(path: &Path) -> anyhow::Result<(HopfAlgebra, InputDigest)> {
    let text = read_to_string(path)?;
    let algebra = json::read_algebra(&text)
        .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    let d = digest(path, &text);
    Ok((algebra, d))
}

fn cmd_validate(path: &Path, out: Option<&Path>) -> anyhow::Result<ExitCode> {
    let (algebra, d) = load_algebra(path)?;
    let ctx = Ctx::new(algebra, None, None, None, None, None);
    let mut report = Report::new(
        Inputs {
            algebra: Some(d),
            ..Inputs::default()
        },
        None,
        None,
    );
    report.push(checks::run_check(&ctx, "validate"));
    print!("{}", report.render_text(false));
    if let Some(out) = out {
        fs::write(out, serde_json::to_string_pretty(&report)?)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", out.display()))?;
    }
    Ok(if report.summary.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

struct VerifyArgs {
    algebra: PathBuf,
    cocycle: Option<PathBuf>,
    lambda: Option<PathBuf>,
    checks: Vec<String>,
    budget: Option<usize>,
    degree_bound: Option<u32>,
    jobs: usize,
    strict: bool,
    out: Option<PathBuf>,
    cache_dir: Option<PathBuf>,
    timings: bool,
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    // reject unknown identifiers before any computation
    for id in &args.checks {
        if !checks::is_valid_check(id) {
            anyhow::bail!("unknown check identifier `{id}`");
        }
    }
    let (algebra, algebra_digest) = load_algebra(&args.algebra)?;
    let mut inputs = Inputs {
        algebra: Some(algebra_digest),
        ..Inputs::default()
    };
    let alpha: Option<BilinearForm> = match &args.cocycle {
        Some(p) => {
            let text = read_to_string(p)?;
            inputs.cocycle = Some(digest(p, &text));
            Some(json::read_bilinear(&text).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?)
        }
        None => None,
    };
    let lambda: Option<LinearForm> = match &args.lambda {
        Some(p) => {
            let text = read_to_string(p)?;
            inputs.lambda = Some(digest(p, &text));
            Some(json::read_linear(&text).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?)
        }
        None => None,
    };
    if let Some(a) = &alpha {
        if a.dim() != algebra.dim() {
            anyhow::bail!("cocycle dimension {} does not match the algebra", a.dim());
        }
    }
    if let Some(l) = &lambda {
        if l.dim() != algebra.dim() {
            anyhow::bail!("lambda dimension {} does not match the algebra", l.dim());
        }
    }
    let cache = resolve_cache_dir(args.cache_dir.as_deref())?
        .map(GroebnerCache::open)
        .transpose()?;
    let ctx = Ctx::new(
        algebra,
        alpha,
        lambda,
        args.budget,
        args.degree_bound,
        cache,
    );

    let mut report = Report::new(inputs, args.budget, args.degree_bound);
    let results = run_all(&ctx, &args.checks, args.jobs);
    for r in results {
        report.push(r);
    }
    print!("{}", report.render_text(args.timings));
    if let Some(out) = &args.out {
        fs::write(out, serde_json::to_string_pretty(&report)?)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", out.display()))?;
    }
    let inconclusive_fails = args.strict && report.summary.inconclusive > 0;
    Ok(if report.summary.fail == 0 && !inconclusive_fails {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_all(ctx: &Ctx, ids: &[String], jobs: usize) -> Vec<report::CheckResult> {
    if jobs <= 1 || ids.len() <= 1 {
        return ids.iter().map(|id| timed_check(ctx, id)).collect();
    }
    // independent checks over an immutable context: a simple indexed pool
    let results: Mutex<Vec<Option<report::CheckResult>>> =
        Mutex::new((0..ids.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(ids.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= ids.len() {
                    break;
                }
                let r = timed_check(ctx, &ids[i]);
                results.lock().unwrap()[i] = Some(r);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every check ran"))
        .collect()
}

fn timed_check(ctx: &Ctx, id: &str) -> report::CheckResult {
    let start = Instant::now();
    let mut r = checks::run_check(ctx, id);
    r.millis = start.elapsed().as_millis();
    r
}

fn resolve_cache_dir(flag: Option<&Path>) -> anyhow::Result<Option<PathBuf>> {
    if let Some(p) = flag {
        return Ok(Some(p.to_path_buf()));
    }
    match std::env::var_os("HOPFGEN_CACHE") {
        Some(v) if !v.is_empty() => Ok(Some(PathBuf::from(v))),
        _ => Ok(None),
    }
}

fn cmd_cache(action: CacheAction) -> anyhow::Result<ExitCode> {
    let dir = |flag: Option<PathBuf>| -> anyhow::Result<PathBuf> {
        resolve_cache_dir(flag.as_deref())?
            .ok_or_else(|| anyhow::anyhow!("no cache directory (use --cache-dir or HOPFGEN_CACHE)"))
    };
    match action {
        CacheAction::List { cache_dir } => {
            let cache = GroebnerCache::open(dir(cache_dir)?)?;
            let entries = cache.entries()?;
            if entries.is_empty() {
                println!("cache is empty");
            }
            for e in entries {
                println!(
                    "{}  {} bytes, basis size {}, max degree {}",
                    e.key, e.bytes, e.basis_size, e.max_degree
                );
            }
        }
        CacheAction::Stats { cache_dir } => {
            let cache = GroebnerCache::open(dir(cache_dir)?)?;
            let stats = cache.stats();
            let entries = cache.entries()?;
            println!(
                "{} entries, {} hits, {} misses",
                entries.len(),
                stats.hits,
                stats.misses
            );
            for e in entries {
                println!("  {}: basis size {}", e.key, e.basis_size);
            }
        }
        CacheAction::Clear { cache_dir } => {
            let cache = GroebnerCache::open(dir(cache_dir)?)?;
            let removed = cache.clear()?;
            println!("removed {removed} files");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_fixtures(dir: &Path) -> anyhow::Result<()> {
    let corrupt_dir = dir.join("corrupt");
    fs::create_dir_all(&corrupt_dir)
        .map_err(|e| anyhow::anyhow!("cannot create {}: {e}", corrupt_dir.display()))?;
    let write = |path: PathBuf, text: String| -> anyhow::Result<()> {
        fs::write(&path, text).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))
    };
    for name in catalog::FIXTURE_NAMES {
        let h = catalog::fixture(name).expect("builtin");
        write(dir.join(format!("{name}.json")), json::write_algebra(&h))?;
    }
    write(
        dir.join("klein4-sign.json"),
        json::write_bilinear(&catalog::klein_sign_cocycle()),
    )?;
    write(
        dir.join("s3-coboundary.json"),
        json::write_bilinear(&catalog::s3_coboundary_cocycle()),
    )?;
    write(
        dir.join("sweedler-nonlazy.json"),
        json::write_bilinear(&catalog::h4_nonlazy_form()),
    )?;
    // a convolution-invertible linear form on kZ/2
    write(
        dir.join("lambda-z2.json"),
        json::write_linear(&LinearForm::new(vec![
            hopfgen::scalar::int(1),
            hopfgen::scalar::int(2),
        ])),
    )?;

    // corrupted variants, each violating one named axiom
    let mut sweedler = json::AlgebraJson::from_algebra(&catalog::sweedler_h4());
    sweedler.antipode[2] = vec!["0".into(), "0".into(), "0".into(), "1".into()]; // S(x) = +gx
    write(
        corrupt_dir.join("sweedler-antipode.json"),
        serde_json::to_string_pretty(&sweedler)?,
    )?;

    let mut z3 = json::AlgebraJson::from_algebra(&catalog::group_z(3));
    z3.mult[1][1] = vec!["1".into(), "0".into(), "0".into()]; // g * g = e
    write(
        corrupt_dir.join("z3-mult.json"),
        serde_json::to_string_pretty(&z3)?,
    )?;

    let mut oz2 = json::AlgebraJson::from_algebra(&catalog::dual_z2());
    // double one comultiplication coefficient
    oz2.comult[1] = vec![(0, 1, "1".into()), (1, 0, "2".into())];
    write(
        corrupt_dir.join("oz2-comult.json"),
        serde_json::to_string_pretty(&oz2)?,
    )?;
    Ok(())
}
