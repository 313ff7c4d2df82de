//! Command-line front end: construct matching generating polynomials,
//! compute Hilbert functions and Hessians of the algebras they define, run
//! the strong Lefschetz check, and re-derive the supporting identities with
//! machine-readable verdicts.
//!
//! Exit codes: 0 on success, 1 when a verification is refuted (or corrected
//! under `--strict-paper`) or a Lefschetz check fails, 2 on usage errors.

mod cache;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigUint;
use num::integer::binomial;
use serde_json::json;

use matchlef::combinatorics::{matching_count, VertexSet};
use matchlef::generators::matching_generating_function;
use matchlef::hessian::{matching_hessian, strong_lefschetz_check};
use matchlef::inverse_system::{
    catalecticant, catalecticant_columns, ColumnStrategy, HilbertFunction,
};
use matchlef::verification::{
    any_corrected, any_refuted, default_sweep, reports_for, reports_to_json_string, ClaimId,
    VerificationReport,
};

use cache::Cache;

#[derive(Parser)]
#[command(
    name = "matchlef",
    version,
    about = "Exact computations for algebras defined by matchings of complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generating polynomial of the k-edge matchings
    Phi(PhiArgs),
    /// Print the matching count C(u,2k)(2k-1)!!
    Count(CountArgs),
    /// Print the Hilbert function of the matching algebra
    Hilbert(HilbertArgs),
    /// Build a matching Hessian; optionally evaluate it and take determinants
    Hessian(HessianArgs),
    /// Run the strong Lefschetz check with the all-ones linear form
    Lefschetz(LefschetzArgs),
    /// Re-derive the supporting identities and report verdicts
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SetArgs {
    /// Vertex count; the vertex set is {1..n}
    #[arg(long)]
    n: Option<usize>,
    /// Explicit comma-separated vertex list, e.g. "1,3,7,9"
    #[arg(long, conflicts_with = "n")]
    vertices: Option<String>,
}

impl SetArgs {
    fn is_given(&self) -> bool {
        self.n.is_some() || self.vertices.is_some()
    }

    /// Resolves the vertex set; the bool is true for the default `{1..n}`
    /// shape, the only one the cache keys can describe.
    fn vertex_set(&self) -> Result<(VertexSet, bool), String> {
        if let Some(list) = &self.vertices {
            let ids: Result<Vec<i64>, _> =
                list.split(',').map(|s| s.trim().parse::<i64>()).collect();
            let ids = ids.map_err(|e| format!("bad --vertices entry: {e}"))?;
            if ids.is_empty() {
                return Err("--vertices must name at least one vertex".into());
            }
            let set = VertexSet::from_ints(ids.iter().copied());
            if set.len() != ids.len() {
                return Err("--vertices contains duplicates".into());
            }
            return Ok((set, false));
        }
        let n = self.n.ok_or("one of --n or --vertices is required")?;
        if n < 1 {
            return Err("--n must be at least 1".into());
        }
        Ok((VertexSet::first_n(n), true))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CacheArgs {
    /// Directory for cached evaluated Hessians and catalecticants
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Recompute everything even when a cache directory is set
    #[arg(long)]
    no_cache: bool,
}

impl CacheArgs {
    fn cache(&self, keyable: bool) -> Cache {
        if keyable {
            Cache::new(self.cache_dir.clone(), self.no_cache)
        } else {
            Cache::disabled()
        }
    }
}

#[derive(Args)]
struct PhiArgs {
    #[command(flatten)]
    set: SetArgs,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    set: SetArgs,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct HilbertArgs {
    #[command(flatten)]
    set: SetArgs,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    cache: CacheArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct HessianArgs {
    #[command(flatten)]
    set: SetArgs,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    /// Evaluate every entry at the all-ones point
    #[arg(long)]
    at_ones: bool,
    /// Print the exact determinant of the evaluated matrix
    #[arg(long)]
    det: bool,
    /// Write the evaluated matrix to a file (.csv or .json by extension)
    #[arg(long)]
    dump: Option<PathBuf>,
    #[command(flatten)]
    cache: CacheArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct LefschetzArgs {
    #[command(flatten)]
    set: SetArgs,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    set: SetArgs,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Claim selector: dualpoly, generators, hessian-entry,
    /// det-factorization, hilbert, criterion, main-theorem, or all
    #[arg(long, default_value = "all")]
    lemma: String,
    /// Seed for the pseudo-random rational test points
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fail (exit 1) on corrected claims, not only refuted ones
    #[arg(long)]
    strict_paper: bool,
    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Phi(args) => cmd_phi(args),
        Command::Count(args) => cmd_count(args),
        Command::Hilbert(args) => cmd_hilbert(args),
        Command::Hessian(args) => cmd_hessian(args),
        Command::Lefschetz(args) => cmd_lefschetz(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn emit(output: &OutputArgs, content: String) -> Result<(), String> {
    match &output.out {
        Some(path) => fs::write(path, content + "\n")
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout().lock(), "{content}") {
                Ok(()) => Ok(()),
                // a closed pipe (e.g. `matchlef ... | head`) is not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(format!("cannot write to stdout: {e}")),
            }
        }
    }
}

fn cmd_phi(args: PhiArgs) -> Result<u8, String> {
    let (u, _) = args.set.vertex_set()?;
    let phi = matching_generating_function(&u, args.k);
    let content = match args.output.format {
        Format::Text => format!("{phi} ({} terms)", phi.term_count()),
        Format::Json => {
            let value = json!({
                "u": u.len(),
                "k": args.k,
                "term_count": phi.term_count(),
                "terms": phi.json_value()["terms"],
            });
            value.to_string()
        }
    };
    emit(&args.output, content)?;
    Ok(0)
}

fn cmd_count(args: CountArgs) -> Result<u8, String> {
    let (u, _) = args.set.vertex_set()?;
    let count = matching_count(u.len(), args.k);
    let content = match args.output.format {
        Format::Text => count.to_string(),
        Format::Json => json!({
            "u": u.len(),
            "k": args.k,
            "count": count.to_string(),
        })
        .to_string(),
    };
    emit(&args.output, content)?;
    Ok(0)
}

fn cmd_hilbert(args: HilbertArgs) -> Result<u8, String> {
    let (u, default_range) = args.set.vertex_set()?;
    let (n, k) = (u.len(), args.k);
    if 2 * k > n {
        return Err("hilbert requires 2k <= n".into());
    }
    let cache = args.cache.cache(default_range);
    let phi = matching_generating_function(&u, k);
    let mut dims = Vec::with_capacity(k + 1);
    for d in 0..=k {
        let columns = catalecticant_columns(&phi, d, ColumnStrategy::MatchingMonomials)
            .map_err(|e| e.to_string())?;
        let key = format!("catalecticant_n{n}_k{k}_d{d}_matching");
        let matrix = cache.matrix(&key, || {
            catalecticant(&phi, d, &columns).expect("columns have degree d")
        });
        dims.push(matrix.rank());
    }
    let computed = HilbertFunction::from_dims(dims);
    let printed: Vec<BigUint> = (0..=k)
        .map(|d| binomial(BigUint::from(2 * k), BigUint::from(2 * d)))
        .collect();
    let matches_printed = computed
        .dims()
        .iter()
        .zip(&printed)
        .all(|(&h, p)| BigUint::from(h) == *p);
    let content = match args.output.format {
        Format::Text => {
            if matches_printed {
                computed.to_string()
            } else {
                let series: Vec<String> = printed.iter().map(|p| p.to_string()).collect();
                format!("{computed} [printed series ({})]", series.join(","))
            }
        }
        Format::Json => json!({
            "u": n,
            "k": k,
            "computed": computed.dims(),
            "printed": printed.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "matches_printed": matches_printed,
        })
        .to_string(),
    };
    emit(&args.output, content)?;
    Ok(0)
}

fn cmd_hessian(args: HessianArgs) -> Result<u8, String> {
    let (u, default_range) = args.set.vertex_set()?;
    let (n, k, d) = (u.len(), args.k, args.d);
    if 2 * d > k {
        return Err("hessian requires 2d <= k".into());
    }
    if 2 * k > n {
        return Err("hessian requires 2k <= n".into());
    }
    let cache = args.cache.cache(default_range);
    let need_eval = args.at_ones || args.det || args.dump.is_some();

    let mut evaluated = None;
    if need_eval {
        let key = format!("hessian_ones_n{n}_k{k}_d{d}");
        evaluated = Some(cache.matrix(&key, || {
            matching_hessian(&u, k, d)
                .expect("parameters were validated")
                .at_ones()
        }));
    }
    if let (Some(path), Some(matrix)) = (&args.dump, &evaluated) {
        let is_csv = path.extension().is_some_and(|e| e == "csv");
        let payload = if is_csv {
            matrix.to_csv_string()
        } else {
            matrix.to_json_string()
        };
        fs::write(path, payload).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }

    let det_value = match (&evaluated, args.det) {
        (Some(matrix), true) => Some(matrix.det().map_err(|e| e.to_string())?),
        _ => None,
    };

    let content = match args.output.format {
        Format::Text => {
            let mut lines = Vec::new();
            if args.at_ones {
                let matrix = evaluated.as_ref().expect("evaluated above");
                lines.extend(matrix.to_string().lines().map(str::to_string));
            } else if !args.det {
                let h = matching_hessian(&u, k, d).map_err(|e| e.to_string())?;
                for i in 0..h.size() {
                    let row: Vec<String> =
                        (0..h.size()).map(|j| h.entry(i, j).to_string()).collect();
                    lines.push(format!("[{}]", row.join(", ")));
                }
            }
            if let Some(det) = &det_value {
                lines.push(render_rational(det));
            }
            lines.join("\n")
        }
        Format::Json => {
            let mut value = json!({"u": n, "k": k, "d": d});
            let obj = value.as_object_mut().expect("object literal");
            if let Some(matrix) = &evaluated {
                obj.insert("matrix".into(), matrix.json_value());
            } else {
                let h = matching_hessian(&u, k, d).map_err(|e| e.to_string())?;
                obj.insert("labels".into(), json!(h.labels()));
                let entries: Vec<Vec<String>> = (0..h.size())
                    .map(|i| (0..h.size()).map(|j| h.entry(i, j).to_string()).collect())
                    .collect();
                obj.insert("entries".into(), json!(entries));
            }
            if let Some(det) = &det_value {
                obj.insert("det".into(), json!(render_rational(det)));
            }
            value.to_string()
        }
    };
    emit(&args.output, content)?;
    Ok(0)
}

fn render_rational(q: &num::rational::BigRational) -> String {
    if num::traits::One::is_one(q.denom()) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn cmd_lefschetz(args: LefschetzArgs) -> Result<u8, String> {
    let (u, _) = args.set.vertex_set()?;
    if 2 * args.k > u.len() {
        return Err("lefschetz requires 2k <= n".into());
    }
    let report = strong_lefschetz_check(&u, args.k, None).map_err(|e| e.to_string())?;
    let content = match args.output.format {
        Format::Text => report.to_string(),
        Format::Json => report.to_json_string(),
    };
    emit(&args.output, content)?;
    Ok(if report.strong_lefschetz { 0 } else { 1 })
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, String> {
    let claims: Vec<ClaimId> = if args.lemma == "all" {
        ClaimId::ALL.to_vec()
    } else {
        vec![ClaimId::parse(&args.lemma).ok_or_else(|| {
            format!(
                "unknown --lemma {:?}; expected one of dualpoly, generators, hessian-entry, \
                 det-factorization, hilbert, criterion, main-theorem, all",
                args.lemma
            )
        })?]
    };

    let reports: Vec<VerificationReport> = if args.set.is_given() || args.k.is_some() {
        if !(args.set.is_given() && args.k.is_some()) {
            return Err("explicit verification needs both a vertex set and --k".into());
        }
        let (u, _) = args.set.vertex_set()?;
        let k = args.k.expect("checked above");
        let mut out = Vec::new();
        for claim in &claims {
            out.extend(
                reports_for(*claim, &u, k, args.d, args.seed).map_err(|e| e.to_string())?,
            );
        }
        out
    } else {
        if args.d.is_some() {
            return Err("--d needs an explicit vertex set and --k".into());
        }
        let filter = (claims.len() == 1).then(|| claims[0]);
        default_sweep(filter, args.seed)
    };

    let content = match args.output.format {
        Format::Text => reports
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => reports_to_json_string(&reports),
    };
    emit(&args.output, content)?;
    if any_refuted(&reports) {
        return Ok(1);
    }
    if args.strict_paper && any_corrected(&reports) {
        return Ok(1);
    }
    Ok(0)
}
