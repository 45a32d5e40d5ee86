mod cache;
mod request;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ordram::constructions::{self, GenArgs};
use ordram::extremal::{self, lemma_checks};
use ordram::ops::{apply_op, MatrixOp};
use ordram::ramsey::{self, rerun_upper_bound, verify_certificate, Certificate, RamseyResult, Target};
use ordram::{OrderedGraph, Pattern};
use serde_json::Value;

use cache::Cache;
use request::Request;

/// Exit status: success or exact answer.
const OK: u8 = 0;
const ERROR: u8 = 1;
/// Only a bracket or a partial answer.
const INCONCLUSIVE: u8 = 2;

#[derive(Parser)]
#[command(name = "ordram", version, about = "Ordered Ramsey numbers and extremal functions of 0-1 patterns")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Result cache file (JSON lines).
    #[arg(long, global = true, env = "ORDRAM_CACHE", default_value = ".ordram-cache.jsonl")]
    cache: PathBuf,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bracket or compute R(G), writing certificates for both bounds.
    Ramsey {
        /// Graph or hypergraph file.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        /// Node budget per complete-graph size.
        #[arg(long, default_value_t = 2_000_000_000)]
        budget: u64,
        /// Do not fix the color of the first edge.
        #[arg(long)]
        no_swap: bool,
        /// Skip reversal symmetry even when the target allows it.
        #[arg(long)]
        no_mirror: bool,
        #[arg(long, default_value_t = 12)]
        split_depth: usize,
        /// Directory for certificate files.
        #[arg(long, default_value = "certs")]
        out: PathBuf,
    },
    /// Check a certificate file.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        /// Repeat the exhaustive search behind an upper-bound certificate.
        #[arg(long)]
        rerun: bool,
        #[arg(long, default_value_t = 2_000_000_000)]
        budget: u64,
    },
    /// Extremal function of a forbidden pattern.
    Ex {
        /// Pattern file (JSON or rows of 0/1).
        #[arg(long)]
        pattern: PathBuf,
        /// Host side lengths, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "n")]
        dims: Vec<usize>,
        /// Side of a cubic host (dimension from --d or the pattern).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// branch-and-bound, naive or local-search.
        #[arg(long, default_value = "branch-and-bound")]
        solver: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20_000)]
        iterations: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a named construction.
    Gen {
        /// Construction name; omit with --list.
        name: Option<String>,
        params: Vec<usize>,
        /// Input certificates for the derived colorings.
        #[arg(long)]
        cert: Vec<PathBuf>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a matrix operation or take a family member.
    Matop {
        /// Pattern file; the matrix F when omitted.
        #[arg(long)]
        pattern: Option<PathBuf>,
        /// Operation as JSON, e.g. {"op":"add-blanks","k":2,"boundary":false}.
        #[arg(long, conflicts_with = "family")]
        op: Option<String>,
        /// Family variant 1-5 (parameters of the F families).
        #[arg(long, requires = "j")]
        family: Option<u8>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check extremal-function inequalities on small fixtures.
    Props {
        /// Check name, or `all`; omit with --list.
        lemma: Option<String>,
        /// Pattern files replacing the default fixtures.
        #[arg(long = "pattern")]
        patterns: Vec<PathBuf>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        #[arg(long)]
        list: bool,
    },
    /// Values of R(G) - 1 ruled out through the associated matrix.
    MatrixBound {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 12)]
        to: usize,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Random blow-up colorings searched for a lower-bound certificate.
    Probe {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every cache entry and compare byte for byte.
    VerifyCache,
}

fn main() -> ExitCode {
    // Usage errors exit 1; clap's own default of 2 means "inconclusive" here.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn read_target(path: &Path) -> Result<Target> {
    Ok(Target::from_json(&read(path)?)?)
}

fn read_graph(path: &Path) -> Result<OrderedGraph> {
    Ok(OrderedGraph::from_json(&read(path)?)?)
}

/// JSON pattern file, or rows of 0/1.
fn read_pattern(path: &Path) -> Result<Pattern> {
    let text = read(path)?;
    let p = if text.trim_start().starts_with('{') { Pattern::from_json(&text)? } else { Pattern::parse_text(&text)? };
    Ok(p)
}

fn read_cert(path: &Path) -> Result<Certificate> {
    Ok(Certificate::from_json(&read(path)?)?)
}

/// Runs a cacheable request, consulting the cache first.
fn cached(common: &Common, req: &Request) -> Result<Value> {
    let input = serde_json::to_value(req)?;
    let cache = Cache::new(&common.cache);
    if !common.no_cache {
        if let Some(v) = cache.lookup(ramsey::ENGINE_VERSION, &input)? {
            return Ok(v);
        }
    }
    let out = req.compute(common.workers)?;
    if !common.no_cache {
        cache.store(ramsey::ENGINE_VERSION, &input, &out)?;
    }
    Ok(out)
}

/// Prints `text` or `json`, or writes the primary output to `out`.
fn emit(common: &Common, text: String, json: String, out: Option<&Path>) -> Result<()> {
    let body = match common.format {
        Format::Text => text.trim_end().to_string(),
        Format::Json => json,
    };
    match out {
        Some(p) => {
            write(p, &(body + "\n"))?;
            println!("wrote {}", p.display());
        }
        None => println!("{body}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let common = &cli.common;
    if common.workers == 0 {
        bail!("--workers must be positive");
    }
    match cli.cmd {
        Cmd::Ramsey { graph, max_n, budget, no_swap, no_mirror, split_depth, out } => {
            let target = read_target(&graph)?;
            let req = Request::Ramsey {
                mirror: !no_mirror && target.is_mirror_symmetric(),
                target,
                max_n,
                budget,
                color_swap: !no_swap,
                split_depth,
            };
            let r: RamseyResult = serde_json::from_value(cached(common, &req)?)?;
            let lower_path = out.join(format!("lower_bound_{}.json", r.lower_certificate.n));
            write(&lower_path, &r.lower_certificate.to_json_pretty())?;
            let mut paths = vec![lower_path];
            if let Some(c) = &r.upper_certificate {
                let p = out.join(format!("upper_bound_{}.json", c.n));
                write(&p, &c.to_json_pretty())?;
                paths.push(p);
            }
            let bracket = match (r.exact, r.upper) {
                (true, _) => format!("R = {}", r.lower),
                (false, Some(u)) => format!("{} <= R <= {u}", r.lower),
                (false, None) => format!("R >= {}", r.lower),
            };
            let mut text = r.log.join("\n");
            text.push_str(&format!("\n{bracket}"));
            for p in &paths {
                text.push_str(&format!("\ncertificate: {}", p.display()));
            }
            let json = serde_json::json!({
                "lower": r.lower,
                "upper": r.upper,
                "exact": r.exact,
                "log": r.log,
                "certificates": paths,
            });
            emit(common, text, serde_json::to_string_pretty(&json)?, None)?;
            Ok(if r.exact { OK } else { INCONCLUSIVE })
        }
        Cmd::Verify { cert, rerun, budget } => {
            let c = read_cert(&cert)?;
            let v = if rerun { rerun_upper_bound(&c, budget, common.workers)? } else { verify_certificate(&c)? };
            let bound = c.bound().unwrap_or_default();
            let text = format!("{bound}\n{}", serde_json::to_string(&v)?);
            emit(common, text, serde_json::to_string_pretty(&v)?, None)?;
            Ok(if v.is_ok() { OK } else { ERROR })
        }
        Cmd::Ex { pattern, dims, n, d, budget, solver, seed, iterations, out } => {
            let p = read_pattern(&pattern)?;
            let dims = match n {
                Some(n) => vec![n; d.unwrap_or(p.dim())],
                None if dims.is_empty() => bail!("give --dims or --n"),
                None => dims,
            };
            extremal::solver(&solver)?;
            let req = Request::Ex { dims, pattern: p, solver, budget, seed, iterations };
            let v = cached(common, &req)?;
            let r: extremal::ExResult = serde_json::from_value(v)?;
            let text = format!(
                "ex({:?}) = {} ({}, {} nodes, {})\n{}",
                r.dims,
                r.value,
                if r.exact { "exact" } else { "lower bound" },
                r.nodes_explored,
                r.solver,
                r.witness.to_text().unwrap_or_else(|| r.witness.to_json())
            );
            emit(common, text, r.to_json(), out.as_deref())?;
            Ok(if r.exact { OK } else { INCONCLUSIVE })
        }
        Cmd::Gen { name, params, cert, list, out } => {
            if list {
                for c in constructions::constructions() {
                    println!("{:<26} {}", c.name(), c.usage());
                }
                return Ok(OK);
            }
            let name = name.ok_or_else(|| anyhow!("construction name required (see --list)"))?;
            let certs = cert.iter().map(|p| read_cert(p)).collect::<Result<Vec<_>>>()?;
            let g = constructions::construction(&name)?.build(&GenArgs { params, certs })?;
            emit(common, g.to_text(), g.to_json(), out.as_deref())?;
            Ok(OK)
        }
        Cmd::Matop { pattern, op, family, j, out } => {
            let p = match &pattern {
                Some(path) => read_pattern(path)?,
                None => constructions::matrix_f(),
            };
            let result = match (op, family) {
                (Some(op), _) => {
                    let op: MatrixOp = serde_json::from_str(&op).context("parsing --op")?;
                    apply_op(&p, &op)?
                }
                (None, Some(v)) => constructions::f_family(v)?.member(&p, j.expect("required by clap"))?,
                (None, None) => bail!("give --op or --family"),
            };
            emit(common, result.to_text().unwrap_or_else(|| result.to_json()), result.to_json(), out.as_deref())?;
            Ok(OK)
        }
        Cmd::Props { lemma, patterns, max_n, budget, list } => {
            if list {
                for c in lemma_checks() {
                    println!("{:<18} d={} {}", c.name(), c.dim(), c.statement());
                }
                return Ok(OK);
            }
            let lemma = lemma.ok_or_else(|| anyhow!("check name required (see --list)"))?;
            let fixtures = patterns.iter().map(|p| read_pattern(p)).collect::<Result<Vec<_>>>()?;
            let names: Vec<String> = if lemma == "all" {
                lemma_checks().iter().map(|c| c.name().to_string()).collect()
            } else {
                vec![lemma]
            };
            let (mut text, mut json, mut code) = (Vec::new(), Vec::new(), OK);
            for name in names {
                let req = Request::Props { lemma: name, fixtures: fixtures.clone(), max_n, budget };
                let v = cached(common, &req)?;
                let r: extremal::LemmaReport = serde_json::from_value(v.clone())?;
                if r.failed > 0 {
                    code = ERROR;
                } else if r.inconclusive > 0 && code == OK {
                    code = INCONCLUSIVE;
                }
                text.push(r.to_text());
                json.push(v);
            }
            emit(common, text.join("\n"), serde_json::to_string_pretty(&json)?, None)?;
            Ok(code)
        }
        Cmd::MatrixBound { graph, from, to, budget } => {
            let g = read_graph(&graph)?;
            let v = cached(common, &Request::MatrixBound { graph: g, from, to, budget })?;
            let r: ramsey::MatrixBoundReport = serde_json::from_value(v)?;
            let mut text = vec![r.convention.clone()];
            for e in &r.entries {
                let ex = e.ex.map_or("-".into(), |x| x.to_string());
                text.push(format!("m={:<3} host={}x{:<3} ex={:<5} {:?}", e.m, e.dims[0], e.dims[1], ex, e.status));
            }
            text.push(format!("excluded: {:?}", r.excluded()));
            let inconclusive = r.entries.iter().any(|e| e.status == ramsey::ExclusionStatus::Inconclusive);
            emit(common, text.join("\n"), serde_json::to_string_pretty(&r)?, None)?;
            Ok(if inconclusive { INCONCLUSIVE } else { OK })
        }
        Cmd::Probe { graph, t, s, seed, trials, out } => {
            let target = read_target(&graph)?;
            match ramsey::random_blowup_probe(t, s, &target, seed, trials)? {
                Some(c) => {
                    let text = format!("found a free coloring on {} vertices: R >= {}", c.n, c.n + 1);
                    emit(common, text, c.to_json_pretty(), None)?;
                    if let Some(p) = out {
                        write(&p, &c.to_json_pretty())?;
                    }
                    Ok(OK)
                }
                None => {
                    emit(common, format!("no free coloring in {trials} trials"), "null".into(), None)?;
                    Ok(INCONCLUSIVE)
                }
            }
        }
        Cmd::VerifyCache => {
            let cache = Cache::new(&common.cache);
            let entries = cache.entries()?;
            let mut bad = 0;
            for e in &entries {
                let req: Request = serde_json::from_value(e.input.clone()).context("cache entry input")?;
                if cache::key(&e.engine, &e.input) != e.key {
                    println!("{}: key does not match input", e.key);
                    bad += 1;
                    continue;
                }
                if e.engine != ramsey::ENGINE_VERSION {
                    println!("{}: written by {}, skipped", e.key, e.engine);
                    continue;
                }
                let fresh = req.compute(common.workers)?;
                if serde_json::to_string(&fresh)? == serde_json::to_string(&e.output)? {
                    println!("{}: ok ({})", e.key, req.op());
                } else {
                    println!("{}: MISMATCH ({})", e.key, req.op());
                    bad += 1;
                }
            }
            println!("{} entries, {bad} bad", entries.len());
            Ok(if bad == 0 { OK } else { ERROR })
        }
    }
}
