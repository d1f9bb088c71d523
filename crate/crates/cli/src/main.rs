use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map};

use qbranch_core::families::{family_value, r_principal, Family};
use qbranch_core::identities::{self, catalog, report_json, CheckResult, Config};
use qbranch_core::macdonald::structure::{cache_clear, cache_stats, set_cache_dir};
use qbranch_core::macdonald::{letter_values, macdonald_p, psi, psi_prime, qbinom, schur_det, QbinomMethod};
use qbranch_core::partitions::Partition;
use qbranch_core::ring::{parse_ratfunc, RatFunc};
use qbranch_core::Error;

const MAX_N: usize = 4;
const MAX_DEGREE: u32 = 6;
const MAX_WEIGHT: u32 = 8;

#[derive(Parser)]
#[command(name = "qbranch", version, about = "Symmetric functions from branching rules, and checks of their identities")]
struct Cli {
    /// Directory of the on-disk structure-constant cache (overrides QBRANCH_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a family value in the letters x1..xn.
    Expand {
        /// One of P, schur, M, O, Rab, R.
        #[arg(long)]
        family: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        /// Parameter binding `name=expr`; unbound parameters stay symbolic.
        #[arg(long = "param", value_name = "NAME=EXPR")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The Pieri coefficient psi_{lambda/mu} (or psi' with --prime).
    Psi {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        prime: bool,
    },
    /// The generalised q-binomial coefficient [lambda; mu]_{q,t}.
    Qbinom {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// skewQ, recursion, closed-t=q or closed-t=1.
        #[arg(long, default_value = "skewQ")]
        method: String,
    },
    /// R_lambda at the principal point a(1, t, ..., t^{n-1}).
    Principal {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "b")]
        b: String,
        #[arg(long)]
        a: Option<String>,
    },
    /// Check identities from the catalog.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present_any = ["all", "list"])]
        identity: Option<String>,
        /// Every catalog entry at its default configuration.
        #[arg(long)]
        all: bool,
        /// List the catalog and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        weight: Option<u32>,
        #[arg(long = "param", value_name = "NAME=EXPR")]
        params: Vec<String>,
        /// Run the deliberately broken variant instead; it should fail.
        #[arg(long)]
        mutate: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Show per-check times in text output.
        #[arg(long)]
        timings: bool,
    },
    /// Inspect or clear the structure-constant cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    Stats,
    Clear,
}

/// Failure of a command: usage problems exit 2, failed checks exit 1.
enum Failure {
    Usage(String),
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(dir) = &cli.cache_dir {
        set_cache_dir(Some(dir.clone()));
    }
    let (out, code) = match run(cli.command) {
        Ok(out) => (out, 0),
        Err(Failure::Checks(out)) => (out, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    print!("{out}");
    ExitCode::from(code)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Expand {
            family,
            lambda,
            n,
            params,
            format,
        } => expand(&family, &lambda, n, &params, format),
        Command::Psi { lambda, mu, prime } => {
            let (lam, mu) = (partition(&lambda)?, partition(&mu)?);
            let v = if prime { psi_prime(&lam, &mu)? } else { psi(&lam, &mu)? };
            Ok(line(&v))
        }
        Command::Qbinom { lambda, mu, method } => {
            let (lam, mu) = (partition(&lambda)?, partition(&mu)?);
            let method: QbinomMethod = method.parse()?;
            Ok(line(&qbinom(&lam, &mu, method)?))
        }
        Command::Principal { lambda, n, b, a } => {
            let lam = partition(&lambda)?;
            check_n(n)?;
            let b = expr("b", &b)?;
            let a = a.map(|a| expr("a", &a)).transpose()?;
            Ok(line(&r_principal(&lam, n, &b, a.as_ref())?))
        }
        Command::Verify {
            identity,
            all,
            list,
            n,
            degree,
            weight,
            params,
            mutate,
            format,
            timings,
        } => {
            if list {
                return Ok(listing());
            }
            let overrides = Overrides {
                n,
                degree,
                weight,
                bindings: bindings(&params)?,
                mutate,
            };
            let ids: Vec<&str> = match &identity {
                Some(id) => vec![identities::entry(id)?.id],
                None => catalog().iter().map(|e| e.id).collect(),
            };
            verify(&ids, &overrides, format, timings, all)
        }
        Command::Cache { action } => match action {
            CacheAction::Stats => {
                let s = cache_stats()?;
                let path = s.path.map_or_else(|| "(none)".to_string(), |p| p.display().to_string());
                Ok(format!(
                    "path: {path}\nrecords: {}\npairs: {}\nbytes: {}\n",
                    s.records, s.pairs, s.bytes
                ))
            }
            CacheAction::Clear => {
                cache_clear()?;
                Ok("cache cleared\n".into())
            }
        },
    }
}

fn line(v: &RatFunc) -> String {
    format!("{}\n", v.to_canonical())
}

fn partition(s: &str) -> Result<Partition, Failure> {
    let p: Partition = s.parse()?;
    if p.weight() > MAX_WEIGHT {
        return Err(Failure::Usage(format!("|{p}| = {} exceeds {MAX_WEIGHT}", p.weight())));
    }
    Ok(p)
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 || n > MAX_N {
        return Err(Failure::Usage(format!("--n {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

fn expr(name: &str, src: &str) -> Result<RatFunc, Failure> {
    parse_ratfunc(src).map_err(|e| Failure::Usage(format!("parameter {name}: {e}")))
}

fn bindings(raw: &[String]) -> Result<BTreeMap<String, RatFunc>, Failure> {
    let mut out = BTreeMap::new();
    for p in raw {
        let Some((name, src)) = p.split_once('=') else {
            return Err(Failure::Usage(format!("parameter `{p}` is not of the form name=expr")));
        };
        let name = name.trim();
        if out.insert(name.to_string(), expr(name, src)?).is_some() {
            return Err(Failure::Usage(format!("parameter {name} given twice")));
        }
    }
    Ok(out)
}

fn expand(family: &str, lambda: &str, n: usize, raw: &[String], format: Format) -> Outcome {
    let lam = partition(lambda)?;
    check_n(n)?;
    let mut binds = bindings(raw)?;
    let (value, names): (RatFunc, &[&str]) = match family {
        "P" | "schur" => {
            if let Some(k) = binds.keys().next() {
                return Err(Failure::Usage(format!("family {family} has no parameter {k}")));
            }
            let v = if lam.len() > n {
                RatFunc::zero()
            } else if family == "P" {
                macdonald_p(&lam, n).to_ratfunc()
            } else {
                schur_det(&lam, n)?.to_ratfunc()
            };
            (v, &[])
        }
        other => {
            let fam: Family = other
                .parse()
                .map_err(|_| Failure::Usage(format!("unknown family `{other}` (P, schur, M, O, Rab, R)")))?;
            let names = fam.param_names();
            if let Some(k) = binds.keys().find(|k| !names.contains(&k.as_str())) {
                return Err(Failure::Usage(format!(
                    "family {other} has no parameter {k} (parameters: {})",
                    names.join(", ")
                )));
            }
            for name in names {
                binds.entry(name.to_string()).or_insert_with(|| RatFunc::sym(name));
            }
            let params: Vec<RatFunc> = names.iter().map(|k| binds[*k].clone()).collect();
            (family_value(fam, &lam, &letter_values(n), &params)?, names)
        }
    };
    let (num, den) = value.canonical_parts();
    match format {
        Format::Text => Ok(line(&value)),
        Format::Json => {
            let mut ps = Map::new();
            for k in names {
                ps.insert(k.to_string(), json!(binds[*k].to_canonical()));
            }
            let v = json!({
                "family": family,
                "lambda": lam.to_string(),
                "n": n,
                "params": ps,
                "numerator": num,
                "denominator": den,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("json values serialise")))
        }
    }
}

struct Overrides {
    n: Option<usize>,
    degree: Option<u32>,
    weight: Option<u32>,
    bindings: BTreeMap<String, RatFunc>,
    mutate: bool,
}

impl Overrides {
    fn apply(&self, base: &Config) -> Config {
        let mut cfg = base.clone();
        cfg.n = self.n.unwrap_or(cfg.n);
        cfg.degree = self.degree.unwrap_or(cfg.degree);
        cfg.weight = self.weight.unwrap_or(cfg.weight);
        cfg.mutate = self.mutate;
        for (k, v) in &self.bindings {
            cfg.bindings.insert(k.clone(), v.clone());
        }
        cfg
    }
}

fn verify(ids: &[&str], ov: &Overrides, format: Format, timings: bool, table: bool) -> Outcome {
    if let Some(n) = ov.n {
        check_n(n)?;
    }
    if let Some(d) = ov.degree.filter(|&d| d > MAX_DEGREE) {
        return Err(Failure::Usage(format!("--degree {d} exceeds {MAX_DEGREE}")));
    }
    if let Some(w) = ov.weight.filter(|&w| w > MAX_WEIGHT) {
        return Err(Failure::Usage(format!("--weight {w} exceeds {MAX_WEIGHT}")));
    }
    let jobs = ids
        .iter()
        .map(|id| Ok((*id, ov.apply(&identities::entry(id)?.default))))
        .collect::<Result<Vec<_>, Error>>()?;
    let results = identities::run_many(&jobs)
        .into_iter()
        .collect::<Result<Vec<CheckResult>, Error>>()?;
    let all_pass = results.iter().all(|r| r.pass);
    let out = match format {
        Format::Json => format!("{}\n", report_json(&results)),
        Format::Text => text_report(&results, timings, table),
    };
    if all_pass {
        Ok(out)
    } else {
        Err(Failure::Checks(out))
    }
}

fn text_report(results: &[CheckResult], timings: bool, table: bool) -> String {
    let mut s = String::new();
    let width = results.iter().map(|r| r.id.len()).max().unwrap_or(0);
    for r in results {
        let c = &r.config;
        let _ = write!(
            s,
            "{:<width$}  {}  n={} D={} w={}",
            r.id,
            if r.pass { "pass" } else { "FAIL" },
            c.n,
            c.degree,
            c.weight
        );
        if c.mutate {
            s.push_str(" mutated");
        }
        if timings {
            let _ = write!(s, "  {} ms", r.millis);
        }
        s.push('\n');
        if let Some(w) = &r.witness {
            let _ = writeln!(s, "    at {}, coefficient of {}:", w.at, w.monomial);
            let _ = writeln!(s, "      left  = {}", w.left);
            let _ = writeln!(s, "      right = {}", w.right);
        }
        if let Some(note) = r.note {
            let _ = writeln!(s, "    note: {note}");
        }
    }
    if table {
        let passed = results.iter().filter(|r| r.pass).count();
        let _ = writeln!(s, "{passed}/{} passed", results.len());
        if timings {
            let total: u128 = results.iter().map(|r| r.millis).sum();
            let _ = writeln!(s, "total {total} ms");
        }
    }
    s
}

fn listing() -> String {
    let mut s = String::new();
    let width = catalog().iter().map(|e| e.id.len()).max().unwrap_or(0);
    for e in catalog() {
        let d = &e.default;
        let _ = writeln!(
            s,
            "{:<width$}  n={} D={} w={}  [{}]  {}",
            e.id,
            d.n,
            d.degree,
            d.weight,
            e.params.join(","),
            e.title
        );
    }
    s
}
