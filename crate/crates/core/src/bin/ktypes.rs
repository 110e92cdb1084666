use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use theta_ktypes::orth::branch_one_step;
use theta_ktypes::tensor::lr::{LoadOutcome, CACHE_ENV};
use theta_ktypes::tensor::{clear_all_caches, lr_cache, lr_coeff, stable_o_branch, stable_o_branch_ext};
use theta_ktypes::theta::{omega_ktypes, theta_one_ktypes, OmegaParams, ThetaParams};
use theta_ktypes::verify::{run_suite, write_records, ParamRange, RunConfig, Suite};
use theta_ktypes::{Error, KTypeSum, OLabel, Partition};

#[derive(Parser)]
#[command(name = "ktypes", version, about = "K-type combinatorics for theta lifts of orthogonal groups")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Restrict an O(n)-type to O(a)×O(b), or to O(n−1).
    Branch {
        /// Source group, e.g. O6.
        #[arg(long)]
        from: String,
        /// Target, e.g. O3xO3 or O5.
        #[arg(long)]
        to: String,
        /// Label such as "[2,1]" or "d*[1]".
        #[arg(long)]
        label: String,
        /// Use only the stable-range rule and fail outside it.
        #[arg(long)]
        strict: bool,
    },
    /// Littlewood–Richardson coefficient c^lam_{mu,nu}.
    Lr {
        #[arg(long)]
        lam: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// K-types of the lift of the trivial representation to O(n,m).
    Theta {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        cutoff: u32,
    },
    /// K-types of the lift to O(n,r) attached to an O(r')-type mu.
    Omega {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        rprime: usize,
        #[arg(long, default_value = "[]")]
        mu: String,
        #[arg(long, default_value_t = 3)]
        cutoff: u32,
    },
    /// Run a verification suite over a parameter grid.
    Verify(VerifyArgs),
    /// Inspect or clear the persistent coefficient cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        #[arg(long, global = true)]
        path: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Stats,
    Clear,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of prop32, thm11, thm12, thm14, lemma31, lemma41, infchar_corr,
    /// numerology, oracles.
    suite: Suite,
    /// JSON file with the same fields; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    p: Option<ParamRange>,
    #[arg(long)]
    n: Option<ParamRange>,
    #[arg(long)]
    m: Option<ParamRange>,
    #[arg(long)]
    r: Option<ParamRange>,
    #[arg(long)]
    rprime: Option<ParamRange>,
    #[arg(long)]
    t: Option<ParamRange>,
    #[arg(long)]
    mu_depth: Option<usize>,
    #[arg(long)]
    mu_size: Option<u32>,
    #[arg(long)]
    cutoff: Option<u32>,
    #[arg(long)]
    max_rank: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Obtain Γ-images by Hom dimensions instead of the closed formula.
    #[arg(long)]
    brute_force: bool,
}

impl VerifyArgs {
    fn flags(&self) -> RunConfig {
        RunConfig {
            p: self.p.clone(),
            n: self.n.clone(),
            m: self.m.clone(),
            r: self.r.clone(),
            rprime: self.rprime.clone(),
            t: self.t.clone(),
            mu_depth: self.mu_depth,
            mu_size: self.mu_size,
            cutoff: self.cutoff,
            max_rank: self.max_rank,
            jobs: self.jobs,
            cache: self.cache.clone(),
            output: self.output.clone(),
            brute_force: self.brute_force.then_some(true),
        }
    }
}

/// Failure kinds mapped to exit codes.
enum Fail {
    Usage(String),
    Mismatch,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

fn parse_group(s: &str) -> Result<Vec<usize>, Fail> {
    s.split(['x', 'X', '×'])
        .map(|g| {
            g.trim()
                .trim_start_matches(['O', 'o'])
                .parse::<usize>()
                .map_err(|_| Fail::Usage(format!("bad group {s:?}; expected e.g. O6 or O3xO3")))
        })
        .collect()
}

fn sum_json(s: &KTypeSum) -> serde_json::Value {
    let terms: Vec<_> = s
        .iter()
        .map(|(k, m)| json!({"ktype": k.iter().map(OLabel::syntax).collect::<Vec<_>>(), "mult": m}))
        .collect();
    json!({"terms": terms, "cutoff": s.truncation().map(|t| t.cutoff)})
}

fn print_sum(s: &KTypeSum, as_json: bool) {
    if as_json {
        println!("{}", sum_json(s));
    } else {
        println!("{}", s.pretty());
    }
}

fn cache_path(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

fn load_cache(path: &Option<PathBuf>) {
    if let Some(p) = path {
        if let LoadOutcome::Discarded(why) = lr_cache().load(p) {
            eprintln!("ignoring cache {}: {why}", p.display());
        }
    }
}

fn run(cli: Cli) -> Result<(), Fail> {
    let as_json = cli.json;
    match cli.cmd {
        Cmd::Branch {
            from,
            to,
            label,
            strict,
        } => {
            let src = parse_group(&from)?;
            let dst = parse_group(&to)?;
            let [n] = src[..] else {
                return Err(Fail::Usage("--from must be a single group".into()));
            };
            let x = OLabel::parse(&label, n)?;
            let out = match dst[..] {
                [k] if k + 1 == n => {
                    let mut s = KTypeSum::new();
                    for y in branch_one_step(&x) {
                        s.add(vec![y], 1);
                    }
                    s
                }
                [a, b] if a + b == n => {
                    if strict {
                        stable_o_branch(&x, a, b)?
                    } else {
                        stable_o_branch_ext(&x, a, b)?
                    }
                }
                _ => return Err(Fail::Usage(format!("cannot restrict O({n}) to {to}"))),
            };
            print_sum(&out, as_json);
        }
        Cmd::Lr { lam, mu, nu } => {
            let c = lr_coeff(&lam, &mu, &nu);
            if as_json {
                println!("{}", json!({"lam": lam.to_string(), "mu": mu.to_string(), "nu": nu.to_string(), "coeff": c}));
            } else {
                println!("{c}");
            }
        }
        Cmd::Theta { p, n, m, cutoff } => {
            print_sum(&theta_one_ktypes(ThetaParams::new(p, n, m), cutoff)?, as_json);
        }
        Cmd::Omega {
            p,
            n,
            r,
            rprime,
            mu,
            cutoff,
        } => {
            let mu = OLabel::parse(&mu, rprime)?;
            print_sum(&omega_ktypes(OmegaParams::new(p, n, r, rprime), &mu, cutoff)?, as_json);
        }
        Cmd::Verify(args) => {
            let file = match &args.config {
                Some(p) => RunConfig::from_file(p)?,
                None => RunConfig::default(),
            };
            let mut cfg = file.merged(args.flags());
            cfg.cache = cache_path(cfg.cache.take());
            load_cache(&cfg.cache);
            let records = run_suite(args.suite, &cfg)?;
            let summary = match &cfg.output {
                Some(p) => write_records(&records, &mut io::BufWriter::new(std::fs::File::create(p)?))?,
                None => write_records(&records, &mut io::stdout().lock())?,
            };
            if let Some(p) = &cfg.cache {
                lr_cache().save(p)?;
            }
            eprintln!("{}: {summary}", args.suite);
            if summary.mismatched > 0 {
                return Err(Fail::Mismatch);
            }
        }
        Cmd::Cache { action, path } => {
            let path = cache_path(path)
                .ok_or_else(|| Fail::Usage(format!("no cache path; pass --path or set {CACHE_ENV}")))?;
            match action {
                CacheAction::Stats => {
                    let outcome = lr_cache().load(&path);
                    let stats = lr_cache().stats();
                    let status = match &outcome {
                        LoadOutcome::Loaded(_) => "ok".to_string(),
                        LoadOutcome::Missing => "missing".to_string(),
                        LoadOutcome::Discarded(why) => format!("discarded: {why}"),
                    };
                    if as_json {
                        println!("{}", json!({"path": path, "status": status, "entries": stats.entries}));
                    } else {
                        println!("{}: {} entries ({status})", path.display(), stats.entries);
                    }
                }
                CacheAction::Clear => {
                    clear_all_caches();
                    match std::fs::remove_file(&path) {
                        Ok(()) => println!("removed {}", path.display()),
                        Err(e) if e.kind() == io::ErrorKind::NotFound => {
                            println!("{} does not exist", path.display())
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            }
        }
    }
    io::stdout().flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Mismatch) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
