//! Command-line front end. Parsing and `--help` come from one clap
//! definition; each command hands off to the owning module and renders the
//! result in the requested format.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::enumerate::{Budget, CountKind, CountQuery, EnumError, Engine, ResultCache, DEFAULT_STEP_BUDGET};
use crate::patterns::Pattern;
use crate::perm::{PermError, Permutation};
use crate::series::{gf_coeffs, Gf, SeriesError, DEFAULT_ORDER};
use crate::verify::{
    emit_table, periodicity_classes, run_conjecture_suite, run_theorem_suite, SuiteConfig, SuiteKind, SuiteReport,
    TableId,
};

/// Longest orbit printed in full by `orbit`.
const ORBIT_PRINT_MAX: u64 = 5040;

#[derive(Debug, Parser)]
#[command(name = "thetalab", version, about = "Pattern avoidance under the fundamental bijection theta")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "THETALAB_THREADS", default_value_t = 0)]
    pub threads: usize,

    /// Step budget above which a query is refused.
    #[arg(long, global = true, env = "THETALAB_BUDGET", default_value_t = DEFAULT_STEP_BUDGET)]
    pub budget: u64,

    /// Run queries over the budget, and the n = 13 census.
    #[arg(long, global = true)]
    pub force: bool,

    /// Result cache consulted and extended by `count`.
    #[arg(long, global = true, env = "THETALAB_CACHE", default_value = "thetalab_cache.csv")]
    pub cache: PathBuf,

    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    /// `n value` per line.
    Bfile,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply theta (or a power of it) to a permutation.
    Theta {
        perm: Permutation,
        /// Iterate k times; negative k applies the inverse.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
    },
    /// Standard cycle form of a permutation.
    Cycles { perm: Permutation },
    /// The theta-orbit of a permutation and its length.
    Orbit { perm: Permutation },
    /// Count permutations by brute force or pruned enumeration.
    Count(CountArgs),
    /// Coefficients of a generating function.
    Series {
        #[arg(long)]
        gf: Gf,
        /// Coefficients of x^0 through x^order.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Run the theorem suite, then the conjecture suite.
    Verify {
        #[command(flatten)]
        window: Window,
        #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
        suite: SuiteChoice,
        /// Exit 1 on conjecture failures as well.
        #[arg(long)]
        strict_conjectures: bool,
    },
    /// Run the conjecture suite only.
    Conjecture {
        #[command(flatten)]
        window: Window,
        #[arg(long)]
        strict_conjectures: bool,
    },
    /// Classes of k giving equal f_n^k for every n up to n-max.
    Periodicity {
        /// Restrict to avoiders of this pattern; omitted means all of S_n.
        #[arg(long)]
        sigma: Option<Pattern>,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 97)]
        k_max: u64,
    },
    /// Render a table from fresh counts.
    Table {
        #[arg(long)]
        id: TableId,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
}

#[derive(Debug, Args)]
pub struct Window {
    #[arg(long, default_value_t = 12)]
    pub n_max: usize,
    #[arg(long, default_value_t = 14)]
    pub k_max: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteChoice {
    All,
    Theorems,
    Conjectures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountCommand {
    /// t_n^k(sigma): pi, theta(pi), ..., theta^k(pi) all avoid sigma.
    T,
    /// f_n^k(sigma): sigma-avoiders fixed by theta^k.
    F,
    /// f_n^k over all of S_n.
    FAll,
    /// Irreducible permutations in T_n(321).
    A,
    /// Irreducible permutations in T_n(321) with pi_i = n.
    ANi,
    /// Cyclic permutations in T_n(sigma).
    CyclicT,
}

impl CountCommand {
    fn kind(self) -> CountKind {
        match self {
            CountCommand::T => CountKind::T,
            CountCommand::F => CountKind::F,
            CountCommand::FAll => CountKind::FAll,
            CountCommand::A => CountKind::AIrred,
            CountCommand::ANi => CountKind::ANi,
            CountCommand::CyclicT => CountKind::CyclicT,
        }
    }

    fn name(self) -> &'static str {
        match self {
            CountCommand::T => "t",
            CountCommand::F => "f",
            CountCommand::FAll => "f-all",
            CountCommand::A => "a",
            CountCommand::ANi => "a-ni",
            CountCommand::CyclicT => "cyclic-t",
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(value_enum)]
    pub what: CountCommand,
    #[arg(long)]
    pub sigma: Option<Pattern>,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// A single length.
    #[arg(long, conflicts_with = "n_max", required_unless_present = "n_max")]
    pub n: Option<usize>,
    /// Every length 1..=n-max.
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Position of n, for a-ni.
    #[arg(long)]
    pub i: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code: 0 success, 1 a theorem check failed, 2 usage or feasibility error.
pub fn parse_and_dispatch<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`parse_and_dispatch`] with explicit output streams.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: --threads: {e}");
            return 2;
        }
    };
    // Output is buffered so the work itself can run inside the pool.
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn engine(cli: &Cli) -> Engine {
    let mut engine = Engine::new(Budget {
        max_steps: cli.budget,
        force: cli.force,
    });
    engine.allow_large_census = cli.force;
    engine.parallel_census = rayon::current_num_threads() > 1;
    engine
}

fn reject_format(cli: &Cli, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&cli.format) {
        Ok(())
    } else {
        let name = cli.format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Err(usage(format!("--format {name} is not available for this command")))
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    use Format::*;
    match &cli.command {
        Command::Theta { perm, power } => {
            reject_format(cli, &[Text, Csv, Json])?;
            let image = perm.theta_power(*power);
            match cli.format {
                Json => writeln!(out, "{}", json!({ "input": perm.to_string(), "power": power, "output": image.to_string() }))?,
                Csv => write!(out, "input,power,output\n{perm},{power},{image}\n")?,
                _ => writeln!(out, "{image}")?,
            }
        }
        Command::Cycles { perm } => {
            reject_format(cli, &[Text, Json])?;
            let form = perm.standard_cycle_form();
            match cli.format {
                Json => writeln!(out, "{}", json!({ "input": perm.to_string(), "cycles": form.cycles(), "theta": form.flatten().to_string() }))?,
                _ => writeln!(out, "{form}")?,
            }
        }
        Command::Orbit { perm } => {
            reject_format(cli, &[Text, Csv, Json])?;
            let len = perm.orbit_length()?;
            let shown = len.min(ORBIT_PRINT_MAX);
            let mut orbit = Vec::with_capacity(shown as usize);
            let mut cur = perm.clone();
            for _ in 0..shown {
                orbit.push(cur.to_string());
                cur = cur.theta();
            }
            match cli.format {
                Json => writeln!(out, "{}", json!({ "input": perm.to_string(), "length": len, "orbit": orbit, "complete": shown == len }))?,
                Csv => {
                    writeln!(out, "step,perm")?;
                    for (j, p) in orbit.iter().enumerate() {
                        writeln!(out, "{j},{p}")?;
                    }
                }
                _ => {
                    writeln!(out, "orbit length {len}")?;
                    let tail = if shown < len { " → …" } else { "" };
                    writeln!(out, "{}{tail}", orbit.join(" → "))?;
                }
            }
        }
        Command::Count(args) => count(cli, args, out)?,
        Command::Series { gf, order } => {
            let coeffs = gf_coeffs(*gf, *order)?.to_integers()?;
            match cli.format {
                Json => {
                    let cs: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
                    writeln!(out, "{}", json!({ "gf": gf.name(), "order": order, "coefficients": cs }))?;
                }
                Csv => {
                    writeln!(out, "n,coefficient")?;
                    for (n, c) in coeffs.iter().enumerate() {
                        writeln!(out, "{n},{c}")?;
                    }
                }
                // b-files are 1-based; the constant term is left out.
                Bfile => {
                    for (n, c) in coeffs.iter().enumerate().skip(1) {
                        writeln!(out, "{n} {c}")?;
                    }
                }
                Text => writeln!(out, "{}", gf_coeffs(*gf, *order)?)?,
            }
        }
        Command::Verify { window, suite, strict_conjectures } => {
            reject_format(cli, &[Text, Csv, Json])?;
            let cfg = suite_config(window)?;
            let engine = engine(cli);
            let mut reports = Vec::new();
            if *suite != SuiteChoice::Conjectures {
                reports.push(run_theorem_suite(&engine, &cfg));
            }
            if *suite != SuiteChoice::Theorems {
                reports.push(run_conjecture_suite(&engine, &cfg));
            }
            render_suites(cli.format, &reports, out)?;
            return Ok(suite_exit(&reports, *strict_conjectures));
        }
        Command::Conjecture { window, strict_conjectures } => {
            reject_format(cli, &[Text, Csv, Json])?;
            let cfg = suite_config(window)?;
            let reports = [run_conjecture_suite(&engine(cli), &cfg)];
            render_suites(cli.format, &reports, out)?;
            return Ok(suite_exit(&reports, *strict_conjectures));
        }
        Command::Periodicity { sigma, n_max, k_max } => {
            reject_format(cli, &[Text, Csv, Json])?;
            if *k_max == 0 {
                return Err(usage("--k-max must be at least 1"));
            }
            let classes = periodicity_classes(&engine(cli), sigma.as_ref(), *n_max, *k_max)?;
            match cli.format {
                Json => writeln!(out, "{}", serde_json::to_string(&classes).expect("serializable"))?,
                Csv => {
                    writeln!(out, "k,class")?;
                    for k in 1..=*k_max {
                        let least = classes.class_of(k).and_then(|c| c.first()).copied().unwrap_or(k);
                        writeln!(out, "{k},{least}")?;
                    }
                }
                _ => write!(out, "{classes}")?,
            }
        }
        Command::Table { id, n_max } => {
            reject_format(cli, &[Text, Csv, Json])?;
            let table = emit_table(&engine(cli), *id, *n_max)?;
            match cli.format {
                Json => writeln!(out, "{}", table.to_json())?,
                Csv => write!(out, "{}", table.to_csv())?,
                _ => write!(out, "{table}")?,
            }
        }
    }
    Ok(0)
}

fn suite_config(window: &Window) -> Result<SuiteConfig, CliError> {
    if window.n_max < 4 {
        return Err(usage("--n-max must be at least 4"));
    }
    if window.k_max == 0 {
        return Err(usage("--k-max must be at least 1"));
    }
    Ok(SuiteConfig::new(window.n_max, window.k_max))
}

fn suite_exit(reports: &[SuiteReport], strict: bool) -> i32 {
    // Skipped checks are reported, not counted as failures.
    let failed = |kind| reports.iter().any(|r| r.suite == kind && r.failures().next().is_some());
    if failed(SuiteKind::Theorems) || (strict && failed(SuiteKind::Conjectures)) {
        1
    } else {
        0
    }
}

fn render_suites(format: Format, reports: &[SuiteReport], out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json if reports.len() == 1 => writeln!(out, "{}", reports[0].to_json()),
        Format::Json => {
            let all: Vec<_> = reports.iter().map(SuiteReport::to_json).collect();
            writeln!(out, "{}", serde_json::Value::Array(all))
        }
        Format::Csv => {
            for (j, r) in reports.iter().enumerate() {
                let csv = r.to_csv();
                // One header for the whole stream.
                let body = if j == 0 { &csv[..] } else { csv.split_once('\n').map_or("", |(_, b)| b) };
                write!(out, "{body}")?;
            }
            Ok(())
        }
        _ => {
            for r in reports {
                write!(out, "{r}")?;
            }
            Ok(())
        }
    }
}

fn count(cli: &Cli, args: &CountArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kind = args.what.kind();
    let name = args.what.name();
    match kind {
        CountKind::FAll if args.sigma.is_some() => return Err(usage(format!("--sigma is not accepted by count {name}"))),
        CountKind::T | CountKind::F | CountKind::CyclicT if args.sigma.is_none() => {
            return Err(usage(format!("--sigma is required for count {name}")))
        }
        CountKind::AIrred | CountKind::ANi if args.sigma.as_ref().is_some_and(|s| s.to_string() != "321") => {
            return Err(usage(format!("count {name} only concerns --sigma 321")))
        }
        _ => {}
    }
    if kind == CountKind::ANi && args.i.is_none() {
        return Err(usage("--i is required for count a-ni"));
    }
    if kind != CountKind::ANi && args.i.is_some() {
        return Err(usage(format!("--i is not accepted by count {name}")));
    }
    if args.k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    let ns: Vec<usize> = match (args.n, args.n_max) {
        (Some(0), _) => return Err(usage("--n must be at least 1")),
        (Some(n), _) => vec![n],
        (None, Some(m)) => (args.i.unwrap_or(1).max(1)..=m).collect(),
        (None, None) => return Err(usage("one of --n or --n-max is required")),
    };
    let single = args.n.is_some();
    if single && cli.format == Format::Bfile {
        return Err(usage("--format bfile needs --n-max"));
    }
    let engine = engine(cli);
    let mut cache = if cli.no_cache {
        None
    } else {
        Some(ResultCache::open(&cli.cache).map_err(|e| usage(format!("--cache: {e}")))?)
    };
    let mut values = Vec::with_capacity(ns.len());
    for &n in &ns {
        let query = CountQuery::new(kind, args.sigma.clone(), args.k, n, args.i);
        if let Err(EnumError::InvalidQuery(msg)) = query.validate() {
            return Err(usage(msg));
        }
        values.push((n, engine.evaluate(&query, cache.as_mut())?));
    }
    match cli.format {
        Format::Json => {
            let rows: Vec<_> = values.iter().map(|&(n, c)| json!({ "n": n, "count": c })).collect();
            let sigma = args.sigma.as_ref().map(ToString::to_string);
            writeln!(out, "{}", json!({ "kind": name, "sigma": sigma, "k": args.k, "i": args.i, "values": rows }))?;
        }
        Format::Csv => {
            writeln!(out, "n,count")?;
            for (n, c) in values {
                writeln!(out, "{n},{c}")?;
            }
        }
        Format::Bfile => {
            for (n, c) in values {
                writeln!(out, "{n} {c}")?;
            }
        }
        Format::Text if single => writeln!(out, "{}", values[0].1)?,
        Format::Text => {
            for (n, c) in values {
                writeln!(out, "{n} {c}")?;
            }
        }
    }
    Ok(())
}
