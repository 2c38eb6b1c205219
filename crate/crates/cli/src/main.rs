//! `wythoff`: tables, closed-form sets, theorem checks and conjecture
//! searches for Wythoff's game and its variants.
//!
//! Exit codes: 0 verified / consistent, 1 counterexample, 2 usage error.

mod play;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use wythoff_core::beatty::{pairs, verify_complementarity, MAX_INDEX};
use wythoff_core::formulas::formula_s1_wk_shift;
use wythoff_core::table_io::{to_csv, TableCache};
use wythoff_core::verify::{
    check_paper_values, closeness_check, coincidence_check, explore_conjecture, theorem_suite,
    verify_many, verify_theorem, DEFAULT_CONJECTURE_BOUND, DEFAULT_THEOREM_BOUND,
};
use wythoff_core::{
    g_set, options, ClosedForm, Conjecture, ConjectureId, Family, FormulaId, GSet, Position, Report,
    Ruleset, TableStore, Theorem, TheoremId,
};

#[derive(Parser, Debug)]
#[command(name = "wythoff", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print n, A_n, B_n for n = 0..=N.
    Beatty {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Also check that A and B partition [1, N].
        #[arg(long)]
        check: bool,
    },
    /// List the legal moves from one position.
    Moves {
        #[command(flatten)]
        ruleset: RulesetArgs,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compute a full Grundy table, or one of its g-sets with --g.
    Grundy {
        #[command(flatten)]
        ruleset: RulesetArgs,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        g: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Print a closed-form position set up to a bound.
    Pvs {
        /// p-wythoff, p-wk, p-wk-recursion, p-wkprime, s1-w1, s1-wk-shift,
        /// s1-wk-odd, p-wkl, p-tk or s1-tk.
        #[arg(long)]
        formula: FormulaId,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a theorem against the engine (or `--theorem all` for the sweep).
    Verify {
        /// thm2..thm9, cor1..cor3, or all.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        /// Use T_inf for thm8, thm9 and cor3.
        #[arg(long, conflicts_with = "k")]
        tinf: bool,
        #[arg(long, default_value_t = DEFAULT_THEOREM_BOUND)]
        n: u32,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Search one conjecture instance for a counterexample.
    Conjecture {
        /// c1, c2a, c2b or c3.
        #[arg(long)]
        id: ConjectureId,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        kprime: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_CONJECTURE_BOUND)]
        n: u32,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Compare the nim-value-1 positions of W_(k,l) and W_l.
    Closeness {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = DEFAULT_CONJECTURE_BOUND)]
        n: u32,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Recompute the published values of g(20,30).
    PaperValues,
    /// Play against the engine in the terminal.
    Play {
        #[command(flatten)]
        ruleset: RulesetArgs,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
}

#[derive(Args, Debug)]
struct RulesetArgs {
    /// wythoff, wk, wkprime, wkl, tk or tinf.
    #[arg(long)]
    family: Family,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
}

impl RulesetArgs {
    fn ruleset(&self) -> wythoff_core::Result<Ruleset> {
        Ruleset::from_parts(self.family, self.k, self.l)
    }
}

#[derive(Args, Debug)]
struct CacheArgs {
    /// Directory for cached tables; defaults to $WYTHOFF_CACHE_DIR.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl CacheArgs {
    fn store(&self) -> TableStore {
        match self.cache_dir.clone().map(TableCache::new).or_else(TableCache::from_env) {
            Some(cache) => TableStore::with_cache(cache),
            None => TableStore::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failure with an exit code; usage errors exit 2.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<wythoff_core::Error> for Failure {
    fn from(e: wythoff_core::Error) -> Self {
        Failure { code: 2, error: e.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 2, error }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 2, error: e.into() }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Beatty { n, format, check } => cmd_beatty(n, format, check),
        Command::Moves { ruleset, a, b, format } => cmd_moves(ruleset.ruleset()?, Position::new(a, b), format),
        Command::Grundy {
            ruleset,
            n,
            g,
            format,
            output,
            cache,
        } => cmd_grundy(ruleset.ruleset()?, n, g, format, output, &cache.store()),
        Command::Pvs {
            formula,
            k,
            l,
            n,
            format,
            output,
        } => cmd_pvs(formula, k, l, n, format, output),
        Command::Verify {
            theorem,
            k,
            l,
            tinf,
            n,
            cache,
        } => cmd_verify(&theorem, k, l, tinf, n, &cache.store()),
        Command::Conjecture {
            id,
            k,
            kprime,
            l,
            n,
            cache,
        } => cmd_conjecture(Conjecture::new(id, k, kprime, l)?, n, &cache.store()),
        Command::Closeness { k, l, n, cache } => cmd_closeness(k, l, n, &cache.store()),
        Command::PaperValues => cmd_paper_values(),
        Command::Play { ruleset, a, b } => {
            let rs = ruleset.ruleset()?;
            let stdin = io::stdin();
            play::run(rs, Position::new(a, b), stdin.lock(), io::stdout().lock())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn sink(output: Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match output {
        Some(path) => Box::new(BufWriter::new(
            File::create(&path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn exit_for(report: &Report) -> ExitCode {
    if report.is_success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_beatty(n: u64, format: Format, check: bool) -> CmdResult {
    if n > MAX_INDEX {
        return Err(wythoff_core::Error::IndexTooLarge { index: n, max: MAX_INDEX }.into());
    }
    let mut out = sink(None)?;
    let rows = pairs().take_while(|&(i, _, _)| i <= n);
    match format {
        Format::Csv => {
            writeln!(out, "n,a_n,b_n")?;
            for (i, a, b) in rows {
                writeln!(out, "{i},{a},{b}")?;
            }
        }
        Format::Json => {
            let rows: Vec<[u64; 3]> = rows.map(|(i, a, b)| [i, a, b]).collect();
            writeln!(out, "{}", serde_json::to_string(&rows).context("serializing")?)?;
        }
    }
    out.flush()?;
    if check && n >= 1 {
        let report = verify_complementarity(n)?;
        eprintln!("{}", report.to_json());
        return Ok(exit_for(&report));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_moves(rs: Ruleset, p: Position, format: Format) -> CmdResult {
    let mut out = sink(None)?;
    let opts = options(rs, p);
    match format {
        Format::Csv => {
            writeln!(out, "kind,s,a,b")?;
            for m in &opts {
                writeln!(out, "{},{},{},{}", m.kind.name(), m.amount, m.target.a(), m.target.b())?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = opts
                .iter()
                .map(|m| json!({"kind": m.kind.name(), "s": m.amount, "a": m.target.a(), "b": m.target.b()}))
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn write_set(set: &GSet, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "a,b")?;
            for p in set.positions() {
                writeln!(out, "{},{}", p.a(), p.b())?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string(set).map_err(io::Error::other)?)?,
    }
    Ok(())
}

fn cmd_grundy(
    rs: Ruleset,
    n: u32,
    g: Option<u32>,
    format: Format,
    output: Option<PathBuf>,
    store: &TableStore,
) -> CmdResult {
    let table = store.get(rs, n)?;
    let mut out = sink(output)?;
    match (g, format) {
        (Some(g), _) => write_set(&g_set(&table, g), format, &mut out)?,
        (None, Format::Csv) => out.write_all(to_csv(&table).as_bytes())?,
        (None, Format::Json) => {
            let rows: Vec<[u32; 3]> = table.iter().map(|(p, v)| [p.a(), p.b(), v]).collect();
            writeln!(out, "{}", serde_json::to_string(&rows).context("serializing")?)?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_pvs(
    id: FormulaId,
    k: Option<u32>,
    l: Option<u32>,
    n: u32,
    format: Format,
    output: Option<PathBuf>,
) -> CmdResult {
    let set = if id == FormulaId::S1WkShift {
        // Shift the engine's nim-value-1 set of W_k, giving the claimed one of W_(k+2).
        let k = k.ok_or_else(|| wythoff_core::Error::InvalidParams("s1-wk-shift requires k".into()))?;
        let base = match n.checked_sub(2) {
            Some(m) => g_set(&*TableStore::new().get(Ruleset::Wk { k }, m)?, 1),
            None => GSet::new(1, 0, wythoff_core::Source::Engine, []),
        };
        formula_s1_wk_shift(&base, n)
    } else {
        ClosedForm::new(id, k, l)?.enumerate(n)
    };
    let mut out = sink(output)?;
    write_set(&set, format, &mut out)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &Report) {
    println!("{}", report.to_json());
    if !report.is_success() && !report.soft && report.status != wythoff_core::Status::ConsistentUpToBound {
        eprintln!(
            "{}: counterexample to a proven statement; this indicates an implementation bug",
            report.subject
        );
    }
}

fn cmd_verify(theorem: &str, k: Option<u32>, l: Option<u32>, tinf: bool, n: u32, store: &TableStore) -> CmdResult {
    let theorems = if theorem.eq_ignore_ascii_case("all") {
        if k.is_some() || l.is_some() || tinf {
            return Err(wythoff_core::Error::InvalidParams("--theorem all takes no parameters".into()).into());
        }
        theorem_suite()
    } else {
        let id: TheoremId = theorem.parse()?;
        let ratio = matches!(id, TheoremId::Thm8 | TheoremId::Thm9 | TheoremId::Cor3);
        if ratio && k.is_none() && !tinf {
            return Err(wythoff_core::Error::InvalidParams(format!("{id} requires --k or --tinf")).into());
        }
        if tinf && !ratio {
            return Err(wythoff_core::Error::InvalidParams(format!("{id} does not take --tinf")).into());
        }
        vec![Theorem::new(id, k, l)?]
    };
    let reports = if theorems.len() == 1 {
        vec![verify_theorem(store, &theorems[0], n)?]
    } else {
        verify_many(store, &theorems, n).into_iter().collect::<Result<_, _>>()?
    };
    reports.iter().for_each(print_report);
    Ok(if reports.iter().all(Report::is_success) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_conjecture(conj: Conjecture, n: u32, store: &TableStore) -> CmdResult {
    let report = explore_conjecture(store, &conj, n)?;
    print_report(&report);
    Ok(exit_for(&report))
}

fn cmd_closeness(k: u32, l: u32, n: u32, store: &TableStore) -> CmdResult {
    let report = if l % 2 == 1 {
        closeness_check(store, k, l, n)?
    } else {
        coincidence_check(store, k, l, n)?
    };
    print_report(&report);
    Ok(exit_for(&report))
}

fn cmd_paper_values() -> CmdResult {
    let reports = check_paper_values(&TableStore::new())?;
    let values: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| serde_json::from_str(&r.to_json()).expect("report JSON round-trips"))
        .collect();
    println!("{}", serde_json::to_string_pretty(&values).context("serializing")?);
    for r in &reports {
        if !r.soft && !r.is_success() {
            eprintln!("{}: published value not reproduced; this indicates an implementation bug", r.subject);
        } else if r.soft && !r.is_success() {
            eprintln!("{}: published as an observation; mismatch does not indicate a bug", r.subject);
        }
    }
    let hard_ok = reports.iter().filter(|r| !r.soft).all(Report::is_success);
    Ok(if hard_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
