//! Command-line front end. Results go to standard output (one JSON value
//! per line, or plain text), progress and diagnostics to standard error.
//!
//! Exit codes: 0 success, 1 a check failed or an input is not in the
//! requested span, 2 usage error, 3 internal invariant violation.

use std::ffi::OsString;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::MVPolynomial;
use crate::error::Error;
use crate::expand::{expand_in_keys, expand_in_lascoux, expand_in_schur, Expansion};
use crate::families::{stable_groth, FamilyCache};
use crate::kjdt::{left_key, SlideState};
use crate::symgroup::Permutation;
use crate::tableaux::{conjecture_tableaux, Composition, IncreasingTableau};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const DEFAULT_CEILING: usize = 7;

#[derive(Debug, Parser)]
#[command(name = "kgroth", version, about = "Grothendieck and Lascoux polynomials, left keys and exhaustive expansion checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads for exhaustive runs.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,

    /// Memo file (JSON lines). KGROTH_CACHE takes precedence.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Permit n above the default ceiling of 7.
    #[arg(long, global = true)]
    pub allow_large: bool,

    /// Progress messages on standard error.
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Conjecture,
    Fk,
    SchubKey,
    Bksty,
    Fg,
    Oracle,
    Warning,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Key,
    Lascoux,
    Schur,
}

#[derive(Debug, Args)]
pub struct PermArg {
    /// Permutation in one-line notation, e.g. 31524 or 3,1,5,2,4.
    #[arg(value_name = "W", required_unless_present = "w")]
    pub pos: Option<String>,
    #[arg(long, conflicts_with = "pos")]
    pub w: Option<String>,
}

#[derive(Debug, Args)]
pub struct CompArg {
    /// Weak composition, e.g. 1,0,2,1.
    #[arg(value_name = "ALPHA", required_unless_present = "alpha")]
    pub pos: Option<String>,
    #[arg(long, conflicts_with = "pos")]
    pub alpha: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grothendieck polynomial of a permutation.
    Groth(PermArg),
    /// Schubert polynomial of a permutation.
    Schubert(PermArg),
    /// Lascoux polynomial of a weak composition.
    Lascoux(CompArg),
    /// Key polynomial of a weak composition.
    Key(CompArg),
    /// Left key and its content for an increasing tableau, e.g. 1,2/2.
    LeftKey {
        tableau: String,
        /// Also print the reverse rectification trace of every column.
        #[arg(long)]
        trace: bool,
    },
    /// Increasing tableaux whose word is a Hecke word for w, with left keys.
    Tableaux(PermArg),
    /// Expand a polynomial in the key, Lascoux or Schur basis.
    Expand {
        #[arg(long, group = "source")]
        groth: Option<String>,
        #[arg(long, group = "source")]
        schubert: Option<String>,
        #[arg(long, group = "source")]
        lascoux: Option<String>,
        #[arg(long, group = "source")]
        key: Option<String>,
        /// Stable Grothendieck polynomial in --vars variables.
        #[arg(long, group = "source")]
        stable: Option<String>,
        /// Polynomial text, e.g. "x1 + x2 + b*x1*x2".
        #[arg(long, group = "source")]
        poly: Option<String>,
        #[arg(long, value_enum)]
        basis: BasisArg,
        /// Number of variables (basis indices have at most this many parts).
        #[arg(long)]
        vars: Option<usize>,
        /// Largest x-degree for Schur expansions.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Check the conjecture or one of the theorem suites.
    Verify {
        #[arg(long, conflicts_with = "w")]
        n: Option<usize>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long, value_enum, default_value_t = Suite::Conjecture)]
        suite: Suite,
        /// Variable count for the bksty and fg suites.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Describe the memo file.
    CacheInfo,
}

enum Failure {
    Usage(String),
    Fail(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInSpan { .. } => Failure::Fail(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Ctx {
    format: Format,
    jobs: usize,
    ceiling: usize,
    verbose: bool,
    cache: FamilyCache,
    cache_path: Option<PathBuf>,
    out: std::io::Stdout,
}

impl Ctx {
    fn emit_json(&mut self, v: &Value) {
        let _ = writeln!(self.out, "{v}");
    }

    fn emit_text(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }

    fn emit(&mut self, v: &Value, s: &str) {
        match self.format {
            Format::Json => self.emit_json(v),
            Format::Text => self.emit_text(s),
        }
    }

    fn progress(&self, msg: &str) {
        if self.verbose {
            eprintln!("{msg}");
        }
    }

    fn check_n(&self, n: usize) -> std::result::Result<(), Failure> {
        if n > self.ceiling {
            return Err(Failure::Usage(format!(
                "n = {n} is above the ceiling {}; pass --allow-large to run it",
                self.ceiling
            )));
        }
        Ok(())
    }

    fn perm(&self, s: &str) -> std::result::Result<Permutation, Failure> {
        let w: Permutation = s.parse()?;
        self.check_n(w.n())?;
        Ok(w)
    }

    fn poly(&mut self, p: &MVPolynomial) {
        let v = serde_json::to_value(p.to_json()).expect("polynomial JSON");
        self.emit(&v, &p.to_string());
    }

    fn expansion(&mut self, e: &Expansion) {
        self.emit(&e.to_json(), &e.to_string());
    }
}

fn perm_text(a: &PermArg) -> &str {
    a.pos.as_deref().or(a.w.as_deref()).unwrap_or_default()
}

fn comp_text(a: &CompArg) -> &str {
    a.pos.as_deref().or(a.alpha.as_deref()).unwrap_or_default()
}

/// Parse arguments, run, and return the exit code. Panics inside the run
/// are reported and mapped to exit code 3.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Ok(Err(Failure::Fail(msg))) => {
            eprintln!("error: {msg}");
            EXIT_FAIL
        }
        Err(_) => {
            eprintln!("error: internal invariant violation");
            EXIT_INTERNAL
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let cache_path = std::env::var_os("KGROTH_CACHE")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or(cli.cache);
    let mut ctx = Ctx {
        format: cli.format,
        jobs: cli.jobs.max(1),
        ceiling: if cli.allow_large { usize::MAX } else { DEFAULT_CEILING },
        verbose: cli.verbose,
        cache: FamilyCache::new(),
        cache_path,
        out: std::io::stdout(),
    };
    if let Some(path) = &ctx.cache_path {
        if path.exists() {
            let loaded = ctx.cache.load_jsonl(path)?;
            ctx.progress(&format!("loaded {loaded} memo entries from {}", path.display()));
        }
    }
    let code = dispatch(&mut ctx, cli.command)?;
    if let Some(path) = &ctx.cache_path {
        ctx.cache.save_jsonl(path)?;
    }
    Ok(code)
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Outcome {
    match command {
        Command::Groth(a) => {
            let w = ctx.perm(perm_text(&a))?;
            let p = ctx.cache.grothendieck(&w);
            ctx.poly(&p);
        }
        Command::Schubert(a) => {
            let w = ctx.perm(perm_text(&a))?;
            let p = ctx.cache.schubert(&w);
            ctx.poly(&p);
        }
        Command::Lascoux(a) => {
            let alpha: Composition = comp_text(&a).parse()?;
            let p = ctx.cache.lascoux(&alpha);
            ctx.poly(&p);
        }
        Command::Key(a) => {
            let alpha: Composition = comp_text(&a).parse()?;
            let p = ctx.cache.key(&alpha);
            ctx.poly(&p);
        }
        Command::LeftKey { tableau, trace } => cmd_left_key(ctx, &tableau, trace)?,
        Command::Tableaux(a) => {
            let w = ctx.perm(perm_text(&a))?;
            let ell = w.length();
            for p in conjecture_tableaux(&w) {
                let k = left_key(&p);
                let v = json!({
                    "tableau": p.to_string(),
                    "shape": p.shape().parts(),
                    "key": k.to_string(),
                    "content": k.content().entries(),
                    "beta_power": p.num_boxes() - ell,
                });
                let text = format!(
                    "{p}  key {k}  content {}  b^{}",
                    k.content(),
                    p.num_boxes() - ell
                );
                ctx.emit(&v, &text);
            }
        }
        Command::Expand {
            groth,
            schubert,
            lascoux,
            key,
            stable,
            poly,
            basis,
            vars,
            max_degree,
        } => {
            let (f, default_vars) = if let Some(s) = groth {
                let w = ctx.perm(&s)?;
                ((*ctx.cache.grothendieck(&w)).clone(), w.n().saturating_sub(1))
            } else if let Some(s) = schubert {
                let w = ctx.perm(&s)?;
                (ctx.cache.schubert(&w), w.n().saturating_sub(1))
            } else if let Some(s) = lascoux {
                let a: Composition = s.parse()?;
                ((*ctx.cache.lascoux(&a)).clone(), a.len())
            } else if let Some(s) = key {
                let a: Composition = s.parse()?;
                ((*ctx.cache.key(&a)).clone(), a.len())
            } else if let Some(s) = stable {
                let w = ctx.perm(&s)?;
                let m = vars.ok_or_else(|| Failure::Usage("--stable needs --vars".into()))?;
                (stable_groth(&w, m), m)
            } else if let Some(s) = poly {
                let p: MVPolynomial = s.parse()?;
                let m = p.used_vars();
                (p, m)
            } else {
                return Err(Failure::Usage(
                    "expand needs one of --groth, --schubert, --lascoux, --key, --stable, --poly".into(),
                ));
            };
            let m = vars.unwrap_or(default_vars).max(1);
            let e = match basis {
                BasisArg::Key => expand_in_keys(&ctx.cache, &f, m)?,
                BasisArg::Lascoux => expand_in_lascoux(&ctx.cache, &f, m)?,
                BasisArg::Schur => expand_in_schur(&f, m, max_degree)?,
            };
            ctx.expansion(&e);
        }
        Command::Verify { n, w, suite, vars } => return cmd_verify(ctx, n, w, suite, vars),
        Command::CacheInfo => {
            let path = ctx.cache_path.as_ref().map(|p| p.display().to_string());
            let v = json!({
                "format": "kgroth-cache",
                "version": 1,
                "path": path,
                "groth": ctx.cache.len_groth(),
                "lascoux": ctx.cache.len_lascoux(),
            });
            let text = format!(
                "cache {} : {} grothendieck, {} lascoux entries",
                path.as_deref().unwrap_or("(none)"),
                ctx.cache.len_groth(),
                ctx.cache.len_lascoux()
            );
            ctx.emit(&v, &text);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_left_key(ctx: &mut Ctx, text: &str, trace: bool) -> std::result::Result<(), Failure> {
    let p: IncreasingTableau = text.parse()?;
    let k = left_key(&p);
    let mut v = json!({
        "tableau": p.to_string(),
        "key": k.to_string(),
        "content": k.content().entries(),
    });
    let mut lines = vec![format!("key {k}"), format!("content {}", k.content())];
    if trace {
        let height = p.column(0).len();
        let mut traces = Vec::new();
        for c in 1..p.num_cols() {
            let s = SlideState::from_tableau(&p.leading_columns(c + 1), height, c + 1)?;
            let states = s.rev_krect_leftmost_trace();
            lines.push(format!(
                "column {}: {}",
                c + 1,
                states.iter().map(ToString::to_string).collect::<Vec<_>>().join(" -> ")
            ));
            traces.push(Value::Array(states.iter().map(SlideState::to_json).collect()));
        }
        v["traces"] = Value::Array(traces);
    }
    ctx.emit(&v, &lines.join("\n"));
    Ok(())
}

fn suite_line(ctx: &mut Ctx, report: &verify::SuiteReport) -> bool {
    ctx.emit(&report.to_json(), &report.to_text());
    report.passed
}

fn cmd_verify(
    ctx: &mut Ctx,
    n: Option<usize>,
    w: Option<String>,
    suite: Suite,
    vars: Option<usize>,
) -> Outcome {
    if let Some(n) = n {
        ctx.check_n(n)?;
        if n < 2 {
            return Err(Failure::Usage("--n must be at least 2".into()));
        }
    }
    let w = w.map(|s| ctx.perm(&s)).transpose()?;
    let start = Instant::now();
    let mut ok = true;
    let runs = |s: Suite| suite == s || suite == Suite::All;

    if runs(Suite::Conjecture) {
        let (reports, population) = match (&w, n) {
            (Some(w), _) => (vec![verify::check_conjecture(&ctx.cache, w)], format!("w = {w}")),
            (None, Some(n)) => (
                verify::check_all_reports(&ctx.cache, n, ctx.jobs),
                format!("S_{n} ({} permutations)", (1..=n).product::<usize>()),
            ),
            (None, None) if suite == Suite::All => {
                (verify::check_all_reports(&ctx.cache, 4, ctx.jobs), "S_4 (24 permutations)".into())
            }
            (None, None) => return Err(Failure::Usage("verify needs --n or --w".into())),
        };
        for r in &reports {
            ctx.emit(&r.to_json(), &r.to_text());
        }
        ok &= suite_line(ctx, &verify::summarize(population, &reports));
        ctx.progress(&format!("conjecture: {} reports in {:?}", reports.len(), start.elapsed()));
    }
    let n_or = |d: usize| n.unwrap_or(d);
    if runs(Suite::Fk) {
        let r = verify::suite_fk(&ctx.cache, n_or(4));
        ok &= suite_line(ctx, &r);
    }
    if runs(Suite::SchubKey) {
        let r = verify::suite_schub_to_key(&ctx.cache, n_or(4));
        ok &= suite_line(ctx, &r);
    }
    if runs(Suite::Bksty) {
        let r = verify::suite_bksty(n_or(4), vars.unwrap_or(3));
        ok &= suite_line(ctx, &r);
    }
    if runs(Suite::Fg) {
        let w = w.clone().unwrap_or_else(|| "23514".parse().unwrap());
        let m = vars.unwrap_or(w.n());
        let r = verify::suite_fg(&w, m);
        ok &= suite_line(ctx, &r);
    }
    if runs(Suite::Oracle) {
        let r = verify::suite_oracle(&ctx.cache, n_or(4));
        ok &= suite_line(ctx, &r);
    }
    if runs(Suite::Warning) {
        let (e, r) = verify::suite_warning(&ctx.cache);
        for (a, k, c) in e.flat_terms() {
            let v = json!({ "kind": "term", "basis": "key", "index": a.entries(), "beta": k, "c": c.to_string() });
            let beta = match k {
                0 => String::new(),
                1 => "·b".into(),
                _ => format!("·b^{k}"),
            };
            ctx.emit(&v, &format!("{c}·k[{a}]{beta}"));
        }
        ok &= suite_line(ctx, &r);
    }
    ctx.progress(&format!("verify finished in {:?}", start.elapsed()));
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}
