//! `braidaut`: word problems, combing and relation suites from the command
//! line.
//!
//! Exit codes: 0 pass (or equal), 1 fail (or not equal), 2 usage or input
//! error, 3 indeterminate (a budget ran out before a verdict).

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use braidaut::braid::{garside_nf, permutation_of, BraidWord, NfCache};
use braidaut::monomial::{mono_equal, MonoWord};
use braidaut::purebraid::{comb, simplify, PureWord};
use braidaut::report::{Budget, OutputFormat, RunConfig, SuiteParams, EXIT_FAIL, EXIT_PASS};
use braidaut::suites::run_suite;
use clap::{Parser, Subcommand};
use serde_json::json;

const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "braidaut", version, about = "Braid and monomial braid group calculus")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Wall-clock limit per case, in milliseconds.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_ms: Option<u64>,
    /// Longest intermediate word a case may build.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_len: Option<u64>,
    /// Longest window tried by the simplifier.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(2..))]
    window: Option<u64>,
    /// Normal-form cache file, loaded before and saved after the run.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Garside normal form of a braid word, e.g. `nf 3 "s1 s2^-1"`.
    Nf { n: usize, word: String },
    /// Decide equality of two braid words.
    Eq { n: usize, u: String, v: String },
    /// Underlying permutation of a braid word.
    Perm { n: usize, word: String },
    /// Artin combing of a pure braid word.
    Comb { n: usize, word: String },
    /// Shorten a word in `A<i>.<j>` and `Z` without changing its value.
    Simplify { n: usize, word: String },
    /// Decide equality of two monomial braid words in `C<j>`, `A<i>.<j>.<q>`.
    MonoEq { r: usize, n: usize, u: String, v: String },
    /// Run a verification suite.
    Verify {
        /// purebraid, center, prop31, thm32, autp3, prop43, thm45, prop46 or
        /// oracle-agreement.
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Use the extended budget profile for unset limits.
        #[arg(long)]
        extended: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn config(cli: &Cli, extended: bool) -> RunConfig {
    let base = if extended { Budget::extended() } else { Budget::default() };
    RunConfig {
        budget: Budget {
            case_ms: cli.budget_ms.unwrap_or(base.case_ms),
            max_len: cli.max_len.map_or(base.max_len, |v| v as usize),
            window: cli.window.map_or(base.window, |v| v as usize),
        },
        seed: cli.seed,
        format: if cli.json { OutputFormat::Json } else { OutputFormat::Text },
        cache_path: cli.cache.clone(),
        jobs: cli.jobs,
    }
}

fn verdict(equal: bool) -> u8 {
    (if equal { EXIT_PASS } else { EXIT_FAIL }) as u8
}

fn braid(n: usize, text: &str) -> Result<BraidWord> {
    BraidWord::parse(n, text).with_context(|| format!("braid word `{text}` in B_{n}"))
}

fn run(cli: Cli) -> Result<u8> {
    let cfg = config(&cli, matches!(cli.cmd, Cmd::Verify { extended: true, .. }));
    let out = |text: String, value: serde_json::Value| {
        if cli.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
    };
    if let (Some(path), false) = (&cfg.cache_path, matches!(cli.cmd, Cmd::Verify { .. })) {
        NfCache::global().load(path);
    }
    let code = match &cli.cmd {
        Cmd::Nf { n, word } => {
            let nf = garside_nf(&braid(*n, word)?);
            let w = nf.to_word();
            out(format!("{nf}\n{w}"), json!({ "inf": nf.inf(), "factors": nf.factors().len(), "word": w.to_string() }));
            EXIT_PASS as u8
        }
        Cmd::Eq { n, u, v } => {
            let eq = garside_nf(&braid(*n, u)?) == garside_nf(&braid(*n, v)?);
            out(if eq { "equal" } else { "not equal" }.into(), json!({ "equal": eq }));
            verdict(eq)
        }
        Cmd::Perm { n, word } => {
            let p = permutation_of(&braid(*n, word)?);
            let images: Vec<usize> = p.images().iter().map(|v| v + 1).collect();
            out(format!("{p}"), json!({ "images": images }));
            EXIT_PASS as u8
        }
        Cmd::Comb { n, word } => {
            let c = comb(&braid(*n, word)?, cfg.budget.max_len)?;
            let levels: Vec<_> = c.levels().map(|(k, w)| json!({ "level": k, "word": w.to_string() })).collect();
            out(format!("{c}"), json!({ "levels": levels, "central": c.central }));
            EXIT_PASS as u8
        }
        Cmd::Simplify { n, word } => {
            let w = PureWord::parse(*n, word).with_context(|| format!("pure word `{word}` in P_{n}"))?;
            let s = simplify(&w, &cfg.budget);
            out(s.to_string(), json!({ "word": s.to_string(), "len": s.len() }));
            EXIT_PASS as u8
        }
        Cmd::MonoEq { r, n, u, v } => {
            let parse = |t: &str| MonoWord::parse(*r, *n, t).with_context(|| format!("monomial word `{t}`"));
            let eq = mono_equal(&parse(u)?, &parse(v)?)?;
            out(if eq { "equal" } else { "not equal" }.into(), json!({ "equal": eq }));
            verdict(eq)
        }
        Cmd::Verify { suite, n, r, .. } => {
            let report = run_suite(suite, SuiteParams { n: *n, r: *r }, &cfg)?;
            print!("{}", report.emit(cfg.format));
            if cli.json {
                println!();
            }
            return Ok(report.exit_code() as u8);
        }
    };
    if let Some(path) = &cfg.cache_path {
        NfCache::global().save(path)?;
    }
    Ok(code)
}
