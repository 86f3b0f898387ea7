mod args;
mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use indicol_core::game::{play_match_with, BenPolicy, PlayError, DEFAULT_PLAY_BUDGET};
use indicol_core::graph::{parse_graph6, Graph};
use indicol_core::strategy::{make_strategy, strat_scripted, StrategyError, STRATEGY_NAMES};
use indicol_core::verify::{
    analyze, enumerate_check, read_graph, verify_class, AnalyzeOptions, CheckConfig, Invariant, Record,
    VerificationReport, VerifyError, CLASS_NAMES, DECOMPOSE_NAMES,
};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use args::{BenKind, Cli, Command, Format, Global};

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Play(#[from] PlayError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Verify(_) => "input",
            CliError::Play(_) => "play",
            CliError::Usage(_) => "usage",
        }
    }

    /// Strategy misbehavior during play is a finding; everything else is a
    /// usage or I/O problem.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Play(PlayError::StrategyIllegalMove(_))
            | CliError::Play(PlayError::Strategy(StrategyError::StructureViolation(_))) => 1,
            _ => 2,
        }
    }
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let message = e.to_string();
            if cli.global.format == Format::Json {
                let rec = ErrorRecord { error: ErrorBody { kind: e.kind(), message } };
                println!("{}", serde_json::to_string_pretty(&rec).expect("serializable"));
            } else {
                eprintln!("indicol: {message}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    let (body, code) = match &cli.command {
        Command::Analyze { input, exact, kmax, decompose, g6 } => {
            let graph = read_graph(input, *g6)?;
            let mut opts = AnalyzeOptions { exact: *exact, kmax: *kmax, ..AnalyzeOptions::default() };
            if let Some(b) = g.budget {
                opts.budget = b;
            }
            let a = analyze(&graph, decompose.as_deref(), &opts)?;
            let body = match g.format {
                Format::Json => json(&a),
                Format::Text => render::analysis(&a),
                Format::Dot => indicol_core::graph::to_dot(&graph, None),
            };
            (body, 0)
        }
        Command::VerifyClass { corpus, class, k } => {
            let class = if class == "bipartite-solver" { "bipartite" } else { class.as_str() };
            if !CLASS_NAMES.contains(&class) {
                return Err(VerifyError::UnknownClass(class.to_string()).into());
            }
            let config = check_config(g, None);
            let graphs = read_corpus(corpus.as_deref())?;
            let records = par_records(g.jobs, &graphs, |i, graph| {
                verify_class(graph, i, class, *k, &config).unwrap_or_else(|e| errored(i, graph, e))
            })?;
            report(g, VerificationReport::new("verify-class", &format!("{class} k={k}"), records))
        }
        Command::EnumerateCheck { corpus, invariant, kmax } => {
            let inv: Invariant = invariant.parse()?;
            let config = check_config(g, *kmax);
            let graphs = read_corpus(corpus.as_deref())?;
            let records = par_records(g.jobs, &graphs, |i, graph| enumerate_check(graph, i, inv, &config))?;
            report(g, VerificationReport::new("enumerate-check", &inv.to_string(), records))
        }
        Command::Play { input, k, strategy, order, ben, script, g6 } => {
            let graph = read_graph(input, *g6)?;
            let policy = match ben {
                BenKind::Optimal if !script.is_empty() => {
                    return Err(CliError::Usage("--script requires --ben script".into()));
                }
                BenKind::Optimal => BenPolicy::Optimal,
                BenKind::Script => BenPolicy::Scripted(script.clone()),
            };
            let s = match strategy.as_str() {
                "scripted" => strat_scripted(order.clone()),
                _ if !order.is_empty() => {
                    return Err(CliError::Usage("--order requires --strategy scripted".into()));
                }
                name => make_strategy(name, &graph, *k).map_err(PlayError::from)?,
            };
            let r = play_match_with(&graph, *k, s, &policy, g.play_budget.unwrap_or(DEFAULT_PLAY_BUDGET))?;
            let body = match g.format {
                Format::Json => json(&r),
                Format::Text => render::match_report(&r),
                Format::Dot => render::match_dot(&graph, &r),
            };
            (body, 0)
        }
        Command::List => {
            let lists = Lists {
                strategies: STRATEGY_NAMES,
                classes: CLASS_NAMES,
                invariants: Invariant::NAMES,
                decompositions: DECOMPOSE_NAMES,
            };
            let body = match g.format {
                Format::Json => json(&lists),
                _ => render::lists(&lists),
            };
            (body, 0)
        }
    };
    emit(g.output.as_deref(), &body)?;
    Ok(code)
}

#[derive(Serialize)]
struct Lists {
    strategies: &'static [&'static str],
    classes: &'static [&'static str],
    invariants: &'static [&'static str],
    decompositions: &'static [&'static str],
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn check_config(g: &Global, kmax: Option<usize>) -> CheckConfig {
    let mut c = CheckConfig { kmax, ..CheckConfig::default() };
    if let Some(b) = g.budget {
        c.solver_budget = b;
    }
    if let Some(b) = g.play_budget {
        c.play_budget = b;
    }
    c
}

fn report(g: &Global, r: VerificationReport) -> (String, u8) {
    let body = match g.format {
        Format::Json => json(&r),
        Format::Text => render::report(&r),
        Format::Dot => render::report_dot(&r),
    };
    (body, if r.is_clean() { 0 } else { 1 })
}

/// A corpus line that failed to parse becomes an error record.
type Entry = Result<Graph, (String, VerifyError)>;

fn read_corpus(path: Option<&Path>) -> Result<Vec<Entry>, CliError> {
    let text = match path {
        None => read_stdin()?,
        Some(p) if p.as_os_str() == "-" => read_stdin()?,
        Some(p) => fs::read_to_string(p).map_err(|source| CliError::Io { path: p.to_path_buf(), source })?,
    };
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_graph6(l).map_err(|e| (l.to_string(), e.into())))
        .collect())
}

fn read_stdin() -> Result<String, CliError> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
    Ok(s)
}

fn errored(index: usize, g: &Graph, e: VerifyError) -> Record {
    Record { error: Some(e.to_string()), ..Record::new(index, g) }
}

/// Runs `f` over the corpus on a pool of `jobs` workers, keeping input order.
fn par_records<F>(jobs: usize, entries: &[Entry], f: F) -> Result<Vec<Record>, CliError>
where
    F: Fn(usize, &Graph) -> Record + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(|| {
        entries
            .par_iter()
            .enumerate()
            .map(|(i, entry)| match entry {
                Ok(g) => f(i, g),
                Err((line, e)) => {
                    Record { index: i, graph6: line.clone(), error: Some(e.to_string()), ..Record::default() }
                }
            })
            .collect()
    }))
}

fn emit(path: Option<&Path>, body: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, body).map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}
