//! Batch verification: single-graph analysis, class strategy checks,
//! corpus invariants and random in-class instance generators.
//!
//! Reports are deterministic: records keep input order and carry no
//! timestamps.

mod analyze;
mod check;
pub mod generate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{GameError, Move, Outcome};
use crate::graph::{parse_expr, parse_graph6, Graph, Graph6Error, GraphError};

pub use analyze::{analyze, class_flags, decompose, Analysis, AnalyzeOptions, ClassFlag, DECOMPOSE_NAMES};
pub use check::{enumerate_check, verify_class, CheckConfig, Invariant, KBound, KRange, CLASS_NAMES};

/// Version of the report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),
    #[error("unknown decomposition `{0}`")]
    UnknownDecomposition(String),
    #[error("bad k range `{0}`")]
    BadRange(String),
}

/// Reads a graph from an expression (`K1+C5`) or a graph6 line; `force_g6`
/// skips the expression parser.
pub fn read_graph(input: &str, force_g6: bool) -> Result<Graph, VerifyError> {
    if force_g6 {
        return Ok(parse_graph6(input)?);
    }
    match parse_expr(input) {
        Ok(g) => Ok(g),
        Err(expr_err) => parse_graph6(input).map_err(|_| expr_err.into()),
    }
}

/// One strategy game within a record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyOutcome {
    pub strategy: String,
    pub k: usize,
    pub outcome: Option<Outcome>,
    pub error: Option<String>,
    /// Full transcript, kept only for losses.
    pub transcript: Option<Vec<Move>>,
    pub positions: u64,
}

/// Result of one corpus entry.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub chi: Option<usize>,
    pub omega: Option<usize>,
    pub col: Option<usize>,
    pub chi_i: Option<usize>,
    pub winnable: Option<Vec<bool>>,
    pub outcomes: Vec<StrategyOutcome>,
    pub violations: Vec<String>,
    pub error: Option<String>,
    /// Why the entry was not checked (outside the class, not chordal, ...).
    pub skipped: Option<String>,
}

impl Record {
    pub fn new(index: usize, g: &Graph) -> Self {
        let graph6 = if g.n() <= 62 { crate::graph::write_graph6(g) } else { String::new() };
        Record { index, graph6, n: g.n(), ..Record::default() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub checked: usize,
    pub skipped: usize,
    pub violations: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub command: String,
    /// Class or invariant name plus any range, as given.
    pub parameter: String,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(command: &str, parameter: &str, records: Vec<Record>) -> Self {
        let mut summary = Summary { records: records.len(), ..Summary::default() };
        for r in &records {
            if r.skipped.is_some() {
                summary.skipped += 1;
            } else if r.error.is_none() {
                summary.checked += 1;
            }
            summary.violations += r.violations.len();
            summary.errors += r.error.is_some() as usize;
        }
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameter: parameter.to_string(),
            records,
            summary,
        }
    }

    /// No violations and no errors.
    pub fn is_clean(&self) -> bool {
        self.summary.violations == 0 && self.summary.errors == 0
    }
}
