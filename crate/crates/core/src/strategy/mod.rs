//! Ann's constructive strategies, each certified by play against an
//! exhaustive adversary.
//!
//! Every strategy is deterministic and color-equivariant: its choices depend
//! on which vertices share a color, never on the color names. The adversary
//! in [`crate::game::play_match`] relies on this to merge positions that
//! differ only by renaming colors.

mod basic;
mod kc5;
mod kc6;
mod staged;
mod subgame;

use thiserror::Error;

use crate::game::{GameError, GameState};
use crate::graph::{Graph, Vertex};
use crate::structure::StructureError;

pub use basic::{
    strat_cycle_expansion, strat_degeneracy, strat_join, strat_scripted, strat_solver_backed, Sequence, SolverBacked,
};
pub use kc5::{ledger_cases, ledger_checks, strat_kc5, CounterLedger, Kc5Strategy};
pub use kc6::{strat_kc6, Kc6Strategy};
pub use staged::{
    strat_p5c4, strat_p6c5_class, strat_split_c5, strat_split_c5_plus_clique, strat_thm7, strat_union,
    strat_union_with, Staged,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("strategy does not apply: {0}")]
    NotApplicable(String),
    #[error("palette of {k} colors is below the required {bound}")]
    BoundViolated { k: usize, bound: usize },
    #[error("Ann cannot win with {k} colors")]
    NotWinnable { k: usize },
    #[error("structure violation during play: {0}")]
    StructureViolation(String),
    #[error("strategy has no vertex left to present")]
    Exhausted,
    #[error(transparent)]
    Game(#[from] GameError),
}

impl From<StructureError> for StrategyError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::StructureViolation(m) => StrategyError::StructureViolation(m),
            other => StrategyError::NotApplicable(other.to_string()),
        }
    }
}

/// Stateful vertex-selection policy for Ann.
pub trait Strategy {
    fn name(&self) -> &str;

    /// Next vertex to present; called with Ann to move and no blocked vertex.
    /// Ben's replies are visible through the evolving state.
    fn next_vertex(&mut self, state: &GameState) -> Result<Vertex, StrategyError>;

    fn clone_box(&self) -> Box<dyn Strategy>;

    /// Quantities logged for inspection (not asserted).
    fn log(&self) -> Vec<String> {
        Vec::new()
    }
}

impl Clone for Box<dyn Strategy> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

pub type StrategyResult = Result<Box<dyn Strategy>, StrategyError>;

/// Names accepted by [`make_strategy`].
pub const STRATEGY_NAMES: &[&str] = &[
    "auto",
    "degeneracy",
    "cycle",
    "kc5",
    "kc6",
    "union",
    "thm7",
    "split_c5",
    "split_c5_plus_clique",
    "p5c4",
    "p6c5",
    "join",
    "solver",
];

/// Builds a strategy by registry name.
pub fn make_strategy(name: &str, g: &Graph, k: usize) -> StrategyResult {
    match name {
        "auto" => strat_auto(g, k),
        "degeneracy" => strat_degeneracy(g, k),
        "cycle" => strat_cycle_expansion(g, k),
        "kc5" => strat_kc5(g, k),
        "kc6" => strat_kc6(g, k),
        "union" => strat_union(g, k),
        "thm7" => strat_thm7(g, k),
        "split_c5" => strat_split_c5(g, k),
        "split_c5_plus_clique" => strat_split_c5_plus_clique(g, k),
        "p5c4" => strat_p5c4(g, k),
        "p6c5" => strat_p6c5_class(g, k),
        "join" => strat_join(g, k),
        "solver" => strat_solver_backed(g, k),
        _ => Err(StrategyError::NotApplicable(format!("unknown strategy `{name}`"))),
    }
}

/// First constructive strategy that applies, falling back to the solver.
///
/// A class strategy that recognizes the graph but rejects `k` ends the
/// search with its bound error; the coloring-number bound is only a
/// sufficient condition, so that one falls through.
pub fn strat_auto(g: &Graph, k: usize) -> StrategyResult {
    type Ctor = fn(&Graph, usize) -> StrategyResult;
    let constructive: [(&str, Ctor); 9] = [
        ("cycle", strat_cycle_expansion),
        ("kc5", strat_kc5),
        ("kc6", strat_kc6),
        ("thm7", strat_thm7),
        ("split_c5", strat_split_c5),
        ("split_c5_plus_clique", strat_split_c5_plus_clique),
        ("p6c5", strat_p6c5_class),
        ("p5c4", strat_p5c4),
        ("degeneracy", strat_degeneracy),
    ];
    if g.components().len() > 1 {
        return strat_union(g, k);
    }
    for (name, make) in constructive {
        match make(g, k) {
            Ok(s) => return Ok(s),
            Err(StrategyError::NotApplicable(_)) => {}
            Err(StrategyError::BoundViolated { .. }) if name == "degeneracy" => {}
            Err(e) => return Err(e),
        }
    }
    strat_solver_backed(g, k)
}
