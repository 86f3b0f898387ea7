//! The indicated coloring game: positions, exact solving and match play.

mod exact;
mod play;
mod reference;
mod solver;
mod state;

use thiserror::Error;

use crate::graph::Vertex;

pub use exact::{alpha_exact, chi_exact, omega_exact, CHI_LIMIT, CLIQUE_LIMIT};
pub use play::{play_match, play_match_with, BenPolicy, MatchReport, Outcome, PlayError, DEFAULT_PLAY_BUDGET};
pub use reference::{reference_ann_wins, reference_table, REFERENCE_LIMIT};
pub use solver::{
    ann_wins, ann_wins_with, chi_i, chi_i_with, winnable_table, ChiIResult, SolveResult, SolveStats, Solver,
    SolverConfig,
};
pub use state::{Color, ColorSet, GameState, Move, Turn, MAX_COLORS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("palette size {0} is outside 1..={MAX_COLORS}")]
    BadPalette(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} is already colored")]
    AlreadyColored(Vertex),
    #[error("move made out of turn")]
    WrongTurn,
    #[error("color {color} is not legal for vertex {vertex}")]
    IllegalColor { vertex: Vertex, color: Color },
    #[error("vertex {0} has no legal color")]
    NoLegalColor(Vertex),
    #[error("bad coloring: {0}")]
    BadColoring(String),
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("solver exceeded its budget of {budget} positions")]
    ResourceBudgetExceeded { budget: u64 },
    #[error("Ann wins for no k up to {kmax}")]
    NotWinnableWithinKmax { kmax: usize },
}
