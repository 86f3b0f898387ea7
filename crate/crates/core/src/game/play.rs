use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Color, ColorSet, GameError, GameState, Move};
use crate::graph::{Graph, Vertex};
use crate::strategy::{Strategy, StrategyError};

/// Default cap on positions explored by the optimal Ben.
pub const DEFAULT_PLAY_BUDGET: u64 = 20_000_000;

/// How Ben answers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BenPolicy {
    /// Exhaustive adversary: wins whenever some line of replies beats the
    /// strategy.
    Optimal,
    /// Fixed colors, one per presented vertex.
    Scripted(Vec<Color>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    AnnWins,
    BenWins,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub k: usize,
    pub strategy: String,
    pub ben: String,
    pub outcome: Outcome,
    pub transcript: Vec<Move>,
    pub blocked: Option<Vertex>,
    /// Positions the adversary evaluated (0 for scripted Ben).
    pub positions: u64,
    pub log: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlayError {
    #[error("strategy selected vertex {0}, which is colored or absent")]
    StrategyIllegalMove(Vertex),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("Ben's script ran out of colors")]
    ScriptExhausted,
    #[error("scripted color {color} is not legal for vertex {vertex}")]
    IllegalScriptColor { vertex: Vertex, color: Color },
    #[error("adversary exceeded its budget of {budget} positions")]
    ResourceBudgetExceeded { budget: u64 },
}

/// Plays `strategy` against Ben on `g` with `k` colors.
///
/// Against [`BenPolicy::Optimal`] the outcome is the value of the strategy
/// itself: `AnnWins` iff it wins against every sequence of replies. The
/// transcript follows Ben's least winning reply when one exists, else his
/// least legal color.
pub fn play_match(g: &Graph, k: usize, strategy: Box<dyn Strategy>, ben: &BenPolicy) -> Result<MatchReport, PlayError> {
    play_match_with(g, k, strategy, ben, DEFAULT_PLAY_BUDGET)
}

pub fn play_match_with(
    g: &Graph,
    k: usize,
    mut strategy: Box<dyn Strategy>,
    ben: &BenPolicy,
    budget: u64,
) -> Result<MatchReport, PlayError> {
    let mut state = GameState::new(g.clone(), k)?;
    let mut adversary = Adversary { memo: FxHashMap::default(), positions: 0, budget };
    let mut script = match ben {
        BenPolicy::Optimal => None,
        BenPolicy::Scripted(colors) => Some(colors.iter().copied()),
    };
    while !state.is_complete() && state.blocked_vertex().is_none() {
        let v = select(&mut *strategy, &state)?;
        let legal = state.legal_colors(v)?;
        let c = match &mut script {
            Some(colors) => {
                let c = colors.next().ok_or(PlayError::ScriptExhausted)?;
                if !legal.contains(c) {
                    return Err(PlayError::IllegalScriptColor { vertex: v, color: c });
                }
                c
            }
            None => {
                let mut pick = None;
                for c in legal.iter() {
                    let child = after(&state, v, c)?;
                    if !adversary.ann_wins(&child, strategy.clone_box())? {
                        pick = Some(c);
                        break;
                    }
                }
                pick.unwrap_or_else(|| legal.first().expect("unblocked vertex has a color"))
            }
        };
        state.present(v)?;
        state.color_pending(c)?;
    }
    let blocked = state.blocked_vertex();
    Ok(MatchReport {
        k,
        strategy: strategy.name().to_string(),
        ben: if script.is_some() { "SCRIPTED" } else { "OPTIMAL" }.to_string(),
        outcome: if blocked.is_some() { Outcome::BenWins } else { Outcome::AnnWins },
        transcript: state.moves().to_vec(),
        blocked,
        positions: adversary.positions,
        log: strategy.log(),
    })
}

fn select(strategy: &mut dyn Strategy, s: &GameState) -> Result<Vertex, PlayError> {
    let v = strategy.next_vertex(s)?;
    if v >= s.graph().n() || s.colored().contains(v) {
        return Err(PlayError::StrategyIllegalMove(v));
    }
    Ok(v)
}

fn after(s: &GameState, v: Vertex, c: Color) -> Result<GameState, GameError> {
    let mut child = s.clone();
    child.present(v)?;
    child.color_pending(c)?;
    Ok(child)
}

/// Ben searching for a line that beats a fixed strategy.
///
/// Strategies are deterministic and color-equivariant, so the color
/// classes of a position determine the whole history and hence the
/// strategy's state; positions are memoized on the classes alone.
struct Adversary {
    memo: FxHashMap<Box<[u64]>, bool>,
    positions: u64,
    budget: u64,
}

impl Adversary {
    fn ann_wins(&mut self, s: &GameState, mut strategy: Box<dyn Strategy>) -> Result<bool, PlayError> {
        if s.is_complete() {
            return Ok(true);
        }
        if s.blocked_vertex().is_some() {
            return Ok(false);
        }
        let key: Box<[u64]> = s.canonical_classes().into();
        if let Some(&won) = self.memo.get(&key) {
            return Ok(won);
        }
        self.positions += 1;
        if self.positions > self.budget {
            return Err(PlayError::ResourceBudgetExceeded { budget: self.budget });
        }
        let v = select(&mut *strategy, s)?;
        let legal = s.legal_colors(v)?;
        // unused colors are interchangeable: one representative suffices
        let used = legal.0 & s.used_colors().0;
        let fresh = ColorSet(legal.0 & !used).first();
        let mut won = true;
        for c in ColorSet(used).iter().chain(fresh) {
            if !self.ann_wins(&after(s, v, c)?, strategy.clone_box())? {
                won = false;
                break;
            }
        }
        self.memo.insert(key, won);
        Ok(won)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;
    use crate::strategy::{strat_cycle_expansion, strat_degeneracy, strat_scripted};

    fn g(expr: &str) -> Graph {
        parse_expr(expr).unwrap()
    }

    #[test]
    fn cycle_strategy_wins_c5() {
        let c5 = g("C5");
        let r = play_match(&c5, 3, strat_cycle_expansion(&c5, 3).unwrap(), &BenPolicy::Optimal).unwrap();
        assert_eq!(r.outcome, Outcome::AnnWins);
        assert_eq!(r.transcript.len(), 5);
    }

    #[test]
    fn bad_ann_loses_c4() {
        let c4 = g("C4");
        let r = play_match(&c4, 2, strat_scripted(vec![0, 2]), &BenPolicy::Optimal).unwrap();
        assert_eq!(r.outcome, Outcome::BenWins);
        assert_eq!(r.transcript, vec![Move { vertex: 0, color: 1 }, Move { vertex: 2, color: 2 }]);
        assert_eq!(r.blocked, Some(1));
    }

    #[test]
    fn scripted_ben() {
        let c4 = g("C4");
        let r = play_match(&c4, 2, strat_scripted(vec![0, 2]), &BenPolicy::Scripted(vec![1, 1, 2, 2])).unwrap();
        assert_eq!(r.outcome, Outcome::AnnWins);
        let e = play_match(&c4, 2, strat_scripted(vec![0, 1]), &BenPolicy::Scripted(vec![1, 1])).unwrap_err();
        assert_eq!(e, PlayError::IllegalScriptColor { vertex: 1, color: 1 });
        let e = play_match(&c4, 2, strat_scripted(vec![0]), &BenPolicy::Scripted(vec![1])).unwrap_err();
        assert_eq!(e, PlayError::ScriptExhausted);
    }

    #[test]
    fn illegal_strategy_move() {
        let k3 = g("K3");
        let e = play_match(&k3, 3, strat_scripted(vec![0, 0]), &BenPolicy::Optimal).unwrap_err();
        assert_eq!(e, PlayError::StrategyIllegalMove(0));
        let r = play_match(&k3, 3, strat_degeneracy(&k3, 3).unwrap(), &BenPolicy::Optimal).unwrap();
        assert_eq!(r.outcome, Outcome::AnnWins);
    }

    #[test]
    fn report_serializes_outcome() {
        let k2 = g("K2");
        let r = play_match(&k2, 2, strat_degeneracy(&k2, 2).unwrap(), &BenPolicy::Optimal).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"outcome\":\"ANN_WINS\""));
    }
}
