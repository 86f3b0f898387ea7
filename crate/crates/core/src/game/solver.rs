use std::cmp::Reverse;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{Color, GameError, GameState, Move, Turn, MAX_COLORS};
use crate::graph::{Graph, Vertex};

/// Limits and switches for the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub max_vertices: usize,
    /// Cap on expanded positions; exceeding it is an error, never a guess.
    pub node_budget: u64,
    /// Treat presenting either of two uncolored twins as the same move.
    pub twin_pruning: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_vertices: 14, node_budget: 50_000_000, twin_pruning: true }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub memo_hits: u64,
    pub memo_entries: u64,
}

/// Game value at the empty position plus a principal line: Ann takes the
/// least winning vertex, Ben the least color among his best replies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub k: usize,
    pub ann_wins: bool,
    pub principal_line: Vec<Move>,
    /// Blocked vertex closing the line when Ben wins.
    pub blocked: Option<Vertex>,
    pub stats: SolveStats,
}

/// Memoized minimax solver for one graph and palette size.
///
/// Positions are stored as the sorted list of color classes, so positions
/// differing only by a renaming of colors share an entry. Only positions
/// with Ann to move are stored; Ben's options at a presented vertex are the
/// classes it can join plus one fresh color (all unused colors are alike).
pub struct Solver {
    graph: Arc<Graph>,
    k: usize,
    adj: Vec<u64>,
    all: u64,
    memo: FxHashMap<Box<[u64]>, bool>,
    config: SolverConfig,
    stats: SolveStats,
}

impl Solver {
    pub fn new(graph: impl Into<Arc<Graph>>, k: usize, config: SolverConfig) -> Result<Self, GameError> {
        let graph = graph.into();
        if graph.n() > config.max_vertices {
            return Err(GameError::TooLarge { n: graph.n(), limit: config.max_vertices });
        }
        if k == 0 || k > MAX_COLORS {
            return Err(GameError::BadPalette(k));
        }
        let adj = graph.rows().iter().map(|r| r.bits()).collect();
        let all = graph.vertex_set().bits();
        Ok(Solver { graph, k, adj, all, memo: FxHashMap::default(), config, stats: SolveStats::default() })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats { memo_entries: self.memo.len() as u64, ..self.stats }
    }

    fn check_state(&self, s: &GameState) -> Result<(), GameError> {
        if s.k() != self.k || s.graph() != &*self.graph {
            return Err(GameError::BadColoring("position belongs to a different game".into()));
        }
        Ok(())
    }

    fn classes_of(s: &GameState) -> (Vec<u64>, u64) {
        (s.canonical_classes(), s.colored().bits())
    }

    /// Whether Ann wins from `s` with Ann to move (a pending vertex is ignored).
    pub fn ann_wins_from(&mut self, s: &GameState) -> Result<bool, GameError> {
        self.check_state(s)?;
        let (mut classes, colored) = Self::classes_of(s);
        self.ann_value(&mut classes, colored)
    }

    /// Whether presenting `v` in `s` wins for Ann against every reply.
    pub fn is_winning_move(&mut self, s: &GameState, v: Vertex) -> Result<bool, GameError> {
        self.check_state(s)?;
        s.legal_colors(v)?;
        if s.blocked_vertex().is_some() {
            return Ok(false);
        }
        let (mut classes, colored) = Self::classes_of(s);
        self.all_replies_win(&mut classes, colored, v)
    }

    /// Least-id vertex that wins for Ann, if any.
    pub fn ann_best_move(&mut self, s: &GameState) -> Result<Option<Vertex>, GameError> {
        for v in s.uncolored() {
            if self.is_winning_move(s, v)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    /// Least color that wins for Ben; if none does, least legal color.
    pub fn ben_best_reply(&mut self, s: &GameState) -> Result<Color, GameError> {
        self.check_state(s)?;
        let Turn::BenToColor(v) = s.turn() else {
            return Err(GameError::WrongTurn);
        };
        let legal = s.legal_colors(v)?;
        let least = legal.first().ok_or(GameError::NoLegalColor(v))?;
        for c in legal.iter() {
            let mut child = s.clone();
            child.color_pending(c)?;
            if !self.ann_wins_from(&child)? {
                return Ok(c);
            }
        }
        Ok(least)
    }

    /// Solves the empty position and extracts the principal line.
    pub fn solve(&mut self) -> Result<SolveResult, GameError> {
        let mut s = GameState::new(Arc::clone(&self.graph), self.k)?;
        let ann_wins = self.ann_wins_from(&s)?;
        let blocked = loop {
            if let Some(b) = s.blocked_vertex() {
                break Some(b);
            }
            if s.is_complete() {
                break None;
            }
            let v = match self.ann_best_move(&s)? {
                Some(v) => v,
                None => s.uncolored().first().expect("incomplete position"),
            };
            s.present(v)?;
            let c = self.ben_best_reply(&s)?;
            s.color_pending(c)?;
        };
        Ok(SolveResult { k: self.k, ann_wins, principal_line: s.moves().to_vec(), blocked, stats: self.stats() })
    }

    fn ann_value(&mut self, classes: &mut Vec<u64>, colored: u64) -> Result<bool, GameError> {
        let unc = self.all & !colored;
        if unc == 0 {
            return Ok(true);
        }
        let mut all_safe = true;
        let mut cands = Vec::with_capacity(unc.count_ones() as usize);
        for v in bits(unc) {
            let nv = self.adj[v];
            let legal = self.k - classes.iter().filter(|&&c| c & nv != 0).count();
            if legal == 0 {
                return Ok(false);
            }
            if legal <= (nv & unc).count_ones() as usize {
                all_safe = false;
            }
            cands.push((legal, Reverse((nv & colored).count_ones()), v));
        }
        // every vertex keeps a legal color however the rest is colored
        if all_safe {
            return Ok(true);
        }
        let mut key: Box<[u64]> = classes.as_slice().into();
        key.sort_unstable();
        if let Some(&v) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            return Ok(v);
        }
        self.stats.nodes += 1;
        if self.stats.nodes > self.config.node_budget {
            return Err(GameError::ResourceBudgetExceeded { budget: self.config.node_budget });
        }
        cands.sort_unstable();
        let mut tried = 0u64;
        let mut win = false;
        for &(_, _, u) in &cands {
            if self.config.twin_pruning && bits(tried).any(|w| self.twins(u, w)) {
                continue;
            }
            tried |= 1 << u;
            if self.all_replies_win(classes, colored, u)? {
                win = true;
                break;
            }
        }
        self.memo.insert(key, win);
        Ok(win)
    }

    fn all_replies_win(&mut self, classes: &mut Vec<u64>, colored: u64, u: Vertex) -> Result<bool, GameError> {
        let bit = 1u64 << u;
        let nu = self.adj[u];
        let colored = colored | bit;
        if classes.len() < self.k {
            classes.push(bit);
            let r = self.ann_value(classes, colored);
            classes.pop();
            if !r? {
                return Ok(false);
            }
        }
        for i in 0..classes.len() {
            if classes[i] & nu == 0 {
                classes[i] |= bit;
                let r = self.ann_value(classes, colored);
                classes[i] &= !bit;
                if !r? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn twins(&self, u: Vertex, w: Vertex) -> bool {
        self.adj[u] & !(1 << w) == self.adj[w] & !(1 << u)
    }
}

pub(crate) fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            i
        })
    })
}

/// Solves `(g, k)` with the default configuration.
pub fn ann_wins(g: &Graph, k: usize) -> Result<SolveResult, GameError> {
    ann_wins_with(g, k, SolverConfig::default())
}

pub fn ann_wins_with(g: &Graph, k: usize, config: SolverConfig) -> Result<SolveResult, GameError> {
    Solver::new(g.clone(), k, config)?.solve()
}

/// Winnability for every `k` in `1..=kmax`, each solved independently.
pub fn winnable_table(g: &Graph, kmax: usize, config: SolverConfig) -> Result<Vec<bool>, GameError> {
    let shared = Arc::new(g.clone());
    (1..=kmax)
        .map(|k| {
            let mut s = Solver::new(Arc::clone(&shared), k, config)?;
            let root = GameState::new(Arc::clone(&shared), k)?;
            s.ann_wins_from(&root)
        })
        .collect()
}

/// Indicated chromatic number with the full per-k table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiIResult {
    pub chi_i: usize,
    /// `winnable[k - 1]` for `k = 1..=kmax`.
    pub winnable: Vec<bool>,
}

impl ChiIResult {
    /// Some `k` is lost although a smaller one is won.
    pub fn is_monotone(&self) -> bool {
        self.winnable.windows(2).all(|w| !w[0] || w[1])
    }
}

pub fn chi_i(g: &Graph, kmax: usize) -> Result<ChiIResult, GameError> {
    chi_i_with(g, kmax, SolverConfig::default())
}

pub fn chi_i_with(g: &Graph, kmax: usize, config: SolverConfig) -> Result<ChiIResult, GameError> {
    if kmax == 0 {
        return Err(GameError::BadPalette(0));
    }
    let winnable = winnable_table(g, kmax, config)?;
    let chi_i = winnable.iter().position(|&w| w).ok_or(GameError::NotWinnableWithinKmax { kmax })? + 1;
    Ok(ChiIResult { chi_i, winnable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    fn g(expr: &str) -> Graph {
        parse_expr(expr).unwrap()
    }

    #[test]
    fn small_values() {
        assert!(ann_wins(&g("K4"), 4).unwrap().ann_wins);
        assert!(!ann_wins(&g("C5"), 2).unwrap().ann_wins);
        assert!(ann_wins(&g("C5"), 3).unwrap().ann_wins);
        assert!(ann_wins(&g("P4"), 2).unwrap().ann_wins);
    }

    #[test]
    fn principal_lines() {
        let r = ann_wins(&g("C5"), 3).unwrap();
        assert_eq!(r.principal_line.len(), 5);
        assert_eq!(r.blocked, None);
        let r = ann_wins(&g("C5"), 2).unwrap();
        assert!(r.blocked.is_some());
    }

    #[test]
    fn chi_i_tables() {
        let r = chi_i(&g("C5"), 5).unwrap();
        assert_eq!((r.chi_i, r.winnable.clone()), (3, vec![false, false, true, true, true]));
        assert!(r.is_monotone());
        assert_eq!(chi_i(&g("Petersen"), 4).unwrap().chi_i, 3);
        assert_eq!(chi_i(&g("C5"), 2), Err(GameError::NotWinnableWithinKmax { kmax: 2 }));
    }

    #[test]
    fn ben_replies() {
        // Ann has presented 0 then 2 in C4 (0-1-2-3-0); Ben splits them
        let mut s = GameState::from_coloring(g("C4"), 2, &[1, 0, 0, 0]).unwrap();
        s.present(2).unwrap();
        let mut solver = Solver::new(g("C4"), 2, SolverConfig::default()).unwrap();
        assert_eq!(solver.ben_best_reply(&s).unwrap(), 2);
        let mut s = GameState::from_coloring(g("K2"), 2, &[1, 0]).unwrap();
        s.present(1).unwrap();
        let mut solver = Solver::new(g("K2"), 2, SolverConfig::default()).unwrap();
        assert_eq!(solver.ben_best_reply(&s).unwrap(), 2);
    }

    #[test]
    fn limits() {
        assert!(matches!(ann_wins(&g("C15"), 3), Err(GameError::TooLarge { n: 15, limit: 14 })));
        let tiny = SolverConfig { node_budget: 1, ..SolverConfig::default() };
        assert!(matches!(ann_wins_with(&g("Petersen"), 3, tiny), Err(GameError::ResourceBudgetExceeded { .. })));
    }
}
