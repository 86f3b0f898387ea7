use std::cell::RefCell;
use std::rc::Rc;

use super::{Strategy, StrategyError, StrategyResult};
use crate::game::{GameState, Solver, SolverConfig};
use crate::graph::{degeneracy, Graph, Vertex};
use crate::structure::{cycle, recognize_expansion, ModuleFilter};

/// Presents a fixed list in order, skipping vertices already colored.
#[derive(Debug, Clone)]
pub struct Sequence {
    name: &'static str,
    order: Vec<Vertex>,
    pos: usize,
    skip_colored: bool,
}

impl Sequence {
    pub fn new(name: &'static str, order: Vec<Vertex>) -> Self {
        Sequence { name, order, pos: 0, skip_colored: true }
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }
}

impl Strategy for Sequence {
    fn name(&self) -> &str {
        self.name
    }

    fn next_vertex(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        while self.skip_colored && self.pos < self.order.len() && state.colored().contains(self.order[self.pos]) {
            self.pos += 1;
        }
        match self.order.get(self.pos) {
            Some(&v) => {
                self.pos += 1;
                Ok(v)
            }
            // a script that ran out continues with the least uncolored vertex
            None if !self.skip_colored => state.uncolored().first().ok_or(StrategyError::Exhausted),
            None => Err(StrategyError::Exhausted),
        }
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Ann presents exactly the given vertices, colored or not, then the least
/// uncolored vertex each turn; legality is left to the match harness.
pub fn strat_scripted(order: Vec<Vertex>) -> Box<dyn Strategy> {
    Box::new(Sequence { name: "scripted", order, pos: 0, skip_colored: false })
}

/// Reverse minimum-degree elimination order: each presented vertex has at
/// most `col - 1` colored neighbors, so `k >= col` always leaves a color.
pub fn strat_degeneracy(g: &Graph, k: usize) -> StrategyResult {
    let d = degeneracy(g);
    if k < d.col {
        return Err(StrategyError::BoundViolated { k, bound: d.col });
    }
    Ok(Box::new(Sequence::new("degeneracy", d.presentation_order())))
}

/// Independent expansion of a cycle `C_n`, `3 <= n <= 8`: one
/// representative per module in cycle order, then everything else. Each
/// later vertex can reuse its representative's color.
pub fn strat_cycle_expansion(g: &Graph, k: usize) -> StrategyResult {
    for n in 3..=g.n().min(8) {
        if let Some(s) = recognize_expansion(g, &cycle(n), ModuleFilter::Independent) {
            let bound = if n % 2 == 0 { 2 } else { 3 };
            if k < bound {
                return Err(StrategyError::BoundViolated { k, bound });
            }
            let reps: Vec<Vertex> = s.modules.iter().map(|m| m.first().expect("nonempty module")).collect();
            let rest = g.vertices().filter(|v| !reps.contains(v));
            return Ok(Box::new(Sequence::new("cycle", reps.iter().copied().chain(rest).collect())));
        }
    }
    Err(StrategyError::NotApplicable("not an independent expansion of a cycle".into()))
}

/// Plays the least vertex that keeps a won position won, using a memoized
/// solve shared by all clones of the strategy.
#[derive(Clone)]
pub struct SolverBacked {
    solver: Rc<RefCell<Solver>>,
}

/// Largest graph the solver-backed strategy accepts.
pub const SOLVER_STRATEGY_LIMIT: usize = 16;

pub fn strat_solver_backed(g: &Graph, k: usize) -> StrategyResult {
    let config = SolverConfig { max_vertices: SOLVER_STRATEGY_LIMIT, ..SolverConfig::default() };
    let mut solver = Solver::new(g.clone(), k, config)?;
    let root = GameState::new(g.clone(), k)?;
    if !solver.ann_wins_from(&root)? {
        return Err(StrategyError::NotWinnable { k });
    }
    Ok(Box::new(SolverBacked { solver: Rc::new(RefCell::new(solver)) }))
}

impl Strategy for SolverBacked {
    fn name(&self) -> &str {
        "solver"
    }

    fn next_vertex(&mut self, state: &GameState) -> Result<Vertex, StrategyError> {
        match self.solver.borrow_mut().ann_best_move(state)? {
            Some(v) => Ok(v),
            // lost position: play on so the harness records the loss
            None => state.uncolored().first().ok_or(StrategyError::Exhausted),
        }
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

/// Joins `G_1 + G_2` (disconnected complement), played by the solver.
pub fn strat_join(g: &Graph, k: usize) -> StrategyResult {
    if g.n() < 2 || g.complement().is_connected() {
        return Err(StrategyError::NotApplicable("not a join of two graphs".into()));
    }
    strat_solver_backed(g, k)
}
