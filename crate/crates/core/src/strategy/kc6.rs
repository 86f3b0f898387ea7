use super::{Strategy, StrategyError, StrategyResult};
use crate::game::GameState;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::structure::{cycle, recognize_expansion, ModuleFilter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    Opening,
    V4,
    V5,
    Rest,
}

/// Strategy for complete expansions of C6: a maximum clique pair `V_1 ∪ V_2`,
/// then `V_3 ∪ V_6`, then `V_4` while `V_5` keeps more colors than
/// vertices, then `V_5`, then what is left of `V_4`.
#[derive(Debug, Clone)]
pub struct Kc6Strategy {
    /// `parts[0..6]` are `V_1..V_6` after rotation.
    parts: [VertexSet; 6],
    omega: usize,
    phase: Phase,
    log: Vec<String>,
}

pub fn strat_kc6(g: &Graph, k: usize) -> StrategyResult {
    Ok(Box::new(Kc6Strategy::new(g, k)?))
}

impl Kc6Strategy {
    pub fn new(g: &Graph, k: usize) -> Result<Self, StrategyError> {
        let s = recognize_expansion(g, &cycle(6), ModuleFilter::Complete)
            .ok_or_else(|| StrategyError::NotApplicable("not a complete expansion of C6".into()))?;
        let m = s.sizes();
        let pair = |i: usize| m[i] + m[(i + 1) % 6];
        let omega = (0..6).map(pair).max().unwrap();
        if k < omega {
            return Err(StrategyError::BoundViolated { k, bound: omega });
        }
        let r = (0..6).find(|&i| pair(i) == omega).unwrap();
        let parts = std::array::from_fn(|j| s.modules[(r + j) % 6]);
        Ok(Kc6Strategy { parts, omega, phase: Phase::Opening, log: Vec::new() })
    }

    /// Modules `V_1..V_6` after rotation.
    pub fn parts(&self) -> &[VertexSet; 6] {
        &self.parts
    }

    fn open(&self, set: VertexSet, s: &GameState) -> Option<Vertex> {
        (set - s.colored()).first()
    }
}

impl Strategy for Kc6Strategy {
    fn name(&self) -> &str {
        "kc6"
    }

    fn next_vertex(&mut self, s: &GameState) -> Result<Vertex, StrategyError> {
        let p = self.parts;
        loop {
            match self.phase {
                Phase::Opening => {
                    let order = [p[0] | p[1], p[2] | p[5]];
                    if let Some(v) = order.iter().find_map(|&set| self.open(set, s)) {
                        return Ok(v);
                    }
                    self.phase = Phase::V4;
                }
                Phase::V4 => {
                    // colors still available to V_5
                    let c5 = s.palette().minus(s.colors_on(p[3] | p[4] | p[5]));
                    match self.open(p[3], s) {
                        Some(v) if c5.len() > p[4].len() => return Ok(v),
                        _ => {
                            let c4 = s.palette().minus(s.colors_on(p[2] | p[3] | p[4]));
                            let open = (p[3] | p[4]) - s.colored();
                            self.log.push(format!(
                                "|C4 u C5| = {}, uncolored in V4 u V5 = {}, omega = {}",
                                c4.union(c5).len(),
                                open.len(),
                                self.omega
                            ));
                            self.phase = Phase::V5;
                        }
                    }
                }
                Phase::V5 => match self.open(p[4], s) {
                    Some(v) => return Ok(v),
                    None => self.phase = Phase::Rest,
                },
                Phase::Rest => return self.open(p[3], s).ok_or(StrategyError::Exhausted),
            }
        }
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }

    fn log(&self) -> Vec<String> {
        self.log.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    #[test]
    fn rotation_picks_first_maximum_pair() {
        let g = parse_expr("K[C6](1,2,2,1,1,1)").unwrap();
        let s = Kc6Strategy::new(&g, 4).unwrap();
        assert_eq!(s.parts()[0].len() + s.parts()[1].len(), 4);
        assert_eq!(s.parts()[0].to_vec(), vec![1, 2]);
        assert!(matches!(Kc6Strategy::new(&g, 3), Err(StrategyError::BoundViolated { k: 3, bound: 4 })));
        assert!(matches!(Kc6Strategy::new(&parse_expr("C5").unwrap(), 3), Err(StrategyError::NotApplicable(_))));
    }
}
