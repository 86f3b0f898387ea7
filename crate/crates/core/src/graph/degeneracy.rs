use serde::{Deserialize, Serialize};

use super::{Graph, Vertex, VertexSet};

/// Minimum-degree elimination order and the coloring number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyResult {
    /// Vertices in removal order (first removed first).
    pub order: Vec<Vertex>,
    /// `1 + max` remaining degree at removal; 0 for the empty graph.
    pub col: usize,
}

/// Repeatedly removes a vertex of minimum remaining degree (least id on ties).
pub fn degeneracy(g: &Graph) -> DegeneracyResult {
    let mut alive = g.vertex_set();
    let mut order = Vec::with_capacity(g.n());
    let mut max_deg = 0;
    while !alive.is_empty() {
        let (v, d) = alive.iter().map(|v| (v, g.neighbors_in(v, alive).len())).min_by_key(|&(v, d)| (d, v)).unwrap();
        max_deg = max_deg.max(d);
        order.push(v);
        alive.remove(v);
    }
    let col = if g.n() == 0 { 0 } else { max_deg + 1 };
    DegeneracyResult { order, col }
}

impl DegeneracyResult {
    /// Presentation order for greedy play: reverse of the removal order.
    pub fn presentation_order(&self) -> Vec<Vertex> {
        self.order.iter().rev().copied().collect()
    }

    /// Largest number of earlier neighbors along the presentation order.
    pub fn back_degree(&self, g: &Graph) -> usize {
        let mut seen = VertexSet::EMPTY;
        let mut worst = 0;
        for v in self.presentation_order() {
            worst = worst.max(g.neighbors_in(v, seen).len());
            seen.insert(v);
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named;

    #[test]
    fn small_cases() {
        assert_eq!(degeneracy(&make_named("C", &[5]).unwrap()).col, 3);
        assert_eq!(degeneracy(&make_named("K", &[4]).unwrap()).col, 4);
        assert_eq!(degeneracy(&make_named("Petersen", &[]).unwrap()).col, 4);
        assert_eq!(degeneracy(&Graph::empty(0).unwrap()).col, 0);
        assert_eq!(degeneracy(&Graph::empty(3).unwrap()).col, 1);
    }

    #[test]
    fn order_is_permutation_and_back_degree_bounded() {
        let g = make_named("Petersen", &[]).unwrap();
        let d = degeneracy(&g);
        let mut sorted = d.order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..10).collect::<Vec<_>>());
        assert!(d.back_degree(&g) < d.col);
    }
}
