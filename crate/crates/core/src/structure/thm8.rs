use serde::{Deserialize, Serialize};

use super::{cycle, require_free, violation, ExpansionStructure, ModuleKind, StructureError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::pattern::find_induced_cycle;

/// Partition of a connected {P6, C5, K1,3}-free graph around a seed induced C6.
///
/// `a[i]` holds `v_i` and the vertices seeing exactly `v_{i-1}, v_i, v_{i+1}`;
/// `b[j]` (j mod 3) the vertices seeing every cycle vertex except `v_j` and
/// `v_{j+3}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm8Structure {
    pub c6: Vec<Vertex>,
    pub a: Vec<VertexSet>,
    pub b: Vec<VertexSet>,
}

impl Thm8Structure {
    pub fn is_kc6(&self) -> bool {
        self.b.iter().all(|b| b.is_empty())
    }

    /// The `a` blocks as a complete expansion of C6.
    pub fn a_expansion(&self) -> ExpansionStructure {
        ExpansionStructure { base: cycle(6), modules: self.a.clone(), kinds: vec![ModuleKind::Complete; 6] }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), StructureError> {
        let mut seen = VertexSet::EMPTY;
        for &blk in self.a.iter().chain(&self.b) {
            if !blk.is_disjoint(seen) {
                return Err(violation("blocks overlap"));
            }
            seen |= blk;
        }
        if seen != g.vertex_set() {
            return Err(violation(format!("blocks miss {:?}", g.vertex_set() - seen)));
        }
        let (a, b) = (&self.a, &self.b);
        for i in 0..6 {
            let checks = [
                (g.is_clique(a[i]), "A_i is not a clique"),
                (g.is_complete_between(a[i], a[(i + 1) % 6]), "[A_i, A_i+1] is not complete"),
                (g.no_edges_between(a[i], a[(i + 2) % 6]), "[A_i, A_i+2] has an edge"),
                (g.no_edges_between(a[i], a[(i + 3) % 6]), "[A_i, A_i+3] has an edge"),
                (g.no_edges_between(a[i], b[i % 3]), "[A_i, B_i] has an edge"),
                (g.is_complete_between(a[i], b[(i + 1) % 3]), "[A_i, B_i+1] is not complete"),
                (g.is_complete_between(a[i], b[(i + 2) % 3]), "[A_i, B_i+2] is not complete"),
            ];
            if let Some((_, msg)) = checks.iter().find(|c| !c.0) {
                return Err(violation(format!("{msg} (i = {i})")));
            }
        }
        for j in 0..3 {
            if !g.is_clique(b[j]) || !g.no_edges_between(b[j], b[(j + 1) % 3]) {
                return Err(violation(format!("B_{j} is not a clique or meets B_{}", (j + 1) % 3)));
            }
        }
        Ok(())
    }
}

pub fn decompose_p6c5claw(g: &Graph) -> Result<Thm8Structure, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let c6 = find_induced_cycle(g, 6).ok_or(StructureError::NoInducedC6)?;
    require_free(g, &["P6", "C5", "K1_3"])?;
    let n0: VertexSet = c6.iter().collect();
    let layers = g.distance_layers(n0);
    if layers.len() > 2 {
        return Err(violation(format!("vertices at distance 2 from the seed cycle: {:?}", layers[2])));
    }
    let mut a: Vec<VertexSet> = c6.iter().map(|&v| VertexSet::singleton(v)).collect();
    let mut b = vec![VertexSet::EMPTY; 3];
    let positions = |idx: &[usize]| idx.iter().map(|&i| i % 6).collect::<VertexSet>();
    for x in layers.get(1).copied().unwrap_or(VertexSet::EMPTY) {
        let seen: VertexSet = (0..6).filter(|&i| g.has_edge(x, c6[i])).collect();
        if let Some(i) = (0..6).find(|&i| seen == positions(&[i + 5, i, i + 1])) {
            a[i].insert(x);
        } else if let Some(j) = (0..3).find(|&j| seen == VertexSet::full(6) - positions(&[j, j + 3])) {
            b[j].insert(x);
        } else {
            return Err(violation(format!("vertex {x} sees cycle positions {seen:?}")));
        }
    }
    let d = Thm8Structure { c6, a, b };
    d.validate(g)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    #[test]
    fn bare_and_expanded_cycle() {
        let d = decompose_p6c5claw(&parse_expr("C6").unwrap()).unwrap();
        assert!(d.a.iter().all(|a| a.len() == 1) && d.is_kc6());
        let d = decompose_p6c5claw(&parse_expr("K[C6](2,1,1,1,1,1)").unwrap()).unwrap();
        let sizes: Vec<_> = d.a.iter().map(|a| a.len()).collect();
        assert_eq!(sizes, vec![2, 1, 1, 1, 1, 1]);
        assert!(d.is_kc6());
    }

    #[test]
    fn b_vertex() {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 1), (6, 2), (6, 4), (6, 5)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let d = decompose_p6c5claw(&g).unwrap();
        assert_eq!(d.b[0], VertexSet::singleton(6));
        assert!(!d.is_kc6());
    }

    #[test]
    fn errors() {
        assert_eq!(decompose_p6c5claw(&parse_expr("C5").unwrap()), Err(StructureError::NoInducedC6));
        assert_eq!(decompose_p6c5claw(&parse_expr("C6 | K1").unwrap()), Err(StructureError::Disconnected));
        assert!(matches!(decompose_p6c5claw(&parse_expr("C7").unwrap()), Err(StructureError::NoInducedC6)));
    }
}
