use serde::{Deserialize, Serialize};

use super::{cycle, require_free, violation, ExpansionStructure, ModuleKind, StructureError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::pattern::{find_induced_cycle, is_chordal};

/// A complete expansion of C5 together with its neighborhood, a clique `q`
/// fully joined to it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Pod {
    pub expansion: ExpansionStructure,
    pub q: VertexSet,
}

/// A connected {P5, C4}-free graph as a chordal part `v1` plus pods.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct P5C4Decomposition {
    pub v1: VertexSet,
    /// Perfect elimination order of `v1`.
    pub peo: Vec<Vertex>,
    pub pods: Vec<Pod>,
}

impl P5C4Decomposition {
    pub fn validate(&self, g: &Graph) -> Result<(), StructureError> {
        let mut seen = self.v1;
        for (i, pod) in self.pods.iter().enumerate() {
            let verts = pod.expansion.vertices();
            pod.expansion.validate(g, verts)?;
            if pod.expansion.kinds.iter().any(|&k| k != ModuleKind::Complete) {
                return Err(violation(format!("pod {i} is not a complete expansion")));
            }
            if !verts.is_disjoint(seen) {
                return Err(violation(format!("pod {i} overlaps V1 or another pod")));
            }
            seen |= verts;
            let nbhd = verts.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v)) - verts;
            if nbhd != pod.q || !g.is_clique(pod.q) || !g.is_complete_between(verts, pod.q) {
                return Err(violation(format!("neighborhood of pod {i} is not a clique complete to it")));
            }
            if !pod.q.is_subset(self.v1) {
                return Err(violation(format!("neighborhood of pod {i} leaves V1")));
            }
        }
        if seen != g.vertex_set() {
            return Err(violation("V1 and pods do not cover the graph"));
        }
        let mut later: VertexSet = self.peo.iter().collect();
        if later != self.v1 || self.peo.len() != self.v1.len() {
            return Err(violation("elimination order does not list V1"));
        }
        for &v in &self.peo {
            later.remove(v);
            if !g.is_clique(g.neighbors_in(v, later)) {
                return Err(violation(format!("V1 order is not perfect at {v}")));
            }
        }
        Ok(())
    }
}

/// Repeatedly takes the least induced C5 outside the pods found so far and
/// grows it into a pod: a vertex seeing exactly three consecutive cycle
/// vertices joins the module of the middle one.
pub fn decompose_p5c4(g: &Graph) -> Result<P5C4Decomposition, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    require_free(g, &["P5", "C4"])?;
    let mut rest = g.vertex_set();
    let mut pods = Vec::new();
    loop {
        let (sub, map) = g.induced_with_map(rest).expect("subset of vertices");
        let Some(c) = find_induced_cycle(&sub, 5) else { break };
        let reps: Vec<Vertex> = c.iter().map(|&v| map[v]).collect();
        let rep_set: VertexSet = reps.iter().collect();
        let mut modules: Vec<VertexSet> = reps.iter().map(|&r| VertexSet::singleton(r)).collect();
        for x in rest - rep_set {
            let seen = g.neighbors(x) & rep_set;
            if let Some(j) = (0..5).find(|&j| seen == [reps[(j + 4) % 5], reps[j], reps[(j + 1) % 5]].iter().collect())
            {
                modules[j].insert(x);
            }
        }
        let expansion = ExpansionStructure { base: cycle(5), modules, kinds: vec![ModuleKind::Complete; 5] };
        let verts = expansion.vertices();
        let q = verts.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v)) - verts;
        rest = rest - verts;
        pods.push(Pod { expansion, q });
    }
    let (sub, map) = g.induced_with_map(rest).expect("subset of vertices");
    let peo = is_chordal(&sub)
        .ok_or_else(|| violation("remaining part is not chordal"))?
        .into_iter()
        .map(|v| map[v])
        .collect();
    let d = P5C4Decomposition { v1: rest, peo, pods };
    d.validate(g)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    #[test]
    fn chordal_graph_has_no_pods() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let d = decompose_p5c4(&g).unwrap();
        assert!(d.pods.is_empty());
        assert_eq!(d.v1, g.vertex_set());
    }

    #[test]
    fn bare_c5_and_wheel() {
        let d = decompose_p5c4(&parse_expr("C5").unwrap()).unwrap();
        assert_eq!(d.pods.len(), 1);
        assert!(d.v1.is_empty() && d.pods[0].q.is_empty());
        let d = decompose_p5c4(&parse_expr("K1 + C5").unwrap()).unwrap();
        assert_eq!(d.pods[0].q, VertexSet::singleton(0));
        assert_eq!(d.v1, VertexSet::singleton(0));
    }

    #[test]
    fn expanded_pod_with_clique_neighborhood() {
        let g = parse_expr("K2 + K[C5](2,1,2,1,1)").unwrap();
        let d = decompose_p5c4(&g).unwrap();
        assert_eq!(d.pods[0].expansion.sizes().iter().sum::<usize>(), 7);
        assert_eq!(d.pods[0].q.len(), 2);
    }
}
