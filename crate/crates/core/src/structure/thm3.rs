use serde::{Deserialize, Serialize};

use super::{classify_component, cycle, recognize_expansion, require_free, violation, ModuleFilter, StructureError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::pattern::find_induced_cycle;

/// Layered partition of a connected {P5, K4, Kite, Bull}-free graph around a
/// seed induced C5.
///
/// With `N_i` the vertices at distance `i` from the seed cycle: `a[i]` holds
/// `v_i` and the `N_1` vertices seeing exactly `v_{i-1}, v_{i+1}`; `b` the
/// `N_1` vertices seeing the whole cycle; `s` the `N_2` vertices with a
/// neighbor in `N_3`; `n2_rest` the rest of `N_2`; `v3 = N_3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm3Decomposition {
    pub c5: Vec<Vertex>,
    pub a: Vec<VertexSet>,
    pub b: VertexSet,
    pub n2_rest: VertexSet,
    pub s: VertexSet,
    /// Least vertex of `s` complete to `v3`; present iff `v3` is nonempty.
    pub xstar: Option<Vertex>,
    pub v3: VertexSet,
    /// The graph is an independent expansion of C5 (equivalently `b` is empty).
    pub is_ic5: bool,
}

impl Thm3Decomposition {
    pub fn v1(&self) -> VertexSet {
        self.a.iter().fold(self.n2_rest, |acc, &x| acc | x)
    }

    pub fn v2(&self) -> VertexSet {
        self.b | self.s
    }

    /// Re-checks every structural claim against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), StructureError> {
        let blocks = self.a.iter().copied().chain([self.b, self.n2_rest, self.s, self.v3]);
        let mut seen = VertexSet::EMPTY;
        for blk in blocks {
            if !blk.is_disjoint(seen) {
                return Err(violation("blocks overlap"));
            }
            seen |= blk;
        }
        if seen != g.vertex_set() {
            return Err(violation(format!("blocks miss {:?}", g.vertex_set() - seen)));
        }
        let (v1, v3, b, s) = (self.v1(), self.v3, self.b, self.s);
        let checks = [
            (
                g.is_independent(b) && g.is_independent(s) && g.is_complete_between(b, s),
                "V2 is not complete bipartite with sides B, S",
            ),
            (g.is_complete_between(v1, b), "[V1, B] is not complete"),
            (g.no_edges_between(v1, s), "[V1, S] has an edge"),
            (g.no_edges_between(v1, v3), "[V1, V3] has an edge"),
            (g.no_edges_between(v3, b), "[V3, B] has an edge"),
            (self.is_ic5 == b.is_empty(), "I[C5] flag disagrees with B"),
        ];
        if let Some((_, msg)) = checks.iter().find(|c| !c.0) {
            return Err(violation(*msg));
        }
        for comp in g.components_within(v1 | v3) {
            if classify_component(g, comp).is_none() {
                return Err(violation(format!("component {comp:?} of V1 u V3 is neither bipartite nor I[C5]")));
            }
        }
        match (self.xstar, v3.is_empty()) {
            (None, true) => {}
            (Some(x), false) if s.contains(x) && v3.is_subset(g.neighbors(x)) => {}
            _ => return Err(violation("x* missing or not complete to V3")),
        }
        if self.is_ic5 && recognize_expansion(g, &cycle(5), ModuleFilter::Independent).is_none() {
            return Err(violation("B is empty but the graph is not I[C5]"));
        }
        Ok(())
    }
}

pub fn decompose_p5k4kitebull(g: &Graph) -> Result<Thm3Decomposition, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let c5 = find_induced_cycle(g, 5).ok_or(StructureError::NoInducedC5)?;
    require_free(g, &["P5", "K4", "Kite", "Bull"])?;
    let n0: VertexSet = c5.iter().collect();
    let layers = g.distance_layers(n0);
    if layers.len() > 4 {
        return Err(violation("vertices at distance 4 from the seed cycle"));
    }
    let layer = |i: usize| layers.get(i).copied().unwrap_or(VertexSet::EMPTY);
    let mut a: Vec<VertexSet> = c5.iter().map(|&v| VertexSet::singleton(v)).collect();
    let mut b = VertexSet::EMPTY;
    for x in layer(1) {
        let seen: VertexSet = (0..5).filter(|&i| g.has_edge(x, c5[i])).collect();
        if seen.len() == 5 {
            b.insert(x);
        } else if let Some(i) = (0..5).find(|&i| seen == [(i + 4) % 5, (i + 1) % 5].iter().collect()) {
            a[i].insert(x);
        } else {
            return Err(violation(format!("vertex {x} sees cycle positions {seen:?}")));
        }
    }
    let (n2, v3) = (layer(2), layer(3));
    let s: VertexSet = n2.iter().filter(|&x| !g.neighbors(x).is_disjoint(v3)).collect();
    let xstar = if v3.is_empty() { None } else { s.iter().find(|&x| v3.is_subset(g.neighbors(x))) };
    let d = Thm3Decomposition { c5, a, b, n2_rest: n2 - s, s, xstar, v3, is_ic5: b.is_empty() };
    d.validate(g)?;
    Ok(d)
}

/// 3 for an independent expansion of C5, otherwise 4.
pub fn chi_p5k4kitebull(d: &Thm3Decomposition) -> usize {
    if d.b.is_empty() {
        3
    } else {
        4
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    fn decompose(expr: &str) -> Result<Thm3Decomposition, StructureError> {
        decompose_p5k4kitebull(&parse_expr(expr).unwrap())
    }

    #[test]
    fn independent_expansion() {
        let d = decompose("I[C5](2,1,2,1,1)").unwrap();
        assert!(d.is_ic5);
        assert!(d.b.is_empty() && d.s.is_empty() && d.v3.is_empty());
        assert_eq!(d.v1().len(), 7);
        assert_eq!(chi_p5k4kitebull(&d), 3);
    }

    #[test]
    fn wheel() {
        let d = decompose("K1 + C5").unwrap();
        assert_eq!(d.b, VertexSet::singleton(0));
        assert!(d.a.iter().all(|a| a.len() == 1));
        assert!(d.s.is_empty() && d.v3.is_empty() && d.xstar.is_none());
        assert_eq!(chi_p5k4kitebull(&d), 4);
    }

    #[test]
    fn errors() {
        assert_eq!(decompose("P5"), Err(StructureError::NoInducedC5));
        assert!(matches!(decompose("C5 + K2"), Err(StructureError::NotInClass(_))));
        assert_eq!(decompose("C5 | C5"), Err(StructureError::Disconnected));
    }
}
