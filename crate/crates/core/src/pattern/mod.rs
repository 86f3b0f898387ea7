//! Induced-subgraph detection and certified class predicates.

mod classes;
pub mod oracle;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{make_named, Graph, Vertex, VertexSet};

pub use classes::{is_bipartite, is_chordal, is_split, SplitPartition};

/// Patterns above this size are rejected by [`find_induced`].
pub const MAX_PATTERN: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern has {0} vertices, at most {MAX_PATTERN} are supported")]
    PatternTooLarge(usize),
}

/// Induced embedding: pattern vertex `i` maps to host vertex `map[i]`, and
/// both adjacency and non-adjacency are preserved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<Vertex>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }

    /// Checks injectivity and induced adjacency against `host`/`pattern`.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        self.map.len() == pattern.n()
            && self.map.iter().all(|&v| v < host.n())
            && self.image().len() == self.map.len()
            && pattern.vertices().all(|i| {
                pattern.vertices().all(|j| i == j || pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j]))
            })
    }
}

/// A pattern with its display name, e.g. `("Kite", kite_graph)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    /// Builds a named pattern from a graph expression like `P5` or `Kite`.
    pub fn parse(name: &str) -> Result<Self, crate::graph::GraphError> {
        Ok(NamedGraph { name: name.to_string(), graph: crate::graph::parse_expr(name)? })
    }
}

/// Builds a family from expressions; panics on a bad literal, so only use
/// with fixed names.
pub fn family(names: &[&str]) -> Vec<NamedGraph> {
    names.iter().map(|n| NamedGraph::parse(n).unwrap_or_else(|e| panic!("bad pattern `{n}`: {e}"))).collect()
}

/// The named five-vertex obstructions, plus the paths,
/// cycles and cliques that appear in the studied class definitions.
pub fn standard_patterns() -> Vec<NamedGraph> {
    family(&["Kite", "Bull", "Dart", "P5_bar", "P2uP3_bar", "P2uP3", "K1_3", "P5", "P6", "C4", "C5", "C6", "K3", "K4"])
}

/// The first pattern of a family found in a host, with its embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pattern: String,
    pub embedding: Embedding,
}

/// Lexicographically least induced embedding of `pattern` into `host`.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Result<Option<Embedding>, PatternError> {
    if pattern.n() > MAX_PATTERN {
        return Err(PatternError::PatternTooLarge(pattern.n()));
    }
    Ok(first_embedding(host, pattern))
}

fn first_embedding(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let mut found = None;
    for_each_embedding(host, pattern, |map| {
        found = Some(Embedding { map: map.to_vec() });
        ControlFlow::Break(())
    });
    found
}

/// Visits induced embeddings in lexicographic order of the map until the
/// visitor breaks.
pub fn for_each_embedding<F>(host: &Graph, pattern: &Graph, mut visit: F)
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    if pattern.n() > host.n() {
        return;
    }
    // host vertices grouped by minimum degree requirement
    let mut at_least = vec![VertexSet::EMPTY; pattern.n() + 1];
    for (d, slot) in at_least.iter_mut().enumerate() {
        *slot = host.vertices().filter(|&v| host.degree(v) >= d).collect();
    }
    let mut map = Vec::with_capacity(pattern.n());
    let _ = extend(host, pattern, &at_least, &mut map, VertexSet::EMPTY, &mut visit);
}

fn extend<F>(
    host: &Graph,
    pattern: &Graph,
    at_least: &[VertexSet],
    map: &mut Vec<Vertex>,
    used: VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let d = map.len();
    if d == pattern.n() {
        return visit(map);
    }
    let mut cand = at_least[pattern.degree(d)] - used;
    for (e, &h) in map.iter().enumerate() {
        if pattern.has_edge(d, e) {
            cand &= host.neighbors(h);
        } else {
            cand = cand - host.neighbors(h);
        }
    }
    for v in cand {
        map.push(v);
        let flow = extend(host, pattern, at_least, map, used.with(v), visit);
        map.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// First member of `family` (in list order) that occurs induced in `host`.
pub fn find_family_member(host: &Graph, family: &[NamedGraph]) -> Result<Option<Witness>, PatternError> {
    for p in family {
        if let Some(embedding) = find_induced(host, &p.graph)? {
            return Ok(Some(Witness { pattern: p.name.clone(), embedding }));
        }
    }
    Ok(None)
}

/// Whether no member of `family` occurs as an induced subgraph.
pub fn is_family_free(host: &Graph, family: &[NamedGraph]) -> Result<bool, PatternError> {
    Ok(find_family_member(host, family)?.is_none())
}

/// Lexicographically least chordless cycle of the given length, listed in
/// cycle order.
pub fn find_induced_cycle(host: &Graph, length: usize) -> Option<Vec<Vertex>> {
    if length < 3 || length > host.n() {
        return None;
    }
    let cycle = make_named("C", &[length]).expect("length >= 3");
    first_embedding(host, &cycle).map(|e| e.map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    fn g(expr: &str) -> Graph {
        parse_expr(expr).unwrap()
    }

    #[test]
    fn p4_in_c5() {
        let e = find_induced(&g("C5"), &g("P4")).unwrap().unwrap();
        assert_eq!(e.map, vec![0, 1, 2, 3]);
        assert!(e.is_valid(&g("C5"), &g("P4")));
    }

    #[test]
    fn no_claw_in_k4() {
        assert_eq!(find_induced(&g("K4"), &g("K1_3")).unwrap(), None);
    }

    #[test]
    fn c5_in_petersen() {
        let pet = g("Petersen");
        let e = find_induced(&pet, &g("C5")).unwrap().unwrap();
        assert!(e.is_valid(&pet, &g("C5")));
        assert_eq!(e.map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn pattern_too_large() {
        assert_eq!(find_induced(&g("C12"), &g("C11")), Err(PatternError::PatternTooLarge(11)));
    }

    #[test]
    fn family_checks() {
        let ic5 = g("I[C5](2,2,1,1,1)");
        assert!(is_family_free(&ic5, &family(&["P5", "K3"])).unwrap());
        let w5 = g("K1+C5");
        assert!(is_family_free(&w5, &family(&["P5", "K4", "Kite", "Bull"])).unwrap());
        let w = find_family_member(&g("P6"), &family(&["P5"])).unwrap().unwrap();
        assert_eq!(w.pattern, "P5");
        assert_eq!(w.embedding.map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn induced_cycles() {
        let kc5 = g("K[C5](2,1,1,1,1)");
        let c = find_induced_cycle(&kc5, 5).unwrap();
        assert_eq!(c.len(), 5);
        assert!(Embedding { map: c }.is_valid(&kc5, &g("C5")));
        assert_eq!(find_induced_cycle(&g("K4"), 4), None);
        assert_eq!(find_induced_cycle(&g("C6"), 6), Some(vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(find_induced_cycle(&g("C6"), 7), None);
    }

    #[test]
    fn empty_pattern_embeds_trivially() {
        let empty = Graph::empty(0).unwrap();
        assert_eq!(find_induced(&g("K2"), &empty).unwrap(), Some(Embedding { map: vec![] }));
    }
}
