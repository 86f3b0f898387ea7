//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense ids `0..n`; adjacency is stored as one bit row per
//! vertex. Every algorithm in the crate walks vertices in ascending id order,
//! so results (witnesses, transcripts, memo keys) are reproducible.

mod degeneracy;
mod dot;
mod expansion;
mod expr;
mod graph6;
mod named;
mod set;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use degeneracy::{degeneracy, DegeneracyResult};
pub use dot::to_dot;
pub use expansion::{expand, Expansion, ExpansionSpec, PartKind};
pub use expr::parse_expr;
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use named::make_named;
pub use set::VertexSet;

pub type Vertex = usize;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex set {0:?} is not contained in the vertex range")]
    BadVertexSet(VertexSet),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("cannot parse graph expression at byte {offset}: {reason}")]
    BadExpression { offset: usize, reason: String },
}

/// Immutable simple undirected graph.
///
/// Equality compares vertex count and adjacency; labels are ignored.
#[derive(Clone, Serialize, Deserialize)]
#[serde(into = "EdgeList", try_from = "EdgeList")]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n], labels: None })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if row.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            if !row.is_subset(all) {
                return Err(GraphError::BadVertexSet(*row));
            }
            if let Some(u) = row.iter().find(|&u| !rows[u].contains(v)) {
                return Err(GraphError::BadParam(format!("adjacency not symmetric at ({v}, {u})")));
            }
        }
        Ok(Graph { n, adj: rows, labels: None })
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::BadParam(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Neighbors of `v` inside `s`.
    pub fn neighbors_in(&self, v: Vertex, s: VertexSet) -> VertexSet {
        self.adj[v] & s
    }

    /// Whether every vertex of `s` is adjacent to every vertex of `t`.
    pub fn is_complete_between(&self, s: VertexSet, t: VertexSet) -> bool {
        s.iter().all(|v| t.without(v).is_subset(self.adj[v]))
    }

    /// Whether there is no edge between `s` and `t`.
    pub fn no_edges_between(&self, s: VertexSet, t: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(t))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                next &= within - comp;
                comp |= next;
                frontier = next;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS layers: `layers[i]` holds vertices at distance `i` from `source`.
    /// Vertices unreachable from `source` are left out.
    pub fn distance_layers(&self, source: VertexSet) -> Vec<VertexSet> {
        let mut layers = vec![source];
        let mut seen = source;
        loop {
            let mut next = VertexSet::EMPTY;
            for v in *layers.last().unwrap() {
                next |= self.adj[v];
            }
            next = next - seen;
            if next.is_empty() {
                return layers;
            }
            seen |= next;
            layers.push(next);
        }
    }

    /// Subgraph induced by `s`; the i-th vertex of the result is the i-th
    /// smallest member of `s`.
    pub fn induced(&self, s: VertexSet) -> Result<Graph, GraphError> {
        Ok(self.induced_with_map(s)?.0)
    }

    /// Like [`Graph::induced`] and also returns the map new id -> old id.
    pub fn induced_with_map(&self, s: VertexSet) -> Result<(Graph, Vec<Vertex>), GraphError> {
        if !s.is_subset(self.vertex_set()) {
            return Err(GraphError::BadVertexSet(s));
        }
        let map = s.to_vec();
        let mut index = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let rows = map.iter().map(|&v| (self.adj[v] & s).iter().map(|u| index[u]).collect()).collect();
        let labels = self.labels.as_ref().map(|l| map.iter().map(|&v| l[v].clone()).collect());
        Ok((Graph { n: map.len(), adj: rows, labels }, map))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = self.vertices().map(|v| (all - self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj, labels: self.labels.clone() }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, false)
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let left = VertexSet::full(self.n);
        let right = VertexSet::full(n) - left;
        let mut adj = Vec::with_capacity(n);
        for v in self.vertices() {
            adj.push(if cross { self.adj[v] | right } else { self.adj[v] });
        }
        for v in other.vertices() {
            let shifted = VertexSet(other.adj[v].0 << self.n);
            adj.push(if cross { shifted | left } else { shifted });
        }
        Ok(Graph { n, adj, labels: None })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        if perm.len() != self.n
            || perm.iter().collect::<VertexSet>() != self.vertex_set()
            || perm.iter().any(|&p| p >= self.n)
        {
            return Err(GraphError::BadParam("not a permutation".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

// Serialized form: vertex count plus sorted edge list.
#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList { n: g.n, edges: g.edges().collect() }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = GraphError;

    fn try_from(e: EdgeList) -> Result<Self, GraphError> {
        Graph::from_edges(e.n, &e.edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        make_named("C", &[n]).unwrap()
    }

    #[test]
    fn serde_edge_list() {
        let g = cycle(4);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })));
        assert_eq!(Graph::empty(65).unwrap_err(), GraphError::TooManyVertices(65));
    }

    #[test]
    fn join_of_k1_and_c5_is_wheel() {
        let w = make_named("K", &[1]).unwrap().join(&cycle(5)).unwrap();
        assert_eq!(w.n(), 6);
        assert_eq!(w.edge_count(), 10);
        assert_eq!(w.degree(0), 5);
    }

    #[test]
    fn union_of_two_c5() {
        let u = cycle(5).union(&cycle(5)).unwrap();
        assert_eq!((u.n(), u.edge_count()), (10, 10));
        assert_eq!(u.components().len(), 2);
    }

    #[test]
    fn complement_of_p5() {
        let c = make_named("P", &[5]).unwrap().complement();
        assert_eq!((c.n(), c.edge_count()), (5, 6));
    }

    #[test]
    fn induced_keeps_internal_edges() {
        let c6 = cycle(6);
        let s: VertexSet = [0, 1, 2, 4].iter().collect();
        let (h, map) = c6.induced_with_map(s).unwrap();
        assert_eq!(map, vec![0, 1, 2, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(matches!(c6.induced(VertexSet::singleton(6)), Err(GraphError::BadVertexSet(_))));
    }

    #[test]
    fn layers_from_a_cycle_vertex() {
        let c6 = cycle(6);
        let layers = c6.distance_layers(VertexSet::singleton(0));
        let sizes: Vec<usize> = layers.iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 1]);
    }

    #[test]
    fn from_rows_checks_symmetry() {
        let rows = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_rows(rows).is_err());
    }

    #[test]
    fn empty_graphs_are_legal() {
        let g = Graph::empty(0).unwrap();
        assert!(g.is_connected());
        assert!(g.components().is_empty());
        assert_eq!(g.max_degree(), 0);
    }
}
