use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex, VertexSet};

/// Two-coloring of `g`, or `None` if `g` has an odd cycle. In every
/// component the least vertex lands in the first part.
pub fn is_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut side = [VertexSet::EMPTY; 2];
    for comp in g.components() {
        let start = comp.first().expect("components are nonempty");
        let mut frontier = VertexSet::singleton(start);
        let mut parity = 0;
        let mut seen = frontier;
        while !frontier.is_empty() {
            side[parity] |= frontier;
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= g.neighbors(v);
            }
            next = next - seen;
            seen |= next;
            frontier = next;
            parity ^= 1;
        }
    }
    (g.is_independent(side[0]) && g.is_independent(side[1])).then_some((side[0], side[1]))
}

/// Lexicographic BFS visit order, least id first on ties.
fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut left = g.vertex_set();
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = left.iter().reduce(|best, v| if labels[v] > labels[best] { v } else { best }).expect("vertices remain");
        left.remove(v);
        order.push(v);
        for u in g.neighbors_in(v, left) {
            labels[u].push(n - step);
        }
    }
    order
}

/// Perfect elimination order (each vertex's later neighbors form a clique),
/// or `None` if `g` is not chordal. The order is verified before returning.
pub fn is_chordal(g: &Graph) -> Option<Vec<Vertex>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    let mut later = g.vertex_set();
    for &v in &peo {
        later.remove(v);
        if !g.is_clique(g.neighbors_in(v, later)) {
            return None;
        }
    }
    Some(peo)
}

/// Split partition with a maximum clique part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

/// Recognizes split graphs from the degree sequence: with degrees sorted
/// descending and `m = max{ i : d_i >= i - 1 }`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`. The candidate partition is
/// verified, then any independent vertex complete to the clique is moved
/// over so the clique part is maximum.
pub fn is_split(g: &Graph) -> Option<SplitPartition> {
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=degs.len()).filter(|&i| degs[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = degs[..m].iter().sum();
    let tail: usize = degs[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique: VertexSet = by_degree[..m].iter().collect();
    let mut independent = g.vertex_set() - clique;
    if !g.is_clique(clique) || !g.is_independent(independent) {
        return None;
    }
    if let Some(v) = independent.iter().find(|&v| clique.is_subset(g.neighbors(v))) {
        clique.insert(v);
        independent.remove(v);
    }
    Some(SplitPartition { clique, independent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    fn g(expr: &str) -> Graph {
        parse_expr(expr).unwrap()
    }

    #[test]
    fn bipartite_cases() {
        let (a, b) = is_bipartite(&g("C6")).unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        assert!(a.contains(0));
        assert!(is_bipartite(&g("C5")).is_none());
        assert!(is_bipartite(&Graph::empty(0).unwrap()).is_some());
    }

    #[test]
    fn chordal_cases() {
        assert!(is_chordal(&g("C5")).is_none());
        assert!(is_chordal(&g("C4")).is_none());
        let pendant_triangle = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let peo = is_chordal(&pendant_triangle).unwrap();
        assert_eq!(peo.len(), 4);
        assert!(is_chordal(&g("K1+P5")).is_some());
    }

    #[test]
    fn split_cases() {
        let pendant_triangle = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let s = is_split(&pendant_triangle).unwrap();
        assert_eq!(s.clique.to_vec(), vec![0, 1, 2]);
        assert_eq!(s.independent.to_vec(), vec![3]);
        assert!(is_split(&g("C5")).is_none());
        assert!(is_split(&g("C4")).is_none());
        let k2 = is_split(&g("K2")).unwrap();
        assert_eq!(k2.clique.len(), 2);
    }
}
