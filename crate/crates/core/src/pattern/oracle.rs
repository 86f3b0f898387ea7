//! Brute-force reference for induced-subgraph search.
//!
//! Walks every injective map from pattern to host in lexicographic order,
//! with no pruning, and returns the first one that preserves adjacency and
//! non-adjacency. Independent of the backtracking search in the parent
//! module; used to cross-check it.

use crate::graph::{Graph, Vertex};

pub fn brute_force_induced(host: &Graph, pattern: &Graph) -> Option<Vec<Vertex>> {
    let p = pattern.n();
    if p > host.n() {
        return None;
    }
    let mut map = vec![0; p];
    let mut used = vec![false; host.n()];
    fn rec(host: &Graph, pattern: &Graph, i: usize, map: &mut [Vertex], used: &mut [bool]) -> bool {
        if i == map.len() {
            return (0..map.len())
                .all(|a| (0..map.len()).all(|b| a == b || pattern.has_edge(a, b) == host.has_edge(map[a], map[b])));
        }
        for v in 0..host.n() {
            if used[v] {
                continue;
            }
            used[v] = true;
            map[i] = v;
            if rec(host, pattern, i + 1, map, used) {
                return true;
            }
            used[v] = false;
        }
        false
    }
    rec(host, pattern, 0, &mut map, &mut used).then_some(map)
}
