use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Vertex, VertexSet, MAX_VERTICES};

/// What replaces a base vertex in an expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PartKind {
    Complete,
    Independent,
}

/// Blow-up description: base vertex `i` becomes a clique or an independent
/// set of `parts[i].0` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionSpec {
    pub base: Graph,
    pub parts: Vec<(usize, PartKind)>,
}

impl ExpansionSpec {
    pub fn new(base: Graph, parts: Vec<(usize, PartKind)>) -> Result<Self, GraphError> {
        let spec = ExpansionSpec { base, parts };
        spec.validate()?;
        Ok(spec)
    }

    /// `K[base](sizes)`.
    pub fn complete(base: Graph, sizes: &[usize]) -> Result<Self, GraphError> {
        Self::new(base, sizes.iter().map(|&m| (m, PartKind::Complete)).collect())
    }

    /// `I[base](sizes)`.
    pub fn independent(base: Graph, sizes: &[usize]) -> Result<Self, GraphError> {
        Self::new(base, sizes.iter().map(|&m| (m, PartKind::Independent)).collect())
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.parts.len() != self.base.n() {
            return Err(GraphError::BadParam(format!(
                "{} part sizes for a base graph on {} vertices",
                self.parts.len(),
                self.base.n()
            )));
        }
        if let Some(i) = self.parts.iter().position(|&(m, _)| m == 0) {
            return Err(GraphError::BadParam(format!("part {i} has size 0")));
        }
        let total: usize = self.parts.iter().map(|p| p.0).sum();
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        Ok(())
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.0).collect()
    }
}

/// An expanded graph together with its part structure.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub graph: Graph,
    /// `part_of[v]` is the base vertex that `v` replaces.
    pub part_of: Vec<Vertex>,
    pub parts: Vec<VertexSet>,
}

/// Expands `spec`. Part `i` occupies a contiguous id range, parts in base order.
pub fn expand(spec: &ExpansionSpec) -> Result<Expansion, GraphError> {
    spec.validate()?;
    let total: usize = spec.parts.iter().map(|p| p.0).sum();
    let mut g = Graph::empty(total)?;
    let mut parts = Vec::with_capacity(spec.parts.len());
    let mut part_of = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    let mut next = 0;
    for (i, &(m, _)) in spec.parts.iter().enumerate() {
        parts.push((next..next + m).collect::<VertexSet>());
        for j in 0..m {
            part_of.push(i);
            labels.push(format!("{i}.{j}"));
        }
        next += m;
    }
    for (i, &(_, kind)) in spec.parts.iter().enumerate() {
        if kind == PartKind::Complete {
            let p = parts[i].to_vec();
            for (a, &u) in p.iter().enumerate() {
                for &v in &p[a + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
    }
    for (i, j) in spec.base.edges() {
        for u in parts[i] {
            for v in parts[j] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(Expansion { graph: g.with_labels(labels)?, part_of, parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named;

    fn c(n: usize) -> Graph {
        make_named("C", &[n]).unwrap()
    }

    #[test]
    fn unit_expansion_is_identity() {
        let e = expand(&ExpansionSpec::complete(c(5), &[1; 5]).unwrap()).unwrap();
        assert_eq!(e.graph, c(5));
    }

    #[test]
    fn independent_c5_edge_count() {
        let e = expand(&ExpansionSpec::independent(c(5), &[2, 1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!((e.graph.n(), e.graph.edge_count()), (6, 7));
    }

    #[test]
    fn complete_c6_edge_count() {
        // 2 internal edges (two K2 parts) and cross edges 4+2+1+1+1+2 = 11
        let e = expand(&ExpansionSpec::complete(c(6), &[2, 2, 1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!((e.graph.n(), e.graph.edge_count()), (8, 13));
        assert_eq!(e.part_of, vec![0, 0, 1, 1, 2, 3, 4, 5]);
        assert_eq!(e.graph.labels().unwrap()[3], "1.1");
    }

    #[test]
    fn spec_validation() {
        assert!(ExpansionSpec::complete(c(5), &[1, 1, 1, 1]).is_err());
        assert!(ExpansionSpec::complete(c(5), &[1, 0, 1, 1, 1]).is_err());
        assert!(ExpansionSpec::complete(c(5), &[30, 30, 3, 1, 1]).is_err());
    }
}
