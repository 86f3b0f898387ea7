use std::sync::Arc;

use super::{Strategy, StrategyError, StrategyResult};
use crate::game::{Color, ColorSet, GameState};
use crate::graph::{Graph, Vertex, VertexSet};

/// Runs a strategy on an induced subgraph with a virtual palette.
///
/// Sub-color `i + 1` stands for `palette[i]`. Ben still colors from the
/// true legal set; a color outside the virtual palette on a subgraph
/// vertex contradicts the structure that justified the palette and is
/// reported as a violation.
#[derive(Clone)]
pub(crate) struct SubGame {
    graph: Arc<Graph>,
    map: Vec<Vertex>,
    vertices: VertexSet,
    palette: Vec<Color>,
    inner: Box<dyn Strategy>,
}

impl SubGame {
    pub fn new(
        host: &Graph,
        vertices: VertexSet,
        palette: ColorSet,
        make: impl FnOnce(&Graph, usize) -> StrategyResult,
    ) -> Result<Self, StrategyError> {
        if palette.is_empty() {
            return Err(StrategyError::StructureViolation(format!("no colors left for {vertices:?}")));
        }
        let (graph, map) = host.induced_with_map(vertices).map_err(|e| StrategyError::NotApplicable(e.to_string()))?;
        let inner = make(&graph, palette.len())?;
        Ok(SubGame { graph: Arc::new(graph), map, vertices, palette: palette.to_vec(), inner })
    }

    /// Next host vertex, or `None` once every subgraph vertex is colored.
    pub fn next(&mut self, host: &GameState) -> Result<Option<Vertex>, StrategyError> {
        if self.vertices.is_subset(host.colored()) {
            return Ok(None);
        }
        let mut coloring = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            if let Some(c) = host.color(v) {
                let idx = self.palette.iter().position(|&p| p == c).ok_or_else(|| {
                    StrategyError::StructureViolation(format!(
                        "vertex {v} got color {c}, outside the palette {:?} reserved for it",
                        self.palette
                    ))
                })?;
                coloring[i] = idx as Color + 1;
            }
        }
        let sub = GameState::from_coloring(Arc::clone(&self.graph), self.palette.len(), &coloring)?;
        let v = self.inner.next_vertex(&sub)?;
        self.map.get(v).copied().map(Some).ok_or(StrategyError::Exhausted)
    }

    pub fn log(&self) -> Vec<String> {
        self.inner.log()
    }
}
