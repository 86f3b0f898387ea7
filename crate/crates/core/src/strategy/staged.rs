use super::kc5::strat_kc5;
use super::kc6::strat_kc6;
use super::subgame::SubGame;
use super::{
    strat_auto, strat_cycle_expansion, strat_degeneracy, strat_solver_backed, Strategy, StrategyError, StrategyResult,
};
use crate::game::{ColorSet, GameState};
use crate::graph::{degeneracy, Graph, Vertex, VertexSet};
use crate::pattern::find_induced_cycle;
use crate::structure::{
    chi_formula_kc5, chi_p5k4kitebull, classify_component, cycle, decompose_p5c4, decompose_p5k4kitebull,
    recognize_expansion, recognize_split_c5_plus_clique, require_free, ComponentClass, ModuleFilter,
};

type Ctor = fn(&Graph, usize) -> StrategyResult;

/// Colors a sub-strategy may use.
#[derive(Debug, Clone, Copy)]
enum PaletteRule {
    Full,
    /// Everything except the colors on these vertices when the stage starts.
    ExcludeColorsOf(VertexSet),
}

#[derive(Clone)]
enum Stage {
    /// Presents the listed vertices in order, skipping colored ones.
    Fixed(Vec<Vertex>),
    Sub {
        vertices: VertexSet,
        rule: PaletteRule,
        make: Ctor,
        game: Option<Box<SubGame>>,
    },
}

/// A strategy played as a sequence of stages, each a fixed vertex list or
/// a sub-strategy on an induced subgraph with its own palette.
#[derive(Clone)]
pub struct Staged {
    name: &'static str,
    stages: Vec<Stage>,
    current: usize,
    log: Vec<String>,
}

impl Staged {
    fn new(name: &'static str, stages: Vec<Stage>) -> Self {
        Staged { name, stages, current: 0, log: Vec::new() }
    }

    fn boxed(self) -> StrategyResult {
        Ok(Box::new(self))
    }
}

fn sub(vertices: VertexSet, rule: PaletteRule, make: Ctor) -> Stage {
    Stage::Sub { vertices, rule, make, game: None }
}

/// A sub stage whose strategy is built now, so applicability and bound
/// errors surface before play.
fn eager(g: &Graph, k: usize, vertices: VertexSet, make: Ctor) -> Result<Stage, StrategyError> {
    let game = SubGame::new(g, vertices, ColorSet::palette(k), make)?;
    Ok(Stage::Sub { vertices, rule: PaletteRule::Full, make, game: Some(Box::new(game)) })
}

impl Strategy for Staged {
    fn name(&self) -> &str {
        self.name
    }

    fn next_vertex(&mut self, s: &GameState) -> Result<Vertex, StrategyError> {
        while let Some(stage) = self.stages.get_mut(self.current) {
            match stage {
                Stage::Fixed(order) => {
                    if let Some(&v) = order.iter().find(|&&v| !s.colored().contains(v)) {
                        return Ok(v);
                    }
                }
                Stage::Sub { vertices, rule, make, game } => {
                    if game.is_none() && !vertices.is_subset(s.colored()) {
                        let palette = match *rule {
                            PaletteRule::Full => s.palette(),
                            PaletteRule::ExcludeColorsOf(set) => s.palette().minus(s.colors_on(set)),
                        };
                        *game = Some(Box::new(SubGame::new(s.graph(), *vertices, palette, *make)?));
                    }
                    if let Some(game) = game {
                        if let Some(v) = game.next(s)? {
                            return Ok(v);
                        }
                        self.log.extend(game.log());
                    }
                }
            }
            self.current += 1;
        }
        Err(StrategyError::Exhausted)
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }

    fn log(&self) -> Vec<String> {
        let mut out = self.log.clone();
        if let Some(Stage::Sub { game: Some(game), .. }) = self.stages.get(self.current) {
            out.extend(game.log());
        }
        out
    }
}

/// Bipartite components by the solver, independent C5 expansions by the
/// cycle strategy.
fn strat_sumner_component(g: &Graph, k: usize) -> StrategyResult {
    match classify_component(g, g.vertex_set()) {
        Some(ComponentClass::Bipartite { .. }) => strat_solver_backed(g, k),
        Some(ComponentClass::Ic5Expansion { .. }) => strat_cycle_expansion(g, k),
        None => Err(StrategyError::NotApplicable("component is neither bipartite nor I[C5]".into())),
    }
}

/// Components in order of least vertex, each played to completion by the
/// first strategy that applies to it.
pub fn strat_union(g: &Graph, k: usize) -> StrategyResult {
    let stages = g.components().into_iter().map(|c| eager(g, k, c, strat_auto)).collect::<Result<_, _>>()?;
    Staged::new("union", stages).boxed()
}

/// Plays each part with the given strategy, built for the subgraph the
/// part induces. Parts must partition the vertices with no edges between them.
pub fn strat_union_with(g: &Graph, k: usize, parts: Vec<(VertexSet, Box<dyn Strategy>)>) -> StrategyResult {
    Staged::new("union", union_stages(g, k, parts)?).boxed()
}

fn union_stages(g: &Graph, k: usize, parts: Vec<(VertexSet, Box<dyn Strategy>)>) -> Result<Vec<Stage>, StrategyError> {
    let mut seen = VertexSet::EMPTY;
    for &(p, _) in &parts {
        let outside = p.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v)) - p;
        if !p.is_disjoint(seen) || !outside.is_empty() {
            return Err(StrategyError::NotApplicable(format!("part {p:?} overlaps or has outside neighbors")));
        }
        seen |= p;
    }
    if seen != g.vertex_set() {
        return Err(StrategyError::NotApplicable("parts do not cover the graph".into()));
    }
    let mut stages = Vec::with_capacity(parts.len());
    for (p, strategy) in parts {
        let game = SubGame::new(g, p, ColorSet::palette(k), |_, _| Ok(strategy))?;
        stages.push(Stage::Sub { vertices: p, rule: PaletteRule::Full, make: strat_auto, game: Some(Box::new(game)) });
    }
    Ok(stages)
}

/// Connected {P5, K4, Kite, Bull}-free graphs with an induced C5: `b` and
/// `x*` first, then the components of `V_1` avoiding `c(b)`, the components
/// of `V_3` avoiding `c(x*)`, then the rest of `B ∪ S`.
pub fn strat_thm7(g: &Graph, k: usize) -> StrategyResult {
    let d = decompose_p5k4kitebull(g)?;
    let bound = chi_p5k4kitebull(&d);
    if k < bound {
        return Err(StrategyError::BoundViolated { k, bound });
    }
    if d.b.is_empty() {
        return strat_cycle_expansion(g, k);
    }
    let b = d.b.first().expect("nonempty");
    let mut stages = vec![Stage::Fixed([Some(b), d.xstar].into_iter().flatten().collect())];
    for c in g.components_within(d.v1()) {
        stages.push(sub(c, PaletteRule::ExcludeColorsOf(VertexSet::singleton(b)), strat_sumner_component));
    }
    if let Some(x) = d.xstar {
        for c in g.components_within(d.v3) {
            stages.push(sub(c, PaletteRule::ExcludeColorsOf(VertexSet::singleton(x)), strat_sumner_component));
        }
    }
    stages.push(Stage::Fixed(d.v2().to_vec()));
    Staged::new("thm7", stages).boxed()
}

/// Split expansions of C5: the clique parts as `K[C5]`, then the
/// independent parts, each of which can copy the color of a clique-part
/// vertex it misses.
pub fn strat_split_c5(g: &Graph, k: usize) -> StrategyResult {
    let s = recognize_expansion(g, &cycle(5), ModuleFilter::Split)
        .ok_or_else(|| StrategyError::NotApplicable("not a split expansion of C5".into()))?;
    let cliques = s.clique_parts();
    let sizes: Vec<usize> = cliques.iter().map(|c| c.len()).collect();
    let bound = chi_formula_kc5(&sizes).expect("five nonempty clique parts");
    if k < bound {
        return Err(StrategyError::BoundViolated { k, bound });
    }
    let core = cliques.iter().fold(VertexSet::EMPTY, |acc, &c| acc | c);
    let stages = vec![eager(g, k, core, strat_kc5)?, Stage::Fixed((g.vertex_set() - core).to_vec())];
    Staged::new("split_c5", stages).boxed()
}

/// `C5(S_1..S_5) + H` with `H` a clique: `H` first, then the split
/// expansion with the colors `H` did not use.
pub fn strat_split_c5_plus_clique(g: &Graph, k: usize) -> StrategyResult {
    let r = recognize_split_c5_plus_clique(g)
        .ok_or_else(|| StrategyError::NotApplicable("not a split expansion of C5 joined to a clique".into()))?;
    let sizes: Vec<usize> = r.expansion.clique_parts().iter().map(|c| c.len()).collect();
    let bound = r.h.len() + chi_formula_kc5(&sizes).expect("five nonempty clique parts");
    if k < bound {
        return Err(StrategyError::BoundViolated { k, bound });
    }
    let rest = g.vertex_set() - r.h;
    let stages = vec![Stage::Fixed(r.h.to_vec()), sub(rest, PaletteRule::ExcludeColorsOf(r.h), strat_split_c5)];
    Staged::new("split_c5_plus_clique", stages).boxed()
}

/// Connected {P5, C4}-free graphs: the chordal part by degeneracy, then
/// each pod as `K[C5]` with the colors its clique neighborhood left free.
pub fn strat_p5c4(g: &Graph, k: usize) -> StrategyResult {
    let d = decompose_p5c4(g)?;
    let (chordal, _) = g.induced_with_map(d.v1).map_err(|e| StrategyError::NotApplicable(e.to_string()))?;
    let mut bound = degeneracy(&chordal).col;
    for pod in &d.pods {
        bound = bound.max(pod.q.len() + chi_formula_kc5(&pod.expansion.sizes()).expect("five nonempty modules"));
    }
    if k < bound {
        return Err(StrategyError::BoundViolated { k, bound });
    }
    let mut stages = Vec::new();
    if !d.v1.is_empty() {
        stages.push(eager(g, k, d.v1, strat_degeneracy)?);
    }
    for pod in &d.pods {
        stages.push(sub(pod.expansion.vertices(), PaletteRule::ExcludeColorsOf(pod.q), strat_kc5));
    }
    Staged::new("p5c4", stages).boxed()
}

/// {P6, C5, P5-bar, K1,3}-free graphs whose components each contain an
/// induced C6: every component is `K[C6]` and is played by its own strategy.
pub fn strat_p6c5_class(g: &Graph, k: usize) -> StrategyResult {
    require_free(g, &["P6", "C5", "P5_bar", "K1_3"])?;
    let mut parts = Vec::new();
    for c in g.components() {
        let (h, _) = g.induced_with_map(c).map_err(|e| StrategyError::NotApplicable(e.to_string()))?;
        if find_induced_cycle(&h, 6).is_none() {
            return Err(StrategyError::NotApplicable(format!("component {c:?} has no induced C6")));
        }
        parts.push((c, strat_kc6(&h, k)?));
    }
    Staged::new("p6c5", union_stages(g, k, parts)?).boxed()
}
