use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{cycle, violation, StructureError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::pattern::{for_each_embedding, is_split, MAX_PATTERN};

/// What each module of a recognized expansion may look like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleFilter {
    Complete,
    Independent,
    /// Each module a clique or an independent set; singletons report `Complete`.
    CompleteOrIndependent,
    /// Each module a split graph; the clique part is maximum.
    Split,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ModuleKind {
    Complete,
    Independent,
    Split { clique: VertexSet, independent: VertexSet },
    Arbitrary,
}

/// Partition of a graph into modules realizing a base graph: module `i` and
/// module `j` are fully joined when `ij` is a base edge, otherwise anticomplete.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionStructure {
    pub base: Graph,
    pub modules: Vec<VertexSet>,
    pub kinds: Vec<ModuleKind>,
}

impl ExpansionStructure {
    pub fn sizes(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.len()).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        self.modules.iter().fold(VertexSet::EMPTY, |acc, &m| acc | m)
    }

    pub fn module_of(&self, v: Vertex) -> Option<usize> {
        self.modules.iter().position(|m| m.contains(v))
    }

    /// Clique parts of split modules (whole module for complete ones).
    pub fn clique_parts(&self) -> Vec<VertexSet> {
        self.modules
            .iter()
            .zip(&self.kinds)
            .map(|(&m, k)| match *k {
                ModuleKind::Split { clique, .. } => clique,
                _ => m,
            })
            .collect()
    }

    /// Translates vertex ids through `map` (subgraph id -> host id).
    pub fn remap(&self, map: &[Vertex]) -> Self {
        let tr = |s: VertexSet| s.iter().map(|v| map[v]).collect::<VertexSet>();
        ExpansionStructure {
            base: self.base.clone(),
            modules: self.modules.iter().map(|&m| tr(m)).collect(),
            kinds: self
                .kinds
                .iter()
                .map(|k| match *k {
                    ModuleKind::Split { clique, independent } => {
                        ModuleKind::Split { clique: tr(clique), independent: tr(independent) }
                    }
                    other => other,
                })
                .collect(),
        }
    }

    /// Checks that the modules partition `within`, realize the base
    /// adjacency and satisfy their kind claims.
    pub fn validate(&self, g: &Graph, within: VertexSet) -> Result<(), StructureError> {
        let b = self.base.n();
        if self.modules.len() != b || self.kinds.len() != b {
            return Err(violation("module count differs from base size"));
        }
        let mut seen = VertexSet::EMPTY;
        for &m in &self.modules {
            if m.is_empty() || !m.is_disjoint(seen) {
                return Err(violation(format!("module {m:?} is empty or overlaps another")));
            }
            seen |= m;
        }
        if seen != within {
            return Err(violation(format!("modules cover {seen:?}, expected {within:?}")));
        }
        for i in 0..b {
            for j in i + 1..b {
                let (mi, mj) = (self.modules[i], self.modules[j]);
                let ok =
                    if self.base.has_edge(i, j) { g.is_complete_between(mi, mj) } else { g.no_edges_between(mi, mj) };
                if !ok {
                    return Err(violation(format!("modules {i} and {j} do not follow the base adjacency")));
                }
            }
            let m = self.modules[i];
            let ok = match self.kinds[i] {
                ModuleKind::Complete => g.is_clique(m),
                ModuleKind::Independent => g.is_independent(m),
                ModuleKind::Split { clique, independent } => {
                    clique | independent == m
                        && clique.is_disjoint(independent)
                        && g.is_clique(clique)
                        && g.is_independent(independent)
                }
                ModuleKind::Arbitrary => true,
            };
            if !ok {
                return Err(violation(format!("module {i} does not match its kind {:?}", self.kinds[i])));
            }
        }
        Ok(())
    }
}

fn classify_module(g: &Graph, m: VertexSet, filter: ModuleFilter) -> Option<ModuleKind> {
    match filter {
        ModuleFilter::Complete => g.is_clique(m).then_some(ModuleKind::Complete),
        ModuleFilter::Independent => g.is_independent(m).then_some(ModuleKind::Independent),
        ModuleFilter::CompleteOrIndependent => {
            if g.is_clique(m) {
                Some(ModuleKind::Complete)
            } else {
                g.is_independent(m).then_some(ModuleKind::Independent)
            }
        }
        ModuleFilter::Split => {
            let (sub, map) = g.induced_with_map(m).expect("module inside graph");
            let p = is_split(&sub)?;
            let tr = |s: VertexSet| s.iter().map(|v| map[v]).collect::<VertexSet>();
            Some(ModuleKind::Split { clique: tr(p.clique), independent: tr(p.independent) })
        }
        ModuleFilter::Any => Some(ModuleKind::Arbitrary),
    }
}

/// Finds a partition of `g` into `base.n()` modules realizing `base`.
///
/// Every induced copy of `base` is tried as a set of module representatives;
/// each other vertex is placed in a module whose adjacency to the
/// representatives it matches, with backtracking when several fit. Module
/// indices are then relabeled by the base automorphism giving the
/// lexicographically least list of module minima.
pub fn recognize_expansion(g: &Graph, base: &Graph, filter: ModuleFilter) -> Option<ExpansionStructure> {
    if base.n() == 0 || base.n() > MAX_PATTERN || base.n() > g.n() {
        return None;
    }
    let mut found = None;
    for_each_embedding(g, base, |reps| match assign_modules(g, base, reps, filter) {
        Some(modules) => {
            found = Some(modules);
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    let modules = canonical_order(base, found?);
    let kinds = modules.iter().map(|&m| classify_module(g, m, filter).expect("checked during search")).collect();
    Some(ExpansionStructure { base: base.clone(), modules, kinds })
}

fn assign_modules(g: &Graph, base: &Graph, reps: &[Vertex], filter: ModuleFilter) -> Option<Vec<VertexSet>> {
    let b = base.n();
    let rep_set: VertexSet = reps.iter().collect();
    let signature: Vec<VertexSet> = (0..b).map(|i| base.neighbors(i).iter().map(|j| reps[j]).collect()).collect();
    let others = (g.vertex_set() - rep_set).to_vec();
    let mut cands = Vec::with_capacity(others.len());
    for &x in &others {
        let seen = g.neighbors(x) & rep_set;
        let c: Vec<usize> = (0..b).filter(|&i| seen.without(reps[i]) == signature[i]).collect();
        if c.is_empty() {
            return None;
        }
        cands.push(c);
    }
    let mut modules: Vec<VertexSet> = reps.iter().map(|&r| VertexSet::singleton(r)).collect();
    place(g, base, filter, &others, &cands, 0, &mut modules).then_some(modules)
}

fn place(
    g: &Graph,
    base: &Graph,
    filter: ModuleFilter,
    others: &[Vertex],
    cands: &[Vec<usize>],
    idx: usize,
    modules: &mut [VertexSet],
) -> bool {
    if idx == others.len() {
        return modules.iter().all(|&m| classify_module(g, m, filter).is_some());
    }
    let x = others[idx];
    let nx = g.neighbors(x);
    for &i in &cands[idx] {
        let fits = (0..base.n()).all(|j| {
            if j == i {
                match filter {
                    ModuleFilter::Complete => modules[i].is_subset(nx),
                    ModuleFilter::Independent => modules[i].is_disjoint(nx),
                    _ => true,
                }
            } else if base.has_edge(i, j) {
                modules[j].is_subset(nx)
            } else {
                modules[j].is_disjoint(nx)
            }
        });
        if fits {
            modules[i].insert(x);
            if place(g, base, filter, others, cands, idx + 1, modules) {
                return true;
            }
            modules[i].remove(x);
        }
    }
    false
}

fn canonical_order(base: &Graph, modules: Vec<VertexSet>) -> Vec<VertexSet> {
    let mut best: Option<Vec<VertexSet>> = None;
    for_each_embedding(base, base, |sigma| {
        let cand: Vec<VertexSet> = sigma.iter().map(|&s| modules[s]).collect();
        let key = |m: &[VertexSet]| m.iter().map(|s| s.first()).collect::<Vec<_>>();
        if best.as_ref().is_none_or(|b| key(&cand) < key(b)) {
            best = Some(cand);
        }
        ControlFlow::Continue(())
    });
    best.expect("identity is an automorphism")
}

/// Chromatic number of `K[C5](m)`: the larger of the clique number (best
/// adjacent pair) and half the vertex count rounded up.
pub fn chi_formula_kc5(m: &[usize]) -> Result<usize, StructureError> {
    if m.len() != 5 || m.contains(&0) {
        return Err(StructureError::BadParam(format!("expected five positive sizes, got {m:?}")));
    }
    let omega = (0..5).map(|i| m[i] + m[(i + 1) % 5]).max().unwrap();
    let n: usize = m.iter().sum();
    Ok(omega.max(n.div_ceil(2)))
}

/// `C5(S_1..S_5) + H`: a split expansion of C5 joined to a clique `H`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitC5PlusClique {
    /// Vertices adjacent to every other vertex.
    pub h: VertexSet,
    pub expansion: ExpansionStructure,
}

/// No vertex of a C5 expansion is universal, so `H` is exactly the set of
/// universal vertices; the rest must be a split expansion of C5.
pub fn recognize_split_c5_plus_clique(g: &Graph) -> Option<SplitC5PlusClique> {
    let all = g.vertex_set();
    let h: VertexSet = g.vertices().filter(|&v| g.neighbors(v) == all.without(v)).collect();
    let (sub, map) = g.induced_with_map(all - h).ok()?;
    let expansion = recognize_expansion(&sub, &cycle(5), ModuleFilter::Split)?.remap(&map);
    Some(SplitC5PlusClique { h, expansion })
}
