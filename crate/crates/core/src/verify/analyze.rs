use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::game::{alpha_exact, chi_exact, chi_i_with, omega_exact, SolverConfig, CHI_LIMIT, CLIQUE_LIMIT};
use crate::graph::{degeneracy, write_graph6, Graph};
use crate::pattern::{family, find_family_member, is_bipartite, is_chordal, is_split, Witness};
use crate::structure::{
    cycle, decompose_p5c4, decompose_p5k4kitebull, decompose_p6c5claw, recognize_expansion, sumner_classify,
    Decomposition, ModuleFilter, StructureError,
};

/// Names accepted by [`decompose`].
pub const DECOMPOSE_NAMES: &[&str] =
    &["auto", "p5k4kitebull", "p6c5claw", "p5c4", "sumner", "kc5", "kc6", "icn", "split_c5"];

/// Forbidden families reported by [`class_flags`].
const FAMILIES: &[&[&str]] = &[
    &["P5", "K4", "Kite", "Bull"],
    &["P6", "C5", "K1_3"],
    &["P6", "C5", "P5_bar", "K1_3"],
    &["P5", "C4"],
    &["P5", "K3"],
    &["P2uP3", "C4"],
    &["P5", "P2uP3_bar", "P5_bar", "Dart"],
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlag {
    pub name: String,
    pub member: bool,
    /// Forbidden subgraph found, for non-members of a family class.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Compute the per-k winnable table and the indicated chromatic number.
    pub exact: bool,
    pub kmax: Option<usize>,
    pub budget: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { exact: false, kmax: None, budget: SolverConfig::default().node_budget }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
    pub max_degree: usize,
    /// Absent above the exact coloring limit.
    pub chi: Option<usize>,
    pub omega: Option<usize>,
    pub alpha: Option<usize>,
    pub col: usize,
    pub classes: Vec<ClassFlag>,
    pub decomposition: Option<Decomposition>,
    pub chi_i: Option<usize>,
    /// `winnable[k - 1]` for `k = 1..=kmax`.
    pub winnable: Option<Vec<bool>>,
    pub monotone: Option<bool>,
}

/// Membership in the bipartite, chordal and split classes and in each
/// forbidden family, with witnesses.
pub fn class_flags(g: &Graph) -> Vec<ClassFlag> {
    let simple = |name: &str, member: bool| ClassFlag { name: name.into(), member, witness: None };
    let mut out = vec![
        simple("bipartite", is_bipartite(g).is_some()),
        simple("chordal", is_chordal(g).is_some()),
        simple("split", is_split(g).is_some()),
    ];
    for names in FAMILIES {
        let witness = find_family_member(g, &family(names)).expect("family patterns are small");
        out.push(ClassFlag { name: format!("{{{}}}-free", names.join(",")), member: witness.is_none(), witness });
    }
    out
}

/// Runs the named decomposer; `auto` returns the first that succeeds.
pub fn decompose(g: &Graph, name: &str) -> Result<Option<Decomposition>, VerifyError> {
    let expansion = |base_n: usize, filter| {
        recognize_expansion(g, &cycle(base_n), filter).map(Decomposition::Expansion).ok_or(StructureError::NoInducedC5)
    };
    let attempt = |name: &str| -> Result<Decomposition, StructureError> {
        match name {
            "p5k4kitebull" => decompose_p5k4kitebull(g).map(Decomposition::P5k4kitebull),
            "p6c5claw" => decompose_p6c5claw(g).map(Decomposition::P6c5claw),
            "p5c4" => decompose_p5c4(g).map(Decomposition::P5c4),
            "sumner" => sumner_classify(g).map(|components| Decomposition::Sumner { components }),
            "kc5" => expansion(5, ModuleFilter::Complete),
            "kc6" => expansion(6, ModuleFilter::Complete),
            "split_c5" => expansion(5, ModuleFilter::Split),
            "icn" => (3..=g.n().min(8))
                .find_map(|n| recognize_expansion(g, &cycle(n), ModuleFilter::Independent))
                .map(Decomposition::Expansion)
                .ok_or(StructureError::NoInducedC5),
            _ => unreachable!("checked against DECOMPOSE_NAMES"),
        }
    };
    if !DECOMPOSE_NAMES.contains(&name) {
        return Err(VerifyError::UnknownDecomposition(name.to_string()));
    }
    if name == "auto" {
        return Ok(DECOMPOSE_NAMES[1..].iter().find_map(|n| attempt(n).ok()));
    }
    Ok(attempt(name).ok())
}

/// Parameters, class memberships, an optional decomposition and, with
/// `exact`, the winnable table.
pub fn analyze(g: &Graph, decomposition: Option<&str>, opts: &AnalyzeOptions) -> Result<Analysis, VerifyError> {
    let small = g.n() <= CHI_LIMIT;
    let mut a = Analysis {
        n: g.n(),
        edges: g.edge_count(),
        graph6: if g.n() <= 62 { write_graph6(g) } else { String::new() },
        max_degree: g.max_degree(),
        chi: if small { Some(chi_exact(g)?) } else { None },
        omega: if g.n() <= CLIQUE_LIMIT { Some(omega_exact(g)?) } else { None },
        alpha: if g.n() <= CLIQUE_LIMIT { Some(alpha_exact(g)?) } else { None },
        col: degeneracy(g).col,
        classes: class_flags(g),
        decomposition: match decomposition {
            Some(name) => decompose(g, name)?,
            None => None,
        },
        chi_i: None,
        winnable: None,
        monotone: None,
    };
    if opts.exact {
        let kmax = opts.kmax.unwrap_or(g.n().max(1));
        let config = SolverConfig { node_budget: opts.budget, ..SolverConfig::default() };
        let r = chi_i_with(g, kmax, config)?;
        a.monotone = Some(r.is_monotone());
        a.chi_i = Some(r.chi_i);
        a.winnable = Some(r.winnable);
    }
    Ok(a)
}
