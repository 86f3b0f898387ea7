//! Structural decompositions and chromatic formulas.
//!
//! Every decomposer re-validates the properties it promises before
//! returning, so a class check and a decomposition cross-verify each other.

mod expansion;
mod p5c4;
mod sumner;
mod thm3;
mod thm8;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{make_named, Graph};
use crate::pattern::{family, find_family_member, Witness};

pub use expansion::{
    chi_formula_kc5, recognize_expansion, recognize_split_c5_plus_clique, ExpansionStructure, ModuleFilter, ModuleKind,
    SplitC5PlusClique,
};
pub use p5c4::{decompose_p5c4, P5C4Decomposition, Pod};
pub use sumner::{classify_component, sumner_classify, ComponentClass};
pub use thm3::{chi_p5k4kitebull, decompose_p5k4kitebull, Thm3Decomposition};
pub use thm8::{decompose_p6c5claw, Thm8Structure};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is outside the class: induced {} at {:?}", .0.pattern, .0.embedding.map)]
    NotInClass(Witness),
    #[error("graph has no induced C5")]
    NoInducedC5,
    #[error("graph has no induced C6")]
    NoInducedC6,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
}

pub(crate) fn violation(msg: impl Into<String>) -> StructureError {
    StructureError::StructureViolation(msg.into())
}

/// Fails with the first forbidden pattern found, in list order.
pub(crate) fn require_free(g: &Graph, names: &[&str]) -> Result<(), StructureError> {
    match find_family_member(g, &family(names)).expect("forbidden patterns are small") {
        Some(w) => Err(StructureError::NotInClass(w)),
        None => Ok(()),
    }
}

pub(crate) fn cycle(n: usize) -> Graph {
    make_named("C", &[n]).expect("cycle length >= 3")
}

/// Any certified decomposition, tagged for reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Decomposition {
    P5k4kitebull(Thm3Decomposition),
    P6c5claw(Thm8Structure),
    P5c4(P5C4Decomposition),
    Sumner { components: Vec<ComponentClass> },
    Expansion(ExpansionStructure),
}
