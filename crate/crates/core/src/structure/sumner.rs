use serde::{Deserialize, Serialize};

use super::{cycle, recognize_expansion, require_free, violation, ExpansionStructure, ModuleFilter, StructureError};
use crate::graph::{Graph, VertexSet};
use crate::pattern::is_bipartite;

/// Certified shape of one component of a {P5, K3}-free graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ComponentClass {
    Bipartite { vertices: VertexSet, parts: (VertexSet, VertexSet) },
    Ic5Expansion { vertices: VertexSet, structure: ExpansionStructure },
}

impl ComponentClass {
    pub fn vertices(&self) -> VertexSet {
        match self {
            ComponentClass::Bipartite { vertices, .. } | ComponentClass::Ic5Expansion { vertices, .. } => *vertices,
        }
    }
}

/// Certifies the component `comp` of `g` as bipartite or as `I[C5]`, in
/// host vertex ids. `None` if it is neither.
pub fn classify_component(g: &Graph, comp: VertexSet) -> Option<ComponentClass> {
    let (sub, map) = g.induced_with_map(comp).ok()?;
    let tr = |s: VertexSet| s.iter().map(|v| map[v]).collect::<VertexSet>();
    if let Some((a, b)) = is_bipartite(&sub) {
        return Some(ComponentClass::Bipartite { vertices: comp, parts: (tr(a), tr(b)) });
    }
    let s = recognize_expansion(&sub, &cycle(5), ModuleFilter::Independent)?;
    Some(ComponentClass::Ic5Expansion { vertices: comp, structure: s.remap(&map) })
}

/// Each component of a {P5, K3}-free graph is bipartite or an independent
/// expansion of C5. Components are listed by least vertex.
pub fn sumner_classify(g: &Graph) -> Result<Vec<ComponentClass>, StructureError> {
    require_free(g, &["P5", "K3"])?;
    g.components()
        .into_iter()
        .map(|comp| {
            classify_component(g, comp)
                .ok_or_else(|| violation(format!("component {comp:?} is neither bipartite nor I[C5]")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    #[test]
    fn c5_and_union() {
        let c = sumner_classify(&parse_expr("C5").unwrap()).unwrap();
        assert!(matches!(&c[..], [ComponentClass::Ic5Expansion { structure, .. }] if structure.sizes() == vec![1; 5]));
        let c = sumner_classify(&parse_expr("P4 | C5").unwrap()).unwrap();
        assert!(matches!(c[0], ComponentClass::Bipartite { .. }));
        assert!(matches!(c[1], ComponentClass::Ic5Expansion { .. }));
        assert_eq!(c[1].vertices(), (4..9).collect());
    }

    #[test]
    fn c7_contains_p5() {
        match sumner_classify(&parse_expr("C7").unwrap()) {
            Err(StructureError::NotInClass(w)) => assert_eq!(w.pattern, "P5"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
