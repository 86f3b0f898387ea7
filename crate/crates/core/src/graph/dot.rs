use std::fmt::Write;

use super::Graph;

const PALETTE: [&str; 10] =
    ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#fabed4", "#469990"];

/// Graphviz rendering. `colors[v]` is a 1-based game color, 0 for uncolored.
pub fn to_dot(g: &Graph, colors: Option<&[u8]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = write!(out, "  {v} [label=\"{v}\"");
        if let Some(&c) = colors.and_then(|cs| cs.get(v)) {
            if c > 0 {
                let fill = PALETTE[(c as usize - 1) % PALETTE.len()];
                let _ = write!(out, ", color={c}, style=filled, fillcolor=\"{fill}\"");
            }
        }
        out.push_str("];\n");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
