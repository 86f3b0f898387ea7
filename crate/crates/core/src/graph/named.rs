use super::{Graph, GraphError};

/// Builds one of the named graphs.
///
/// Families take a size parameter: `P` (path), `C` (cycle, n >= 3), `K`
/// (complete), `W` (wheel on n rim vertices, hub is vertex 0). Fixed graphs:
/// `K1_3`/`Claw`, `P2uP3`, `P2uP3_bar`, `P5_bar`, `Kite`, `Bull`, `Dart`,
/// `Petersen`. Names are case-insensitive.
pub fn make_named(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let lower = name.to_ascii_lowercase();
    let family = |min: usize| -> Result<usize, GraphError> {
        match params {
            [n] if *n >= min => Ok(*n),
            [n] => Err(GraphError::BadParam(format!("{name}{n}: size must be at least {min}"))),
            _ => Err(GraphError::BadParam(format!("{name} takes exactly one size parameter"))),
        }
    };
    let fixed = |edges: &[(usize, usize)], n: usize| -> Result<Graph, GraphError> {
        if !params.is_empty() {
            return Err(GraphError::BadParam(format!("{name} takes no parameters")));
        }
        Graph::from_edges(n, edges)
    };
    match lower.as_str() {
        "p" => {
            let n = family(1)?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        "c" => {
            let n = family(3)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        "k" => {
            let n = family(1)?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        "w" => {
            let n = family(3)?;
            let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
            edges.extend((0..n).map(|i| (1 + i, 1 + (i + 1) % n)));
            Graph::from_edges(n + 1, &edges)
        }
        "k1_3" | "claw" => fixed(&[(0, 1), (0, 2), (0, 3)], 4),
        "p2up3" => fixed(&[(0, 1), (2, 3), (3, 4)], 5),
        "p2up3_bar" => Ok(fixed(&[(0, 1), (2, 3), (3, 4)], 5)?.complement()),
        "p5_bar" => Ok(make_named("P", &[5])?.complement()),
        // diamond 0,1,2,3 missing edge 0-3; pendant 4 on a degree-2 vertex
        "kite" => fixed(&[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)], 5),
        // same diamond; pendant 4 on a degree-3 vertex
        "dart" => fixed(&[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)], 5),
        "bull" => fixed(&[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)], 5),
        "petersen" => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            fixed(&edges, 10)
        }
        _ => Err(GraphError::UnknownName(name.to_string())),
    }
}
