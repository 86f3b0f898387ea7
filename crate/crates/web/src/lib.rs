//! Browser bindings. Every export takes plain strings and numbers and
//! returns a JSON string; errors become JS exceptions.
//!
//! The `*_json` functions hold the logic and are callable natively.

use std::f64::consts::PI;

use indicol_core::game::{play_match, BenPolicy, MatchReport};
use indicol_core::strategy::make_strategy;
use indicol_core::verify::{analyze as analyze_graph, read_graph, Analysis, AnalyzeOptions};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest graph for which the page solves the game exactly.
pub const EXACT_LIMIT: usize = 12;

#[derive(Debug, Serialize)]
pub struct Layout {
    pub n: usize,
    /// Unit-square coordinates per vertex.
    pub points: Vec<(f64, f64)>,
    pub edges: Vec<(usize, usize)>,
    pub labels: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct WebAnalysis {
    #[serde(flatten)]
    pub analysis: Analysis,
    /// Set when the graph is too large for the exact solver in the page.
    pub note: Option<String>,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Invariants and class flags, plus the winnable table for small graphs.
pub fn analyze_json(expr: &str) -> Result<String, String> {
    let g = read_graph(expr, false).map_err(|e| e.to_string())?;
    let exact = g.n() <= EXACT_LIMIT;
    let opts = AnalyzeOptions { exact, ..AnalyzeOptions::default() };
    let analysis = analyze_graph(&g, Some("auto"), &opts).map_err(|e| e.to_string())?;
    let note = (!exact).then(|| format!("game not solved above {EXACT_LIMIT} vertices"));
    Ok(to_json(&WebAnalysis { analysis, note }))
}

/// One match of the named strategy against the optimal Ben.
pub fn play_json(expr: &str, k: usize, strategy: &str) -> Result<String, String> {
    let g = read_graph(expr, false).map_err(|e| e.to_string())?;
    let s = make_strategy(strategy, &g, k).map_err(|e| e.to_string())?;
    let r: MatchReport = play_match(&g, k, s, &BenPolicy::Optimal).map_err(|e| e.to_string())?;
    Ok(to_json(&r))
}

/// Circular layout with a short spring relaxation, deterministic.
pub fn layout_json(expr: &str) -> Result<String, String> {
    let g = read_graph(expr, false).map_err(|e| e.to_string())?;
    let n = g.n();
    let mut pts: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / n.max(1) as f64 - PI / 2.0;
            (0.5 + 0.4 * a.cos(), 0.5 + 0.4 * a.sin())
        })
        .collect();
    let ideal = 0.9 / (n.max(1) as f64).sqrt();
    for step in 0..200 {
        let temp = 0.05 * (1.0 - step as f64 / 200.0);
        let mut disp = vec![(0.0f64, 0.0f64); n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let (dx, dy) = (pts[u].0 - pts[v].0, pts[u].1 - pts[v].1);
                let d = (dx * dx + dy * dy).sqrt().max(1e-3);
                let mut f = ideal * ideal / d;
                if g.has_edge(u, v) {
                    f -= d * d / ideal;
                }
                disp[u].0 += dx / d * f;
                disp[u].1 += dy / d * f;
            }
        }
        for (p, (dx, dy)) in pts.iter_mut().zip(disp) {
            let len = (dx * dx + dy * dy).sqrt().max(1e-9);
            let s = len.min(temp) / len;
            p.0 = (p.0 + dx * s).clamp(0.05, 0.95);
            p.1 = (p.1 + dy * s).clamp(0.05, 0.95);
        }
    }
    let labels = match g.labels() {
        Some(l) => l.to_vec(),
        None => (0..n).map(|v| v.to_string()).collect(),
    };
    Ok(to_json(&Layout { n, points: pts, edges: g.edges().collect(), labels }))
}

#[wasm_bindgen]
pub fn analyze(expr: &str) -> Result<String, JsError> {
    analyze_json(expr).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn play(expr: &str, k: usize, strategy: &str) -> Result<String, JsError> {
    play_json(expr, k, strategy).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn layout(expr: &str) -> Result<String, JsError> {
    layout_json(expr).map_err(|e| JsError::new(&e))
}

/// Registered strategy names, as a JSON array.
#[wasm_bindgen]
pub fn strategies() -> String {
    to_json(&indicol_core::strategy::STRATEGY_NAMES)
}
