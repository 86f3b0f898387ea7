//! Text and DOT renderings; JSON goes through serde directly.

use std::fmt::Write;

use indicol_core::game::{MatchReport, Move, Outcome};
use indicol_core::graph::{parse_graph6, to_dot, Graph};
use indicol_core::verify::{Analysis, Record, VerificationReport};

use crate::Lists;

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn outcome(o: Outcome) -> &'static str {
    match o {
        Outcome::AnnWins => "ANN_WINS",
        Outcome::BenWins => "BEN_WINS",
    }
}

fn table(winnable: &[bool]) -> String {
    winnable
        .iter()
        .enumerate()
        .map(|(i, &w)| format!("{}:{}", i + 1, if w { "win" } else { "lose" }))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn analysis(a: &Analysis) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph6      {}", a.graph6);
    let _ = writeln!(s, "vertices    {}  edges {}  max degree {}", a.n, a.edges, a.max_degree);
    let _ = writeln!(s, "chi {}  omega {}  alpha {}  col {}", opt(a.chi), opt(a.omega), opt(a.alpha), a.col);
    s.push_str("classes\n");
    let width = a.classes.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &a.classes {
        let mark = if c.member { "yes".to_string() } else { "no".to_string() };
        let witness =
            c.witness.as_ref().map(|w| format!("  ({} at {:?})", w.pattern, w.embedding.map)).unwrap_or_default();
        let _ = writeln!(s, "  {:width$}  {mark}{witness}", c.name);
    }
    if let Some(d) = &a.decomposition {
        let _ = writeln!(s, "decomposition {}", serde_json::to_string(d).expect("serializable"));
    }
    if let Some(chi_i) = a.chi_i {
        let _ = writeln!(s, "chi_i       {chi_i}");
    }
    if let Some(w) = &a.winnable {
        let _ = writeln!(s, "winnable    {}", table(w));
    }
    if let Some(m) = a.monotone {
        let _ = writeln!(s, "monotone    {}", if m { "yes" } else { "no" });
    }
    s
}

pub fn match_report(r: &MatchReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "strategy {}  k {}  ben {}", r.strategy, r.k, r.ben);
    for (i, Move { vertex, color }) in r.transcript.iter().enumerate() {
        let _ = writeln!(s, "  {:>3}. vertex {vertex} -> color {color}", i + 1);
    }
    if let Some(v) = r.blocked {
        let _ = writeln!(s, "  vertex {v} presented with no legal color");
    }
    let _ = writeln!(s, "{}  ({} positions evaluated)", outcome(r.outcome), r.positions);
    for line in &r.log {
        let _ = writeln!(s, "  log: {line}");
    }
    s
}

fn coloring(n: usize, moves: &[Move]) -> Vec<u8> {
    let mut colors = vec![0; n];
    for m in moves {
        colors[m.vertex] = m.color;
    }
    colors
}

pub fn match_dot(g: &Graph, r: &MatchReport) -> String {
    to_dot(g, Some(&coloring(g.n(), &r.transcript)))
}

fn record_line(r: &Record) -> String {
    let head = format!("#{:<4} {:<12} n={:<2} chi={}", r.index, r.graph6, r.n, opt(r.chi));
    let status = if let Some(e) = &r.error {
        format!("ERROR {e}")
    } else if !r.violations.is_empty() {
        format!("VIOLATION {}", r.violations.join("; "))
    } else if let Some(why) = &r.skipped {
        format!("skipped ({why})")
    } else {
        let games = r.outcomes.iter().filter(|o| o.outcome.is_some()).count();
        let extra = r.chi_i.map(|c| format!(" chi_i={c}")).unwrap_or_default();
        let games = if games > 0 { format!(" ({games} games)") } else { String::new() };
        format!("ok{extra}{games}")
    };
    format!("{head}  {status}")
}

pub fn report(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", r.command, r.parameter);
    for rec in &r.records {
        let _ = writeln!(s, "{}", record_line(rec));
    }
    let m = &r.summary;
    let _ = writeln!(
        s,
        "records {}  checked {}  skipped {}  violations {}  errors {}",
        m.records, m.checked, m.skipped, m.violations, m.errors
    );
    s
}

/// Counterexample graphs, colored by the losing transcript.
pub fn report_dot(r: &VerificationReport) -> String {
    let mut s = String::new();
    for rec in r.records.iter().filter(|rec| !rec.violations.is_empty()) {
        let Ok(g) = parse_graph6(&rec.graph6) else { continue };
        let moves: Vec<Move> = rec.outcomes.iter().filter_map(|o| o.transcript.clone()).next().unwrap_or_default();
        let _ = writeln!(s, "// record {}: {}", rec.index, rec.violations.join("; "));
        s.push_str(&to_dot(&g, Some(&coloring(g.n(), &moves))));
    }
    if s.is_empty() {
        s.push_str("// no counterexamples\n");
    }
    s
}

pub fn lists(l: &Lists) -> String {
    format!(
        "strategies      {}\nclasses         {}\ninvariants      {}\ndecompositions  {}\n",
        l.strategies.join(" "),
        l.classes.join(" "),
        l.invariants.join(" "),
        l.decompositions.join(" ")
    )
}
