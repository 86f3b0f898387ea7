//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use indicol_core::game::{
    chi_exact, chi_i_with, omega_exact, play_match, reference_table, winnable_table, BenPolicy, GameError, Outcome,
    SolverConfig,
};
use indicol_core::graph::{expand, make_named, parse_graph6, ExpansionSpec, Graph};
use indicol_core::pattern::{
    family, find_induced, is_bipartite, is_chordal, is_family_free, oracle, standard_patterns,
};
use indicol_core::strategy::{
    ledger_cases, ledger_checks, strat_cycle_expansion, strat_kc5, strat_kc6, strat_thm7, StrategyResult,
};
use indicol_core::structure::{
    chi_formula_kc5, chi_p5k4kitebull, decompose_p5k4kitebull, decompose_p6c5claw, recognize_expansion, ModuleFilter,
};
use indicol_core::verify::generate::{random_graph, random_p5k4kitebull, random_p6c5claw};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CONNECTED_LE7: &str = include_str!("data/connected_le7.g6");
const ALL_LE6: &str = include_str!("data/all_le6.g6");

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn corpus(text: &str) -> Vec<Graph> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| parse_graph6(l).expect("fixture is valid graph6")).collect()
}

fn tuples(values: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| values.iter().map(move |&v| [t.clone(), vec![v]].concat())).collect();
    }
    out
}

fn cycle(n: usize) -> Graph {
    make_named("C", &[n]).unwrap()
}

fn kexp(n: usize, m: &[usize]) -> Graph {
    expand(&ExpansionSpec::complete(cycle(n), m).unwrap()).unwrap().graph
}

fn iexp(n: usize, m: &[usize]) -> Graph {
    expand(&ExpansionSpec::independent(cycle(n), m).unwrap()).unwrap().graph
}

/// Plays against the optimal Ben; any error or loss is a failure.
fn must_win(g: &Graph, k: usize, make: fn(&Graph, usize) -> StrategyResult, what: &str) -> Result<u64, String> {
    let s = make(g, k).map_err(|e| format!("{what}, k={k}: {e}"))?;
    let r = play_match(g, k, s, &BenPolicy::Optimal).map_err(|e| format!("{what}, k={k}: {e}"))?;
    if r.outcome != Outcome::AnnWins {
        return Err(format!("{what}, k={k}: Ben wins, transcript {:?}", r.transcript));
    }
    Ok(r.positions)
}

fn c1_formula_kc5() -> Check {
    let all = tuples(&[1, 2, 3], 5);
    for m in &all {
        let chi = chi_exact(&kexp(5, m)).map_err(|e| e.to_string())?;
        let formula = chi_formula_kc5(m).unwrap();
        if chi != formula {
            return Err(format!("K[C5]{m:?}: chi_exact {chi}, formula {formula}"));
        }
    }
    Ok(format!("{} tuples", all.len()))
}

fn c2_balanced() -> Check {
    for m in 1..=3 {
        let chi = chi_exact(&kexp(5, &[m; 5])).map_err(|e| e.to_string())?;
        if chi != (5 * m).div_ceil(2) {
            return Err(format!("m={m}: chi {chi}"));
        }
    }
    Ok("m = 1, 2, 3".into())
}

fn c3_kc5_strategy() -> Check {
    let before = ledger_checks();
    let cases_before = ledger_cases();
    let mut games = 0;
    for m in tuples(&[1, 2], 5) {
        let g = kexp(5, &m);
        let chi = chi_formula_kc5(&m).unwrap();
        for k in (chi..=chi + 2).filter(|&k| k <= 8) {
            must_win(&g, k, strat_kc5, &format!("K[C5]{m:?}"))?;
            games += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let all = tuples(&[1, 2, 3], 5);
    let mut sampled = 0;
    while sampled < 10 {
        let m = &all[rng.random_range(0..all.len())];
        if !m.contains(&3) {
            continue;
        }
        let chi = chi_formula_kc5(m).unwrap();
        must_win(&kexp(5, m), chi, strat_kc5, &format!("K[C5]{m:?}"))?;
        sampled += 1;
    }
    let cases: Vec<u64> = ledger_cases().iter().zip(cases_before).map(|(a, b)| a - b).collect();
    Ok(format!(
        "{games} games on m in {{1,2}}^5, {sampled} sampled m in {{1,2,3}}^5, {} ledger checks, cases 1/2/3 entered {}/{}/{} times",
        ledger_checks() - before,
        cases[0],
        cases[1],
        cases[2]
    ))
}

fn c4_kc6_strategy() -> Check {
    let mut games = 0;
    for m in tuples(&[1, 2], 6) {
        let g = kexp(6, &m);
        let chi = (0..6).map(|i| m[i] + m[(i + 1) % 6]).max().unwrap();
        for k in chi..=chi + 2 {
            must_win(&g, k, strat_kc6, &format!("K[C6]{m:?}"))?;
            games += 1;
        }
    }
    Ok(format!("{games} games"))
}

fn c5_cycle_strategy() -> Check {
    let mut games = 0;
    for n in 4..=7 {
        let chi = if n % 2 == 0 { 2 } else { 3 };
        for m in tuples(&[1, 2], n) {
            let g = iexp(n, &m);
            for k in (chi..=chi + 3).filter(|&k| k <= 6) {
                must_win(&g, k, strat_cycle_expansion, &format!("I[C{n}]{m:?}"))?;
                games += 1;
            }
        }
    }
    Ok(format!("{games} games"))
}

fn c6_bipartite() -> Check {
    let mut count = 0;
    for g in corpus(CONNECTED_LE7).iter().filter(|g| g.n() >= 2 && is_bipartite(g).is_some()) {
        let table = winnable_table(g, 5, SolverConfig::default()).map_err(|e| e.to_string())?;
        if table[0] || !table[1..].iter().all(|&w| w) {
            return Err(format!("{}: table {table:?}", indicol_core::graph::write_graph6(g)));
        }
        count += 1;
    }
    Ok(format!("{count} connected bipartite graphs on 2..7 vertices"))
}

fn c7_sandwich_chordal() -> Check {
    let graphs = corpus(CONNECTED_LE7);
    let mut chordal = 0;
    for g in &graphs {
        let name = indicol_core::graph::write_graph6(g);
        let (omega, chi) = (omega_exact(g).unwrap(), chi_exact(g).unwrap());
        let r = chi_i_with(g, 7, SolverConfig::default()).map_err(|e| format!("{name}: {e}"))?;
        if !(omega <= chi && chi <= r.chi_i && r.chi_i <= g.max_degree() + 1) {
            return Err(format!("{name}: omega {omega}, chi {chi}, chi_i {}, delta {}", r.chi_i, g.max_degree()));
        }
        if is_chordal(g).is_some() {
            chordal += 1;
            if r.chi_i != chi || chi != omega || !r.winnable[chi - 1..].iter().all(|&w| w) {
                return Err(format!("chordal {name}: chi_i {} chi {chi} omega {omega}", r.chi_i));
            }
        }
    }
    Ok(format!("{} connected graphs, {chordal} chordal", graphs.len()))
}

fn c8_p5k4kitebull() -> Check {
    let forbidden = family(&["P5", "K4", "Kite", "Bull"]);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut with_b, mut with_v3) = (0, 0);
    for i in 0..100 {
        let g = random_p5k4kitebull(&mut rng);
        let name = format!("instance {i} ({})", indicol_core::graph::write_graph6(&g));
        if !is_family_free(&g, &forbidden).unwrap() {
            return Err(format!("{name} contains a forbidden pattern"));
        }
        let d = decompose_p5k4kitebull(&g).map_err(|e| format!("{name}: {e}"))?;
        let chi = chi_exact(&g).unwrap();
        if chi != chi_p5k4kitebull(&d) {
            return Err(format!("{name}: chi {chi}, rule gives {}", chi_p5k4kitebull(&d)));
        }
        with_b += !d.b.is_empty() as usize;
        with_v3 += !d.v3.is_empty() as usize;
        for k in [chi, chi + 1] {
            must_win(&g, k, strat_thm7, &name)?;
        }
    }
    Ok(format!("100 instances ({with_b} with B nonempty, {with_v3} with V3 nonempty)"))
}

fn c9_p6c5claw() -> Check {
    let forbidden = family(&["P6", "C5", "K1_3"]);
    let p5_bar = family(&["P5_bar"]);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut kc6 = 0;
    for i in 0..100 {
        let g = random_p6c5claw(&mut rng);
        let name = format!("instance {i} ({})", indicol_core::graph::write_graph6(&g));
        if !is_family_free(&g, &forbidden).unwrap() {
            return Err(format!("{name} contains a forbidden pattern"));
        }
        let d = decompose_p6c5claw(&g).map_err(|e| format!("{name}: {e}"))?;
        if is_family_free(&g, &p5_bar).unwrap() {
            if !d.is_kc6() || recognize_expansion(&g, &cycle(6), ModuleFilter::Complete).is_none() {
                return Err(format!("{name} is P5-bar-free but not recognized as K[C6]"));
            }
            must_win(&g, chi_exact(&g).unwrap(), strat_kc6, &name)?;
            kc6 += 1;
        } else if d.is_kc6() {
            return Err(format!("{name} contains P5-bar but decomposed as K[C6]"));
        }
    }
    Ok(format!("100 instances, {kc6} P5-bar-free and won as K[C6]"))
}

fn c10_composition() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let chi_i = |g: &Graph| chi_i_with(g, g.n().max(1), SolverConfig::default()).map(|r| r.chi_i);
    for i in 0..20 {
        let n1 = rng.random_range(1..=5);
        let n2 = rng.random_range(1..=10 - n1);
        let (g1, g2) = (random_graph(&mut rng, n1, 0.5), random_graph(&mut rng, n2, 0.5));
        let (a, b) = (chi_i(&g1).map_err(|e| e.to_string())?, chi_i(&g2).map_err(|e| e.to_string())?);
        let u = chi_i(&g1.union(&g2).unwrap()).map_err(|e| e.to_string())?;
        let j = chi_i(&g1.join(&g2).unwrap()).map_err(|e| e.to_string())?;
        if u != a.max(b) || j != a + b {
            return Err(format!("pair {i}: chi_i {a}, {b}; union {u}, join {j}"));
        }
    }
    Ok("20 random pairs".into())
}

fn c11_detector() -> Check {
    let mut patterns = standard_patterns();
    patterns.retain(|p| p.graph.n() <= 8);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..1000 {
        let n = rng.random_range(1..=8);
        let p = rng.random_range(0.15..0.85);
        let host = random_graph(&mut rng, n, p);
        for pat in &patterns {
            let fast = find_induced(&host, &pat.graph).unwrap().map(|e| e.map);
            let slow = oracle::brute_force_induced(&host, &pat.graph);
            if fast != slow {
                return Err(format!("host {i}, {}: detector {fast:?}, brute force {slow:?}", pat.name));
            }
        }
    }
    Ok(format!("1000 hosts x {} patterns", patterns.len()))
}

fn c12_reference_solver() -> Check {
    let graphs = corpus(ALL_LE6);
    for g in &graphs {
        let fast = winnable_table(g, 4, SolverConfig::default()).map_err(|e: GameError| e.to_string())?;
        let slow = reference_table(g, 4).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("{}: {fast:?} vs {slow:?}", indicol_core::graph::write_graph6(g)));
        }
    }
    Ok(format!("{} graphs on at most 6 vertices, k = 1..4", graphs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("chromatic formula for K[C5](m), m in {1,2,3}^5", c1_formula_kc5),
        ("balanced K[C5](m,m,m,m,m) has chi = ceil(5m/2)", c2_balanced),
        ("K[C5] strategy beats optimal Ben with ledger checks", c3_kc5_strategy),
        ("K[C6] strategy beats optimal Ben", c4_kc6_strategy),
        ("I[C_n] cycle strategy beats optimal Ben", c5_cycle_strategy),
        ("connected bipartite graphs: chi_i = 2, winnable for k = 2..5", c6_bipartite),
        ("sandwich bounds and chordal equality on connected graphs", c7_sandwich_chordal),
        ("{P5,K4,Kite,Bull}-free constructions: decomposition and strategy", c8_p5k4kitebull),
        ("{P6,C5,K1,3}-free constructions: decomposition and K[C6] play", c9_p6c5claw),
        ("union and join laws for chi_i", c10_composition),
        ("induced-subgraph detector agrees with brute force", c11_detector),
        ("canonical solver matches the reference solver", c12_reference_solver),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:2} PASS  {title}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL  {title}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
