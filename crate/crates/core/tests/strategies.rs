use indicol_core::game::{ann_wins, chi_exact, chi_i, play_match, BenPolicy, Outcome};
use indicol_core::graph::{parse_expr, Graph, VertexSet};
use indicol_core::strategy::*;
use indicol_core::structure::decompose_p5k4kitebull;

fn g(expr: &str) -> Graph {
    parse_expr(expr).unwrap()
}

fn wins(g: &Graph, k: usize, s: StrategyResult) -> bool {
    let r = play_match(g, k, s.unwrap(), &BenPolicy::Optimal).unwrap();
    r.outcome == Outcome::AnnWins
}

fn assert_wins(expr: &str, k: usize, make: fn(&Graph, usize) -> StrategyResult) {
    let h = g(expr);
    assert!(wins(&h, k, make(&h, k)), "{expr} with {k} colors");
    assert!(ann_wins(&h, k).unwrap().ann_wins, "strategy win implies game win on {expr}");
}

// C5 with module 0 replaced by the path 0-5-6: clique part {0, 5}, independent part {6}
fn split_c5_instance() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)];
    for v in [5, 6] {
        edges.extend([(v, 1), (v, 4)]);
    }
    Graph::from_edges(7, &edges).unwrap()
}

#[test]
fn degeneracy_examples() {
    assert_wins("P6", 2, strat_degeneracy);
    assert_wins("K4", 4, strat_degeneracy);
    assert_wins("Petersen", 4, strat_degeneracy);
}

#[test]
fn cycle_examples() {
    assert_wins("I[C5](2,2,2,1,1)", 3, strat_cycle_expansion);
    assert_wins("I[C6](2,1,1,1,1,1)", 2, strat_cycle_expansion);
    assert!(matches!(strat_cycle_expansion(&g("C5"), 2), Err(StrategyError::BoundViolated { .. })));
}

#[test]
fn kc6_examples() {
    assert_wins("K[C6](2,2,1,1,1,1)", 4, strat_kc6);
    assert_wins("C6", 2, strat_kc6);
    assert_wins("K[C6](1,2,2,1,1,1)", 4, strat_kc6);
}

#[test]
fn kc5_examples() {
    let before = ledger_checks();
    assert_wins("K[C5](3,3,1,1,1)", 6, strat_kc5);
    assert_wins("K[C5](2,2,2,2,2)", 5, strat_kc5);
    assert_wins("K[C5](2,2,2,2,2)", 6, strat_kc5);
    assert!(ledger_checks() > before);
    assert!(matches!(strat_kc5(&g("K[C5](2,2,2,2,2)"), 4), Err(StrategyError::BoundViolated { k: 4, bound: 5 })));
}

#[test]
fn union_examples() {
    let h = g("C5 | P4");
    let parts = vec![
        (VertexSet::full(5), strat_cycle_expansion(&g("C5"), 3).unwrap()),
        (VertexSet::full(9) - VertexSet::full(5), strat_solver_backed(&g("P4"), 3).unwrap()),
    ];
    assert!(wins(&h, 3, strat_union_with(&h, 3, parts)));
    assert_wins("K3 | K3", 3, strat_union);
    assert!(matches!(strat_union(&g("C5 | C5"), 2), Err(StrategyError::BoundViolated { .. })));
}

#[test]
fn union_of_solver_parts_wins_iff_each_part_does() {
    for (a, b) in [("C5", "P4"), ("C4", "K3"), ("Petersen", "K2"), ("C6", "C5")] {
        let (ga, gb) = (g(a), g(b));
        let h = ga.union(&gb).unwrap();
        for k in 2..=4 {
            let both = ann_wins(&ga, k).unwrap().ann_wins && ann_wins(&gb, k).unwrap().ann_wins;
            let pa = VertexSet::full(ga.n());
            let parts = [(pa, &ga), (h.vertex_set() - pa, &gb)]
                .into_iter()
                .map(|(p, part)| strat_solver_backed(part, k).map(|s| (p, s)))
                .collect::<Result<Vec<_>, _>>();
            match parts {
                Ok(parts) => assert_eq!(wins(&h, k, strat_union_with(&h, k, parts)), both, "{a} | {b}, k={k}"),
                Err(StrategyError::NotWinnable { .. }) => assert!(!both),
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn thm7_examples() {
    assert_wins("K1 + C5", 4, strat_thm7);
    assert_wins("I[C5](2,1,1,1,1)", 3, strat_thm7);
    // hub 5 over the cycle, 6 hangs off the hub, 7 off 6
    let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, 5)));
    edges.extend([(5, 6), (6, 7)]);
    let h = Graph::from_edges(8, &edges).unwrap();
    let d = decompose_p5k4kitebull(&h).unwrap();
    assert!(!d.v3.is_empty() && d.xstar.is_some());
    assert!(wins(&h, 4, strat_thm7(&h, 4)));
    assert!(matches!(strat_thm7(&h, 3), Err(StrategyError::BoundViolated { k: 3, bound: 4 })));
}

#[test]
fn split_examples() {
    let h = split_c5_instance();
    assert!(wins(&h, 3, strat_split_c5(&h, 3)));
    assert_wins("K[C5](2,1,1,1,1)", 3, strat_split_c5);
    assert!(matches!(strat_split_c5(&g("Petersen"), 3), Err(StrategyError::NotApplicable(_))));
    assert_wins("K1 + C5", 4, strat_split_c5_plus_clique);
    assert_wins("K2 + C5", 5, strat_split_c5_plus_clique);
    let hk = g("K1").join(&h).unwrap();
    let chi = chi_exact(&hk).unwrap();
    assert_eq!(chi, 4);
    assert!(wins(&hk, chi, strat_split_c5_plus_clique(&hk, chi)));
}

#[test]
fn p5c4_examples() {
    let chordal = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
    assert!(wins(&chordal, 3, strat_p5c4(&chordal, 3)));
    assert_wins("K[C5](1,1,1,1,1)", 3, strat_p5c4);
    let pod = g("K2 + K[C5](2,1,2,1,1)");
    let chi = chi_exact(&pod).unwrap();
    assert_eq!(chi, 6);
    assert!(wins(&pod, chi, strat_p5c4(&pod, chi)));
}

#[test]
fn p6c5_examples() {
    assert_wins("K[C6](2,1,2,1,1,1)", 3, strat_p6c5_class);
    assert_wins("C6 | K[C6](2,2,1,1,1,1)", 4, strat_p6c5_class);
    assert!(matches!(strat_p6c5_class(&g("K1 + C5"), 4), Err(StrategyError::NotApplicable(_))));
}

#[test]
fn solver_backed_examples() {
    assert_wins("C5", 3, strat_solver_backed);
    assert_wins("I[C6](2,2,1,2,1,1)", 2, strat_solver_backed);
    assert!(matches!(strat_solver_backed(&g("C5"), 2), Err(StrategyError::NotWinnable { k: 2 })));
    assert_wins("K2 + C4", 4, strat_join);
    assert!(matches!(strat_join(&g("C5"), 3), Err(StrategyError::NotApplicable(_))));
}

#[test]
fn auto_reaches_chi_i_on_small_graphs() {
    for expr in ["C5", "K1 + C5", "K[C5](2,1,1,1,1)", "C6 | C5", "P5", "Petersen", "K[C6](1,2,1,1,1,1)"] {
        let h = g(expr);
        let k = chi_i(&h, h.n()).unwrap().chi_i;
        assert!(wins(&h, k, strat_auto(&h, k)), "{expr} at chi_i = {k}");
    }
}

#[test]
fn registry_names_resolve() {
    let h = g("C5");
    for name in STRATEGY_NAMES {
        match make_strategy(name, &h, 3) {
            Ok(_) | Err(StrategyError::NotApplicable(_)) | Err(StrategyError::BoundViolated { .. }) => {}
            Err(e) => panic!("{name}: {e}"),
        }
    }
    assert!(matches!(make_strategy("nope", &h, 3), Err(StrategyError::NotApplicable(_))));
}
