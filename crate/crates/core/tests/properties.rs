use indicol_core::game::{ann_wins, chi_i, play_match, BenPolicy, Outcome};
use indicol_core::graph::{parse_graph6, write_graph6, Graph};
use indicol_core::pattern::{family, find_family_member, find_induced, is_family_free};
use indicol_core::strategy::{make_strategy, StrategyError, STRATEGY_NAMES};
use indicol_core::structure::{decompose_p5k4kitebull, decompose_p6c5claw};
use indicol_core::verify::generate::{random_graph, random_p5k4kitebull, random_p6c5claw, shuffle_labels};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in graph_strategy(10)) {
        let back: Graph = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn family_free_means_no_member_embeds(g in graph_strategy(8)) {
        let fam = family(&["P5", "K4", "Kite", "Bull"]);
        let free = is_family_free(&g, &fam).unwrap();
        prop_assert_eq!(free, fam.iter().all(|p| find_induced(&g, &p.graph).unwrap().is_none()));
        if let Some(w) = find_family_member(&g, &fam).unwrap() {
            let p = fam.iter().find(|p| p.name == w.pattern).unwrap();
            prop_assert!(w.embedding.is_valid(&g, &p.graph));
        }
    }
}

#[test]
fn chi_i_ignores_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..20 {
        let g = random_graph(&mut rng, 3 + i % 6, 0.45);
        let base = chi_i(&g, g.n()).unwrap();
        for _ in 0..5 {
            let h = shuffle_labels(&mut rng, &g);
            assert_eq!(chi_i(&h, h.n()).unwrap(), base, "{}", write_graph6(&g));
        }
    }
}

// A strategy that wins against the optimal Ben certifies the game value,
// and no strategy may present a colored vertex.
#[test]
fn strategies_are_sound_and_legal_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut certified = 0;
    for i in 0..60 {
        let g = random_graph(&mut rng, 2 + i % 7, 0.5);
        for k in 1..=g.n().min(5) {
            for name in STRATEGY_NAMES {
                let s = match make_strategy(name, &g, k) {
                    Ok(s) => s,
                    Err(StrategyError::NotApplicable(_) | StrategyError::BoundViolated { .. })
                    | Err(StrategyError::NotWinnable { .. }) => continue,
                    Err(e) => panic!("{name} on {}: {e}", write_graph6(&g)),
                };
                let r = play_match(&g, k, s, &BenPolicy::Optimal)
                    .unwrap_or_else(|e| panic!("{name} on {} with {k}: {e}", write_graph6(&g)));
                if r.outcome == Outcome::AnnWins {
                    certified += 1;
                    assert!(ann_wins(&g, k).unwrap().ann_wins, "{name} on {} with {k}", write_graph6(&g));
                }
            }
        }
    }
    assert!(certified > 100);
}

// Class strategies accept only graphs of their class.
#[test]
fn class_strategies_reject_outsiders() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p5k4_family = family(&["P5", "K4", "Kite", "Bull"]);
    for _ in 0..300 {
        let n = 5 + rand::Rng::random_range(&mut rng, 0..4);
        let g = random_graph(&mut rng, n, 0.5);
        if make_strategy("thm7", &g, 6).is_ok() {
            assert!(is_family_free(&g, &p5k4_family).unwrap());
        }
        if make_strategy("p6c5", &g, 6).is_ok() {
            assert!(is_family_free(&g, &family(&["P6", "C5", "P5_bar", "K1_3"])).unwrap());
        }
        if make_strategy("p5c4", &g, 8).is_ok() {
            assert!(is_family_free(&g, &family(&["P5", "C4"])).unwrap());
        }
    }
}

#[test]
fn generated_instances_decompose_after_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..30 {
        let g = random_p5k4kitebull(&mut rng);
        decompose_p5k4kitebull(&shuffle_labels(&mut rng, &g)).unwrap();
        let h = random_p6c5claw(&mut rng);
        decompose_p6c5claw(&shuffle_labels(&mut rng, &h)).unwrap();
    }
}
