use indicol_web::{analyze_json, layout_json, play_json, strategies};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn analyze_small_graph_is_exact() {
    let v = parse(&analyze_json("C5").unwrap());
    assert_eq!(v["chi"], 3);
    assert_eq!(v["chi_i"], 3);
    assert!(v["note"].is_null());
    assert!(v["decomposition"].is_object());
}

#[test]
fn analyze_large_graph_skips_the_game() {
    let v = parse(&analyze_json("K[C5](3,3,3,3,3)").unwrap());
    assert_eq!(v["chi"], 8);
    assert!(v["chi_i"].is_null());
    assert!(v["note"].is_string());
}

#[test]
fn play_cycle() {
    let v = parse(&play_json("C5", 3, "cycle").unwrap());
    assert_eq!(v["outcome"], "ANN_WINS");
    assert_eq!(v["transcript"].as_array().unwrap().len(), 5);
    assert!(play_json("C5", 2, "cycle").is_err());
    assert!(play_json("C5 +", 3, "cycle").is_err());
}

#[test]
fn layout_is_deterministic_and_in_bounds() {
    let a = layout_json("K[C5](2,1,1,1,1)").unwrap();
    assert_eq!(a, layout_json("K[C5](2,1,1,1,1)").unwrap());
    let v = parse(&a);
    assert_eq!(v["n"], 6);
    assert_eq!(v["labels"][1], "0.1");
    for p in v["points"].as_array().unwrap() {
        let (x, y) = (p[0].as_f64().unwrap(), p[1].as_f64().unwrap());
        assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y));
    }
    assert_eq!(v["edges"].as_array().unwrap().len(), 8);
}

#[test]
fn strategy_list() {
    let v = parse(&strategies());
    assert!(v.as_array().unwrap().iter().any(|s| s == "kc6"));
}
