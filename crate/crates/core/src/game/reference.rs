//! Plain minimax over explicit colorings, without color canonicalization,
//! twin pruning or shortcuts. Slow; used to cross-check [`super::Solver`].

use std::collections::HashMap;

use super::{Color, GameError};
use crate::graph::Graph;

/// Largest graph the reference solver accepts.
pub const REFERENCE_LIMIT: usize = 8;

pub fn reference_ann_wins(g: &Graph, k: usize) -> Result<bool, GameError> {
    if g.n() > REFERENCE_LIMIT {
        return Err(GameError::TooLarge { n: g.n(), limit: REFERENCE_LIMIT });
    }
    if k == 0 || k > super::MAX_COLORS {
        return Err(GameError::BadPalette(k));
    }
    let mut memo = HashMap::new();
    Ok(ann(g, k, &mut vec![0; g.n()], &mut memo))
}

pub fn reference_table(g: &Graph, kmax: usize) -> Result<Vec<bool>, GameError> {
    (1..=kmax).map(|k| reference_ann_wins(g, k)).collect()
}

fn legal(g: &Graph, k: usize, coloring: &[Color], v: usize) -> Vec<Color> {
    (1..=k as Color).filter(|&c| g.neighbors(v).iter().all(|u| coloring[u] != c)).collect()
}

fn ann(g: &Graph, k: usize, coloring: &mut Vec<Color>, memo: &mut HashMap<Vec<Color>, bool>) -> bool {
    let uncolored: Vec<usize> = (0..g.n()).filter(|&v| coloring[v] == 0).collect();
    if uncolored.is_empty() {
        return true;
    }
    if uncolored.iter().any(|&v| legal(g, k, coloring, v).is_empty()) {
        return false;
    }
    if let Some(&v) = memo.get(coloring) {
        return v;
    }
    let win = uncolored.iter().any(|&v| {
        legal(g, k, coloring, v).into_iter().all(|c| {
            coloring[v] = c;
            let r = ann(g, k, coloring, memo);
            coloring[v] = 0;
            r
        })
    });
    memo.insert(coloring.clone(), win);
    win
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    #[test]
    fn agrees_on_small_cases() {
        let c5 = parse_expr("C5").unwrap();
        assert_eq!(reference_table(&c5, 4).unwrap(), vec![false, false, true, true]);
        assert!(reference_ann_wins(&parse_expr("K3").unwrap(), 3).unwrap());
        assert!(reference_ann_wins(&parse_expr("C9").unwrap(), 3).is_err());
    }
}
