//! Exact chromatic, clique and independence numbers for small graphs.

use super::solver::bits;
use super::GameError;
use crate::graph::Graph;

pub const CHI_LIMIT: usize = 20;
pub const CLIQUE_LIMIT: usize = 40;

/// Clique number by Bron–Kerbosch with pivoting on bit sets.
pub fn omega_exact(g: &Graph) -> Result<usize, GameError> {
    if g.n() > CLIQUE_LIMIT {
        return Err(GameError::TooLarge { n: g.n(), limit: CLIQUE_LIMIT });
    }
    let adj: Vec<u64> = g.rows().iter().map(|r| r.bits()).collect();
    let mut best = 0;
    bron_kerbosch(&adj, 0, g.vertex_set().bits(), 0, &mut best);
    Ok(best)
}

fn bron_kerbosch(adj: &[u64], size: usize, mut p: u64, mut x: u64, best: &mut usize) {
    if p == 0 {
        if x == 0 {
            *best = (*best).max(size);
        }
        return;
    }
    if size + p.count_ones() as usize <= *best {
        return;
    }
    let pivot = bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).expect("p nonempty");
    for v in bits(p & !adj[pivot]) {
        bron_kerbosch(adj, size + 1, p & adj[v], x & adj[v], best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

pub fn alpha_exact(g: &Graph) -> Result<usize, GameError> {
    omega_exact(&g.complement())
}

/// Chromatic number by DSATUR branch and bound, seeded with the greedy
/// DSATUR coloring as upper bound and the clique number as lower bound.
pub fn chi_exact(g: &Graph) -> Result<usize, GameError> {
    let n = g.n();
    if n > CHI_LIMIT {
        return Err(GameError::TooLarge { n, limit: CHI_LIMIT });
    }
    if n == 0 {
        return Ok(0);
    }
    let lower = omega_exact(g)?;
    let adj: Vec<u64> = g.rows().iter().map(|r| r.bits()).collect();
    let mut colors = vec![0usize; n];
    let mut best = greedy_dsatur(&adj, &mut colors);
    if best > lower {
        colors.fill(0);
        branch(&adj, &mut colors, 0, n, lower, &mut best);
    }
    Ok(best)
}

fn saturation(adj: &[u64], colors: &[usize], v: usize) -> u64 {
    bits(adj[v]).filter(|&u| colors[u] != 0).fold(0, |acc, u| acc | 1 << colors[u])
}

// uncolored vertex of maximum saturation, then maximum uncolored degree, then least id
fn pick(adj: &[u64], colors: &[usize]) -> usize {
    let uncolored: u64 = colors.iter().enumerate().filter(|(_, &c)| c == 0).fold(0, |acc, (v, _)| acc | 1 << v);
    bits(uncolored)
        .max_by_key(|&v| {
            (saturation(adj, colors, v).count_ones(), (adj[v] & uncolored).count_ones(), std::cmp::Reverse(v))
        })
        .expect("some vertex uncolored")
}

fn greedy_dsatur(adj: &[u64], colors: &mut [usize]) -> usize {
    let mut used = 0;
    for _ in 0..colors.len() {
        let v = pick(adj, colors);
        let sat = saturation(adj, colors, v);
        let c = (1..).find(|&c| sat >> c & 1 == 0).unwrap();
        colors[v] = c;
        used = used.max(c);
    }
    used
}

fn branch(adj: &[u64], colors: &mut [usize], used: usize, left: usize, lower: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    if left == 0 {
        *best = used;
        return;
    }
    let v = pick(adj, colors);
    let sat = saturation(adj, colors, v);
    for c in 1..=used {
        if sat >> c & 1 == 0 {
            colors[v] = c;
            branch(adj, colors, used, left - 1, lower, best);
            colors[v] = 0;
            if *best == lower {
                return;
            }
        }
    }
    if used + 1 < *best {
        colors[v] = used + 1;
        branch(adj, colors, used + 1, left - 1, lower, best);
        colors[v] = 0;
    }
}
