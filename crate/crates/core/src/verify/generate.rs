//! Random graphs, including instances built to lie in the studied classes.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex, VertexSet};

/// Incremental edge-list builder.
struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn new() -> Self {
        Builder { n: 0, edges: Vec::new() }
    }

    fn block(&mut self, size: usize) -> VertexSet {
        let s = (self.n..self.n + size).collect();
        self.n += size;
        s
    }

    fn clique(&mut self, s: VertexSet) {
        self.complete(s, s);
    }

    fn complete(&mut self, s: VertexSet, t: VertexSet) {
        for u in s {
            for v in t {
                if u != v {
                    self.edges.push((u, v));
                }
            }
        }
    }

    fn build(mut self) -> Graph {
        for e in &mut self.edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        self.edges.sort_unstable();
        self.edges.dedup();
        Graph::from_edges(self.n, &self.edges).expect("generated graphs are small")
    }
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("n within limits")
}

/// Uniformly relabeled copy of `g`.
pub fn shuffle_labels<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<Vertex> = g.vertices().collect();
    perm.shuffle(rng);
    g.permute(&perm).expect("a permutation")
}

/// Connected bipartite chain graph with the given side sizes: left vertex
/// neighborhoods are nested prefixes of the right side, one of them full.
/// Chain graphs are 2K2-free, hence P5-free.
fn bipartite_block<R: Rng>(rng: &mut R, b: &mut Builder, left: usize, right: usize) -> VertexSet {
    let l = b.block(left);
    let r = b.block(right);
    let rv = r.to_vec();
    let full = rng.random_range(0..left);
    for (i, u) in l.iter().enumerate() {
        let d = if i == full { right } else { rng.random_range(1..=right) };
        b.edges.extend(rv[..d].iter().map(|&v| (u, v)));
    }
    l | r
}

/// Independent expansion of C5 with module sizes in `1..=max`. Returns the
/// modules.
fn ic5_block<R: Rng>(rng: &mut R, b: &mut Builder, max: usize) -> Vec<VertexSet> {
    let modules: Vec<VertexSet> = (0..5).map(|_| b.block(rng.random_range(1..=max))).collect();
    for i in 0..5 {
        b.complete(modules[i], modules[(i + 1) % 5]);
    }
    modules
}

/// A connected {P5, K4, Kite, Bull}-free graph with an induced C5, built in
/// the layered form: `V_1` (an independent C5 expansion plus optional
/// extra bipartite or `I[C5]` components), `V_2 = B ∪ S` complete
/// bipartite, and `V_3` (bipartite or `I[C5]` components) below `S`. Every
/// `S` vertex is complete to `V_3`, `V_1` is complete to `B`, and block
/// sizes are at most 3.
///
/// With probability 1/5 the result is a bare independent C5 expansion.
/// Instances have at most [`P5K4KITEBULL_MAX_VERTICES`] vertices.
pub fn random_p5k4kitebull<R: Rng>(rng: &mut R) -> Graph {
    loop {
        let g = p5k4kitebull_attempt(rng);
        if g.n() <= P5K4KITEBULL_MAX_VERTICES {
            return g;
        }
    }
}

/// Size cap for [`random_p5k4kitebull`].
pub const P5K4KITEBULL_MAX_VERTICES: usize = 18;

fn p5k4kitebull_attempt<R: Rng>(rng: &mut R) -> Graph {
    let mut b = Builder::new();
    let v1 = ic5_block(rng, &mut b, 3);
    if rng.random_bool(0.2) {
        return shuffle_labels(rng, &b.build());
    }
    let mut v1: VertexSet = v1.iter().fold(VertexSet::EMPTY, |acc, &m| acc | m);
    for _ in 0..rng.random_range(0..=1) {
        v1 |= side_component(rng, &mut b);
    }
    let bset = b.block(rng.random_range(1..=3));
    b.complete(v1, bset);
    if rng.random_bool(0.6) {
        let s = b.block(rng.random_range(1..=3));
        b.complete(s, bset);
        let mut v3 = VertexSet::EMPTY;
        for _ in 0..rng.random_range(1..=2) {
            v3 |= side_component(rng, &mut b);
        }
        b.complete(s, v3);
    }
    shuffle_labels(rng, &b.build())
}

fn side_component<R: Rng>(rng: &mut R, b: &mut Builder) -> VertexSet {
    match rng.random_range(0..4) {
        0 => b.block(1),
        1 | 2 => {
            let (l, r) = (rng.random_range(1..=3), rng.random_range(1..=3));
            bipartite_block(rng, b, l, r)
        }
        _ => ic5_block(rng, b, 1).iter().fold(VertexSet::EMPTY, |acc, &m| acc | m),
    }
}

/// A connected {P6, C5, K1,3}-free graph in the layered form around an
/// induced C6: clique modules `A_0..A_5` (sizes 1..=2) forming `K[C6]`, and
/// cliques `B_0, B_1, B_2` (sizes 0..=2), where `B_j` misses `A_j` and
/// `A_{j+3}`, sees the other four modules, and misses the other `B`s.
///
/// With probability 1/3 every `B_j` is empty, giving `K[C6]`.
pub fn random_p6c5claw<R: Rng>(rng: &mut R) -> Graph {
    let mut b = Builder::new();
    let a: Vec<VertexSet> = (0..6).map(|_| b.block(rng.random_range(1..=2))).collect();
    let bare = rng.random_bool(1.0 / 3.0);
    let bs: Vec<VertexSet> = (0..3).map(|_| b.block(if bare { 0 } else { rng.random_range(0..=2) })).collect();
    for i in 0..6 {
        b.clique(a[i]);
        b.complete(a[i], a[(i + 1) % 6]);
        b.complete(a[i], bs[(i + 1) % 3]);
        b.complete(a[i], bs[(i + 2) % 3]);
    }
    for &blk in &bs {
        b.clique(blk);
    }
    shuffle_labels(rng, &b.build())
}
