use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GameError;
use crate::graph::{Graph, Vertex, VertexSet};

/// Colors are `1..=k`; 0 never names a color.
pub type Color = u8;

/// Largest supported palette.
pub const MAX_COLORS: usize = 63;

/// Set of colors as a bit mask (bit `c` for color `c`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(pub u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn palette(k: usize) -> Self {
        debug_assert!(k <= MAX_COLORS);
        ColorSet(((1u64 << k) - 1) << 1)
    }

    pub fn singleton(c: Color) -> Self {
        ColorSet(1 << c)
    }

    pub fn contains(self, c: Color) -> bool {
        c < 64 && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color)
    }

    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn minus(self, other: ColorSet) -> Self {
        ColorSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let c = bits.trailing_zeros() as Color;
                bits &= bits - 1;
                c
            })
        })
    }

    pub fn to_vec(self) -> Vec<Color> {
        self.iter().collect()
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<Color>::deserialize(d)?;
        if let Some(bad) = v.iter().find(|&&c| c == 0 || c as usize > MAX_COLORS) {
            return Err(serde::de::Error::custom(format!("color {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Turn {
    AnnToSelect,
    BenToColor(Vertex),
}

/// One completed move: Ann presented `vertex`, Ben gave it `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub vertex: Vertex,
    pub color: Color,
}

/// Live game position: graph, palette size and partial proper coloring.
#[derive(Debug, Clone)]
pub struct GameState {
    graph: Arc<Graph>,
    k: usize,
    coloring: Vec<Color>,
    colored: VertexSet,
    turn: Turn,
    moves: Vec<Move>,
}

impl GameState {
    pub fn new(graph: impl Into<Arc<Graph>>, k: usize) -> Result<Self, GameError> {
        let graph = graph.into();
        if k == 0 || k > MAX_COLORS {
            return Err(GameError::BadPalette(k));
        }
        let n = graph.n();
        Ok(GameState {
            graph,
            k,
            coloring: vec![0; n],
            colored: VertexSet::EMPTY,
            turn: Turn::AnnToSelect,
            moves: Vec::new(),
        })
    }

    /// Position with the given colors already placed (0 = uncolored). The
    /// move history lists colored vertices in ascending id order.
    pub fn from_coloring(graph: impl Into<Arc<Graph>>, k: usize, coloring: &[Color]) -> Result<Self, GameError> {
        let mut s = Self::new(graph, k)?;
        if coloring.len() != s.graph.n() {
            return Err(GameError::BadColoring(format!("{} entries for {} vertices", coloring.len(), s.graph.n())));
        }
        for (v, &c) in coloring.iter().enumerate() {
            if c != 0 {
                s.present(v)?;
                s.color_pending(c)?;
            }
        }
        Ok(s)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn palette(&self) -> ColorSet {
        ColorSet::palette(self.k)
    }

    pub fn turn(&self) -> Turn {
        self.turn
    }

    pub fn color(&self, v: Vertex) -> Option<Color> {
        self.coloring.get(v).copied().filter(|&c| c != 0)
    }

    /// Per-vertex colors, 0 for uncolored.
    pub fn coloring(&self) -> &[Color] {
        &self.coloring
    }

    pub fn colored(&self) -> VertexSet {
        self.colored
    }

    pub fn uncolored(&self) -> VertexSet {
        self.graph.vertex_set() - self.colored
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn is_complete(&self) -> bool {
        self.colored.len() == self.graph.n()
    }

    /// Colors present on `s`.
    pub fn colors_on(&self, s: VertexSet) -> ColorSet {
        (s & self.colored).iter().map(|v| self.coloring[v]).collect()
    }

    /// Colors appearing anywhere.
    pub fn used_colors(&self) -> ColorSet {
        self.colors_on(self.colored)
    }

    pub fn legal_colors(&self, v: Vertex) -> Result<ColorSet, GameError> {
        self.check_vertex(v)?;
        if self.colored.contains(v) {
            return Err(GameError::AlreadyColored(v));
        }
        Ok(self.palette().minus(self.colors_on(self.graph.neighbors(v))))
    }

    /// Least uncolored vertex whose neighborhood carries every color.
    pub fn blocked_vertex(&self) -> Option<Vertex> {
        self.uncolored().iter().find(|&v| self.colors_on(self.graph.neighbors(v)).len() == self.k)
    }

    /// Color classes as vertex sets, sorted: the position up to renaming colors.
    pub fn canonical_classes(&self) -> Vec<u64> {
        let mut classes = vec![0u64; self.k + 1];
        for v in self.colored {
            classes[self.coloring[v] as usize] |= 1 << v;
        }
        let mut out: Vec<u64> = classes.into_iter().filter(|&c| c != 0).collect();
        out.sort_unstable();
        out
    }

    pub fn present(&mut self, v: Vertex) -> Result<(), GameError> {
        if self.turn != Turn::AnnToSelect {
            return Err(GameError::WrongTurn);
        }
        self.check_vertex(v)?;
        if self.colored.contains(v) {
            return Err(GameError::AlreadyColored(v));
        }
        self.turn = Turn::BenToColor(v);
        Ok(())
    }

    pub fn color_pending(&mut self, c: Color) -> Result<(), GameError> {
        let Turn::BenToColor(v) = self.turn else {
            return Err(GameError::WrongTurn);
        };
        if !self.legal_colors(v)?.contains(c) {
            return Err(GameError::IllegalColor { vertex: v, color: c });
        }
        self.coloring[v] = c;
        self.colored.insert(v);
        self.moves.push(Move { vertex: v, color: c });
        self.turn = Turn::AnnToSelect;
        Ok(())
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GameError> {
        if v >= self.graph.n() {
            return Err(GameError::VertexOutOfRange { vertex: v, n: self.graph.n() });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    fn g(expr: &str) -> Graph {
        parse_expr(expr).unwrap()
    }

    #[test]
    fn legal_colors_examples() {
        let s = GameState::from_coloring(g("K2"), 3, &[1, 0]).unwrap();
        assert_eq!(s.legal_colors(1).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(s.blocked_vertex(), None);
        let s = GameState::new(g("K1"), 2).unwrap();
        assert_eq!(s.legal_colors(0).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(s.blocked_vertex(), None);
        // C4 path order 0-1-2-3-0: vertex 1 sees 0 and 2
        let s = GameState::from_coloring(g("C4"), 2, &[1, 0, 2, 0]).unwrap();
        assert!(s.legal_colors(1).unwrap().is_empty());
        assert_eq!(s.blocked_vertex(), Some(1));
        assert_eq!(s.legal_colors(0), Err(GameError::AlreadyColored(0)));
    }

    #[test]
    fn turn_discipline() {
        let mut s = GameState::new(g("K2"), 2).unwrap();
        assert_eq!(s.color_pending(1), Err(GameError::WrongTurn));
        s.present(0).unwrap();
        assert_eq!(s.present(1), Err(GameError::WrongTurn));
        assert_eq!(s.color_pending(3), Err(GameError::IllegalColor { vertex: 0, color: 3 }));
        s.color_pending(2).unwrap();
        s.present(1).unwrap();
        assert_eq!(s.color_pending(2), Err(GameError::IllegalColor { vertex: 1, color: 2 }));
        s.color_pending(1).unwrap();
        assert!(s.is_complete());
        assert_eq!(s.moves(), &[Move { vertex: 0, color: 2 }, Move { vertex: 1, color: 1 }]);
        assert!(GameState::new(g("K2"), 0).is_err());
    }

    #[test]
    fn canonical_classes_forget_color_names() {
        let a = GameState::from_coloring(g("P3"), 3, &[1, 2, 1]).unwrap();
        let b = GameState::from_coloring(g("P3"), 3, &[3, 1, 3]).unwrap();
        assert_eq!(a.canonical_classes(), b.canonical_classes());
        assert_eq!(a.canonical_classes(), vec![0b010, 0b101]);
    }
}
