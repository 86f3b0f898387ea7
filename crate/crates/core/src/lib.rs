//! Exact engine for the indicated coloring game.
//!
//! In each round Ann picks an uncolored vertex and Ben gives it any color from
//! `1..=k` not already used on its neighbors. Ann wins when every vertex is
//! colored; Ben wins as soon as some uncolored vertex sees all `k` colors.
//!
//! The crate provides graph constructions ([`graph`]), induced-subgraph
//! detection ([`pattern`]), structural decompositions of several hereditary
//! classes ([`structure`]), an exact minimax solver with an optimal Ben
//! ([`game`]), Ann's constructive strategies ([`strategy`]) and batch
//! verification reports ([`verify`]).

pub mod game;
pub mod graph;
pub mod pattern;
pub mod strategy;
pub mod structure;
pub mod verify;
