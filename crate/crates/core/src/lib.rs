//! Impartial-game laboratory: poset games, Node Kayles and the set game,
//! the reductions between them, and brute-force checkers for the reductions.

pub mod bitset;
pub mod error;
pub mod game;
pub mod graph;
pub mod poset;
pub mod reduction;
pub mod solver;
mod text;
pub mod verify;

pub use bitset::{BitSet, Position};
pub use error::{GameError, GraphError, ParseError, PosetError, SolveError, VerifyError};
pub use game::{GameRules, Kayles, PosetGame, SetGame};
pub use graph::Graph;
pub use poset::{Level, Poset};
pub use reduction::{PhiImage, Reduction, StandardReduction};
pub use solver::{Budget, GameValue, Grundy, MoveOrder, Solver, TranspositionTable};
