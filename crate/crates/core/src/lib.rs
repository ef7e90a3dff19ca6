//! Solvers for impartial combinatorial games stacked on a simplicial complex.
//!
//! The library models finite loop-free impartial games as explicit DAGs
//! ([`game::GameGraph`]), provides stock component rulesets ([`rulesets`]),
//! simplicial nim with a retrograde P-set oracle ([`simplicial`]), and two
//! engines for the combined game in which a move picks a face of the complex,
//! plays arbitrarily many moves on the face's components and at most one move
//! everywhere else ([`emperor`]):
//!
//! * a brute-force engine that classifies every product position by
//!   normal-play recursion, and
//! * a fast engine that only needs the per-component outcome and P-position
//!   length together with the P-set of nim on the complex.
//!
//! [`sweep`] drives exhaustive desk-scale verification that the two engines
//! agree and that the constructed winning moves are legal and correct.

pub mod emperor;
pub mod game;
pub mod rulesets;
pub mod simplicial;
pub mod sweep;

pub use emperor::{
    emperor_sum_outcome, BruteTable, EmperorError, EmperorInstance, EmperorMove, EmperorPosition,
    EmperorSolver, MoveError, VertexMove,
};
pub use game::{GameError, GameGraph, Outcome, PlWitness, PositionId};
pub use rulesets::RulesetSpec;
pub use simplicial::{
    bouton_outcome, Face, NimTable, SimplicialComplex, SimplicialError, StoneVector,
};

/// Resource caps for table-building passes.
///
/// `max_graph_positions` bounds a single component graph;
/// `max_cells` bounds dense DP tables (simplicial nim boxes and
/// brute-force product tables).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_graph_positions: u64,
    pub max_cells: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_graph_positions: 1_000_000,
            max_cells: 10_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_cells(max_cells: u64) -> Self {
        Limits {
            max_cells,
            ..Limits::default()
        }
    }
}
