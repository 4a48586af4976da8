//! Exact analysis of the connected and total connected domination games on
//! small graphs: bitset graphs and family constructors, exhaustive domination
//! invariants, a memoised game solver, and classification/verification tools.

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod family_spec;
pub mod game;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod record;
pub mod verify;
mod vertex_set;

pub use error::{GameError, GraphError, ParseError};
pub use game::{GameReport, Player, Solver, Variant};
pub use graph::Graph;
pub use vertex_set::{VertexSet, BITSET_CAP};
