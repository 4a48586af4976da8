//! One-line JSON records describing a graph's game numbers.

use serde::Serialize;

use crate::classify::{label, GameClass};
use crate::error::GraphError;
use crate::game::{Player, SolveOptions, Solver, Variant};
use crate::graph::Graph;
use crate::invariants::connected_domination_number;
use crate::io::emit_graph6;

/// Fields are stable; consumers may rely on the names below.
///
/// `class` is `null` when the two Dominator-start values differ by more than two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub gamma_c: usize,
    pub gamma_cg: u32,
    pub gamma_cg_s: u32,
    pub gamma_tcg: u32,
    pub gamma_tcg_s: u32,
    pub class: Option<GameClass>,
}

impl GraphRecord {
    pub fn compute(g: &Graph, options: SolveOptions) -> Result<Self, GraphError> {
        let mut c = Solver::with_options(g, Variant::Connected, options)?;
        let mut t = Solver::with_options(g, Variant::TotalConnected, options)?;
        let gamma_cg = c.solve(Player::Dominator);
        let gamma_tcg = t.solve(Player::Dominator);
        Ok(GraphRecord {
            graph: emit_graph6(g),
            n: g.order(),
            m: g.size(),
            gamma_c: connected_domination_number(g)?.size,
            gamma_cg,
            gamma_cg_s: c.solve(Player::Staller),
            gamma_tcg,
            gamma_tcg_s: t.solve(Player::Staller),
            class: label(gamma_cg, gamma_tcg).ok().map(|l| l.class),
        })
    }
}
