//! Class 0/1/2 labelling and the closed forms for trees.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::error::GraphError;
use crate::game::{Player, SolveOptions, Solver, Variant};
use crate::graph::Graph;

/// `gamma_tcg - gamma_cg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameClass {
    Class0,
    Class1,
    Class2,
}

impl GameClass {
    pub fn from_difference(d: i64) -> Option<GameClass> {
        match d {
            0 => Some(GameClass::Class0),
            1 => Some(GameClass::Class1),
            2 => Some(GameClass::Class2),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for GameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

impl Serialize for GameClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.index())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassLabel {
    pub class: GameClass,
    pub gamma_cg: u32,
    pub gamma_tcg: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// The two game values differ by something other than 0, 1 or 2.
    #[error("gamma_tcg - gamma_cg = {gamma_tcg} - {gamma_cg} is outside {{0, 1, 2}}")]
    OutsideTrichotomy { gamma_cg: u32, gamma_tcg: u32 },
}

/// The Dominator-start values of both games.
pub fn game_values(g: &Graph, options: SolveOptions) -> Result<(u32, u32), GraphError> {
    let cg = Solver::with_options(g, Variant::Connected, options)?.solve(Player::Dominator);
    let tcg = Solver::with_options(g, Variant::TotalConnected, options)?.solve(Player::Dominator);
    Ok((cg, tcg))
}

pub fn label(gamma_cg: u32, gamma_tcg: u32) -> Result<ClassLabel, ClassifyError> {
    GameClass::from_difference(gamma_tcg as i64 - gamma_cg as i64)
        .map(|class| ClassLabel {
            class,
            gamma_cg,
            gamma_tcg,
        })
        .ok_or(ClassifyError::OutsideTrichotomy {
            gamma_cg,
            gamma_tcg,
        })
}

pub fn classify(g: &Graph) -> Result<ClassLabel, ClassifyError> {
    classify_with(g, SolveOptions::default())
}

pub fn classify_with(g: &Graph, options: SolveOptions) -> Result<ClassLabel, ClassifyError> {
    let (cg, tcg) = game_values(g, options)?;
    label(cg, tcg)
}

fn require_tree(t: &Graph) -> Result<(), GraphError> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(GraphError::NotATree)
    }
}

/// `gamma_cg(T) = n(T) - leaves(T)`; `K_2` needs one move and `K_1` one move.
pub fn tree_game_value(t: &Graph) -> Result<u32, GraphError> {
    require_tree(t)?;
    if t.order() <= 2 {
        return Ok(1);
    }
    Ok((t.order() - t.leaves().len()) as u32)
}

/// Class 1 exactly when every non-leaf has a leaf neighbour, otherwise Class 0.
pub fn tree_class(t: &Graph) -> Result<GameClass, GraphError> {
    require_tree(t)?;
    if t.order() < 3 {
        return Err(GraphError::FamilyParameter {
            family: "tree_class",
            requirement: "n >= 3",
            got: t.order(),
        });
    }
    let leaves = t.leaves();
    let every_internal_has_leaf = (0..t.order())
        .filter(|&v| t.degree(v) >= 2)
        .all(|v| !(t.open_nbhd(v) & leaves).is_empty());
    Ok(if every_internal_has_leaf {
        GameClass::Class1
    } else {
        GameClass::Class0
    })
}
