//! Exact solver for the connected (c) and total connected (tc) domination games.
//!
//! A position is the set of played vertices plus the player to move. Every
//! move after the first must be adjacent to a played vertex and must newly
//! dominate something: a vertex of `N[v]` for the c-game, of `N(v)` for the
//! tc-game. The game ends when no legal move remains; its value is the number
//! of vertices played. Dominator minimises, Staller maximises.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GameError, GraphError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Closed-neighbourhood domination.
    Connected,
    /// Open-neighbourhood (total) domination.
    TotalConnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }
}

/// Order in which candidate moves are tried. Values never depend on it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum MoveOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SearchMode {
    /// Full minimax with an exact-value memo keyed by position.
    #[default]
    Memo,
    /// Alpha-beta with a bound-flagged transposition table.
    AlphaBeta,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub mode: SearchMode,
    pub order: MoveOrder,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub states_expanded: u64,
    pub memo_hits: u64,
}

/// Vertices dominated by the played set: `N[P]` or `N(P)`.
pub fn dominated_set(g: &Graph, variant: Variant, played: VertexSet) -> VertexSet {
    match variant {
        Variant::Connected => g.closed_nbhd_of(played),
        Variant::TotalConnected => g.open_nbhd_of(played),
    }
}

#[inline]
fn dominated_by(g: &Graph, variant: Variant, v: usize) -> VertexSet {
    match variant {
        Variant::Connected => g.closed_nbhd(v),
        Variant::TotalConnected => g.open_nbhd(v),
    }
}

pub fn legal_moves(g: &Graph, variant: Variant, played: VertexSet) -> VertexSet {
    if played.is_empty() {
        return match variant {
            Variant::Connected => g.vertices(),
            Variant::TotalConnected => (0..g.order()).filter(|&v| g.degree(v) > 0).collect(),
        };
    }
    let dominated = dominated_set(g, variant, played);
    let frontier = g.open_nbhd_of(played) - played;
    frontier
        .iter()
        .filter(|&v| !(dominated_by(g, variant, v) - dominated).is_empty())
        .collect()
}

pub fn is_terminal(g: &Graph, variant: Variant, played: VertexSet) -> bool {
    legal_moves(g, variant, played).is_empty()
}

fn check_game_graph(g: &Graph, variant: Variant) -> Result<(), GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if variant == Variant::TotalConnected && g.order() < 2 {
        return Err(GraphError::TooSmallForTotalGame);
    }
    Ok(())
}

/// Largest order for which the exact memo is a flat array indexed by position.
const DENSE_MEMO_MAX_ORDER: usize = 22;

enum ExactMemo {
    Dense(Vec<u8>),
    Sparse(HashMap<(u64, bool), u8>),
}

impl ExactMemo {
    fn new(n: usize) -> Self {
        if n <= DENSE_MEMO_MAX_ORDER {
            ExactMemo::Dense(vec![0; 1 << (n + 1)])
        } else {
            ExactMemo::Sparse(HashMap::new())
        }
    }

    #[inline]
    fn get(&self, played: VertexSet, staller: bool) -> Option<u32> {
        match self {
            ExactMemo::Dense(t) => {
                let e = t[(played.bits() << 1 | staller as u64) as usize];
                (e != 0).then(|| e as u32 - 1)
            }
            ExactMemo::Sparse(m) => m.get(&(played.bits(), staller)).map(|&e| e as u32),
        }
    }

    #[inline]
    fn put(&mut self, played: VertexSet, staller: bool, value: u32) {
        match self {
            ExactMemo::Dense(t) => {
                t[(played.bits() << 1 | staller as u64) as usize] = value as u8 + 1
            }
            ExactMemo::Sparse(m) => {
                m.insert((played.bits(), staller), value as u8);
            }
        }
    }
}

#[derive(Clone, Copy)]
enum Bound {
    Exact,
    Lower,
    Upper,
}

/// A solve session for one graph and one variant. Owns its memo table, so
/// repeated queries on the same graph share work.
pub struct Solver<'g> {
    graph: &'g Graph,
    variant: Variant,
    options: SolveOptions,
    exact: ExactMemo,
    bounded: HashMap<(u64, bool), (u8, Bound)>,
    stats: SolveStats,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, variant: Variant) -> Result<Self, GraphError> {
        Self::with_options(graph, variant, SolveOptions::default())
    }

    pub fn with_options(
        graph: &'g Graph,
        variant: Variant,
        options: SolveOptions,
    ) -> Result<Self, GraphError> {
        check_game_graph(graph, variant)?;
        let exact = match options.mode {
            SearchMode::Memo => ExactMemo::new(graph.order()),
            SearchMode::AlphaBeta => ExactMemo::Sparse(HashMap::new()),
        };
        Ok(Solver {
            graph,
            variant,
            options,
            exact,
            bounded: HashMap::new(),
            stats: SolveStats::default(),
        })
    }

    pub fn stats(&self) -> SolveStats {
        self.stats
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Value of the game started by `starter` from the empty position.
    pub fn solve(&mut self, starter: Player) -> u32 {
        self.value(VertexSet::EMPTY, starter)
    }

    /// Final number of played vertices from `played` with `turn` to move, under optimal play.
    pub fn value(&mut self, played: VertexSet, turn: Player) -> u32 {
        match self.options.mode {
            SearchMode::Memo => self.exact_value(played, turn),
            SearchMode::AlphaBeta => {
                self.alpha_beta(played, turn, 0, self.graph.order() as u32 + 1)
            }
        }
    }

    fn ordered(&self, moves: VertexSet) -> impl Iterator<Item = usize> {
        let (asc, desc) = match self.options.order {
            MoveOrder::Ascending => (Some(moves.iter()), None),
            MoveOrder::Descending => (None, Some(moves.iter_rev())),
        };
        asc.into_iter().flatten().chain(desc.into_iter().flatten())
    }

    fn terminal_value(&self, played: VertexSet) -> u32 {
        debug_assert_eq!(
            dominated_set(self.graph, self.variant, played),
            self.graph.vertices(),
            "no legal move left but the graph is not dominated"
        );
        played.len() as u32
    }

    fn exact_value(&mut self, played: VertexSet, turn: Player) -> u32 {
        let staller = turn == Player::Staller;
        if let Some(v) = self.exact.get(played, staller) {
            self.stats.memo_hits += 1;
            return v;
        }
        self.stats.states_expanded += 1;
        let moves = legal_moves(self.graph, self.variant, played);
        let value = if moves.is_empty() {
            self.terminal_value(played)
        } else {
            let next = turn.other();
            let children: Vec<usize> = self.ordered(moves).collect();
            let mut best = if staller { 0 } else { u32::MAX };
            for v in children {
                let child = self.exact_value(played.with(v), next);
                best = if staller {
                    best.max(child)
                } else {
                    best.min(child)
                };
            }
            best
        };
        self.exact.put(played, staller, value);
        value
    }

    /// Fail-soft alpha-beta. The returned value `r` satisfies: `r <= alpha`
    /// implies the true value is at most `r`, `r >= beta` implies it is at
    /// least `r`, otherwise `r` is exact.
    fn alpha_beta(
        &mut self,
        played: VertexSet,
        turn: Player,
        mut alpha: u32,
        mut beta: u32,
    ) -> u32 {
        let staller = turn == Player::Staller;
        let key = (played.bits(), staller);
        let (orig_alpha, orig_beta) = (alpha, beta);
        if let Some(&(v, bound)) = self.bounded.get(&key) {
            self.stats.memo_hits += 1;
            let v = v as u32;
            match bound {
                Bound::Exact => return v,
                Bound::Lower => alpha = alpha.max(v),
                Bound::Upper => beta = beta.min(v),
            }
            if alpha >= beta {
                return v;
            }
        }
        self.stats.states_expanded += 1;
        let moves = legal_moves(self.graph, self.variant, played);
        if moves.is_empty() {
            let v = self.terminal_value(played);
            self.bounded.insert(key, (v as u8, Bound::Exact));
            return v;
        }
        let next = turn.other();
        let children: Vec<usize> = self.ordered(moves).collect();
        let mut best = if staller { 0 } else { u32::MAX };
        for v in children {
            let child = self.alpha_beta(played.with(v), next, alpha, beta);
            if staller {
                best = best.max(child);
                alpha = alpha.max(child);
            } else {
                best = best.min(child);
                beta = beta.min(child);
            }
            if alpha >= beta {
                break;
            }
        }
        let bound = if best <= orig_alpha {
            Bound::Upper
        } else if best >= orig_beta {
            Bound::Lower
        } else {
            Bound::Exact
        };
        self.bounded.insert(key, (best as u8, bound));
        best
    }

    /// Value of the game after `mover` opens at each vertex, indexed by vertex.
    pub fn first_move_values(&mut self, mover: Player) -> Vec<Option<u32>> {
        let opening = legal_moves(self.graph, self.variant, VertexSet::EMPTY);
        (0..self.graph.order())
            .map(|v| {
                opening
                    .contains(v)
                    .then(|| self.value(VertexSet::singleton(v), mover.other()))
            })
            .collect()
    }

    /// A legal move achieving the minimax value; ties go to the smallest vertex.
    pub fn best_move(&mut self, played: VertexSet, turn: Player) -> Result<usize, GameError> {
        if !played.is_subset(self.graph.vertices()) {
            return Err(GameError::PlayedOutOfRange);
        }
        let moves = legal_moves(self.graph, self.variant, played);
        let mut best: Option<(u32, usize)> = None;
        for v in moves.iter() {
            let val = self.value(played.with(v), turn.other());
            let better = match best {
                None => true,
                Some((b, _)) => match turn {
                    Player::Dominator => val < b,
                    Player::Staller => val > b,
                },
            };
            if better {
                best = Some((val, v));
            }
        }
        best.map(|(_, v)| v).ok_or(GameError::Terminal)
    }

    /// Plays the game out with both players following [`Solver::best_move`].
    pub fn optimal_play(&mut self, starter: Player) -> Vec<usize> {
        let mut played = VertexSet::EMPTY;
        let mut turn = starter;
        let mut seq = Vec::new();
        while let Ok(v) = self.best_move(played, turn) {
            seq.push(v);
            played.insert(v);
            turn = turn.other();
        }
        seq
    }
}

pub fn solve(g: &Graph, variant: Variant, starter: Player) -> Result<u32, GraphError> {
    Ok(Solver::new(g, variant)?.solve(starter))
}

/// `c(v)` (Connected) or `t(v)` (TotalConnected): the game value when
/// Dominator's first move is `v`. `None` for vertices that are not legal openings.
pub fn per_vertex_values(g: &Graph, variant: Variant) -> Result<Vec<Option<u32>>, GraphError> {
    Ok(Solver::new(g, variant)?.first_move_values(Player::Dominator))
}

pub fn best_move(
    g: &Graph,
    variant: Variant,
    played: VertexSet,
    turn: Player,
) -> Result<usize, GameError> {
    Solver::new(g, variant)?.best_move(played, turn)
}

pub const NAIVE_MAX_ORDER: usize = 10;

/// Reference minimax with no memo and no pruning.
pub fn naive_solve(g: &Graph, variant: Variant, starter: Player) -> Result<u32, GameError> {
    if g.order() > NAIVE_MAX_ORDER {
        return Err(GameError::TooLargeForNaive {
            limit: NAIVE_MAX_ORDER,
            got: g.order(),
        });
    }
    check_game_graph(g, variant)?;
    fn go(g: &Graph, variant: Variant, played: VertexSet, turn: Player) -> u32 {
        let moves = legal_moves(g, variant, played);
        if moves.is_empty() {
            return played.len() as u32;
        }
        let vals = moves
            .iter()
            .map(|v| go(g, variant, played.with(v), turn.other()));
        match turn {
            Player::Dominator => vals.min().unwrap(),
            Player::Staller => vals.max().unwrap(),
        }
    }
    Ok(go(g, variant, VertexSet::EMPTY, starter))
}

/// Splits the search at the root across `workers` threads, one memo per
/// opening move, and combines by min/max. Agrees with [`solve`].
pub fn solve_parallel(
    g: &Graph,
    variant: Variant,
    starter: Player,
    workers: usize,
    options: SolveOptions,
) -> Result<u32, GraphError> {
    let values = first_move_values_parallel(g, variant, starter, workers, options)?;
    let it = values.into_iter().flatten();
    Ok(match starter {
        Player::Dominator => it.min(),
        Player::Staller => it.max(),
    }
    .expect("a connected graph has a legal opening"))
}

pub fn first_move_values_parallel(
    g: &Graph,
    variant: Variant,
    mover: Player,
    workers: usize,
    options: SolveOptions,
) -> Result<Vec<Option<u32>>, GraphError> {
    check_game_graph(g, variant)?;
    let opening = legal_moves(g, variant, VertexSet::EMPTY);
    let task = |v: usize| -> Option<u32> {
        opening.contains(v).then(|| {
            let mut s = Solver::with_options(g, variant, options).expect("checked");
            s.value(VertexSet::singleton(v), mover.other())
        })
    };
    if workers <= 1 {
        return Ok((0..g.order()).map(task).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    Ok(pool.install(|| (0..g.order()).into_par_iter().map(task).collect()))
}

/// All four game numbers and the per-opening maps `c(v)` and `t(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameReport {
    pub gamma_cg: u32,
    pub gamma_cg_s: u32,
    pub gamma_tcg: u32,
    pub gamma_tcg_s: u32,
    pub c_of_v: Vec<u32>,
    pub t_of_v: Vec<u32>,
}

pub fn analyze(g: &Graph) -> Result<GameReport, GraphError> {
    analyze_with(g, SolveOptions::default())
}

pub fn analyze_with(g: &Graph, options: SolveOptions) -> Result<GameReport, GraphError> {
    let mut c = Solver::with_options(g, Variant::Connected, options)?;
    let mut t = Solver::with_options(g, Variant::TotalConnected, options)?;
    // both graphs are connected with n >= 2 here, so every vertex is a legal opening
    let c_of_v: Vec<u32> = c
        .first_move_values(Player::Dominator)
        .into_iter()
        .map(Option::unwrap)
        .collect();
    let t_of_v: Vec<u32> = t
        .first_move_values(Player::Dominator)
        .into_iter()
        .map(Option::unwrap)
        .collect();
    let report = GameReport {
        gamma_cg: c.solve(Player::Dominator),
        gamma_cg_s: c.solve(Player::Staller),
        gamma_tcg: t.solve(Player::Dominator),
        gamma_tcg_s: t.solve(Player::Staller),
        c_of_v,
        t_of_v,
    };
    debug_assert_eq!(report.c_of_v.iter().min(), Some(&report.gamma_cg));
    debug_assert_eq!(report.t_of_v.iter().min(), Some(&report.gamma_tcg));
    Ok(report)
}
