//! Claim checks on individual graphs, exhaustive scans, and the regression
//! suite of known game values.
//!
//! A check never panics on a false claim; it returns a [`VerificationResult`]
//! carrying the graph and the observed numbers.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{self, tree_class, tree_game_value, GameClass};
use crate::error::GraphError;
use crate::families::*;
use crate::game::{Player, SolveOptions, Solver, Variant};
use crate::graph::Graph;
use crate::invariants::{connected_dominating_sets_of_size, connected_domination_number};
use crate::io::emit_graph6;
use crate::vertex_set::VertexSet;

pub type Observed = BTreeMap<String, i64>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph: String,
    pub observed: Observed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationResult {
    pub claim: String,
    pub holds: bool,
    /// The graph (graph6) the claim was checked on.
    pub graph: String,
    pub observed: Observed,
    pub counterexample: Option<Counterexample>,
}

impl VerificationResult {
    pub fn new(claim: impl Into<String>, g: &Graph, observed: Observed, holds: bool) -> Self {
        let graph = emit_graph6(g);
        let counterexample = (!holds).then(|| Counterexample {
            graph: graph.clone(),
            observed: observed.clone(),
        });
        VerificationResult {
            claim: claim.into(),
            holds,
            graph,
            observed,
            counterexample,
        }
    }

    fn failed_precondition(
        claim: impl Into<String>,
        g: &Graph,
        err: impl std::fmt::Display,
    ) -> Self {
        let mut r = Self::new(claim, g, Observed::new(), false);
        r.observed.insert(format!("error: {err}"), 1);
        if let Some(c) = r.counterexample.as_mut() {
            c.observed = r.observed.clone();
        }
        r
    }
}

fn observed<const N: usize>(pairs: [(&str, i64); N]) -> Observed {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// `gamma_cg <= gamma_tcg <= gamma_cg + 2`.
pub fn verify_class_bounds(g: &Graph) -> VerificationResult {
    verify_class_bounds_with(g, SolveOptions::default())
}

pub fn verify_class_bounds_with(g: &Graph, options: SolveOptions) -> VerificationResult {
    const CLAIM: &str = "class_bounds";
    match classify::game_values(g, options) {
        Ok((cg, tcg)) => VerificationResult::new(
            CLAIM,
            g,
            observed([("gamma_cg", cg as i64), ("gamma_tcg", tcg as i64)]),
            cg <= tcg && tcg <= cg + 2,
        ),
        Err(e) => VerificationResult::failed_precondition(CLAIM, g, e),
    }
}

/// `gamma_tcg = 2` when `gamma_c = 1`, otherwise `gamma_c <= gamma_tcg <= 2 gamma_c - 1`.
pub fn verify_gamma_c_bounds(g: &Graph) -> VerificationResult {
    const CLAIM: &str = "gamma_c_bounds";
    let run = || -> Result<(i64, i64), GraphError> {
        let gc = connected_domination_number(g)?.size as i64;
        let tcg = Solver::new(g, Variant::TotalConnected)?.solve(Player::Dominator) as i64;
        Ok((gc, tcg))
    };
    match run() {
        Ok((gc, tcg)) => {
            let holds = if gc == 1 {
                tcg == 2
            } else {
                (gc..2 * gc).contains(&tcg)
            };
            VerificationResult::new(
                CLAIM,
                g,
                observed([("gamma_c", gc), ("gamma_tcg", tcg)]),
                holds,
            )
        }
        Err(e) => VerificationResult::failed_precondition(CLAIM, g, e),
    }
}

/// Non-inclusive neighbourhoods imply Class 0. Vacuous otherwise.
pub fn verify_non_inclusive_class0(g: &Graph) -> VerificationResult {
    const CLAIM: &str = "non_inclusive_class0";
    if !g.is_non_inclusive() {
        return VerificationResult::new(CLAIM, g, observed([("non_inclusive", 0)]), true);
    }
    match classify::game_values(g, SolveOptions::default()) {
        Ok((cg, tcg)) => VerificationResult::new(
            CLAIM,
            g,
            observed([
                ("non_inclusive", 1),
                ("gamma_cg", cg as i64),
                ("gamma_tcg", tcg as i64),
            ]),
            cg == tcg,
        ),
        Err(e) => VerificationResult::failed_precondition(CLAIM, g, e),
    }
}

/// Generalized coronas over connected `G` have `gamma_cg = n(G)` and `gamma_tcg = n(G) + 1`.
pub fn verify_corona(base: &Graph, attached: &[Graph]) -> Result<VerificationResult, GraphError> {
    const CLAIM: &str = "corona_values";
    if !base.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let g = base.generalized_corona(attached)?;
    let (cg, tcg) = classify::game_values(&g, SolveOptions::default())?;
    let n = base.order() as u32;
    Ok(VerificationResult::new(
        CLAIM,
        &g,
        observed([
            ("n_base", n as i64),
            ("gamma_cg", cg as i64),
            ("gamma_tcg", tcg as i64),
        ]),
        cg == n && tcg == n + 1,
    ))
}

/// `G_r`: `gamma_c = gamma_cg = 2r - 1`, `gamma_tcg = 2r + 1`, and `X ∪ Y` is the
/// only minimum connected dominating set.
pub fn verify_g_r(r: usize) -> Result<VerificationResult, GraphError> {
    let g = family_g(r)?;
    let gc = connected_domination_number(&g)?.size;
    let (cg, tcg) = classify::game_values(&g, SolveOptions::default())?;
    let xy: VertexSet = (1..=r)
        .map(|i| format!("x{i}"))
        .chain((2..=r).map(|i| format!("y{i}")))
        .map(|l| g.vertex_by_label(&l).expect("G_r label"))
        .collect();
    let minimum_sets = connected_dominating_sets_of_size(&g, gc);
    let unique = minimum_sets == [xy];
    let r = r as i64;
    Ok(VerificationResult::new(
        format!("g_r_values(r={r})"),
        &g,
        observed([
            ("gamma_c", gc as i64),
            ("gamma_cg", cg as i64),
            ("gamma_tcg", tcg as i64),
            ("minimum_cds_count", minimum_sets.len() as i64),
        ]),
        gc as i64 == 2 * r - 1 && cg as i64 == 2 * r - 1 && tcg as i64 == 2 * r + 1 && unique,
    ))
}

/// Tree closed forms against the solver.
pub fn verify_tree(t: &Graph) -> VerificationResult {
    const CLAIM: &str = "tree";
    let run = || -> Result<Observed, GraphError> {
        let formula = tree_game_value(t)? as i64;
        let (cg, tcg) = classify::game_values(t, SolveOptions::default())?;
        let class = tree_class(t)?.index() as i64;
        Ok(observed([
            ("formula", formula),
            ("gamma_cg", cg as i64),
            ("gamma_tcg", tcg as i64),
            ("tree_class", class),
        ]))
    };
    match run() {
        Ok(obs) => {
            let solver_class = obs["gamma_tcg"] - obs["gamma_cg"];
            let holds = obs["formula"] == obs["gamma_cg"]
                && obs["tree_class"] == solver_class
                && solver_class != 2;
            VerificationResult::new(CLAIM, t, obs, holds)
        }
        Err(e) => VerificationResult::failed_precondition(CLAIM, t, e),
    }
}

/// Cartesian products of non-trivial connected factors are non-inclusive and Class 0.
pub fn verify_cartesian_class0(g: &Graph, h: &Graph) -> Result<VerificationResult, GraphError> {
    let p = g.cartesian_product(h)?;
    let ni = p.is_non_inclusive();
    let (cg, tcg) = classify::game_values(&p, SolveOptions::default())?;
    Ok(VerificationResult::new(
        "cartesian_class0",
        &p,
        observed([
            ("non_inclusive", ni as i64),
            ("gamma_cg", cg as i64),
            ("gamma_tcg", tcg as i64),
        ]),
        ni && cg == tcg,
    ))
}

/// Runs `f` over `items`, in parallel with `workers` threads when `workers > 1`,
/// returning results in input order.
pub fn map_ordered<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
        .install(|| items.par_iter().map(f).collect())
}

const BATCH: usize = 1 << 14;

/// Applies `f` to a stream in batches so large enumerations do not need to be
/// held in memory. Output order follows input order.
pub fn for_each_ordered<I, R, F, S>(graphs: I, workers: usize, f: F, mut sink: S)
where
    I: IntoIterator<Item = Graph>,
    R: Send,
    F: Fn(&Graph) -> R + Sync + Send,
    S: FnMut(&Graph, R),
{
    let pool = (workers > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
    });
    let mut it = graphs.into_iter();
    loop {
        let batch: Vec<Graph> = it.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let out: Vec<R> = match &pool {
            None => batch.iter().map(&f).collect(),
            Some(p) => p.install(|| batch.par_iter().map(&f).collect()),
        };
        for (g, r) in batch.iter().zip(out) {
            sink(g, r);
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub checked: u64,
    pub held: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl ClaimTally {
    pub fn record(&mut self, r: VerificationResult) {
        self.checked += 1;
        if r.holds {
            self.held += 1;
        } else if let Some(c) = r.counterexample {
            self.counterexamples.push(c);
        }
    }

    pub fn all_hold(&self) -> bool {
        self.checked == self.held
    }
}

/// Per-claim tallies from an exhaustive scan.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub graphs: u64,
    pub claims: BTreeMap<String, ClaimTally>,
    /// Count of graphs per class; only graphs with n >= 2 are classified.
    pub classes: BTreeMap<u8, u64>,
}

impl ScanSummary {
    pub fn all_hold(&self) -> bool {
        self.claims.values().all(ClaimTally::all_hold)
    }
}

/// Checks the class trichotomy, the connected-domination bounds and the
/// non-inclusive criterion on every graph of the stream (graphs with `n < 2`
/// are counted but skipped).
pub fn scan_claims<I>(graphs: I, workers: usize, options: SolveOptions) -> ScanSummary
where
    I: IntoIterator<Item = Graph>,
{
    let mut summary = ScanSummary::default();
    let check = |g: &Graph| -> Option<[VerificationResult; 3]> {
        if g.order() < 2 {
            return None;
        }
        let bounds = verify_class_bounds_with(g, options);
        let gc_bounds = verify_gamma_c_bounds(g);
        let non_inclusive = verify_non_inclusive_class0(g);
        Some([bounds, gc_bounds, non_inclusive])
    };
    for_each_ordered(graphs, workers, check, |_, res| {
        summary.graphs += 1;
        let Some(results) = res else { return };
        if let (Some(&cg), Some(&tcg)) = (
            results[0].observed.get("gamma_cg"),
            results[0].observed.get("gamma_tcg"),
        ) {
            if let Some(c) = GameClass::from_difference(tcg - cg) {
                *summary.classes.entry(c.index()).or_default() += 1;
            }
        }
        for r in results {
            summary.claims.entry(r.claim.clone()).or_default().record(r);
        }
    });
    summary
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StallerStartReport {
    pub examined: u64,
    pub skipped_complete: u64,
    pub equal: u64,
    /// Graphs where the two Staller-start values differ.
    pub counterexamples: Vec<VerificationResult>,
}

impl StallerStartReport {
    pub fn equality_rate(&self) -> f64 {
        if self.examined == 0 {
            1.0
        } else {
            self.equal as f64 / self.examined as f64
        }
    }
}

/// Compares the Staller-start values of both games on every non-complete graph.
pub fn check_staller_start(g: &Graph) -> Option<VerificationResult> {
    if g.is_complete() {
        return None;
    }
    let run = || -> Result<(u32, u32), GraphError> {
        let cg_s = Solver::new(g, Variant::Connected)?.solve(Player::Staller);
        let tcg_s = Solver::new(g, Variant::TotalConnected)?.solve(Player::Staller);
        Ok((cg_s, tcg_s))
    };
    Some(match run() {
        Ok((cg_s, tcg_s)) => VerificationResult::new(
            "staller_start_equal",
            g,
            observed([("gamma_cg_s", cg_s as i64), ("gamma_tcg_s", tcg_s as i64)]),
            cg_s == tcg_s,
        ),
        Err(e) => VerificationResult::failed_precondition("staller_start_equal", g, e),
    })
}

pub fn scan_staller_start<I>(graphs: I, workers: usize) -> StallerStartReport
where
    I: IntoIterator<Item = Graph>,
{
    let mut report = StallerStartReport::default();
    for_each_ordered(graphs, workers, check_staller_start, |_, res| match res {
        None => report.skipped_complete += 1,
        Some(r) => {
            report.examined += 1;
            if r.holds {
                report.equal += 1;
            } else {
                report.counterexamples.push(r);
            }
        }
    });
    report
}

/// Which `gamma_tcg` values occur for each `gamma_c >= 2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TcgRangeHistogram {
    /// `gamma_c -> gamma_tcg -> count`.
    pub buckets: BTreeMap<u32, BTreeMap<u32, u64>>,
}

impl TcgRangeHistogram {
    pub fn add(&mut self, gamma_c: u32, gamma_tcg: u32) {
        *self
            .buckets
            .entry(gamma_c)
            .or_default()
            .entry(gamma_tcg)
            .or_default() += 1;
    }

    /// Values of `[gamma_c, 2 gamma_c - 1]` not hit, per populated bucket.
    pub fn unrealized(&self) -> BTreeMap<u32, Vec<u32>> {
        self.buckets
            .iter()
            .map(|(&gc, hits)| {
                (
                    gc,
                    (gc..=2 * gc - 1)
                        .filter(|v| !hits.contains_key(v))
                        .collect(),
                )
            })
            .collect()
    }
}

pub fn scan_tcg_range<I>(graphs: I, workers: usize) -> TcgRangeHistogram
where
    I: IntoIterator<Item = Graph>,
{
    let mut hist = TcgRangeHistogram::default();
    let pair = |g: &Graph| -> Option<(u32, u32)> {
        let gc = connected_domination_number(g).ok()?.size as u32;
        if gc < 2 {
            return None;
        }
        let tcg = Solver::new(g, Variant::TotalConnected)
            .ok()?
            .solve(Player::Dominator);
        Some((gc, tcg))
    };
    for_each_ordered(graphs, workers, pair, |_, res| {
        if let Some((gc, tcg)) = res {
            hist.add(gc, tcg);
        }
    });
    hist
}

/// Checks a list of expected values against the solver.
fn expect_values(claim: &str, g: &Graph, expected: &[(&str, u32)]) -> VerificationResult {
    let mut obs = Observed::new();
    let mut holds = true;
    let mut c = None;
    let mut t = None;
    for &(key, want) in expected {
        let got: Option<u32> = match key {
            "gamma_cg" => Solver::new(g, Variant::Connected)
                .ok()
                .map(|mut s| s.solve(Player::Dominator)),
            "gamma_tcg" => Solver::new(g, Variant::TotalConnected)
                .ok()
                .map(|mut s| s.solve(Player::Dominator)),
            "gamma_c" => connected_domination_number(g).ok().map(|o| o.size as u32),
            k if k.starts_with("c(") || k.starts_with("t(") => {
                let label = &k[2..k.len() - 1];
                let (variant, cache) = if k.starts_with('c') {
                    (Variant::Connected, &mut c)
                } else {
                    (Variant::TotalConnected, &mut t)
                };
                if cache.is_none() {
                    *cache = Solver::new(g, variant)
                        .ok()
                        .map(|mut s| s.first_move_values(Player::Dominator));
                }
                let v = g.vertex_by_label(label).or_else(|| label.parse().ok());
                match (cache.as_ref(), v) {
                    (Some(vals), Some(v)) if v < vals.len() => vals[v],
                    _ => None,
                }
            }
            _ => None,
        };
        obs.insert(key.to_string(), got.map_or(-1, |v| v as i64));
        holds &= got == Some(want);
    }
    VerificationResult::new(claim, g, obs, holds)
}

/// Every known game value used as a regression target. `include_slow` adds the
/// 20-vertex `(C_5 ⊙ K_1) × K_2` instance.
pub fn known_values(include_slow: bool) -> Vec<VerificationResult> {
    let k1 = complete(1).unwrap();
    let k2 = complete(2).unwrap();
    let mut out = Vec::new();

    out.push(expect_values(
        "F_8 values",
        &family_f(2).unwrap(),
        &[("gamma_cg", 4), ("gamma_tcg", 4)],
    ));
    out.push(expect_values(
        "D_15 values",
        &family_d15(),
        &[
            ("gamma_cg", 9),
            ("gamma_tcg", 9),
            ("c(y2)", 10),
            ("t(y2)", 10),
            ("c(v2)", 10),
            ("t(v2)", 10),
        ],
    ));
    for r in [3, 4] {
        let g = family_g(r).unwrap();
        let r32 = r as u32;
        out.push(expect_values(
            &format!("G_{r} values"),
            &g,
            &[
                ("gamma_c", 2 * r32 - 1),
                ("gamma_cg", 2 * r32 - 1),
                ("gamma_tcg", 2 * r32 + 1),
            ],
        ));
        out.push(verify_g_r(r).unwrap());
    }
    out.push(expect_values(
        "paw x K_2 values",
        &paw().direct_product(&k2).unwrap(),
        &[("gamma_cg", 5), ("gamma_tcg", 5)],
    ));
    let odd_cycles: &[usize] = if include_slow { &[3, 5] } else { &[3] };
    for &len in odd_cycles {
        let k = (len as u32 - 1) / 2;
        let g = cycle(len)
            .unwrap()
            .corona()
            .unwrap()
            .direct_product(&k2)
            .unwrap();
        out.push(expect_values(
            &format!("(C_{len} corona K_1) x K_2 values"),
            &g,
            &[("gamma_cg", 4 * k + 2), ("gamma_tcg", 4 * k + 3)],
        ));
    }
    for n in 3..=8 {
        out.push(expect_values(
            &format!("star({n}) universal"),
            &star(n).unwrap(),
            &[("gamma_tcg", 2)],
        ));
        out.push(expect_values(
            &format!("complete({n}) universal"),
            &complete(n).unwrap(),
            &[("gamma_tcg", 2)],
        ));
    }
    let p2 = path(2).unwrap();
    let corona_bases = [
        k2.clone(),
        path(3).unwrap(),
        cycle(3).unwrap(),
        path(4).unwrap(),
    ];
    for base in &corona_bases {
        for pattern in 0..3 {
            let hs: Vec<Graph> = (0..base.order())
                .map(|i| match (pattern, i % 2) {
                    (0, _) => k1.clone(),
                    (1, _) => p2.clone(),
                    (_, 0) => k1.clone(),
                    _ => p2.clone(),
                })
                .collect();
            out.push(verify_corona(base, &hs).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::connected_labeled;

    #[test]
    fn counterexample_iff_false() {
        let g = path(3).unwrap();
        let ok = VerificationResult::new("x", &g, Observed::new(), true);
        assert!(ok.counterexample.is_none());
        let bad = VerificationResult::new("x", &g, observed([("v", 3)]), false);
        assert_eq!(bad.counterexample.as_ref().unwrap().graph, "Bg");
        assert_eq!(bad.counterexample.unwrap().observed["v"], 3);
    }

    #[test]
    fn class_bounds_examples() {
        let k2 = verify_class_bounds(&complete(2).unwrap());
        assert!(k2.holds);
        assert_eq!((k2.observed["gamma_cg"], k2.observed["gamma_tcg"]), (1, 2));
        let g3 = verify_class_bounds(&family_g(3).unwrap());
        assert!(g3.holds);
        assert_eq!(g3.observed["gamma_tcg"] - g3.observed["gamma_cg"], 2);
        let k2 = complete(2).unwrap();
        let bad = verify_class_bounds(&k2.direct_product(&k2).unwrap());
        assert!(!bad.holds);
    }

    #[test]
    fn gamma_c_bounds_examples() {
        let s = verify_gamma_c_bounds(&star(5).unwrap());
        assert!(s.holds);
        assert_eq!(s.observed["gamma_tcg"], 2);
        let g4 = verify_gamma_c_bounds(&family_g(4).unwrap());
        assert!(g4.holds);
        assert_eq!((g4.observed["gamma_c"], g4.observed["gamma_tcg"]), (7, 9));
        assert!(verify_gamma_c_bounds(&cycle(6).unwrap()).holds);
    }

    #[test]
    fn non_inclusive_examples() {
        let grid = path(3)
            .unwrap()
            .cartesian_product(&path(3).unwrap())
            .unwrap();
        let r = verify_non_inclusive_class0(&grid);
        assert!(r.holds);
        assert_eq!(r.observed["non_inclusive"], 1);
        let f8 = verify_non_inclusive_class0(&family_f(2).unwrap());
        assert!(f8.holds);
        assert_eq!(f8.observed["non_inclusive"], 0);
        assert!(verify_non_inclusive_class0(&star(4).unwrap()).holds);
    }

    #[test]
    fn corona_examples() {
        let k1 = complete(1).unwrap();
        let k2 = complete(2).unwrap();
        let r = verify_corona(&k2, &[k1.clone(), k1.clone()]).unwrap();
        assert!(r.holds);
        assert_eq!((r.observed["gamma_cg"], r.observed["gamma_tcg"]), (2, 3));
        let r = verify_corona(&cycle(3).unwrap(), &[k1.clone(), k1.clone(), k1.clone()]).unwrap();
        assert_eq!((r.observed["gamma_cg"], r.observed["gamma_tcg"]), (3, 4));
        let r = verify_corona(&path(3).unwrap(), &[k2.clone(), k1.clone(), k2.clone()]).unwrap();
        assert!(r.holds);
        assert_eq!((r.observed["gamma_cg"], r.observed["gamma_tcg"]), (3, 4));
    }

    #[test]
    fn g3_values_and_unique_witness() {
        let r = verify_g_r(3).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.observed["minimum_cds_count"], 1);
        assert!(verify_g_r(2).is_err());
    }

    #[test]
    fn staller_start_skips_complete() {
        assert!(check_staller_start(&complete(4).unwrap()).is_none());
        let r = check_staller_start(&path(4).unwrap()).unwrap();
        let cg_s = Solver::new(&path(4).unwrap(), Variant::Connected)
            .unwrap()
            .solve(Player::Staller);
        assert_eq!(r.observed["gamma_cg_s"], cg_s as i64);
    }

    #[test]
    fn tcg_range_contributions() {
        let h = scan_tcg_range([family_g(3).unwrap()], 1);
        assert_eq!(h.buckets[&5][&7], 1);
        // trees sit at the lower end: gamma_tcg = gamma_c for Class 0 trees
        let p5 = scan_tcg_range([path(5).unwrap()], 1);
        assert_eq!(p5.buckets[&3][&3], 1);
        assert_eq!(p5.unrealized()[&3], vec![4, 5]);
    }

    #[test]
    fn scans_are_worker_independent() {
        let graphs = || connected_labeled(5).unwrap();
        let a = scan_claims(graphs(), 1, SolveOptions::default());
        let b = scan_claims(graphs(), 2, SolveOptions::default());
        assert_eq!(a, b);
        assert!(a.all_hold());
        assert_eq!(
            scan_staller_start(graphs(), 1),
            scan_staller_start(graphs(), 3)
        );
    }
}
