mod input;
mod output;

use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use domgame_core::classify::{game_values, label};
use domgame_core::enumerate::{connected_labeled, labeled_trees, MAX_ENUMERATION_ORDER};
use domgame_core::families::{complete, cycle, path, star};
use domgame_core::game::{
    first_move_values_parallel, solve_parallel, Player, SolveOptions, Variant,
};
use domgame_core::io::emit_graph6;
use domgame_core::record::GraphRecord;
use domgame_core::verify::{
    for_each_ordered, known_values, scan_claims, scan_staller_start, scan_tcg_range,
    verify_cartesian_class0, verify_class_bounds, verify_gamma_c_bounds,
    verify_non_inclusive_class0, verify_tree, ClaimTally, VerificationResult,
};
use domgame_core::Graph;

use input::{FamilyParams, InputArgs};
use output::{to_row, Format, Sink};

#[derive(Debug, Parser)]
#[command(
    name = "domgame",
    version,
    about = "Exact values of the connected and total connected domination games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Game value for one variant and starter
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Both Dominator-start values and the class (their difference)
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Game value after each possible opening move
    PerVertex {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print a graph: graph6, order, size, labels and edges
    Family {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check known values and structural claims; exit 2 on any counterexample
    Verify {
        /// Built-in suite to run (default `paper` when no graph is given)
        #[arg(long, value_enum, conflicts_with = "input")]
        suite: Option<Suite>,
        /// Largest order for the exhaustive scans of the suite
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..=MAX_ENUMERATION_ORDER as u64))]
        max_n: u64,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Stream records over all connected labeled graphs up to --max-n, or over the input graphs
    Scan {
        /// Summarize an open question instead of emitting per-graph records
        #[arg(long, value_enum)]
        question: Option<Question>,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(2..=MAX_ENUMERATION_ORDER as u64))]
        max_n: u64,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Connected,
    Total,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StarterArg {
    /// Dominator moves first
    D,
    /// Staller moves first
    S,
}

#[derive(Debug, Args)]
struct GameArgs {
    #[arg(long, value_enum, default_value = "connected")]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "d")]
    starter: StarterArg,
}

impl GameArgs {
    fn variant(&self) -> Variant {
        match self.variant {
            VariantArg::Connected => Variant::Connected,
            VariantArg::Total => Variant::TotalConnected,
        }
    }

    fn starter(&self) -> Player {
        match self.starter {
            StarterArg::D => Player::Dominator,
            StarterArg::S => Player::Staller,
        }
    }

    fn describe(&self, row: &mut Map<String, Value>) {
        let v = self.variant.to_possible_value().unwrap();
        let s = self.starter.to_possible_value().unwrap();
        row.insert("variant".into(), v.get_name().into());
        row.insert("starter".into(), s.get_name().into());
    }
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads; output does not depend on this
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    workers: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Question {
    /// Which total-game values occur for each connected domination number
    TcgRange,
    /// Do the Staller-start values of the two games agree on non-complete graphs?
    StallerStart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Everything below
    #[value(name = "paper", alias = "all")]
    All,
    /// Known game values of the named families
    Regressions,
    /// Class trichotomy and bounds on every connected graph up to --max-n
    Claims,
    /// Closed forms on every labeled tree with 3 to 8 vertices
    Trees,
    /// Cartesian products of small paths, cycles, stars and cliques
    Products,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type Out<'a> = Sink<io::BufWriter<io::StdoutLock<'a>>>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let msg = match e {
                CliError::Usage(m) | CliError::Input(m) => m,
                CliError::Io(e) => e.to_string(),
            };
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// `Ok(false)` means a verification found a counterexample.
fn run(cli: Cli) -> Result<bool, CliError> {
    let stdout = io::stdout();
    let format = match &cli.command {
        Command::Compute { common, .. }
        | Command::Classify { common, .. }
        | Command::PerVertex { common, .. }
        | Command::Family { common, .. }
        | Command::Verify { common, .. }
        | Command::Scan { common, .. } => common.format,
    };
    let mut out = Sink::new(format, io::BufWriter::new(stdout.lock()));
    let result = match cli.command {
        Command::Compute {
            input,
            params,
            game,
            common,
        } => compute(
            &input.load(&params)?,
            &game,
            common.workers as usize,
            &mut out,
        )
        .map(|_| true),
        Command::Classify { input, params, .. } => {
            classify(&input.load(&params)?, &mut out).map(|_| true)
        }
        Command::PerVertex {
            input,
            params,
            game,
            common,
        } => per_vertex(
            &input.load(&params)?,
            &game,
            common.workers as usize,
            &mut out,
        )
        .map(|_| true),
        Command::Family { input, params, .. } => {
            describe(&input.load(&params)?, &mut out).map(|_| true)
        }
        Command::Verify {
            suite,
            max_n,
            input,
            params,
            common,
        } => {
            let workers = common.workers as usize;
            if input.is_given() {
                verify_graphs(&input.load(&params)?, &mut out)
            } else {
                verify_suite(
                    suite.unwrap_or(Suite::All),
                    max_n as usize,
                    workers,
                    &mut out,
                )
            }
        }
        Command::Scan {
            question,
            max_n,
            input,
            params,
            common,
        } => {
            let graphs: Box<dyn Iterator<Item = Graph>> = if input.is_given() {
                Box::new(input.load(&params)?.into_iter())
            } else {
                Box::new(
                    (2..=max_n as usize)
                        .flat_map(|n| connected_labeled(n).expect("order checked by clap")),
                )
            };
            scan(question, graphs, common.workers as usize, &mut out).map(|_| true)
        }
    };
    out.flush()?;
    result
}

fn game_error(g: &Graph, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {e}", emit_graph6(g)))
}

fn compute(
    graphs: &[Graph],
    game: &GameArgs,
    workers: usize,
    out: &mut Out,
) -> Result<(), CliError> {
    for g in graphs {
        let value = solve_parallel(
            g,
            game.variant(),
            game.starter(),
            workers,
            SolveOptions::default(),
        )
        .map_err(|e| game_error(g, e))?;
        let mut row = Map::new();
        row.insert("graph".into(), emit_graph6(g).into());
        game.describe(&mut row);
        row.insert("value".into(), value.into());
        out.row(row)?;
    }
    Ok(())
}

fn classify(graphs: &[Graph], out: &mut Out) -> Result<(), CliError> {
    for g in graphs {
        let (cg, tcg) = game_values(g, SolveOptions::default()).map_err(|e| game_error(g, e))?;
        let class = label(cg, tcg).ok().map(|l| l.class);
        out.row(to_row(&json!({
            "graph": emit_graph6(g),
            "gamma_cg": cg,
            "gamma_tcg": tcg,
            "class": class,
        })))?;
    }
    Ok(())
}

fn per_vertex(
    graphs: &[Graph],
    game: &GameArgs,
    workers: usize,
    out: &mut Out,
) -> Result<(), CliError> {
    for g in graphs {
        let values = first_move_values_parallel(
            g,
            game.variant(),
            game.starter(),
            workers,
            SolveOptions::default(),
        )
        .map_err(|e| game_error(g, e))?;
        let g6 = emit_graph6(g);
        for (v, value) in values.into_iter().enumerate() {
            let mut row = Map::new();
            row.insert("graph".into(), g6.clone().into());
            game.describe(&mut row);
            row.insert("vertex".into(), v.into());
            row.insert("label".into(), g.label(v).into());
            row.insert("value".into(), value.into());
            out.row(row)?;
        }
    }
    Ok(())
}

fn describe(graphs: &[Graph], out: &mut Out) -> Result<(), CliError> {
    for g in graphs {
        let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
        out.row(to_row(&json!({
            "graph": emit_graph6(g),
            "n": g.order(),
            "m": g.size(),
            "labels": g.labels(),
            "edges": edges,
        })))?;
    }
    Ok(())
}

fn verify_graphs(graphs: &[Graph], out: &mut Out) -> Result<bool, CliError> {
    let mut all = true;
    for g in graphs {
        // a claim about connected graphs cannot be falsified by an invalid input
        if g.order() < 2 || !g.is_connected() {
            return Err(game_error(
                g,
                "claims need a connected graph with at least two vertices",
            ));
        }
        let mut results = vec![
            verify_class_bounds(g),
            verify_gamma_c_bounds(g),
            verify_non_inclusive_class0(g),
        ];
        if g.is_tree() && g.order() >= 3 {
            results.push(verify_tree(g));
        }
        for r in results {
            all &= r.holds;
            out.row(to_row(&r))?;
        }
    }
    Ok(all)
}

fn summary(out: &mut Out, check: &str, tally: &ClaimTally) -> io::Result<()> {
    for c in &tally.counterexamples {
        out.row(to_row(
            &json!({ "check": check, "graph": c.graph, "observed": c.observed }),
        ))?;
    }
    out.row(to_row(&json!({
        "check": check,
        "checked": tally.checked,
        "held": tally.held,
        "holds": tally.all_hold(),
    })))
}

fn tally<I: IntoIterator<Item = VerificationResult>>(results: I) -> ClaimTally {
    let mut t = ClaimTally::default();
    for r in results {
        t.record(r);
    }
    t
}

fn verify_suite(
    suite: Suite,
    max_n: usize,
    workers: usize,
    out: &mut Out,
) -> Result<bool, CliError> {
    let runs = |s: Suite| suite == Suite::All || suite == s;
    let mut all = true;

    if runs(Suite::Regressions) {
        let results = known_values(true);
        for r in results.iter().filter(|r| !r.holds) {
            out.row(to_row(r))?;
        }
        let t = tally(results);
        all &= t.all_hold();
        out.row(to_row(&json!({
            "check": "regressions",
            "checked": t.checked,
            "held": t.held,
            "holds": t.all_hold(),
        })))?;
    }

    if runs(Suite::Claims) {
        let graphs = (2..=max_n).flat_map(|n| connected_labeled(n).expect("order checked by clap"));
        let s = scan_claims(graphs, workers, SolveOptions::default());
        for (claim, t) in &s.claims {
            all &= t.all_hold();
            summary(out, &format!("{claim} (n <= {max_n})"), t)?;
        }
    }

    if runs(Suite::Trees) {
        let mut t = ClaimTally::default();
        let trees = (3..=8).flat_map(|n| labeled_trees(n).expect("3..=8 is supported"));
        for_each_ordered(trees, workers, verify_tree, |_, r| t.record(r));
        all &= t.all_hold();
        summary(out, "trees (3 <= n <= 8)", &t)?;
    }

    if runs(Suite::Products) {
        let mut factors = Vec::new();
        for n in 2..=6 {
            factors.push(path(n).unwrap());
            factors.push(complete(n).unwrap());
            if n >= 3 {
                factors.push(cycle(n).unwrap());
            }
            if n >= 4 {
                factors.push(star(n).unwrap());
            }
        }
        let mut pairs = Vec::new();
        for g in &factors {
            for h in &factors {
                if g.order() * h.order() <= 12 {
                    pairs.push((g, h));
                }
            }
        }
        let t = tally(
            pairs
                .into_iter()
                .map(|(g, h)| verify_cartesian_class0(g, h).expect("product fits")),
        );
        all &= t.all_hold();
        summary(out, "cartesian products (n <= 12)", &t)?;
    }
    Ok(all)
}

fn scan(
    question: Option<Question>,
    graphs: impl Iterator<Item = Graph>,
    workers: usize,
    out: &mut Out,
) -> Result<(), CliError> {
    match question {
        None => {
            let mut err = None;
            let record = |g: &Graph| GraphRecord::compute(g, SolveOptions::default());
            for_each_ordered(graphs, workers, record, |g, r| {
                if err.is_some() {
                    return;
                }
                let row = match r {
                    Ok(rec) => to_row(&rec),
                    Err(e) => to_row(&json!({ "graph": emit_graph6(g), "error": e.to_string() })),
                };
                if let Err(e) = out.row(row) {
                    err = Some(e);
                }
            });
            err.map_or(Ok(()), |e| Err(e.into()))
        }
        Some(Question::StallerStart) => {
            let report = scan_staller_start(graphs, workers);
            for r in &report.counterexamples {
                out.row(to_row(r))?;
            }
            out.row(to_row(&json!({
                "question": "staller-start",
                "examined": report.examined,
                "skipped_complete": report.skipped_complete,
                "equal": report.equal,
                "equality_rate": report.equality_rate(),
            })))?;
            Ok(())
        }
        Some(Question::TcgRange) => {
            let hist = scan_tcg_range(graphs, workers);
            let unrealized = hist.unrealized();
            for (gc, counts) in &hist.buckets {
                let counts: Map<String, Value> = counts
                    .iter()
                    .map(|(k, v)| (k.to_string(), (*v).into()))
                    .collect();
                out.row(to_row(&json!({
                    "gamma_c": gc,
                    "gamma_tcg_counts": counts,
                    "unrealized": unrealized[gc],
                })))?;
            }
            Ok(())
        }
    }
}
