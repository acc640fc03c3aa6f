//! `posetlab`: solve, reduce, verify and play impartial games from text files.
//!
//! Verdicts go to stdout, statistics to stderr. Exit codes: `winner` exits 0
//! when the first player wins and 1 when the second does; `verify` exits 0
//! when every instance passed and 1 on any failure. Anything else that goes
//! wrong, including an exhausted budget, exits 2.

mod play;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use posetlab::reduction::{poset_to_setgame, reduce_kayles_to_poset};
use posetlab::solver::{Budget, GameValue, SolveStats};
use posetlab::verify::{run_suite, Suite, SuiteConfig, DEFAULT_BUDGET, DEFAULT_SEED};
use posetlab::{GameRules, Graph, Kayles, Poset, PosetGame, SetGame, Solver};

#[derive(Parser)]
#[command(name = "posetlab", version, about = "Impartial-game solver and reduction checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GameKind {
    Kayles,
    Poset,
    Setgame,
}

#[derive(Subcommand)]
enum Command {
    /// Print "first" or "second": who wins from the full position.
    Winner {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "poset")]
        game: GameKind,
        /// Maximum states expanded (default: unlimited).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print the Grundy value of the full position.
    Grundy {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "poset")]
        game: GameKind,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Kayles graph to poset, or poset to set game.
    Reduce {
        input: PathBuf,
        #[arg(long, value_enum)]
        from: GameKind,
        #[arg(long, value_enum)]
        to: GameKind,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Element mapping sidecar (kayles to poset only).
        #[arg(long)]
        map_out: Option<PathBuf>,
        /// Also write the resulting poset's Hasse diagram.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        /// theorem, lemma1..lemma4, setgame, psi, or all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Per-instance JSON lines report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play against the engine on stdin/stdout.
    Play {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "poset")]
        game: GameKind,
        /// Let the engine make the first move.
        #[arg(long)]
        engine_first: bool,
    },
    /// Write a Graphviz Hasse diagram of a poset, or of a graph's reduction image.
    ExportDot {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "poset")]
        game: GameKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Loaded {
    Kayles(Graph),
    Poset(Poset),
    Setgame(SetGame),
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path, game: GameKind) -> Result<Loaded> {
    let text = read(path)?;
    let ctx = || format!("parsing {}", path.display());
    Ok(match game {
        GameKind::Kayles => Loaded::Kayles(Graph::parse(&text).with_context(ctx)?),
        GameKind::Poset => Loaded::Poset(Poset::parse(&text).with_context(ctx)?),
        GameKind::Setgame => Loaded::Setgame(SetGame::parse(&text).with_context(ctx)?),
    })
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn report_stats(stats: SolveStats) {
    eprintln!("states={} hits={} ms={}", stats.states_visited, stats.table_hits, stats.elapsed.as_millis());
}

fn budget(limit: Option<u64>) -> Budget {
    limit.map_or(Budget::Unlimited, Budget::States)
}

/// Runs `solve` on a solver for whichever game was loaded.
fn with_solver<T>(loaded: &Loaded, limit: Option<u64>, solve: impl Fn(&mut dyn SolveAny) -> Result<T>) -> Result<T> {
    match loaded {
        Loaded::Kayles(g) => solve(&mut Solver::new(Kayles::new(g)).with_budget(budget(limit))),
        Loaded::Poset(p) => solve(&mut Solver::new(PosetGame::new(p)).with_budget(budget(limit))),
        Loaded::Setgame(s) => solve(&mut Solver::new(s.clone()).with_budget(budget(limit))),
    }
}

trait SolveAny {
    fn winner(&mut self) -> Result<GameValue>;
    fn grundy(&mut self) -> Result<u32>;
    fn stats(&self) -> SolveStats;
}

impl<G: GameRules> SolveAny for Solver<G> {
    fn winner(&mut self) -> Result<GameValue> {
        Ok(self.winner_of_initial()?)
    }
    fn grundy(&mut self) -> Result<u32> {
        Ok(self.grundy_of_initial()?)
    }
    fn stats(&self) -> SolveStats {
        Solver::stats(self)
    }
}

fn cmd_winner(input: &Path, game: GameKind, limit: Option<u64>) -> Result<ExitCode> {
    let loaded = load(input, game)?;
    let value = with_solver(&loaded, limit, |s| {
        let v = s.winner();
        report_stats(s.stats());
        v
    })?;
    Ok(match value {
        GameValue::Win => {
            println!("first");
            ExitCode::SUCCESS
        }
        GameValue::Loss => {
            println!("second");
            ExitCode::from(1)
        }
    })
}

fn cmd_grundy(input: &Path, game: GameKind, limit: Option<u64>) -> Result<ExitCode> {
    let loaded = load(input, game)?;
    let value = with_solver(&loaded, limit, |s| {
        let v = s.grundy();
        report_stats(s.stats());
        v
    })?;
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(
    input: &Path,
    from: GameKind,
    to: GameKind,
    out: Option<&Path>,
    map_out: Option<&Path>,
    dot: Option<&Path>,
) -> Result<ExitCode> {
    let poset = match (from, to) {
        (GameKind::Kayles, GameKind::Poset) => {
            let Loaded::Kayles(g) = load(input, from)? else { unreachable!() };
            let image = reduce_kayles_to_poset(&g);
            write_out(out, &image.poset().to_text())?;
            if let Some(path) = map_out {
                write_out(Some(path), &image.mapping_text())?;
            }
            image.into_poset()
        }
        (GameKind::Poset, GameKind::Setgame) => {
            if map_out.is_some() {
                bail!("--map-out only applies to kayles -> poset");
            }
            let Loaded::Poset(p) = load(input, from)? else { unreachable!() };
            write_out(out, &poset_to_setgame(&p).to_text())?;
            p
        }
        _ => bail!("unsupported reduction {from:?} -> {to:?}; use kayles -> poset or poset -> setgame"),
    };
    if let Some(path) = dot {
        write_out(Some(path), &poset.to_dot()?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: &str,
    max_n: Option<usize>,
    seed: u64,
    budget: u64,
    jobs: usize,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let suites: Vec<Suite> =
        if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse().map_err(|e: String| anyhow!(e))?] };
    let mut jsonl = String::new();
    let mut failed = false;
    let mut inconclusive = false;
    for suite in suites {
        let config =
            SuiteConfig { suite, max_n: max_n.unwrap_or(suite.default_max_n()), seed, budget, jobs: jobs.max(1) };
        let start = Instant::now();
        let report = run_suite(&config)?;
        print!("{}", report.to_text());
        eprintln!("states={} ms={}", report.states, start.elapsed().as_millis());
        failed |= !report.pass;
        inconclusive |= !report.inconclusive.is_empty();
        jsonl.push_str(&report.to_jsonl());
    }
    if let Some(path) = out {
        write_out(Some(path), &jsonl)?;
    }
    Ok(if failed {
        ExitCode::from(1)
    } else if inconclusive {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_play(input: &Path, game: GameKind, engine_first: bool) -> Result<ExitCode> {
    let loaded = load(input, game)?;
    let stdin = io::stdin().lock();
    let stdout = io::stdout().lock();
    match &loaded {
        Loaded::Kayles(g) => play::play(&Kayles::new(g), engine_first, stdin, stdout)?,
        Loaded::Poset(p) => play::play(&PosetGame::new(p), engine_first, stdin, stdout)?,
        Loaded::Setgame(s) => play::play(s, engine_first, stdin, stdout)?,
    };
    Ok(ExitCode::SUCCESS)
}

fn cmd_export_dot(input: &Path, game: GameKind, out: Option<&Path>) -> Result<ExitCode> {
    let poset = match load(input, game)? {
        Loaded::Poset(p) => p,
        Loaded::Kayles(g) => reduce_kayles_to_poset(&g).into_poset(),
        Loaded::Setgame(_) => bail!("export-dot takes a poset or a kayles graph"),
    };
    write_out(out, &poset.to_dot()?)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Winner { input, game, budget } => cmd_winner(&input, game, budget),
        Command::Grundy { input, game, budget } => cmd_grundy(&input, game, budget),
        Command::Reduce { input, from, to, out, map_out, dot } => {
            cmd_reduce(&input, from, to, out.as_deref(), map_out.as_deref(), dot.as_deref())
        }
        Command::Verify { suite, max_n, seed, budget, jobs, out } => {
            cmd_verify(&suite, max_n, seed, budget, jobs, out.as_deref())
        }
        Command::Play { input, game, engine_first } => cmd_play(&input, game, engine_first),
        Command::ExportDot { input, game, out } => cmd_export_dot(&input, game, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
