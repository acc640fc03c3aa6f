//! Brute-force checks that the Kayles-to-poset reduction preserves winners,
//! plus the supporting per-move claims, over enumerated and sampled instances.
//!
//! Lemma probes start from a poset position reached by playing only vertex
//! (`B`) elements. Vertex elements are pairwise incomparable and vanish only
//! when chosen, so such a history is fully described by the set of chosen
//! vertices; the checks take any subset, not just independent ones.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::{BitSet, Position};
use crate::error::{SolveError, VerifyError};
use crate::game::{GameRules, Kayles, PosetGame};
use crate::graph::{enumerate_labeled_graphs, Graph, ENUMERATION_CAP};
use crate::poset::{random_poset, Level, Poset};
use crate::reduction::{poset_to_setgame, PhiImage, Reduction, StandardReduction};
use crate::solver::{grundy, solve_winner, Budget, GameValue, TranspositionTable};

/// Default sampling seed, recorded in every report.
pub const DEFAULT_SEED: u64 = 1_381_187_924;
/// Default per-solve state budget.
pub const DEFAULT_BUDGET: u64 = 5_000_000;
/// Largest source graph whose lemma probes are enumerated exhaustively.
pub const EXHAUSTIVE_LEMMA_N: usize = 3;
/// Probes sampled per larger source graph.
pub const LEMMA_SAMPLES: usize = 32;
/// Random posets in the set-game suite.
pub const RANDOM_POSETS: usize = 200;
/// Largest random poset in the set-game suite.
pub const RANDOM_POSET_MAX: usize = 12;
/// Largest source graph whose reduction image enters the set-game suite.
pub const SETGAME_SOURCE_MAX_N: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem,
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Setgame,
    Psi,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Theorem, Suite::Lemma1, Suite::Lemma2, Suite::Lemma3, Suite::Lemma4, Suite::Setgame, Suite::Psi];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma3 => "lemma3",
            Suite::Lemma4 => "lemma4",
            Suite::Setgame => "setgame",
            Suite::Psi => "psi",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Theorem => 4,
            Suite::Lemma1 => 5,
            Suite::Lemma2 | Suite::Lemma3 | Suite::Lemma4 => 4,
            Suite::Setgame => SETGAME_SOURCE_MAX_N,
            Suite::Psi => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub max_n: usize,
    pub seed: u64,
    /// States per solve.
    pub budget: u64,
    /// Worker threads; results are ordered by instance either way.
    pub jobs: usize,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig { suite, max_n: suite.default_max_n(), seed: DEFAULT_SEED, budget: DEFAULT_BUDGET, jobs: 1 }
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.max_n > ENUMERATION_CAP {
            return Err(VerifyError::AboveCap { n: self.max_n, cap: ENUMERATION_CAP });
        }
        if self.budget == 0 {
            return Err(VerifyError::ZeroBudget);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Inconclusive(String),
}

/// Result of one check, with the number of states its solves expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub verdict: Verdict,
    pub states: u64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn merge(&mut self, other: CheckOutcome) {
        self.states += other.states;
        if self.verdict == Verdict::Pass {
            self.verdict = other.verdict;
        }
    }
}

/// Which per-move claim a lemma probe tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaKind {
    /// Both endpoints chosen: `γ(e)` wins.
    BothChosen,
    /// One endpoint chosen: `γ(e)` loses and leaves one vertex element.
    OneChosen,
    /// No endpoint chosen: `e` and `γ(e)` both lose.
    NoneChosen,
}

impl LemmaKind {
    fn of_suite(suite: Suite) -> Option<Self> {
        match suite {
            Suite::Lemma2 => Some(LemmaKind::BothChosen),
            Suite::Lemma3 => Some(LemmaKind::OneChosen),
            Suite::Lemma4 => Some(LemmaKind::NoneChosen),
            _ => None,
        }
    }

    fn endpoints_chosen(self) -> usize {
        match self {
            LemmaKind::BothChosen => 2,
            LemmaKind::OneChosen => 1,
            LemmaKind::NoneChosen => 0,
        }
    }
}

/// The reduction image of one source graph, with a memo shared by all probes.
pub struct LemmaBoard {
    padded: Graph,
    image: PhiImage,
    table: TranspositionTable,
    budget: Budget,
}

impl LemmaBoard {
    fn new(reduction: &dyn Reduction, g: &Graph, budget: Budget) -> Self {
        let padded = reduction.psi(g);
        let image = reduction.phi(&padded);
        LemmaBoard { padded, image, table: TranspositionTable::new(), budget }
    }

    pub fn padded_graph(&self) -> &Graph {
        &self.padded
    }

    pub fn image(&self) -> &PhiImage {
        &self.image
    }

    /// Memo filled by the probes run so far.
    pub fn table(&self) -> &TranspositionTable {
        &self.table
    }

    /// Poset position after the vertices in `chosen` were played.
    pub fn position_after(&self, chosen: &BitSet) -> Position {
        let poset = self.image.poset();
        let mut pos = poset.full_position();
        for v in chosen {
            pos.difference_with(poset.upper_cone(self.image.b_element(v)).expect("in range"));
        }
        pos
    }

    fn solve(&mut self, pos: &Position, states: &mut u64) -> Result<GameValue, SolveError> {
        let rules = PosetGame::new(self.image.poset());
        let before = self.table.misses();
        let out = solve_winner(&rules, pos, &mut self.table, self.budget);
        *states += self.table.misses() - before;
        out
    }

    fn chosen_set(&self, chosen: &[usize]) -> Result<BitSet, VerifyError> {
        let n = self.padded.vertex_count();
        let mut set = BitSet::empty(n);
        for &v in chosen {
            if v >= n {
                return Err(VerifyError::Precondition(format!("vertex {v} not in padded graph")));
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Runs one probe of the given kind, checking its precondition first.
    pub fn probe(&mut self, kind: LemmaKind, chosen: &[usize], edge: usize) -> Result<CheckOutcome, VerifyError> {
        let chosen = self.chosen_set(chosen)?;
        self.probe_set(kind, &chosen, edge)
    }

    fn probe_set(&mut self, kind: LemmaKind, chosen: &BitSet, edge: usize) -> Result<CheckOutcome, VerifyError> {
        let &(v1, v2) = self
            .padded
            .edges()
            .get(edge)
            .ok_or_else(|| VerifyError::Precondition(format!("edge {edge} not in padded graph")))?;
        let hit = usize::from(chosen.contains(v1)) + usize::from(chosen.contains(v2));
        if hit != kind.endpoints_chosen() {
            return Err(VerifyError::Precondition(format!(
                "{hit} endpoint(s) of edge {v1}-{v2} chosen, expected {}",
                kind.endpoints_chosen()
            )));
        }
        let pos = self.position_after(chosen);
        let gamma = self.image.a_element(edge);
        let top = self.image.c_element(edge);
        let poset = self.image.poset().clone();
        let mut states = 0;

        let mut probes = vec![(gamma, kind == LemmaKind::BothChosen)];
        if kind == LemmaKind::NoneChosen {
            if !pos.contains(top) {
                return Err(VerifyError::Precondition(format!("edge element {top} already removed")));
            }
            probes.push((top, false));
        }
        let mut verdict = Verdict::Pass;
        for (mv, should_win) in probes {
            let child = poset.remove_cone(&pos, mv).map_err(|e| VerifyError::Precondition(e.to_string()))?;
            let mover_after = match self.solve(&child, &mut states) {
                Ok(v) => v,
                Err(e) => {
                    verdict = Verdict::Inconclusive(e.to_string());
                    break;
                }
            };
            if (mover_after == GameValue::Loss) != should_win {
                verdict = Verdict::Fail(format!(
                    "chosen {chosen}, edge {v1}-{v2}: playing element {mv} should {} but the reply position is {:?} for the opponent",
                    if should_win { "win" } else { "lose" },
                    mover_after
                ));
                break;
            }
            if kind == LemmaKind::OneChosen {
                let left = child.intersection_len(&self.image.level_members(Level::B));
                if left != 1 {
                    verdict = Verdict::Fail(format!(
                        "chosen {chosen}, edge {v1}-{v2}: {left} vertex elements remain after γ(e), expected 1"
                    ));
                    break;
                }
            }
        }
        Ok(CheckOutcome { verdict, states })
    }

    /// Every `(chosen, edge)` pair of this kind, chosen-subset mask ascending
    /// then edge index.
    pub fn qualifying_pairs(&self, kind: LemmaKind) -> Vec<(BitSet, usize)> {
        let n = self.padded.vertex_count();
        assert!(n < 64, "subset enumeration needs fewer than 64 vertices");
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            let chosen = BitSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
            for (i, &(v1, v2)) in self.padded.edges().iter().enumerate() {
                let hit = usize::from(chosen.contains(v1)) + usize::from(chosen.contains(v2));
                if hit == kind.endpoints_chosen() {
                    out.push((chosen.clone(), i));
                }
            }
        }
        out
    }
}

/// Runs the checks against a given reduction (normally [`StandardReduction`]).
pub struct Checker<'r> {
    reduction: &'r dyn Reduction,
    budget: Budget,
}

impl Default for Checker<'static> {
    fn default() -> Self {
        Checker::new(&StandardReduction)
    }
}

fn inconclusive(e: SolveError, states: u64) -> CheckOutcome {
    CheckOutcome { verdict: Verdict::Inconclusive(e.to_string()), states }
}

impl<'r> Checker<'r> {
    pub fn new(reduction: &'r dyn Reduction) -> Self {
        Checker { reduction, budget: Budget::States(DEFAULT_BUDGET) }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn board(&self, g: &Graph) -> LemmaBoard {
        LemmaBoard::new(self.reduction, g, self.budget)
    }

    /// Grundy value of Kayles on `g` equals that on the padded graph.
    pub fn check_lemma1(&self, g: &Graph) -> CheckOutcome {
        let padded = self.reduction.psi(g);
        let mut states = 0;
        let mut value = |graph: &Graph| {
            let rules = Kayles::new(graph);
            let mut t = TranspositionTable::new();
            let out = grundy(&rules, &rules.initial_position(), &mut t, self.budget);
            states += t.misses();
            out
        };
        let (a, b) = match (value(g), value(&padded)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return inconclusive(e, states),
        };
        let verdict = if a == b {
            Verdict::Pass
        } else {
            Verdict::Fail(format!("grundy {a} on the graph but {b} after padding"))
        };
        CheckOutcome { verdict, states }
    }

    pub fn check_lemma2(&self, g: &Graph, chosen: &[usize], edge: usize) -> Result<CheckOutcome, VerifyError> {
        self.board(g).probe(LemmaKind::BothChosen, chosen, edge)
    }

    pub fn check_lemma3(&self, g: &Graph, chosen: &[usize], edge: usize) -> Result<CheckOutcome, VerifyError> {
        self.board(g).probe(LemmaKind::OneChosen, chosen, edge)
    }

    pub fn check_lemma4(&self, g: &Graph, chosen: &[usize], edge: usize) -> Result<CheckOutcome, VerifyError> {
        self.board(g).probe(LemmaKind::NoneChosen, chosen, edge)
    }

    /// The first player wins Kayles on `g` iff they win the poset game on the image.
    pub fn check_theorem(&self, g: &Graph) -> CheckOutcome {
        let kayles = Kayles::new(g);
        let mut t = TranspositionTable::new();
        let source = solve_winner(&kayles, &kayles.initial_position(), &mut t, self.budget);
        let mut states = t.misses();
        let source = match source {
            Ok(v) => v,
            Err(e) => return inconclusive(e, states),
        };
        let image = self.reduction.reduce(g);
        let game = PosetGame::new(image.poset());
        let mut t = TranspositionTable::new();
        let target = solve_winner(&game, &game.initial_position(), &mut t, self.budget);
        states += t.misses();
        match target {
            Ok(target) if target == source => CheckOutcome { verdict: Verdict::Pass, states },
            Ok(target) => CheckOutcome {
                verdict: Verdict::Fail(format!(
                    "Kayles first player {source:?}, poset first player {target:?} ({} elements)",
                    image.poset().size()
                )),
                states,
            },
            Err(e) => inconclusive(e, states),
        }
    }

    /// The padded graph has an odd edge count, every vertex misses some edge,
    /// and it is the source followed by K2 ⊔ K2 (odd) or K2 ⊔ K4 (even).
    pub fn check_psi_structure(&self, g: &Graph) -> CheckOutcome {
        let padded = self.reduction.psi(g);
        let verdict = if padded.edge_count().is_multiple_of(2) {
            Verdict::Fail(format!("padded graph has {} edges", padded.edge_count()))
        } else if let Some(v) =
            (0..padded.vertex_count()).find(|&v| padded.edges().iter().all(|&(a, b)| a == v || b == v))
        {
            Verdict::Fail(format!("every edge of the padded graph touches vertex {v}"))
        } else if let Err(why) = padding_shape(g, &padded) {
            Verdict::Fail(why)
        } else {
            Verdict::Pass
        };
        CheckOutcome { verdict, states: 0 }
    }
}

/// Checks that `padded` keeps `g` on its first vertices and appends exactly
/// the cliques the edge parity calls for.
fn padding_shape(g: &Graph, padded: &Graph) -> Result<(), String> {
    let n = g.vertex_count();
    let cliques: &[usize] = if g.edge_count() % 2 == 1 { &[2, 2] } else { &[2, 4] };
    if padded.vertex_count() != n + cliques.iter().sum::<usize>() {
        return Err(format!("padded graph has {} vertices", padded.vertex_count()));
    }
    let source: Vec<usize> = (0..n).collect();
    if padded.induced(&source).edges() != g.edges() {
        return Err("padded graph does not start with the source graph".into());
    }
    let tail: Vec<Vec<usize>> = padded.components().into_iter().filter(|c| c[0] >= n).collect();
    let sizes: Vec<usize> = tail.iter().map(Vec::len).collect();
    let complete = tail.iter().all(|c| padded.induced(c).edge_count() == c.len() * (c.len() - 1) / 2);
    if sizes != cliques || !complete {
        return Err(format!("appended components have sizes {sizes:?}, expected cliques {cliques:?}"));
    }
    Ok(())
}

/// Grundy value of the poset game equals that of its upper-cone set game,
/// and at every reachable state the two offer the same moves with the same
/// results.
pub fn check_setgame_equiv(p: &Poset, budget: Budget) -> CheckOutcome {
    let poset_game = PosetGame::new(p);
    let set_game = poset_to_setgame(p);
    let root = poset_game.initial_position();
    let mut pt = TranspositionTable::new();
    let mut st = TranspositionTable::new();
    let a = grundy(&poset_game, &root, &mut pt, budget);
    let b = grundy(&set_game, &root, &mut st, budget);
    let states = pt.misses() + st.misses();
    let (a, b) = match (a, b) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return inconclusive(e, states),
    };
    if a != b {
        return CheckOutcome { verdict: Verdict::Fail(format!("poset grundy {a}, set game grundy {b}")), states };
    }
    for (pos, _) in pt.entries() {
        let moves = poset_game.moves(pos);
        if moves != set_game.moves(pos) {
            return CheckOutcome { verdict: Verdict::Fail(format!("move sets differ at state {pos}")), states };
        }
        if let Some(&mv) = moves.iter().find(|&&mv| poset_game.successor(pos, mv) != set_game.successor(pos, mv)) {
            return CheckOutcome { verdict: Verdict::Fail(format!("move {mv} diverges at state {pos}")), states };
        }
    }
    CheckOutcome { verdict: Verdict::Pass, states }
}

pub fn check_lemma1(g: &Graph) -> CheckOutcome {
    Checker::default().check_lemma1(g)
}

pub fn check_lemma2(g: &Graph, chosen: &[usize], edge: usize) -> Result<CheckOutcome, VerifyError> {
    Checker::default().check_lemma2(g, chosen, edge)
}

pub fn check_lemma3(g: &Graph, chosen: &[usize], edge: usize) -> Result<CheckOutcome, VerifyError> {
    Checker::default().check_lemma3(g, chosen, edge)
}

pub fn check_lemma4(g: &Graph, chosen: &[usize], edge: usize) -> Result<CheckOutcome, VerifyError> {
    Checker::default().check_lemma4(g, chosen, edge)
}

pub fn check_theorem(g: &Graph) -> CheckOutcome {
    Checker::default().check_theorem(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictKind {
    Pass,
    Fail,
    Inconclusive,
}

/// One line of the structured report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub suite: Suite,
    pub instance: usize,
    pub label: String,
    pub verdict: VerdictKind,
    pub states: u64,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: usize,
    pub label: String,
    /// The instance in its input file format.
    pub serialization: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub inconclusive: Vec<Failure>,
    pub states: u64,
    pub wall_millis: u64,
    pub config: SuiteConfig,
    /// Set iff `failures` is empty.
    pub pass: bool,
    pub records: Vec<InstanceRecord>,
}

impl SuiteReport {
    /// Zero failures and zero inconclusive instances.
    pub fn clean(&self) -> bool {
        self.pass && self.inconclusive.is_empty()
    }

    /// Human-readable summary followed by one block per failing instance.
    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let status = if self.clean() {
            "PASS"
        } else if self.pass {
            "INCONCLUSIVE"
        } else {
            "FAIL"
        };
        let _ = writeln!(out, "suite {}: {status}", self.suite);
        let _ = writeln!(out, "  instances: {}", self.instances);
        let _ = writeln!(out, "  failures: {}", self.failures.len());
        let _ = writeln!(out, "  inconclusive: {}", self.inconclusive.len());
        let _ = writeln!(out, "  states: {}", self.states);
        let _ = writeln!(out, "  wall_ms: {}", self.wall_millis);
        let _ = writeln!(out, "  config: max_n={} seed={} budget={} jobs={}", c.max_n, c.seed, c.budget, c.jobs);
        for (tag, list) in [("FAIL", &self.failures), ("INCONCLUSIVE", &self.inconclusive)] {
            for f in list.iter() {
                let _ = writeln!(out, "{tag} #{} {}: {}", f.instance, f.label, f.detail);
                for line in f.serialization.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        out
    }

    /// One JSON object per instance.
    pub fn to_jsonl(&self) -> String {
        self.records.iter().map(|r| serde_json::to_string(r).expect("records serialize") + "\n").collect()
    }
}

enum Instance {
    Graph { n: usize, mask: u64, graph: Graph },
    Poset { label: String, poset: Poset },
}

impl Instance {
    fn label(&self) -> String {
        match self {
            Instance::Graph { n, mask, .. } => format!("graph n={n} mask={mask}"),
            Instance::Poset { label, .. } => label.clone(),
        }
    }

    fn serialization(&self) -> String {
        match self {
            Instance::Graph { graph, .. } => graph.to_text(),
            Instance::Poset { poset, .. } => poset.to_text(),
        }
    }
}

fn mix(seed: u64, a: u64, b: u64) -> u64 {
    // splitmix64 finalizer over the combined key
    let mut z = seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xC2B2_AE3D_27D4_EB4F);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Source graphs on `1..=max_n` vertices.
fn graph_instances(max_n: usize) -> Vec<Instance> {
    (1..=max_n)
        .flat_map(|n| {
            enumerate_labeled_graphs(n)
                .expect("max_n validated against cap")
                .map(move |(mask, graph)| Instance::Graph { n, mask, graph })
        })
        .collect()
}

/// The seeded random posets of the set-game suite, with their labels.
pub fn random_suite_posets(seed: u64) -> Vec<(String, Poset)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..RANDOM_POSETS)
        .map(|i| {
            let m = rng.gen_range(1..=RANDOM_POSET_MAX);
            let density: f64 = rng.gen_range(0.0..=1.0);
            let poset_seed: u64 = rng.gen();
            let label = format!("random #{i} m={m} density={density:.3} seed={poset_seed}");
            (label, random_poset(m, density, poset_seed).expect("density in range"))
        })
        .collect()
}

fn setgame_instances(config: &SuiteConfig, reduction: &dyn Reduction) -> Vec<Instance> {
    let mut out: Vec<Instance> = graph_instances(config.max_n.min(SETGAME_SOURCE_MAX_N))
        .into_iter()
        .map(|inst| match inst {
            Instance::Graph { n, mask, graph } => Instance::Poset {
                label: format!("image of graph n={n} mask={mask}"),
                poset: reduction.reduce(&graph).into_poset(),
            },
            other => other,
        })
        .collect();
    out.extend(random_suite_posets(config.seed).into_iter().map(|(label, poset)| Instance::Poset { label, poset }));
    out
}

fn lemma_outcome(checker: &Checker<'_>, kind: LemmaKind, n: usize, mask: u64, g: &Graph, seed: u64) -> CheckOutcome {
    let mut board = checker.board(g);
    let mut pairs = board.qualifying_pairs(kind);
    if n > EXHAUSTIVE_LEMMA_N && pairs.len() > LEMMA_SAMPLES {
        let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, n as u64, mask));
        let mut picked = sample(&mut rng, pairs.len(), LEMMA_SAMPLES).into_vec();
        picked.sort_unstable();
        pairs = picked.into_iter().map(|i| pairs[i].clone()).collect();
    }
    let mut total = CheckOutcome { verdict: Verdict::Pass, states: 0 };
    for (chosen, edge) in pairs {
        let outcome = board.probe_set(kind, &chosen, edge).expect("qualifying pairs satisfy the precondition");
        total.merge(outcome);
        if total.verdict != Verdict::Pass {
            break;
        }
    }
    total
}

fn run_instance(config: &SuiteConfig, checker: &Checker<'_>, inst: &Instance) -> CheckOutcome {
    let budget = Budget::States(config.budget);
    match (config.suite, inst) {
        (Suite::Theorem, Instance::Graph { graph, .. }) => checker.check_theorem(graph),
        (Suite::Lemma1, Instance::Graph { graph, .. }) => checker.check_lemma1(graph),
        (Suite::Psi, Instance::Graph { graph, .. }) => checker.check_psi_structure(graph),
        (suite, Instance::Graph { n, mask, graph }) => {
            let kind = LemmaKind::of_suite(suite).expect("graph suites handled above");
            lemma_outcome(checker, kind, *n, *mask, graph, config.seed)
        }
        (_, Instance::Poset { poset, .. }) => check_setgame_equiv(poset, budget),
    }
}

/// Runs the configured suite with the standard reduction.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, VerifyError> {
    run_suite_with(config, &StandardReduction)
}

/// Runs the configured suite against `reduction`. Output is identical for
/// any `jobs` apart from timing fields.
pub fn run_suite_with(config: &SuiteConfig, reduction: &dyn Reduction) -> Result<SuiteReport, VerifyError> {
    config.validate()?;
    let start = Instant::now();
    let checker = Checker::new(reduction).with_budget(Budget::States(config.budget));
    let instances = match config.suite {
        Suite::Setgame => setgame_instances(config, reduction),
        _ => graph_instances(config.max_n),
    };
    let timed = |inst: &Instance| {
        let t = Instant::now();
        let outcome = run_instance(config, &checker, inst);
        (outcome, t.elapsed().as_millis() as u64)
    };
    let outcomes: Vec<(CheckOutcome, u64)> = if config.jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .expect("thread pool")
            .install(|| instances.par_iter().map(timed).collect())
    } else {
        instances.iter().map(timed).collect()
    };

    let mut failures = Vec::new();
    let mut inconclusive = Vec::new();
    let mut records = Vec::with_capacity(instances.len());
    let mut states = 0;
    for (i, (inst, (outcome, millis))) in instances.iter().zip(outcomes).enumerate() {
        states += outcome.states;
        let (kind, detail) = match outcome.verdict {
            Verdict::Pass => (VerdictKind::Pass, None),
            Verdict::Fail(d) => (VerdictKind::Fail, Some(d)),
            Verdict::Inconclusive(d) => (VerdictKind::Inconclusive, Some(d)),
        };
        if let Some(d) = &detail {
            let f =
                Failure { instance: i, label: inst.label(), serialization: inst.serialization(), detail: d.clone() };
            match kind {
                VerdictKind::Fail => failures.push(f),
                _ => inconclusive.push(f),
            }
        }
        records.push(InstanceRecord {
            suite: config.suite,
            instance: i,
            label: inst.label(),
            verdict: kind,
            states: outcome.states,
            millis,
            detail,
        });
    }
    Ok(SuiteReport {
        suite: config.suite,
        instances: instances.len(),
        pass: failures.is_empty(),
        failures,
        inconclusive,
        states,
        wall_millis: start.elapsed().as_millis() as u64,
        config: config.clone(),
        records,
    })
}
