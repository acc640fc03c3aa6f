//! Memoized exhaustive search over [`GameRules`] positions.
//!
//! [`solve_winner`] stops at the first losing child it finds; [`grundy`]
//! always scans every child. Both share one [`TranspositionTable`], and each
//! kind of entry can answer the other kind's queries where the theory allows
//! it (a Grundy value decides the winner, a stored loss has Grundy value 0).
//! Search depth is bounded by the universe size.

use std::cmp::Reverse;
use std::time::{Duration, Instant};

use rustc_hash::FxHashMap;

use crate::bitset::Position;
use crate::error::{GameError, SolveError};
use crate::game::GameRules;

/// Outcome for the player about to move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GameValue {
    Win,
    Loss,
}

impl GameValue {
    pub fn is_win(self) -> bool {
        self == GameValue::Win
    }
}

/// A Sprague–Grundy value.
pub type Grundy = u32;

/// Minimum excludant: the least non-negative integer not in `values`.
pub fn mex(values: impl IntoIterator<Item = Grundy>) -> Grundy {
    let mut seen: Vec<bool> = Vec::new();
    for v in values {
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        seen[v] = true;
    }
    seen.iter().position(|&s| !s).unwrap_or(seen.len()) as Grundy
}

/// Cap on the number of states expanded by one top-level call.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Budget {
    #[default]
    Unlimited,
    States(u64),
}

impl Budget {
    fn limit(self) -> u64 {
        match self {
            Budget::Unlimited => u64::MAX,
            Budget::States(n) => n,
        }
    }
}

/// Child visiting order for [`solve_winner`]. Never changes results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MoveOrder {
    /// Moves clearing the most of the board first; ties by index.
    #[default]
    LargestRemovalFirst,
    Ascending,
    Descending,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Entry {
    Win,
    Loss,
    Grundy(Grundy),
}

impl Entry {
    pub fn value(self) -> GameValue {
        match self {
            Entry::Win => GameValue::Win,
            Entry::Loss | Entry::Grundy(0) => GameValue::Loss,
            Entry::Grundy(_) => GameValue::Win,
        }
    }
}

/// Memo from position masks to solved values, scoped to one ruleset.
#[derive(Debug, Default)]
pub struct TranspositionTable {
    map: FxHashMap<Position, Entry>,
    hits: u64,
    misses: u64,
}

impl TranspositionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn get(&self, pos: &Position) -> Option<Entry> {
        self.map.get(pos).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Position, Entry)> {
        self.map.iter().map(|(p, e)| (p, *e))
    }

    pub fn clear(&mut self) {
        self.map.clear();
    }

    /// Stores `entry`. An exact Grundy value replaces a bare win/loss, never
    /// the other way round.
    fn store(&mut self, pos: Position, entry: Entry) {
        match self.map.entry(pos) {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(entry);
            }
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let old = *o.get();
                debug_assert_eq!(old.value(), entry.value(), "table contradiction");
                if let (Entry::Grundy(a), Entry::Grundy(b)) = (old, entry) {
                    debug_assert_eq!(a, b, "table contradiction");
                }
                if matches!(entry, Entry::Grundy(_)) {
                    o.insert(entry);
                }
            }
        }
    }
}

/// Counters for one or more searches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub states_visited: u64,
    pub table_hits: u64,
    pub elapsed: Duration,
}

struct Search<'a, G: ?Sized> {
    rules: &'a G,
    table: &'a mut TranspositionTable,
    limit: u64,
    visited: u64,
    order: MoveOrder,
}

impl<G: GameRules + ?Sized> Search<'_, G> {
    fn expand(&mut self) -> Result<(), SolveError> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(SolveError::BudgetExhausted { limit: self.limit });
        }
        Ok(())
    }

    fn ordered_moves(&self, pos: &Position) -> Vec<usize> {
        let mut moves = self.rules.moves(pos);
        match self.order {
            MoveOrder::Ascending => {}
            MoveOrder::Descending => moves.reverse(),
            MoveOrder::LargestRemovalFirst => {
                moves.sort_by_cached_key(|&mv| Reverse(self.rules.removal_size(pos, mv)));
            }
        }
        moves
    }

    fn is_win(&mut self, pos: &Position) -> Result<bool, SolveError> {
        if let Some(entry) = self.table.map.get(pos) {
            self.table.hits += 1;
            return Ok(entry.value().is_win());
        }
        self.table.misses += 1;
        self.expand()?;
        for mv in self.ordered_moves(pos) {
            let child = self.rules.successor(pos, mv);
            if !self.is_win(&child)? {
                self.table.store(pos.clone(), Entry::Win);
                return Ok(true);
            }
        }
        self.table.store(pos.clone(), Entry::Loss);
        Ok(false)
    }

    fn grundy(&mut self, pos: &Position) -> Result<Grundy, SolveError> {
        match self.table.map.get(pos) {
            Some(Entry::Grundy(g)) => {
                self.table.hits += 1;
                return Ok(*g);
            }
            Some(Entry::Loss) => {
                self.table.hits += 1;
                return Ok(0);
            }
            _ => self.table.misses += 1,
        }
        self.expand()?;
        let mut children = Vec::new();
        for mv in self.rules.moves(pos) {
            let child = self.rules.successor(pos, mv);
            children.push(self.grundy(&child)?);
        }
        let g = mex(children);
        self.table.store(pos.clone(), Entry::Grundy(g));
        Ok(g)
    }
}

fn search<'a, G: GameRules + ?Sized>(
    rules: &'a G,
    table: &'a mut TranspositionTable,
    budget: Budget,
    order: MoveOrder,
) -> Search<'a, G> {
    Search { rules, table, limit: budget.limit(), visited: 0, order }
}

/// Win/Loss for the mover at `pos`.
pub fn solve_winner<G: GameRules + ?Sized>(
    rules: &G,
    pos: &Position,
    table: &mut TranspositionTable,
    budget: Budget,
) -> Result<GameValue, SolveError> {
    let win = search(rules, table, budget, MoveOrder::default()).is_win(pos)?;
    Ok(if win { GameValue::Win } else { GameValue::Loss })
}

/// Grundy value of `pos`.
pub fn grundy<G: GameRules + ?Sized>(
    rules: &G,
    pos: &Position,
    table: &mut TranspositionTable,
    budget: Budget,
) -> Result<Grundy, SolveError> {
    search(rules, table, budget, MoveOrder::default()).grundy(pos)
}

/// Lowest-index move to a losing position, or `None` if `pos` is lost.
pub fn best_move<G: GameRules + ?Sized>(
    rules: &G,
    pos: &Position,
    table: &mut TranspositionTable,
    budget: Budget,
) -> Result<Option<usize>, SolveError> {
    let moves = rules.moves(pos);
    if moves.is_empty() {
        return Err(GameError::Terminal.into());
    }
    let mut s = search(rules, table, budget, MoveOrder::default());
    for mv in moves {
        if !s.is_win(&rules.successor(pos, mv))? {
            return Ok(Some(mv));
        }
    }
    Ok(None)
}

/// A ruleset with its own table, budget and running counters.
pub struct Solver<G> {
    rules: G,
    table: TranspositionTable,
    budget: Budget,
    order: MoveOrder,
    stats: SolveStats,
}

impl<G: GameRules> Solver<G> {
    pub fn new(rules: G) -> Self {
        Solver {
            rules,
            table: TranspositionTable::new(),
            budget: Budget::Unlimited,
            order: MoveOrder::default(),
            stats: SolveStats::default(),
        }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_order(mut self, order: MoveOrder) -> Self {
        self.order = order;
        self
    }

    pub fn rules(&self) -> &G {
        &self.rules
    }

    pub fn table(&self) -> &TranspositionTable {
        &self.table
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats { table_hits: self.table.hits, ..self.stats }
    }

    fn run<T>(&mut self, f: impl FnOnce(&mut Search<'_, G>) -> Result<T, SolveError>) -> Result<T, SolveError> {
        let start = Instant::now();
        let mut s = search(&self.rules, &mut self.table, self.budget, self.order);
        let out = f(&mut s);
        self.stats.states_visited += s.visited.min(s.limit);
        self.stats.elapsed += start.elapsed();
        out
    }

    pub fn winner(&mut self, pos: &Position) -> Result<GameValue, SolveError> {
        let win = self.run(|s| s.is_win(pos))?;
        Ok(if win { GameValue::Win } else { GameValue::Loss })
    }

    pub fn winner_of_initial(&mut self) -> Result<GameValue, SolveError> {
        let pos = self.rules.initial_position();
        self.winner(&pos)
    }

    pub fn grundy(&mut self, pos: &Position) -> Result<Grundy, SolveError> {
        self.run(|s| s.grundy(pos))
    }

    pub fn grundy_of_initial(&mut self) -> Result<Grundy, SolveError> {
        let pos = self.rules.initial_position();
        self.grundy(&pos)
    }

    pub fn best_move(&mut self, pos: &Position) -> Result<Option<usize>, SolveError> {
        let moves = self.rules.moves(pos);
        if moves.is_empty() {
            return Err(GameError::Terminal.into());
        }
        self.run(|s| {
            for mv in moves {
                let child = s.rules.successor(pos, mv);
                if !s.is_win(&child)? {
                    return Ok(Some(mv));
                }
            }
            Ok(None)
        })
    }
}
