//! Impartial games under normal play: Node Kayles, poset games and the set game.
//!
//! All three share [`GameRules`]. A position is the [`Position`] mask of
//! what is still on the board, moves are element/vertex/set indices, and
//! every move strictly shrinks the mask, so play always terminates.

use std::fmt::Write as _;

use crate::bitset::{BitSet, Position};
use crate::error::{GameError, ParseError};
use crate::graph::Graph;
use crate::poset::Poset;
use crate::text;

pub trait GameRules {
    /// Bit width of position masks.
    fn universe(&self) -> usize;

    fn initial_position(&self) -> Position {
        BitSet::full(self.universe())
    }

    /// Legal moves in ascending index order; empty iff `pos` is terminal.
    fn moves(&self, pos: &Position) -> Vec<usize>;

    fn is_legal(&self, pos: &Position, mv: usize) -> bool;

    /// Result of a move already known to be legal.
    fn successor(&self, pos: &Position, mv: usize) -> Position;

    /// How many mask bits `mv` clears; drives move ordering.
    fn removal_size(&self, pos: &Position, mv: usize) -> usize;

    fn apply(&self, pos: &Position, mv: usize) -> Result<Position, GameError> {
        if self.is_legal(pos, mv) {
            Ok(self.successor(pos, mv))
        } else {
            Err(GameError::IllegalMove(mv))
        }
    }

    fn is_terminal(&self, pos: &Position) -> bool {
        self.moves(pos).is_empty()
    }
}

impl<G: GameRules + ?Sized> GameRules for &G {
    fn universe(&self) -> usize {
        (**self).universe()
    }
    fn initial_position(&self) -> Position {
        (**self).initial_position()
    }
    fn moves(&self, pos: &Position) -> Vec<usize> {
        (**self).moves(pos)
    }
    fn is_legal(&self, pos: &Position, mv: usize) -> bool {
        (**self).is_legal(pos, mv)
    }
    fn successor(&self, pos: &Position, mv: usize) -> Position {
        (**self).successor(pos, mv)
    }
    fn removal_size(&self, pos: &Position, mv: usize) -> usize {
        (**self).removal_size(pos, mv)
    }
}

/// Node Kayles: pick a vertex, delete it and its neighbors.
#[derive(Clone, Debug)]
pub struct Kayles {
    closed: Vec<BitSet>,
}

impl Kayles {
    pub fn new(g: &Graph) -> Self {
        let closed = (0..g.vertex_count()).map(|v| g.closed_neighborhood(v).expect("vertex in range")).collect();
        Kayles { closed }
    }
}

impl GameRules for Kayles {
    fn universe(&self) -> usize {
        self.closed.len()
    }

    fn moves(&self, pos: &Position) -> Vec<usize> {
        pos.iter().collect()
    }

    fn is_legal(&self, pos: &Position, mv: usize) -> bool {
        mv < self.closed.len() && pos.contains(mv)
    }

    #[inline]
    fn successor(&self, pos: &Position, mv: usize) -> Position {
        pos.difference(&self.closed[mv])
    }

    fn removal_size(&self, pos: &Position, mv: usize) -> usize {
        pos.intersection_len(&self.closed[mv])
    }
}

/// Poset game: pick an element, delete its upper cone.
#[derive(Clone, Debug)]
pub struct PosetGame<'p> {
    poset: &'p Poset,
}

impl<'p> PosetGame<'p> {
    pub fn new(poset: &'p Poset) -> Self {
        PosetGame { poset }
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }
}

impl GameRules for PosetGame<'_> {
    fn universe(&self) -> usize {
        self.poset.size()
    }

    fn moves(&self, pos: &Position) -> Vec<usize> {
        pos.iter().collect()
    }

    fn is_legal(&self, pos: &Position, mv: usize) -> bool {
        mv < self.poset.size() && pos.contains(mv)
    }

    #[inline]
    fn successor(&self, pos: &Position, mv: usize) -> Position {
        pos.difference(&self.poset.upper_cones()[mv])
    }

    fn removal_size(&self, pos: &Position, mv: usize) -> usize {
        pos.intersection_len(&self.poset.upper_cones()[mv])
    }
}

/// The set game over sets `S_0..S_{k-1}` of a ground universe.
///
/// A state is the mask of ground elements no chosen set has contained yet;
/// the live content of `S_i` is `S_i ∩ state`. Picking `S_i` needs that to be
/// non-empty and erases it from every set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetGame {
    universe: usize,
    sets: Vec<BitSet>,
}

impl SetGame {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>) -> Result<Self, GameError> {
        let sets = sets
            .into_iter()
            .enumerate()
            .map(|(set, elements)| {
                let mut s = BitSet::empty(universe);
                for element in elements {
                    if element >= universe {
                        return Err(GameError::ElementOutsideUniverse { set, element, universe });
                    }
                    s.insert(element);
                }
                Ok(s)
            })
            .collect::<Result<_, _>>()?;
        Ok(SetGame { universe, sets })
    }

    pub(crate) fn from_bitsets(universe: usize, sets: Vec<BitSet>) -> Self {
        SetGame { universe, sets }
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    pub fn ground_size(&self) -> usize {
        self.universe
    }

    pub fn set(&self, i: usize) -> &BitSet {
        &self.sets[i]
    }

    /// Live content of `S_i` in `state`.
    pub fn remaining(&self, i: usize, state: &Position) -> BitSet {
        self.sets[i].intersection(state)
    }

    /// Parse `k u` followed by one line per set (a blank line is an empty set).
    pub fn parse(input: &str) -> Result<SetGame, ParseError> {
        let mut lines = text::uncommented_lines(input).skip_while(|(_, l)| l.is_empty());
        let (line_no, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing header \"k u\""))?;
        let [k, universe] = text::parse_pair(header, line_no)?;
        let mut sets = Vec::with_capacity(k);
        let mut last = line_no;
        for (line_no, line) in lines.by_ref().take(k) {
            last = line_no;
            let mut set = BitSet::empty(universe);
            for token in line.split_whitespace() {
                let e = text::parse_usize(token, line_no, "element id")?;
                if e >= universe {
                    return Err(ParseError::new(line_no, format!("element {e} outside universe of size {universe}")));
                }
                set.insert(e);
            }
            sets.push(set);
        }
        // a missing trailing empty set is indistinguishable from an absent newline
        while sets.len() < k {
            if sets.len() + 1 < k {
                return Err(ParseError::new(last, format!("expected {k} sets, found {}", sets.len())));
            }
            sets.push(BitSet::empty(universe));
        }
        if let Some((line_no, _)) = lines.find(|(_, l)| !l.is_empty()) {
            return Err(ParseError::new(line_no, format!("more than {k} sets")));
        }
        Ok(SetGame { universe, sets })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.sets.len(), self.universe);
        for s in &self.sets {
            let items: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "{}", items.join(" "));
        }
        out
    }
}

impl GameRules for SetGame {
    fn universe(&self) -> usize {
        self.universe
    }

    fn moves(&self, pos: &Position) -> Vec<usize> {
        (0..self.sets.len()).filter(|&i| !self.sets[i].is_disjoint(pos)).collect()
    }

    fn is_legal(&self, pos: &Position, mv: usize) -> bool {
        mv < self.sets.len() && !self.sets[mv].is_disjoint(pos)
    }

    #[inline]
    fn successor(&self, pos: &Position, mv: usize) -> Position {
        pos.difference(&self.sets[mv])
    }

    fn removal_size(&self, pos: &Position, mv: usize) -> usize {
        pos.intersection_len(&self.sets[mv])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, path_graph};

    fn members(s: &BitSet) -> Vec<usize> {
        s.iter().collect()
    }

    #[test]
    fn kayles_moves_and_apply() {
        let k2 = Kayles::new(&complete_graph(2).unwrap());
        let full = k2.initial_position();
        assert_eq!(k2.moves(&full), vec![0, 1]);
        assert!(k2.moves(&BitSet::empty(2)).is_empty());
        assert!(k2.apply(&full, 0).unwrap().is_empty());

        let p3 = Kayles::new(&path_graph(3));
        let full = p3.initial_position();
        assert!(p3.apply(&full, 1).unwrap().is_empty());
        assert_eq!(members(&p3.apply(&full, 0).unwrap()), vec![2]);

        let no_center = BitSet::from_indices(3, [0, 2]);
        assert_eq!(p3.moves(&no_center), vec![0, 2]);
        assert_eq!(p3.apply(&no_center, 1), Err(GameError::IllegalMove(1)));
    }

    #[test]
    fn poset_moves_and_apply() {
        let anti = Poset::antichain(3);
        let game = PosetGame::new(&anti);
        assert_eq!(game.moves(&game.initial_position()).len(), 3);
        let chain = Poset::chain(3);
        let game = PosetGame::new(&chain);
        assert!(game.apply(&game.initial_position(), 0).unwrap().is_empty());
        assert_eq!(game.removal_size(&game.initial_position(), 1), 2);
    }

    #[test]
    fn setgame_examples() {
        let g = SetGame::new(2, vec![vec![], vec![]]).unwrap();
        assert!(g.moves(&g.initial_position()).is_empty());

        let g = SetGame::new(2, vec![vec![0], vec![1]]).unwrap();
        let s = g.apply(&g.initial_position(), 0).unwrap();
        assert!(g.remaining(0, &s).is_empty());
        assert_eq!(members(&g.remaining(1, &s)), vec![1]);
        assert_eq!(g.apply(&s, 0), Err(GameError::IllegalMove(0)));

        // a=0, b=1, c=2
        let g = SetGame::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let s = g.apply(&g.initial_position(), 0).unwrap();
        assert!(g.remaining(0, &s).is_empty());
        assert_eq!(members(&g.remaining(1, &s)), vec![2]);
        assert_eq!(g.moves(&s), vec![1]);
    }

    #[test]
    fn setgame_rejects_out_of_universe() {
        assert!(matches!(
            SetGame::new(2, vec![vec![2]]),
            Err(GameError::ElementOutsideUniverse { set: 0, element: 2, universe: 2 })
        ));
    }

    #[test]
    fn setgame_text_format() {
        let g = SetGame::parse("# nested\n3 3\n0 1 2\n1 2\n2\n").unwrap();
        assert_eq!(g.set_count(), 3);
        assert_eq!(SetGame::parse(&g.to_text()).unwrap(), g);

        let g = SetGame::parse("2 2\n\n1\n").unwrap();
        assert!(g.set(0).is_empty());
        let g = SetGame::parse("2 2\n1\n").unwrap();
        assert!(g.set(1).is_empty());
        assert_eq!(SetGame::parse(&g.to_text()).unwrap(), g);

        assert_eq!(SetGame::parse("1 2\n5\n").unwrap_err().line, 2);
        assert!(SetGame::parse("1 2\n0\n1\n").is_err());
        assert!(SetGame::parse("3 2\n0\n").is_err());
    }
}
