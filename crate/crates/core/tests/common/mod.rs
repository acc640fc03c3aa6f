//! Naive reference solvers. No memo, no bitsets, no shared code with the
//! library's search: a move is "remove these indices", a game is a matrix.
#![allow(dead_code)]

/// `removes[x][y]`: choosing `x` removes `y` (if still present).
pub struct NaiveGame {
    pub removes: Vec<Vec<bool>>,
}

impl NaiveGame {
    /// Kayles from an adjacency matrix: `x` removes itself and its neighbors.
    pub fn kayles(adj: &[Vec<bool>]) -> Self {
        let n = adj.len();
        let removes = (0..n).map(|x| (0..n).map(|y| x == y || adj[x][y]).collect()).collect();
        NaiveGame { removes }
    }

    /// Poset game from a `≤` matrix: `x` removes every `y` with `x ≤ y`.
    pub fn poset(leq: &[Vec<bool>]) -> Self {
        NaiveGame { removes: leq.to_vec() }
    }

    fn children(&self, present: &[bool]) -> Vec<Vec<bool>> {
        (0..present.len())
            .filter(|&x| present[x])
            .map(|x| (0..present.len()).map(|y| present[y] && !self.removes[x][y]).collect())
            .collect()
    }

    /// Mover wins iff some move reaches a position where the mover loses.
    pub fn wins(&self, present: &[bool]) -> bool {
        self.children(present).iter().any(|c| !self.wins(c))
    }

    pub fn grundy(&self, present: &[bool]) -> u32 {
        let values: Vec<u32> = self.children(present).iter().map(|c| self.grundy(c)).collect();
        (0..).find(|v| !values.contains(v)).unwrap()
    }

    pub fn wins_from_full(&self) -> bool {
        self.wins(&vec![true; self.removes.len()])
    }

    pub fn grundy_from_full(&self) -> u32 {
        self.grundy(&vec![true; self.removes.len()])
    }
}

pub mod fixtures;
pub mod mutants;
