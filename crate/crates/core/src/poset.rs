//! Finite posets stored as their full `≤` relation.

use std::fmt;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::{BitSet, Position};
use crate::error::{GameError, ParseError, PosetError};
use crate::text;

/// Level tag carried by elements of a three-level reduction image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    /// Edge copies, the bottom level.
    A,
    /// Vertices.
    B,
    /// Edges, the top level.
    C,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::A => "A",
            Level::B => "B",
            Level::C => "C",
        })
    }
}

/// First partial-order axiom a relation breaks, with witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    Reflexivity(usize),
    Antisymmetry(usize, usize),
    /// `x ≤ y` and `y ≤ z` but not `x ≤ z`.
    Transitivity(usize, usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Reflexivity(x) => write!(f, "reflexivity fails at {x}"),
            Violation::Antisymmetry(x, y) => write!(f, "antisymmetry fails for ({x},{y})"),
            Violation::Transitivity(x, y, z) => write!(f, "transitivity fails for ({x},{y},{z})"),
        }
    }
}

/// An arbitrary binary relation on `0..m`; row `x` holds `{y : x R y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<BitSet>,
}

impl Relation {
    pub fn new(m: usize) -> Self {
        Relation { rows: vec![BitSet::empty(m); m] }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn set(&mut self, x: usize, y: usize) -> Result<(), PosetError> {
        let m = self.size();
        for e in [x, y] {
            if e >= m {
                return Err(PosetError::ElementOutOfRange { element: e, m });
            }
        }
        self.rows[x].insert(y);
        Ok(())
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.rows.get(x).is_some_and(|r| r.contains(y))
    }

    /// Reflexive-transitive closure (Warshall over bit rows).
    pub fn close(&mut self) {
        for x in 0..self.size() {
            self.rows[x].insert(x);
        }
        for k in 0..self.size() {
            let row_k = self.rows[k].clone();
            for row in &mut self.rows {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let m = self.size();
        if let Some(x) = (0..m).find(|&x| !self.get(x, x)) {
            return Err(Violation::Reflexivity(x));
        }
        for x in 0..m {
            for y in self.rows[x].iter().filter(|&y| y > x) {
                if self.get(y, x) {
                    return Err(Violation::Antisymmetry(x, y));
                }
            }
        }
        for x in 0..m {
            for y in &self.rows[x] {
                if let Some(z) = self.rows[y].difference(&self.rows[x]).first() {
                    return Err(Violation::Transitivity(x, y, z));
                }
            }
        }
        Ok(())
    }
}

/// A finite poset on elements `0..m`.
///
/// Both the upper cone `{y : x ≤ y}` and lower cone `{y : y ≤ x}` of every
/// element are stored; cone queries are row lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    levels: Vec<Option<Level>>,
}

impl Poset {
    /// Checks the axioms on an already-closed relation.
    pub fn from_relation(rel: Relation) -> Result<Self, PosetError> {
        rel.validate().map_err(PosetError::Invalid)?;
        let m = rel.size();
        let mut down = vec![BitSet::empty(m); m];
        for (x, row) in rel.rows.iter().enumerate() {
            for y in row {
                down[y].insert(x);
            }
        }
        Ok(Poset { up: rel.rows, down, levels: vec![None; m] })
    }

    /// Builds the poset generated by `pairs` (each `x ≤ y`): takes the
    /// reflexive-transitive closure and rejects cycles.
    pub fn from_pairs(m: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, PosetError> {
        let mut rel = Relation::new(m);
        for (x, y) in pairs {
            rel.set(x, y)?;
        }
        rel.close();
        match rel.validate() {
            Ok(()) => Self::from_relation(rel),
            Err(Violation::Antisymmetry(x, y)) => Err(PosetError::Cycle(x, y)),
            Err(v) => Err(PosetError::Invalid(v)),
        }
    }

    pub fn antichain(m: usize) -> Self {
        Self::from_pairs(m, []).expect("antichain is a poset")
    }

    /// `0 ≤ 1 ≤ ... ≤ m-1`
    pub fn chain(m: usize) -> Self {
        Self::from_pairs(m, (1..m).map(|y| (y - 1, y))).expect("chain is a poset")
    }

    pub fn with_levels(mut self, levels: Vec<Option<Level>>) -> Self {
        assert_eq!(levels.len(), self.size(), "one level tag per element");
        self.levels = levels;
        self
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up.get(x).is_some_and(|r| r.contains(y))
    }

    pub fn level(&self, x: usize) -> Option<Level> {
        self.levels.get(x).copied().flatten()
    }

    pub fn levels(&self) -> &[Option<Level>] {
        &self.levels
    }

    pub fn relation(&self) -> Relation {
        Relation { rows: self.up.clone() }
    }

    /// Re-checks the order axioms.
    pub fn validate(&self) -> Result<(), Violation> {
        self.relation().validate()
    }

    /// `{y : x ≤ y}`, which contains `x`.
    pub fn upper_cone(&self, x: usize) -> Result<&BitSet, PosetError> {
        self.up.get(x).ok_or(PosetError::ElementOutOfRange { element: x, m: self.size() })
    }

    pub fn lower_cone(&self, x: usize) -> Result<&BitSet, PosetError> {
        self.down.get(x).ok_or(PosetError::ElementOutOfRange { element: x, m: self.size() })
    }

    pub(crate) fn upper_cones(&self) -> &[BitSet] {
        &self.up
    }

    /// Play `x`: drop it and everything above it.
    pub fn remove_cone(&self, pos: &Position, x: usize) -> Result<Position, GameError> {
        if x >= self.size() || !pos.contains(x) {
            return Err(GameError::IllegalMove(x));
        }
        Ok(pos.difference(&self.up[x]))
    }

    /// Whether `pos` is closed downward.
    pub fn is_down_set(&self, pos: &Position) -> bool {
        pos.iter().all(|x| self.down[x].is_subset(pos))
    }

    pub fn full_position(&self) -> Position {
        BitSet::full(self.size())
    }

    /// Cover relations `x ⋖ y` (the Hasse diagram), sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size() {
            let mut strict = self.up[x].clone();
            strict.remove(x);
            let mut above_cover = BitSet::empty(self.size());
            for z in &strict {
                let mut s = self.up[z].clone();
                s.remove(z);
                above_cover.union_with(&s);
            }
            out.extend(strict.difference(&above_cover).iter().map(|y| (x, y)));
        }
        out
    }

    /// Poset on `a ⊔ b` with no relations across the two parts.
    pub fn disjoint_union(a: &Poset, b: &Poset) -> Poset {
        let shift = a.size();
        let pairs = a.covers().into_iter().chain(b.covers().into_iter().map(|(x, y)| (x + shift, y + shift)));
        let levels = a.levels.iter().chain(&b.levels).copied().collect();
        Poset::from_pairs(a.size() + b.size(), pairs).expect("union of posets is a poset").with_levels(levels)
    }

    /// Parse the poset format: the element count, then `x y` lines asserting
    /// `x ≤ y`. Any generating sub-relation is accepted; cycles are errors.
    pub fn parse(input: &str) -> Result<Poset, ParseError> {
        let mut lines = text::content_lines(input);
        let (line_no, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing element count"))?;
        let m = text::parse_usize(header, line_no, "element count")?;
        let mut rel = Relation::new(m);
        for (line_no, line) in lines {
            let [x, y] = text::parse_pair(line, line_no)?;
            if x == y {
                return Err(ParseError::new(line_no, format!("reflexive pair {x} {x} is implicit")));
            }
            rel.set(x, y).map_err(|e| ParseError::new(line_no, e.to_string()))?;
        }
        let last_line = input.lines().count().max(1);
        rel.close();
        // a closed relation can only fail antisymmetry
        match rel.validate() {
            Ok(()) => Ok(Poset::from_relation(rel).expect("validated")),
            Err(Violation::Antisymmetry(x, y)) => Err(ParseError::new(last_line, PosetError::Cycle(x, y).to_string())),
            Err(v) => Err(ParseError::new(last_line, v.to_string())),
        }
    }

    /// Serializes the cover relations; parsing the result restores `≤`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.size());
        for (x, y) in self.covers() {
            let _ = writeln!(out, "{x} {y}");
        }
        out
    }

    /// Graphviz digraph of the Hasse diagram, edges pointing upward.
    pub fn to_dot(&self) -> Result<String, PosetError> {
        self.validate().map_err(PosetError::Invalid)?;
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for x in 0..self.size() {
            match self.level(x) {
                Some(level) => {
                    let _ = writeln!(out, "  n{x} [label=\"{x}\", level=\"{level}\"];");
                }
                None => {
                    let _ = writeln!(out, "  n{x} [label=\"{x}\"];");
                }
            }
        }
        for (x, y) in self.covers() {
            let _ = writeln!(out, "  n{x} -> n{y};");
        }
        out.push_str("}\n");
        Ok(out)
    }
}

/// Random poset on `m` elements: each pair `x < y` (by index) is related with
/// probability `density`, then the relation is closed. Deterministic in
/// `(m, density, seed)`.
pub fn random_poset(m: usize, density: f64, seed: u64) -> Result<Poset, PosetError> {
    if !(0.0..=1.0).contains(&density) {
        return Err(PosetError::BadDensity(density));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for x in 0..m {
        for y in x + 1..m {
            if rng.gen_bool(density) {
                pairs.push((x, y));
            }
        }
    }
    Poset::from_pairs(m, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(s: &BitSet) -> Vec<usize> {
        s.iter().collect()
    }

    fn raw(m: usize, pairs: &[(usize, usize)]) -> Relation {
        let mut r = Relation::new(m);
        for &(x, y) in pairs {
            r.set(x, y).unwrap();
        }
        r
    }

    #[test]
    fn validate_reports_first_violation() {
        assert_eq!(raw(1, &[(0, 0)]).validate(), Ok(()));
        assert_eq!(raw(2, &[(0, 0), (1, 1), (0, 1), (1, 0)]).validate(), Err(Violation::Antisymmetry(0, 1)));
        assert_eq!(raw(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).validate(), Err(Violation::Transitivity(0, 1, 2)));
        assert_eq!(raw(2, &[(0, 0)]).validate(), Err(Violation::Reflexivity(1)));
    }

    #[test]
    fn cones() {
        let chain = Poset::chain(3);
        assert_eq!(members(chain.upper_cone(0).unwrap()), vec![0, 1, 2]);
        assert_eq!(members(chain.upper_cone(2).unwrap()), vec![2]);
        assert_eq!(members(chain.lower_cone(2).unwrap()), vec![0, 1, 2]);
        assert!(chain.upper_cone(3).is_err());
    }

    #[test]
    fn remove_cone_examples() {
        let a = Poset::antichain(3);
        let pos = a.remove_cone(&a.full_position(), 1).unwrap();
        assert_eq!(members(&pos), vec![0, 2]);
        assert_eq!(a.remove_cone(&pos, 1), Err(GameError::IllegalMove(1)));

        let c = Poset::chain(3);
        assert!(c.remove_cone(&c.full_position(), 0).unwrap().is_empty());
    }

    #[test]
    fn cycles_are_rejected() {
        assert_eq!(Poset::from_pairs(3, [(0, 1), (1, 2), (2, 0)]), Err(PosetError::Cycle(0, 1)));
        assert!(Poset::parse("2\n0 1\n1 0\n").is_err());
        assert!(Poset::parse("2\n0 2\n").is_err());
        assert!(Poset::parse("2\n1 1\n").is_err());
    }

    #[test]
    fn covers_and_dot() {
        assert_eq!(Poset::chain(3).covers(), vec![(0, 1), (1, 2)]);
        assert!(Poset::antichain(3).covers().is_empty());
        let dot = Poset::chain(3).to_dot().unwrap();
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("n0 -> n1;"));
        let dot = Poset::antichain(3).to_dot().unwrap();
        assert_eq!(dot.matches("->").count(), 0);
    }

    #[test]
    fn random_poset_extremes_and_determinism() {
        assert_eq!(random_poset(5, 0.0, 1).unwrap(), Poset::antichain(5));
        assert_eq!(random_poset(5, 1.0, 1).unwrap(), Poset::chain(5));
        assert_eq!(random_poset(9, 0.4, 42).unwrap(), random_poset(9, 0.4, 42).unwrap());
        assert!(random_poset(3, 1.5, 0).is_err());
    }

    #[test]
    fn parse_closes_relation() {
        let p = Poset::parse("# chain\n3\n0 1\n1 2\n").unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p, Poset::chain(3));
        assert_eq!(Poset::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn disjoint_union_keeps_parts_unrelated() {
        let u = Poset::disjoint_union(&Poset::chain(2), &Poset::antichain(2));
        assert_eq!(u.size(), 4);
        assert!(u.leq(0, 1));
        assert!(!u.leq(1, 2) && !u.leq(2, 3));
    }
}
