use std::io::{self, BufRead, Write};

use posetlab::solver::{best_move, Budget, TranspositionTable};
use posetlab::GameRules;

#[derive(Debug, PartialEq, Eq)]
pub enum PlayOutcome {
    HumanWon,
    EngineWon,
    /// Input ended before the game did.
    Abandoned,
}

/// Alternates human and engine moves until nobody can move. The engine plays
/// the lowest winning move when one exists, otherwise its lowest legal move.
pub fn play<G: GameRules>(
    rules: &G,
    engine_first: bool,
    input: impl BufRead,
    mut out: impl Write,
) -> io::Result<PlayOutcome> {
    let mut table = TranspositionTable::new();
    let mut pos = rules.initial_position();
    let mut human_to_move = !engine_first;
    let mut lines = input.lines();
    loop {
        let moves = rules.moves(&pos);
        if moves.is_empty() {
            // the player to move faces an empty board and loses
            let outcome = if human_to_move {
                writeln!(out, "no moves left: engine wins")?;
                PlayOutcome::EngineWon
            } else {
                writeln!(out, "no moves left: you win")?;
                PlayOutcome::HumanWon
            };
            return Ok(outcome);
        }
        writeln!(out, "position: {pos}")?;
        if human_to_move {
            let listed: Vec<String> = moves.iter().map(|m| m.to_string()).collect();
            write!(out, "your move [{}]> ", listed.join(" "))?;
            out.flush()?;
            let Some(line) = lines.next().transpose()? else {
                writeln!(out)?;
                writeln!(out, "session ended")?;
                return Ok(PlayOutcome::Abandoned);
            };
            match line.trim().parse::<usize>() {
                Ok(mv) if rules.is_legal(&pos, mv) => pos = rules.successor(&pos, mv),
                _ => {
                    writeln!(out, "illegal move {:?}", line.trim())?;
                    continue;
                }
            }
        } else {
            let mv = best_move(rules, &pos, &mut table, Budget::Unlimited)
                .map_err(|e| io::Error::other(e.to_string()))?
                .unwrap_or(moves[0]);
            writeln!(out, "engine plays {mv}")?;
            pos = rules.successor(&pos, mv);
        }
        human_to_move = !human_to_move;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use posetlab::graph::{complete_graph, disjoint_union};
    use posetlab::{Kayles, Poset, PosetGame};

    fn run<G: GameRules>(rules: &G, engine_first: bool, input: &str) -> (PlayOutcome, String) {
        let mut out = Vec::new();
        let outcome = play(rules, engine_first, input.as_bytes(), &mut out).unwrap();
        (outcome, String::from_utf8(out).unwrap())
    }

    #[test]
    fn single_element_human_wins() {
        let p = Poset::antichain(1);
        let (outcome, text) = run(&PosetGame::new(&p), false, "0\n");
        assert_eq!(outcome, PlayOutcome::HumanWon);
        assert!(text.ends_with("you win\n"));
    }

    #[test]
    fn engine_mirrors_on_two_k2() {
        let k2 = complete_graph(2).unwrap();
        let g = disjoint_union(&k2, &k2);
        let rules = Kayles::new(&g);
        for first in 0..4 {
            let (outcome, text) = run(&rules, false, &format!("{first}\n"));
            assert_eq!(outcome, PlayOutcome::EngineWon, "{text}");
            let reply: usize = text.lines().find_map(|l| l.strip_prefix("engine plays ")).unwrap().parse().unwrap();
            assert_ne!(reply / 2, first / 2, "reply lands in the other component");
        }
    }

    #[test]
    fn illegal_moves_reprompt() {
        let p = Poset::antichain(1);
        let (outcome, text) = run(&PosetGame::new(&p), false, "7\nx\n0\n");
        assert_eq!(outcome, PlayOutcome::HumanWon);
        assert_eq!(text.matches("illegal move").count(), 2);
        assert_eq!(text.matches("position: {0}").count(), 3);
    }

    #[test]
    fn eof_ends_cleanly() {
        let p = Poset::antichain(2);
        let (outcome, text) = run(&PosetGame::new(&p), false, "");
        assert_eq!(outcome, PlayOutcome::Abandoned);
        assert!(text.contains("session ended"));
    }
}
