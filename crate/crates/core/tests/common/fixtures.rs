use posetlab::{Graph, Poset};

use super::NaiveGame;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn leq_matrix(p: &Poset) -> Vec<Vec<bool>> {
    let m = p.size();
    (0..m).map(|x| (0..m).map(|y| p.leq(x, y)).collect()).collect()
}

pub fn naive_kayles(g: &Graph) -> NaiveGame {
    NaiveGame::kayles(&adjacency(g))
}

pub fn naive_poset(p: &Poset) -> NaiveGame {
    NaiveGame::poset(&leq_matrix(p))
}
