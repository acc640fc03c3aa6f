//! Reductions from Node Kayles to poset games, and from poset games to the set game.
//!
//! `psi` pads a graph with two complete graphs so the edge count is odd and
//! every vertex misses some edge, without changing the Grundy value.
//! `phi` turns a graph into a three-level poset: level `A` holds one copy
//! `γ(e)` per edge, level `B` the vertices, level `C` the edges. An edge sits
//! directly above its two endpoints, and `γ(e)` sits below every vertex that
//! is not an endpoint of `e`.
//!
//! Element layout of a `phi` image with `E` edges and `V` vertices:
//! `A` occupies `0..E`, `B` occupies `E..E+V`, `C` occupies `E+V..2E+V`,
//! each in source edge/vertex order.

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::PosetError;
use crate::game::SetGame;
use crate::graph::{complete_graph, disjoint_union, Graph};
use crate::poset::{Level, Poset};

/// Appends `K2 ⊔ K2` when the edge count is odd, `K2 ⊔ K4` when it is even.
pub fn psi(g: &Graph) -> Graph {
    let k2 = complete_graph(2).expect("K2");
    let tail = if g.edge_count() % 2 == 1 { k2.clone() } else { complete_graph(4).expect("K4") };
    disjoint_union(&disjoint_union(g, &k2), &tail)
}

/// A `phi` poset together with its index maps back to the source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiImage {
    poset: Poset,
    source: Graph,
}

impl PhiImage {
    /// Builds the image from an explicit list of generating relations.
    /// `phi` passes [`phi_relations`]; other lists are for perturbed variants.
    pub fn from_relations(source: &Graph, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let e = source.edge_count();
        let v = source.vertex_count();
        let levels = std::iter::repeat_n(Some(Level::A), e)
            .chain(std::iter::repeat_n(Some(Level::B), v))
            .chain(std::iter::repeat_n(Some(Level::C), e))
            .collect();
        let poset = Poset::from_pairs(v + 2 * e, relations.iter().copied())?.with_levels(levels);
        Ok(PhiImage { poset, source: source.clone() })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    /// The graph `phi` was applied to.
    pub fn source(&self) -> &Graph {
        &self.source
    }

    /// `γ(e)` for source edge index `edge`.
    pub fn a_element(&self, edge: usize) -> usize {
        assert!(edge < self.source.edge_count());
        edge
    }

    pub fn b_element(&self, vertex: usize) -> usize {
        assert!(vertex < self.source.vertex_count());
        self.source.edge_count() + vertex
    }

    pub fn c_element(&self, edge: usize) -> usize {
        assert!(edge < self.source.edge_count());
        self.source.edge_count() + self.source.vertex_count() + edge
    }

    /// The `A` copy of a `C` element.
    pub fn gamma(&self, c: usize) -> Option<usize> {
        let offset = self.source.edge_count() + self.source.vertex_count();
        (offset..offset + self.source.edge_count()).contains(&c).then(|| c - offset)
    }

    pub fn level_members(&self, level: Level) -> BitSet {
        let m = self.poset.size();
        BitSet::from_indices(m, (0..m).filter(|&x| self.poset.level(x) == Some(level)))
    }

    /// Sidecar listing, one line per element: `A u v idx`, `B v idx`, `C u v idx`.
    pub fn mapping_text(&self) -> String {
        let mut out = String::new();
        for (i, (u, v)) in self.source.edges().iter().enumerate() {
            let _ = writeln!(out, "A {u} {v} {}", self.a_element(i));
        }
        for v in 0..self.source.vertex_count() {
            let _ = writeln!(out, "B {v} {}", self.b_element(v));
        }
        for (i, (u, v)) in self.source.edges().iter().enumerate() {
            let _ = writeln!(out, "C {u} {v} {}", self.c_element(i));
        }
        out
    }
}

/// Generating relations `x ≤ y` of `phi(g)`: endpoint ≤ edge, and
/// `γ(e)` ≤ every non-endpoint vertex. Transitivity supplies the `A`–`C` pairs.
pub fn phi_relations(g: &Graph) -> Vec<(usize, usize)> {
    let e = g.edge_count();
    let v = g.vertex_count();
    let b = |x: usize| e + x;
    let c = |i: usize| e + v + i;
    let mut out = Vec::new();
    for (i, &(v1, v2)) in g.edges().iter().enumerate() {
        out.push((b(v1), c(i)));
        out.push((b(v2), c(i)));
    }
    for (i, &(v1, v2)) in g.edges().iter().enumerate() {
        out.extend((0..v).filter(|&x| x != v1 && x != v2).map(|x| (i, b(x))));
    }
    out
}

pub fn phi(g: &Graph) -> PhiImage {
    PhiImage::from_relations(g, &phi_relations(g)).expect("phi relations are acyclic")
}

/// `phi(psi(g))`.
pub fn reduce_kayles_to_poset(g: &Graph) -> PhiImage {
    phi(&psi(g))
}

/// One set per element: its upper cone.
pub fn poset_to_setgame(p: &Poset) -> SetGame {
    let sets = (0..p.size()).map(|x| p.upper_cone(x).expect("in range").clone()).collect();
    SetGame::from_bitsets(p.size(), sets)
}

/// A Kayles-to-poset reduction, pluggable so the checkers can be pointed at
/// deliberately broken variants.
pub trait Reduction: Sync {
    fn psi(&self, g: &Graph) -> Graph;
    fn phi(&self, g: &Graph) -> PhiImage;

    fn reduce(&self, g: &Graph) -> PhiImage {
        self.phi(&self.psi(g))
    }
}

/// `psi` and `phi` as defined above.
#[derive(Clone, Copy, Debug, Default)]
pub struct StandardReduction;

impl Reduction for StandardReduction {
    fn psi(&self, g: &Graph) -> Graph {
        psi(g)
    }

    fn phi(&self, g: &Graph) -> PhiImage {
        phi(g)
    }
}
