//! Deliberately broken reductions for mutation checks.

use posetlab::graph::{complete_graph, disjoint_union};
use posetlab::reduction::{phi, phi_relations, psi, PhiImage, Reduction};
use posetlab::{Graph, Level};

/// `phi` with its first `γ(e) ≤ b` generating relation dropped.
pub struct DropGammaRelation;

impl Reduction for DropGammaRelation {
    fn psi(&self, g: &Graph) -> Graph {
        psi(g)
    }

    fn phi(&self, g: &Graph) -> PhiImage {
        let reference = phi(g);
        let mut rels = phi_relations(g);
        if let Some(i) = rels.iter().position(|&(x, _)| reference.poset().level(x) == Some(Level::A)) {
            rels.remove(i);
        }
        PhiImage::from_relations(g, &rels).expect("dropping a relation keeps the order acyclic")
    }
}

/// `psi` appending `K3` where it would append its first `K2`.
pub struct K3ForK2;

impl Reduction for K3ForK2 {
    fn psi(&self, g: &Graph) -> Graph {
        let tail = if g.edge_count() % 2 == 1 { 2 } else { 4 };
        let padded = disjoint_union(g, &complete_graph(3).unwrap());
        disjoint_union(&padded, &complete_graph(tail).unwrap())
    }

    fn phi(&self, g: &Graph) -> PhiImage {
        phi(g)
    }
}
