//! Finite simple undirected graphs on dense vertex indices.

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{GraphError, ParseError};
use crate::text;

/// Largest vertex count [`enumerate_labeled_graphs`] accepts by default.
pub const ENUMERATION_CAP: usize = 6;

/// A simple graph on vertices `0..n`.
///
/// Edges are kept in insertion order (normalized so `u < v`); that order
/// fixes the element layout of derived posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adjacency: vec![BitSet::empty(n); n] }
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (u, v) = (u.min(v), u.max(v));
        if self.adjacency[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        self.edges.push((u, v));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// `{v}` together with every vertex adjacent to `v`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<BitSet, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut set = self.adjacency[v].clone();
        set.insert(v);
        Ok(set)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for u in &self.adjacency[v] {
                    if !seen.contains(u) {
                        seen.insert(u);
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v]).expect("induced edges are simple");
            }
        }
        g
    }

    /// Parse the line-oriented graph format: the vertex count, then one
    /// `u v` pair per line. `#` starts a comment line.
    pub fn parse(input: &str) -> Result<Graph, ParseError> {
        let mut lines = text::content_lines(input);
        let (line_no, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing vertex count"))?;
        let n = text::parse_usize(header, line_no, "vertex count")?;
        let mut g = Graph::empty(n);
        for (line_no, line) in lines {
            let [u, v] = text::parse_pair(line, line_no)?;
            g.add_edge(u, v).map_err(|e| ParseError::new(line_no, e.to_string()))?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// The complete graph `K_k`.
pub fn complete_graph(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::EmptyCompleteGraph);
    }
    let pairs = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
    Graph::new(k, pairs)
}

/// Path `0 - 1 - ... - (k-1)`.
pub fn path_graph(k: usize) -> Graph {
    Graph::new(k, (1..k).map(|v| (v - 1, v))).expect("path edges are simple")
}

/// Vertices of `b` are shifted past those of `a`; edge order is `a`'s then `b`'s.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n;
    let edges = a.edges.iter().copied().chain(b.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(a.n + b.n, edges).expect("union of simple graphs is simple")
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, in ascending order of
/// the edge-subset mask. Bit `i` of the mask selects the `i`-th pair in
/// lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs, GraphError> {
    enumerate_labeled_graphs_with_cap(n, ENUMERATION_CAP)
}

pub fn enumerate_labeled_graphs_with_cap(n: usize, cap: usize) -> Result<LabeledGraphs, GraphError> {
    // the mask must fit in a u64
    if n > cap || n > 11 {
        return Err(GraphError::AboveEnumerationCap { n, cap });
    }
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(LabeledGraphs { n, end: 1u64 << pairs.len(), pairs, next: 0 })
}

pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    /// `(edge mask, graph)`
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self.pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
        Some((mask, Graph::new(self.n, edges).expect("enumerated pairs are simple")))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &BitSet) -> Vec<usize> {
        v.iter().collect()
    }

    #[test]
    fn complete_graph_counts() {
        for (k, edges) in [(1, 0), (2, 1), (4, 6)] {
            let g = complete_graph(k).unwrap();
            assert_eq!(g.vertex_count(), k);
            assert_eq!(g.edge_count(), edges);
            assert!((0..k).all(|v| g.degree(v) == k - 1));
        }
        assert_eq!(complete_graph(0), Err(GraphError::EmptyCompleteGraph));
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = complete_graph(2).unwrap();
        let k4 = complete_graph(4).unwrap();
        let u = disjoint_union(&k2, &k2);
        assert_eq!((u.vertex_count(), u.edge_count()), (4, 2));
        assert_eq!(u.components(), vec![vec![0, 1], vec![2, 3]]);

        assert_eq!(disjoint_union(&Graph::empty(0), &k4), k4);

        let u = disjoint_union(&k2, &k4);
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 7));
        assert!(!u.has_edge(1, 2));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert!(matches!(enumerate_labeled_graphs(7), Err(GraphError::AboveEnumerationCap { n: 7, cap: 6 })));
        let masks: Vec<u64> = enumerate_labeled_graphs(3).unwrap().map(|(m, _)| m).collect();
        assert_eq!(masks, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_yields_distinct_graphs() {
        let mut seen = std::collections::HashSet::new();
        for (_, g) in enumerate_labeled_graphs(4).unwrap() {
            let mut e = g.edges().to_vec();
            e.sort();
            assert!(seen.insert(e));
        }
    }

    #[test]
    fn closed_neighborhoods() {
        let k2 = complete_graph(2).unwrap();
        assert_eq!(set(&k2.closed_neighborhood(0).unwrap()), vec![0, 1]);
        let p3 = path_graph(3);
        assert_eq!(set(&p3.closed_neighborhood(1).unwrap()), vec![0, 1, 2]);
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(set(&g.closed_neighborhood(2).unwrap()), vec![2]);
        assert!(g.closed_neighborhood(3).is_err());
    }

    #[test]
    fn rejects_non_simple_edges() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let g = Graph::parse("# K3\n3\n0 1\n\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        let err = Graph::parse("3\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = Graph::parse("3\n0 1\n# c\n1 5\n").unwrap_err();
        assert_eq!(err.line, 4);
        let err = Graph::parse("2\n1 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(Graph::parse("").is_err());
        assert!(Graph::parse("x\n").is_err());
        assert!(Graph::parse("3\n0 1 2\n").is_err());
    }

    #[test]
    fn text_round_trip_over_enumeration() {
        for n in 0..=4 {
            for (_, g) in enumerate_labeled_graphs(n).unwrap() {
                assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
            }
        }
    }
}
