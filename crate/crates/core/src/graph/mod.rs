//! Finite simple undirected graphs, distances, intervals and convexity.

mod bipartite;
mod distance;
mod parse;
mod pattern;
mod sets;

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

pub use bipartite::{is_bipartite, Bipartition, OddCycle};
pub use distance::{distance_matrix, distance_matrix_with, DistanceMatrix};
pub use parse::{parse_graph, write_edge_list};
pub use pattern::{induced_is_pattern, Pattern};
pub use sets::{convexity_violation, induced_components, interval, is_convex, ConvexityWitness, VertexSet};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex 0")]
    Disconnected { unreached: Vertex },
    #[error("graph has no vertices")]
    Empty,
}

/// Simple undirected graph on `0..n`, not necessarily connected.
///
/// Neighbor lists are sorted; `adjacent` is a constant-time lookup into a
/// dense bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    neighbors: Vec<Vec<Vertex>>,
    matrix: Vec<u64>,
    words: usize,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        SimpleGraph { neighbors: vec![Vec::new(); n], matrix: vec![0; n * words], words, edge_count: 0 }
    }

    /// Builds a graph from an edge list. Edge `i` of the list is reported as
    /// line `i + 1` in errors.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::empty(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.try_add_edge(u, v, i + 1)?;
        }
        g.finish();
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: Vertex, v: Vertex, line: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { line, vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if self.adjacent(u, v) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        self.set_bit(u, v);
        self.set_bit(v, u);
        self.neighbors[u].push(v);
        self.neighbors[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    pub(crate) fn finish(&mut self) {
        for list in &mut self.neighbors {
            list.sort_unstable();
        }
    }

    fn set_bit(&mut self, u: Vertex, v: Vertex) {
        self.matrix[u * self.words + v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.matrix[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> SimpleGraph {
        let mut sub = SimpleGraph::empty(vertices.len());
        for (i, &x) in vertices.iter().enumerate() {
            for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(x, y) {
                    sub.try_add_edge(i, j, 0).expect("induced edges are simple");
                }
            }
        }
        sub.finish();
        sub
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let all: Vec<Vertex> = (0..self.n()).collect();
        sets::components_of(self, &all)
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Line graph together with the edge that each of its vertices stands for.
    pub fn line_graph(&self) -> (SimpleGraph, Vec<(Vertex, Vertex)>) {
        let edges: Vec<_> = self.edges().collect();
        let mut lg = SimpleGraph::empty(edges.len());
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    lg.try_add_edge(i, j, 0).expect("line graph is simple");
                }
            }
        }
        lg.finish();
        (lg, edges)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// A connected [`SimpleGraph`] with at least one vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph(SimpleGraph);

impl Graph {
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Graph::try_from(SimpleGraph::from_edges(n, edges)?)
    }

    pub fn as_simple(&self) -> &SimpleGraph {
        &self.0
    }

    pub fn into_simple(self) -> SimpleGraph {
        self.0
    }
}

impl TryFrom<SimpleGraph> for Graph {
    type Error = GraphError;

    fn try_from(g: SimpleGraph) -> Result<Self, GraphError> {
        if g.n() == 0 {
            return Err(GraphError::Empty);
        }
        let reached = &g.components()[0];
        if reached.len() != g.n() {
            let unreached = (0..g.n()).find(|v| reached.binary_search(v).is_err()).expect("some vertex is unreached");
            return Err(GraphError::Disconnected { unreached });
        }
        Ok(Graph(g))
    }
}

impl Deref for Graph {
    type Target = SimpleGraph;

    fn deref(&self) -> &SimpleGraph {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(SimpleGraph::from_edges(3, &[(0, 0)]).unwrap_err(), GraphError::SelfLoop { line: 1, vertex: 0 });
        assert_eq!(
            SimpleGraph::from_edges(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge { line: 2, u: 1, v: 0 }
        );
        assert!(matches!(
            SimpleGraph::from_edges(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, .. }
        ));
    }

    #[test]
    fn connectivity_is_enforced() {
        assert_eq!(Graph::from_edges(3, &[(0, 1)]).unwrap_err(), GraphError::Disconnected { unreached: 2 });
        assert_eq!(Graph::from_edges(4, &[(0, 2), (2, 3)]).unwrap_err(), GraphError::Disconnected { unreached: 1 });
        assert_eq!(Graph::from_edges(0, &[]).unwrap_err(), GraphError::Empty);
        assert!(Graph::from_edges(1, &[]).is_ok());
    }

    #[test]
    fn wide_graph_bit_matrix() {
        let edges: Vec<_> = (0..129).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(130, &edges).unwrap();
        assert!(g.adjacent(64, 65) && g.adjacent(128, 129) && !g.adjacent(0, 129));
        assert_eq!(g.edges().count(), 129);
    }

    #[test]
    fn line_graph_of_star_is_triangle() {
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (lg, map) = star.line_graph();
        assert_eq!(lg.n(), 3);
        assert_eq!(lg.edge_count(), 3);
        assert_eq!(map, vec![(0, 1), (0, 2), (0, 3)]);
    }
}
