use std::collections::VecDeque;

use super::{Graph, Vertex};
use crate::exec::{self, Parallelism};

/// All-pairs hop distances of a connected graph, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    distance_matrix_with(g, Parallelism::default())
}

/// One BFS per source; rows are computed independently.
pub fn distance_matrix_with(g: &Graph, mode: Parallelism) -> DistanceMatrix {
    let n = g.n();
    let rows = exec::map_range(mode, n, |s| bfs_row(g, s));
    DistanceMatrix { n, d: rows.concat() }
}

fn bfs_row(g: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    debug_assert!(dist.iter().all(|&x| x != u32::MAX), "graph must be connected");
    dist
}
