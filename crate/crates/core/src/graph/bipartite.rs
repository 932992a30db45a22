use std::collections::VecDeque;

use super::{SimpleGraph, Vertex};

/// Proper 2-coloring; the smallest vertex of every component gets side 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<u8>,
}

impl Bipartition {
    pub fn class(&self, color: u8) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == color).collect()
    }
}

/// Closed walk of odd length: `cycle[i]` is adjacent to `cycle[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle {
    pub cycle: Vec<Vertex>,
}

impl OddCycle {
    pub fn holds(&self, g: &SimpleGraph) -> bool {
        let k = self.cycle.len();
        k % 2 == 1 && (0..k).all(|i| g.adjacent(self.cycle[i], self.cycle[(i + 1) % k]))
    }
}

/// BFS 2-coloring. On failure, returns the cycle closed by the first
/// monochromatic edge met during the search, through its BFS tree.
pub fn is_bipartite(g: &SimpleGraph) -> Result<Bipartition, OddCycle> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Err(close_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    Ok(Bipartition { side })
}

fn close_cycle(u: Vertex, w: Vertex, parent: &[Vertex], depth: &[usize]) -> OddCycle {
    // same color across a BFS edge means same depth
    debug_assert_eq!(depth[u], depth[w]);
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    // left runs u -> lca; right runs back down to w
    let mut cycle = left;
    let lca_pos = cycle.iter().position(|&x| x == a).expect("lca on path");
    cycle.rotate_left(lca_pos);
    OddCycle { cycle }
}
