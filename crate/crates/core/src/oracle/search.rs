//! Exhaustive backtracking search for isometric embeddings into `J(m, n)`.
//!
//! Labels are `u64` bitmasks over `0..n`. Vertices are assigned in BFS order
//! from vertex 0, whose image is fixed to `{0..m}`. The setwise stabilizer of
//! that image permutes `0..m` and `m..n` independently, so the second vertex
//! only needs one representative per orbit: `{0..k} ∪ {m..m + (m - k)}`.

use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::embedder::{verify_embedding, Verification};
use crate::exec::{self, Parallelism};
use crate::graph::{DistanceMatrix, Graph, Vertex};

/// Largest ground set the search accepts.
pub const MAX_GROUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub found: bool,
    pub m: usize,
    pub n: usize,
    /// Sorted `m`-subsets of `0..n`, present exactly when `found`.
    pub labels: Option<Vec<Vec<usize>>>,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("need 1 <= m <= n/2, got m = {m}, n = {n}")]
    Bounds { m: usize, n: usize },
    #[error("ground set of size {0} exceeds the search limit {MAX_GROUND}")]
    TooLarge(usize),
    #[error("distance matrix has {found} vertices, graph has {expected}")]
    Mismatch { expected: usize, found: usize },
}

/// Searches for an isometric embedding of `g` into `J(m, n)`.
pub fn brute_force_embed(g: &Graph, d: &DistanceMatrix, m: usize, n: usize) -> Result<OracleResult, OracleError> {
    if m == 0 || 2 * m > n {
        return Err(OracleError::Bounds { m, n });
    }
    if n > MAX_GROUND {
        return Err(OracleError::TooLarge(n));
    }
    if d.n() != g.n() {
        return Err(OracleError::Mismatch { expected: g.n(), found: d.n() });
    }

    let mut order: Vec<Vertex> = (0..g.n()).collect();
    order.sort_by_key(|&v| (d.get(0, v), v));
    let candidates: Vec<u64> = (0..1u64 << n).filter(|x| x.count_ones() as usize == m).collect();

    let mut search = Search { d, order: &order, candidates: &candidates, m, n, image: vec![0; g.n()], nodes: 0 };
    search.image[0] = (1u64 << m) - 1;
    let found = search.extend(1);
    let labels = found.then(|| {
        let labels: Vec<Vec<usize>> = search.image.iter().map(|&x| bits(x)).collect();
        assert!(
            matches!(verify_embedding(d, &labels), Ok(Verification::Isometric)),
            "oracle produced a non-isometric labeling"
        );
        labels
    });
    Ok(OracleResult { found, m, n, labels, nodes_explored: search.nodes })
}

/// Tries every `(m, n)` with `n <= n_max` and `1 <= m <= n/2`, in order of
/// `n` then `m`. A single vertex embeds trivially with `m = n = 0`.
///
/// A negative answer only rules out ground sets up to `n_max`.
pub fn oracle_decide(g: &Graph, d: &DistanceMatrix, n_max: usize) -> OracleResult {
    oracle_decide_with(g, d, n_max, Parallelism::default())
}

/// As [`oracle_decide`], running independent `(m, n)` attempts concurrently.
/// The reported find is always the first in `(n, m)` order. When nothing is
/// found, `nodes_explored` totals every attempt.
pub fn oracle_decide_with(g: &Graph, d: &DistanceMatrix, n_max: usize, mode: Parallelism) -> OracleResult {
    if g.n() == 1 {
        return OracleResult { found: true, m: 0, n: 0, labels: Some(vec![Vec::new()]), nodes_explored: 0 };
    }
    let n_max = n_max.min(MAX_GROUND);
    let attempts: Vec<(usize, usize)> = (2..=n_max).flat_map(|n| (1..=n / 2).map(move |m| (m, n))).collect();
    let total = AtomicU64::new(0);
    let hit = exec::find_first(mode, attempts.len(), |i| {
        let (m, n) = attempts[i];
        let r = brute_force_embed(g, d, m, n).expect("parameters in range");
        total.fetch_add(r.nodes_explored, Ordering::Relaxed);
        r.found.then_some(r)
    });
    hit.unwrap_or(OracleResult { found: false, m: 0, n: n_max, labels: None, nodes_explored: total.into_inner() })
}

struct Search<'a> {
    d: &'a DistanceMatrix,
    order: &'a [Vertex],
    candidates: &'a [u64],
    m: usize,
    n: usize,
    image: Vec<u64>,
    nodes: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let options: Vec<u64> = if depth == 1 { self.second_representatives() } else { self.candidates.to_vec() };
        for x in options {
            self.nodes += 1;
            if self.consistent(depth, v, x) {
                self.image[v] = x;
                if self.extend(depth + 1) {
                    return true;
                }
            }
        }
        false
    }

    fn consistent(&self, depth: usize, v: Vertex, x: u64) -> bool {
        self.order[..depth].iter().all(|&u| (self.image[u] ^ x).count_ones() == 2 * self.d.get(u, v))
    }

    fn second_representatives(&self) -> Vec<u64> {
        let m = self.m;
        (0..=m).filter(|&k| m + (m - k) <= self.n).map(|k| ((1u64 << k) - 1) | (((1u64 << (m - k)) - 1) << m)).collect()
    }
}

fn bits(x: u64) -> Vec<usize> {
    (0..64).filter(|&i| x >> i & 1 == 1).collect()
}
