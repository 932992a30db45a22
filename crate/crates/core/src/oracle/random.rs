//! Seeded Erdős–Rényi graphs conditioned on connectivity.
//!
//! The generator is pinned so that `(n, p, seed)` reproduces the same graph
//! everywhere: a `ChaCha8Rng` from `seed_from_u64(seed)` drives one
//! `gen_bool(p)` per pair `(i, j)`, `i < j`, in lexicographic order. A
//! disconnected draw is discarded and the next attempt continues the same
//! stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, SimpleGraph};

pub const ATTEMPT_BUDGET: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum RandomGraphError {
    #[error("edge probability must lie strictly between 0 and 1, got {0}")]
    Probability(f64),
    #[error("need at least one vertex")]
    Empty,
    #[error("no connected graph after {ATTEMPT_BUDGET} attempts")]
    BudgetExhausted,
}

pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph, RandomGraphError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(RandomGraphError::Probability(p));
    }
    if n == 0 {
        return Err(RandomGraphError::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPT_BUDGET {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, &edges).expect("pairs are simple");
        if let Ok(g) = Graph::try_from(g) {
            return Ok(g);
        }
    }
    Err(RandomGraphError::BudgetExhausted)
}
