//! Independent brute-force oracle, graph family generators and the
//! pipeline/oracle cross-check used to validate the embedder.

mod generators;
mod random;
mod search;

pub use generators::{gen_family, subsets_colex, Family, FamilyError};
pub use random::{random_connected_graph, RandomGraphError, ATTEMPT_BUDGET};
pub use search::{brute_force_embed, oracle_decide, oracle_decide_with, OracleError, OracleResult, MAX_GROUND};

use crate::embedder::{build_embedding, verify_embedding, EmbedOptions, Embedding, RejectionCertificate};
use crate::exec::{self, Parallelism};
use crate::graph::{distance_matrix, Graph};

/// Outcome of running the pipeline and, on rejection, the oracle on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub pipeline: Result<Embedding, RejectionCertificate>,
    /// Oracle verdict, only computed when the pipeline rejects.
    pub oracle: Option<OracleResult>,
}

impl CrossCheck {
    /// YES answers verify, NO answers come from WC or AGC and the oracle
    /// finds nothing up to the search bound.
    pub fn agrees(&self, g: &Graph) -> bool {
        match &self.pipeline {
            Ok(e) => {
                let d = distance_matrix(g);
                matches!(verify_embedding(&d, &e.labels), Ok(v) if v.is_isometric())
            }
            Err(RejectionCertificate::Internal(_)) => false,
            Err(_) => self.oracle.as_ref().is_some_and(|r| !r.found),
        }
    }
}

pub fn cross_check(g: &Graph, n_max: usize) -> CrossCheck {
    let d = distance_matrix(g);
    let pipeline = build_embedding(g, &d, &EmbedOptions::default());
    let oracle = pipeline.is_err().then(|| oracle_decide_with(g, &d, n_max, Parallelism::Sequential));
    CrossCheck { pipeline, oracle }
}

/// Cross-checks every graph, one graph per task.
pub fn cross_check_all(graphs: &[Graph], n_max: usize, mode: Parallelism) -> Vec<CrossCheck> {
    exec::map_slice(mode, graphs, |g| cross_check(g, n_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_on_small_families() {
        let graphs: Vec<Graph> =
            [Family::Cycle(5), Family::CompleteBipartite(2, 3), Family::Complete(4), Family::Path(3)]
                .into_iter()
                .map(|f| gen_family(f).unwrap())
                .collect();
        let seq = cross_check_all(&graphs, 8, Parallelism::Sequential);
        assert_eq!(seq, cross_check_all(&graphs, 8, Parallelism::default()));
        for (g, c) in graphs.iter().zip(&seq) {
            assert!(c.agrees(g), "{c:?}");
        }
        assert!(seq[1].pipeline.is_err() && seq[1].oracle.is_some());
        assert!(seq[0].oracle.is_none());
    }
}
