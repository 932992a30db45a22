//! Partial cubes: bipartite graphs whose `W(u,v)` sets are all convex.

use std::collections::HashMap;

use super::verify::{check_scaled, IsometryViolation, Verification};
use crate::exec::Parallelism;
use crate::graph::{convexity_violation, is_bipartite, ConvexityWitness, DistanceMatrix, Graph, OddCycle, VertexSet};
use crate::walls::{splits, Edge};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeEmbedding {
    pub dimension: usize,
    /// `labels[v]` holds the classes whose positive halfspace contains `v`.
    pub labels: Vec<Vec<usize>>,
    /// `(negative, positive)` halfspace per class; the negative one holds vertex 0.
    pub halfspaces: Vec<(VertexSet, VertexSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypercubeCertificate {
    NotBipartite(OddCycle),
    NonconvexHalfspace {
        edge: Edge,
        half: VertexSet,
        witness: ConvexityWitness,
    },
    /// Verification failed after both conditions held; never expected.
    Internal(IsometryViolation),
}

pub fn embed_hypercube(g: &Graph, d: &DistanceMatrix) -> Result<HypercubeEmbedding, HypercubeCertificate> {
    is_bipartite(g).map_err(HypercubeCertificate::NotBipartite)?;

    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    let mut halfspaces: Vec<(VertexSet, VertexSet)> = Vec::new();
    for edge in g.edges() {
        let split = splits(g, d, edge).expect("edge of g");
        for half in [&split.w_uv, &split.w_vu] {
            if let Some(witness) = convexity_violation(g, d, half) {
                return Err(HypercubeCertificate::NonconvexHalfspace { edge, half: half.clone(), witness });
            }
        }
        let (neg, pos) = if split.w_uv.contains(0) { (split.w_uv, split.w_vu) } else { (split.w_vu, split.w_uv) };
        if !index.contains_key(&neg) {
            index.insert(neg.clone(), halfspaces.len());
            halfspaces.push((neg, pos));
        }
    }

    let labels: Vec<Vec<usize>> =
        (0..g.n()).map(|v| (0..halfspaces.len()).filter(|&i| halfspaces[i].1.contains(v)).collect()).collect();
    match check_scaled(d, &labels, 1, Parallelism::default()) {
        Verification::Isometric => Ok(HypercubeEmbedding { dimension: halfspaces.len(), labels, halfspaces }),
        Verification::Violation(v) => Err(HypercubeCertificate::Internal(v)),
    }
}
