//! Decision and construction of isometric embeddings into Johnson graphs.
//!
//! The pipeline runs the wallspace check, groups vertical edges into
//! θ₁-classes, builds the atom graph, finds a bipartite root `D = (A ∪ B)`
//! whose line graph is the atom graph, and then labels vertices along a BFS
//! tree: the basepoint gets `B`, and crossing a tree edge whose class is the root edge `{i, j}`
//! (`i ∈ B`, `j ∈ A`) swaps `i` out for `j`. The result is only returned after
//! a full pairwise isometry check.

mod hypercube;
mod verify;

pub use hypercube::{embed_hypercube, HypercubeCertificate, HypercubeEmbedding};
pub use verify::{verify_embedding, verify_embedding_with, IsometryViolation, LabelError, Verification};

use crate::atom::{atom_graph, theta1_classes, AtomGraph, AtomInconsistency, OrientedEdge, ThetaClasses};
use crate::exec::Parallelism;
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::rootgraph::{bipartite_root, BipartiteRoot, RootCertificate, RootError};
use crate::walls::{check_wc_with, WallSystem, WcCertificate};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmbedOptions {
    pub basepoint: Vertex,
    /// Re-verify θ₁ and θ₂ over all pairs of vertical edges.
    pub paranoid: bool,
    pub parallelism: Parallelism,
}

impl EmbedOptions {
    pub fn at(basepoint: Vertex) -> Self {
        EmbedOptions { basepoint, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub m: usize,
    pub ground_set_size: usize,
    pub basepoint: Vertex,
    /// Sorted `m`-subsets of `0..ground_set_size`.
    pub labels: Vec<Vec<usize>>,
}

/// Root edge `{i, j}` assigned to each θ₁-class, in the renumbered ground set
/// where `B = 0..m` and `A = m..ground_set_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelAssignment {
    pub basepoint: Vertex,
    /// `pairs[class] = (i, j)` with `i < m <= j`.
    pub pairs: Vec<(usize, usize)>,
    /// Original root vertex id of each ground element.
    pub root_ids: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectionCertificate {
    Wc(WcCertificate),
    Agc {
        basepoint: Vertex,
        /// θ₁-classes, i.e. the atom-graph vertices the certificate refers to.
        classes: Vec<Vec<OrientedEdge>>,
        certificate: RootCertificate,
    },
    Internal(String),
}

impl RejectionCertificate {
    pub fn stage(&self) -> &'static str {
        match self {
            RejectionCertificate::Wc(_) => "WC",
            RejectionCertificate::Agc { .. } => "AGC",
            RejectionCertificate::Internal(_) => "INTERNAL",
        }
    }
}

impl From<AtomInconsistency> for RejectionCertificate {
    fn from(e: AtomInconsistency) -> Self {
        RejectionCertificate::Internal(e.to_string())
    }
}

/// Everything the pipeline computed on the way to an embedding.
#[derive(Clone, Debug)]
pub struct PipelineArtifacts {
    pub walls: WallSystem,
    pub classes: ThetaClasses,
    pub atom: AtomGraph,
    pub root: BipartiteRoot,
    pub assignment: LabelAssignment,
    pub tree: Vec<Option<Vertex>>,
    pub embedding: Embedding,
}

/// BFS tree from `b`: the parent of `v` is its smallest neighbor one step
/// closer to `b`.
pub fn bfs_tree(g: &Graph, d: &DistanceMatrix, b: Vertex) -> Vec<Option<Vertex>> {
    let rb = d.row(b);
    (0..g.n())
        .map(|v| if v == b { None } else { g.neighbors(v).iter().copied().find(|&w| rb[w] + 1 == rb[v]) })
        .collect()
}

pub fn build_embedding(
    g: &Graph,
    d: &DistanceMatrix,
    options: &EmbedOptions,
) -> Result<Embedding, RejectionCertificate> {
    run_pipeline(g, d, options).map(|a| a.embedding)
}

pub fn run_pipeline(
    g: &Graph,
    d: &DistanceMatrix,
    options: &EmbedOptions,
) -> Result<PipelineArtifacts, RejectionCertificate> {
    let b = options.basepoint;
    assert!(b < g.n(), "basepoint {b} out of range");

    let walls = check_wc_with(g, d, options.parallelism).map_err(RejectionCertificate::Wc)?;
    let classes = theta1_classes(g, d, b, options.paranoid)?;
    let atom = atom_graph(d, &classes, options.paranoid)?;
    let root = bipartite_root(&atom.graph).map_err(|e| match e {
        RootError::Certificate(certificate) => {
            RejectionCertificate::Agc { basepoint: b, classes: classes.classes.clone(), certificate }
        }
        RootError::Inconsistent(x, y) => {
            RejectionCertificate::Internal(format!("root of the atom graph disagrees at classes {x} and {y}"))
        }
    })?;

    let assignment = assign_labels(&root, b);
    let m = root.b_side.len();
    let ground_set_size = root.vertex_count;
    let tree = bfs_tree(g, d, b);

    let mut order: Vec<Vertex> = (0..g.n()).collect();
    order.sort_by_key(|&v| (d.get(b, v), v));
    let mut labels: Vec<Option<Vec<usize>>> = vec![None; g.n()];
    labels[b] = Some((0..m).collect());
    for &v in &order[1..] {
        let u = tree[v].expect("non-root vertices have a parent");
        let class = classes
            .class_of(OrientedEdge::new(u, v))
            .ok_or_else(|| RejectionCertificate::Internal(format!("tree edge {u}->{v} is not vertical")))?;
        let (i, j) = assignment.pairs[class];
        let mut label = labels[u].clone().expect("parents are labeled first");
        let (Ok(pos_i), Err(pos_j)) = (label.binary_search(&i), label.binary_search(&j)) else {
            return Err(RejectionCertificate::Internal(format!(
                "cannot swap {i} for {j} in the label of {u} along tree edge {u}->{v}"
            )));
        };
        label.remove(pos_i);
        label.insert(if pos_j > pos_i { pos_j - 1 } else { pos_j }, j);
        labels[v] = Some(label);
    }
    let labels: Vec<Vec<usize>> = labels.into_iter().map(|l| l.expect("every vertex labeled")).collect();

    match verify_embedding_with(d, &labels, options.parallelism) {
        Ok(Verification::Isometric) => {}
        Ok(Verification::Violation(v)) => {
            return Err(RejectionCertificate::Internal(format!(
                "labels of {} and {} differ in {} elements, expected {}",
                v.x, v.y, v.sym_diff, v.expected
            )))
        }
        Err(e) => return Err(RejectionCertificate::Internal(e.to_string())),
    }

    let embedding = Embedding { m, ground_set_size, basepoint: b, labels };
    Ok(PipelineArtifacts { walls, classes, atom, root, assignment, tree, embedding })
}

fn assign_labels(root: &BipartiteRoot, basepoint: Vertex) -> LabelAssignment {
    let mut dense = vec![usize::MAX; root.vertex_count];
    let root_ids: Vec<usize> = root.b_side.iter().chain(&root.a_side).copied().collect();
    for (new, &old) in root_ids.iter().enumerate() {
        dense[old] = new;
    }
    let pairs = root.vertex_to_edge.iter().map(|&(i, j)| (dense[i], dense[j])).collect();
    LabelAssignment { basepoint, pairs, root_ids }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance_matrix;
    use crate::oracle::{gen_family, Family};

    fn embed(f: Family, b: Vertex) -> Result<Embedding, RejectionCertificate> {
        let g = gen_family(f).unwrap();
        let d = distance_matrix(&g);
        build_embedding(&g, &d, &EmbedOptions { basepoint: b, paranoid: true, ..Default::default() })
    }

    #[test]
    fn bfs_tree_examples() {
        let c5 = gen_family(Family::Cycle(5)).unwrap();
        let t = bfs_tree(&c5, &distance_matrix(&c5), 0);
        assert_eq!(t, vec![None, Some(0), Some(1), Some(4), Some(0)]);
        let star = gen_family(Family::CompleteBipartite(1, 3)).unwrap();
        assert_eq!(bfs_tree(&star, &distance_matrix(&star), 0), vec![None, Some(0), Some(0), Some(0)]);
    }

    #[test]
    fn small_embeddings() {
        let k2 = embed(Family::Path(2), 0).unwrap();
        assert_eq!((k2.m, k2.ground_set_size), (1, 2));
        assert_eq!(k2.labels, vec![vec![0], vec![1]]);

        let c4 = embed(Family::Cycle(4), 0).unwrap();
        assert_eq!((c4.m, c4.ground_set_size), (2, 4));

        let c5 = embed(Family::Cycle(5), 0).unwrap();
        assert_eq!((c5.m, c5.ground_set_size), (2, 5));
    }

    #[test]
    fn petersen_every_basepoint() {
        for b in 0..10 {
            let e = embed(Family::Petersen, b).unwrap();
            assert_eq!((e.m, e.ground_set_size), (3, 6));
            assert_eq!(e.labels[b], vec![0, 1, 2]);
        }
    }

    #[test]
    fn single_vertex() {
        let e = embed(Family::Complete(1), 0).unwrap();
        assert_eq!((e.m, e.ground_set_size), (0, 0));
        assert_eq!(e.labels, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn k23_rejected_at_wc() {
        let err = embed(Family::CompleteBipartite(2, 3), 0).unwrap_err();
        assert_eq!(err.stage(), "WC");
    }
}
