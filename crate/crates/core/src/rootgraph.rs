//! Recognition of line graphs of bipartite graphs, with explicit roots.
//!
//! Line graphs of triangle-free graphs are exactly the claw-free,
//! diamond-free graphs. In such a graph every edge `xy` lies in the unique
//! maximal clique `{x, y} ∪ (N(x) ∩ N(y))`, these cliques are edge-disjoint,
//! and every vertex lies in at most two of them. The root has one vertex per
//! clique plus pendant vertices for vertices lying in fewer than two cliques.

use thiserror::Error;

use crate::graph::{is_bipartite, SimpleGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootCertificate {
    /// Induced `K_{1,3}`.
    Claw {
        center: Vertex,
        leaves: [Vertex; 3],
    },
    /// Induced `K4` minus the edge `tips.0 tips.1`.
    Diamond {
        spine: (Vertex, Vertex),
        tips: (Vertex, Vertex),
    },
    VertexInThreeCliques {
        vertex: Vertex,
        cliques: [Vec<Vertex>; 3],
    },
    /// Odd cycle of root vertices; `edges[i]` is the input vertex realised by
    /// the root edge `cycle[i] cycle[i+1]`.
    OddCycleInRoot {
        cycle: Vec<usize>,
        edges: Vec<Vertex>,
    },
}

impl RootCertificate {
    /// Re-checks the witness against the input graph.
    pub fn holds(&self, g: &SimpleGraph) -> bool {
        match self {
            RootCertificate::Claw { center, leaves } => {
                let [a, b, c] = *leaves;
                leaves.iter().all(|&l| g.adjacent(*center, l))
                    && !g.adjacent(a, b)
                    && !g.adjacent(a, c)
                    && !g.adjacent(b, c)
            }
            RootCertificate::Diamond { spine: (x, y), tips: (p, q) } => {
                g.adjacent(*x, *y)
                    && [p, q].iter().all(|&&t| g.adjacent(*x, t) && g.adjacent(*y, t))
                    && p != q
                    && !g.adjacent(*p, *q)
            }
            RootCertificate::VertexInThreeCliques { vertex, cliques } => {
                let is_clique = |c: &Vec<Vertex>| {
                    c.contains(vertex)
                        && c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| g.adjacent(a, b)))
                };
                // pairwise edge-disjoint cliques meet only in the vertex
                cliques.iter().all(is_clique)
                    && (0..3)
                        .all(|i| (i + 1..3).all(|j| cliques[i].iter().filter(|v| cliques[j].contains(v)).count() == 1))
            }
            RootCertificate::OddCycleInRoot { cycle, edges } => {
                // consecutive input vertices must share a root vertex, i.e. be adjacent
                let k = edges.len();
                k % 2 == 1
                    && cycle.len() == k
                    && (0..k).all(|i| edges[i] < g.n() && g.adjacent(edges[i], edges[(i + 1) % k]))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("not the line graph of a bipartite graph: {0:?}")]
    Certificate(RootCertificate),
    #[error("constructed root does not reproduce the input at vertices {0} and {1}")]
    Inconsistent(Vertex, Vertex),
}

/// Edge-disjoint cliques covering every edge; `membership[v]` lists the
/// cliques containing `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrauszPartition {
    pub cliques: Vec<Vec<Vertex>>,
    pub membership: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteRoot {
    pub vertex_count: usize,
    pub a_side: Vec<usize>,
    pub b_side: Vec<usize>,
    /// `vertex_to_edge[x] = (i, j)` with `i` in B and `j` in A.
    pub vertex_to_edge: Vec<(usize, usize)>,
}

impl BipartiteRoot {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.vertex_to_edge
    }

    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.vertex_count, &self.vertex_to_edge).expect("root is simple")
    }

    /// First pair `x < y` whose adjacency in `g` differs from "root edges share
    /// exactly one end".
    pub fn line_graph_mismatch(&self, g: &SimpleGraph) -> Option<(Vertex, Vertex)> {
        let n = g.n();
        if self.vertex_to_edge.len() != n {
            return Some((0, 0));
        }
        for x in 0..n {
            for y in x + 1..n {
                let (a, b) = self.vertex_to_edge[x];
                let (c, d) = self.vertex_to_edge[y];
                let shared = [a == c, a == d, b == c, b == d].iter().filter(|&&s| s).count();
                if (shared == 1) != g.adjacent(x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// Smallest induced claw, else smallest induced diamond.
///
/// Claws are ordered by `(center, leaves)`, diamonds by `(spine, tips)`, all
/// lexicographically.
pub fn find_claw_or_diamond(g: &SimpleGraph) -> Option<RootCertificate> {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.adjacent(a, b) {
                    continue;
                }
                for &e in &nb[j + 1..] {
                    if !g.adjacent(a, e) && !g.adjacent(b, e) {
                        return Some(RootCertificate::Claw { center: c, leaves: [a, b, e] });
                    }
                }
            }
        }
    }
    for (x, y) in g.edges() {
        let common: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&w| g.adjacent(y, w)).collect();
        for (i, &p) in common.iter().enumerate() {
            if let Some(&q) = common[i + 1..].iter().find(|&&q| !g.adjacent(p, q)) {
                return Some(RootCertificate::Diamond { spine: (x, y), tips: (p, q) });
            }
        }
    }
    None
}

pub fn krausz_partition(g: &SimpleGraph) -> Result<KrauszPartition, RootCertificate> {
    if let Some(cert) = find_claw_or_diamond(g) {
        return Err(cert);
    }
    let n = g.n();
    let mut cliques: Vec<Vec<Vertex>> = Vec::new();
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (x, y) in g.edges() {
        if membership[x].iter().any(|c| membership[y].contains(c)) {
            continue;
        }
        let mut clique: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&w| g.adjacent(y, w)).collect();
        clique.extend([x, y]);
        clique.sort_unstable();
        let idx = cliques.len();
        for &v in &clique {
            membership[v].push(idx);
        }
        cliques.push(clique);
    }
    if let Some(vertex) = (0..n).find(|&v| membership[v].len() >= 3) {
        let m = &membership[vertex];
        return Err(RootCertificate::VertexInThreeCliques {
            vertex,
            cliques: [cliques[m[0]].clone(), cliques[m[1]].clone(), cliques[m[2]].clone()],
        });
    }
    Ok(KrauszPartition { cliques, membership })
}

/// Builds a triangle-free root `D` with `L(D) ≅ g` and checks that `D` is
/// bipartite. In each component of `D` the smaller color class becomes B,
/// ties going to the class holding the smallest root vertex.
pub fn bipartite_root(g: &SimpleGraph) -> Result<BipartiteRoot, RootError> {
    let partition = krausz_partition(g).map_err(RootError::Certificate)?;
    let mut next = partition.cliques.len();
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut vertex_to_edge = Vec::with_capacity(g.n());
    for m in &partition.membership {
        let edge = match m[..] {
            [] => (fresh(), fresh()),
            [c] => (c, fresh()),
            [c, d] => (c, d),
            _ => unreachable!("memberships above two are certified"),
        };
        vertex_to_edge.push(edge);
    }
    let vertex_count = next;

    let draft = BipartiteRoot { vertex_count, a_side: Vec::new(), b_side: Vec::new(), vertex_to_edge };
    if let Some((x, y)) = draft.line_graph_mismatch(g) {
        return Err(RootError::Inconsistent(x, y));
    }

    let root = draft.graph();
    let coloring = match is_bipartite(&root) {
        Ok(c) => c,
        Err(odd) => {
            let k = odd.cycle.len();
            let edges = (0..k)
                .map(|i| {
                    let (a, b) = (odd.cycle[i], odd.cycle[(i + 1) % k]);
                    draft
                        .vertex_to_edge
                        .iter()
                        .position(|&(p, q)| (p, q) == (a, b) || (p, q) == (b, a))
                        .expect("cycle edges are root edges")
                })
                .collect();
            return Err(RootError::Certificate(RootCertificate::OddCycleInRoot { cycle: odd.cycle, edges }));
        }
    };

    let mut in_b = vec![false; vertex_count];
    for comp in root.components() {
        let (zeros, ones): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&r| coloring.side[r] == 0);
        // comp[0] has color 0, so ties go to `zeros`
        let b_part = if ones.len() < zeros.len() { ones } else { zeros };
        for r in b_part {
            in_b[r] = true;
        }
    }
    let b_side: Vec<usize> = (0..vertex_count).filter(|&r| in_b[r]).collect();
    let a_side: Vec<usize> = (0..vertex_count).filter(|&r| !in_b[r]).collect();
    let vertex_to_edge = draft.vertex_to_edge.into_iter().map(|(p, q)| if in_b[p] { (p, q) } else { (q, p) }).collect();
    Ok(BipartiteRoot { vertex_count, a_side, b_side, vertex_to_edge })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn claw_and_diamond() {
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(find_claw_or_diamond(&claw), Some(RootCertificate::Claw { center: 0, leaves: [1, 2, 3] }));

        let diamond = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let cert = find_claw_or_diamond(&diamond).unwrap();
        assert_eq!(cert, RootCertificate::Diamond { spine: (0, 1), tips: (2, 3) });
        assert!(cert.holds(&diamond));

        let k33 = graph(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let (lk33, _) = k33.line_graph();
        assert_eq!(find_claw_or_diamond(&lk33), None);
    }

    #[test]
    fn krausz_examples() {
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let p = krausz_partition(&k3).unwrap();
        assert_eq!(p.cliques, vec![vec![0, 1, 2]]);
        assert!(p.membership.iter().all(|m| m.len() == 1));

        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let p = krausz_partition(&p4).unwrap();
        assert_eq!(p.cliques, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(p.membership[1].len(), 2);
        assert_eq!(p.membership[2].len(), 2);

        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let p = krausz_partition(&c5).unwrap();
        assert_eq!(p.cliques.len(), 5);
        assert!(p.membership.iter().all(|m| m.len() == 2));
    }

    #[test]
    fn triangle_resolves_to_star() {
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let r = bipartite_root(&k3).unwrap();
        assert_eq!(r.b_side, vec![0]);
        assert_eq!(r.a_side.len(), 3);
        assert_eq!(r.line_graph_mismatch(&k3), None);
    }

    #[test]
    fn path_root() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let r = bipartite_root(&p4).unwrap();
        assert_eq!((r.b_side.len(), r.a_side.len()), (2, 3));
        let root = r.graph();
        let mut degrees: Vec<_> = (0..root.n()).map(|v| root.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2]);
        assert!(root.is_connected());
    }

    #[test]
    fn odd_root() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        match bipartite_root(&c5) {
            Err(RootError::Certificate(cert @ RootCertificate::OddCycleInRoot { .. })) => {
                assert!(cert.holds(&c5));
                if let RootCertificate::OddCycleInRoot { cycle, .. } = cert {
                    assert_eq!(cycle.len(), 5);
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn isolated_vertices_give_matching() {
        let g = SimpleGraph::empty(3);
        let r = bipartite_root(&g).unwrap();
        assert_eq!(r.vertex_count, 6);
        assert_eq!(r.b_side, vec![0, 2, 4]);
        assert_eq!(r.vertex_to_edge, vec![(0, 1), (2, 3), (4, 5)]);
    }

    #[test]
    fn wheel_hub_neighborhood_fails() {
        // the rim of a 5-wheel
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert!(bipartite_root(&c5).is_err());
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(bipartite_root(&k4).is_ok());
    }
}
