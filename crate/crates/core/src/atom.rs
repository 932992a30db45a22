//! Four-point scalar on edges, vertical edges, θ₁-classes and the atom graph.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, SimpleGraph, Vertex, VertexSet};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedEdge {
    pub tail: Vertex,
    pub head: Vertex,
}

impl OrientedEdge {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        OrientedEdge { tail, head }
    }

    pub fn reversed(self) -> Self {
        OrientedEdge { tail: self.head, head: self.tail }
    }
}

impl fmt::Debug for OrientedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}->{})", self.tail, self.head)
    }
}

/// `<e,f> = d(u,v') + d(v,u') - d(u,u') - d(v,v')` for `e = (u,v)`, `f = (u',v')`.
pub fn scalar(d: &DistanceMatrix, e: OrientedEdge, f: OrientedEdge) -> i32 {
    let (u, v, u2, v2) = (e.tail, e.head, f.tail, f.head);
    let s = d.get(u, v2) as i32 + d.get(v, u2) as i32 - d.get(u, u2) as i32 - d.get(v, v2) as i32;
    assert!((-2..=2).contains(&s), "scalar {s} of {e:?},{f:?} out of range; arguments must be edges");
    s
}

/// Edges whose ends lie at different distances from `b`, oriented away from
/// `b`, sorted by `(tail, head)`.
pub fn vertical_edges(g: &Graph, d: &DistanceMatrix, b: Vertex) -> Vec<OrientedEdge> {
    let rb = d.row(b);
    let mut out: Vec<OrientedEdge> = g
        .edges()
        .filter(|&(x, y)| rb[x] != rb[y])
        .map(|(x, y)| if rb[x] < rb[y] { OrientedEdge::new(x, y) } else { OrientedEdge::new(y, x) })
        .collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{reason}: <{first:?},{second:?}> = {scalar}")]
pub struct AtomInconsistency {
    pub first: OrientedEdge,
    pub second: OrientedEdge,
    pub scalar: i32,
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaClasses {
    pub basepoint: Vertex,
    /// Ordered by smallest member; members sorted.
    pub classes: Vec<Vec<OrientedEdge>>,
    /// `(W(u,v), W(v,u))` shared by every member `(u,v)` of the class.
    pub signatures: Vec<(VertexSet, VertexSet)>,
    class_of: HashMap<OrientedEdge, usize>,
}

impl ThetaClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class of a base-oriented vertical edge.
    pub fn class_of(&self, e: OrientedEdge) -> Option<usize> {
        self.class_of.get(&e).copied()
    }

    pub fn representative(&self, class: usize) -> OrientedEdge {
        self.classes[class][0]
    }

    pub fn edges(&self) -> impl Iterator<Item = (OrientedEdge, usize)> + '_ {
        self.classes.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |&e| (e, i)))
    }
}

/// Groups base-oriented vertical edges by their exact `(W(u,v), W(v,u))`
/// pair, which coincides with θ₁ once the wallspace condition holds.
///
/// Only meaningful on graphs passing [`crate::walls::check_wc`]. Every member
/// is checked to have scalar 2 with its class representative; `paranoid`
/// additionally checks all pairs, inside and across classes.
pub fn theta1_classes(
    g: &Graph,
    d: &DistanceMatrix,
    b: Vertex,
    paranoid: bool,
) -> Result<ThetaClasses, AtomInconsistency> {
    let n = g.n();
    let mut by_signature: HashMap<(Vec<u64>, Vec<u64>), usize> = HashMap::new();
    let mut classes: Vec<Vec<OrientedEdge>> = Vec::new();
    let mut signatures = Vec::new();
    let mut class_of = HashMap::new();

    for e in vertical_edges(g, d, b) {
        let (ru, rv) = (d.row(e.tail), d.row(e.head));
        let mut closer_u = vec![0u64; n.div_ceil(64)];
        let mut closer_v = closer_u.clone();
        for x in 0..n {
            if ru[x] < rv[x] {
                closer_u[x / 64] |= 1 << (x % 64);
            } else if rv[x] < ru[x] {
                closer_v[x / 64] |= 1 << (x % 64);
            }
        }
        let next = classes.len();
        let idx = *by_signature.entry((closer_u, closer_v)).or_insert(next);
        if idx == next {
            classes.push(Vec::new());
            signatures.push(((0..n).filter(|&x| ru[x] < rv[x]).collect(), (0..n).filter(|&x| rv[x] < ru[x]).collect()));
        }
        classes[idx].push(e);
        class_of.insert(e, idx);
    }

    for class in &classes {
        for &e in &class[1..] {
            let s = scalar(d, class[0], e);
            if s != 2 {
                return Err(AtomInconsistency {
                    first: class[0],
                    second: e,
                    scalar: s,
                    reason: "equal W-pairs but not θ₁",
                });
            }
        }
    }
    let classes = ThetaClasses { basepoint: b, classes, signatures, class_of };
    if paranoid {
        let all: Vec<_> = classes.edges().collect();
        for (i, &(e, ce)) in all.iter().enumerate() {
            for &(f, cf) in &all[i + 1..] {
                let s = scalar(d, e, f);
                if (s == 2) != (ce == cf) {
                    return Err(AtomInconsistency {
                        first: e,
                        second: f,
                        scalar: s,
                        reason: "θ₁ disagrees with W-pair classes",
                    });
                }
            }
        }
    }
    Ok(classes)
}

/// Graph on θ₁-classes; two classes are adjacent when their members are in
/// relation θ₂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomGraph {
    pub graph: SimpleGraph,
}

/// Adjacency from one representative pair per class pair. With `paranoid`,
/// every cross pair of members must agree with the representatives.
pub fn atom_graph(d: &DistanceMatrix, classes: &ThetaClasses, paranoid: bool) -> Result<AtomGraph, AtomInconsistency> {
    let k = classes.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (ri, rj) = (classes.representative(i), classes.representative(j));
            let adjacent = scalar(d, ri, rj) == 1;
            if adjacent {
                edges.push((i, j));
            }
            if paranoid {
                for &e in &classes.classes[i] {
                    for &f in &classes.classes[j] {
                        let s = scalar(d, e, f);
                        if (s == 1) != adjacent {
                            return Err(AtomInconsistency {
                                first: e,
                                second: f,
                                scalar: s,
                                reason: "θ₂ depends on the class representative",
                            });
                        }
                    }
                }
            }
        }
    }
    let graph = SimpleGraph::from_edges(k, &edges).expect("class pairs are distinct");
    Ok(AtomGraph { graph })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance_matrix;
    use crate::oracle::{gen_family, Family};

    fn oe(t: Vertex, h: Vertex) -> OrientedEdge {
        OrientedEdge::new(t, h)
    }

    #[test]
    fn scalar_examples() {
        let c5 = gen_family(Family::Cycle(5)).unwrap();
        let d = distance_matrix(&c5);
        assert_eq!(scalar(&d, oe(0, 1), oe(4, 3)), 1);
        assert_eq!(scalar(&d, oe(0, 1), oe(0, 1)), 2);
        assert_eq!(scalar(&d, oe(0, 1), oe(1, 2)), 0);
        assert_eq!(scalar(&d, oe(0, 1), oe(3, 4)), -1);
    }

    #[test]
    fn vertical_edge_examples() {
        let c5 = gen_family(Family::Cycle(5)).unwrap();
        let d = distance_matrix(&c5);
        assert_eq!(vertical_edges(&c5, &d, 0), vec![oe(0, 1), oe(0, 4), oe(1, 2), oe(4, 3)]);

        let p = gen_family(Family::Petersen).unwrap();
        let d = distance_matrix(&p);
        for b in 0..10 {
            let v = vertical_edges(&p, &d, b);
            assert_eq!(v.len(), 9);
            assert_eq!(v.iter().filter(|e| e.tail == b).count(), 3);
        }

        let k2 = gen_family(Family::Path(2)).unwrap();
        assert_eq!(vertical_edges(&k2, &distance_matrix(&k2), 0), vec![oe(0, 1)]);
    }

    #[test]
    fn class_examples() {
        let c5 = gen_family(Family::Cycle(5)).unwrap();
        let d = distance_matrix(&c5);
        let cl = theta1_classes(&c5, &d, 0, true).unwrap();
        assert_eq!(cl.len(), 4);
        assert!(cl.classes.iter().all(|c| c.len() == 1));

        let c4 = gen_family(Family::Cycle(4)).unwrap();
        let d = distance_matrix(&c4);
        let cl = theta1_classes(&c4, &d, 0, true).unwrap();
        assert_eq!(cl.classes, vec![vec![oe(0, 1), oe(3, 2)], vec![oe(0, 3), oe(1, 2)]]);
        assert_eq!(cl.class_of(oe(3, 2)), Some(0));
        assert_eq!(cl.class_of(oe(2, 3)), None);

        let p = gen_family(Family::Petersen).unwrap();
        let d = distance_matrix(&p);
        let cl = theta1_classes(&p, &d, 3, true).unwrap();
        assert_eq!(cl.len(), 9);
    }

    #[test]
    fn atom_graph_examples() {
        let c5 = gen_family(Family::Cycle(5)).unwrap();
        let d = distance_matrix(&c5);
        let cl = theta1_classes(&c5, &d, 0, false).unwrap();
        let sigma = atom_graph(&d, &cl, true).unwrap().graph;
        // classes: 0=(0,1) 1=(0,4) 2=(1,2) 3=(4,3); path (0,1)-(4,3)-(1,2)-(0,4)
        assert_eq!(sigma.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2), (2, 3)]);

        let k4 = gen_family(Family::Complete(4)).unwrap();
        let d = distance_matrix(&k4);
        let cl = theta1_classes(&k4, &d, 0, false).unwrap();
        let sigma = atom_graph(&d, &cl, true).unwrap().graph;
        assert_eq!((sigma.n(), sigma.edge_count()), (3, 3));

        let p = gen_family(Family::Petersen).unwrap();
        let d = distance_matrix(&p);
        for b in 0..10 {
            let cl = theta1_classes(&p, &d, b, false).unwrap();
            let sigma = atom_graph(&d, &cl, true).unwrap().graph;
            assert_eq!(sigma.n(), 9);
            assert!((0..9).all(|v| sigma.degree(v) == 4));
        }
    }

    #[test]
    fn paranoid_flags_non_wc_graphs() {
        // K_{2,3} fails the wallspace condition; the W-pair grouping is then
        // not θ₁ and the cross-class check notices.
        let k23 = gen_family(Family::CompleteBipartite(2, 3)).unwrap();
        let d = distance_matrix(&k23);
        assert!(theta1_classes(&k23, &d, 0, true).is_err());
    }
}
