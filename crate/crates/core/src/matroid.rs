//! Interval, positioning and link conditions, and recognition of
//! basis graphs of matroids as graphs satisfying the wallspace and interval
//! conditions.

use crate::exec::{self, Parallelism};
use crate::graph::{induced_is_pattern, interval, DistanceMatrix, Graph, Pattern, Vertex, VertexSet};
use crate::rootgraph::{bipartite_root, RootError};
use crate::walls::{check_wc, WallSystem, WcCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    Interval,
    Positioning,
    Link,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionWitness {
    /// `I(u, v)` with `d(u, v) = 2` matches none of the allowed shapes.
    Interval { u: Vertex, v: Vertex, interval: VertexSet },
    /// `d(b,u1) + d(b,u3) != d(b,u2) + d(b,u4)` for the square `u1 u2 u3 u4`.
    Square { basepoint: Vertex, square: [Vertex; 4], sums: (u32, u32) },
    /// The neighborhood of `vertex` is not the line graph of a bipartite graph.
    Link { vertex: Vertex, neighborhood: Vec<Vertex>, failure: RootError },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: Condition,
    pub witness: Option<ConditionWitness>,
}

impl ConditionReport {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }

    fn new(condition: Condition, witness: Option<ConditionWitness>) -> Self {
        ConditionReport { condition, witness }
    }
}

impl ConditionWitness {
    /// Re-checks the witness against the graph.
    pub fn holds(&self, g: &Graph, d: &DistanceMatrix) -> bool {
        match self {
            ConditionWitness::Interval { u, v, interval: iv } => {
                d.get(*u, *v) == 2
                    && *iv == interval(d, *u, *v)
                    && Pattern::ALL.iter().all(|&p| !induced_is_pattern(g, iv, p))
            }
            ConditionWitness::Square { basepoint: b, square, sums } => {
                let [a, x, c, y] = *square;
                g.adjacent(a, x)
                    && g.adjacent(x, c)
                    && g.adjacent(c, y)
                    && g.adjacent(y, a)
                    && *sums == (d.get(*b, a) + d.get(*b, c), d.get(*b, x) + d.get(*b, y))
                    && sums.0 != sums.1
            }
            ConditionWitness::Link { vertex, neighborhood, failure } => {
                neighborhood == g.neighbors(*vertex)
                    && bipartite_root(&g.induced(neighborhood)).err().as_ref() == Some(failure)
            }
        }
    }
}

/// Every interval between vertices at distance 2 induces a square, a pyramid
/// or an octahedron.
pub fn check_ic(g: &Graph, d: &DistanceMatrix) -> ConditionReport {
    let n = g.n();
    let witness = exec::find_first(Parallelism::default(), n, |u| {
        (u + 1..n).filter(|&v| d.get(u, v) == 2).find_map(|v| {
            let iv = interval(d, u, v);
            let ok = Pattern::ALL.iter().any(|&p| induced_is_pattern(g, &iv, p));
            (!ok).then_some(ConditionWitness::Interval { u, v, interval: iv })
        })
    });
    ConditionReport::new(Condition::Interval, witness)
}

/// 4-cycles `u1 u2 u3 u4`, each listed once with `u1` the smallest vertex and
/// `u2 < u4`. With `induced_only`, both diagonals must be non-edges.
pub fn squares(g: &Graph, induced_only: bool) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let nb = g.neighbors(a);
        for (i, &x) in nb.iter().enumerate() {
            if x < a {
                continue;
            }
            for &y in &nb[i + 1..] {
                if induced_only && g.adjacent(x, y) {
                    continue;
                }
                for &c in g.neighbors(x) {
                    if c > a && c != y && g.adjacent(c, y) && !(induced_only && g.adjacent(a, c)) {
                        out.push([a, x, c, y]);
                    }
                }
            }
        }
    }
    out
}

/// For every square and every basepoint, opposite corners have equal
/// distance sums. Squares are scanned in order, basepoints innermost.
pub fn check_pc(g: &Graph, d: &DistanceMatrix, induced_only: bool) -> ConditionReport {
    let sq = squares(g, induced_only);
    let n = g.n();
    let witness = exec::find_first(Parallelism::default(), sq.len(), |k| {
        let [a, x, c, y] = sq[k];
        (0..n).find_map(|b| {
            let sums = (d.get(b, a) + d.get(b, c), d.get(b, x) + d.get(b, y));
            (sums.0 != sums.1).then_some(ConditionWitness::Square { basepoint: b, square: sq[k], sums })
        })
    });
    ConditionReport::new(Condition::Positioning, witness)
}

/// Every vertex neighborhood induces the line graph of a bipartite graph.
pub fn check_lc(g: &Graph) -> ConditionReport {
    let witness = exec::find_first(Parallelism::default(), g.n(), |v| {
        let neighborhood = g.neighbors(v).to_vec();
        bipartite_root(&g.induced(&neighborhood)).err().map(|failure| ConditionWitness::Link {
            vertex: v,
            neighborhood,
            failure,
        })
    });
    ConditionReport::new(Condition::Link, witness)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisGraphReport {
    pub wc: Result<WallSystem, WcCertificate>,
    pub ic: ConditionReport,
}

impl BasisGraphReport {
    pub fn is_basis_graph(&self) -> bool {
        self.wc.is_ok() && self.ic.pass()
    }
}

pub fn is_basis_graph(g: &Graph, d: &DistanceMatrix) -> BasisGraphReport {
    BasisGraphReport { wc: check_wc(g, d), ic: check_ic(g, d) }
}
