//! Per-edge wall decomposition and the wallspace condition.
//!
//! For an edge `uv`, every vertex is strictly closer to `u` (`W(u,v)`),
//! strictly closer to `v` (`W(v,u)`), or equidistant (`W=(u,v)`). The
//! condition requires `W=(u,v)` to induce at most two components `W'` and
//! `W''` and both bipartitions
//!
//! ```text
//! prime:        W(u,v) + W'   |   W(v,u) + W''
//! double prime: W(u,v) + W''  |   W(v,u) + W'
//! ```
//!
//! to consist of convex halves. `W'` is the component holding the smallest
//! vertex; missing components are empty.

use std::collections::HashMap;

use thiserror::Error;

use crate::exec::{self, Parallelism};
use crate::graph::{
    convexity_violation, induced_components, ConvexityWitness, DistanceMatrix, Graph, Vertex, VertexSet,
};

pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{0} {1} is not an edge")]
pub struct NotAnEdge(pub Vertex, pub Vertex);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWalls {
    pub edge: Edge,
    pub w_uv: VertexSet,
    pub w_vu: VertexSet,
    /// Components of the subgraph induced by `W=(u,v)`, ordered by smallest vertex.
    pub eq_components: Vec<VertexSet>,
}

impl EdgeWalls {
    pub fn equidistant(&self) -> VertexSet {
        self.eq_components.iter().fold(VertexSet::new(), |acc, c| acc.union(c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WallVariant {
    Prime,
    DoublePrime,
}

/// A bipartition of the vertex set; `neg` is the side containing the tail `u`
/// of the source edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub neg: VertexSet,
    pub pos: VertexSet,
    pub source_edge: Edge,
    pub variant: WallVariant,
}

impl Wall {
    pub fn separates(&self, x: Vertex, y: Vertex) -> bool {
        self.neg.contains(x) != self.neg.contains(y)
    }

    /// The half containing vertex 0; identifies the unordered bipartition.
    fn key(&self) -> &VertexSet {
        if self.neg.contains(0) {
            &self.neg
        } else {
            &self.pos
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WcCertificate {
    TooManyComponents { edge: Edge, components: Vec<VertexSet> },
    NonconvexHalfspace { edge: Edge, variant: WallVariant, half: VertexSet, witness: ConvexityWitness },
}

impl WcCertificate {
    pub fn edge(&self) -> Edge {
        match self {
            WcCertificate::TooManyComponents { edge, .. } | WcCertificate::NonconvexHalfspace { edge, .. } => *edge,
        }
    }

    /// Re-derives the certificate from the graph alone.
    pub fn holds(&self, g: &Graph, d: &DistanceMatrix) -> bool {
        let (u, v) = self.edge();
        let Ok(split) = splits(g, d, (u, v)) else {
            return false;
        };
        match self {
            WcCertificate::TooManyComponents { components, .. } => {
                components.len() > 2 && *components == split.eq_components
            }
            WcCertificate::NonconvexHalfspace { variant, half, witness, .. } => {
                let halves = wall_halves(&split);
                let idx = match variant {
                    WallVariant::Prime => 0,
                    WallVariant::DoublePrime => 2,
                };
                (halves[idx] == *half || halves[idx + 1] == *half) && witness.holds(d, half)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedWall {
    pub wall: Wall,
    /// 2 when the wall arises from an edge whose two walls coincide.
    pub multiplicity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallSystem {
    /// One entry per edge, in lexicographic edge order.
    pub edges: Vec<EdgeWalls>,
    /// Distinct bipartitions in order of first appearance.
    pub walls: Vec<WeightedWall>,
}

impl WallSystem {
    /// Total multiplicity of walls separating `x` from `y`.
    pub fn separation(&self, x: Vertex, y: Vertex) -> u32 {
        self.walls.iter().filter(|w| w.wall.separates(x, y)).map(|w| u32::from(w.multiplicity)).sum()
    }
}

pub fn splits(g: &Graph, d: &DistanceMatrix, (u, v): Edge) -> Result<EdgeWalls, NotAnEdge> {
    if u >= g.n() || v >= g.n() || !g.adjacent(u, v) {
        return Err(NotAnEdge(u, v));
    }
    let (ru, rv) = (d.row(u), d.row(v));
    let mut w_uv = Vec::new();
    let mut w_vu = Vec::new();
    let mut eq = Vec::new();
    for x in 0..g.n() {
        match ru[x].cmp(&rv[x]) {
            std::cmp::Ordering::Less => w_uv.push(x),
            std::cmp::Ordering::Greater => w_vu.push(x),
            std::cmp::Ordering::Equal => eq.push(x),
        }
    }
    Ok(EdgeWalls {
        edge: (u, v),
        w_uv: VertexSet::from_sorted(w_uv),
        w_vu: VertexSet::from_sorted(w_vu),
        eq_components: induced_components(g, &VertexSet::from_sorted(eq)),
    })
}

/// Prime neg, prime pos, double-prime neg, double-prime pos.
fn wall_halves(split: &EdgeWalls) -> [VertexSet; 4] {
    let empty = VertexSet::new();
    let first = split.eq_components.first().unwrap_or(&empty);
    let second = split.eq_components.get(1).unwrap_or(&empty);
    [split.w_uv.union(first), split.w_vu.union(second), split.w_uv.union(second), split.w_vu.union(first)]
}

pub type EdgeVerdict = Result<[Wall; 2], WcCertificate>;

pub fn check_wc_edge(g: &Graph, d: &DistanceMatrix, edge: Edge) -> Result<EdgeVerdict, NotAnEdge> {
    let split = splits(g, d, edge)?;
    Ok(verdict(g, d, &split))
}

fn verdict(g: &Graph, d: &DistanceMatrix, split: &EdgeWalls) -> EdgeVerdict {
    if split.eq_components.len() > 2 {
        return Err(WcCertificate::TooManyComponents { edge: split.edge, components: split.eq_components.clone() });
    }
    let [a, b, c, e] = wall_halves(split);
    for (half, variant) in [
        (&a, WallVariant::Prime),
        (&b, WallVariant::Prime),
        (&c, WallVariant::DoublePrime),
        (&e, WallVariant::DoublePrime),
    ] {
        if let Some(witness) = convexity_violation(g, d, half) {
            return Err(WcCertificate::NonconvexHalfspace { edge: split.edge, variant, half: half.clone(), witness });
        }
    }
    Ok([
        Wall { neg: a, pos: b, source_edge: split.edge, variant: WallVariant::Prime },
        Wall { neg: c, pos: e, source_edge: split.edge, variant: WallVariant::DoublePrime },
    ])
}

pub fn check_wc(g: &Graph, d: &DistanceMatrix) -> Result<WallSystem, WcCertificate> {
    check_wc_with(g, d, Parallelism::default())
}

/// Checks every edge (concurrently when `mode` allows) and reports the
/// failure of the lexicographically first failing edge. Many edges share a
/// wall, so each distinct half is tested for convexity once.
pub fn check_wc_with(g: &Graph, d: &DistanceMatrix, mode: Parallelism) -> Result<WallSystem, WcCertificate> {
    let edges: Vec<Edge> = g.edges().collect();
    let splits = exec::map_slice(mode, &edges, |&e| splits(g, d, e).expect("edge list comes from the graph"));
    let halves: Vec<Option<[VertexSet; 4]>> =
        splits.iter().map(|s| (s.eq_components.len() <= 2).then(|| wall_halves(s))).collect();

    let mut distinct: Vec<&VertexSet> = Vec::new();
    let mut slot: HashMap<&VertexSet, usize> = HashMap::new();
    for half in halves.iter().flatten().flatten() {
        slot.entry(half).or_insert_with(|| {
            distinct.push(half);
            distinct.len() - 1
        });
    }
    let violations = exec::map_slice(mode, &distinct, |h| convexity_violation(g, d, h));

    let mut walls: Vec<WeightedWall> = Vec::new();
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    for (split, h) in splits.iter().zip(&halves) {
        let Some([a, b, c, e]) = h else {
            return Err(WcCertificate::TooManyComponents { edge: split.edge, components: split.eq_components.clone() });
        };
        for (half, variant) in [
            (a, WallVariant::Prime),
            (b, WallVariant::Prime),
            (c, WallVariant::DoublePrime),
            (e, WallVariant::DoublePrime),
        ] {
            if let Some(witness) = violations[slot[half]] {
                return Err(WcCertificate::NonconvexHalfspace {
                    edge: split.edge,
                    variant,
                    half: half.clone(),
                    witness,
                });
            }
        }
        let prime = Wall { neg: a.clone(), pos: b.clone(), source_edge: split.edge, variant: WallVariant::Prime };
        let double =
            Wall { neg: c.clone(), pos: e.clone(), source_edge: split.edge, variant: WallVariant::DoublePrime };
        let coincide = prime.key() == double.key();
        for wall in [prime, double] {
            let multiplicity = if coincide { 2 } else { 1 };
            match index.get(wall.key()) {
                Some(&i) => walls[i].multiplicity = walls[i].multiplicity.max(multiplicity),
                None => {
                    index.insert(wall.key().clone(), walls.len());
                    walls.push(WeightedWall { wall, multiplicity });
                }
            }
        }
    }
    Ok(WallSystem { edges: splits, walls })
}

/// One certificate per failing edge, in edge order.
pub fn check_wc_all(g: &Graph, d: &DistanceMatrix) -> Vec<WcCertificate> {
    let edges: Vec<Edge> = g.edges().collect();
    exec::map_slice(Parallelism::default(), &edges, |&e| {
        check_wc_edge(g, d, e).expect("edge list comes from the graph").err()
    })
    .into_iter()
    .flatten()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance_matrix;
    use crate::oracle::{gen_family, Family};

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn family(f: Family) -> (Graph, DistanceMatrix) {
        let g = gen_family(f).unwrap();
        let d = distance_matrix(&g);
        (g, d)
    }

    #[test]
    fn splits_examples() {
        let (c5, d) = family(Family::Cycle(5));
        let s = splits(&c5, &d, (0, 1)).unwrap();
        assert_eq!((s.w_uv, s.w_vu, s.eq_components), (set(&[0, 4]), set(&[1, 2]), vec![set(&[3])]));

        let (k4, d) = family(Family::Complete(4));
        let s = splits(&k4, &d, (0, 1)).unwrap();
        assert_eq!((s.w_uv, s.w_vu, s.eq_components), (set(&[0]), set(&[1]), vec![set(&[2, 3])]));

        let (k23, d) = family(Family::CompleteBipartite(2, 3));
        let s = splits(&k23, &d, (0, 2)).unwrap();
        assert_eq!((s.w_uv, s.w_vu), (set(&[0, 3, 4]), set(&[1, 2])));
        assert!(s.eq_components.is_empty());

        assert_eq!(splits(&k23, &d, (0, 1)).unwrap_err(), NotAnEdge(0, 1));
    }

    #[test]
    fn k23_nonconvex() {
        let (k23, d) = family(Family::CompleteBipartite(2, 3));
        let cert = check_wc_edge(&k23, &d, (0, 2)).unwrap().unwrap_err();
        assert_eq!(
            cert,
            WcCertificate::NonconvexHalfspace {
                edge: (0, 2),
                variant: WallVariant::Prime,
                half: set(&[0, 3, 4]),
                witness: ConvexityWitness { x: 3, y: 4, z: 1 },
            }
        );
        assert!(cert.holds(&k23, &d));
        assert_eq!(check_wc(&k23, &d).unwrap_err(), cert);
    }

    #[test]
    fn c5_walls() {
        let (c5, d) = family(Family::Cycle(5));
        let [w1, w2] = check_wc_edge(&c5, &d, (0, 1)).unwrap().unwrap();
        assert_eq!((w1.neg, w1.pos), (set(&[0, 3, 4]), set(&[1, 2])));
        assert_eq!((w2.neg, w2.pos), (set(&[0, 4]), set(&[1, 2, 3])));
    }

    #[test]
    fn c4_walls_have_multiplicity_two() {
        let (c4, d) = family(Family::Cycle(4));
        let sys = check_wc(&c4, &d).unwrap();
        let got: Vec<_> = sys.walls.iter().map(|w| (w.wall.key().clone(), w.multiplicity)).collect();
        assert_eq!(got, vec![(set(&[0, 3]), 2), (set(&[0, 1]), 2)]);
        for (u, v) in c4.edges() {
            assert_eq!(sys.separation(u, v), 2);
        }
    }

    #[test]
    fn petersen_wall_system() {
        let (p, d) = family(Family::Petersen);
        let sys = check_wc(&p, &d).unwrap();
        assert_eq!(sys.walls.len(), 6);
        assert!(sys.walls.iter().all(|w| w.multiplicity == 1));
    }

    #[test]
    fn too_many_components() {
        // K_{1,3}: for edge (0,1) the two other leaves are equidistant and isolated
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = distance_matrix(&star);
        let s = splits(&star, &d, (0, 1)).unwrap();
        assert_eq!(s.eq_components, vec![]);
        // claw plus pendant paths: W= of the spine edge has three components
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let d = distance_matrix(&g);
        let s = splits(&g, &d, (0, 1)).unwrap();
        assert_eq!(s.eq_components, vec![set(&[2, 5, 6])]);
        let g =
            Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (0, 5), (1, 5)]).unwrap();
        let d = distance_matrix(&g);
        let cert = check_wc(&g, &d).unwrap_err();
        assert!(
            matches!(&cert, WcCertificate::TooManyComponents { edge: (0, 1), components } if components.len() == 4)
        );
        assert!(cert.holds(&g, &d));
    }

    #[test]
    fn exhaustive_reporting() {
        let (k23, d) = family(Family::CompleteBipartite(2, 3));
        let all = check_wc_all(&k23, &d);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|c| c.holds(&k23, &d)));
    }
}
