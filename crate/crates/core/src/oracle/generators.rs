use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, SimpleGraph};

/// Named graph families with canonical vertex numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `m`-subsets of `0..n` in colex order, adjacent when they differ in one element.
    Johnson {
        m: usize,
        n: usize,
    },
    /// Vertices `0..2^d`, adjacent when their binary forms differ in one bit.
    Hypercube(usize),
    Cycle(usize),
    /// Path on `k` vertices.
    Path(usize),
    Complete(usize),
    /// Parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// Kneser graph `K(5,2)`: 2-subsets of `0..5` in colex order, adjacent when disjoint.
    Petersen,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: &'static str, reason: String },
    #[error("unknown family `{0}`")]
    Unknown(String),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParams { family, reason: reason.into() }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Johnson { m, n } => write!(f, "johnson({m},{n})"),
            Family::Hypercube(d) => write!(f, "hypercube({d})"),
            Family::Cycle(k) => write!(f, "cycle({k})"),
            Family::Path(k) => write!(f, "path({k})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            Family::Petersen => write!(f, "petersen"),
        }
    }
}

impl Family {
    /// Parses a family name with its integer parameters, e.g. `("johnson", [2, 4])`.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family, FamilyError> {
        let arity = |k: usize, family: &'static str| {
            if params.len() == k {
                Ok(())
            } else {
                Err(invalid(family, format!("expected {k} parameter(s), got {}", params.len())))
            }
        };
        Ok(match name {
            "johnson" => {
                arity(2, "johnson")?;
                Family::Johnson { m: params[0], n: params[1] }
            }
            "hypercube" => {
                arity(1, "hypercube")?;
                Family::Hypercube(params[0])
            }
            "cycle" => {
                arity(1, "cycle")?;
                Family::Cycle(params[0])
            }
            "path" => {
                arity(1, "path")?;
                Family::Path(params[0])
            }
            "complete" => {
                arity(1, "complete")?;
                Family::Complete(params[0])
            }
            "complete_bipartite" | "complete-bipartite" => {
                arity(2, "complete_bipartite")?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "petersen" => {
                arity(0, "petersen")?;
                Family::Petersen
            }
            other => return Err(FamilyError::Unknown(other.to_string())),
        })
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    /// Accepts the [`Display`](fmt::Display) form, e.g. `johnson(2,4)` or `petersen`.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let s = s.trim();
        let (name, params) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(|| FamilyError::Unknown(s.to_string()))?;
                let params = inner
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| FamilyError::Unknown(s.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                (name, params)
            }
            None => (s, Vec::new()),
        };
        Family::from_parts(name, &params)
    }
}

pub fn gen_family(family: Family) -> Result<Graph, FamilyError> {
    let (n, edges) = match family {
        Family::Johnson { m, n } => {
            if m > n {
                return Err(invalid("johnson", format!("m = {m} exceeds n = {n}")));
            }
            if n > 63 {
                return Err(invalid("johnson", "n must be at most 63"));
            }
            let vertices = subsets_colex(m, n);
            (vertices.len(), pairs_where(&vertices, |a, b| (a ^ b).count_ones() == 2))
        }
        Family::Hypercube(d) => {
            if d > 20 {
                return Err(invalid("hypercube", "dimension must be at most 20"));
            }
            let vertices: Vec<u64> = (0..1u64 << d).collect();
            (vertices.len(), pairs_where(&vertices, |a, b| (a ^ b).count_ones() == 1))
        }
        Family::Cycle(k) => {
            if k < 3 {
                return Err(invalid("cycle", "k must be at least 3"));
            }
            (k, (0..k).map(|i| (i, (i + 1) % k)).collect())
        }
        Family::Path(k) => {
            if k < 1 {
                return Err(invalid("path", "k must be at least 1"));
            }
            (k, (1..k).map(|i| (i - 1, i)).collect())
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(invalid("complete", "n must be at least 1"));
            }
            (n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
        }
        Family::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(invalid("complete_bipartite", "both parts must be non-empty"));
            }
            (a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect())
        }
        Family::Petersen => {
            let vertices = subsets_colex(2, 5);
            (vertices.len(), pairs_where(&vertices, |a, b| a & b == 0))
        }
    };
    let g = SimpleGraph::from_edges(n, &edges).expect("generated edges are simple");
    Ok(Graph::try_from(g).expect("generated families are connected"))
}

/// `m`-subsets of `0..n` as bitmasks; colex order is increasing mask order.
pub fn subsets_colex(m: usize, n: usize) -> Vec<u64> {
    (0..1u64 << n).filter(|x| x.count_ones() as usize == m).collect()
}

fn pairs_where(vertices: &[u64], adjacent: impl Fn(u64, u64) -> bool) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if adjacent(vertices[i], vertices[j]) {
                edges.push((i, j));
            }
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_matrix, is_bipartite};

    #[test]
    fn johnson_octahedron() {
        let g = gen_family(Family::Johnson { m: 2, n: 4 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 12));
        assert!((0..6).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn petersen_shape() {
        let g = gen_family(Family::Petersen).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
        // girth 5: no triangles, no 4-cycles
        let d = distance_matrix(&g);
        for (u, v) in g.edges() {
            assert!(g.neighbors(u).iter().all(|&w| !g.adjacent(v, w)));
        }
        for u in 0..10 {
            for v in u + 1..10 {
                if d.get(u, v) == 2 {
                    let common = g.neighbors(u).iter().filter(|&&w| g.adjacent(v, w)).count();
                    assert_eq!(common, 1);
                }
            }
        }
        assert!(is_bipartite(&g).is_err());
    }

    #[test]
    fn colex() {
        assert_eq!(subsets_colex(2, 4), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }

    #[test]
    fn small_families() {
        let c4 = gen_family(Family::Cycle(4)).unwrap();
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(gen_family(Family::Hypercube(3)).unwrap().edge_count(), 12);
        assert_eq!(gen_family(Family::CompleteBipartite(2, 3)).unwrap().edge_count(), 6);
        assert_eq!(gen_family(Family::Path(1)).unwrap().n(), 1);
        assert_eq!(gen_family(Family::Johnson { m: 0, n: 3 }).unwrap().n(), 1);
    }

    #[test]
    fn invalid_params() {
        assert!(gen_family(Family::Johnson { m: 5, n: 4 }).is_err());
        assert!(gen_family(Family::Cycle(2)).is_err());
        assert!(gen_family(Family::Complete(0)).is_err());
        assert!(gen_family(Family::CompleteBipartite(0, 3)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("johnson(2,4)".parse::<Family>().unwrap(), Family::Johnson { m: 2, n: 4 });
        assert_eq!("petersen".parse::<Family>().unwrap(), Family::Petersen);
        assert_eq!(Family::from_parts("complete_bipartite", &[2, 3]).unwrap(), Family::CompleteBipartite(2, 3));
        assert!(Family::from_parts("cycle", &[]).is_err());
        assert!(matches!("nope(1)".parse::<Family>(), Err(FamilyError::Unknown(_))));
        for f in [Family::Hypercube(3), Family::CompleteBipartite(1, 2), Family::Path(4)] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
