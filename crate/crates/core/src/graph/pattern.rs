use itertools::Itertools;

use super::{SimpleGraph, VertexSet};

/// The three interval shapes allowed in basis graphs of matroids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// The 4-cycle.
    Square,
    /// The 4-wheel: a 4-cycle plus a hub adjacent to all of it.
    Pyramid,
    /// `K_{2,2,2}`.
    Octahedron,
}

impl Pattern {
    pub const ALL: [Pattern; 3] = [Pattern::Square, Pattern::Pyramid, Pattern::Octahedron];

    pub fn order(self) -> usize {
        match self {
            Pattern::Square => 4,
            Pattern::Pyramid => 5,
            Pattern::Octahedron => 6,
        }
    }

    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Pattern::Square => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            Pattern::Pyramid => &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
            // antipodal pairs 0-3, 1-4, 2-5
            Pattern::Octahedron => {
                &[(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
            }
        }
    }

    pub fn graph(self) -> SimpleGraph {
        SimpleGraph::from_edges(self.order(), self.edges()).expect("pattern edge lists are simple")
    }
}

/// Exhaustive isomorphism test between `g[s]` and `pattern`.
pub fn induced_is_pattern(g: &SimpleGraph, s: &VertexSet, pattern: Pattern) -> bool {
    let k = pattern.order();
    if s.len() != k {
        return false;
    }
    let sub = g.induced(s.as_slice());
    if sub.edge_count() != pattern.edges().len() {
        return false;
    }
    let target = pattern.graph();
    (0..k)
        .permutations(k)
        .any(|perm| (0..k).all(|i| (i + 1..k).all(|j| sub.adjacent(perm[i], perm[j]) == target.adjacent(i, j))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{gen_family, Family};

    fn all(n: usize) -> VertexSet {
        (0..n).collect()
    }

    #[test]
    fn fixed_patterns() {
        let c4 = gen_family(Family::Cycle(4)).unwrap();
        assert!(induced_is_pattern(&c4, &all(4), Pattern::Square));
        assert!(!induced_is_pattern(&c4, &all(4), Pattern::Pyramid));

        let oct = gen_family(Family::Johnson { m: 2, n: 4 }).unwrap();
        assert!(induced_is_pattern(&oct, &all(6), Pattern::Octahedron));
        // octahedron minus a vertex is the pyramid
        assert!(induced_is_pattern(&oct, &(1..6).collect(), Pattern::Pyramid));

        let c6 = gen_family(Family::Cycle(6)).unwrap();
        assert!(!induced_is_pattern(&c6, &(0..3).collect(), Pattern::Square));
    }

    #[test]
    fn patterns_are_what_they_claim() {
        for p in Pattern::ALL {
            let g = p.graph();
            let degrees: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
            match p {
                Pattern::Square => assert_eq!(degrees, vec![2; 4]),
                Pattern::Pyramid => assert_eq!(degrees, vec![3, 3, 3, 3, 4]),
                Pattern::Octahedron => assert_eq!(degrees, vec![4; 6]),
            }
        }
    }
}
