use std::collections::VecDeque;
use std::fmt;

use super::{DistanceMatrix, SimpleGraph, Vertex};

/// Strictly increasing sequence of vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    /// Vertices `v` with `mask[v]` set.
    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect())
    }

    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        VertexSet(vertices)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&a), Some(&b)) if a == b => {
                    out.push(a);
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a < b => {
                    out.push(a);
                    i += 1;
                }
                (Some(&a), None) => {
                    out.push(a);
                    i += 1;
                }
                (_, Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        VertexSet(out)
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        let mask = self.mask(n);
        VertexSet((0..n).filter(|&v| !mask[v]).collect())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

/// `z` lies outside the tested set on a shortest path between `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConvexityWitness {
    pub x: Vertex,
    pub y: Vertex,
    pub z: Vertex,
}

impl ConvexityWitness {
    /// Re-checks the witness against `d` and the set it refutes.
    pub fn holds(&self, d: &DistanceMatrix, set: &VertexSet) -> bool {
        set.contains(self.x)
            && set.contains(self.y)
            && !set.contains(self.z)
            && d.get(self.x, self.z) + d.get(self.z, self.y) == d.get(self.x, self.y)
    }
}

/// `I(u, v)`: every vertex on some shortest `u`-`v` path.
pub fn interval(d: &DistanceMatrix, u: Vertex, v: Vertex) -> VertexSet {
    let (ru, rv, duv) = (d.row(u), d.row(v), d.get(u, v));
    VertexSet((0..d.n()).filter(|&x| ru[x] + rv[x] == duv).collect())
}

/// Convexity test in `O(|s| * |E|)`.
///
/// From a source `x`, the interval `I(x, y)` is the set of ancestors of `y`
/// in the shortest-path DAG rooted at `x`. So `s` is convex iff no `y` in
/// `s` has a DAG predecessor outside `s`, for any source `x` in `s`.
pub fn is_convex(g: &SimpleGraph, d: &DistanceMatrix, s: &VertexSet) -> bool {
    let inside = s.mask(g.n());
    s.iter().all(|x| {
        let rx = d.row(x);
        s.iter().all(|y| g.neighbors(y).iter().all(|&z| inside[z] || rx[z] + 1 != rx[y]))
    })
}

/// Lexicographically smallest `(x, y, z)` with `x < y` in `s`, `z` outside `s`
/// and `z` in `I(x, y)`; `None` when `s` is convex.
pub fn convexity_violation(g: &SimpleGraph, d: &DistanceMatrix, s: &VertexSet) -> Option<ConvexityWitness> {
    if is_convex(g, d, s) {
        return None;
    }
    let inside = s.mask(g.n());
    let ys = s.as_slice();
    for (i, &x) in ys.iter().enumerate() {
        for &y in &ys[i + 1..] {
            let dxy = d.get(x, y);
            if let Some(z) = (0..g.n()).find(|&z| !inside[z] && d.get(x, z) + d.get(z, y) == dxy) {
                return Some(ConvexityWitness { x, y, z });
            }
        }
    }
    unreachable!("fast convexity test and triple loop disagree")
}

/// Connected components of the subgraph induced by `s`.
pub fn induced_components(g: &SimpleGraph, s: &VertexSet) -> Vec<VertexSet> {
    components_of(g, s.as_slice()).into_iter().map(VertexSet).collect()
}

pub(super) fn components_of(g: &SimpleGraph, vertices: &[Vertex]) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut allowed = vec![false; n];
    for &v in vertices {
        allowed[v] = true;
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for &start in vertices {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if allowed[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_by_key(|c| c[0]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance_matrix;
    use crate::oracle::{gen_family, Family};

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn intervals() {
        let c5 = gen_family(Family::Cycle(5)).unwrap();
        let d5 = distance_matrix(&c5);
        assert_eq!(interval(&d5, 0, 2), set(&[0, 1, 2]));
        assert_eq!(interval(&d5, 3, 3), set(&[3]));
        let c4 = gen_family(Family::Cycle(4)).unwrap();
        assert_eq!(interval(&distance_matrix(&c4), 0, 2), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn convexity() {
        let c5 = gen_family(Family::Cycle(5)).unwrap();
        let d5 = distance_matrix(&c5);
        assert!(is_convex(&c5, &d5, &set(&[0, 1, 2])));
        assert_eq!(convexity_violation(&c5, &d5, &set(&[0, 1, 2])), None);
        assert!(is_convex(&c5, &d5, &set(&[4])));

        let c6 = gen_family(Family::Cycle(6)).unwrap();
        let d6 = distance_matrix(&c6);
        let s = set(&[0, 3]);
        let w = convexity_violation(&c6, &d6, &s).unwrap();
        assert_eq!(w, ConvexityWitness { x: 0, y: 3, z: 1 });
        assert!(w.holds(&d6, &s));
    }

    #[test]
    fn components() {
        let c5 = gen_family(Family::Cycle(5)).unwrap();
        assert_eq!(induced_components(&c5, &set(&[3])), vec![set(&[3])]);
        assert_eq!(induced_components(&c5, &set(&[1, 2, 4])), vec![set(&[1, 2]), set(&[4])]);
        assert!(induced_components(&c5, &VertexSet::new()).is_empty());
        // 4 and 0 are adjacent, so ordering is by smallest member
        assert_eq!(induced_components(&c5, &set(&[0, 2, 4])), vec![set(&[0, 4]), set(&[2])]);
    }

    #[test]
    fn set_algebra() {
        let a = set(&[1, 3, 5]);
        let b = set(&[0, 3, 6]);
        assert_eq!(a.union(&b), set(&[0, 1, 3, 5, 6]));
        assert_eq!(a.complement(7), set(&[0, 2, 4, 6]));
        assert_eq!(VertexSet::from_mask(&a.mask(7)), a);
    }
}
