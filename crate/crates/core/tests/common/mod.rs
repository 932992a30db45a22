#![allow(dead_code)]

use johnson_embed::{gen_family, random_connected_graph, Family, Graph};

pub const RANDOM_GRAPHS: u64 = 200;

/// Small members of every generated family.
pub fn family_corpus() -> Vec<(String, Graph)> {
    let mut families = Vec::new();
    for (m, n) in [(1, 3), (1, 4), (2, 4), (2, 5), (3, 6)] {
        families.push(Family::Johnson { m, n });
    }
    families.extend((1..=4).map(Family::Hypercube));
    families.extend((3..=8).map(Family::Cycle));
    families.extend((2..=8).map(Family::Path));
    families.extend((2..=6).map(Family::Complete));
    for a in 1..=3 {
        for b in 1..=3 {
            families.push(Family::CompleteBipartite(a, b));
        }
    }
    families.push(Family::Petersen);
    families.into_iter().map(|f| (f.to_string(), gen_family(f).unwrap())).collect()
}

/// Parameters of the `i`-th seeded random graph: 2 to 8 vertices, edge
/// probability between 0.25 and 0.75.
pub fn random_params(i: u64) -> (usize, f64) {
    (2 + (i % 7) as usize, 0.25 + 0.125 * ((i / 7) % 5) as f64)
}

pub fn random_corpus() -> Vec<(String, Graph)> {
    (0..RANDOM_GRAPHS)
        .map(|seed| {
            let (n, p) = random_params(seed);
            (format!("random({n},{p},{seed})"), random_connected_graph(n, p, seed).unwrap())
        })
        .collect()
}

pub fn corpus() -> Vec<(String, Graph)> {
    let mut all = family_corpus();
    all.extend(random_corpus());
    all
}

pub mod strategies {
    use johnson_embed::{random_connected_graph, Graph, SimpleGraph};
    use proptest::prelude::*;

    /// Seeded connected graphs on `1..=max_n` vertices.
    pub fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, 0.2f64..0.8, any::<u64>()).prop_map(|(n, p, seed)| random_connected_graph(n, p, seed).unwrap())
    }

    /// Arbitrary simple graphs, possibly disconnected, on `1..=max_n` vertices.
    pub fn simple(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                SimpleGraph::from_edges(n, &edges).unwrap()
            })
        })
    }

    /// Bipartite graphs with parts `0..a` and `a..a+b`.
    pub fn bipartite(max_part: usize) -> impl Strategy<Value = SimpleGraph> {
        (1..=max_part, 1..=max_part).prop_flat_map(|(a, b)| {
            proptest::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
                let pairs = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
                let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                SimpleGraph::from_edges(a + b, &edges).unwrap()
            })
        })
    }
}
