//! Isometric embeddings of graphs into Johnson graphs.
//!
//! A connected graph embeds isometrically into some Johnson graph `J(m, n)`
//! exactly when every edge yields convex walls ([`walls::check_wc`]) and the
//! atom graph built from a basepoint is the line graph of a bipartite graph.
//! [`embedder::build_embedding`] decides this and returns either verified
//! labels or a certificate that can be re-checked against the input.
//!
//! ```
//! use johnson_embed::{build_embedding, distance_matrix, gen_family, EmbedOptions, Family};
//!
//! let g = gen_family(Family::Petersen).unwrap();
//! let d = distance_matrix(&g);
//! let e = build_embedding(&g, &d, &EmbedOptions::default()).unwrap();
//! assert_eq!((e.m, e.ground_set_size), (3, 6));
//! ```

pub mod atom;
pub mod embedder;
pub mod exec;
pub mod graph;
pub mod matroid;
pub mod oracle;
pub mod rootgraph;
pub mod walls;

pub use embedder::{
    build_embedding, embed_hypercube, run_pipeline, verify_embedding, EmbedOptions, Embedding, RejectionCertificate,
    Verification,
};
pub use exec::Parallelism;
pub use graph::{distance_matrix, parse_graph, DistanceMatrix, Graph, GraphError, SimpleGraph, Vertex, VertexSet};
pub use oracle::{gen_family, oracle_decide, random_connected_graph, Family};
pub use walls::{check_wc, WcCertificate};
