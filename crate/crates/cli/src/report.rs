//! JSON, text and DOT rendering of results and certificates.

use johnson_embed::atom::{OrientedEdge, ThetaClasses};
use johnson_embed::embedder::{Embedding, HypercubeCertificate, HypercubeEmbedding, RejectionCertificate};
use johnson_embed::matroid::{ConditionReport, ConditionWitness};
use johnson_embed::oracle::OracleResult;
use johnson_embed::rootgraph::{BipartiteRoot, RootCertificate, RootError};
use johnson_embed::walls::{WallSystem, WallVariant, WcCertificate};
use johnson_embed::SimpleGraph;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub m: usize,
    pub ground_set_size: usize,
    pub basepoint: usize,
    pub labels: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walls: Option<Vec<WallJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallJson {
    pub neg: Vec<usize>,
    pub pos: Vec<usize>,
    pub multiplicity: u8,
    pub source_edge: [usize; 2],
    pub variant: String,
}

impl EmbeddingJson {
    pub fn new(e: &Embedding, walls: Option<&WallSystem>) -> Self {
        EmbeddingJson {
            m: e.m,
            ground_set_size: e.ground_set_size,
            basepoint: e.basepoint,
            labels: e.labels.clone(),
            walls: walls.map(walls_json),
        }
    }
}

fn variant_name(v: WallVariant) -> &'static str {
    match v {
        WallVariant::Prime => "prime",
        WallVariant::DoublePrime => "double_prime",
    }
}

pub fn walls_json(ws: &WallSystem) -> Vec<WallJson> {
    ws.walls
        .iter()
        .map(|w| WallJson {
            neg: w.wall.neg.as_slice().to_vec(),
            pos: w.wall.pos.as_slice().to_vec(),
            multiplicity: w.multiplicity,
            source_edge: [w.wall.source_edge.0, w.wall.source_edge.1],
            variant: variant_name(w.wall.variant).to_string(),
        })
        .collect()
}

fn edge_pair(e: OrientedEdge) -> [usize; 2] {
    [e.tail, e.head]
}

pub fn classes_json(classes: &[Vec<OrientedEdge>]) -> Value {
    json!(classes.iter().map(|c| c.iter().map(|&e| edge_pair(e)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn certificate(stage: &str, kind: &str, fields: Value) -> Value {
    let mut out = Map::new();
    out.insert("result".into(), json!("no"));
    out.insert("stage".into(), json!(stage));
    out.insert("kind".into(), json!(kind));
    if let Value::Object(rest) = fields {
        out.extend(rest);
    }
    Value::Object(out)
}

pub fn wc_certificate(c: &WcCertificate) -> Value {
    match c {
        WcCertificate::NonconvexHalfspace { edge, variant, half, witness } => certificate(
            "WC",
            "NONCONVEX_HALFSPACE",
            json!({
                "edge": [edge.0, edge.1],
                "variant": variant_name(*variant),
                "half": half.as_slice(),
                "witness": {"x": witness.x, "y": witness.y, "z": witness.z},
            }),
        ),
        WcCertificate::TooManyComponents { edge, components } => certificate(
            "WC",
            "TOO_MANY_COMPONENTS",
            json!({
                "edge": [edge.0, edge.1],
                "components": components.iter().map(|c| c.as_slice()).collect::<Vec<_>>(),
            }),
        ),
    }
}

/// `(kind, fields)` of a line-graph recognition failure.
fn root_failure(e: &RootError) -> (&'static str, Value) {
    match e {
        RootError::Certificate(RootCertificate::Claw { center, leaves }) => {
            ("CLAW", json!({"center": center, "leaves": leaves}))
        }
        RootError::Certificate(RootCertificate::Diamond { spine, tips }) => {
            ("DIAMOND", json!({"spine": [spine.0, spine.1], "tips": [tips.0, tips.1]}))
        }
        RootError::Certificate(RootCertificate::VertexInThreeCliques { vertex, cliques }) => {
            ("VERTEX_IN_3_CLIQUES", json!({"vertex": vertex, "cliques": cliques}))
        }
        RootError::Certificate(RootCertificate::OddCycleInRoot { cycle, edges }) => {
            ("ODD_CYCLE_IN_ROOT", json!({"cycle": cycle, "edges": edges}))
        }
        RootError::Inconsistent(x, y) => ("INCONSISTENT_ROOT", json!({"vertices": [x, y]})),
    }
}

fn with_kind(kind: &str, fields: Value) -> Value {
    let mut out = Map::new();
    out.insert("kind".into(), json!(kind));
    if let Value::Object(rest) = fields {
        out.extend(rest);
    }
    Value::Object(out)
}

pub fn rejection(c: &RejectionCertificate) -> Value {
    match c {
        RejectionCertificate::Wc(w) => wc_certificate(w),
        RejectionCertificate::Agc { basepoint, classes, certificate: cert } => {
            let (kind, mut fields) = root_failure(&RootError::Certificate(cert.clone()));
            fields["basepoint"] = json!(basepoint);
            fields["classes"] = classes_json(classes);
            certificate("AGC", kind, fields)
        }
        RejectionCertificate::Internal(message) => certificate("INTERNAL", "INTERNAL", json!({"message": message})),
    }
}

pub fn condition_name(r: &ConditionReport) -> &'static str {
    match r.condition {
        johnson_embed::matroid::Condition::Interval => "IC",
        johnson_embed::matroid::Condition::Positioning => "PC",
        johnson_embed::matroid::Condition::Link => "LC",
    }
}

pub fn condition_witness(w: &ConditionWitness) -> Value {
    match w {
        ConditionWitness::Interval { u, v, interval } => {
            with_kind("INTERVAL", json!({"u": u, "v": v, "interval": interval.as_slice()}))
        }
        ConditionWitness::Square { basepoint, square, sums } => {
            with_kind("SQUARE", json!({"basepoint": basepoint, "square": square, "sums": [sums.0, sums.1]}))
        }
        ConditionWitness::Link { vertex, neighborhood, failure } => {
            let (kind, fields) = root_failure(failure);
            with_kind(
                "LINK",
                json!({"vertex": vertex, "neighborhood": neighborhood, "failure": with_kind(kind, fields)}),
            )
        }
    }
}

pub fn condition_report(r: &ConditionReport) -> Value {
    let mut out = json!({"condition": condition_name(r), "pass": r.pass()});
    if let Some(w) = &r.witness {
        out["witness"] = condition_witness(w);
    }
    out
}

pub fn hypercube(h: &Result<HypercubeEmbedding, HypercubeCertificate>) -> Value {
    match h {
        Ok(h) => json!({
            "dimension": h.dimension,
            "labels": h.labels,
            "halfspaces": h.halfspaces.iter().map(|(n, p)| json!({"neg": n.as_slice(), "pos": p.as_slice()})).collect::<Vec<_>>(),
        }),
        Err(HypercubeCertificate::NotBipartite(c)) => {
            certificate("PARTIAL_CUBE", "ODD_CYCLE", json!({"cycle": c.cycle}))
        }
        Err(HypercubeCertificate::NonconvexHalfspace { edge, half, witness }) => certificate(
            "PARTIAL_CUBE",
            "NONCONVEX_HALFSPACE",
            json!({
                "edge": [edge.0, edge.1],
                "half": half.as_slice(),
                "witness": {"x": witness.x, "y": witness.y, "z": witness.z},
            }),
        ),
        Err(HypercubeCertificate::Internal(v)) => certificate(
            "INTERNAL",
            "INTERNAL",
            json!({"message": format!("labels of {} and {} differ in {}, expected {}", v.x, v.y, v.sym_diff, v.expected)}),
        ),
    }
}

pub fn oracle(r: &OracleResult) -> Value {
    json!({
        "found": r.found,
        "m": r.m,
        "n": r.n,
        "labels": r.labels,
        "nodes_explored": r.nodes_explored,
    })
}

/// Compact `key: value` lines for every field except the headline ones.
pub fn fields_text(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, val) in map {
            if matches!(k.as_str(), "result" | "stage" | "kind" | "condition" | "pass") {
                continue;
            }
            out.push_str(&format!("  {k}: {val}\n"));
        }
    }
    out
}

pub fn rejection_text(v: &Value) -> String {
    format!("NO at {}: {}\n{}", v["stage"].as_str().unwrap_or("?"), v["kind"].as_str().unwrap_or("?"), fields_text(v))
}

pub fn labels_text(labels: &[Vec<usize>]) -> String {
    labels.iter().map(|l| l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n").collect()
}

fn class_text(class: &[OrientedEdge]) -> String {
    class.iter().map(|e| format!("{}->{}", e.tail, e.head)).collect::<Vec<_>>().join(" ")
}

/// Atom graph as an edge list, with one comment line per class.
pub fn atom_edge_list(sigma: &SimpleGraph, classes: &ThetaClasses) -> String {
    let mut out = format!("# atom graph at basepoint {}\n", classes.basepoint);
    for (i, c) in classes.classes.iter().enumerate() {
        out.push_str(&format!("# class {i}: {}\n", class_text(c)));
    }
    out.push_str(&johnson_embed::graph::write_edge_list(sigma));
    out
}

pub fn atom_dot(sigma: &SimpleGraph, classes: &ThetaClasses) -> String {
    let mut out = String::from("graph atoms {\n");
    for (i, c) in classes.classes.iter().enumerate() {
        out.push_str(&format!("  {i} [label=\"{i}: {}\"];\n", class_text(c)));
    }
    for (u, v) in sigma.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Root edge list; root edge `k` realises class `k`.
pub fn root_edge_list(root: &BipartiteRoot) -> String {
    let mut out = String::new();
    out.push_str(&format!("# B: {:?}\n# A: {:?}\n", root.b_side, root.a_side));
    out.push_str(&format!("{}\n", root.vertex_count));
    for (k, &(i, j)) in root.edges().iter().enumerate() {
        out.push_str(&format!("{i} {j} # class {k}\n"));
    }
    out
}

pub fn root_dot(root: &BipartiteRoot) -> String {
    let mut out = String::from("graph root {\n");
    for &v in &root.b_side {
        out.push_str(&format!("  r{v} [label=\"{v}\", side=B, shape=box];\n"));
    }
    for &v in &root.a_side {
        out.push_str(&format!("  r{v} [label=\"{v}\", side=A];\n"));
    }
    for (k, &(i, j)) in root.edges().iter().enumerate() {
        out.push_str(&format!("  r{i} -- r{j} [label=\"{k}\"];\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use johnson_embed::walls::check_wc;
    use johnson_embed::{distance_matrix, gen_family, Family};

    #[test]
    fn k23_certificate_shape() {
        let g = gen_family(Family::CompleteBipartite(2, 3)).unwrap();
        let c = check_wc(&g, &distance_matrix(&g)).unwrap_err();
        let v = wc_certificate(&c);
        assert_eq!(v["result"], "no");
        assert_eq!(v["stage"], "WC");
        assert_eq!(v["kind"], "NONCONVEX_HALFSPACE");
        assert_eq!(v["edge"], json!([0, 2]));
        assert_eq!(v["half"], json!([0, 3, 4]));
        assert_eq!(v["witness"], json!({"x": 3, "y": 4, "z": 1}));
    }

    #[test]
    fn embedding_round_trip() {
        let e = EmbeddingJson { m: 1, ground_set_size: 2, basepoint: 0, labels: vec![vec![0], vec![1]], walls: None };
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(text, r#"{"m":1,"ground_set_size":2,"basepoint":0,"labels":[[0],[1]]}"#);
        assert_eq!(serde_json::from_str::<EmbeddingJson>(&text).unwrap(), e);
    }

    #[test]
    fn dot_uses_class_indices() {
        let g = gen_family(Family::Cycle(5)).unwrap();
        let d = distance_matrix(&g);
        let classes = johnson_embed::atom::theta1_classes(&g, &d, 0, false).unwrap();
        let sigma = johnson_embed::atom::atom_graph(&d, &classes, false).unwrap().graph;
        let dot = atom_dot(&sigma, &classes);
        assert!(dot.starts_with("graph atoms {"));
        assert!(dot.contains("  0 -- 3;"));
        assert!(dot.contains("  0 [label=\"0: 0->1\"];"));
    }
}
