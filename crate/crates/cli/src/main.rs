mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use johnson_embed::atom::{atom_graph, theta1_classes};
use johnson_embed::embedder::{embed_hypercube, run_pipeline, verify_embedding, Verification};
use johnson_embed::graph::write_edge_list;
use johnson_embed::matroid::{check_ic, check_lc, check_pc, is_basis_graph};
use johnson_embed::oracle::{oracle_decide, Family};
use johnson_embed::rootgraph::bipartite_root;
use johnson_embed::walls::{check_wc, check_wc_all};
use johnson_embed::{
    distance_matrix, gen_family, parse_graph, DistanceMatrix, EmbedOptions, Graph, RejectionCertificate,
};
use serde_json::{json, Value};

use crate::report::EmbeddingJson;

#[derive(Parser)]
#[command(name = "jembed", version, about = "Isometric embeddings of graphs into Johnson graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide embeddability; print labels or a rejection certificate
    Embed {
        graph: PathBuf,
        #[arg(short, long, default_value_t = 0)]
        basepoint: usize,
        #[arg(long)]
        json: bool,
        /// Re-verify class and atom graph relations over all edge pairs
        #[arg(long)]
        paranoid: bool,
        /// Also list the distinct walls
        #[arg(long)]
        walls: bool,
    },
    /// Check a single condition
    Check {
        condition: Condition,
        graph: PathBuf,
        #[arg(short, long, default_value_t = 0)]
        basepoint: usize,
        #[arg(long)]
        json: bool,
        /// Report every failing edge instead of the first (wc)
        #[arg(long)]
        all: bool,
        /// Use all 4-cycles, not only induced ones (pc)
        #[arg(long)]
        all_cycles: bool,
    },
    /// Print the atom graph as an edge list
    AtomGraph {
        graph: PathBuf,
        #[arg(short, long, default_value_t = 0)]
        basepoint: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Print the bipartite root of the atom graph
    RootGraph {
        graph: PathBuf,
        #[arg(short, long, default_value_t = 0)]
        basepoint: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Generate a named graph, e.g. `gen johnson 2 4`
    Gen {
        /// johnson, hypercube, cycle, path, complete, complete_bipartite or petersen
        family: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive search over J(m, n) for n up to the bound
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_ground: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check that a labels file is an isometric embedding
    Verify {
        graph: PathBuf,
        labels: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Recognise basis graphs of matroids
    BasisGraph {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Recognise partial cubes and print hypercube labels
    PartialCube {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Condition {
    Wc,
    Agc,
    Ic,
    Pc,
    Lc,
}

#[derive(Debug, PartialEq, Eq)]
enum Verdict {
    Accept,
    Reject,
}

impl Verdict {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Accept
        } else {
            Verdict::Reject
        }
    }
}

fn load(path: &Path) -> Result<(Graph, DistanceMatrix)> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let g = parse_graph(&bytes).with_context(|| format!("invalid graph file {}", path.display()))?;
    let d = distance_matrix(&g);
    Ok((g, d))
}

fn check_basepoint(g: &Graph, b: usize) -> Result<()> {
    ensure!(b < g.n(), "basepoint {b} out of range for a graph with {} vertices", g.n());
    Ok(())
}

fn emit(json: bool, value: &Value, text: impl FnOnce() -> String) {
    if json {
        println!("{value}");
    } else {
        print!("{}", text());
    }
}

fn embed(path: &Path, basepoint: usize, json: bool, paranoid: bool, walls: bool) -> Result<Verdict> {
    let (g, d) = load(path)?;
    check_basepoint(&g, basepoint)?;
    let options = EmbedOptions { basepoint, paranoid, ..Default::default() };
    match run_pipeline(&g, &d, &options) {
        Ok(a) => {
            let out = EmbeddingJson::new(&a.embedding, walls.then_some(&a.walls));
            emit(json, &serde_json::to_value(&out)?, || {
                let mut s = format!(
                    "YES: J({},{}) basepoint {}\n{}",
                    out.m,
                    out.ground_set_size,
                    out.basepoint,
                    report::labels_text(&out.labels)
                );
                for w in out.walls.iter().flatten() {
                    s.push_str(&format!("wall {:?} | {:?} x{}\n", w.neg, w.pos, w.multiplicity));
                }
                s
            });
            Ok(Verdict::Accept)
        }
        Err(c) => {
            let v = report::rejection(&c);
            emit(json, &v, || report::rejection_text(&v));
            Ok(Verdict::Reject)
        }
    }
}

fn check(
    condition: Condition,
    path: &Path,
    basepoint: usize,
    json: bool,
    all: bool,
    all_cycles: bool,
) -> Result<Verdict> {
    let (g, d) = load(path)?;
    match condition {
        Condition::Wc if all => {
            let certs: Vec<Value> = check_wc_all(&g, &d).iter().map(report::wc_certificate).collect();
            let pass = certs.is_empty();
            let v = json!({"condition": "WC", "pass": pass, "certificates": certs});
            emit(json, &v, || {
                let mut s = format!("{} WC: {} failing edge(s)\n", if pass { "PASS" } else { "FAIL" }, certs.len());
                for c in &certs {
                    s.push_str(&report::rejection_text(c));
                }
                s
            });
            Ok(Verdict::from_pass(pass))
        }
        Condition::Wc => match check_wc(&g, &d) {
            Ok(ws) => {
                let walls = report::walls_json(&ws);
                let v = json!({"condition": "WC", "pass": true, "walls": walls});
                emit(json, &v, || {
                    let mut s = format!("PASS WC: {} walls\n", walls.len());
                    for w in &walls {
                        s.push_str(&format!("  {:?} | {:?} x{}\n", w.neg, w.pos, w.multiplicity));
                    }
                    s
                });
                Ok(Verdict::Accept)
            }
            Err(c) => {
                let v = report::wc_certificate(&c);
                emit(json, &v, || format!("FAIL WC\n{}", report::rejection_text(&v)));
                Ok(Verdict::Reject)
            }
        },
        Condition::Agc => {
            check_basepoint(&g, basepoint)?;
            let outcome = run_pipeline(&g, &d, &EmbedOptions::at(basepoint));
            let (wc, agc) = match &outcome {
                Ok(_) => (json!({"pass": true}), json!({"pass": true})),
                Err(c @ RejectionCertificate::Wc(_)) => (report::rejection(c), Value::Null),
                Err(c) => (json!({"pass": true}), report::rejection(c)),
            };
            let pass = outcome.is_ok();
            let v = json!({"condition": "AGC", "pass": pass, "basepoint": basepoint, "wc": wc, "agc": agc});
            emit(json, &v, || match &outcome {
                Ok(a) => format!(
                    "PASS WC\nPASS AGC: atom graph has {} vertices, root sides |B| = {}, |A| = {}\n",
                    a.atom.graph.n(),
                    a.root.b_side.len(),
                    a.root.a_side.len()
                ),
                Err(RejectionCertificate::Wc(_)) => {
                    format!("FAIL WC\n{}AGC not checked\n", report::rejection_text(&wc))
                }
                Err(_) => format!("PASS WC\nFAIL AGC\n{}", report::rejection_text(&agc)),
            });
            Ok(Verdict::from_pass(pass))
        }
        Condition::Ic | Condition::Pc | Condition::Lc => {
            let r = match condition {
                Condition::Ic => check_ic(&g, &d),
                Condition::Pc => check_pc(&g, &d, !all_cycles),
                _ => check_lc(&g),
            };
            let v = report::condition_report(&r);
            emit(json, &v, || {
                let head = format!("{} {}\n", if r.pass() { "PASS" } else { "FAIL" }, report::condition_name(&r));
                match &r.witness {
                    Some(w) => head + &report::fields_text(&report::condition_witness(w)),
                    None => head,
                }
            });
            Ok(Verdict::from_pass(r.pass()))
        }
    }
}

fn atoms_or_root(path: &Path, basepoint: usize, dot: bool, root: bool) -> Result<Verdict> {
    let (g, d) = load(path)?;
    check_basepoint(&g, basepoint)?;
    if let Err(c) = check_wc(&g, &d) {
        let v = report::wc_certificate(&c);
        eprint!("{}", report::rejection_text(&v));
        return Ok(Verdict::Reject);
    }
    let classes = theta1_classes(&g, &d, basepoint, false)?;
    let sigma = atom_graph(&d, &classes, false)?.graph;
    if !root {
        print!("{}", if dot { report::atom_dot(&sigma, &classes) } else { report::atom_edge_list(&sigma, &classes) });
        return Ok(Verdict::Accept);
    }
    match bipartite_root(&sigma) {
        Ok(r) => {
            print!("{}", if dot { report::root_dot(&r) } else { report::root_edge_list(&r) });
            Ok(Verdict::Accept)
        }
        Err(e) => {
            let c = match e {
                johnson_embed::rootgraph::RootError::Certificate(certificate) => {
                    RejectionCertificate::Agc { basepoint, classes: classes.classes.clone(), certificate }
                }
                other => RejectionCertificate::Internal(other.to_string()),
            };
            eprint!("{}", report::rejection_text(&report::rejection(&c)));
            Ok(Verdict::Reject)
        }
    }
}

fn gen(family: &str, params: &[usize], output: Option<&Path>) -> Result<Verdict> {
    let f = Family::from_parts(family, params)?;
    let text = write_edge_list(gen_family(f)?.as_simple());
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(Verdict::Accept)
}

fn oracle(path: &Path, max_ground: usize, json: bool) -> Result<Verdict> {
    let (g, d) = load(path)?;
    let r = oracle_decide(&g, &d, max_ground);
    emit(json, &report::oracle(&r), || match &r.labels {
        Some(labels) => format!("found J({},{})\n{}", r.m, r.n, report::labels_text(labels)),
        None => format!("not found ≤ {}\n", r.n),
    });
    Ok(Verdict::from_pass(r.found))
}

/// One line per vertex, whitespace-separated integers. Lines starting with
/// `#` are skipped; empty lines are empty labels.
fn parse_labels(text: &str) -> Result<Vec<Vec<i64>>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            l.split_whitespace()
                .map(|t| t.parse::<i64>().with_context(|| format!("line {}: `{t}` is not an integer", i + 1)))
                .collect()
        })
        .collect()
}

fn verify(path: &Path, labels: &Path, json: bool) -> Result<Verdict> {
    let (_, d) = load(path)?;
    let text = fs::read_to_string(labels).with_context(|| format!("cannot read {}", labels.display()))?;
    let labels = parse_labels(&text)?;
    match verify_embedding(&d, &labels)? {
        Verification::Isometric => {
            emit(json, &json!({"isometric": true}), || "isometric\n".into());
            Ok(Verdict::Accept)
        }
        Verification::Violation(v) => {
            let value = json!({"isometric": false, "x": v.x, "y": v.y, "sym_diff": v.sym_diff, "expected": v.expected});
            emit(json, &value, || {
                format!(
                    "not isometric: |X △ Y| = {} for vertices {} and {}, expected {}\n",
                    v.sym_diff, v.x, v.y, v.expected
                )
            });
            Ok(Verdict::Reject)
        }
    }
}

fn basis_graph(path: &Path, json: bool) -> Result<Verdict> {
    let (g, d) = load(path)?;
    let r = is_basis_graph(&g, &d);
    let wc = match &r.wc {
        Ok(_) => json!({"pass": true}),
        Err(c) => report::wc_certificate(c),
    };
    let ic = report::condition_report(&r.ic);
    let v = json!({"basis_graph": r.is_basis_graph(), "wc": wc, "ic": ic});
    emit(json, &v, || {
        let mut s = format!("{}\n", if r.is_basis_graph() { "basis graph" } else { "not a basis graph" });
        if r.wc.is_err() {
            s.push_str(&format!("FAIL WC\n{}", report::rejection_text(&wc)));
        }
        if !r.ic.pass() {
            s.push_str(&format!("FAIL IC\n{}", report::fields_text(&ic["witness"])));
        }
        s
    });
    Ok(Verdict::from_pass(r.is_basis_graph()))
}

fn partial_cube(path: &Path, json: bool) -> Result<Verdict> {
    let (g, d) = load(path)?;
    let h = embed_hypercube(&g, &d);
    let v = report::hypercube(&h);
    emit(json, &v, || match &h {
        Ok(h) => format!("partial cube of dimension {}\n{}", h.dimension, report::labels_text(&h.labels)),
        Err(_) => report::rejection_text(&v),
    });
    Ok(Verdict::from_pass(h.is_ok()))
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.command {
        Command::Embed { graph, basepoint, json, paranoid, walls } => embed(&graph, basepoint, json, paranoid, walls),
        Command::Check { condition, graph, basepoint, json, all, all_cycles } => {
            check(condition, &graph, basepoint, json, all, all_cycles)
        }
        Command::AtomGraph { graph, basepoint, dot } => atoms_or_root(&graph, basepoint, dot, false),
        Command::RootGraph { graph, basepoint, dot } => atoms_or_root(&graph, basepoint, dot, true),
        Command::Gen { family, params, output } => gen(&family, &params, output.as_deref()),
        Command::Oracle { graph, max_ground, json } => oracle(&graph, max_ground, json),
        Command::Verify { graph, labels, json } => verify(&graph, &labels, json),
        Command::BasisGraph { graph, json } => basis_graph(&graph, json),
        Command::PartialCube { graph, json } => partial_cube(&graph, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Verdict::Accept) => ExitCode::SUCCESS,
        Ok(Verdict::Reject) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
