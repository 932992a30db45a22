//! Edge-list text format.
//!
//! ```text
//! # comment
//! 5
//! 0 1
//! 1 2
//! ```
//!
//! The first significant line holds the vertex count `n`; every following
//! line holds one edge `u v` with `0 <= u, v < n`. Text after `#` is ignored.

use std::fmt::Write;

use super::{Graph, GraphError, SimpleGraph};

pub fn parse_graph(text: &[u8]) -> Result<Graph, GraphError> {
    let text = std::str::from_utf8(text).map_err(|e| {
        let line = 1 + text[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count();
        GraphError::Syntax { line, message: "invalid UTF-8".into() }
    })?;

    let mut graph: Option<SimpleGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                let [count] = tokens[..] else {
                    return Err(syntax(line, "expected the vertex count on its own line"));
                };
                let n = parse_int(count, line)?;
                graph = Some(SimpleGraph::empty(n));
            }
            Some(g) => {
                let [a, b] = tokens[..] else {
                    return Err(syntax(line, "expected an edge `u v`"));
                };
                g.try_add_edge(parse_int(a, line)?, parse_int(b, line)?, line)?;
            }
        }
    }

    let mut g = graph.ok_or(GraphError::Empty)?;
    g.finish();
    Graph::try_from(g)
}

/// Serializes a graph in the format accepted by [`parse_graph`].
pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

fn parse_int(token: &str, line: usize) -> Result<usize, GraphError> {
    token.parse().map_err(|_| syntax(line, &format!("`{token}` is not a non-negative integer")))
}

fn syntax(line: usize, message: &str) -> GraphError {
    GraphError::Syntax { line, message: message.to_string() }
}
