//! Text formats: JSON `{"n": .., "edges": [[u, v], ..]}`, DIMACS `p edge` / `e u v`
//! (1-indexed), and Graphviz DOT output.

use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let mut g = Graph::new(j.n);
        for [u, v] in j.edges {
            g.try_add_edge(u, v).map_err(|e| Error::Parse(format!("edge [{u},{v}]: {e}")))?;
        }
        match j.labels {
            Some(l) if l.len() != j.n => Err(Error::Parse(format!("{} labels for {} vertices", l.len(), j.n))),
            Some(l) => Ok(g.with_labels(l)),
            None => Ok(g),
        }
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::try_from(j)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parse DIMACS text. Lines starting with `c` and blank lines are skipped.
pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen = 0;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let mut tok = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.ok_or_else(|| Error::Parse(format!("line {lineno}: missing field")))?
                .parse()
                .map_err(|_| Error::Parse(format!("line {lineno}: bad integer")))
        };
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::Parse(format!("line {lineno}: second header")));
                }
                if tok.next() != Some("edge") {
                    return Err(Error::Parse(format!("line {lineno}: expected 'p edge <n> <m>'")));
                }
                let n = parse(tok.next())?;
                let m = parse(tok.next())?;
                graph = Some((Graph::new(n), m));
            }
            Some("e") => {
                let Some((g, _)) = graph.as_mut() else {
                    return Err(Error::Parse(format!("line {lineno}: edge before header")));
                };
                let u = parse(tok.next())?;
                let v = parse(tok.next())?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse(format!("line {lineno}: vertices are 1-indexed")));
                }
                g.try_add_edge(u - 1, v - 1)
                    .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?;
                seen += 1;
            }
            Some(other) => return Err(Error::Parse(format!("line {lineno}: unknown record '{other}'"))),
        }
    }
    let (g, m) = graph.ok_or_else(|| Error::Parse("missing 'p edge' header".into()))?;
    if seen != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

/// Graphviz DOT; vertex labels (e.g. grid coordinates) are emitted when present.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match g.label(v) {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
