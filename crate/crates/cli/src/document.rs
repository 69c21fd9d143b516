// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Graph documents: the plain edge list and the structured JSON form.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use chordless_core::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: u32,
    pub edges: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// `n m` on the first line, then one `u v` pair per line.
    #[default]
    Edgelist,
    /// A single JSON object with `n`, `edges` and an optional `name`.
    Structured,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Edgelist => "edgelist",
            Format::Structured => "structured",
        })
    }
}

/// Where in the input a problem was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    /// 0-based position in the structured `edges` array.
    Entry(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Entry(i) => write!(f, "edge entry {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("{at}: expected {expected}")]
    Syntax {
        at: Location,
        expected: &'static str,
    },
    #[error("{at}: self-loop at vertex {vertex}")]
    SelfLoop { at: Location, vertex: u32 },
    #[error("{at}: duplicate edge {u} {v}")]
    DuplicateEdge { at: Location, u: u32, v: u32 },
    #[error("{at}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { at: Location, vertex: u32, n: u32 },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("malformed structured document: {0}")]
    Json(String),
}

impl ParseError {
    pub fn location(&self) -> Option<Location> {
        match self {
            ParseError::Syntax { at, .. }
            | ParseError::SelfLoop { at, .. }
            | ParseError::DuplicateEdge { at, .. }
            | ParseError::OutOfRange { at, .. } => Some(*at),
            _ => None,
        }
    }
}

fn check_edges<'a>(
    n: u32,
    edges: impl IntoIterator<Item = (Location, &'a [u32; 2])>,
) -> Result<(), ParseError> {
    if n == 0 {
        return Err(ParseError::NoVertices);
    }
    let mut seen = BTreeSet::new();
    for (at, &[u, v]) in edges {
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::OutOfRange { at, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { at, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { at, u, v });
        }
    }
    Ok(())
}

fn parse_edgelist(text: &str) -> Result<GraphDocument, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(ParseError::Empty)?;
    let pair = |line: usize, l: &str, expected| -> Result<[u32; 2], ParseError> {
        let err = || ParseError::Syntax {
            at: Location::Line(line),
            expected,
        };
        let mut it = l.split_whitespace().map(u32::from_str);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
            _ => Err(err()),
        }
    };
    let [n, m] = pair(line, header, "header `n m`")?;
    let mut edges = Vec::with_capacity(m as usize);
    let mut lines_of = Vec::with_capacity(m as usize);
    for (line, l) in lines {
        edges.push(pair(line, l, "edge `u v`")?);
        lines_of.push(line);
    }
    check_edges(n, lines_of.iter().map(|&l| Location::Line(l)).zip(&edges))?;
    if edges.len() != m as usize {
        return Err(ParseError::EdgeCount {
            expected: m as usize,
            found: edges.len(),
        });
    }
    Ok(GraphDocument {
        n,
        edges,
        name: None,
    })
}

fn parse_structured(text: &str) -> Result<GraphDocument, ParseError> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    check_edges(
        doc.n,
        doc.edges
            .iter()
            .enumerate()
            .map(|(i, e)| (Location::Entry(i), e)),
    )?;
    Ok(doc)
}

/// Parses either format; without a hint, a leading `{` selects the
/// structured one.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<GraphDocument, ParseError> {
    let format = format.unwrap_or(if text.trim_start().starts_with('{') {
        Format::Structured
    } else {
        Format::Edgelist
    });
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Structured => parse_structured(text),
    }
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, name: Option<String>) -> Self {
        // ids are assumed to be 0..n, as for every graph the tool builds
        GraphDocument {
            n: g.vertex_count() as u32,
            edges: g
                .edges()
                .map(|e| {
                    let (u, v) = e.ends();
                    [u.0, v.0]
                })
                .collect(),
            name,
        }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<(u32, u32)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Serialises to `format`. The edge list has no room for a name.
    pub fn serialise(&self, format: Format) -> String {
        match format {
            Format::Edgelist => {
                let mut out = format!("{} {}\n", self.n, self.edges.len());
                for [u, v] in &self.edges {
                    let _ = writeln!(out, "{u} {v}");
                }
                out
            }
            Format::Structured => {
                let mut out = serde_json::to_string(self).expect("plain data");
                out.push('\n');
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claw_from_edgelist() {
        let doc = parse_graph("4 3\n0 1\n0 2\n0 3", None).unwrap();
        assert_eq!(doc.n, 4);
        assert_eq!(doc.edges, vec![[0, 1], [0, 2], [0, 3]]);
        let g = doc.to_graph().unwrap();
        assert_eq!(g.max_degree(), Ok(3));
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_graph("2 1\n0 0", None).unwrap_err();
        assert_eq!(
            e,
            ParseError::SelfLoop {
                at: Location::Line(2),
                vertex: 0
            }
        );
        assert_eq!(e.to_string(), "line 2: self-loop at vertex 0");
        let e = parse_graph("3 2\n0 1\n1 0", None).unwrap_err();
        assert_eq!(
            e,
            ParseError::DuplicateEdge {
                at: Location::Line(3),
                u: 1,
                v: 0
            }
        );
        let e = parse_graph("3 1\n\n0 3\n", None).unwrap_err();
        assert_eq!(e.location(), Some(Location::Line(3)));
        assert!(matches!(
            parse_graph("3 1\n0 x", None),
            Err(ParseError::Syntax {
                at: Location::Line(2),
                ..
            })
        ));
        assert_eq!(
            parse_graph("3 2\n0 1\n", None),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(parse_graph("  \n", None), Err(ParseError::Empty));
        assert_eq!(parse_graph("0 0", None), Err(ParseError::NoVertices));
    }

    #[test]
    fn structured_detected_and_checked() {
        let doc =
            parse_graph(r#"{"n": 3, "edges": [[0, 1], [1, 2]], "name": "p3"}"#, None).unwrap();
        assert_eq!(doc.name.as_deref(), Some("p3"));
        let e = parse_graph(r#"{"n": 3, "edges": [[0, 1], [1, 0]]}"#, None).unwrap_err();
        assert_eq!(e.location(), Some(Location::Entry(1)));
        assert!(matches!(parse_graph("{", None), Err(ParseError::Json(_))));
        assert!(matches!(
            parse_graph("4 3\n0 1\n0 2\n0 3", Some(Format::Structured)),
            Err(ParseError::Json(_))
        ));
    }

    #[test]
    fn round_trip_both_formats() {
        let doc = GraphDocument {
            n: 5,
            edges: vec![[0, 1], [3, 1], [4, 2]],
            name: Some("x".into()),
        };
        let s = doc.serialise(Format::Structured);
        assert_eq!(parse_graph(&s, None).unwrap(), doc);
        let e = doc.serialise(Format::Edgelist);
        assert_eq!(e, "5 3\n0 1\n3 1\n4 2\n");
        assert_eq!(
            parse_graph(&e, None).unwrap(),
            GraphDocument { name: None, ..doc }
        );
    }
}
