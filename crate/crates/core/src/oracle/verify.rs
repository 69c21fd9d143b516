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

//! Colouring verifiers that rely only on the graph's adjacency.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::{Colour, Colouring};
use crate::graph::{Edge, Graph, VertexId};

/// A vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Element {
    Vertex(VertexId),
    Edge(Edge),
}

/// Two adjacent or incident elements sharing a colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub first: Element,
    pub second: Element,
    pub colour: Colour,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub colours_used: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("element {0:?} is uncoloured")]
    Uncoloured(Element),
    #[error("element {0:?} is not in the graph")]
    Foreign(Element),
    #[error("element {0:?} has colour 0; colours start at 1")]
    ZeroColour(Element),
}

fn edge_colours(g: &Graph, c: &Colouring) -> Result<Vec<(Edge, Colour)>, VerifyError> {
    for &e in c.edge_colours().keys() {
        let (u, v) = e.ends();
        if !g.has_edge(u, v) {
            return Err(VerifyError::Foreign(Element::Edge(e)));
        }
    }
    g.edges()
        .map(|e| match c.edge_colour(e) {
            None => Err(VerifyError::Uncoloured(Element::Edge(e))),
            Some(0) => Err(VerifyError::ZeroColour(Element::Edge(e))),
            Some(k) => Ok((e, k)),
        })
        .collect()
}

fn edge_violations(g: &Graph, coloured: &[(Edge, Colour)]) -> Vec<Violation> {
    let mut out = Vec::new();
    for &v in g.vertices() {
        let at: Vec<&(Edge, Colour)> = coloured.iter().filter(|(e, _)| e.contains(v)).collect();
        for (i, &&(e, ce)) in at.iter().enumerate() {
            for &&(f, cf) in &at[i + 1..] {
                if ce == cf {
                    out.push(Violation {
                        first: Element::Edge(e),
                        second: Element::Edge(f),
                        colour: ce,
                    });
                }
            }
        }
    }
    out
}

/// Checks that adjacent edges have different colours. Every edge must be
/// coloured, and only edges of `g`.
pub fn verify_edge_colouring(g: &Graph, c: &Colouring) -> Result<VerificationReport, VerifyError> {
    let coloured = edge_colours(g, c)?;
    let violations = edge_violations(g, &coloured);
    let used: BTreeSet<Colour> = coloured.iter().map(|&(_, k)| k).collect();
    Ok(VerificationReport {
        valid: violations.is_empty(),
        violations,
        colours_used: used.len(),
    })
}

/// Checks vertex–vertex, edge–edge and vertex–edge conflicts of a total
/// colouring.
pub fn verify_total_colouring(g: &Graph, c: &Colouring) -> Result<VerificationReport, VerifyError> {
    let coloured = edge_colours(g, c)?;
    if let Some(m) = c.vertex_colours() {
        if let Some(&v) = m.keys().find(|&&v| !g.contains(v)) {
            return Err(VerifyError::Foreign(Element::Vertex(v)));
        }
    }
    let mut vertex = Vec::with_capacity(g.vertex_count());
    for &v in g.vertices() {
        match c.vertex_colour(v) {
            None => return Err(VerifyError::Uncoloured(Element::Vertex(v))),
            Some(0) => return Err(VerifyError::ZeroColour(Element::Vertex(v))),
            Some(k) => vertex.push(k),
        }
    }
    let colour_of = |v: VertexId| vertex[g.vertices().binary_search(&v).expect("vertex")];
    let mut violations = edge_violations(g, &coloured);
    for &(e, ce) in &coloured {
        let (u, v) = e.ends();
        let (cu, cv) = (colour_of(u), colour_of(v));
        if cu == cv {
            violations.push(Violation {
                first: Element::Vertex(u),
                second: Element::Vertex(v),
                colour: cu,
            });
        }
        for (x, cx) in [(u, cu), (v, cv)] {
            if cx == ce {
                violations.push(Violation {
                    first: Element::Vertex(x),
                    second: Element::Edge(e),
                    colour: ce,
                });
            }
        }
    }
    let used: BTreeSet<Colour> = coloured
        .iter()
        .map(|&(_, k)| k)
        .chain(vertex.iter().copied())
        .collect();
    Ok(VerificationReport {
        valid: violations.is_empty(),
        violations,
        colours_used: used.len(),
    })
}
