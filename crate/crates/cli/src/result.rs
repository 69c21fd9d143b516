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

//! The machine-readable result of one invocation.

use std::collections::BTreeMap;

use chordless_core::oracle::VerificationReport;
use chordless_core::{ChordWitness, Colour, Colouring, Edge, Mode, Trace, VertexId};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunMode {
    Edge,
    Total,
    Recognise,
    Decompose,
    Oracle,
    Verify,
    Generate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    NotChordless,
    DeltaTooSmall,
    InvalidInput,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NotChordless | Status::DeltaTooSmall => 1,
            Status::InvalidInput => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub chordless: bool,
    pub two_sparse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleValues {
    pub max_degree: usize,
    pub chromatic_index: usize,
    pub total_chromatic: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSummary {
    pub depth: usize,
    pub a: VertexId,
    pub b: VertexId,
    pub x_size: usize,
    pub y_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub calls: usize,
    pub max_depth: usize,
    pub splits: Vec<SplitSummary>,
}

impl From<&Trace> for Stats {
    fn from(t: &Trace) -> Self {
        Stats {
            calls: t.calls,
            max_depth: t.max_depth,
            splits: t
                .splits
                .iter()
                .map(|s| SplitSummary {
                    depth: s.depth,
                    a: s.a,
                    b: s.b,
                    x_size: s.x.len(),
                    y_size: s.y_size,
                })
                .collect(),
        }
    }
}

/// Everything a subcommand reports. Colours are 1-based; edge colours are
/// `[u, v, colour]` triples and vertex colours `[v, colour]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub mode: RunMode,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub palette: Option<Colour>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_colours: Option<Vec<[u32; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_colours: Option<Vec<[u32; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ChordWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recognition: Option<Recognition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleValues>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<Stats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default)]
    pub timing_ms: BTreeMap<String, f64>,
}

impl ResultDocument {
    pub fn new(mode: RunMode, status: Status) -> Self {
        ResultDocument {
            mode,
            status,
            palette: None,
            edge_colours: None,
            vertex_colours: None,
            witness: None,
            recognition: None,
            decomposition: None,
            oracle: None,
            verification: None,
            stats: None,
            error: None,
            timing_ms: BTreeMap::new(),
        }
    }

    pub fn invalid(mode: RunMode, error: impl ToString) -> Self {
        ResultDocument {
            error: Some(error.to_string()),
            ..ResultDocument::new(mode, Status::InvalidInput)
        }
    }

    pub fn boxed(self) -> Box<Self> {
        Box::new(self)
    }

    pub fn with_colouring(mut self, c: &Colouring) -> Self {
        self.palette = Some(c.palette);
        self.edge_colours = Some(
            c.edge_colours()
                .iter()
                .map(|(e, &col)| {
                    let (u, v) = e.ends();
                    [u.0, v.0, col]
                })
                .collect(),
        );
        self.vertex_colours = c
            .vertex_colours()
            .map(|m| m.iter().map(|(v, &col)| [v.0, col]).collect());
        self
    }

    /// Rebuilds the embedded colouring, if there is one.
    pub fn colouring(&self) -> Option<Colouring> {
        let mode = match self.mode {
            RunMode::Edge => Mode::Edge,
            RunMode::Total => Mode::Total,
            _ => return None,
        };
        let mut c = Colouring::empty(mode, self.palette?);
        for &[u, v, col] in self.edge_colours.as_ref()? {
            c.set_edge(Edge::new(VertexId(u), VertexId(v)), col);
        }
        if mode == Mode::Total {
            for &[v, col] in self.vertex_colours.as_ref()? {
                c.set_vertex(VertexId(v), col);
            }
        }
        Some(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}
