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

//! Colourings, colour lists, and the errors shared by the colouring code.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::Biconnected;
use crate::decomposition::DecompositionError;
use crate::graph::{Edge, Graph, GraphError, VertexId};
use crate::recognition::{ChordWitness, RecognitionError};

/// Colours are positive integers; a palette of size `k` is `1..=k`.
pub type Colour = u32;

/// Edge-colouring or total-colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Edge,
    Total,
}

/// Assignment of colours to edges and, for total colourings, vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Colouring {
    /// Nominal palette size: every colour lies in `1..=palette`.
    pub palette: Colour,
    edges: BTreeMap<Edge, Colour>,
    vertices: Option<BTreeMap<VertexId, Colour>>,
}

impl Colouring {
    pub fn edge(palette: Colour) -> Self {
        Colouring {
            palette,
            edges: BTreeMap::new(),
            vertices: None,
        }
    }

    pub fn total(palette: Colour) -> Self {
        Colouring {
            palette,
            edges: BTreeMap::new(),
            vertices: Some(BTreeMap::new()),
        }
    }

    pub fn empty(mode: Mode, palette: Colour) -> Self {
        match mode {
            Mode::Edge => Colouring::edge(palette),
            Mode::Total => Colouring::total(palette),
        }
    }

    pub fn mode(&self) -> Mode {
        if self.vertices.is_some() {
            Mode::Total
        } else {
            Mode::Edge
        }
    }

    pub fn set_edge(&mut self, e: Edge, c: Colour) {
        self.edges.insert(e, c);
    }

    /// Sets a vertex colour, turning an edge colouring into a total one.
    pub fn set_vertex(&mut self, v: VertexId, c: Colour) {
        self.vertices.get_or_insert_with(BTreeMap::new).insert(v, c);
    }

    pub fn edge_colour(&self, e: Edge) -> Option<Colour> {
        self.edges.get(&e).copied()
    }

    pub fn vertex_colour(&self, v: VertexId) -> Option<Colour> {
        self.vertices.as_ref()?.get(&v).copied()
    }

    pub fn edge_colours(&self) -> &BTreeMap<Edge, Colour> {
        &self.edges
    }

    pub fn vertex_colours(&self) -> Option<&BTreeMap<VertexId, Colour>> {
        self.vertices.as_ref()
    }

    /// Number of distinct colours actually used.
    pub fn colours_used(&self) -> usize {
        self.edges
            .values()
            .chain(self.vertices.iter().flat_map(|m| m.values()))
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Colours on `v` (if coloured) and on its coloured incident edges in `g`.
    pub fn colours_at(&self, g: &Graph, v: VertexId) -> Result<BTreeSet<Colour>, GraphError> {
        let mut set: BTreeSet<Colour> = g
            .neighbours(v)?
            .filter_map(|w| self.edge_colour(Edge::new(v, w)))
            .collect();
        set.extend(self.vertex_colour(v));
        Ok(set)
    }

    /// Renames every colour through `perm`, where `perm[c]` is the new name
    /// of colour `c` (index 0 unused).
    pub fn permute(&mut self, perm: &[Colour]) {
        for c in self.edges.values_mut() {
            *c = perm[*c as usize];
        }
        if let Some(m) = &mut self.vertices {
            for c in m.values_mut() {
                *c = perm[*c as usize];
            }
        }
    }

    /// Copies every element of `other` into `self`, except those touching
    /// a vertex in `skip`.
    pub fn absorb(&mut self, other: &Colouring, skip: &[VertexId]) {
        for (&e, &c) in &other.edges {
            let (u, v) = e.ends();
            if !skip.contains(&u) && !skip.contains(&v) {
                self.edges.insert(e, c);
            }
        }
        if let Some(m) = &other.vertices {
            for (&v, &c) in m {
                if !skip.contains(&v) {
                    self.set_vertex(v, c);
                }
            }
        }
    }

    /// Largest colour in use, or 0.
    pub fn max_colour(&self) -> Colour {
        self.edges
            .values()
            .chain(self.vertices.iter().flat_map(|m| m.values()))
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// Admissible colours per edge.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColourLists {
    lists: BTreeMap<Edge, BTreeSet<Colour>>,
}

impl ColourLists {
    pub fn new() -> Self {
        Self::default()
    }

    /// The same list on every edge of `g`.
    pub fn uniform(g: &Graph, list: &BTreeSet<Colour>) -> Self {
        ColourLists {
            lists: g.edges().map(|e| (e, list.clone())).collect(),
        }
    }

    pub fn set(&mut self, e: Edge, list: BTreeSet<Colour>) {
        self.lists.insert(e, list);
    }

    pub fn get(&self, e: Edge) -> Option<&BTreeSet<Colour>> {
        self.lists.get(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Edge, &BTreeSet<Colour>)> {
        self.lists.iter()
    }
}

/// `{lo, ..., hi}`.
pub fn palette_range(lo: Colour, hi: Colour) -> BTreeSet<Colour> {
    (lo..=hi).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("invalid bipartition: {0}")]
    BadBipartition(String),
    #[error("graph is not 2-sparse: edge {0}")]
    NotTwoSparse(Edge),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not chordless")]
    NotChordless(Box<ChordWitness>),
    #[error("maximum degree {found} is below the required {required}")]
    DeltaTooSmall { found: usize, required: usize },
    #[error("maximum degree {found} differs from the required {required}")]
    WrongDelta { found: usize, required: usize },
    #[error("vertex {0} of degree at least 3 is outside the designated set")]
    HighDegreeOutside(VertexId),
    #[error("edge {0} has no colour list")]
    MissingList(Edge),
    #[error("edges at {0} carry different lists")]
    NonUniformLists(VertexId),
    #[error("list of edge {edge} has {len} colours, needs {needed}")]
    ListTooShort {
        edge: Edge,
        len: usize,
        needed: usize,
    },
    #[error("list of edge {0} leaves the palette")]
    ListOutsidePalette(Edge),
    #[error("vertex {0} has no precolour")]
    MissingPrecolour(VertexId),
    #[error("precolour of {vertex} appears in the list of edge {edge}")]
    PrecolourInList { vertex: VertexId, edge: Edge },
    #[error("precolour of {0} leaves the palette")]
    PrecolourOutsidePalette(VertexId),
    #[error("palette of {palette} colours is too small, needs {needed}")]
    PaletteTooSmall { palette: Colour, needed: Colour },
    #[error("bad anchor: {0}")]
    BadAnchor(&'static str),
    #[error("path needs at least 3 vertices, got {0}")]
    PathTooShort(usize),
    #[error("inconsistent path precolouring: {0}")]
    InconsistentPrecolouring(&'static str),
    #[error("no admissible colour left for {0}")]
    Exhausted(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A permutation of `1..=k` (as a lookup table) that sends each `from`
/// colour of `fixed` to its `to` colour, and sends the colours of `spread`
/// (in order) to the smallest colours outside `avoid` and the fixed
/// targets. Returns `None` when the constraints cannot be met.
pub(crate) fn aligning_permutation(
    k: Colour,
    fixed: &[(Colour, Colour)],
    spread: &[Colour],
    avoid: &BTreeSet<Colour>,
) -> Option<Vec<Colour>> {
    let mut perm = vec![0; k as usize + 1];
    let mut taken = vec![false; k as usize + 1];
    for &(from, to) in fixed {
        if from == 0 || from > k || to == 0 || to > k {
            return None;
        }
        if perm[from as usize] != 0 && perm[from as usize] != to {
            return None;
        }
        if taken[to as usize] && perm[from as usize] != to {
            return None;
        }
        perm[from as usize] = to;
        taken[to as usize] = true;
    }
    for &from in spread {
        if perm[from as usize] != 0 {
            if avoid.contains(&perm[from as usize]) {
                return None;
            }
            continue;
        }
        let to = (1..=k).find(|&c| !taken[c as usize] && !avoid.contains(&c))?;
        perm[from as usize] = to;
        taken[to as usize] = true;
    }
    let mut free = (1..=k).filter(|&c| !taken[c as usize]);
    for c in 1..=k {
        if perm[c as usize] == 0 {
            perm[c as usize] = free.next().expect("bijection");
        }
    }
    Some(perm)
}

/// Glues colourings of the blocks of `g` (one per entry of `bc.blocks`,
/// each over the palette `1..=k`) into one, relabelling each block at the
/// cut vertex it shares with the blocks merged before it. In total mode,
/// isolated vertices get colour 1.
pub(crate) fn merge_block_colourings(
    g: &Graph,
    bc: &Biconnected,
    mut parts: Vec<Colouring>,
    mode: Mode,
    k: Colour,
) -> Result<Colouring, ColouringError> {
    let mut out = Colouring::empty(mode, k);
    let vertex_sets: Vec<Vec<VertexId>> =
        (0..bc.blocks.len()).map(|i| bc.block_vertices(i)).collect();
    let mut blocks_at: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, vs) in vertex_sets.iter().enumerate() {
        for &v in vs {
            blocks_at.entry(v).or_default().push(i);
        }
    }
    let mut seen = vec![false; parts.len()];
    let mut queue = VecDeque::new();
    for start in 0..parts.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        out.absorb(&parts[start], &[]);
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            for &v in &vertex_sets[i] {
                for &j in &blocks_at[&v] {
                    if seen[j] {
                        continue;
                    }
                    seen[j] = true;
                    let part = &mut parts[j];
                    let fixed: Vec<(Colour, Colour)> = match mode {
                        Mode::Total => {
                            let from = part.vertex_colour(v);
                            let to = out.vertex_colour(v);
                            match (from, to) {
                                (Some(f), Some(t)) => vec![(f, t)],
                                _ => return Err(ColouringError::MissingPrecolour(v)),
                            }
                        }
                        Mode::Edge => Vec::new(),
                    };
                    let spread: Vec<Colour> = part
                        .edge_colours()
                        .iter()
                        .filter(|(e, _)| e.contains(v))
                        .map(|(_, &c)| c)
                        .collect();
                    let avoid = out.colours_at(g, v)?;
                    let perm =
                        aligning_permutation(k, &fixed, &spread, &avoid).ok_or_else(|| {
                            ColouringError::Invariant(format!(
                                "no relabelling merges the blocks at {v}"
                            ))
                        })?;
                    part.permute(&perm);
                    out.absorb(part, &[]);
                    queue.push_back(j);
                }
            }
        }
    }
    if mode == Mode::Total {
        for &v in g.vertices() {
            if out.vertex_colour(v).is_none() {
                out.set_vertex(v, 1);
            }
        }
    }
    Ok(out)
}
