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

//! Proper 2-cutsets, extremal splits and their blocks.
//!
//! For a non-adjacent pair `{a, b}` of a 2-connected graph every component
//! of `G - {a, b}` attaches to both `a` and `b`. A component is *thin* when
//! together with `a` and `b` it induces an `a`-`b` path, and *thick*
//! otherwise. A side of a split is admissible when it is one thick
//! component or a union of at least two components, so a smallest `X` is
//! always either one thick component or two components.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{biconnected_components, is_two_connected, lowpoint_scan};
use crate::graph::{Graph, GraphError, IdAllocator, VertexId};
use crate::recognition::is_two_sparse;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is 2-sparse")]
    TwoSparse,
    #[error("invalid split: {0}")]
    InvalidSplit(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Witness `(X, Y, a, b)` of a proper 2-cutset. `X` and `Y` are sorted and
/// `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Split {
    pub x: Vec<VertexId>,
    pub y: Vec<VertexId>,
    pub a: VertexId,
    pub b: VertexId,
}

fn is_chordless_path(g: &Graph, a: VertexId, b: VertexId) -> bool {
    // connected, a and b are the two ends, every other vertex has degree 2
    g.is_connected()
        && g.degree(a) == Ok(1)
        && g.degree(b) == Ok(1)
        && g.vertices()
            .iter()
            .filter(|&&v| v != a && v != b)
            .all(|&v| g.degree(v) == Ok(2))
}

impl Split {
    /// Checks every defining property of a split against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        use DecompositionError::InvalidSplit;
        if self.x.is_empty() || self.y.is_empty() {
            return Err(InvalidSplit("empty side"));
        }
        let mut all: Vec<VertexId> = self.x.iter().chain(&self.y).copied().collect();
        all.push(self.a);
        all.push(self.b);
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) || all.as_slice() != g.vertices() {
            return Err(InvalidSplit(
                "sides and cut pair do not partition the vertices",
            ));
        }
        if g.has_edge(self.a, self.b) {
            return Err(InvalidSplit("cut pair is adjacent"));
        }
        let y: BTreeSet<_> = self.y.iter().collect();
        for &v in &self.x {
            if g.neighbours(v)?.any(|w| y.contains(&w)) {
                return Err(InvalidSplit("edge between X and Y"));
            }
        }
        for side in [&self.x, &self.y] {
            let h = g.induced_subgraph(side.iter().chain([&self.a, &self.b]))?;
            if !h.is_connected() {
                return Err(InvalidSplit("side has no a-b path"));
            }
            if is_chordless_path(&h, self.a, self.b) {
                return Err(InvalidSplit("side is a chordless path"));
            }
        }
        Ok(())
    }
}

/// Which side of the split a block was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    X,
    Y,
}

/// A side graph plus a marker vertex adjacent to both cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    pub marker: VertexId,
    pub side: Side,
    pub cut_pair: (VertexId, VertexId),
}

struct Component {
    members: Vec<u32>,
    thick: bool,
}

/// Smallest admissible `X` for the pair, as sorted local indices with the
/// complementary `Y`.
fn best_sides_for_pair(
    adj: &[Vec<u32>],
    a: u32,
    b: u32,
    label: &mut [u32],
) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = adj.len();
    label.iter_mut().for_each(|l| *l = u32::MAX);
    label[a as usize] = u32::MAX - 1;
    label[b as usize] = u32::MAX - 1;
    let mut comps: Vec<Component> = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if label[start] != u32::MAX {
            continue;
        }
        let c = comps.len() as u32;
        label[start] = c;
        queue.push_back(start as u32);
        let mut members = Vec::new();
        let (mut to_a, mut to_b) = (0usize, 0usize);
        let mut all_deg2 = true;
        while let Some(v) = queue.pop_front() {
            members.push(v);
            let list = &adj[v as usize];
            all_deg2 &= list.len() == 2;
            for &w in list {
                if w == a {
                    to_a += 1;
                } else if w == b {
                    to_b += 1;
                } else if label[w as usize] == u32::MAX {
                    label[w as usize] = c;
                    queue.push_back(w);
                }
            }
        }
        if to_a == 0 || to_b == 0 {
            return None;
        }
        members.sort_unstable();
        comps.push(Component {
            members,
            thick: !(to_a == 1 && to_b == 1 && all_deg2),
        });
    }
    let k = comps.len();
    if k < 2 {
        return None;
    }

    let mut best: Option<Vec<u32>> = None;
    let mut consider = |cand: Vec<u32>| {
        let better = match &best {
            None => true,
            Some(cur) => (cand.len(), &cand) < (cur.len(), cur),
        };
        if better {
            best = Some(cand);
        }
    };
    for (i, c) in comps.iter().enumerate() {
        let rest_ok = k >= 3 || comps[1 - i].thick;
        if c.thick && rest_ok {
            consider(c.members.clone());
        }
    }
    if k >= 3 {
        for i in 0..k {
            for j in i + 1..k {
                let rest_ok = k >= 4 || comps[3 - i - j].thick;
                if rest_ok {
                    let mut x = comps[i].members.clone();
                    x.extend_from_slice(&comps[j].members);
                    x.sort_unstable();
                    consider(x);
                }
            }
        }
    }
    let x = best?;
    let in_x: BTreeSet<u32> = x.iter().copied().collect();
    let y = (0..n as u32)
        .filter(|&v| v != a && v != b && !in_x.contains(&v))
        .collect();
    Some((x, y))
}

fn to_split(g: &Graph, a: u32, b: u32, x: Vec<u32>, y: Vec<u32>) -> Split {
    Split {
        x: x.into_iter().map(|i| g.id(i as usize)).collect(),
        y: y.into_iter().map(|i| g.id(i as usize)).collect(),
        a: g.id(a as usize),
        b: g.id(b as usize),
    }
}

/// Candidate partners of `a`: cut vertices of `G - a` that are larger than
/// `a`, not adjacent to it and pass `admit`.
fn partners(adj: &[Vec<u32>], a: u32, admit: impl Fn(u32) -> bool) -> Vec<u32> {
    let (cut, _) = lowpoint_scan(adj, Some(a), false);
    (a + 1..adj.len() as u32)
        .filter(|&b| cut[b as usize] && admit(b) && adj[a as usize].binary_search(&b).is_err())
        .collect()
}

/// Any proper 2-cutset of a 2-connected graph: the first valid pair in
/// ascending `(a, b)` order, with its smallest `X`.
pub fn find_proper_2cutset(g: &Graph) -> Result<Option<Split>, DecompositionError> {
    if !is_two_connected(g) {
        return Err(DecompositionError::NotTwoConnected);
    }
    let adj = g.local_adj();
    let mut label = vec![0u32; adj.len()];
    for a in 0..adj.len() as u32 {
        for b in partners(adj, a, |_| true) {
            if let Some((x, y)) = best_sides_for_pair(adj, a, b, &mut label) {
                return Ok(Some(to_split(g, a, b, x, y)));
            }
        }
    }
    Ok(None)
}

/// A split of minimum `|X|` over all proper 2-cutsets of a 2-connected,
/// chordless, not 2-sparse graph. Ties go to the lowest `(a, b)` pair, then
/// to the lexicographically smallest `X`.
///
/// In a minimum split both `a` and `b` have two neighbours in `X` and one in
/// `Y`, so only pairs of vertices of degree at least three are scanned.
pub fn find_extremal_split(g: &Graph) -> Result<Split, DecompositionError> {
    if !is_two_connected(g) {
        return Err(DecompositionError::NotTwoConnected);
    }
    if is_two_sparse(g).0 {
        return Err(DecompositionError::TwoSparse);
    }
    let adj = g.local_adj();
    let mut label = vec![0u32; adj.len()];
    let mut best: Option<(u32, u32, Vec<u32>, Vec<u32>)> = None;
    for a in 0..adj.len() as u32 {
        if adj[a as usize].len() < 3 {
            continue;
        }
        for b in partners(adj, a, |b| adj[b as usize].len() >= 3) {
            if let Some((x, y)) = best_sides_for_pair(adj, a, b, &mut label) {
                if best.as_ref().is_none_or(|cur| x.len() < cur.2.len()) {
                    best = Some((a, b, x, y));
                }
            }
        }
    }
    // a 2-connected chordless graph that is not 2-sparse always has one
    let (a, b, x, y) = best.ok_or(DecompositionError::InvalidSplit(
        "no proper 2-cutset; is the graph chordless?",
    ))?;
    Ok(to_split(g, a, b, x, y))
}

/// Builds `G_X` and `G_Y`, each with a fresh marker adjacent to `a` and `b`.
pub fn build_blocks(
    g: &Graph,
    split: &Split,
    alloc: &mut IdAllocator,
) -> Result<(Block, Block), DecompositionError> {
    split.validate(g)?;
    let make = |side_vertices: &[VertexId], side: Side, marker: VertexId| {
        let base = g.induced_subgraph(side_vertices.iter().chain([&split.a, &split.b]))?;
        let graph = base.extended(&[marker], &[(marker, split.a), (marker, split.b)])?;
        Ok::<_, DecompositionError>(Block {
            graph,
            marker,
            side,
            cut_pair: (split.a, split.b),
        })
    };
    let x_block = make(&split.x, Side::X, alloc.fresh())?;
    let y_block = make(&split.y, Side::Y, alloc.fresh())?;
    Ok((x_block, y_block))
}

/// One level of the extremal decomposition, as printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DecompositionNode {
    /// At most one edge: nothing to decompose.
    Trivial { vertices: Vec<VertexId> },
    TwoSparse {
        vertices: usize,
        edges: usize,
        max_degree: usize,
    },
    /// Not 2-connected: one child per biconnected component.
    Blocks {
        cut_vertices: Vec<VertexId>,
        blocks: Vec<DecompositionNode>,
    },
    Split {
        a: VertexId,
        b: VertexId,
        x_size: usize,
        y_size: usize,
        x: Vec<VertexId>,
        x_marker: VertexId,
        y_marker: VertexId,
        x_block_two_sparse: bool,
        /// Decomposition of `G_Y`; `G_X` is always 2-sparse.
        y_block: Box<DecompositionNode>,
    },
}

/// Recursively decomposes a chordless graph by extremal splits.
pub fn decomposition_tree(g: &Graph) -> Result<DecompositionNode, DecompositionError> {
    let mut alloc = IdAllocator::above(g);
    decompose_into(g, &mut alloc)
}

fn decompose_into(
    g: &Graph,
    alloc: &mut IdAllocator,
) -> Result<DecompositionNode, DecompositionError> {
    if g.edge_count() <= 1 {
        return Ok(DecompositionNode::Trivial {
            vertices: g.vertices().to_vec(),
        });
    }
    if is_two_sparse(g).0 {
        return Ok(DecompositionNode::TwoSparse {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            max_degree: g.max_degree()?,
        });
    }
    if !is_two_connected(g) {
        let bic = biconnected_components(g);
        let blocks = (0..bic.blocks.len())
            .map(|i| {
                let sub = g.induced_subgraph(&bic.block_vertices(i))?;
                decompose_into(&sub, alloc)
            })
            .collect::<Result<_, _>>()?;
        return Ok(DecompositionNode::Blocks {
            cut_vertices: bic.cut_vertices.into_iter().collect(),
            blocks,
        });
    }
    let split = find_extremal_split(g)?;
    let (gx, gy) = build_blocks(g, &split, alloc)?;
    Ok(DecompositionNode::Split {
        a: split.a,
        b: split.b,
        x_size: split.x.len(),
        y_size: split.y.len(),
        x_marker: gx.marker,
        y_marker: gy.marker,
        x_block_two_sparse: is_two_sparse(&gx.graph).0,
        x: split.x,
        y_block: Box::new(decompose_into(&gy.graph, alloc)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures::{self, P, Q, R, S, U, V, W};
    use crate::recognition::is_chordless;

    #[test]
    fn k23_has_no_proper_2cutset() {
        assert_eq!(find_proper_2cutset(&fixtures::k23()), Ok(None));
    }

    #[test]
    fn c6_has_no_proper_2cutset() {
        assert_eq!(find_proper_2cutset(&fixtures::cycle(6)), Ok(None));
    }

    #[test]
    fn theta_pair_split() {
        let g = fixtures::theta_pair();
        let s = find_proper_2cutset(&g).unwrap().unwrap();
        assert_eq!(
            s,
            Split {
                x: vec![P, Q],
                y: vec![V, R, S],
                a: U,
                b: W
            }
        );
        s.validate(&g).unwrap();
        assert_eq!(find_extremal_split(&g).unwrap(), s);
    }

    #[test]
    fn requires_two_connected() {
        assert_eq!(
            find_proper_2cutset(&fixtures::claw()),
            Err(DecompositionError::NotTwoConnected)
        );
        assert_eq!(
            find_extremal_split(&fixtures::claw()),
            Err(DecompositionError::NotTwoConnected)
        );
    }

    #[test]
    fn extremal_rejects_two_sparse() {
        assert_eq!(
            find_extremal_split(&fixtures::k23()),
            Err(DecompositionError::TwoSparse)
        );
        assert_eq!(
            find_extremal_split(&fixtures::subdivided_k4()),
            Err(DecompositionError::TwoSparse)
        );
    }

    #[test]
    fn blocks_of_theta_pair() {
        let g = fixtures::theta_pair();
        let s = find_extremal_split(&g).unwrap();
        let mut alloc = IdAllocator::above(&g);
        let (gx, gy) = build_blocks(&g, &s, &mut alloc).unwrap();
        assert_eq!(gx.side, Side::X);
        assert_eq!(gx.marker, VertexId(7));
        assert_eq!(gx.graph.vertices(), &[U, W, P, Q, VertexId(7)]);
        assert_eq!(
            gx.graph.neighbours(gx.marker).unwrap().collect::<Vec<_>>(),
            vec![U, W]
        );
        assert_eq!(
            gx.graph.vertex_count() + gy.graph.vertex_count(),
            g.vertex_count() + 4
        );
        for blk in [&gx, &gy] {
            assert_eq!(blk.graph.degree(blk.marker), Ok(2));
            assert!(is_chordless(&blk.graph).0);
            assert!(is_two_connected(&blk.graph));
        }
        assert!(is_two_sparse(&gx.graph).0);
    }

    #[test]
    fn invalid_split_is_rejected() {
        let g = fixtures::theta_pair();
        let bad = Split {
            x: vec![P],
            y: vec![Q, V, R, S],
            a: U,
            b: W,
        };
        assert_eq!(
            bad.validate(&g),
            Err(DecompositionError::InvalidSplit("side is a chordless path"))
        );
        let mut alloc = IdAllocator::above(&g);
        assert!(build_blocks(&g, &bad, &mut alloc).is_err());
    }

    #[test]
    fn decomposition_tree_of_theta_pair() {
        let node = decomposition_tree(&fixtures::theta_pair()).unwrap();
        match node {
            DecompositionNode::Split {
                a,
                b,
                x_size,
                x_block_two_sparse,
                y_block,
                ..
            } => {
                assert_eq!((a, b, x_size), (U, W, 2));
                assert!(x_block_two_sparse);
                assert!(matches!(*y_block, DecompositionNode::TwoSparse { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
