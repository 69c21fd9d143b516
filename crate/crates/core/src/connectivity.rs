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

//! Blocks and cut vertices (Hopcroft–Tarjan lowpoints, iterative DFS).

use std::collections::BTreeSet;

use crate::graph::{Edge, Graph, VertexId};

/// Block/cut-vertex decomposition. Each edge belongs to exactly one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biconnected {
    /// Edge sets of the blocks, each sorted, ordered by their smallest edge.
    pub blocks: Vec<Vec<Edge>>,
    pub cut_vertices: BTreeSet<VertexId>,
}

impl Biconnected {
    /// Vertex set of block `i`, sorted.
    pub fn block_vertices(&self, i: usize) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.blocks[i]
            .iter()
            .flat_map(|e| {
                let (u, v) = e.ends();
                [u, v]
            })
            .collect();
        set.into_iter().collect()
    }
}

const UNSEEN: u32 = u32::MAX;

struct Frame {
    v: u32,
    parent: u32,
    next: usize,
}

/// Runs the lowpoint DFS over `adj`, ignoring vertex `skip` if given.
/// Returns local cut-vertex flags and, when `collect` is set, blocks as
/// local edge lists.
pub(crate) fn lowpoint_scan(
    adj: &[Vec<u32>],
    skip: Option<u32>,
    collect: bool,
) -> (Vec<bool>, Vec<Vec<(u32, u32)>>) {
    let n = adj.len();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let mut time = 0u32;

    for root in 0..n as u32 {
        if Some(root) == skip || disc[root as usize] != UNSEEN {
            continue;
        }
        disc[root as usize] = time;
        low[root as usize] = time;
        time += 1;
        let mut root_children = 0;
        stack.push(Frame {
            v: root,
            parent: UNSEEN,
            next: 0,
        });
        while let Some(top) = stack.last_mut() {
            let v = top.v as usize;
            if top.next < adj[v].len() {
                let w = adj[v][top.next];
                top.next += 1;
                if Some(w) == skip {
                    continue;
                }
                let parent = top.parent;
                if disc[w as usize] == UNSEEN {
                    if collect {
                        edge_stack.push((v as u32, w));
                    }
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    time += 1;
                    if v as u32 == root {
                        root_children += 1;
                    }
                    stack.push(Frame {
                        v: w,
                        parent: v as u32,
                        next: 0,
                    });
                } else if w != parent && disc[w as usize] < disc[v] {
                    if collect {
                        edge_stack.push((v as u32, w));
                    }
                    low[v] = low[v].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(parent) = stack.last() {
                    let u = parent.v as usize;
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if u as u32 != root {
                            cut[u] = true;
                        }
                        if collect {
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == (u as u32, v as u32) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root as usize] = true;
        }
    }
    (cut, blocks)
}

/// Blocks and cut vertices of `g` in time linear in `n + m`.
pub fn biconnected_components(g: &Graph) -> Biconnected {
    let (cut, raw) = lowpoint_scan(g.local_adj(), None, true);
    let mut blocks: Vec<Vec<Edge>> = raw
        .into_iter()
        .map(|b| {
            let mut edges: Vec<Edge> = b
                .into_iter()
                .map(|(u, v)| Edge::new(g.id(u as usize), g.id(v as usize)))
                .collect();
            edges.sort_unstable();
            edges
        })
        .collect();
    blocks.sort_unstable_by(|a, b| a[0].cmp(&b[0]));
    let cut_vertices = cut
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(i, _)| g.id(i))
        .collect();
    Biconnected {
        blocks,
        cut_vertices,
    }
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.vertex_count() < 3 || !g.is_connected() {
        return false;
    }
    let (cut, _) = lowpoint_scan(g.local_adj(), None, false);
    !cut.iter().any(|&c| c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn cycle_is_one_block() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let b = biconnected_components(&g);
        assert_eq!(b.blocks.len(), 1);
        assert_eq!(b.blocks[0].len(), 5);
        assert!(b.cut_vertices.is_empty());
        assert!(is_two_connected(&g));
    }

    #[test]
    fn bowtie_has_one_cut_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let b = biconnected_components(&g);
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.cut_vertices, [v(2)].into_iter().collect());
        assert_eq!(b.block_vertices(0), vec![v(0), v(1), v(2)]);
        assert!(!is_two_connected(&g));
    }

    #[test]
    fn path_blocks_are_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = biconnected_components(&g);
        assert_eq!(b.blocks.len(), 3);
        assert!(b.blocks.iter().all(|blk| blk.len() == 1));
        assert_eq!(b.cut_vertices, [v(1), v(2)].into_iter().collect());
    }

    #[test]
    fn skipping_a_vertex() {
        // C6: removing 0 leaves the path 1..5 whose inner vertices are cuts
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let (cut, _) = lowpoint_scan(g.local_adj(), Some(0), false);
        assert_eq!(cut, vec![false, false, true, true, true, false]);
    }

    #[test]
    fn deep_path_does_not_overflow() {
        let n = 200_000u32;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(
            biconnected_components(&g).cut_vertices.len(),
            n as usize - 2
        );
    }
}
