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

//! Immutable simple undirected graphs with stable vertex identities.
//!
//! A [`Graph`] keeps its vertex ids sorted and stores adjacency as sorted
//! lists of *local* indices, so algorithms can work on dense arrays while
//! every result is reported in terms of [`VertexId`]s that survive
//! induced-subgraph extraction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Opaque, stable vertex identifier.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// Unordered vertex pair, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// Normalising constructor. Does not reject `u == v`; [`Graph`] does.
    pub fn new(u: VertexId, v: VertexId) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn ends(self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// The end that is not `v`. Panics if `v` is not an end.
    pub fn other(self, v: VertexId) -> VertexId {
        if self.0 == v {
            self.1
        } else {
            assert_eq!(self.1, v, "{v} is not an end of {self}");
            self.0
        }
    }

    /// True when the two edges share an end.
    pub fn is_adjacent_to(self, other: Edge) -> bool {
        self != other && (other.contains(self.0) || other.contains(self.1))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(u32, u32)> for Edge {
    fn from((u, v): (u32, u32)) -> Self {
        Edge::new(VertexId(u), VertexId(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("graph has no vertices")]
    Empty,
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    ids: Vec<VertexId>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.ids)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from explicit vertex and edge lists.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut ids: Vec<VertexId> = vertices.into_iter().collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        let mut adj = vec![Vec::new(); ids.len()];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let iu = ids
                .binary_search(&u)
                .map_err(|_| GraphError::UnknownVertex(u))?;
            let iv = ids
                .binary_search(&v)
                .map_err(|_| GraphError::UnknownVertex(v))?;
            let e = Edge::new(u, v);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e));
            }
            adj[iu].push(iv as u32);
            adj[iv].push(iu as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            ids,
            adj,
            edge_count: seen.len(),
        })
    }

    /// Graph on ids `0..n`.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        Graph::new(
            (0..n).map(VertexId),
            edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v))),
        )
    }

    /// Builds from already-validated local adjacency. Lists must be sorted,
    /// symmetric and loop-free.
    pub(crate) fn from_local(ids: Vec<VertexId>, adj: Vec<Vec<u32>>) -> Graph {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            ids,
            adj,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    /// Every edge exactly once, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, list)| {
            list.iter()
                .filter(move |&&j| (j as usize) > i)
                .map(move |&j| Edge(self.ids[i], self.ids[j as usize]))
        })
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match (self.local(u), self.local(v)) {
            (Some(i), Some(j)) => self.adj[i].binary_search(&(j as u32)).is_ok(),
            _ => false,
        }
    }

    pub fn neighbours(
        &self,
        v: VertexId,
    ) -> Result<impl Iterator<Item = VertexId> + '_, GraphError> {
        let i = self.local(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(self.adj[i].iter().map(move |&j| self.ids[j as usize]))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.local(v)
            .map(|i| self.adj[i].len())
            .ok_or(GraphError::UnknownVertex(v))
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.adj.iter().map(Vec::len).max().ok_or(GraphError::Empty)
    }

    /// Largest id in the graph, if any. Fresh ids are allocated above it.
    pub fn max_id(&self) -> Option<VertexId> {
        self.ids.last().copied()
    }

    /// The subgraph induced by `s`, keeping ids.
    pub fn induced_subgraph<'a, I>(&self, s: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let mut keep = vec![false; self.ids.len()];
        for v in s {
            let i = self.local(*v).ok_or(GraphError::UnknownVertex(*v))?;
            keep[i] = true;
        }
        Ok(self.induced_by_mask(&keep))
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> Graph {
        let mut remap = vec![u32::MAX; self.ids.len()];
        let mut ids = Vec::new();
        for (i, &k) in keep.iter().enumerate() {
            if k {
                remap[i] = ids.len() as u32;
                ids.push(self.ids[i]);
            }
        }
        let adj = keep
            .iter()
            .enumerate()
            .filter(|(_, &k)| k)
            .map(|(i, _)| {
                self.adj[i]
                    .iter()
                    .filter(|&&j| keep[j as usize])
                    .map(|&j| remap[j as usize])
                    .collect()
            })
            .collect();
        Graph::from_local(ids, adj)
    }

    /// A copy of this graph with extra vertices and edges. New vertices must
    /// not already exist; new edges may touch old or new vertices.
    pub fn extended(
        &self,
        new_vertices: &[VertexId],
        new_edges: &[(VertexId, VertexId)],
    ) -> Result<Graph, GraphError> {
        Graph::new(
            self.ids.iter().chain(new_vertices).copied(),
            self.edges()
                .map(Edge::ends)
                .chain(new_edges.iter().copied()),
        )
    }

    /// Connected components as sorted vertex lists, ordered by smallest id.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.ids.len()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.ids.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut members = vec![start];
            comp[start] = c;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    let w = w as usize;
                    if comp[w] == usize::MAX {
                        comp[w] = c;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members.into_iter().map(|i| self.ids[i]).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.ids.is_empty() || self.connected_components().len() == 1
    }

    /// Two-colours the vertices, or `None` when an odd cycle exists. Each
    /// component's smallest vertex lands on the first side.
    pub fn is_bipartite(&self) -> Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
        let mut side = vec![u8::MAX; self.ids.len()];
        let mut queue = VecDeque::new();
        for start in 0..self.ids.len() {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    let w = w as usize;
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let mut x = BTreeSet::new();
        let mut y = BTreeSet::new();
        for (i, &s) in side.iter().enumerate() {
            if s == 0 {
                x.insert(self.ids[i]);
            } else {
                y.insert(self.ids[i]);
            }
        }
        Some((x, y))
    }

    /// Degree of every vertex, keyed by id.
    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        self.ids
            .iter()
            .zip(&self.adj)
            .map(|(&v, l)| (v, l.len()))
            .collect()
    }

    // Local-index access for the algorithms in this crate.

    #[inline]
    pub(crate) fn local(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    #[inline]
    pub(crate) fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    #[inline]
    pub(crate) fn local_adj(&self) -> &[Vec<u32>] {
        &self.adj
    }
}

/// Hands out vertex ids that are unused in a given graph and never repeats
/// itself, so marker and contracted vertices stay distinct across a whole
/// decomposition run.
#[derive(Debug, Clone)]
pub struct IdAllocator {
    next: u32,
}

impl IdAllocator {
    pub fn above(g: &Graph) -> Self {
        IdAllocator {
            next: g.max_id().map_or(0, |v| v.0 + 1),
        }
    }

    pub fn fresh(&mut self) -> VertexId {
        let v = VertexId(self.next);
        self.next = self.next.checked_add(1).expect("vertex id space exhausted");
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    // parts {0,1} and {2,3,4}
    fn k23() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn degrees_of_claw() {
        let g = claw();
        assert_eq!(g.degree(v(0)).unwrap(), 3);
        assert_eq!(g.degree(v(1)).unwrap(), 1);
        let iso = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(iso.degree(v(0)).unwrap(), 0);
        assert_eq!(g.degree(v(9)), Err(GraphError::UnknownVertex(v(9))));
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(k23().max_degree().unwrap(), 3);
        assert_eq!(cycle(5).max_degree().unwrap(), 2);
        assert_eq!(Graph::default().max_degree(), Err(GraphError::Empty));
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(v(0)))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(Edge::new(v(0), v(1))))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::UnknownVertex(v(2)))
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.induced_subgraph(k4.vertices()).unwrap(), k4);

        let p = cycle(5).induced_subgraph(&[v(1), v(2), v(3)]).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert!(p.has_edge(v(1), v(2)) && p.has_edge(v(2), v(3)));

        let p = k23().induced_subgraph(&[v(0), v(1), v(2)]).unwrap();
        assert_eq!(
            p.edges().collect::<Vec<_>>(),
            vec![Edge::new(v(0), v(2)), Edge::new(v(1), v(2))]
        );
        assert!(k23().induced_subgraph(&[v(7)]).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(cycle(5).connected_components().len(), 1);
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert!(Graph::default().connected_components().is_empty());
    }

    #[test]
    fn bipartition_examples() {
        let (x, y) = cycle(4).is_bipartite().unwrap();
        assert_eq!(x, [v(0), v(2)].into_iter().collect());
        assert_eq!(y, [v(1), v(3)].into_iter().collect());
        assert!(cycle(5).is_bipartite().is_none());
        let (x, y) = k23().is_bipartite().unwrap();
        assert_eq!(x, [v(0), v(1)].into_iter().collect());
        assert_eq!(y, [v(2), v(3), v(4)].into_iter().collect());
    }

    #[test]
    fn ids_survive_extension_and_allocation() {
        let g = claw();
        let mut alloc = IdAllocator::above(&g);
        let w = alloc.fresh();
        assert_eq!(w, v(4));
        assert_ne!(alloc.fresh(), w);
        let h = g.extended(&[w], &[(w, v(1)), (w, v(2))]).unwrap();
        assert_eq!(h.degree(w).unwrap(), 2);
        assert_eq!(h.edge_count(), 5);
    }
}
