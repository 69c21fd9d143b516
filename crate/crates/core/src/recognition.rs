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

//! Recognition of chordless and 2-sparse graphs.
//!
//! An edge `xy` is a chord of some cycle exactly when `G - xy` still has two
//! internally disjoint `x`-`y` paths. Both ends of a chord have degree at
//! least three, so only those edges are tested, each with a two-unit
//! vertex-capacitated flow. The two flow paths give the witness cycle.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexId};

/// A cycle together with one of its chords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordWitness {
    /// Cycle vertices in order; the closing edge is `last -> first`.
    pub cycle: Vec<VertexId>,
    pub chord: Edge,
}

impl ChordWitness {
    /// Checks the witness against `g`: the cycle is a simple cycle of `g`,
    /// the chord is an edge of `g` joining two non-consecutive cycle
    /// vertices.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        if k < 4 {
            return false;
        }
        let distinct: BTreeSet<_> = self.cycle.iter().collect();
        if distinct.len() != k {
            return false;
        }
        if !(0..k).all(|i| g.has_edge(self.cycle[i], self.cycle[(i + 1) % k])) {
            return false;
        }
        let (x, y) = self.chord.ends();
        let (Some(i), Some(j)) = (
            self.cycle.iter().position(|&c| c == x),
            self.cycle.iter().position(|&c| c == y),
        ) else {
            return false;
        };
        let gap = i.abs_diff(j);
        g.has_edge(x, y) && gap != 1 && gap != k - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("vertices {0} and {1} of the set are adjacent")]
    NotStable(VertexId, VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Unit-capacity residual network on split vertices.
struct SplitNetwork {
    head: Vec<u32>,
    cap: Vec<u8>,
    out: Vec<Vec<u32>>,
}

impl SplitNetwork {
    // node 2v = in(v), 2v+1 = out(v); arc a and a^1 are mutual reverses
    fn new(adj: &[Vec<u32>]) -> Self {
        let n = adj.len();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for v in 0..n as u32 {
            net.arc(2 * v, 2 * v + 1);
        }
        for (u, list) in adj.iter().enumerate() {
            for &w in list {
                net.arc(2 * u as u32 + 1, 2 * w);
            }
        }
        net
    }

    fn arc(&mut self, from: u32, to: u32) {
        let id = self.head.len() as u32;
        self.head.push(to);
        self.cap.push(1);
        self.out[from as usize].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.out[to as usize].push(id + 1);
    }

    fn reset(&mut self) {
        for (i, c) in self.cap.iter_mut().enumerate() {
            *c = u8::from(i % 2 == 0);
        }
    }

    fn augment(&mut self, source: u32, sink: u32, blocked: &[u32]) -> bool {
        let mut via = vec![u32::MAX; self.out.len()];
        via[source as usize] = u32::MAX - 1;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &a in &self.out[x as usize] {
                if self.cap[a as usize] == 0 || blocked.contains(&(a & !1)) {
                    continue;
                }
                let y = self.head[a as usize];
                if via[y as usize] == u32::MAX {
                    via[y as usize] = a;
                    queue.push_back(y);
                }
            }
        }
        if via[sink as usize] == u32::MAX {
            return false;
        }
        let mut y = sink;
        while y != source {
            let a = via[y as usize];
            self.cap[a as usize] -= 1;
            self.cap[(a ^ 1) as usize] += 1;
            y = self.head[(a ^ 1) as usize];
        }
        true
    }

    /// Follows saturated forward arcs from out(s) to in(t).
    fn paths(&self, s: u32, t: u32) -> Vec<Vec<u32>> {
        let mut paths = Vec::new();
        for &a in &self.out[(2 * s + 1) as usize] {
            if a % 2 != 0 || self.cap[a as usize] != 0 {
                continue;
            }
            let mut path = vec![s];
            let mut node = self.head[a as usize];
            loop {
                let v = node / 2;
                path.push(v);
                if v == t {
                    break;
                }
                let next = self.out[(2 * v + 1) as usize]
                    .iter()
                    .find(|&&b| b % 2 == 0 && self.cap[b as usize] == 0)
                    .expect("flow conservation");
                node = self.head[*next as usize];
            }
            paths.push(path);
        }
        paths
    }
}

/// Returns `None` when `g` is chordless, otherwise a cycle with a chord.
pub fn find_chord(g: &Graph) -> Option<ChordWitness> {
    let adj = g.local_adj();
    let mut net: Option<SplitNetwork> = None;
    for (x, list) in adj.iter().enumerate() {
        if list.len() < 3 {
            continue;
        }
        for &y in list {
            let y = y as usize;
            if y <= x || adj[y].len() < 3 {
                continue;
            }
            let net = net.get_or_insert_with(|| SplitNetwork::new(adj));
            net.reset();
            let (xs, ys) = (x as u32, y as u32);
            // arcs to cut: the edge itself in both directions and the
            // internal arcs of the terminals
            let blocked: Vec<u32> = net.out[(2 * xs + 1) as usize]
                .iter()
                .chain(&net.out[(2 * ys + 1) as usize])
                .copied()
                .filter(|&a| {
                    a % 2 == 0 && (net.head[a as usize] == 2 * ys || net.head[a as usize] == 2 * xs)
                })
                .collect();
            let source = 2 * xs + 1;
            let sink = 2 * ys;
            if net.augment(source, sink, &blocked) && net.augment(source, sink, &blocked) {
                let paths = net.paths(xs, ys);
                debug_assert_eq!(paths.len(), 2);
                let mut cycle: Vec<VertexId> = paths[0].iter().map(|&i| g.id(i as usize)).collect();
                cycle.extend(
                    paths[1][1..paths[1].len() - 1]
                        .iter()
                        .rev()
                        .map(|&i| g.id(i as usize)),
                );
                return Some(ChordWitness {
                    cycle,
                    chord: Edge::new(g.id(x), g.id(y)),
                });
            }
        }
    }
    None
}

/// True when no cycle of `g` has a chord; otherwise also returns a witness.
pub fn is_chordless(g: &Graph) -> (bool, Option<ChordWitness>) {
    match find_chord(g) {
        None => (true, None),
        Some(w) => (false, Some(w)),
    }
}

/// Every edge has an end of degree at most two. On failure returns an
/// edge whose ends both have degree at least three (the smallest one).
pub fn is_two_sparse(g: &Graph) -> (bool, Option<Edge>) {
    let adj = g.local_adj();
    for (x, list) in adj.iter().enumerate() {
        if list.len() < 3 {
            continue;
        }
        if let Some(&y) = list
            .iter()
            .find(|&&y| y as usize > x && adj[y as usize].len() >= 3)
        {
            return (false, Some(Edge::new(g.id(x), g.id(y as usize))));
        }
    }
    (true, None)
}

/// Vertices of degree at least three.
pub fn stable_high_degree_set(g: &Graph) -> BTreeSet<VertexId> {
    g.vertices()
        .iter()
        .zip(g.local_adj())
        .filter(|(_, l)| l.len() >= 3)
        .map(|(&v, _)| v)
        .collect()
}

/// The bipartite graph on `s` and its neighbours keeping exactly the edges
/// with one end in `s`. `s` must be stable.
pub fn one_end_bipartite(g: &Graph, s: &BTreeSet<VertexId>) -> Result<Graph, RecognitionError> {
    let mut in_s = vec![false; g.vertex_count()];
    for &v in s {
        in_s[g.local(v).ok_or(GraphError::UnknownVertex(v))?] = true;
    }
    let adj = g.local_adj();
    let mut keep = in_s.clone();
    for (i, list) in adj.iter().enumerate() {
        if !in_s[i] {
            continue;
        }
        for &j in list {
            if in_s[j as usize] {
                return Err(RecognitionError::NotStable(g.id(i), g.id(j as usize)));
            }
            keep[j as usize] = true;
        }
    }
    let mut remap = vec![u32::MAX; adj.len()];
    let mut ids = Vec::new();
    for (i, &k) in keep.iter().enumerate() {
        if k {
            remap[i] = ids.len() as u32;
            ids.push(g.id(i));
        }
    }
    let new_adj = (0..adj.len())
        .filter(|&i| keep[i])
        .map(|i| {
            adj[i]
                .iter()
                .filter(|&&j| keep[j as usize] && (in_s[i] || in_s[j as usize]))
                .map(|&j| remap[j as usize])
                .collect()
        })
        .collect();
    Ok(Graph::from_local(ids, new_adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn triangle_is_chordless() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(is_chordless(&g), (true, None));
    }

    #[test]
    fn k4_has_chorded_square() {
        let g = fixtures::complete(4);
        let (ok, w) = is_chordless(&g);
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.cycle.len(), 4);
        assert!(w.is_valid_for(&g));
    }

    #[test]
    fn petersen_is_not_chordless() {
        let g = fixtures::petersen();
        let w = find_chord(&g).expect("petersen has a chorded cycle");
        assert!(w.is_valid_for(&g));
    }

    #[test]
    fn theta_pair_is_chordless_but_not_two_sparse() {
        let g = fixtures::theta_pair();
        assert!(is_chordless(&g).0);
        let (sparse, e) = is_two_sparse(&g);
        assert!(!sparse);
        assert_eq!(e, Some(Edge::new(fixtures::U, fixtures::V)));
    }

    #[test]
    fn two_sparse_examples() {
        assert_eq!(is_two_sparse(&fixtures::k23()), (true, None));
        let (ok, e) = is_two_sparse(&fixtures::complete(4));
        assert!(!ok);
        assert!(e.is_some());
    }

    #[test]
    fn high_degree_sets() {
        assert_eq!(
            stable_high_degree_set(&fixtures::k23()),
            [v(0), v(1)].into_iter().collect()
        );
        assert!(stable_high_degree_set(&fixtures::cycle(6)).is_empty());
        let sk4 = fixtures::subdivided_k4();
        assert_eq!(
            stable_high_degree_set(&sk4),
            (0..4).map(v).collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn one_end_bipartite_examples() {
        let k23 = fixtures::k23();
        let b = one_end_bipartite(&k23, &[v(0), v(1)].into_iter().collect()).unwrap();
        assert_eq!(b, k23);

        let c6 = fixtures::cycle(6);
        let b = one_end_bipartite(&c6, &BTreeSet::new()).unwrap();
        assert_eq!(b.vertex_count(), 0);

        let t = fixtures::theta_pair();
        let s = [fixtures::U, fixtures::W].into_iter().collect();
        let b = one_end_bipartite(&t, &s).unwrap();
        // every edge except v-r and v-s touches {u, w}
        let expected: BTreeSet<Edge> = t
            .edges()
            .filter(|&e| e.contains(fixtures::U) || e.contains(fixtures::W))
            .collect();
        assert_eq!(expected.len(), 7);
        assert_eq!(b.edges().collect::<BTreeSet<_>>(), expected);
        assert_eq!(b.vertex_count(), 7);

        let bad: BTreeSet<_> = [fixtures::U, fixtures::V].into_iter().collect();
        assert_eq!(
            one_end_bipartite(&t, &bad),
            Err(RecognitionError::NotStable(fixtures::U, fixtures::V))
        );
    }
}
