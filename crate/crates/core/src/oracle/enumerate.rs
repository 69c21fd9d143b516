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

//! Exhaustive enumeration of small connected chordless graphs.

use std::collections::HashSet;

use super::canon::canonical_code;
use super::OracleError;
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_small_chordless`].
pub const MAX_ENUMERATION_ORDER: usize = 9;

fn connected_without(adj: &[u32], x: usize, y: usize, banned: u32) -> bool {
    let mut seen = 1u32 << x;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            let mut nb = adj[v] & !banned & !seen;
            if v == x {
                nb &= !(1 << y);
            }
            if v == y {
                nb &= !(1 << x);
            }
            next |= nb;
        }
        seen |= next;
        frontier = next;
    }
    seen >> y & 1 == 1
}

/// Whether the bitmask graph has no chorded cycle: an edge `xy` is a chord
/// exactly when no single vertex separates `x` from `y` in `G - xy`.
pub(crate) fn chordless_bitmask(adj: &[u32]) -> bool {
    let n = adj.len();
    for x in 0..n {
        if adj[x].count_ones() < 3 {
            continue;
        }
        let mut ys = adj[x] & !(((1u64 << (x + 1)) - 1) as u32);
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            if adj[y].count_ones() < 3 || !connected_without(adj, x, y, 0) {
                continue;
            }
            let separable = (0..n)
                .filter(|&z| z != x && z != y)
                .any(|z| !connected_without(adj, x, y, 1 << z));
            if !separable {
                return false;
            }
        }
    }
    true
}

/// Chordlessness by the separator characterisation, independent of the
/// recognition code. Graphs of up to 32 vertices.
pub fn brute_force_is_chordless(g: &Graph) -> bool {
    assert!(g.vertex_count() <= 32);
    chordless_bitmask(&bitmasks(g))
}

pub(crate) fn bitmasks(g: &Graph) -> Vec<u32> {
    g.local_adj()
        .iter()
        .map(|l| l.iter().fold(0, |m, &j| m | 1 << j))
        .collect()
}

fn to_graph(adj: &[u32]) -> Graph {
    let mut edges = Vec::new();
    for (i, &m) in adj.iter().enumerate() {
        for j in i + 1..adj.len() {
            if m >> j & 1 == 1 {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(adj.len() as u32, &edges).expect("simple")
}

/// One representative of every isomorphism class of connected chordless
/// graphs on `n` vertices, grown vertex by vertex (a connected graph
/// always has a vertex whose removal keeps it connected, and chordlessness
/// passes to induced subgraphs).
fn connected_chordless_classes(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<u32>> = vec![vec![0]];
    for m in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for rep in &level {
            for mask in 1u32..(1 << m) {
                let mut adj = rep.clone();
                for (v, a) in adj.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        *a |= 1 << m;
                    }
                }
                adj.push(mask);
                if !chordless_bitmask(&adj) {
                    continue;
                }
                if seen.insert(canonical_code(&adj)) {
                    next.push(adj);
                }
            }
        }
        level = next;
    }
    level
}

/// Every connected chordless graph on `n <= 9` vertices with `Δ >= 3`, one
/// per isomorphism class.
pub fn enumerate_small_chordless(n: usize) -> Result<Vec<Graph>, OracleError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(connected_chordless_classes(n)
        .iter()
        .filter(|adj| adj.iter().any(|m| m.count_ones() >= 3))
        .map(|adj| to_graph(adj))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{canon::canonical_code, fixtures};

    fn code(g: &Graph) -> u64 {
        canonical_code(&bitmasks(g))
    }

    #[test]
    fn small_orders() {
        assert!(enumerate_small_chordless(3).unwrap().is_empty());
        let four = enumerate_small_chordless(4).unwrap();
        // the claw, and the paw (triangle with pendant)
        assert_eq!(four.len(), 2);
        let codes: Vec<u64> = four.iter().map(code).collect();
        assert!(codes.contains(&code(&fixtures::claw())));
        assert!(!codes.contains(&code(&fixtures::complete(4))));
        let five: Vec<u64> = enumerate_small_chordless(5)
            .unwrap()
            .iter()
            .map(code)
            .collect();
        assert!(five.contains(&code(&fixtures::k23())));
    }

    #[test]
    fn classes_match_brute_force_on_five_vertices() {
        // every labelled graph on 5 vertices, filtered and reduced by code
        let pairs: Vec<(u32, u32)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .collect();
        let mut expected = HashSet::new();
        for subset in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&b| subset >> b & 1 == 1)
                .map(|b| pairs[b])
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            if g.is_connected() && g.max_degree().unwrap() >= 3 && brute_force_is_chordless(&g) {
                expected.insert(code(&g));
            }
        }
        let got: HashSet<u64> = enumerate_small_chordless(5)
            .unwrap()
            .iter()
            .map(code)
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn separator_test_on_fixtures() {
        for f in fixtures::catalogue() {
            assert_eq!(
                brute_force_is_chordless(&f.graph),
                f.chordless,
                "{}",
                f.name
            );
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            enumerate_small_chordless(10),
            Err(OracleError::TooLarge { .. })
        ));
    }
}
