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

//! Seeded generators of connected chordless graphs with `Δ >= 3`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::graph::Graph;
use crate::recognition::{find_chord, is_two_sparse};

/// Retries per composition step and per whole attempt.
pub const RETRY_BUDGET: usize = 100;

/// Smallest order either profile can produce.
pub const MIN_GENERATED_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Every edge of a random connected graph subdivided once: 2-sparse.
    Sparse,
    /// 2-sparse pieces glued along non-adjacent pairs: not 2-sparse.
    Composed,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Sparse => "sparse",
            Profile::Composed => "composed",
        })
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sparse" => Ok(Profile::Sparse),
            "composed" => Ok(Profile::Composed),
            _ => Err(format!(
                "unknown profile {s:?} (expected sparse or composed)"
            )),
        }
    }
}

/// A connected chordless graph on exactly `n >= 7` vertices with `Δ >= 3`.
/// The same `(n, seed, profile)` always gives the same graph.
pub fn generate_chordless(n: usize, seed: u64, profile: Profile) -> Result<Graph, OracleError> {
    if n < MIN_GENERATED_ORDER {
        return Err(OracleError::TooSmall {
            n,
            min: MIN_GENERATED_ORDER,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = match profile {
        Profile::Sparse => sparse_edges(n, &mut rng)?,
        Profile::Composed => composed_edges(n, &mut rng)?,
    };
    Ok(relabel(n, &edges, &mut rng))
}

fn relabel(n: usize, edges: &[(u32, u32)], rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(rng);
    let mapped: Vec<(u32, u32)> = edges
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    Graph::from_edges(n as u32, &mapped).expect("generated graph is simple")
}

/// A random connected simple graph on `h` vertices with `m` edges and a
/// vertex of degree at least 3.
fn random_connected(
    h: usize,
    m: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(u32, u32)>, OracleError> {
    for _ in 0..RETRY_BUDGET {
        let mut edges = BTreeSet::new();
        for i in 1..h as u32 {
            let j = rng.gen_range(0..i);
            edges.insert((j, i));
        }
        while edges.len() < m {
            let u = rng.gen_range(0..h as u32);
            let v = rng.gen_range(0..h as u32);
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        let mut deg = vec![0; h];
        for &(u, v) in &edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        if deg.iter().any(|&d| d >= 3) {
            return Ok(edges.into_iter().collect());
        }
    }
    Err(OracleError::RetriesExhausted(format!(
        "no connected graph with a degree-3 vertex on {h} vertices and {m} edges"
    )))
}

/// Subdivides every edge of a random graph `H` with `h + m(H) = n`.
fn sparse_edges(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(u32, u32)>, OracleError> {
    // need m(H) >= h - 1, m(H) <= h(h-1)/2 and h >= 4
    let h_max = n.div_ceil(2);
    let h_min = (4..=h_max)
        .find(|&h| h * (h - 1) / 2 >= n - h)
        .expect("n >= 7");
    let h = rng.gen_range(h_min..=h_max);
    let base = random_connected(h, n - h, rng)?;
    let mut edges = Vec::with_capacity(2 * base.len());
    for (i, &(u, v)) in base.iter().enumerate() {
        let mid = (h + i) as u32;
        edges.push((u, mid));
        edges.push((mid, v));
    }
    Ok(edges)
}

/// Growing graph with adjacency sets, used by the composed profile.
struct Builder {
    adj: Vec<BTreeSet<u32>>,
}

impl Builder {
    fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
        Builder { adj }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (i, l) in self.adj.iter().enumerate() {
            out.extend(
                l.iter()
                    .filter(|&&j| j as usize > i)
                    .map(|&j| (i as u32, j)),
            );
        }
        out
    }

    fn graph(&self) -> Graph {
        Graph::from_edges(self.len() as u32, &self.edges()).expect("simple")
    }

    /// Glues `piece` (on local ids, with terminals 0 and 1) so that its
    /// terminals become `a` and `b`; other piece vertices are new.
    fn glue(&mut self, piece: &[(u32, u32)], order: usize, a: u32, b: u32) {
        let base = self.len() as u32;
        let map = |x: u32| match x {
            0 => a,
            1 => b,
            _ => base + x - 2,
        };
        self.adj.resize(self.adj.len() + order - 2, BTreeSet::new());
        for &(u, v) in piece {
            let (p, q) = (map(u), map(v));
            self.adj[p as usize].insert(q);
            self.adj[q as usize].insert(p);
        }
    }
}

/// A piece with non-adjacent terminals 0 and 1 and `interior` further
/// vertices. Returns its edges and order.
fn piece(interior: usize, rng: &mut ChaCha8Rng) -> (Vec<(u32, u32)>, usize) {
    let order = interior + 2;
    let mut edges = Vec::new();
    match rng.gen_range(0..5) {
        _ if interior <= 2 => parallel_paths(0, &[interior], 2, &mut edges),
        0 => parallel_paths(0, &[interior], 2, &mut edges),
        1 => {
            let k = rng.gen_range(2..=3).min(interior);
            parallel_paths(0, &split(interior, k, rng), 2, &mut edges);
        }
        2 if interior >= 8 => {
            // subdivided K4 on branch vertices 0, 1, 2, 3 plus a tail
            let mut next = 4u32;
            for i in 0..4u32 {
                for j in i + 1..4 {
                    edges.push((i, next));
                    edges.push((next, j));
                    next += 1;
                }
            }
            let mut prev = 3;
            for _ in 8..interior {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        3 => {
            // K_{2,t} with the terminals on the degree-t side
            for x in 2..order as u32 {
                edges.push((0, x));
                edges.push((x, 1));
            }
        }
        _ => {
            // 0 -- h, then h joined to 1 by two or three paths
            edges.push((0, 2));
            let k = rng.gen_range(2..=3).min(interior - 1);
            parallel_paths(2, &split(interior - 1, k, rng), 3, &mut edges);
        }
    }
    (edges, order)
}

/// `total` split into `k` positive parts.
fn split(total: usize, k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut lens = vec![1; k];
    for _ in k..total {
        lens[rng.gen_range(0..k)] += 1;
    }
    lens
}

/// Joins `from` to vertex 1 by paths with the given numbers of interior
/// vertices, numbered upwards from `next`.
fn parallel_paths(from: u32, lens: &[usize], mut next: u32, edges: &mut Vec<(u32, u32)>) {
    for &len in lens {
        let mut prev = from;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
}

/// Starts from a small 2-sparse graph and glues pieces along random
/// non-adjacent pairs, keeping only chordless results, until `n` vertices.
fn composed_edges(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(u32, u32)>, OracleError> {
    for _ in 0..RETRY_BUDGET {
        let start = rng.gen_range(4..=n.min(12)).min(n - 3);
        let mut b = Builder::from_edges(start, &cycle_edges(start));
        let mut failed = false;
        while b.len() < n {
            let remaining = n - b.len();
            let cap = remaining.min(3.max(n / 8));
            let mut glued = false;
            for _ in 0..RETRY_BUDGET {
                let interior = if remaining <= cap {
                    remaining
                } else {
                    rng.gen_range(1..=cap)
                };
                let a = rng.gen_range(0..b.len() as u32);
                let c = rng.gen_range(0..b.len() as u32);
                if a == c || b.adj[a as usize].contains(&c) {
                    continue;
                }
                let (edges, order) = piece(interior, rng);
                let len = b.len();
                let snapshot: Vec<BTreeSet<u32>> =
                    [a, c].iter().map(|&x| b.adj[x as usize].clone()).collect();
                b.glue(&edges, order, a, c);
                if find_chord(&b.graph()).is_none() {
                    glued = true;
                    break;
                }
                b.adj.truncate(len);
                b.adj[a as usize] = snapshot[0].clone();
                b.adj[c as usize] = snapshot[1].clone();
            }
            if !glued {
                failed = true;
                break;
            }
        }
        if failed {
            continue;
        }
        let g = b.graph();
        if !is_two_sparse(&g).0 && g.max_degree().unwrap_or(0) >= 3 {
            return Ok(b.edges());
        }
    }
    Err(OracleError::RetriesExhausted(format!(
        "no composed chordless graph on {n} vertices"
    )))
}

fn cycle_edges(n: usize) -> Vec<(u32, u32)> {
    (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_is_chordless;

    #[test]
    fn sparse_profile_is_chordless_and_two_sparse() {
        for n in [7, 10, 25, 30] {
            for seed in 0..10 {
                let g = generate_chordless(n, seed, Profile::Sparse).unwrap();
                assert_eq!(g.vertex_count(), n);
                assert!(g.is_connected());
                assert!(g.max_degree().unwrap() >= 3);
                assert!(is_two_sparse(&g).0);
                assert!(brute_force_is_chordless(&g));
            }
        }
    }

    #[test]
    fn composed_profile_is_chordless_and_not_two_sparse() {
        for n in [7, 12, 20, 32] {
            for seed in 0..10 {
                let g = generate_chordless(n, seed, Profile::Composed).unwrap();
                assert_eq!(g.vertex_count(), n);
                assert!(g.is_connected());
                assert!(!is_two_sparse(&g).0);
                assert!(brute_force_is_chordless(&g), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn deterministic() {
        for p in [Profile::Sparse, Profile::Composed] {
            assert_eq!(
                generate_chordless(40, 7, p).unwrap(),
                generate_chordless(40, 7, p).unwrap()
            );
        }
        assert_ne!(
            generate_chordless(40, 7, Profile::Sparse).unwrap(),
            generate_chordless(40, 8, Profile::Sparse).unwrap()
        );
    }

    #[test]
    fn too_small() {
        assert!(matches!(
            generate_chordless(6, 0, Profile::Sparse),
            Err(OracleError::TooSmall { n: 6, min: 7 })
        ));
        assert_eq!("composed".parse::<Profile>(), Ok(Profile::Composed));
        assert!("dense".parse::<Profile>().is_err());
    }
}
