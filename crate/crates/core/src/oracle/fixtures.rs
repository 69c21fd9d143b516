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

//! Named small graphs with independently known properties.

use crate::graph::{Graph, VertexId};

/// Vertex names of [`theta_pair`].
pub const U: VertexId = VertexId(0);
pub const V: VertexId = VertexId(1);
pub const W: VertexId = VertexId(2);
pub const P: VertexId = VertexId(3);
pub const Q: VertexId = VertexId(4);
pub const R: VertexId = VertexId(5);
pub const S: VertexId = VertexId(6);

fn build(n: u32, edges: &[(u32, u32)]) -> Graph {
    Graph::from_edges(n, edges).expect("fixture is a simple graph")
}

/// `K_{1,3}` with centre 0.
pub fn claw() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3)])
}

/// `C_n` on `0, 1, ..., n-1` in order.
pub fn cycle(n: u32) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn path(n: u32) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

pub fn complete(n: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    build(n, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: u32, b: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            edges.push((i, j));
        }
    }
    build(a + b, &edges)
}

/// `K_{2,3}` with parts `{0, 1}` and `{2, 3, 4}`.
pub fn k23() -> Graph {
    complete_bipartite(2, 3)
}

/// Branch vertices 0 and 1 joined by internally disjoint paths of the
/// given lengths; interior vertices are numbered from 2, path by path.
pub fn theta(lengths: &[u32]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in lengths {
        assert!(len >= 1);
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    build(next, &edges)
}

/// Seven vertices `u v w p q r s` (ids 0..6) with edges uv, up, pw, uq,
/// qw, vr, rw, vs, sw: 4-cycles `upwq` and `vrws` sharing `w`, plus `uv`.
pub fn theta_pair() -> Graph {
    let (u, v, w, p, q, r, s) = (0, 1, 2, 3, 4, 5, 6);
    build(
        7,
        &[
            (u, v),
            (u, p),
            (p, w),
            (u, q),
            (q, w),
            (v, r),
            (r, w),
            (v, s),
            (s, w),
        ],
    )
}

/// `K_4` on branch vertices 0..3 with every edge subdivided once.
pub fn subdivided_k4() -> Graph {
    let mut edges = Vec::new();
    let mut mid = 4;
    for i in 0..4 {
        for j in i + 1..4 {
            edges.push((i, mid));
            edges.push((mid, j));
            mid += 1;
        }
    }
    build(10, &edges)
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    build(10, &edges)
}

/// A graph with its expected invariants.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub chordless: bool,
    pub two_sparse: bool,
    pub max_degree: usize,
    pub chromatic_index: usize,
    pub total_chromatic: usize,
}

/// Every named fixture. The invariants are checked against the oracles in
/// the test suite.
pub fn catalogue() -> Vec<Fixture> {
    let f = |name, graph, chordless, two_sparse, max_degree, chromatic_index, total_chromatic| {
        Fixture {
            name,
            graph,
            chordless,
            two_sparse,
            max_degree,
            chromatic_index,
            total_chromatic,
        }
    };
    vec![
        f("claw", claw(), true, true, 3, 3, 4),
        f("k23", k23(), true, true, 3, 3, 4),
        f("k24", complete_bipartite(2, 4), true, true, 4, 4, 5),
        f("c5", cycle(5), true, true, 2, 3, 4),
        f("c6", cycle(6), true, true, 2, 2, 3),
        f("theta-234", theta(&[2, 3, 4]), true, true, 3, 3, 4),
        f("subdivided-k4", subdivided_k4(), true, true, 3, 3, 4),
        f("theta-pair", theta_pair(), true, false, 4, 4, 5),
        f("k4", complete(4), false, false, 3, 3, 5),
        f("petersen", petersen(), false, false, 3, 4, 4),
    ]
}
