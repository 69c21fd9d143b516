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

//! Randomised properties of the colouring algorithms and the oracles.

use std::collections::BTreeSet;

use chordless_core::oracle::{
    brute_force_chromatic_index, brute_force_total_chromatic, fixtures, generate_chordless,
    verify_edge_colouring, verify_total_colouring, Profile,
};
use chordless_core::{
    edge_colour_chordless, extend_path_total, is_chordless, list_edge_colour_2sparse,
    stable_high_degree_set, total_colour_chordless, ColourLists, Edge, Graph, PathEnds, VertexId,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn profile() -> impl Strategy<Value = Profile> {
    prop_oneof![Just(Profile::Sparse), Just(Profile::Composed)]
}

/// Same graph with vertex `i` renamed to `perm[i] + offset`.
fn relabel(g: &Graph, perm: &[u32], offset: u32) -> Graph {
    let name = |v: VertexId| VertexId(perm[v.index()] + offset);
    Graph::new(
        g.vertices().iter().map(|&v| name(v)),
        g.edges().map(|e| {
            let (u, v) = e.ends();
            (name(u), name(v))
        }),
    )
    .unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (3u32..=7).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 1..=len.min(12))
            .prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_graphs_are_coloured_optimally(
        n in 7usize..90,
        seed in any::<u64>(),
        profile in profile(),
    ) {
        let g = generate_chordless(n, seed, profile).unwrap();
        let d = g.max_degree().unwrap();
        let e = edge_colour_chordless(&g).unwrap();
        prop_assert!(verify_edge_colouring(&g, &e).unwrap().valid);
        prop_assert!(e.max_colour() as usize <= d);
        let t = total_colour_chordless(&g).unwrap();
        prop_assert!(verify_total_colouring(&g, &t).unwrap().valid);
        prop_assert!(t.max_colour() as usize <= d + 1);
    }

    #[test]
    fn vertex_names_do_not_matter(n in 7usize..40, seed in any::<u64>(), profile in profile()) {
        let g = generate_chordless(n, seed, profile).unwrap();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm, 1000);
        prop_assert!(is_chordless(&h).0);
        let d = h.max_degree().unwrap();
        let e = edge_colour_chordless(&h).unwrap();
        prop_assert!(verify_edge_colouring(&h, &e).unwrap().valid && e.max_colour() as usize <= d);
        let t = total_colour_chordless(&h).unwrap();
        prop_assert!(verify_total_colouring(&h, &t).unwrap().valid && t.max_colour() as usize <= d + 1);
    }

    #[test]
    fn list_colouring_respects_lists(n in 7usize..60, seed in any::<u64>()) {
        let g = generate_chordless(n, seed, Profile::Sparse).unwrap();
        let s = stable_high_degree_set(&g);
        let k = g.max_degree().unwrap() as u32 + 2;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |len: usize| -> BTreeSet<u32> {
            let mut all: Vec<u32> = (1..=k).collect();
            all.shuffle(&mut rng);
            all.into_iter().take(len).collect()
        };
        let mut lists = ColourLists::new();
        let mut at_s = std::collections::BTreeMap::new();
        for &v in &s {
            at_s.insert(v, draw(g.degree(v).unwrap()));
        }
        let edges: Vec<Edge> = g.edges().collect();
        for &e in &edges {
            let (u, v) = e.ends();
            let list = at_s.get(&u).or(at_s.get(&v)).cloned().unwrap_or_else(|| draw(3));
            lists.set(e, list);
        }
        let c = list_edge_colour_2sparse(&g, &s, &lists).unwrap();
        prop_assert!(verify_edge_colouring(&g, &c).unwrap().valid);
        for e in edges {
            prop_assert!(lists.get(e).unwrap().contains(&c.edge_colour(e).unwrap()));
        }
    }

    #[test]
    fn path_extension_keeps_precoloured_elements(
        k in 3usize..40,
        start in 1u32..=4,
        a in 0u32..3,
        b in 0u32..3,
    ) {
        let others: Vec<u32> = (1..=4).filter(|&c| c != start).collect();
        let (first, last) = (others[a as usize], others[b as usize]);
        prop_assume!(k > 3 || first != last);
        let path: Vec<VertexId> = (0..k as u32).map(|i| VertexId(3 * i + 5)).collect();
        let c = extend_path_total(&path, PathEnds::new(start, first, last, start)).unwrap();
        let edges: Vec<(u32, u32)> = (0..k as u32 - 1).map(|i| (i, i + 1)).collect();
        let g = relabel(&Graph::from_edges(k as u32, &edges).unwrap(), &(0..k as u32).map(|i| 3 * i).collect::<Vec<_>>(), 5);
        prop_assert!(verify_total_colouring(&g, &c).unwrap().valid);
        prop_assert!(c.max_colour() <= 4);
        prop_assert_eq!(c.vertex_colour(path[0]), Some(start));
        prop_assert_eq!(c.vertex_colour(path[k - 1]), Some(start));
        prop_assert_eq!(c.edge_colour(Edge::new(path[0], path[1])), Some(first));
        prop_assert_eq!(c.edge_colour(Edge::new(path[k - 2], path[k - 1])), Some(last));
    }

    #[test]
    fn oracles_are_monotone(g in small_graph(), pick in any::<prop::sample::Index>()) {
        let n = g.vertex_count() as u32;
        let missing: Vec<(u32, u32)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(VertexId(u), VertexId(v)))
            .collect();
        prop_assume!(!missing.is_empty());
        let extra = missing[pick.index(missing.len())];
        let mut edges: Vec<(u32, u32)> = g.edges().map(|e| (e.ends().0 .0, e.ends().1 .0)).collect();
        edges.push(extra);
        let h = Graph::from_edges(n, &edges).unwrap();
        let limit = 10;
        prop_assert!(
            brute_force_chromatic_index(&g, limit).unwrap()
                <= brute_force_chromatic_index(&h, limit).unwrap()
        );
        prop_assert!(
            brute_force_total_chromatic(&g, limit).unwrap()
                <= brute_force_total_chromatic(&h, limit).unwrap()
        );
    }

    #[test]
    fn single_corruptions_are_caught(n in 10usize..60, seed in any::<u64>(), profile in profile()) {
        let g = generate_chordless(n, seed, profile).unwrap();
        let mut c = total_colour_chordless(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // copy a neighbour's colour onto a vertex: always a conflict
        let v = g.vertices()[rng.gen_range(0..n)];
        let w = g.neighbours(v).unwrap().next().unwrap();
        c.set_vertex(v, c.vertex_colour(w).unwrap());
        let report = verify_total_colouring(&g, &c).unwrap();
        prop_assert!(!report.valid);
        prop_assert!(!report.violations.is_empty());
    }
}

#[test]
fn fixtures_match_the_oracles() {
    for f in fixtures::catalogue() {
        let g = &f.graph;
        assert_eq!(is_chordless(g).0, f.chordless, "{}", f.name);
        assert_eq!(g.max_degree().unwrap(), f.max_degree, "{}", f.name);
        assert_eq!(
            brute_force_chromatic_index(g, 8).unwrap(),
            f.chromatic_index,
            "{}",
            f.name
        );
        assert_eq!(
            brute_force_total_chromatic(g, 8).unwrap(),
            f.total_chromatic,
            "{}",
            f.name
        );
        if f.chordless && f.max_degree >= 3 {
            let e = edge_colour_chordless(g).unwrap();
            assert!(verify_edge_colouring(g, &e).unwrap().valid);
            assert_eq!(e.max_colour() as usize, f.chromatic_index, "{}", f.name);
            let t = total_colour_chordless(g).unwrap();
            assert!(verify_total_colouring(g, &t).unwrap().valid);
            assert_eq!(t.max_colour() as usize, f.total_chromatic, "{}", f.name);
        }
    }
}
