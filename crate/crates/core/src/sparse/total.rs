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

//! Total colourings of 2-sparse graphs.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::konig::konig_local;
use super::list::{check_lists, check_stable_cover, list_colour_bipartite_onto};
use super::path::fill_path;
use crate::colouring::{
    merge_block_colourings, palette_range, Colour, ColourLists, Colouring, ColouringError, Mode,
};
use crate::connectivity::{biconnected_components, is_two_connected};
use crate::graph::{Edge, Graph, GraphError, VertexId};
use crate::recognition::{is_two_sparse, one_end_bipartite, stable_high_degree_set};

/// A degree-2 vertex `u` with neighbours `a`, `b` and the colours of
/// `a`, `b`, `au`, `ub` (in that order) to be kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchor {
    pub u: VertexId,
    pub a: VertexId,
    pub b: VertexId,
    pub colours: [Colour; 4],
}

fn require_two_sparse(g: &Graph) -> Result<(), ColouringError> {
    match is_two_sparse(g) {
        (false, Some(e)) => Err(ColouringError::NotTwoSparse(e)),
        _ => Ok(()),
    }
}

/// `(Δ+1)`-total-colouring of a 2-sparse graph with `Δ >= 4` extending the
/// vertex precolouring of `s`; edges at `s` are coloured from their lists.
pub fn total_colour_2sparse_delta4(
    g: &Graph,
    s: &BTreeSet<VertexId>,
    vertex_precolours: &BTreeMap<VertexId, Colour>,
    lists: &ColourLists,
) -> Result<Colouring, ColouringError> {
    require_two_sparse(g)?;
    let delta = g.max_degree()?;
    if delta < 4 {
        return Err(ColouringError::DeltaTooSmall {
            found: delta,
            required: 4,
        });
    }
    total_delta4_with_palette(g, s, vertex_precolours, lists, delta as Colour + 1)
}

/// Same as [`total_colour_2sparse_delta4`] over `1..=k`, for any
/// `k >= max(5, Δ+1)`. The graph must already be 2-sparse.
pub(crate) fn total_delta4_with_palette(
    g: &Graph,
    s: &BTreeSet<VertexId>,
    vertex_precolours: &BTreeMap<VertexId, Colour>,
    lists: &ColourLists,
    k: Colour,
) -> Result<Colouring, ColouringError> {
    let needed = 5.max(g.max_degree().unwrap_or(0) as Colour + 1);
    if k < needed {
        return Err(ColouringError::PaletteTooSmall { palette: k, needed });
    }
    let in_s = check_stable_cover(g, s)?;
    let b = one_end_bipartite(g, s)?;
    check_lists(&b, lists, s)?;
    let mut out = Colouring::total(k);
    for &v in s {
        let c = *vertex_precolours
            .get(&v)
            .ok_or(ColouringError::MissingPrecolour(v))?;
        if c == 0 || c > k {
            return Err(ColouringError::PrecolourOutsidePalette(v));
        }
        for w in g.neighbours(v)? {
            let e = Edge::new(v, w);
            let list = lists.get(e).expect("checked");
            if list.iter().any(|&x| x == 0 || x > k) {
                return Err(ColouringError::ListOutsidePalette(e));
            }
            if list.contains(&c) {
                return Err(ColouringError::PrecolourInList { vertex: v, edge: e });
            }
        }
        out.set_vertex(v, c);
    }
    let b_in_x: Vec<bool> = b.vertices().iter().map(|v| s.contains(v)).collect();
    list_colour_bipartite_onto(&b, &b_in_x, lists, &mut out)?;

    // every remaining element sees at most four others
    let outside = |v: VertexId| !in_s[g.local(v).expect("vertex of g")];
    for e in g.edges() {
        let (u, v) = e.ends();
        if outside(u) && outside(v) {
            let used = incident_colours(g, &out, u)?
                .union(&incident_colours(g, &out, v)?)
                .copied()
                .collect::<BTreeSet<_>>();
            out.set_edge(e, smallest_missing(&used, k, || e.to_string())?);
        }
    }
    for &v in g.vertices() {
        if outside(v) {
            let mut used = incident_colours(g, &out, v)?;
            used.extend(g.neighbours(v)?.filter_map(|w| out.vertex_colour(w)));
            out.set_vertex(v, smallest_missing(&used, k, || v.to_string())?);
        }
    }
    Ok(out)
}

fn incident_colours(g: &Graph, c: &Colouring, v: VertexId) -> Result<BTreeSet<Colour>, GraphError> {
    Ok(g.neighbours(v)?
        .filter_map(|w| c.edge_colour(Edge::new(v, w)))
        .chain(c.vertex_colour(v))
        .collect())
}

fn smallest_missing(
    used: &BTreeSet<Colour>,
    k: Colour,
    what: impl FnOnce() -> String,
) -> Result<Colour, ColouringError> {
    (1..=k)
        .find(|c| !used.contains(c))
        .ok_or_else(|| ColouringError::Exhausted(what()))
}

/// 4-total-colouring of a 2-connected 2-sparse graph with `Δ = 3`. With an
/// anchor, the colours of `a`, `b`, `au`, `ub` are the prescribed ones
/// (which must have `a` and `b` alike, and be otherwise proper).
pub fn total_colour_2sparse_cubic(
    g: &Graph,
    anchor: Option<Anchor>,
) -> Result<Colouring, ColouringError> {
    require_two_sparse(g)?;
    let delta = g.max_degree()?;
    if delta != 3 {
        return Err(ColouringError::WrongDelta {
            found: delta,
            required: 3,
        });
    }
    if !is_two_connected(g) {
        return Err(ColouringError::NotTwoConnected);
    }
    if let Some(an) = &anchor {
        check_anchor(g, an)?;
    }
    let n = g.vertex_count();
    let adj = g.local_adj();
    let in_s: Vec<bool> = adj.iter().map(|l| l.len() >= 3).collect();

    // edges with exactly one end in S, 3-edge-coloured with 2, 3, 4
    let mut b_edges = Vec::new();
    for (i, l) in adj.iter().enumerate() {
        if in_s[i] {
            b_edges.extend(l.iter().map(|&j| (i as u32, j)));
        }
    }
    let b_colour = konig_local(n, &b_edges, 3);
    let mut colour_of: BTreeMap<(u32, u32), Colour> = BTreeMap::new();
    for (&(p, q), c) in b_edges.iter().zip(b_colour) {
        colour_of.insert((p.min(q), p.max(q)), c + 2);
    }
    if let Some(an) = &anchor {
        let key = |x: VertexId, y: VertexId| {
            let (p, q) = (g.local(x).unwrap() as u32, g.local(y).unwrap() as u32);
            (p.min(q), p.max(q))
        };
        let au = colour_of[&key(an.a, an.u)];
        let ub = colour_of[&key(an.u, an.b)];
        let mut perm = [0, 1, 0, 0, 0];
        perm[au as usize] = 2;
        perm[ub as usize] = 3;
        let rest = (2..=4)
            .find(|&c| c != au && c != ub)
            .expect("three colours");
        perm[rest as usize] = 4;
        for c in colour_of.values_mut() {
            *c = perm[*c as usize];
        }
    }

    let paths = s_paths(adj, &in_s);
    check_partition(g, &paths)?;

    let mut out = Colouring::total(4);
    for path in &paths {
        let k = path.len();
        let mut vertex = vec![0; k];
        let mut edge = vec![0; k - 1];
        vertex[0] = 1;
        vertex[k - 1] = 1;
        let key = |i: usize| (path[i].min(path[i + 1]), path[i].max(path[i + 1]));
        edge[0] = colour_of[&key(0)];
        edge[k - 2] = colour_of[&key(k - 2)];
        fill_path(&mut vertex, &mut edge);
        for (i, &p) in path.iter().enumerate() {
            out.set_vertex(g.id(p as usize), vertex[i]);
        }
        for i in 0..k - 1 {
            out.set_edge(
                Edge::new(g.id(path[i] as usize), g.id(path[i + 1] as usize)),
                edge[i],
            );
        }
    }
    if let Some(an) = &anchor {
        let [ca, _, cau, cub] = an.colours;
        let rest = (1..=4)
            .find(|&c| c != ca && c != cau && c != cub)
            .expect("four colours");
        out.permute(&[0, ca, cau, cub, rest]);
    }
    Ok(out)
}

fn check_anchor(g: &Graph, an: &Anchor) -> Result<(), ColouringError> {
    use ColouringError::BadAnchor;
    if an.a == an.b {
        return Err(BadAnchor("a and b coincide"));
    }
    if !g.contains(an.u) || !g.contains(an.a) || !g.contains(an.b) {
        return Err(BadAnchor("anchor vertex outside the graph"));
    }
    if g.degree(an.u)? != 2 || !g.has_edge(an.u, an.a) || !g.has_edge(an.u, an.b) {
        return Err(BadAnchor("u must have degree 2 with neighbours a and b"));
    }
    if g.degree(an.a)? != 3 || g.degree(an.b)? != 3 {
        return Err(BadAnchor("a and b must have degree 3"));
    }
    let [ca, cb, cau, cub] = an.colours;
    if an.colours.iter().any(|&c| !(1..=4).contains(&c)) {
        return Err(BadAnchor("colours must lie in 1..=4"));
    }
    if ca != cb {
        return Err(BadAnchor("a and b must share a colour"));
    }
    if cau == cub || cau == ca || cub == ca {
        return Err(BadAnchor("anchor colours are not proper"));
    }
    Ok(())
}

/// Maximal paths whose interior vertices lie outside `in_s` and whose ends
/// lie in it, each listed once.
fn s_paths(adj: &[Vec<u32>], in_s: &[bool]) -> Vec<Vec<u32>> {
    let mut used: HashSet<(u32, u32)> = HashSet::new();
    let mut paths = Vec::new();
    for s in 0..adj.len() {
        if !in_s[s] {
            continue;
        }
        for &first in &adj[s] {
            let s = s as u32;
            if used.contains(&(s.min(first), s.max(first))) {
                continue;
            }
            let mut path = vec![s, first];
            let (mut prev, mut cur) = (s, first);
            while !in_s[cur as usize] && adj[cur as usize].len() == 2 {
                let next = adj[cur as usize]
                    .iter()
                    .copied()
                    .find(|&w| w != prev)
                    .expect("degree 2");
                path.push(next);
                prev = cur;
                cur = next;
                if cur == s {
                    break;
                }
            }
            for w in path.windows(2) {
                used.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
            paths.push(path);
        }
    }
    paths
}

/// The paths must use every edge once, cover every vertex, and each run
/// between two distinct vertices of degree 3.
fn check_partition(g: &Graph, paths: &[Vec<u32>]) -> Result<(), ColouringError> {
    let adj = g.local_adj();
    let mut edges = 0;
    let mut covered = vec![false; g.vertex_count()];
    for p in paths {
        let (first, last) = (p[0] as usize, p[p.len() - 1] as usize);
        if first == last || adj[last].len() != 3 || p.len() < 3 {
            return Err(ColouringError::Invariant(
                "degree-3 paths do not partition the graph".into(),
            ));
        }
        edges += p.len() - 1;
        for &v in p {
            covered[v as usize] = true;
        }
    }
    if edges != g.edge_count() || covered.iter().any(|&c| !c) {
        return Err(ColouringError::Invariant(
            "degree-3 paths do not partition the graph".into(),
        ));
    }
    Ok(())
}

/// 4-total-colouring of the cycle `order[0] ... order[n-1]`.
pub(crate) fn total_colour_cycle(order: &[VertexId]) -> Colouring {
    let n = order.len();
    debug_assert!(n >= 3);
    let mut vertex = vec![0; n + 1];
    let mut edge = vec![0; n];
    vertex[0] = 1;
    vertex[n] = 1;
    edge[0] = 2;
    edge[n - 1] = 3;
    fill_path(&mut vertex, &mut edge);
    let mut out = Colouring::total(4);
    for i in 0..n {
        out.set_vertex(order[i], vertex[i]);
        out.set_edge(Edge::new(order[i], order[(i + 1) % n]), edge[i]);
    }
    out
}

/// Vertices of a connected 2-regular graph in cyclic order.
pub(crate) fn cycle_order(g: &Graph) -> Vec<VertexId> {
    let adj = g.local_adj();
    let mut order = vec![0u32];
    let mut prev = 0u32;
    let mut cur = adj[0][0];
    while cur != 0 {
        order.push(cur);
        let next = if adj[cur as usize][0] == prev {
            adj[cur as usize][1]
        } else {
            adj[cur as usize][0]
        };
        prev = cur;
        cur = next;
    }
    order.into_iter().map(|i| g.id(i as usize)).collect()
}

/// Total colouring of a 2-sparse graph: `Δ+1` colours when `Δ >= 4`, and
/// 4 colours otherwise.
pub fn total_colour_2sparse(g: &Graph) -> Result<Colouring, ColouringError> {
    require_two_sparse(g)?;
    let delta = g.max_degree()?;
    if delta >= 4 {
        let s = stable_high_degree_set(g);
        let k = delta as Colour + 1;
        let pre: BTreeMap<VertexId, Colour> = s.iter().map(|&v| (v, 1)).collect();
        let list = palette_range(2, k);
        let mut lists = ColourLists::new();
        for &v in &s {
            for w in g.neighbours(v)? {
                lists.set(Edge::new(v, w), list.clone());
            }
        }
        return total_delta4_with_palette(g, &s, &pre, &lists, k);
    }
    let bc = biconnected_components(g);
    let mut parts = Vec::with_capacity(bc.blocks.len());
    for i in 0..bc.blocks.len() {
        let vs = bc.block_vertices(i);
        let block = g.induced_subgraph(vs.iter())?;
        let c = if block.edge_count() == 1 {
            let mut c = Colouring::total(4);
            c.set_vertex(vs[0], 1);
            c.set_vertex(vs[1], 2);
            c.set_edge(Edge::new(vs[0], vs[1]), 3);
            c
        } else if block.max_degree()? == 2 {
            total_colour_cycle(&cycle_order(&block))
        } else {
            total_colour_2sparse_cubic(&block, None)?
        };
        parts.push(c);
    }
    merge_block_colourings(g, &bc, parts, Mode::Total, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_force_total_chromatic, fixtures, verify_total_colouring};

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn valid(g: &Graph, c: &Colouring) {
        let r = verify_total_colouring(g, c).unwrap();
        assert!(r.valid, "{:?}", r.violations);
    }

    #[test]
    fn star_with_precoloured_centre() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s: BTreeSet<_> = [v(0)].into();
        let pre: BTreeMap<_, _> = [(v(0), 1)].into();
        let lists = ColourLists::uniform(&g, &palette_range(2, 5));
        let c = total_colour_2sparse_delta4(&g, &s, &pre, &lists).unwrap();
        valid(&g, &c);
        assert_eq!(c.vertex_colour(v(0)), Some(1));
        for e in g.edges() {
            let leaf = e.other(v(0));
            assert_ne!(c.vertex_colour(leaf), Some(1));
            assert_ne!(c.vertex_colour(leaf), c.edge_colour(e));
        }
    }

    #[test]
    fn k24_extends_both_precolours() {
        let g = fixtures::complete_bipartite(2, 4);
        let s: BTreeSet<_> = [v(0), v(1)].into();
        let pre: BTreeMap<_, _> = [(v(0), 1), (v(1), 1)].into();
        let lists = ColourLists::uniform(&g, &palette_range(2, 5));
        let c = total_colour_2sparse_delta4(&g, &s, &pre, &lists).unwrap();
        valid(&g, &c);
        assert_eq!(c.palette, 5);
        assert_eq!(brute_force_total_chromatic(&g, 6).unwrap(), 5);
    }

    #[test]
    fn delta4_preconditions() {
        let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
            .unwrap();
        let s: BTreeSet<_> = [v(0), v(1)].into();
        let pre: BTreeMap<_, _> = [(v(0), 1), (v(1), 1)].into();
        let lists = ColourLists::uniform(&g, &palette_range(2, 5));
        assert!(matches!(
            total_colour_2sparse_delta4(&g, &s, &pre, &lists),
            Err(ColouringError::NotTwoSparse(_))
        ));

        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s: BTreeSet<_> = [v(0)].into();
        let bad: BTreeMap<_, _> = [(v(0), 2)].into();
        let lists = ColourLists::uniform(&star, &palette_range(2, 5));
        assert!(matches!(
            total_colour_2sparse_delta4(&star, &s, &bad, &lists),
            Err(ColouringError::PrecolourInList { .. })
        ));
        assert!(matches!(
            total_colour_2sparse_delta4(&star, &s, &BTreeMap::new(), &lists),
            Err(ColouringError::MissingPrecolour(_))
        ));
        assert!(matches!(
            total_colour_2sparse_delta4(
                &fixtures::claw(),
                &[v(0)].into(),
                &[(v(0), 1)].into(),
                &lists
            ),
            Err(ColouringError::DeltaTooSmall {
                found: 3,
                required: 4
            })
        ));
    }

    #[test]
    fn cubic_anchored_k23() {
        let g = fixtures::k23();
        // parts {0, 1} and {2, 3, 4}
        let an = Anchor {
            u: v(2),
            a: v(0),
            b: v(1),
            colours: [1, 1, 2, 3],
        };
        let c = total_colour_2sparse_cubic(&g, Some(an)).unwrap();
        valid(&g, &c);
        assert_eq!(c.vertex_colour(v(0)), Some(1));
        assert_eq!(c.vertex_colour(v(1)), Some(1));
        assert_eq!(c.edge_colour(Edge::from((0, 2))), Some(2));
        assert_eq!(c.edge_colour(Edge::from((1, 2))), Some(3));

        let an = Anchor {
            colours: [4, 4, 1, 3],
            ..an
        };
        let c = total_colour_2sparse_cubic(&g, Some(an)).unwrap();
        valid(&g, &c);
        assert_eq!(c.vertex_colour(v(1)), Some(4));
        assert_eq!(c.edge_colour(Edge::from((0, 2))), Some(1));
        assert_eq!(c.edge_colour(Edge::from((1, 2))), Some(3));
    }

    #[test]
    fn cubic_rejects_bad_anchors() {
        let g = fixtures::theta(&[2, 3, 3]);
        // branch vertices 0 and 1; vertex 2 is the middle of the short path
        let an = Anchor {
            u: v(3),
            a: v(0),
            b: v(4),
            colours: [1, 1, 2, 3],
        };
        assert!(matches!(
            total_colour_2sparse_cubic(&g, Some(an)),
            Err(ColouringError::BadAnchor(_))
        ));
        let an = Anchor {
            u: v(2),
            a: v(0),
            b: v(1),
            colours: [1, 2, 2, 3],
        };
        assert!(matches!(
            total_colour_2sparse_cubic(&g, Some(an)),
            Err(ColouringError::BadAnchor(_))
        ));
    }

    #[test]
    fn cubic_theta_and_subdivided_k4() {
        for g in [
            fixtures::theta(&[2, 2, 2]),
            fixtures::theta(&[2, 3, 5]),
            fixtures::subdivided_k4(),
        ] {
            let c = total_colour_2sparse_cubic(&g, None).unwrap();
            valid(&g, &c);
            for &x in g.vertices() {
                if g.degree(x).unwrap() == 3 {
                    assert_eq!(c.vertex_colour(x), Some(1));
                }
            }
        }
    }

    #[test]
    fn two_sparse_totals() {
        let claw = fixtures::claw();
        let c = total_colour_2sparse(&claw).unwrap();
        valid(&claw, &c);
        assert_eq!(c.palette, 4);
        assert_eq!(brute_force_total_chromatic(&claw, 5).unwrap(), 4);

        let c6 = fixtures::cycle(6);
        let c = total_colour_2sparse(&c6).unwrap();
        valid(&c6, &c);
        assert_eq!(c.palette, 4);
        assert_eq!(brute_force_total_chromatic(&c6, 5).unwrap(), 3);

        let k24 = fixtures::complete_bipartite(2, 4);
        let c = total_colour_2sparse(&k24).unwrap();
        valid(&k24, &c);
        assert_eq!(c.palette, 5);
    }

    #[test]
    fn blocks_are_merged_at_cut_vertices() {
        // a theta with a pendant path from an inner vertex to a triangle
        let edges = [
            (0, 2),
            (2, 1),
            (0, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            (0, 6),
            (6, 1),
            (4, 7),
            (7, 8),
            (8, 9),
            (9, 10),
            (10, 8),
        ];
        let g = Graph::from_edges(11, &edges).unwrap();
        assert!(is_two_sparse(&g).0);
        let c = total_colour_2sparse(&g).unwrap();
        assert!(c.max_colour() <= 4);
        valid(&g, &c);
    }

    #[test]
    fn cycles_of_every_length() {
        for n in 3..12 {
            let g = fixtures::cycle(n);
            let c = total_colour_cycle(&cycle_order(&g));
            valid(&g, &c);
            assert!(c.max_colour() <= 4);
        }
    }
}
