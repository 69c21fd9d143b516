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

//! List edge-colouring of bipartite graphs whose high-degree vertices sit on
//! one side with uniform lists, and its extension to 2-sparse graphs.

use std::collections::{BTreeSet, VecDeque};

use super::konig::konig_local;
use crate::colouring::{palette_range, Colour, ColourLists, Colouring, ColouringError};
use crate::graph::{Edge, Graph};
use crate::recognition::{is_two_sparse, one_end_bipartite, stable_high_degree_set};

/// An edge index together with its other end.
type EdgeEnd = (u32, u32);

/// Checks that every edge has a list, that lists are uniform at each vertex
/// of `uniform_at`, and that `|L(uv)| >= max(deg u, deg v)`.
pub(crate) fn check_lists(
    g: &Graph,
    lists: &ColourLists,
    uniform_at: &BTreeSet<crate::graph::VertexId>,
) -> Result<(), ColouringError> {
    for e in g.edges() {
        let list = lists.get(e).ok_or(ColouringError::MissingList(e))?;
        let (u, v) = e.ends();
        let needed = g.degree(u)?.max(g.degree(v)?);
        if list.len() < needed {
            return Err(ColouringError::ListTooShort {
                edge: e,
                len: list.len(),
                needed,
            });
        }
    }
    for &x in uniform_at {
        let mut first: Option<&BTreeSet<Colour>> = None;
        for w in g.neighbours(x)? {
            let l = lists.get(Edge::new(x, w)).expect("checked above");
            match first {
                None => first = Some(l),
                Some(f) if f != l => return Err(ColouringError::NonUniformLists(x)),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Working state: the graph with edges deleted as they get coloured.
struct Residual<'g> {
    g: &'g Graph,
    ends: Vec<(u32, u32)>,
    // incident (neighbour, edge) pairs
    inc: Vec<Vec<(u32, u32)>>,
    alive: Vec<bool>,
    degree: Vec<usize>,
    lists: Vec<BTreeSet<Colour>>,
    colour: Vec<Colour>,
}

impl<'g> Residual<'g> {
    fn new(g: &'g Graph, lists: &ColourLists) -> Self {
        let adj = g.local_adj();
        let mut ends = Vec::new();
        let mut inc = vec![Vec::new(); adj.len()];
        let mut edge_lists = Vec::new();
        for (i, l) in adj.iter().enumerate() {
            for &j in l {
                if j as usize > i {
                    let id = ends.len() as u32;
                    ends.push((i as u32, j));
                    inc[i].push((j, id));
                    inc[j as usize].push((i as u32, id));
                    let e = Edge::new(g.id(i), g.id(j as usize));
                    edge_lists.push(lists.get(e).cloned().unwrap_or_default());
                }
            }
        }
        let m = ends.len();
        Residual {
            g,
            ends,
            degree: adj.iter().map(Vec::len).collect(),
            inc,
            alive: vec![true; m],
            lists: edge_lists,
            colour: vec![0; m],
        }
    }

    fn live_edges(&self, v: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.inc[v as usize]
            .iter()
            .copied()
            .filter(|&(_, e)| self.alive[e as usize])
    }

    fn kill(&mut self, e: u32) {
        self.alive[e as usize] = false;
        let (p, q) = self.ends[e as usize];
        self.degree[p as usize] -= 1;
        self.degree[q as usize] -= 1;
    }

    fn name(&self, e: u32) -> String {
        let (p, q) = self.ends[e as usize];
        Edge::new(self.g.id(p as usize), self.g.id(q as usize)).to_string()
    }

    /// First `Y`-side vertex (in id order) of residual degree 2 whose two
    /// edges carry different lists.
    fn find_mixed(&self, in_x: &[bool]) -> Option<(u32, EdgeEnd, EdgeEnd)> {
        (0..self.inc.len() as u32)
            .filter(|&y| !in_x[y as usize] && self.degree[y as usize] == 2)
            .find_map(|y| {
                let mut it = self.live_edges(y);
                let first = it.next()?;
                let second = it.next()?;
                (self.lists[first.1 as usize] != self.lists[second.1 as usize])
                    .then_some((y, first, second))
            })
    }

    /// Peels one maximal path starting `y, x, ...` and colours it greedily.
    fn peel_path(
        &mut self,
        y: u32,
        (x, xy): (u32, u32),
        (_, x2y): (u32, u32),
    ) -> Result<(), ColouringError> {
        let start = *self.lists[xy as usize]
            .difference(&self.lists[x2y as usize])
            .next()
            .expect("caller orients the pair");
        let mut path = vec![xy];
        let mut at = x;
        let mut closed = false;
        while self.degree[at as usize] == 2 {
            let prev = *path.last().unwrap();
            let (next, e) = self
                .live_edges(at)
                .find(|&(_, e)| e != prev)
                .expect("degree two");
            path.push(e);
            at = next;
            if at == y {
                closed = true;
                break;
            }
        }
        self.colour[xy as usize] = start;
        let mut prev = start;
        for (idx, &e) in path.iter().enumerate().skip(1) {
            let closing = closed && idx == path.len() - 1;
            let c = self.lists[e as usize]
                .iter()
                .copied()
                .find(|&c| c != prev && !(closing && c == start))
                .ok_or_else(|| ColouringError::Exhausted(self.name(e)))?;
            self.colour[e as usize] = c;
            prev = c;
        }
        for &e in &path {
            self.kill(e);
        }
        if !closed {
            // the far end keeps its remaining edges away from the last colour
            let rest: Vec<u32> = self.live_edges(at).map(|(_, e)| e).collect();
            for e in rest {
                self.lists[e as usize].remove(&prev);
            }
        }
        Ok(())
    }

    /// Remaining components have one list each; colour them by König.
    fn finish_uniform(&mut self) -> Result<(), ColouringError> {
        let n = self.inc.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for start in 0..n as u32 {
            if seen[start as usize] || self.degree[start as usize] == 0 {
                continue;
            }
            seen[start as usize] = true;
            queue.push_back(start);
            let mut verts = Vec::new();
            let mut comp_edges = Vec::new();
            while let Some(v) = queue.pop_front() {
                verts.push(v);
                for (w, e) in self.live_edges(v).collect::<Vec<_>>() {
                    if v < w {
                        comp_edges.push(e);
                    }
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
            let list: Vec<Colour> = self.lists[comp_edges[0] as usize].iter().copied().collect();
            if comp_edges
                .iter()
                .any(|&e| self.lists[e as usize].iter().ne(list.iter()))
            {
                return Err(ColouringError::Invariant(
                    "component lists not uniform after peeling".into(),
                ));
            }
            verts.sort_unstable();
            let pos = |v: u32| verts.binary_search(&v).unwrap() as u32;
            let local: Vec<(u32, u32)> = comp_edges
                .iter()
                .map(|&e| {
                    let (p, q) = self.ends[e as usize];
                    (pos(p), pos(q))
                })
                .collect();
            let delta = verts
                .iter()
                .map(|&v| self.degree[v as usize])
                .max()
                .unwrap();
            if list.len() < delta {
                return Err(ColouringError::Exhausted(self.name(comp_edges[0])));
            }
            let colours = konig_local(verts.len(), &local, delta);
            for (&e, c) in comp_edges.iter().zip(colours) {
                self.colour[e as usize] = list[c as usize];
            }
            for &e in &comp_edges {
                self.kill(e);
            }
        }
        Ok(())
    }
}

/// Runs the peeling algorithm; preconditions already checked.
pub(crate) fn list_colour_bipartite_onto(
    g: &Graph,
    in_x: &[bool],
    lists: &ColourLists,
    out: &mut Colouring,
) -> Result<(), ColouringError> {
    let mut r = Residual::new(g, lists);
    while let Some((y, mut first, mut second)) = r.find_mixed(in_x) {
        if r.lists[first.1 as usize].is_subset(&r.lists[second.1 as usize]) {
            std::mem::swap(&mut first, &mut second);
        }
        r.peel_path(y, first, second)?;
    }
    r.finish_uniform()?;
    for (e, &(p, q)) in r.ends.iter().enumerate() {
        out.set_edge(Edge::new(g.id(p as usize), g.id(q as usize)), r.colour[e]);
    }
    Ok(())
}

/// List edge-colouring of a bipartite graph with bipartition `(X, Y)`, all
/// vertices of degree at least three in `X`, uniform lists at each `X`
/// vertex and `|L(uv)| >= max(deg u, deg v)`.
pub fn list_edge_colour_bipartite(
    g: &Graph,
    bipartition: (
        &BTreeSet<crate::graph::VertexId>,
        &BTreeSet<crate::graph::VertexId>,
    ),
    lists: &ColourLists,
) -> Result<Colouring, ColouringError> {
    let (x, y) = bipartition;
    let mut in_x = vec![false; g.vertex_count()];
    for (i, &v) in g.vertices().iter().enumerate() {
        match (x.contains(&v), y.contains(&v)) {
            (true, false) => in_x[i] = true,
            (false, true) => {}
            _ => {
                return Err(ColouringError::BadBipartition(format!(
                    "vertex {v} must be on exactly one side"
                )))
            }
        }
    }
    for e in g.edges() {
        let (u, v) = e.ends();
        if x.contains(&u) == x.contains(&v) {
            return Err(ColouringError::BadBipartition(format!(
                "edge {e} does not cross"
            )));
        }
    }
    for &v in y {
        if g.degree(v)? >= 3 {
            return Err(ColouringError::HighDegreeOutside(v));
        }
    }
    check_lists(g, lists, x)?;
    let palette = lists
        .iter()
        .flat_map(|(_, l)| l.iter().copied())
        .max()
        .unwrap_or(0);
    let mut out = Colouring::edge(palette);
    list_colour_bipartite_onto(g, &in_x, lists, &mut out)?;
    Ok(out)
}

/// Greedy colouring of edges with both ends of degree at most two, from
/// their lists, avoiding colours already on adjacent edges.
pub(crate) fn greedy_low_edges(
    g: &Graph,
    in_s: &[bool],
    lists: &ColourLists,
    out: &mut Colouring,
) -> Result<(), ColouringError> {
    for e in g.edges() {
        let (u, v) = e.ends();
        if in_s[g.local(u).unwrap()] || in_s[g.local(v).unwrap()] {
            continue;
        }
        let used: BTreeSet<Colour> = g
            .neighbours(u)?
            .map(|w| Edge::new(u, w))
            .chain(g.neighbours(v)?.map(|w| Edge::new(v, w)))
            .filter(|&f| f != e)
            .filter_map(|f| out.edge_colour(f))
            .collect();
        let c = lists
            .get(e)
            .ok_or(ColouringError::MissingList(e))?
            .iter()
            .copied()
            .find(|c| !used.contains(c))
            .ok_or_else(|| ColouringError::Exhausted(e.to_string()))?;
        out.set_edge(e, c);
    }
    Ok(())
}

pub(crate) fn check_stable_cover(
    g: &Graph,
    s: &BTreeSet<crate::graph::VertexId>,
) -> Result<Vec<bool>, ColouringError> {
    let mut in_s = vec![false; g.vertex_count()];
    for &v in s {
        in_s[g
            .local(v)
            .ok_or(crate::graph::GraphError::UnknownVertex(v))?] = true;
    }
    for (i, l) in g.local_adj().iter().enumerate() {
        if l.len() >= 3 && !in_s[i] {
            return Err(ColouringError::HighDegreeOutside(g.id(i)));
        }
        if in_s[i] {
            if let Some(&j) = l.iter().find(|&&j| in_s[j as usize]) {
                return Err(crate::recognition::RecognitionError::NotStable(
                    g.id(i),
                    g.id(j as usize),
                )
                .into());
            }
        }
    }
    Ok(in_s)
}

/// List edge-colouring of a 2-sparse graph. `s` is stable and holds every
/// vertex of degree at least three; lists are uniform at `s` vertices, long
/// enough for both ends, and of size at least 3 on edges avoiding `s`.
pub fn list_edge_colour_2sparse(
    g: &Graph,
    s: &BTreeSet<crate::graph::VertexId>,
    lists: &ColourLists,
) -> Result<Colouring, ColouringError> {
    if let (false, Some(e)) = is_two_sparse(g) {
        return Err(ColouringError::NotTwoSparse(e));
    }
    let in_s = check_stable_cover(g, s)?;
    check_lists(g, lists, s)?;
    for e in g.edges() {
        let (u, v) = e.ends();
        let touches = in_s[g.local(u).unwrap()] || in_s[g.local(v).unwrap()];
        let len = lists.get(e).map_or(0, BTreeSet::len);
        if !touches && len < 3 {
            return Err(ColouringError::ListTooShort {
                edge: e,
                len,
                needed: 3,
            });
        }
    }
    let palette = lists
        .iter()
        .flat_map(|(_, l)| l.iter().copied())
        .max()
        .unwrap_or(0);
    let mut out = Colouring::edge(palette);
    list_colour_2sparse_onto(g, s, &in_s, lists, &mut out)?;
    Ok(out)
}

pub(crate) fn list_colour_2sparse_onto(
    g: &Graph,
    s: &BTreeSet<crate::graph::VertexId>,
    in_s: &[bool],
    lists: &ColourLists,
    out: &mut Colouring,
) -> Result<(), ColouringError> {
    let b = one_end_bipartite(g, s)?;
    let b_in_x: Vec<bool> = b.vertices().iter().map(|v| s.contains(v)).collect();
    list_colour_bipartite_onto(&b, &b_in_x, lists, out)?;
    greedy_low_edges(g, in_s, lists, out)
}

/// `Δ`-edge-colouring of a 2-sparse graph with `Δ >= 3`.
pub fn edge_colour_2sparse(g: &Graph) -> Result<Colouring, ColouringError> {
    let delta = g.max_degree()?;
    if delta < 3 {
        return Err(ColouringError::DeltaTooSmall {
            found: delta,
            required: 3,
        });
    }
    edge_colour_2sparse_with_palette(g, delta as Colour)
}

/// Edge-colours a 2-sparse graph from `1..=k`, `k >= max(Δ, 3)`.
pub(crate) fn edge_colour_2sparse_with_palette(
    g: &Graph,
    k: Colour,
) -> Result<Colouring, ColouringError> {
    if let (false, Some(e)) = is_two_sparse(g) {
        return Err(ColouringError::NotTwoSparse(e));
    }
    let s = stable_high_degree_set(g);
    let in_s: Vec<bool> = g.vertices().iter().map(|v| s.contains(v)).collect();
    let lists = ColourLists::uniform(g, &palette_range(1, k));
    let mut out = Colouring::edge(k);
    list_colour_2sparse_onto(g, &s, &in_s, &lists, &mut out)?;
    Ok(out)
}
