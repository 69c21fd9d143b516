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

//! Δ-edge-colouring and (Δ+1)-total-colouring of chordless graphs.
//!
//! A 2-connected chordless graph that is not 2-sparse has a split
//! `(X, Y, a, b)` of minimum `|X|` whose `X` block is 2-sparse. The `Y` side
//! is coloured first (recursively), and the colours it leaves at `a` and
//! `b` turn into colour lists for the 2-sparse lemmas on the `X` side.
//! Graphs that are not 2-connected are coloured block by block.
//!
//! The recursion runs on an explicit stack, so deep decompositions do not
//! exhaust the call stack.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::colouring::{
    aligning_permutation, merge_block_colourings, palette_range, Colour, ColourLists, Colouring,
    ColouringError, Mode,
};
use crate::connectivity::{biconnected_components, is_two_connected};
use crate::decomposition::{find_extremal_split, Split};
use crate::graph::{Edge, Graph, IdAllocator, VertexId};
use crate::oracle::{verify_edge_colouring, verify_total_colouring};
use crate::recognition::{find_chord, is_two_sparse, stable_high_degree_set};
use crate::sparse::list::{edge_colour_2sparse_with_palette, list_edge_colour_2sparse};
use crate::sparse::total::{
    cycle_order, total_colour_2sparse, total_colour_2sparse_cubic, total_colour_cycle,
    total_delta4_with_palette, Anchor,
};

/// Colours on a cut vertex and its coloured incident edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryPalette {
    pub vertex: VertexId,
    pub colours: BTreeSet<Colour>,
}

impl BoundaryPalette {
    pub fn of(g: &Graph, c: &Colouring, vertex: VertexId) -> Result<Self, ColouringError> {
        Ok(BoundaryPalette {
            vertex,
            colours: c.colours_at(g, vertex)?,
        })
    }

    /// `{1..k}` minus the boundary colours.
    pub fn complement(&self, k: Colour) -> BTreeSet<Colour> {
        palette_range(1, k)
            .difference(&self.colours)
            .copied()
            .collect()
    }
}

/// `a` and `b` merged into `contracted_vertex`, adjacent to their unique
/// neighbours `a'` and `b'` on the `Y` side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionRecord {
    pub contracted_vertex: VertexId,
    pub originals: (VertexId, VertexId),
    pub external_neighbours: (VertexId, VertexId),
}

/// Which construction extended the `Y`-side colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    Edge,
    TotalList,
    TotalContracted,
}

/// One split taken by the recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitRecord {
    pub depth: usize,
    pub kind: StepKind,
    pub a: VertexId,
    pub b: VertexId,
    pub x: Vec<VertexId>,
    pub y_size: usize,
    /// `G[X ∪ {a, b}]` in the graph being split.
    #[serde(skip)]
    pub x_side: Graph,
    pub x_block_two_sparse: bool,
    pub a_neighbours_in_x: usize,
    pub b_neighbours_in_x: usize,
}

/// What the recursion did.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub splits: Vec<SplitRecord>,
    /// Colouring subproblems solved, including the top level.
    pub calls: usize,
    pub max_depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    /// Edge colours from `1..=k`, `k >= max(Δ, 3)`.
    Edge(Colour),
    /// Total colours from `1..=k`, `k >= max(Δ + 1, 5)`.
    TotalList(Colour),
    /// Total colours from `1..=4`, `Δ <= 3`.
    Total4,
}

impl Target {
    fn mode(self) -> Mode {
        match self {
            Target::Edge(_) => Mode::Edge,
            _ => Mode::Total,
        }
    }

    fn palette(self) -> Colour {
        match self {
            Target::Edge(k) | Target::TotalList(k) => k,
            Target::Total4 => 4,
        }
    }
}

enum Task {
    Colour(Graph, usize),
    FinishBlocks(Graph, crate::connectivity::Biconnected),
    FinishSplit(Graph, Split),
    FinishContracted(Graph, Split, ContractionRecord),
}

struct Engine {
    target: Target,
    alloc: IdAllocator,
    trace: Trace,
}

impl Engine {
    fn run(g: &Graph, target: Target) -> Result<(Colouring, Trace), ColouringError> {
        let mut engine = Engine {
            target,
            alloc: IdAllocator::above(g),
            trace: Trace::default(),
        };
        let mut tasks = vec![Task::Colour(g.clone(), 0)];
        let mut done: Vec<Colouring> = Vec::new();
        while let Some(task) = tasks.pop() {
            match task {
                Task::Colour(h, depth) => engine.colour(h, depth, &mut tasks, &mut done)?,
                Task::FinishBlocks(h, bc) => {
                    let parts = done.split_off(done.len() - bc.blocks.len());
                    let merged = merge_block_colourings(
                        &h,
                        &bc,
                        parts,
                        engine.target.mode(),
                        engine.target.palette(),
                    )?;
                    done.push(merged);
                }
                Task::FinishSplit(h, split) => {
                    let y_colouring = done.pop().expect("Y side coloured");
                    let c = match engine.target {
                        Target::Edge(k) => recursive_edge_step(&h, &split, y_colouring, k)?,
                        Target::TotalList(k) => {
                            recursive_total_list_step(&h, &split, y_colouring, k)?
                        }
                        Target::Total4 => unreachable!("contracted splits finish separately"),
                    };
                    done.push(c);
                }
                Task::FinishContracted(h, split, record) => {
                    let y_colouring = done.pop().expect("Y side coloured");
                    let marker = engine.alloc.fresh();
                    done.push(recursive_total_contracted_step(
                        &h,
                        &split,
                        &record,
                        y_colouring,
                        marker,
                    )?);
                }
            }
        }
        let c = done.pop().expect("top level coloured");
        debug_assert!(done.is_empty());
        Ok((c, engine.trace))
    }

    fn colour(
        &mut self,
        g: Graph,
        depth: usize,
        tasks: &mut Vec<Task>,
        done: &mut Vec<Colouring>,
    ) -> Result<(), ColouringError> {
        self.trace.calls += 1;
        self.trace.max_depth = self.trace.max_depth.max(depth);
        if g.edge_count() == 0 {
            let mut c = Colouring::empty(self.target.mode(), self.target.palette());
            if self.target.mode() == Mode::Total {
                for &v in g.vertices() {
                    c.set_vertex(v, 1);
                }
            }
            done.push(c);
            return Ok(());
        }
        if is_two_sparse(&g).0 {
            done.push(match self.target {
                Target::Edge(k) => edge_colour_2sparse_with_palette(&g, k)?,
                Target::TotalList(k) => total_2sparse_with_palette(&g, k)?,
                Target::Total4 => total_colour_2sparse(&g)?,
            });
            return Ok(());
        }
        if !is_two_connected(&g) {
            let bc = biconnected_components(&g);
            let blocks = (0..bc.blocks.len())
                .map(|i| g.induced_subgraph(&bc.block_vertices(i)))
                .collect::<Result<Vec<_>, _>>()?;
            tasks.push(Task::FinishBlocks(g, bc));
            tasks.extend(blocks.into_iter().rev().map(|b| Task::Colour(b, depth + 1)));
            return Ok(());
        }

        let split = find_extremal_split(&g)?;
        let x_side = g.induced_subgraph(split.x.iter().chain([&split.a, &split.b]))?;
        let marker = self.alloc.fresh();
        let x_block = x_side.extended(&[marker], &[(marker, split.a), (marker, split.b)])?;
        let in_x = |v: &VertexId| split.x.binary_search(v).is_ok();
        let kind = match self.target {
            Target::Edge(_) => StepKind::Edge,
            Target::TotalList(_) => StepKind::TotalList,
            Target::Total4 => StepKind::TotalContracted,
        };
        self.trace.splits.push(SplitRecord {
            depth,
            kind,
            a: split.a,
            b: split.b,
            x: split.x.clone(),
            y_size: split.y.len(),
            x_block_two_sparse: is_two_sparse(&x_block).0,
            a_neighbours_in_x: g.neighbours(split.a)?.filter(in_x).count(),
            b_neighbours_in_x: g.neighbours(split.b)?.filter(in_x).count(),
            x_side,
        });

        if self.target == Target::Total4 {
            let (contracted, record) = contract(&g, &split, self.alloc.fresh())?;
            tasks.push(Task::FinishContracted(g, split, record));
            tasks.push(Task::Colour(contracted, depth + 1));
        } else {
            // G[Y ∪ {a, b}], without a marker
            let y_side = g.induced_subgraph(split.y.iter().chain([&split.a, &split.b]))?;
            tasks.push(Task::FinishSplit(g, split));
            tasks.push(Task::Colour(y_side, depth + 1));
        }
        Ok(())
    }
}

/// Total colouring of a 2-sparse graph from `1..=k`, `k >= max(Δ+1, 5)`:
/// `V≥3` gets colour 1 and its edges lists `{2..k}`.
fn total_2sparse_with_palette(g: &Graph, k: Colour) -> Result<Colouring, ColouringError> {
    let s = stable_high_degree_set(g);
    let pre: BTreeMap<VertexId, Colour> = s.iter().map(|&v| (v, 1)).collect();
    let mut lists = ColourLists::new();
    let list = palette_range(2, k);
    for &v in &s {
        for w in g.neighbours(v)? {
            lists.set(Edge::new(v, w), list.clone());
        }
    }
    total_delta4_with_palette(g, &s, &pre, &lists, k)
}

/// `V≥3` of the `X` block: high-degree vertices of `X`, plus `a` and `b`.
fn x_side_stable_set(g: &Graph, split: &Split) -> Result<BTreeSet<VertexId>, ColouringError> {
    let mut s = BTreeSet::from([split.a, split.b]);
    for &v in &split.x {
        if g.degree(v)? >= 3 {
            s.insert(v);
        }
    }
    Ok(s)
}

/// Extends a `k`-edge-colouring of `G[Y ∪ {a, b}]` to `g` by list-colouring
/// the 2-sparse `G[X ∪ {a, b}]`.
fn recursive_edge_step(
    g: &Graph,
    split: &Split,
    mut y_colouring: Colouring,
    k: Colour,
) -> Result<Colouring, ColouringError> {
    let y_side = g.induced_subgraph(split.y.iter().chain([&split.a, &split.b]))?;
    let x_side = g.induced_subgraph(split.x.iter().chain([&split.a, &split.b]))?;
    let c_a = BoundaryPalette::of(&y_side, &y_colouring, split.a)?;
    let c_b = BoundaryPalette::of(&y_side, &y_colouring, split.b)?;
    let (free_a, free_b, all) = (c_a.complement(k), c_b.complement(k), palette_range(1, k));
    let mut lists = ColourLists::new();
    for e in x_side.edges() {
        let list = if e.contains(split.a) {
            free_a.clone()
        } else if e.contains(split.b) {
            free_b.clone()
        } else {
            all.clone()
        };
        lists.set(e, list);
    }
    let s = x_side_stable_set(g, split)?;
    let x_colouring = list_edge_colour_2sparse(&x_side, &s, &lists)?;
    y_colouring.absorb(&x_colouring, &[]);
    y_colouring.palette = k;
    Ok(y_colouring)
}

/// Extends a `k`-total-colouring (`k >= 5`) of `G[Y ∪ {a, b}]` to `g`: `a`
/// and `b` keep their colours, other `S` vertices get 1, and the extension
/// lemma colours the rest of `G[X ∪ {a, b}]`.
fn recursive_total_list_step(
    g: &Graph,
    split: &Split,
    mut y_colouring: Colouring,
    k: Colour,
) -> Result<Colouring, ColouringError> {
    let y_side = g.induced_subgraph(split.y.iter().chain([&split.a, &split.b]))?;
    let x_side = g.induced_subgraph(split.x.iter().chain([&split.a, &split.b]))?;
    let c_a = BoundaryPalette::of(&y_side, &y_colouring, split.a)?;
    let c_b = BoundaryPalette::of(&y_side, &y_colouring, split.b)?;
    let s = x_side_stable_set(g, split)?;
    let mut pre = BTreeMap::new();
    for &v in &s {
        let c = if v == split.a || v == split.b {
            y_colouring
                .vertex_colour(v)
                .ok_or(ColouringError::MissingPrecolour(v))?
        } else {
            1
        };
        pre.insert(v, c);
    }
    let (free_a, free_b, rest) = (c_a.complement(k), c_b.complement(k), palette_range(2, k));
    let mut lists = ColourLists::new();
    for &v in &s {
        let list = if v == split.a {
            &free_a
        } else if v == split.b {
            &free_b
        } else {
            &rest
        };
        for w in x_side.neighbours(v)? {
            lists.set(Edge::new(v, w), list.clone());
        }
    }
    let x_colouring = total_delta4_with_palette(&x_side, &s, &pre, &lists, k)?;
    y_colouring.absorb(&x_colouring, &[]);
    y_colouring.palette = k;
    Ok(y_colouring)
}

/// `G[Y ∪ {a, b}]` with `a` and `b` contracted into `w`.
fn contract(
    g: &Graph,
    split: &Split,
    w: VertexId,
) -> Result<(Graph, ContractionRecord), ColouringError> {
    let in_y = |v: &VertexId| split.y.binary_search(v).is_ok();
    let only_y_neighbour = |x: VertexId| -> Result<VertexId, ColouringError> {
        let ys: Vec<VertexId> = g.neighbours(x)?.filter(in_y).collect();
        match ys.as_slice() {
            [y] => Ok(*y),
            _ => Err(ColouringError::Invariant(format!(
                "{x} has {} neighbours in Y, expected 1",
                ys.len()
            ))),
        }
    };
    let (a1, b1) = (only_y_neighbour(split.a)?, only_y_neighbour(split.b)?);
    if a1 == b1 {
        return Err(ColouringError::Invariant(format!(
            "a and b share their Y neighbour {a1}"
        )));
    }
    let contracted = g
        .induced_subgraph(&split.y)?
        .extended(&[w], &[(w, a1), (w, b1)])?;
    Ok((
        contracted,
        ContractionRecord {
            contracted_vertex: w,
            originals: (split.a, split.b),
            external_neighbours: (a1, b1),
        },
    ))
}

/// Lifts a 4-total-colouring of the contracted `Y` block and an anchored
/// colouring of the `X` block (marker `marker`) to `g`.
fn recursive_total_contracted_step(
    g: &Graph,
    split: &Split,
    record: &ContractionRecord,
    mut y_colouring: Colouring,
    marker: VertexId,
) -> Result<Colouring, ColouringError> {
    let w = record.contracted_vertex;
    let (a1, b1) = record.external_neighbours;
    let missing = || ColouringError::Invariant("contracted block is not fully coloured".into());
    let cw = y_colouring.vertex_colour(w).ok_or_else(missing)?;
    let cwa = y_colouring
        .edge_colour(Edge::new(w, a1))
        .ok_or_else(missing)?;
    let cwb = y_colouring
        .edge_colour(Edge::new(w, b1))
        .ok_or_else(missing)?;
    let perm = aligning_permutation(4, &[(cw, 1), (cwa, 2), (cwb, 3)], &[], &BTreeSet::new())
        .ok_or_else(|| {
            ColouringError::Invariant("contracted vertex is not properly coloured".into())
        })?;
    y_colouring.permute(&perm);

    let x_block = g
        .induced_subgraph(split.x.iter().chain([&split.a, &split.b]))?
        .extended(&[marker], &[(marker, split.a), (marker, split.b)])?;
    let anchor = Anchor {
        u: marker,
        a: split.a,
        b: split.b,
        colours: [1, 1, 2, 3],
    };
    let x_colouring = total_colour_2sparse_cubic(&x_block, Some(anchor))?;

    let mut out = Colouring::total(4);
    out.absorb(&x_colouring, &[marker]);
    out.absorb(&y_colouring, &[w]);
    out.set_edge(Edge::new(split.a, a1), 2);
    out.set_edge(Edge::new(split.b, b1), 3);
    Ok(out)
}

fn require_chordless(g: &Graph) -> Result<(), ColouringError> {
    match find_chord(g) {
        Some(w) => Err(ColouringError::NotChordless(Box::new(w))),
        None => Ok(()),
    }
}

fn require_delta3(g: &Graph) -> Result<usize, ColouringError> {
    let delta = g.max_degree()?;
    if delta < 3 {
        return Err(ColouringError::DeltaTooSmall {
            found: delta,
            required: 3,
        });
    }
    Ok(delta)
}

fn checked(g: &Graph, c: Colouring) -> Result<Colouring, ColouringError> {
    let report = match c.mode() {
        Mode::Edge => verify_edge_colouring(g, &c),
        Mode::Total => verify_total_colouring(g, &c),
    }
    .map_err(|e| ColouringError::Invariant(e.to_string()))?;
    if !report.valid || c.max_colour() > c.palette {
        return Err(ColouringError::Invariant(format!(
            "result is not a proper {}-colouring: {:?}",
            c.palette,
            report.violations.first()
        )));
    }
    Ok(c)
}

/// `Δ`-edge-colouring of a chordless graph with `Δ >= 3`, and what the
/// recursion did.
pub fn edge_colour_chordless_traced(g: &Graph) -> Result<(Colouring, Trace), ColouringError> {
    require_chordless(g)?;
    let delta = require_delta3(g)? as Colour;
    let (c, trace) = Engine::run(g, Target::Edge(delta))?;
    Ok((checked(g, c)?, trace))
}

/// `Δ`-edge-colouring of a chordless graph with `Δ >= 3`.
pub fn edge_colour_chordless(g: &Graph) -> Result<Colouring, ColouringError> {
    edge_colour_chordless_traced(g).map(|(c, _)| c)
}

/// `(Δ+1)`-total-colouring of a chordless graph with `Δ >= 3`, and what the
/// recursion did.
pub fn total_colour_chordless_traced(g: &Graph) -> Result<(Colouring, Trace), ColouringError> {
    require_chordless(g)?;
    let delta = require_delta3(g)? as Colour;
    let target = if delta == 3 {
        Target::Total4
    } else {
        Target::TotalList(delta + 1)
    };
    let (c, trace) = Engine::run(g, target)?;
    Ok((checked(g, c)?, trace))
}

/// `(Δ+1)`-total-colouring of a chordless graph with `Δ >= 3`.
pub fn total_colour_chordless(g: &Graph) -> Result<Colouring, ColouringError> {
    total_colour_chordless_traced(g).map(|(c, _)| c)
}

/// Colours each biconnected component of a chordless graph with `Δ >= 3`
/// on its own over the global palette, then relabels at cut vertices.
pub fn merge_articulation_blocks(g: &Graph, mode: Mode) -> Result<Colouring, ColouringError> {
    require_chordless(g)?;
    let delta = require_delta3(g)? as Colour;
    let target = match mode {
        Mode::Edge => Target::Edge(delta),
        Mode::Total if delta == 3 => Target::Total4,
        Mode::Total => Target::TotalList(delta + 1),
    };
    let bc = biconnected_components(g);
    let mut parts = Vec::with_capacity(bc.blocks.len());
    for i in 0..bc.blocks.len() {
        let block = g.induced_subgraph(&bc.block_vertices(i))?;
        parts.push(Engine::run(&block, target)?.0);
    }
    let merged = merge_block_colourings(g, &bc, parts, mode, target.palette())?;
    checked(g, merged)
}

/// Colours a graph with `Δ <= 2` (disjoint paths and cycles) directly:
/// edges with 2 colours, or 3 when there is an odd cycle; totals with 3
/// colours on paths and 4 on cycles. The palette is the largest colour used.
pub fn colour_low_degree(g: &Graph, mode: Mode) -> Result<Colouring, ColouringError> {
    let delta = g.max_degree()?;
    if delta > 2 {
        return Err(ColouringError::WrongDelta {
            found: delta,
            required: 2,
        });
    }
    let mut out = Colouring::empty(mode, 0);
    for comp in g.connected_components() {
        let h = g.induced_subgraph(&comp)?;
        let is_cycle = h.vertex_count() >= 3 && h.edge_count() == h.vertex_count();
        if is_cycle {
            let order = cycle_order(&h);
            match mode {
                Mode::Edge => {
                    let n = order.len();
                    for i in 0..n {
                        let c = if n % 2 == 1 && i == n - 1 {
                            3
                        } else {
                            1 + i as Colour % 2
                        };
                        out.set_edge(Edge::new(order[i], order[(i + 1) % n]), c);
                    }
                }
                Mode::Total => out.absorb(&total_colour_cycle(&order), &[]),
            }
            continue;
        }
        // a path: walk from an end
        let start = comp
            .iter()
            .copied()
            .find(|&v| h.degree(v) != Ok(2))
            .expect("a path has an end");
        let mut order = vec![start];
        let mut prev = None;
        let mut cur = start;
        while let Some(next) = h.neighbours(cur)?.find(|&w| Some(w) != prev) {
            order.push(next);
            prev = Some(cur);
            cur = next;
        }
        for (i, &v) in order.iter().enumerate() {
            if mode == Mode::Total {
                out.set_vertex(v, (2 * i as Colour) % 3 + 1);
            }
            if let Some(&w) = order.get(i + 1) {
                let c = match mode {
                    Mode::Edge => 1 + i as Colour % 2,
                    Mode::Total => (2 * i as Colour + 1) % 3 + 1,
                };
                out.set_edge(Edge::new(v, w), c);
            }
        }
    }
    out.palette = out.max_colour();
    checked(g, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn claw_theta_pair_and_subdivided_k4() {
        let cases = [
            (fixtures::claw(), 3, 4),
            (fixtures::theta_pair(), 4, 5),
            (fixtures::subdivided_k4(), 3, 4),
            (fixtures::k23(), 3, 4),
        ];
        for (g, edge, total) in cases {
            assert_eq!(edge_colour_chordless(&g).unwrap().palette, edge);
            let t = total_colour_chordless(&g).unwrap();
            assert_eq!(t.palette, total);
            assert!(t.max_colour() <= total);
        }
    }

    #[test]
    fn theta_pair_records_its_split() {
        let (_, trace) = edge_colour_chordless_traced(&fixtures::theta_pair()).unwrap();
        assert_eq!(trace.splits.len(), 1);
        let s = &trace.splits[0];
        assert_eq!((s.a, s.b), (fixtures::U, fixtures::W));
        assert_eq!(s.x, vec![fixtures::P, fixtures::Q]);
        assert!(s.x_block_two_sparse);
        assert_eq!((s.a_neighbours_in_x, s.b_neighbours_in_x), (2, 2));
        assert_eq!(s.kind, StepKind::Edge);
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            edge_colour_chordless(&fixtures::complete(4)),
            Err(ColouringError::NotChordless(_))
        ));
        assert_eq!(
            total_colour_chordless(&fixtures::cycle(5)),
            Err(ColouringError::DeltaTooSmall {
                found: 2,
                required: 3
            })
        );
    }

    fn linked_squares() -> Graph {
        // squares a p b q and a' c b' d joined by aa' and bb'
        Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (2, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn contracted_case() {
        // degree-3 vertices are adjacent: not 2-sparse, Δ = 3
        let g = linked_squares();
        assert!(crate::oracle::brute_force_is_chordless(&g));
        let (c, trace) = total_colour_chordless_traced(&g).unwrap();
        assert_eq!(c.palette, 4);
        assert!(trace
            .splits
            .iter()
            .all(|s| s.kind == StepKind::TotalContracted && s.x_block_two_sparse));
        assert!(!trace.splits.is_empty());
    }

    #[test]
    fn merging_blocks() {
        // two claws sharing a leaf
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (4, 3), (4, 5), (4, 6)]).unwrap();
        let c = merge_articulation_blocks(&g, Mode::Edge).unwrap();
        assert_eq!(c.palette, 3);
        // two K_{2,3} sharing a degree-2 vertex
        let mut edges = Vec::new();
        for a in [0, 1] {
            for b in [2, 3, 4] {
                edges.push((a, b));
            }
        }
        for a in [5, 6] {
            for b in [4, 7, 8] {
                edges.push((a, b));
            }
        }
        let g = Graph::from_edges(9, &edges).unwrap();
        let c = merge_articulation_blocks(&g, Mode::Total).unwrap();
        // the shared vertex has degree 4
        assert_eq!(c.palette, 5);
        // two K_{2,3} joined at a degree-2 vertex by a bridge keep Δ = 3
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (l, r) in [([0, 1], [2, 3, 4]), ([5, 6], [7, 8, 9])] {
            for a in l {
                for b in r {
                    edges.push((a, b));
                }
            }
        }
        edges.push((4, 9));
        let g = Graph::from_edges(10, &edges).unwrap();
        let c = merge_articulation_blocks(&g, Mode::Total).unwrap();
        assert_eq!(c.palette, 4);
        let single = merge_articulation_blocks(&fixtures::k23(), Mode::Total).unwrap();
        assert_eq!(single.palette, 4);
    }

    #[test]
    fn low_degree_graphs() {
        for n in 3..10 {
            let c = colour_low_degree(&fixtures::cycle(n), Mode::Edge).unwrap();
            assert_eq!(c.palette, if n % 2 == 0 { 2 } else { 3 });
            let t = colour_low_degree(&fixtures::cycle(n), Mode::Total).unwrap();
            assert!(t.palette <= 4);
        }
        for n in 1..8 {
            let t = colour_low_degree(&fixtures::path(n), Mode::Total).unwrap();
            assert!(t.palette <= 3);
        }
        assert!(colour_low_degree(&fixtures::claw(), Mode::Edge).is_err());
    }
}
