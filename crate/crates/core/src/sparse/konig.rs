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

use crate::colouring::{Colour, Colouring, ColouringError};
use crate::graph::{Edge, Graph};

const NONE: u32 = u32::MAX;

/// Colours the edges of a bipartite graph with `Δ` colours by alternating
/// path swaps. `edges` are local index pairs; the result is 0-based per edge.
/// O(m·n).
pub(crate) fn konig_local(n: usize, edges: &[(u32, u32)], delta: usize) -> Vec<u32> {
    // at[v * delta + c] = edge coloured c at v
    let mut at = vec![NONE; n * delta];
    let mut colour = vec![NONE; edges.len()];
    let free = |at: &[u32], v: u32| {
        (0..delta)
            .find(|&c| at[v as usize * delta + c] == NONE)
            .expect("degree bound")
    };
    let mut path = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let alpha = free(&at, u);
        let beta = free(&at, v);
        if at[v as usize * delta + alpha] != NONE {
            // walk the alpha/beta path from v; it cannot reach u
            path.clear();
            let mut x = v;
            let mut c = alpha;
            loop {
                let e = at[x as usize * delta + c];
                if e == NONE {
                    break;
                }
                path.push(e);
                let (p, q) = edges[e as usize];
                x = if p == x { q } else { p };
                c = if c == alpha { beta } else { alpha };
            }
            for &e in &path {
                let (p, q) = edges[e as usize];
                let c = colour[e as usize] as usize;
                at[p as usize * delta + c] = NONE;
                at[q as usize * delta + c] = NONE;
            }
            for &e in &path {
                let (p, q) = edges[e as usize];
                let c = if colour[e as usize] as usize == alpha {
                    beta
                } else {
                    alpha
                };
                colour[e as usize] = c as u32;
                at[p as usize * delta + c] = e;
                at[q as usize * delta + c] = e;
            }
        }
        debug_assert_eq!(at[u as usize * delta + alpha], NONE);
        debug_assert_eq!(at[v as usize * delta + alpha], NONE);
        colour[i] = alpha as u32;
        at[u as usize * delta + alpha] = i as u32;
        at[v as usize * delta + alpha] = i as u32;
    }
    colour
}

pub(crate) fn local_edges(g: &Graph) -> Vec<(u32, u32)> {
    g.local_adj()
        .iter()
        .enumerate()
        .flat_map(|(i, l)| {
            l.iter()
                .filter(move |&&j| j as usize > i)
                .map(move |&j| (i as u32, j))
        })
        .collect()
}

/// Colours every edge of bipartite `g` from `palette` (ascending), which
/// must hold at least `Δ(g)` colours.
pub(crate) fn konig_onto(g: &Graph, palette: &[Colour], out: &mut Colouring) {
    if g.edge_count() == 0 {
        return;
    }
    let delta = g.max_degree().unwrap_or(0);
    debug_assert!(palette.len() >= delta);
    let edges = local_edges(g);
    let colours = konig_local(g.vertex_count(), &edges, delta);
    for (&(u, v), c) in edges.iter().zip(colours) {
        out.set_edge(
            Edge::new(g.id(u as usize), g.id(v as usize)),
            palette[c as usize],
        );
    }
}

/// Proper edge colouring of a bipartite graph with exactly `Δ(g)` colours.
pub fn konig_edge_colour(g: &Graph) -> Result<Colouring, ColouringError> {
    if g.is_bipartite().is_none() {
        return Err(ColouringError::NotBipartite);
    }
    let delta = g.max_degree().unwrap_or(0) as Colour;
    let mut out = Colouring::edge(delta);
    let palette: Vec<Colour> = (1..=delta).collect();
    konig_onto(g, &palette, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{fixtures, verify_edge_colouring};

    fn check(g: &Graph, expected_palette: usize) {
        let c = konig_edge_colour(g).unwrap();
        let report = verify_edge_colouring(g, &c).unwrap();
        assert!(report.valid, "{report:?}");
        assert_eq!(report.colours_used, expected_palette);
        assert_eq!(c.palette as usize, expected_palette);
    }

    #[test]
    fn square_alternates() {
        let g = fixtures::cycle(4);
        check(&g, 2);
        let c = konig_edge_colour(&g).unwrap();
        let cols: Vec<_> = c.edge_colours().values().copied().collect();
        assert_eq!(cols.iter().filter(|&&x| x == 1).count(), 2);
    }

    #[test]
    fn claw_and_k33() {
        check(&fixtures::claw(), 3);
        check(&fixtures::complete_bipartite(3, 3), 3);
        check(&fixtures::complete_bipartite(4, 7), 7);
    }

    #[test]
    fn odd_cycle_rejected() {
        assert_eq!(
            konig_edge_colour(&fixtures::cycle(5)),
            Err(ColouringError::NotBipartite)
        );
    }
}
