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

//! Four-colour total extension along a path with precoloured ends.

use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, Colouring, ColouringError};
use crate::graph::{Edge, VertexId};

/// Precoloured elements at both ends of a path `p1 ... pk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathEnds {
    /// Colour of `p1`.
    pub start: Colour,
    /// Colour of `p1 p2`.
    pub first_edge: Colour,
    /// Colour of `p(k-1) pk`.
    pub last_edge: Colour,
    /// Colour of `pk`; must equal `start`.
    pub end: Colour,
}

impl PathEnds {
    pub fn new(start: Colour, first_edge: Colour, last_edge: Colour, end: Colour) -> Self {
        PathEnds {
            start,
            first_edge,
            last_edge,
            end,
        }
    }

    fn check(&self, k: usize) -> Result<(), ColouringError> {
        use ColouringError::InconsistentPrecolouring as Bad;
        let all = [self.start, self.first_edge, self.last_edge, self.end];
        if all.iter().any(|&c| !(1..=4).contains(&c)) {
            return Err(Bad("colours must lie in 1..=4"));
        }
        if self.start != self.end {
            return Err(Bad("end vertices differ"));
        }
        if self.start == self.first_edge || self.end == self.last_edge {
            return Err(Bad("end vertex shares a colour with its edge"));
        }
        if k == 3 && self.first_edge == self.last_edge {
            return Err(Bad("the two edges meet at the middle vertex"));
        }
        Ok(())
    }
}

/// Relabelling to the normal form `start = 1`, `first_edge = 2`,
/// `last_edge ∈ {2, 3}`. Returns the inverse map (normal colour -> actual).
fn normalising_inverse(start: Colour, first: Colour, last: Colour) -> [Colour; 5] {
    let mut inv = [0; 5];
    inv[1] = start;
    inv[2] = first;
    let mut next = 3;
    if last != first {
        inv[3] = last;
        next = 4;
    }
    for c in 1..=4 {
        if !inv[1..next].contains(&c) {
            inv[next] = c;
            next += 1;
        }
    }
    inv
}

/// Fills the interior of a path of `k >= 3` vertices. `vertex[i]` and
/// `edge[i]` (edge `p_i p_{i+1}`) must already hold the four precoloured
/// elements; everything else is overwritten.
pub(crate) fn fill_path(vertex: &mut [Colour], edge: &mut [Colour]) {
    let mut lo = 0;
    let mut hi = vertex.len() - 1;
    loop {
        let inv = normalising_inverse(vertex[lo], edge[lo], edge[hi - 1]);
        match hi - lo + 1 {
            3 => {
                vertex[lo + 1] = inv[4];
                break;
            }
            4 => {
                vertex[lo + 1] = inv[3];
                edge[lo + 1] = inv[1];
                vertex[lo + 2] = inv[4];
                break;
            }
            _ => {
                vertex[lo + 1] = inv[4];
                edge[lo + 1] = inv[3];
                edge[hi - 2] = inv[1];
                vertex[hi - 1] = inv[4];
                lo += 1;
                hi -= 1;
            }
        }
    }
}

/// Vertex and edge colours of a path of `k` vertices extending `ends`.
pub fn extend_path_colours(
    k: usize,
    ends: PathEnds,
) -> Result<(Vec<Colour>, Vec<Colour>), ColouringError> {
    if k < 3 {
        return Err(ColouringError::PathTooShort(k));
    }
    ends.check(k)?;
    let mut vertex = vec![0; k];
    let mut edge = vec![0; k - 1];
    vertex[0] = ends.start;
    vertex[k - 1] = ends.end;
    edge[0] = ends.first_edge;
    edge[k - 2] = ends.last_edge;
    fill_path(&mut vertex, &mut edge);
    Ok((vertex, edge))
}

/// Extends a total precolouring of `p1`, `p1p2`, `p(k-1)pk`, `pk` (with
/// `p1` and `pk` alike) to a 4-total-colouring of the path.
pub fn extend_path_total(path: &[VertexId], ends: PathEnds) -> Result<Colouring, ColouringError> {
    let (vertex, edge) = extend_path_colours(path.len(), ends)?;
    let mut out = Colouring::total(4);
    for (&v, c) in path.iter().zip(vertex) {
        out.set_vertex(v, c);
    }
    for (w, c) in path.windows(2).zip(edge) {
        out.set_edge(Edge::new(w[0], w[1]), c);
    }
    Ok(out)
}
