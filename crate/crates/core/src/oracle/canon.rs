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

//! Canonical labelling of small graphs by individualisation and refinement.

/// Largest order for which [`canonical_code`] fits its 64-bit code.
pub const MAX_CANON_ORDER: usize = 11;

/// An isomorphism invariant that separates non-isomorphic graphs: the
/// smallest upper-triangle adjacency code over the leaves of the search
/// tree. `adj[v]` is the neighbour bitmask of `v`.
pub fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    assert!(n <= MAX_CANON_ORDER);
    let mut best = u64::MAX;
    search(adj, vec![(0..n).collect()], &mut best);
    best
}

fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i;
                let mut part = Vec::new();
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    part.push(keyed[j].1);
                    j += 1;
                }
                next.push(part);
                i = j;
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut u64) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if adj[order[i]] >> order[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // swapping twins is an automorphism fixing the partition
        let twin = tried
            .iter()
            .any(|&t| adj[t] & !(1 << v) == adj[v] & !(1 << t));
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = cells[..target].to_vec();
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend(cells[target + 1..].iter().cloned());
        search(adj, next, best);
    }
}
