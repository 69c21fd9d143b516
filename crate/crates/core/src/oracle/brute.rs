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

//! Exhaustive chromatic index and total chromatic number.

use std::collections::VecDeque;

use super::OracleError;
use crate::graph::Graph;

/// Conflict graph on the elements to colour; elements `0..fixed` form a
/// clique and are precoloured `1..=fixed`.
struct Problem {
    conflicts: Vec<Vec<usize>>,
    fixed: usize,
}

impl Problem {
    fn build(g: &Graph, total: bool) -> Problem {
        let adj = g.local_adj();
        let n = adj.len();
        let mut edges = Vec::new();
        for (i, l) in adj.iter().enumerate() {
            for &j in l {
                if i < j as usize {
                    edges.push((i, j as usize));
                }
            }
        }
        // element ids: edges 0..m, then vertices m..m+n when total
        let m = edges.len();
        let count = if total { m + n } else { m };
        let mut conflicts = vec![Vec::new(); count];
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            at[u].push(e);
            at[v].push(e);
        }
        for list in &at {
            for (i, &e) in list.iter().enumerate() {
                for &f in &list[i + 1..] {
                    conflicts[e].push(f);
                    conflicts[f].push(e);
                }
            }
        }
        if total {
            for (e, &(u, v)) in edges.iter().enumerate() {
                for x in [u, v] {
                    conflicts[e].push(m + x);
                    conflicts[m + x].push(e);
                }
                conflicts[m + u].push(m + v);
                conflicts[m + v].push(m + u);
            }
        }

        // a maximum-degree vertex and its edges go first, then breadth-first
        let hub = (0..n).max_by_key(|&v| (adj[v].len(), std::cmp::Reverse(v)));
        let mut order = Vec::with_capacity(count);
        let mut placed = vec![false; count];
        if let Some(h) = hub {
            if total {
                order.push(m + h);
                placed[m + h] = true;
            }
            for &e in &at[h] {
                order.push(e);
                placed[e] = true;
            }
        }
        let fixed = order.len();
        let mut queue: VecDeque<usize> = order.iter().copied().collect();
        let mut start = 0;
        loop {
            while let Some(x) = queue.pop_front() {
                for &y in &conflicts[x] {
                    if !placed[y] {
                        placed[y] = true;
                        order.push(y);
                        queue.push_back(y);
                    }
                }
            }
            while start < count && placed[start] {
                start += 1;
            }
            if start == count {
                break;
            }
            placed[start] = true;
            order.push(start);
            queue.push_back(start);
        }
        let mut rank = vec![0; count];
        for (i, &x) in order.iter().enumerate() {
            rank[x] = i;
        }
        let conflicts = order
            .iter()
            .map(|&x| {
                let mut l: Vec<usize> = conflicts[x].iter().map(|&y| rank[y]).collect();
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        Problem { conflicts, fixed }
    }

    fn colourable(&self, k: usize) -> bool {
        if self.fixed > k {
            return false;
        }
        let mut colour = vec![0usize; self.conflicts.len()];
        for (i, c) in colour.iter_mut().enumerate().take(self.fixed) {
            *c = i + 1;
        }
        self.extend(self.fixed, self.fixed, k, &mut colour)
    }

    fn extend(&self, i: usize, max_used: usize, k: usize, colour: &mut [usize]) -> bool {
        if i == colour.len() {
            return true;
        }
        // colours above max_used are interchangeable: try only the first
        for c in 1..=k.min(max_used + 1) {
            if self.conflicts[i].iter().any(|&j| j < i && colour[j] == c) {
                continue;
            }
            colour[i] = c;
            if self.extend(i + 1, max_used.max(c), k, colour) {
                return true;
            }
        }
        colour[i] = 0;
        false
    }
}

fn least(g: &Graph, total: bool, lower: usize, limit: usize) -> Result<usize, OracleError> {
    let problem = Problem::build(g, total);
    if problem.conflicts.is_empty() {
        return Ok(0);
    }
    for k in lower.max(1)..=limit {
        if problem.colourable(k) {
            return Ok(k);
        }
    }
    Err(OracleError::LimitExceeded { limit })
}

/// Least `k <= limit` admitting a proper `k`-edge-colouring.
pub fn brute_force_chromatic_index(g: &Graph, limit: usize) -> Result<usize, OracleError> {
    let delta = g.max_degree().unwrap_or(0);
    least(g, false, delta, limit)
}

/// Least `k <= limit` admitting a proper total `k`-colouring.
pub fn brute_force_total_chromatic(g: &Graph, limit: usize) -> Result<usize, OracleError> {
    let delta = g.max_degree().unwrap_or(0);
    least(g, true, delta + 1, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn edge_examples() {
        assert_eq!(brute_force_chromatic_index(&fixtures::cycle(5), 5), Ok(3));
        assert_eq!(
            brute_force_chromatic_index(&fixtures::complete(4), 5),
            Ok(3)
        );
        assert_eq!(brute_force_chromatic_index(&fixtures::k23(), 5), Ok(3));
        assert_eq!(brute_force_chromatic_index(&fixtures::petersen(), 5), Ok(4));
        assert_eq!(
            brute_force_chromatic_index(&fixtures::complete(5), 5),
            Ok(5)
        );
    }

    #[test]
    fn total_examples() {
        assert_eq!(brute_force_total_chromatic(&fixtures::path(2), 5), Ok(3));
        assert_eq!(brute_force_total_chromatic(&fixtures::cycle(5), 5), Ok(4));
        assert_eq!(brute_force_total_chromatic(&fixtures::claw(), 5), Ok(4));
        assert_eq!(
            brute_force_total_chromatic(&fixtures::complete(4), 6),
            Ok(5)
        );
    }

    #[test]
    fn limit_is_reported() {
        assert_eq!(
            brute_force_chromatic_index(&fixtures::petersen(), 3),
            Err(OracleError::LimitExceeded { limit: 3 })
        );
    }

    #[test]
    fn edgeless_graphs() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(brute_force_chromatic_index(&g, 3), Ok(0));
        assert_eq!(brute_force_total_chromatic(&g, 3), Ok(1));
    }
}
