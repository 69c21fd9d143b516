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

//! Benchmark inputs shared by the criterion targets.

use chordless_core::oracle::{generate_chordless, Profile};
use chordless_core::Graph;

/// Orders used for scaling runs.
pub const SIZES: [usize; 3] = [64, 256, 1024];

/// A deterministic generated graph for each size.
pub fn inputs(profile: Profile) -> Vec<(usize, Graph)> {
    SIZES
        .iter()
        .map(|&n| {
            let g = generate_chordless(n, n as u64, profile).expect("generator succeeds");
            (n, g)
        })
        .collect()
}
