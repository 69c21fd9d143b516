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

//! Optimal edge- and total-colourings of chordless graphs.
//!
//! A graph is chordless when no cycle has a chord. Every chordless graph
//! with maximum degree `Δ >= 3` is `Δ`-edge-colourable and
//! `(Δ+1)`-total-colourable; this crate recognises such graphs, decomposes
//! them along extremal 2-cutsets and builds both colourings.
//!
//! ```
//! use chordless_core::{edge_colour_chordless, oracle};
//!
//! let g = oracle::fixtures::theta_pair();
//! let c = edge_colour_chordless(&g).unwrap();
//! assert_eq!(c.palette, 4);
//! assert!(oracle::verify_edge_colouring(&g, &c).unwrap().valid);
//! ```

pub mod chordless;
pub mod colouring;
pub mod connectivity;
pub mod decomposition;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod sparse;

pub use chordless::{
    colour_low_degree, edge_colour_chordless, edge_colour_chordless_traced, total_colour_chordless,
    total_colour_chordless_traced, SplitRecord, Trace,
};
pub use colouring::{palette_range, Colour, ColourLists, Colouring, ColouringError, Mode};
pub use connectivity::{biconnected_components, is_two_connected, Biconnected};
pub use decomposition::{
    build_blocks, decomposition_tree, find_extremal_split, find_proper_2cutset, Block,
    DecompositionError, DecompositionNode, Side, Split,
};
pub use graph::{Edge, Graph, GraphError, IdAllocator, VertexId};
pub use recognition::{
    find_chord, is_chordless, is_two_sparse, one_end_bipartite, stable_high_degree_set,
    ChordWitness, RecognitionError,
};
pub use sparse::{
    edge_colour_2sparse, extend_path_colours, extend_path_total, konig_edge_colour,
    list_edge_colour_2sparse, list_edge_colour_bipartite, total_colour_2sparse,
    total_colour_2sparse_cubic, total_colour_2sparse_delta4, Anchor, PathEnds,
};
