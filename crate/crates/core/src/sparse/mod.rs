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

//! Colourings of bipartite and 2-sparse graphs.

pub(crate) mod konig;
pub(crate) mod list;
pub(crate) mod path;
pub(crate) mod total;

pub use konig::konig_edge_colour;
pub use list::{edge_colour_2sparse, list_edge_colour_2sparse, list_edge_colour_bipartite};
pub use path::{extend_path_colours, extend_path_total, PathEnds};
pub use total::{
    total_colour_2sparse, total_colour_2sparse_cubic, total_colour_2sparse_delta4, Anchor,
};
