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

//! Independent checks: verifiers, exhaustive oracles, small-graph
//! enumeration, instance generators and named fixtures.

mod brute;
pub mod canon;
mod enumerate;
pub mod fixtures;
mod generate;
mod verify;

use thiserror::Error;

pub use brute::{brute_force_chromatic_index, brute_force_total_chromatic};
pub use enumerate::{brute_force_is_chordless, enumerate_small_chordless, MAX_ENUMERATION_ORDER};
pub use fixtures::Fixture;
pub use generate::{generate_chordless, Profile, MIN_GENERATED_ORDER, RETRY_BUDGET};
pub use verify::{
    verify_edge_colouring, verify_total_colouring, Element, VerificationReport, VerifyError,
    Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no colouring with at most {limit} colours")]
    LimitExceeded { limit: usize },
    #[error("order {n} exceeds the maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("order {n} is below the minimum of {min}")]
    TooSmall { n: usize, min: usize },
    #[error("retry budget exhausted: {0}")]
    RetriesExhausted(String),
}
