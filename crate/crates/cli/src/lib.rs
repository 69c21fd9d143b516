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

//! Command-line front end: read a graph, recognise, decompose or colour
//! it, and print one JSON result document.

pub mod document;
pub mod result;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::time::Instant;

use chordless_core::oracle::{
    brute_force_chromatic_index, brute_force_total_chromatic, generate_chordless,
    verify_edge_colouring, verify_total_colouring, Profile, VerificationReport,
};
use chordless_core::{
    colour_low_degree, decomposition_tree, edge_colour_chordless_traced, is_chordless,
    is_two_sparse, total_colour_chordless_traced, Colouring, Graph, Mode,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use document::{parse_graph, Format, GraphDocument, Location, ParseError};
pub use result::{OracleValues, Recognition, ResultDocument, RunMode, Stats, Status};

/// Largest input the exhaustive `oracle` subcommand accepts.
pub const MAX_ORACLE_ORDER: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "chordless",
    version,
    about = "Recognise, decompose and colour chordless graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Graph document to read, `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,
    /// Input format; detected from the first character when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColourMode {
    Edge,
    Total,
}

impl ColourMode {
    fn run_mode(self) -> RunMode {
        match self {
            ColourMode::Edge => RunMode::Edge,
            ColourMode::Total => RunMode::Total,
        }
    }

    fn mode(self) -> Mode {
        match self {
            ColourMode::Edge => Mode::Edge,
            ColourMode::Total => Mode::Total,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Colour the edges (Δ colours) or all elements (Δ+1 colours).
    Colour {
        #[arg(long, value_enum)]
        mode: ColourMode,
        #[command(flatten)]
        input: InputArgs,
        /// Report the recursion statistics.
        #[arg(long)]
        stats: bool,
    },
    /// Chordlessness, 2-sparseness and maximum degree.
    Recognise {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print the tree of extremal splits.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exact chromatic index and total chromatic number by exhaustive search.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Re-check a result document against the graph it was computed for.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Result document to check.
        #[arg(long)]
        result: String,
    },
    /// Generate a random chordless graph.
    Generate {
        #[arg(long)]
        profile: Profile,
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Structured)]
        format: Format,
    },
}

/// What to print and the process exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

impl From<ResultDocument> for Output {
    fn from(doc: ResultDocument) -> Self {
        let mut text = doc.to_json();
        text.push('\n');
        Output {
            text,
            exit_code: doc.status.exit_code(),
        }
    }
}

fn read_source(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn load(mode: RunMode, input: &InputArgs) -> Result<Graph, Box<ResultDocument>> {
    let text = read_source(&input.input)
        .map_err(|e| ResultDocument::invalid(mode, format!("{}: {e}", input.input)).boxed())?;
    graph_from_text(mode, &text, input.format)
}

fn graph_from_text(
    mode: RunMode,
    text: &str,
    format: Option<Format>,
) -> Result<Graph, Box<ResultDocument>> {
    let doc = parse_graph(text, format).map_err(|e| ResultDocument::invalid(mode, e).boxed())?;
    doc.to_graph()
        .map_err(|e| ResultDocument::invalid(mode, e).boxed())
}

fn verify(g: &Graph, c: &Colouring) -> Result<VerificationReport, String> {
    match c.mode() {
        Mode::Edge => verify_edge_colouring(g, c),
        Mode::Total => verify_total_colouring(g, c),
    }
    .map_err(|e| e.to_string())
}

/// Colours `g`. Inputs of maximum degree below 3 still receive a colouring,
/// flagged with status `delta-too-small`.
pub fn colour(g: &Graph, mode: ColourMode, stats: bool) -> ResultDocument {
    let run_mode = mode.run_mode();
    let mut timing = BTreeMap::new();
    let start = Instant::now();
    let (chordless, witness) = is_chordless(g);
    timing.insert("recognition".to_string(), ms(start));
    if !chordless {
        return ResultDocument {
            witness,
            timing_ms: timing,
            ..ResultDocument::new(run_mode, Status::NotChordless)
        };
    }
    let delta = g.max_degree().unwrap_or(0);
    let start = Instant::now();
    let outcome = if delta < 3 {
        colour_low_degree(g, mode.mode()).map(|c| (c, None))
    } else {
        match mode {
            ColourMode::Edge => edge_colour_chordless_traced(g),
            ColourMode::Total => total_colour_chordless_traced(g),
        }
        .map(|(c, t)| (c, Some(t)))
    };
    timing.insert("colouring".to_string(), ms(start));
    let (c, trace) = match outcome {
        Ok(x) => x,
        Err(e) => return ResultDocument::invalid(run_mode, e),
    };
    let start = Instant::now();
    let report = match verify(g, &c) {
        Ok(r) if r.valid => r,
        Ok(r) => {
            return ResultDocument {
                verification: Some(r),
                ..ResultDocument::invalid(run_mode, "internal error: colouring failed verification")
            }
        }
        Err(e) => return ResultDocument::invalid(run_mode, e),
    };
    timing.insert("verification".to_string(), ms(start));
    let status = if delta < 3 {
        Status::DeltaTooSmall
    } else {
        Status::Ok
    };
    ResultDocument {
        verification: Some(report),
        stats: trace.filter(|_| stats).map(|t| Stats::from(&t)),
        timing_ms: timing,
        ..ResultDocument::new(run_mode, status)
    }
    .with_colouring(&c)
}

pub fn recognise(g: &Graph) -> ResultDocument {
    let start = Instant::now();
    let (chordless, witness) = is_chordless(g);
    let (two_sparse, _) = is_two_sparse(g);
    let elapsed = ms(start);
    let status = if chordless {
        Status::Ok
    } else {
        Status::NotChordless
    };
    let mut doc = ResultDocument {
        recognition: Some(Recognition {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            max_degree: g.max_degree().unwrap_or(0),
            chordless,
            two_sparse,
        }),
        witness,
        ..ResultDocument::new(RunMode::Recognise, status)
    };
    doc.timing_ms.insert("recognition".into(), elapsed);
    doc
}

pub fn decompose(g: &Graph) -> ResultDocument {
    let mut doc = recognise(g);
    doc.mode = RunMode::Decompose;
    if doc.status != Status::Ok {
        return doc;
    }
    let start = Instant::now();
    match decomposition_tree(g) {
        Ok(tree) => {
            doc.decomposition = Some(serde_json::to_value(tree).expect("plain data"));
            doc.timing_ms.insert("decomposition".into(), ms(start));
            doc
        }
        Err(e) => ResultDocument::invalid(RunMode::Decompose, e),
    }
}

pub fn oracle(g: &Graph) -> ResultDocument {
    if g.vertex_count() > MAX_ORACLE_ORDER {
        return ResultDocument::invalid(
            RunMode::Oracle,
            format!(
                "the oracle handles at most {MAX_ORACLE_ORDER} vertices, got {}",
                g.vertex_count()
            ),
        );
    }
    let delta = g.max_degree().unwrap_or(0);
    let start = Instant::now();
    let values = brute_force_chromatic_index(g, delta + 1).and_then(|chi| {
        brute_force_total_chromatic(g, delta + 2).map(|total| OracleValues {
            max_degree: delta,
            chromatic_index: chi,
            total_chromatic: total,
        })
    });
    match values {
        Ok(v) => {
            let mut doc = ResultDocument {
                oracle: Some(v),
                ..ResultDocument::new(RunMode::Oracle, Status::Ok)
            };
            doc.timing_ms.insert("oracle".into(), ms(start));
            doc
        }
        Err(e) => ResultDocument::invalid(RunMode::Oracle, e),
    }
}

/// Checks that `result` holds a proper colouring of `g` within its palette.
pub fn verify_result(g: &Graph, result: &ResultDocument) -> ResultDocument {
    let Some(c) = result.colouring() else {
        return ResultDocument::invalid(RunMode::Verify, "result document holds no colouring");
    };
    let start = Instant::now();
    let report = match verify(g, &c) {
        Ok(r) => r,
        Err(e) => return ResultDocument::invalid(RunMode::Verify, e),
    };
    let mut doc = if !report.valid {
        ResultDocument::invalid(RunMode::Verify, "colouring is not proper")
    } else if c.max_colour() > c.palette {
        ResultDocument::invalid(
            RunMode::Verify,
            format!(
                "colour {} exceeds the palette of {}",
                c.max_colour(),
                c.palette
            ),
        )
    } else {
        ResultDocument::new(RunMode::Verify, Status::Ok)
    };
    doc.palette = Some(c.palette);
    doc.verification = Some(report);
    doc.timing_ms.insert("verification".into(), ms(start));
    doc
}

pub fn execute(cli: &Cli) -> Output {
    let doc = match &cli.command {
        Command::Colour { mode, input, stats } => {
            load(mode.run_mode(), input).map(|g| colour(&g, *mode, *stats))
        }
        Command::Recognise { input } => load(RunMode::Recognise, input).map(|g| recognise(&g)),
        Command::Decompose { input } => load(RunMode::Decompose, input).map(|g| decompose(&g)),
        Command::Oracle { input } => load(RunMode::Oracle, input).map(|g| oracle(&g)),
        Command::Verify { input, result } => {
            if input.input == "-" && result == "-" {
                Err(ResultDocument::invalid(
                    RunMode::Verify,
                    "graph and result cannot both come from standard input",
                )
                .boxed())
            } else {
                load(RunMode::Verify, input).and_then(|g| {
                    let invalid = |e: String| ResultDocument::invalid(RunMode::Verify, e).boxed();
                    let text =
                        read_source(result).map_err(|e| invalid(format!("{result}: {e}")))?;
                    let doc: ResultDocument =
                        serde_json::from_str(&text).map_err(|e| invalid(e.to_string()))?;
                    Ok(verify_result(&g, &doc))
                })
            }
        }
        Command::Generate {
            profile,
            n,
            seed,
            format,
        } => match generate_chordless(*n, *seed, *profile) {
            Ok(g) => {
                let name = format!("{profile}-n{n}-seed{seed}");
                return Output {
                    text: GraphDocument::from_graph(&g, Some(name)).serialise(*format),
                    exit_code: 0,
                };
            }
            Err(e) => Err(ResultDocument::invalid(RunMode::Generate, e).boxed()),
        },
    };
    doc.unwrap_or_else(|e| *e).into()
}

/// Parses a graph document and runs `colour` on it.
pub fn colour_text(text: &str, mode: ColourMode) -> ResultDocument {
    match graph_from_text(mode.run_mode(), text, None) {
        Ok(g) => colour(&g, mode, false),
        Err(doc) => *doc,
    }
}
