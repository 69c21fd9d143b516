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

//! The fixture catalogue stored as graph documents under `tests/data`.

use std::fs;
use std::path::PathBuf;

use chordless_cli::{parse_graph, recognise, Format, GraphDocument, Status};
use chordless_core::oracle::fixtures::catalogue;

fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(file)
}

/// Rewrites the files when `CHORDLESS_BLESS` is set.
#[test]
fn files_match_catalogue() {
    let bless = std::env::var_os("CHORDLESS_BLESS").is_some();
    for f in catalogue() {
        let doc = GraphDocument::from_graph(&f.graph, Some(f.name.to_string()));
        for (format, ext) in [(Format::Structured, "json"), (Format::Edgelist, "txt")] {
            let path = data(&format!("{}.{ext}", f.name));
            let expected = doc.serialise(format);
            if bless {
                fs::write(&path, &expected).unwrap();
            }
            let text = fs::read_to_string(&path).unwrap();
            assert_eq!(text, expected, "{}", path.display());
            let parsed = parse_graph(&text, None).unwrap();
            let want = match format {
                Format::Structured => doc.clone(),
                Format::Edgelist => GraphDocument {
                    name: None,
                    ..doc.clone()
                },
            };
            assert_eq!(parsed, want);
            assert_eq!(parsed.to_graph().unwrap(), f.graph);
        }
    }
}

#[test]
fn round_trip_every_fixture() {
    for f in catalogue() {
        let doc = GraphDocument::from_graph(&f.graph, Some(f.name.to_string()));
        let s = doc.serialise(Format::Structured);
        assert_eq!(parse_graph(&s, Some(Format::Structured)).unwrap(), doc);
        let e = doc.serialise(Format::Edgelist);
        let back = parse_graph(&e, Some(Format::Edgelist)).unwrap();
        assert_eq!((back.n, &back.edges), (doc.n, &doc.edges));
    }
}

#[test]
fn recognition_agrees_with_catalogue() {
    for f in catalogue() {
        let doc = recognise(&f.graph);
        let r = doc.recognition.unwrap();
        assert_eq!(r.chordless, f.chordless, "{}", f.name);
        assert_eq!(r.two_sparse, f.two_sparse, "{}", f.name);
        assert_eq!(r.max_degree, f.max_degree, "{}", f.name);
        assert_eq!(doc.status == Status::Ok, f.chordless);
        assert_eq!(doc.witness.is_some(), !f.chordless);
    }
}
