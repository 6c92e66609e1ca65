//! Golden fixtures: an operation, its payload and the expected output.

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands;
use crate::schema::{canonical, decode, CliError, Result};

/// One golden fixture.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub operation: String,
    pub payload: Value,
    pub expected: Value,
}

macro_rules! corpus {
    ($($file:literal),* $(,)?) => {
        &[$(($file, include_str!(concat!("../fixtures/", $file)))),*]
    };
}

/// The shipped corpus, compiled into the binary so that `fixtures run`
/// works from any directory.
pub const CORPUS: &[(&str, &str)] = corpus![
    "insert-single-box.json",
    "insert-multi-three-boxes.json",
    "reverse-single-box.json",
    "reverse-multi-three-boxes.json",
    "crsk-worked-example.json",
    "crsk-inverse-worked-example.json",
    "crsk-degenerate-example.json",
    "marble-encode.json",
    "marble-decode.json",
    "knuth-transform-permutation.json",
    "knuth-lift.json",
    "knuth-connect-rotation.json",
    "validate-weight.json",
    "validate-standard.json",
    "verify-cauchy-small.json",
    "schema-short-window.json",
];

pub fn parse_fixture(text: &str, origin: &str) -> Result<Fixture> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::new("json", e).with_path(origin))?;
    let f: Fixture = decode(&v, "$").map_err(|e| CliError { message: format!("{origin}: {}", e.message), ..e })?;
    if !commands::OPERATIONS.contains(&f.operation.as_str()) {
        return Err(CliError::schema("$.operation", format!("{origin}: unknown operation `{}`", f.operation)));
    }
    Ok(f)
}

/// Loads the shipped corpus.
pub fn shipped() -> Result<Vec<Fixture>> {
    CORPUS.iter().map(|(file, text)| parse_fixture(text, file)).collect()
}

/// Loads every `*.json` file of a directory, in file-name order.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>> {
    let io = |e: std::io::Error| CliError::new("io", e).with_path(dir.display().to_string());
    let mut paths: Vec<_> =
        std::fs::read_dir(dir).map_err(io)?.map(|e| e.map(|e| e.path())).collect::<std::io::Result<_>>().map_err(io)?;
    paths.retain(|p| p.extension().is_some_and(|x| x == "json"));
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(io)?;
            parse_fixture(&text, &p.display().to_string())
        })
        .collect()
}

/// Replays a fixture, returning its actual output; failing operations
/// yield their structured error report, so fixtures may expect errors.
pub fn replay(f: &Fixture) -> Value {
    commands::run(&f.operation, &f.payload).unwrap_or_else(|e| e.to_json())
}

/// Replays all fixtures; the report lists every mismatch.
pub fn run_all(fixtures: &[Fixture]) -> (bool, Value) {
    let mut failures = Vec::new();
    for f in fixtures {
        let actual = replay(f);
        if canonical(&actual) != canonical(&f.expected) {
            failures.push(json!({ "name": f.name, "expected": f.expected, "actual": actual }));
        }
    }
    let ok = failures.is_empty();
    let names: Vec<&str> = fixtures.iter().map(|f| f.name.as_str()).collect();
    (
        ok,
        json!({ "total": fixtures.len(), "passed": fixtures.len() - failures.len(), "fixtures": names, "failures": failures }),
    )
}
