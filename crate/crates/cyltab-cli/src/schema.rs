//! JSON schemas for the domain values and their canonical encodings.
//!
//! Every `parse_*` function takes the JSON path of the value it reads so
//! that errors point at the offending field; every `*_json` function
//! produces the canonical encoding, so `*_json(parse_*(d))` equals `d` for
//! any well-formed document `d` after canonicalization.

use std::fmt;

use cyltab::knuth::{Certificate, Move, MoveKind, Word};
use cyltab::marble::{Arrangement, MarbleGame, Turn};
use cyltab::poly::SparsePolynomial;
use cyltab::{BumpingRoute, CylBox, CylParams, CylPartition, CylTableau, InsertionQueue, SkewShape};
use num_bigint::BigUint;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Number, Value};

/// A failure reported to the user: a machine-readable kind, a message and,
/// for schema problems, the JSON path of the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
    pub path: Option<String>,
}

impl CliError {
    pub fn new(kind: &'static str, message: impl ToString) -> Self {
        CliError { kind, message: message.to_string(), path: None }
    }

    /// A document that does not match the schema of its declared type.
    pub fn schema(path: impl Into<String>, reason: impl ToString) -> Self {
        CliError { kind: "schema", message: reason.to_string(), path: Some(path.into()) }
    }

    pub fn with_path(mut self, path: impl Into<String>) -> Self {
        self.path = Some(path.into());
        self
    }

    /// The structured report written to stderr.
    pub fn to_json(&self) -> Value {
        let mut err = json!({ "kind": self.kind, "message": self.message });
        if let Some(p) = &self.path {
            err["path"] = json!(p);
        }
        json!({ "error": err })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.path {
            Some(p) => write!(f, "{} error at {}: {}", self.kind, p, self.message),
            None => write!(f, "{} error: {}", self.kind, self.message),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Compact JSON with object keys in sorted order.
pub fn canonical(v: &Value) -> String {
    // `serde_json::Map` is a `BTreeMap` unless `preserve_order` is enabled,
    // so plain serialization already sorts keys.
    serde_json::to_string(v).expect("JSON values always serialize")
}

/// Joins a field name onto a JSON path.
pub fn join(path: &str, field: &str) -> String {
    format!("{path}.{field}")
}

/// Joins an array index onto a JSON path.
pub fn index(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

/// Deserializes `v`, reporting the path of the first mismatch.
pub fn decode<T: DeserializeOwned>(v: &Value, path: &str) -> Result<T> {
    serde_path_to_error::deserialize(v.clone()).map_err(|e| {
        let inner = e.path().to_string();
        let full = if inner == "." { path.to_string() } else { format!("{path}.{inner}") };
        CliError::schema(full, e.into_inner())
    })
}

/// Looks up a required field of an object.
pub fn field<'a>(v: &'a Value, name: &str, path: &str) -> Result<&'a Value> {
    match v {
        Value::Object(m) => m.get(name).ok_or_else(|| CliError::schema(path, format!("missing field `{name}`"))),
        _ => Err(CliError::schema(path, "expected an object")),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionDoc {
    k: usize,
    n: usize,
    window: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BoxDoc {
    row: usize,
    col: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GameDoc {
    initial: Vec<u64>,
    turns: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MoveDoc {
    kind: String,
    pos: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    start: Vec<u32>,
    moves: Vec<MoveDoc>,
    end: Vec<u32>,
}

pub fn parse_params(k: usize, n: usize, path: &str) -> Result<CylParams> {
    CylParams::new(k, n).map_err(|e| CliError::schema(path, e))
}

pub fn parse_partition(v: &Value, path: &str) -> Result<CylPartition> {
    let doc: PartitionDoc = decode(v, path)?;
    let params = parse_params(doc.k, doc.n, path)?;
    if doc.window.len() != doc.k {
        return Err(CliError::schema(
            join(path, "window"),
            format!("window has length {}, expected k = {}", doc.window.len(), doc.k),
        ));
    }
    CylPartition::new(params, doc.window).map_err(|e| CliError::schema(join(path, "window"), e))
}

pub fn partition_json(p: &CylPartition) -> Value {
    json!({ "k": p.params().k(), "n": p.params().n(), "window": p.window() })
}

pub fn parse_shape(v: &Value, path: &str) -> Result<SkewShape> {
    let outer = parse_partition(field(v, "outer", path)?, &join(path, "outer"))?;
    let inner = parse_partition(field(v, "inner", path)?, &join(path, "inner"))?;
    if let Value::Object(m) = v {
        if let Some(extra) = m.keys().find(|k| *k != "outer" && *k != "inner") {
            return Err(CliError::schema(path, format!("unknown field `{extra}`")));
        }
    }
    SkewShape::new(outer, inner).map_err(|e| CliError::schema(path, e))
}

pub fn shape_json(s: &SkewShape) -> Value {
    json!({ "outer": partition_json(s.outer()), "inner": partition_json(s.inner()) })
}

pub fn parse_tableau(v: &Value, path: &str) -> Result<CylTableau> {
    let shape = parse_shape(field(v, "shape", path)?, &join(path, "shape"))?;
    let rows_path = join(path, "rows");
    let rows: Vec<Vec<u32>> = decode(field(v, "rows", path)?, &rows_path)?;
    if let Value::Object(m) = v {
        if let Some(extra) = m.keys().find(|k| *k != "shape" && *k != "rows") {
            return Err(CliError::schema(path, format!("unknown field `{extra}`")));
        }
    }
    CylTableau::new(shape, rows).map_err(|e| CliError::new("tableau", e).with_path(rows_path))
}

pub fn tableau_json(t: &CylTableau) -> Value {
    json!({ "shape": shape_json(t.shape()), "rows": t.rows() })
}

pub fn parse_boxes(v: &Value, path: &str) -> Result<Vec<CylBox>> {
    let docs: Vec<BoxDoc> = decode(v, path)?;
    Ok(docs.into_iter().map(|b| CylBox::new(b.row, b.col)).collect())
}

pub fn box_json(b: &CylBox) -> Value {
    json!({ "row": b.row, "col": b.col })
}

pub fn boxes_json(bs: &[CylBox]) -> Value {
    Value::Array(bs.iter().map(box_json).collect())
}

/// A route as its list of `[x, y]` plane points.
pub fn route_json(r: &BumpingRoute) -> Value {
    Value::Array(r.points.iter().map(|p| json!([p.x, p.y])).collect())
}

/// A queue as its list of `[letter, row]` pairs.
pub fn queue_json(q: &InsertionQueue) -> Value {
    Value::Array(q.pairs().into_iter().map(|(a, r)| json!([a, r])).collect())
}

pub fn parse_game(v: &Value, params: CylParams, path: &str) -> Result<MarbleGame> {
    let doc: GameDoc = decode(v, path)?;
    let initial = Arrangement::new(params, doc.initial).map_err(|e| CliError::schema(join(path, "initial"), e))?;
    let k = params.k();
    let mut turns = Vec::with_capacity(doc.turns.len());
    for (i, passes) in doc.turns.into_iter().enumerate() {
        if passes.len() != k {
            return Err(CliError::schema(
                index(&join(path, "turns"), i),
                format!("turn has {} entries, expected k = {k}", passes.len()),
            ));
        }
        turns.push(Turn::new(passes));
    }
    Ok(MarbleGame { initial, turns })
}

pub fn game_json(g: &MarbleGame) -> Value {
    json!({
        "initial": g.initial.counts(),
        "turns": g.turns.iter().map(|t| t.passes.clone()).collect::<Vec<_>>(),
    })
}

/// A word given as a JSON array of positive letters.
pub fn parse_word(v: &Value, path: &str) -> Result<Word> {
    let w: Vec<u32> = decode(v, path)?;
    if let Some(i) = w.iter().position(|&a| a == 0) {
        return Err(CliError::schema(index(path, i), "letters must be positive"));
    }
    Ok(w)
}

pub fn parse_certificate(v: &Value, path: &str) -> Result<Certificate> {
    let doc: CertificateDoc = decode(v, path)?;
    let moves_path = join(path, "moves");
    let moves = doc
        .moves
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            MoveKind::from_name(&m.kind).map(|kind| Move::new(kind, m.pos)).ok_or_else(|| {
                CliError::schema(join(&index(&moves_path, i), "kind"), format!("unknown move `{}`", m.kind))
            })
        })
        .collect::<Result<_>>()?;
    Ok(Certificate { start: doc.start, moves, end: doc.end })
}

pub fn move_json(m: &Move) -> Value {
    json!({ "kind": m.kind.name(), "pos": m.pos })
}

pub fn certificate_json(c: &Certificate) -> Value {
    json!({
        "start": c.start,
        "moves": c.moves.iter().map(move_json).collect::<Vec<_>>(),
        "end": c.end,
    })
}

/// An exact JSON integer of any size.
pub fn big_json(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal digits form a JSON number"))
}

/// Terms in ascending exponent order, as `{"exponents", "coefficient"}`.
pub fn poly_json(p: &SparsePolynomial) -> Value {
    Value::Array(p.terms().iter().map(|(e, c)| json!({ "exponents": e, "coefficient": big_json(c) })).collect())
}
