//! Named operations on JSON payloads.
//!
//! Each subcommand of the binary is translated into one of these
//! operations, and each golden fixture names one, so the command line and
//! the fixture corpus exercise exactly the same code.

use cyltab::enumerate::{verify_cauchy, verify_fcount, verify_oneschur, verify_skew_reduction, IdentityReport};
use cyltab::forward::{full_multi_from_row, seed_queue};
use cyltab::knuth::{self, Word};
use cyltab::marble::{game_to_tableau, tableau_to_game};
use cyltab::reverse::{reverse_full_multi_from_row, reverse_one_step_multi, reverse_seed_queue};
use cyltab::{crsk, crsk_inverse, one_step_multi, CrskInput, CrskOutput, CylPartition, InsertionQueue};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::schema::{
    big_json, boxes_json, certificate_json, decode, game_json, join, parse_boxes, parse_certificate, parse_game,
    parse_params, parse_partition, parse_tableau, parse_word, partition_json, poly_json, queue_json, route_json,
    tableau_json, CliError, Result,
};

/// Every operation name accepted by [`run`].
pub const OPERATIONS: &[&str] = &[
    "validate",
    "insert",
    "reverse",
    "crsk",
    "crsk-inv",
    "verify-cauchy",
    "verify-oneschur",
    "verify-fcount",
    "verify-skew",
    "marble-encode",
    "marble-decode",
    "knuth-transform",
    "knuth-connect",
    "knuth-lift",
    "knuth-check",
];

/// Runs the named operation on `payload`.
pub fn run(op: &str, payload: &Value) -> Result<Value> {
    match op {
        "validate" => validate(payload),
        "insert" => insert(payload, false),
        "reverse" => insert(payload, true),
        "crsk" => crsk_forward(payload),
        "crsk-inv" => crsk_backward(payload),
        "verify-cauchy" => cauchy(payload),
        "verify-oneschur" => oneschur(payload),
        "verify-fcount" => fcount(payload),
        "verify-skew" => skew(payload),
        "marble-encode" => marble_encode(payload),
        "marble-decode" => marble_decode(payload),
        "knuth-transform" => knuth_transform(payload),
        "knuth-connect" => knuth_connect(payload),
        "knuth-lift" => knuth_lift(payload),
        "knuth-check" => knuth_check(payload),
        _ => Err(CliError::new("usage", format!("unknown operation `{op}`"))),
    }
}

fn domain(kind: &'static str) -> impl Fn(&dyn std::fmt::Display) -> CliError {
    move |e| CliError::new(kind, e)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableauPayload {
    tableau: Value,
}

fn validate(p: &Value) -> Result<Value> {
    let doc: TableauPayload = decode(p, "$")?;
    let t = parse_tableau(&doc.tableau, "$.tableau")?;
    let weight: Vec<Value> = t.weight().0.iter().map(|(a, c)| json!([a, c])).collect();
    Ok(json!({
        "valid": true,
        "size": t.size(),
        "weight": weight,
        "standard": t.is_standard(),
        "word": t.word(),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InsertPayload {
    tableau: Value,
    boxes: Value,
    #[serde(default)]
    trace: bool,
    #[serde(default)]
    seed_row: i64,
}

/// Forward or reverse full multi-insertion; with `trace`, also the queue
/// of every round and the bumping routes.
fn insert(p: &Value, reverse: bool) -> Result<Value> {
    let doc: InsertPayload = decode(p, "$")?;
    let t = parse_tableau(&doc.tableau, "$.tableau")?;
    let s = parse_boxes(&doc.boxes, "$.boxes")?;
    let err = domain("insertion");
    let (tableau, set_name, set, routes, rounds) = if reverse {
        let r = reverse_full_multi_from_row(&t, &s, doc.seed_row).map_err(|e| err(&e))?;
        (r.tableau, "reverse_new_set", r.reverse_new_set, r.routes, r.rounds)
    } else {
        let r = full_multi_from_row(&t, &s, doc.seed_row).map_err(|e| err(&e))?;
        (r.tableau, "new_set", r.new_set, r.routes, r.rounds)
    };
    let mut out = json!({ "tableau": tableau_json(&tableau), "rounds": rounds });
    out[set_name] = boxes_json(&set);
    if doc.trace {
        let mut queues: Vec<Value> = Vec::new();
        let (mut state, mut q) =
            if reverse { reverse_seed_queue(&t, &s, doc.seed_row) } else { seed_queue(&t, &s, doc.seed_row) }
                .map_err(|e| err(&e))?;
        while !q.is_empty() {
            queues.push(queue_json(&q));
            let current: InsertionQueue = q;
            (state, q) = if reverse { reverse_one_step_multi(state, current) } else { one_step_multi(state, current) }
                .map_err(|e| err(&e))?;
        }
        out["queues"] = Value::Array(queues);
        out["routes"] = Value::Array(routes.iter().map(route_json).collect());
    }
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CrskPayload {
    t: Value,
    u: Value,
}

fn crsk_forward(p: &Value) -> Result<Value> {
    let doc: CrskPayload = decode(p, "$")?;
    let t = parse_tableau(&doc.t, "$.t")?;
    let u = parse_tableau(&doc.u, "$.u")?;
    let err = domain("crsk");
    let out = crsk(&CrskInput::new(t, u).map_err(|e| err(&e))?).map_err(|e| err(&e))?;
    Ok(json!({ "p": tableau_json(&out.p), "q": tableau_json(&out.q), "lambda": partition_json(&out.lambda) }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CrskInvPayload {
    p: Value,
    q: Value,
}

fn crsk_backward(p: &Value) -> Result<Value> {
    let doc: CrskInvPayload = decode(p, "$")?;
    let pt = parse_tableau(&doc.p, "$.p")?;
    let qt = parse_tableau(&doc.q, "$.q")?;
    let err = domain("crsk");
    let inp = crsk_inverse(&CrskOutput::new(pt, qt).map_err(|e| err(&e))?).map_err(|e| err(&e))?;
    Ok(json!({ "t": tableau_json(&inp.t), "u": tableau_json(&inp.u), "mu": partition_json(&inp.mu) }))
}

fn report_json(name: &str, r: &IdentityReport) -> Value {
    let mismatches: Vec<Value> = r
        .mismatches
        .iter()
        .map(|(e, a, b)| json!({ "exponents": e, "lhs": big_json(a), "rhs": big_json(b) }))
        .collect();
    json!({
        "identity": name,
        "equal": r.equal,
        "lhs": poly_json(&r.lhs),
        "rhs": poly_json(&r.rhs),
        "mismatches": mismatches,
    })
}

/// A partition given by its window, with the cylinder given separately.
fn window(k: usize, n: usize, w: Vec<i64>, path: &str) -> Result<CylPartition> {
    let params = parse_params(k, n, "$")?;
    if w.len() != k {
        return Err(CliError::schema(path, format!("window has length {}, expected k = {k}", w.len())));
    }
    CylPartition::new(params, w).map_err(|e| CliError::schema(path, e))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CauchyPayload {
    k: usize,
    n: usize,
    alpha: Vec<i64>,
    beta: Vec<i64>,
    degree: usize,
    xvars: usize,
    yvars: usize,
}

fn cauchy(p: &Value) -> Result<Value> {
    let d: CauchyPayload = decode(p, "$")?;
    let alpha = window(d.k, d.n, d.alpha, "$.alpha")?;
    let beta = window(d.k, d.n, d.beta, "$.beta")?;
    let r = verify_cauchy(&alpha, &beta, d.degree, d.xvars, d.yvars);
    let mut out = report_json("cauchy", &r);
    out["alpha"] = partition_json(&alpha);
    out["beta"] = partition_json(&beta);
    out["degree"] = json!(d.degree);
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OneSchurPayload {
    k: usize,
    n: usize,
    alpha: Vec<i64>,
    degree: usize,
    vars: usize,
}

fn oneschur(p: &Value) -> Result<Value> {
    let d: OneSchurPayload = decode(p, "$")?;
    let alpha = window(d.k, d.n, d.alpha, "$.alpha")?;
    let r = verify_oneschur(&alpha, d.degree, d.vars);
    let mut out = report_json("oneschur", &r);
    out["alpha"] = partition_json(&alpha);
    out["degree"] = json!(d.degree);
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FcountPayload {
    k: usize,
    n: usize,
    alpha: Vec<i64>,
    beta: Vec<i64>,
    m: usize,
}

fn fcount(p: &Value) -> Result<Value> {
    let d: FcountPayload = decode(p, "$")?;
    let alpha = window(d.k, d.n, d.alpha, "$.alpha")?;
    let beta = window(d.k, d.n, d.beta, "$.beta")?;
    let (lhs, rhs) = verify_fcount(&alpha, &beta, d.m);
    Ok(json!({
        "identity": "fcount",
        "alpha": partition_json(&alpha),
        "beta": partition_json(&beta),
        "m": d.m,
        "lhs": big_json(&lhs.into()),
        "rhs": big_json(&rhs.into()),
        "equal": lhs == rhs,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SkewPayload {
    alpha: Vec<u32>,
    beta: Vec<u32>,
    degree: u32,
    vars: usize,
}

fn skew(p: &Value) -> Result<Value> {
    let d: SkewPayload = decode(p, "$")?;
    let r = verify_skew_reduction(&d.alpha, &d.beta, d.degree, d.vars).map_err(|e| CliError::schema("$", e))?;
    Ok(json!({
        "identity": "skew",
        "alpha": d.alpha,
        "beta": d.beta,
        "degree": d.degree,
        "k": r.k,
        "n": r.n,
        "regular": report_json("skew-regular", &r.regular),
        "cylindric": report_json("skew-cylindric", &r.cylindric),
        "cross_check": r.cross_check,
        "equal": r.equal,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EncodePayload {
    tableau: Value,
    turns: Option<usize>,
}

fn marble_encode(p: &Value) -> Result<Value> {
    let d: EncodePayload = decode(p, "$")?;
    let t = parse_tableau(&d.tableau, "$.tableau")?;
    let turns = d.turns.unwrap_or(t.max_letter() as usize);
    let g = tableau_to_game(&t, turns).map_err(|e| CliError::new("marble", e))?;
    Ok(game_json(&g))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DecodePayload {
    mu: Value,
    game: Value,
}

fn marble_decode(p: &Value) -> Result<Value> {
    let d: DecodePayload = decode(p, "$")?;
    let mu = parse_partition(&d.mu, "$.mu")?;
    let g = parse_game(&d.game, mu.params(), "$.game")?;
    let t = game_to_tableau(&mu, &g).map_err(|e| CliError::new("marble", e))?;
    Ok(tableau_json(&t))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WordPayload {
    word: Value,
}

fn is_permutation(w: &[u32]) -> bool {
    let mut s = w.to_vec();
    s.sort_unstable();
    s.iter().enumerate().all(|(i, &a)| a as usize == i + 1)
}

/// The transformation of a word into its sorted rearrangement.  For a
/// permutation the full switch trace is included; for other words only
/// the certificate.
fn knuth_transform(p: &Value) -> Result<Value> {
    let d: WordPayload = decode(p, "$")?;
    let w = parse_word(&d.word, "$.word")?;
    let err = domain("knuth");
    if !is_permutation(&w) {
        let mut sorted = w.clone();
        sorted.sort_unstable();
        let c = knuth::connect(&w, &sorted).map_err(|e| err(&e))?;
        let mut out = certificate_json(&c);
        out["steps"] = json!([]);
        out["critical_words"] = json!([]);
        out["monovariants"] = json!([]);
        return Ok(out);
    }
    let trace = knuth::transform_trace(&w).map_err(|e| err(&e))?;
    let mut out = certificate_json(&trace.certificate);
    out["steps"] = Value::Array(
        trace
            .steps
            .iter()
            .map(|s| json!({ "before": s.before, "position": s.position, "critical": s.critical }))
            .collect(),
    );
    out["critical_words"] = json!(trace.critical_words);
    let monovariants = trace
        .critical_words
        .iter()
        .map(|c| knuth::monovariant_digits(c).map_err(|e| err(&e)))
        .collect::<Result<Vec<_>>>()?;
    out["monovariants"] = json!(monovariants);
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConnectPayload {
    w: Value,
    v: Value,
    #[serde(default)]
    replay: bool,
}

fn knuth_connect(p: &Value) -> Result<Value> {
    let d: ConnectPayload = decode(p, "$")?;
    let w = parse_word(&d.w, "$.w")?;
    let v = parse_word(&d.v, "$.v")?;
    let err = domain("knuth");
    let c = knuth::connect(&w, &v).map_err(|e| err(&e))?;
    let mut out = certificate_json(&c);
    if d.replay {
        let words: Vec<Word> = c.replay().map_err(|e| err(&e))?;
        out["replay"] = json!(words);
    }
    Ok(out)
}

fn knuth_lift(p: &Value) -> Result<Value> {
    let d: WordPayload = decode(p, "$")?;
    let w = parse_word(&d.word, "$.word")?;
    let lift = knuth::lift_word(&w).map_err(|e| CliError::new("knuth", e).with_path(join("$", "word")))?;
    Ok(json!({ "word": w, "perm": lift.perm, "anchor": lift.anchor }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckPayload {
    certificate: Value,
}

/// Replays a certificate; invalid certificates are reported, not rejected.
fn knuth_check(p: &Value) -> Result<Value> {
    let d: CheckPayload = decode(p, "$")?;
    let c = parse_certificate(&d.certificate, "$.certificate")?;
    Ok(match c.replay() {
        Ok(words) => json!({ "valid": words.last() == Some(&c.end), "replay": words }),
        Err(e) => json!({ "valid": false, "reason": e.to_string() }),
    })
}
