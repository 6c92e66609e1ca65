//! `cyltab`: command-line access to cylindric tableaux.
//!
//! Every subcommand reads JSON documents (or command-line values), runs one
//! named operation and prints its result as canonical JSON on stdout.
//! Usage errors exit with status 2; domain and schema errors exit with
//! status 1 and a structured report on stderr.

mod commands;
mod fixtures;
mod schema;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use schema::{canonical, CliError};

#[derive(Parser)]
#[command(
    name = "cyltab",
    version,
    about = "Cylindric tableaux: insertion, RSK, identities, marble games, Knuth moves"
)]
struct Cli {
    /// Emit JSON (the only output format)
    #[arg(long, global = true)]
    json: bool,
    /// Include queues and bumping routes in insertion output
    #[arg(long, global = true)]
    trace: bool,
    /// Plane row from which multi-insertion seeds its queue
    #[arg(long, global = true, allow_hyphen_values = true)]
    seed_row: Option<i64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a tableau document is a semistandard cylindric tableau
    Validate {
        /// Tableau JSON file (`-` for stdin)
        file: PathBuf,
    },
    /// Multi-insert a set of boxes into a tableau
    Insert(InsertArgs),
    /// Reverse multi-insert a set of boxes out of a tableau
    Reverse(InsertArgs),
    /// Run the cylindric RSK correspondence on (T, U)
    Crsk {
        #[arg(long)]
        t: PathBuf,
        #[arg(long)]
        u: PathBuf,
    },
    /// Run the inverse correspondence on (P, Q)
    CrskInv {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        q: PathBuf,
    },
    /// Check an identity exactly by enumeration
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Convert between tableaux and marble games
    #[command(subcommand)]
    Marble(MarbleCommand),
    /// Cyclic Knuth moves on words
    #[command(subcommand)]
    Knuth(KnuthCommand),
    /// Golden fixture corpus
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Args)]
struct InsertArgs {
    /// Tableau JSON file
    #[arg(long)]
    tableau: PathBuf,
    /// JSON array of boxes `{"row","col"}`
    #[arg(long)]
    boxes: PathBuf,
}

#[derive(Args)]
struct Cylinder {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Cylindric Cauchy identity, truncated by x-degree
    Cauchy {
        #[command(flatten)]
        cyl: Cylinder,
        #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
        alpha: Ints,
        #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
        beta: Ints,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        xvars: usize,
        #[arg(long)]
        yvars: usize,
    },
    /// Single-sum identity for one partition, truncated by degree
    Oneschur {
        #[command(flatten)]
        cyl: Cylinder,
        #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
        alpha: Ints,
        #[arg(long)]
        degree: usize,
        #[arg(long, alias = "xvars")]
        vars: usize,
    },
    /// Standard-tableau counting identity with m boxes on each side
    Fcount {
        #[command(flatten)]
        cyl: Cylinder,
        #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
        alpha: Ints,
        #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
        beta: Ints,
        #[arg(long, alias = "degree")]
        m: usize,
    },
    /// Skew Cauchy identity for ordinary partitions, cross-checked on a cylinder
    Skew {
        #[arg(long, value_parser = nat_list)]
        alpha: Nats,
        #[arg(long, value_parser = nat_list)]
        beta: Nats,
        #[arg(long)]
        degree: u32,
        #[arg(long, alias = "xvars")]
        vars: usize,
    },
}

#[derive(Subcommand)]
enum MarbleCommand {
    /// Encode a tableau as a marble game
    Encode {
        #[arg(long)]
        tableau: PathBuf,
        /// Game length (defaults to the largest letter)
        #[arg(long)]
        turns: Option<usize>,
    },
    /// Decode a game into the tableau with inner shape mu
    Decode {
        #[arg(long)]
        mu: PathBuf,
        #[arg(long)]
        game: PathBuf,
    },
}

#[derive(Subcommand)]
enum KnuthCommand {
    /// Transform a word into its sorted rearrangement
    Transform {
        #[arg(value_parser = word_arg)]
        word: Letters,
    },
    /// Certify that two words are cyclically Knuth equivalent
    Connect {
        #[arg(value_parser = word_arg)]
        w: Letters,
        #[arg(value_parser = word_arg)]
        v: Letters,
        /// Also list every intermediate word
        #[arg(long)]
        replay: bool,
    },
    /// Lift a word to a permutation
    Lift {
        #[arg(value_parser = word_arg)]
        word: Letters,
    },
    /// Replay a certificate JSON file and report whether it is valid
    Check { certificate: PathBuf },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// Replay every fixture and report mismatches
    Run {
        /// Directory of fixture files (defaults to the shipped corpus)
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// List the shipped fixture names
    List,
}

// Aliases keep clap from treating these as repeated arguments.
type Ints = Vec<i64>;
type Nats = Vec<u32>;
type Letters = Vec<u32>;

/// A comma-separated list of integers; the empty string is the empty list.
fn int_list(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("`{x}`: {e}"))).collect()
}

fn nat_list(s: &str) -> Result<Vec<u32>, String> {
    int_list(s)?.into_iter().map(|x| u32::try_from(x).map_err(|_| format!("`{x}` is not a nonnegative part"))).collect()
}

/// A word: comma-separated letters, or one digit per letter.
fn word_arg(s: &str) -> Result<Vec<u32>, String> {
    let w: Vec<u32> = if s.contains(',') {
        s.split(',').map(|x| x.trim().parse::<u32>().map_err(|e| format!("`{x}`: {e}"))).collect::<Result<_, _>>()?
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(|| format!("`{c}` is not a digit"))).collect::<Result<_, _>>()?
    };
    if w.is_empty() || w.contains(&0) {
        return Err("a word is a nonempty list of positive letters".into());
    }
    Ok(w)
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let shown = path.display().to_string();
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| CliError::new("io", e).with_path(shown.clone()))?;
    serde_json::from_str(&text).map_err(|e| CliError::new("json", e).with_path(shown))
}

/// Translates a parsed command line into an operation and its payload.
fn operation(cli: &Cli) -> Result<(&'static str, Value), CliError> {
    let seed_row = cli.seed_row.unwrap_or(0);
    Ok(match &cli.command {
        Command::Validate { file } => ("validate", json!({ "tableau": read_json(file)? })),
        Command::Insert(a) | Command::Reverse(a) => {
            let op = if matches!(cli.command, Command::Insert(_)) { "insert" } else { "reverse" };
            let payload = json!({
                "tableau": read_json(&a.tableau)?,
                "boxes": read_json(&a.boxes)?,
                "trace": cli.trace,
                "seed_row": seed_row,
            });
            (op, payload)
        }
        Command::Crsk { t, u } => ("crsk", json!({ "t": read_json(t)?, "u": read_json(u)? })),
        Command::CrskInv { p, q } => ("crsk-inv", json!({ "p": read_json(p)?, "q": read_json(q)? })),
        Command::Verify(v) => match v {
            VerifyCommand::Cauchy { cyl, alpha, beta, degree, xvars, yvars } => (
                "verify-cauchy",
                json!({ "k": cyl.k, "n": cyl.n, "alpha": alpha, "beta": beta, "degree": degree, "xvars": xvars, "yvars": yvars }),
            ),
            VerifyCommand::Oneschur { cyl, alpha, degree, vars } => {
                ("verify-oneschur", json!({ "k": cyl.k, "n": cyl.n, "alpha": alpha, "degree": degree, "vars": vars }))
            }
            VerifyCommand::Fcount { cyl, alpha, beta, m } => {
                ("verify-fcount", json!({ "k": cyl.k, "n": cyl.n, "alpha": alpha, "beta": beta, "m": m }))
            }
            VerifyCommand::Skew { alpha, beta, degree, vars } => {
                ("verify-skew", json!({ "alpha": alpha, "beta": beta, "degree": degree, "vars": vars }))
            }
        },
        Command::Marble(m) => match m {
            MarbleCommand::Encode { tableau, turns } => {
                let mut payload = json!({ "tableau": read_json(tableau)? });
                if let Some(t) = turns {
                    payload["turns"] = json!(t);
                }
                ("marble-encode", payload)
            }
            MarbleCommand::Decode { mu, game } => {
                ("marble-decode", json!({ "mu": read_json(mu)?, "game": read_json(game)? }))
            }
        },
        Command::Knuth(k) => match k {
            KnuthCommand::Transform { word } => ("knuth-transform", json!({ "word": word })),
            KnuthCommand::Connect { w, v, replay } => ("knuth-connect", json!({ "w": w, "v": v, "replay": replay })),
            KnuthCommand::Lift { word } => ("knuth-lift", json!({ "word": word })),
            KnuthCommand::Check { certificate } => ("knuth-check", json!({ "certificate": read_json(certificate)? })),
        },
        Command::Fixtures(_) => unreachable!("handled separately"),
    })
}

/// Writes one canonical JSON line; a reader that has gone away (a closed
/// pipe) is not an error worth reporting.
fn emit(sink: &mut impl Write, v: &Value) {
    let _ = writeln!(sink, "{}", canonical(v)).and_then(|_| sink.flush());
}

fn fail(e: &CliError) -> ExitCode {
    emit(&mut std::io::stderr(), &e.to_json());
    ExitCode::from(1)
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("CYLTAB_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().map_err(|_| format!("CYLTAB_THREADS must be a positive integer, got `{raw}`"))?;
    if n == 0 {
        return Err("CYLTAB_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        emit(&mut std::io::stderr(), &CliError::new("usage", msg).to_json());
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Fixtures(FixturesCommand::List) => {
            let names: Result<Vec<String>, CliError> =
                fixtures::shipped().map(|fs| fs.into_iter().map(|f| f.name).collect());
            names.map(|n| (true, json!(n)))
        }
        Command::Fixtures(FixturesCommand::Run { dir }) => {
            let loaded = match dir {
                Some(d) => fixtures::load_dir(d),
                None => fixtures::shipped(),
            };
            loaded.map(|fs| fixtures::run_all(&fs))
        }
        _ => operation(&cli).and_then(|(op, payload)| commands::run(op, &payload)).map(|v| (true, v)),
    };
    match result {
        Ok((ok, out)) => {
            emit(&mut std::io::stdout(), &out);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(&e),
    }
}
