//! Command line front end. Exit codes: 0 success, 1 domain error, 2 syntax or
//! usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::conjugacy::{are_conjugate, summit_data};
use crate::corpus::CORPUS;
use crate::error::{Error, Result};
use crate::garside::{normalize, NormalForm};
use crate::knot::{genus, invariants, shortest_word};
use crate::oracle;
use crate::unknotting::{classify, unknotting_sequence};
use crate::word::{parse, Word};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "braid3", version, about = "Exact calculus for 3-braids in band generators")]
pub struct Cli {
    /// Emit one JSON record instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Garside normal form `d^u | P`.
    Normalize { word: String },
    /// Summit invariants, genus and strong quasipositivity.
    Invariants { word: String },
    /// Minimal-syllable summit representative and conjugator.
    Summit {
        word: String,
        /// Also list the whole summit set.
        #[arg(long)]
        set: bool,
    },
    /// Decide conjugacy and print a conjugator `c` with `c^-1 x c = y`.
    Conjugate { x: String, y: String },
    /// Genus of the closure.
    Genus { word: String },
    /// A shortest word in the conjugacy class.
    Shortest { word: String },
    /// Crossing changes taking the closure to the unknot.
    UnknotSeq { word: String },
    /// Decide whether unknotting number equals genus.
    Classify { word: String },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Process a JSONL file of `{"id", "word", "command"}` records.
    Batch {
        /// Input file, `-` for standard input.
        #[arg(long)]
        jsonl: String,
    },
    /// List and evaluate the bundled example knots.
    Corpus,
}

#[derive(Debug, Subcommand)]
pub enum OracleQuery {
    /// Shortest word length reaching the summit set.
    Shortest {
        word: String,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Conjugator search over words of bounded length.
    Conjugate {
        x: String,
        y: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Maximal infimum over conjugates by words of bounded length.
    MaxInf {
        word: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Equality of reduced Burau images.
    Burau { x: String, y: String },
}

/// A result in both output styles.
struct Output {
    plain: String,
    json: Value,
}

impl Output {
    fn new(plain: impl Into<String>, json: Value) -> Self {
        Output { plain: plain.into(), json }
    }
}

fn read(text: &str) -> Result<NormalForm> {
    Ok(normalize(&parse(text)?))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("records serialize")
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().collect::<Vec<_>>().join("\n")
}

fn run_word_command(command: &str, word: &str) -> Result<Output> {
    let x = read(word)?;
    match command {
        "normalize" => Ok(Output::new(
            x.to_string(),
            json!({ "normal_form": x, "stats": x.stats() }),
        )),
        "invariants" => {
            let report = invariants(&x);
            let v = to_value(&report);
            let plain = lines(v.as_object().unwrap().iter().map(|(k, v)| format!("{k}={v}")));
            Ok(Output::new(plain, v))
        }
        "summit" => summit(&x, false),
        "genus" => {
            let g = genus(&x)?;
            Ok(Output::new(g.to_string(), json!({ "genus": g })))
        }
        "shortest" => {
            let s = shortest_word(&x);
            Ok(Output::new(
                s.word.to_string(),
                json!({ "word": s.word, "length": s.word.word_length(), "representative": s.representative }),
            ))
        }
        "unknot-seq" => {
            let seq = unknotting_sequence(&x)?;
            let mut plain: Vec<String> = seq
                .steps
                .iter()
                .map(|s| format!("{}  ->  {}", s.before, s.after))
                .collect();
            plain.push(format!("final {}", seq.final_word));
            Ok(Output::new(lines(plain), json!({ "length": seq.len(), "steps": seq.steps, "final_word": seq.final_word })))
        }
        "classify" => {
            let c = classify(&x)?;
            Ok(Output::new(c.to_string(), to_value(&c)))
        }
        other => Err(Error::PreconditionFailed(format!("unknown command {other}"))),
    }
}

fn summit(x: &NormalForm, with_set: bool) -> Result<Output> {
    let data = summit_data(x)?;
    let record = data.record();
    let mut plain = vec![
        format!("representative {}", data.representative),
        format!("conjugator {}", data.conjugator),
        format!("summit set size {}", record.summit_set_size.unwrap_or(0)),
    ];
    let mut v = to_value(&record);
    if with_set {
        let set = data.summit_set.unwrap_or_default();
        plain.extend(set.iter().map(|y| y.to_string()));
        v["summit_set"] = to_value(&set);
    }
    Ok(Output::new(lines(plain), v))
}

fn conjugate(x: &str, y: &str) -> Result<Output> {
    let (x, y) = (read(x)?, read(y)?);
    Ok(match are_conjugate(&x, &y)? {
        Some(c) => Output::new(format!("conjugate c={c}"), json!({ "conjugate": true, "conjugator": c })),
        None => Output::new("not conjugate", json!({ "conjugate": false })),
    })
}

fn oracle_query(q: &OracleQuery) -> Result<Output> {
    match q {
        OracleQuery::Shortest { word, max_len } => {
            let n = oracle::brute_shortest(&read(word)?, *max_len)?;
            let plain = n.map_or("none".to_string(), |n| n.to_string());
            Ok(Output::new(plain, json!({ "shortest": n })))
        }
        OracleQuery::Conjugate { x, y, depth } => {
            let c = oracle::brute_conjugate(&read(x)?, &read(y)?, *depth)?;
            let plain = c.as_ref().map_or("none".to_string(), |c| c.to_string());
            Ok(Output::new(plain, json!({ "conjugator": c })))
        }
        OracleQuery::MaxInf { word, depth } => {
            let m = oracle::brute_max_inf(&read(word)?, *depth)?;
            Ok(Output::new(m.to_string(), json!({ "max_inf": m })))
        }
        OracleQuery::Burau { x, y } => {
            let eq = oracle::burau_equal(&parse(x)?, &parse(y)?);
            Ok(Output::new(eq.to_string(), json!({ "equal": eq })))
        }
    }
}

/// One input line of `batch`. Unknown fields are ignored.
#[derive(Debug, Clone, Deserialize)]
pub struct BatchInput {
    #[serde(default)]
    pub id: Value,
    pub word: String,
    pub command: String,
    /// Second operand for `conjugate`.
    #[serde(default)]
    pub other: Option<String>,
}

/// One output line of `batch`.
#[derive(Debug, Clone, Serialize)]
pub struct BatchRecord {
    pub v: u32,
    pub id: Value,
    pub word: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Value>,
}

fn error_value(e: &Error) -> Value {
    json!({ "kind": format!("{e:?}").split(['(', ' ', '{']).next().unwrap_or(""), "message": e.to_string(), "exit_code": e.exit_code() })
}

fn process_batch_line(line: &str) -> BatchRecord {
    let input: BatchInput = match serde_json::from_str(line) {
        Ok(i) => i,
        Err(e) => {
            return BatchRecord {
                v: SCHEMA_VERSION,
                id: Value::Null,
                word: String::new(),
                command: String::new(),
                result: None,
                error: Some(json!({ "kind": "Json", "message": e.to_string(), "exit_code": 2 })),
            }
        }
    };
    let out = match (input.command.as_str(), &input.other) {
        ("conjugate", Some(other)) => conjugate(&input.word, other),
        ("conjugate", None) => Err(Error::PreconditionFailed("conjugate needs `other`".into())),
        ("summit", _) => read(&input.word).and_then(|x| summit(&x, false)),
        (cmd, _) => run_word_command(cmd, &input.word),
    };
    let (result, error) = match out {
        Ok(o) => (Some(o.json), None),
        Err(e) => (None, Some(error_value(&e))),
    };
    BatchRecord {
        v: SCHEMA_VERSION,
        id: input.id,
        word: input.word,
        command: input.command,
        result,
        error,
    }
}

/// Processes batch lines in parallel and returns records in input order.
pub fn process_batch(lines: &[String]) -> Vec<BatchRecord> {
    lines
        .par_iter()
        .filter(|l| !l.trim().is_empty())
        .map(|l| process_batch_line(l))
        .collect()
}

fn read_lines(path: &str) -> io::Result<Vec<String>> {
    if path == "-" {
        io::stdin().lock().lines().collect()
    } else {
        BufReader::new(File::open(path)?).lines().collect()
    }
}

fn corpus_output() -> Result<(Output, Option<Error>)> {
    let mut plain = Vec::new();
    let mut records = Vec::new();
    for e in CORPUS {
        let r = e.evaluate()?;
        plain.push(format!(
            "{:<14} {:<22} genus={} labels={} relation={} {}",
            e.name,
            e.word,
            r.record.genus,
            r.record.labels,
            r.record.relation,
            if r.matches { "ok" } else { "MISMATCH" }
        ));
        records.push(r);
    }
    let mismatch = records
        .iter()
        .find(|r| !r.matches)
        .map(|r| Error::Internal(format!("corpus entry {} does not match", r.name)));
    Ok((Output::new(lines(plain), to_value(&records)), mismatch))
}

fn dispatch(command: &Command, out: &mut dyn Write, json: bool) -> Result<()> {
    let mut deferred = None;
    let output = match command {
        Command::Normalize { word } => run_word_command("normalize", word)?,
        Command::Invariants { word } => run_word_command("invariants", word)?,
        Command::Summit { word, set } => summit(&read(word)?, *set)?,
        Command::Conjugate { x, y } => conjugate(x, y)?,
        Command::Genus { word } => run_word_command("genus", word)?,
        Command::Shortest { word } => run_word_command("shortest", word)?,
        Command::UnknotSeq { word } => run_word_command("unknot-seq", word)?,
        Command::Classify { word } => run_word_command("classify", word)?,
        Command::Oracle { query } => oracle_query(query)?,
        Command::Corpus => {
            let (output, mismatch) = corpus_output()?;
            deferred = mismatch;
            output
        }
        Command::Batch { jsonl } => {
            let input = read_lines(jsonl).map_err(|e| Error::PreconditionFailed(format!("{jsonl}: {e}")))?;
            for record in process_batch(&input) {
                writeln!(out, "{}", serde_json::to_string(&record).expect("records serialize")).ok();
            }
            return Ok(());
        }
    };
    if json {
        let mut v = output.json;
        if let Value::Object(map) = &mut v {
            map.insert("v".into(), json!(SCHEMA_VERSION));
        } else {
            v = json!({ "v": SCHEMA_VERSION, "result": v });
        }
        writeln!(out, "{v}").ok();
    } else {
        writeln!(out, "{}", output.plain).ok();
    }
    deferred.map_or(Ok(()), Err)
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                write!(out, "{text}").ok();
            } else {
                write!(err, "{text}").ok();
            }
            return code;
        }
    };
    match dispatch(&cli.command, out, cli.json) {
        Ok(()) => 0,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            e.exit_code()
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Parses a word, for callers that only need the syntax check.
pub fn parse_word(text: &str) -> Result<Word> {
    parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("braid3").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn plain_commands() {
        assert_eq!(run_capture(&["normalize", "s1^-1 s2 s1^-1 s2"]).1, "d^-2 | a1^2 a2^2\n");
        assert_eq!(run_capture(&["genus", "a1^3 a2"]).1, "1\n");
        let (code, out, _) = run_capture(&["classify", "a1^3 a2^-3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("labels=ConnectedSumTwoBraids relation=OPEN rep=`a1^3 a2^-3`"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["genus", "a1^2"]).0, 1);
        assert_eq!(run_capture(&["genus", "a1 b2"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
    }

    #[test]
    fn json_output() {
        let (_, out, _) = run_capture(&["--json", "genus", "a1^3 a2"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["genus"], 1);
        assert_eq!(v["v"], 1);
    }

    #[test]
    fn batch_order_and_errors() {
        let input: Vec<String> = [
            r#"{"id": 1, "word": "a1^3 a2", "command": "genus"}"#,
            r#"{"id": 2, "word": "a1^2", "command": "genus", "extra": true}"#,
            r#"{"id": 3, "word": "a1 x", "command": "normalize"}"#,
            r#"{"id": 4, "word": "a1", "command": "conjugate", "other": "a2"}"#,
        ]
        .map(String::from)
        .to_vec();
        let records = process_batch(&input);
        let ids: Vec<_> = records.iter().map(|r| r.id.clone()).collect();
        assert_eq!(ids, vec![json!(1), json!(2), json!(3), json!(4)]);
        assert_eq!(records[0].result.as_ref().unwrap()["genus"], 1);
        assert_eq!(records[1].error.as_ref().unwrap()["exit_code"], 1);
        assert_eq!(records[2].error.as_ref().unwrap()["exit_code"], 2);
        assert_eq!(records[3].result.as_ref().unwrap()["conjugate"], true);
    }
}
