//! Command-line dispatch: argv in, a JSON or markdown document and an exit code out.

mod args;
mod commands;
mod input;
mod reports;

pub use args::{Cli, Format};
pub use commands::OUT_DIR_VAR;
pub use input::{multivector_json, parse_curvature, parse_multivector, parse_vector, tensor_json};

use crate::error::Error;
use clap::Parser;
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandStatus {
    Ok,
    Failed,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: CommandStatus,
    pub exit_code: i32,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Successful or failed command before flags are applied.
pub(crate) struct Outcome {
    ok: bool,
    payload: Value,
}

impl Outcome {
    pub(crate) fn ok(payload: Value) -> Self {
        Outcome { ok: true, payload }
    }
    pub(crate) fn failed(payload: Value) -> Self {
        Outcome { ok: false, payload }
    }
}

impl CommandResult {
    fn new(status: CommandStatus, exit_code: i32, payload: Value) -> Self {
        CommandResult { status, exit_code, payload, timestamp: None }
    }
}

fn is_rational(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    let mut parts = body.splitn(2, '/');
    let digits = |p: Option<&str>| p.is_some_and(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()));
    let num = parts.next();
    match parts.next() {
        Some(den) => digits(num) && digits(Some(den)),
        None => digits(num),
    }
}

/// Replaces each exact rational string by `{"exact": …, "approx": "≈…"}`.
fn with_decimals(v: Value) -> Value {
    match v {
        Value::String(s) if is_rational(&s) => {
            let approx = crate::rational::parse_q(&s).map(|x| crate::rational::to_f64(&x)).unwrap_or(f64::NAN);
            json!({"exact": s, "approx": format!("≈{approx}")})
        }
        Value::Array(a) => Value::Array(a.into_iter().map(with_decimals).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, with_decimals(v))).collect()),
        other => other,
    }
}

fn dispatch_with_format(argv: &[String]) -> (CommandResult, Format) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    (CommandResult::new(CommandStatus::Ok, EXIT_OK, json!({"help": text})), Format::Json)
                }
                _ => (CommandResult::new(CommandStatus::Error, EXIT_USAGE, json!({"error": "usage", "message": text})), Format::Json),
            };
        }
    };
    let mut result = match commands::run(&cli.command) {
        Ok(o) if o.ok => CommandResult::new(CommandStatus::Ok, EXIT_OK, o.payload),
        Ok(o) => CommandResult::new(CommandStatus::Failed, EXIT_FAILED, o.payload),
        Err(e) => CommandResult::new(CommandStatus::Error, EXIT_INPUT, error_payload(&e)),
    };
    if cli.decimal {
        result.payload = with_decimals(result.payload);
    }
    if cli.timestamp {
        result.timestamp = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).ok().map(|d| d.as_secs());
    }
    (result, cli.format)
}

fn error_payload(e: &Error) -> Value {
    match e {
        Error::Parse { line, column, msg } => json!({"error": "parse", "line": line, "column": column, "message": msg}),
        other => json!({"error": "input", "message": other.to_string()}),
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn dispatch<S: AsRef<str>>(argv: &[S]) -> CommandResult {
    let argv: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    dispatch_with_format(&argv).0
}

/// Stable serialization of a result.
pub fn emit_report(result: &CommandResult, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(result).expect("values serialize") + "\n",
        Format::Markdown => {
            let mut out = String::from("# holonomy report\n\n");
            let status = serde_json::to_value(result.status).expect("status serializes");
            out += &format!("status: {} (exit {})\n\n", status.as_str().unwrap_or("?"), result.exit_code);
            if let Some(t) = result.timestamp {
                out += &format!("timestamp: {t}\n\n");
            }
            markdown(&result.payload, 2, &mut out);
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(_) | Value::Bool(_) | Value::Null => Some(v.to_string()),
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::String(_) | Value::Number(_) | Value::Bool(_))) => {
            Some(a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

fn flat_object(v: &Value) -> Option<&Map<String, Value>> {
    v.as_object().filter(|o| o.values().all(|x| scalar(x).is_some()))
}

fn markdown(v: &Value, level: usize, out: &mut String) {
    let hashes = "#".repeat(level.min(6));
    match v {
        Value::Object(o) => {
            let rows: Vec<(&String, String)> = o.iter().filter_map(|(k, x)| scalar(x).map(|s| (k, s))).collect();
            if !rows.is_empty() {
                out.push_str("| key | value |\n|---|---|\n");
                for (k, s) in rows {
                    out.push_str(&format!("| {k} | {s} |\n"));
                }
                out.push('\n');
            }
            for (k, x) in o.iter().filter(|(_, x)| scalar(x).is_none()) {
                out.push_str(&format!("{hashes} {k}\n\n"));
                markdown(x, level + 1, out);
            }
        }
        Value::Array(a) if !a.is_empty() && a.iter().all(|x| flat_object(x).is_some()) => {
            let mut cols: Vec<&String> = Vec::new();
            for x in a {
                for k in flat_object(x).expect("checked").keys() {
                    if !cols.contains(&k) {
                        cols.push(k);
                    }
                }
            }
            out.push_str(&format!("| {} |\n|{}\n", cols.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(" | "), "---|".repeat(cols.len())));
            for x in a {
                let o = flat_object(x).expect("checked");
                let cells: Vec<String> = cols.iter().map(|c| o.get(*c).and_then(scalar).unwrap_or_default()).collect();
                out.push_str(&format!("| {} |\n", cells.join(" | ")));
            }
            out.push('\n');
        }
        Value::Array(a) => match scalar(v) {
            Some(s) => out.push_str(&format!("{s}\n\n")),
            None => {
                for (i, x) in a.iter().enumerate() {
                    out.push_str(&format!("{hashes} [{i}]\n\n"));
                    markdown(x, level + 1, out);
                }
            }
        },
        other => out.push_str(&format!("{}\n\n", scalar(other).unwrap_or_default())),
    }
}

/// Entry point for the binary: prints the document and returns the exit code.
pub fn run<I: IntoIterator<Item = String>>(argv: I) -> i32 {
    let argv: Vec<String> = argv.into_iter().collect();
    let (result, format) = dispatch_with_format(&argv);
    print!("{}", emit_report(&result, format));
    result.exit_code
}
