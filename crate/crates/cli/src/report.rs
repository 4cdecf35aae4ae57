use std::fmt;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::RunConfig;

pub const REPORT_VERSION: u64 = 1;

/// One command's output: named JSON fields plus the lines of its text form.
pub struct Report {
    command: String,
    fields: Map<String, Value>,
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            fields: Map::new(),
            lines: Vec::new(),
        }
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("report fields serialize");
        self.fields.insert(key.to_string(), v);
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn render(&self, cfg: &RunConfig) -> String {
        if cfg.json() {
            let mut out = header(&self.command, cfg);
            out.extend(self.fields.clone());
            serde_json::to_string_pretty(&Value::Object(out)).expect("valid json")
        } else {
            self.lines.join("\n")
        }
    }

    /// The run settings, echoed on stderr in text mode.
    pub fn footer(cfg: &RunConfig) -> String {
        format!(
            "(window {}, seed {}{})",
            cfg.window,
            cfg.seed,
            if cfg.exhaustive { ", exhaustive" } else { "" }
        )
    }
}

fn header(command: &str, cfg: &RunConfig) -> Map<String, Value> {
    let v = json!({
        "report_version": REPORT_VERSION,
        "command": command,
        "window": cfg.window,
        "seed": cfg.seed,
        "exhaustive": cfg.exhaustive,
    });
    match v {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain {
        kind: String,
        message: String,
        detail: Option<Value>,
    },
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn domain(kind: &str, msg: impl Into<String>) -> Self {
        CliError::Domain {
            kind: kind.to_string(),
            message: msg.into(),
            detail: None,
        }
    }

    pub fn with_detail(self, d: Value) -> Self {
        match self {
            CliError::Domain { kind, message, .. } => CliError::Domain {
                kind,
                message,
                detail: Some(d),
            },
            u => u,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }

    pub fn render(&self, command: &str, cfg: &RunConfig) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Domain {
                kind,
                message,
                detail,
            } => {
                if cfg.json() {
                    let mut out = header(command, cfg);
                    let mut err = json!({ "kind": kind, "message": message });
                    if let Some(d) = detail {
                        err["detail"] = d.clone();
                    }
                    out.insert("error".into(), err);
                    serde_json::to_string_pretty(&Value::Object(out)).expect("valid json")
                } else {
                    format!("error ({kind}): {message}")
                }
            }
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Domain { message, .. } => write!(f, "{message}"),
        }
    }
}

/// The variant name of a library error, used as the error kind.
fn kind_of(e: &impl fmt::Debug) -> String {
    let d = format!("{e:?}");
    let end = d.find(['(', ' ', '{']).unwrap_or(d.len());
    d[..end].to_string()
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::domain(&kind_of(&e), e.to_string())
            }
        }
    )*};
}

domain_from!(
    bqo::OrderError,
    bqo::FrontError,
    bqo::SeqError,
    bqo::GameError,
    bqo::RamseyError,
    bqo::ShiftError
);

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::domain("Io", e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::domain("Json", e.to_string())
    }
}

pub type CliResult = Result<Report, CliError>;
