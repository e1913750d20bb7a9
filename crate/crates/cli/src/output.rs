use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};
use superq::report::Report;
use superq::Error;

/// Everything a subcommand prints, in a fixed key order.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: String,
    pub version: &'static str,
    pub params: Map<String, Value>,
    pub pass: bool,
    pub checks: Vec<superq::report::Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifact: Option<Value>,
}

impl Envelope {
    pub fn new(command: &str, params: Map<String, Value>, report: Report, artifact: Option<Value>) -> Envelope {
        let report = report.sorted();
        Envelope {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION"),
            params,
            pass: report.pass(),
            checks: report.checks,
            artifact,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable") + "\n"
    }
}

pub fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Exit status for an error raised before any check could run.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InvalidOrder(_)
        | Error::InvalidMu { .. }
        | Error::CapExceeded { .. }
        | Error::IndexError(_)
        | Error::Parse(_) => 2,
        _ => 1,
    }
}
