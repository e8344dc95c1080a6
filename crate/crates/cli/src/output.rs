use std::time::Duration;

use derlog_core::CheckReport;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// SHA-256 of the arguments and the input file contents.
pub fn input_hash(argv: &[String], source: Option<&str>) -> String {
    let mut h = Sha256::new();
    for a in argv {
        h.update(a.as_bytes());
        h.update([0]);
    }
    if let Some(s) = source {
        h.update([1]);
        h.update(s.as_bytes());
    }
    hex::encode(h.finalize())
}

/// The report envelope; object keys come out sorted.
pub fn json(command: &str, hash: &str, report: &CheckReport, elapsed: Option<Duration>) -> String {
    let timings = match elapsed {
        Some(d) => json!({ "total": d.as_millis() as u64 }),
        None => json!({}),
    };
    let doc: Value = json!({
        "command": command,
        "check": report.check,
        "input_hash": hash,
        "verdict": report.verdict,
        "witnesses": report.witnesses,
        "caveats": report.caveats,
        "timings_ms": timings,
        "engine_version": derlog_core::VERSION,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}
