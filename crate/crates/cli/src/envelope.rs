use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use anyhow::Context;
use critgraph::constraints::CriticalityReport;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const TOOL: &str = "critgraph";

/// Wrapper around every JSON payload the tool emits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope<T> {
    pub tool: String,
    pub version: String,
    /// SHA-256 of the trimmed graph6 line, when the payload is about one graph.
    pub input_digest: Option<String>,
    /// 1-based line of the input file.
    pub source_line: Option<usize>,
    pub timestamp: String,
    pub payload: T,
}

impl<T> ReportEnvelope<T> {
    pub fn new(payload: T, input: Option<&str>, source_line: Option<usize>) -> Self {
        Self {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: input.map(digest),
            source_line,
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            payload,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AnalyzePayload {
    Report(CriticalityReport),
    Error { message: String },
}

pub fn digest(line: &str) -> String {
    hex::encode(Sha256::digest(line.trim().as_bytes()))
}

/// Appends one JSON line per record.
pub fn append_jsonl<T: Serialize>(path: &Path, records: &[T]) -> anyhow::Result<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening log {}", path.display()))?;
    for r in records {
        serde_json::to_writer(&mut file, r)?;
        file.write_all(b"\n")?;
    }
    Ok(())
}
