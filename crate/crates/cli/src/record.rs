//! Line-delimited JSON experiment log.

use std::collections::BTreeSet;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use superfit::fitting::{Report, SetupSpec, Status};

use crate::args::Claim;

pub const LOG_DIR_ENV: &str = "SUPERFIT_LOG_DIR";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub timestamp: String,
    /// `superfit verify …` arguments that reproduce this record.
    pub command: Vec<String>,
    pub claim: Claim,
    pub instance: SetupSpec,
    pub status: Status,
    pub summary: serde_json::Value,
    pub wall_ms: u128,
    pub engine_version: String,
}

impl ExperimentRecord {
    pub fn new(command: Vec<String>, claim: Claim, report: Report, wall_ms: u128) -> Self {
        ExperimentRecord {
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
            command,
            claim,
            instance: report.instance,
            status: report.status,
            summary: report.witnesses,
            wall_ms,
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Records with equal keys describe the same computation.
    pub fn key(&self) -> String {
        self.command.join(" ")
    }
}

pub fn default_log_path(claim: Claim) -> PathBuf {
    let dir = std::env::var_os(LOG_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
    dir.join(format!("sweep-{}.jsonl", claim.name()))
}

/// Keys of the records already in `path`. Unparsable lines are ignored, so
/// a run interrupted mid-line can be resumed.
pub fn recorded_keys(path: &Path) -> std::io::Result<BTreeSet<String>> {
    if !path.exists() {
        return Ok(BTreeSet::new());
    }
    let mut keys = BTreeSet::new();
    for line in BufReader::new(File::open(path)?).lines() {
        if let Ok(record) = serde_json::from_str::<ExperimentRecord>(&line?) {
            keys.insert(record.key());
        }
    }
    Ok(keys)
}

/// Append-only writer; every record is flushed as one line.
pub struct RecordLog {
    file: File,
}

impl RecordLog {
    pub fn open(path: &Path) -> std::io::Result<Self> {
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent)?;
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        // a truncated last line must not swallow the next record
        let len = file.metadata()?.len();
        if len > 0 && !fs::read(path)?.ends_with(b"\n") {
            file.write_all(b"\n")?;
        }
        Ok(RecordLog { file })
    }

    pub fn append(&mut self, record: &ExperimentRecord) -> std::io::Result<()> {
        let line = serde_json::to_string(record).map_err(std::io::Error::other)?;
        writeln!(self.file, "{line}")?;
        self.file.flush()
    }
}
