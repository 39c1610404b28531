//! Append-only verdict cache: one JSON object per line,
//! `{"checksum": <sha-256 of the record>, "record": {...}}`, keyed by the
//! record's canonical form.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::record::VerdictRecord;

/// Environment variable that overrides the cache path.
pub const CACHE_ENV: &str = "CYCLEMONOID_CACHE";

/// Hex SHA-256 of the compact serialisation of `record`. Object keys of a
/// `serde_json::Value` are sorted, so this does not depend on field order.
fn checksum(record: &Value) -> String {
    let digest = Sha256::digest(record.to_string().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug)]
pub struct VerdictCache {
    path: PathBuf,
    entries: HashMap<String, VerdictRecord>,
}

impl VerdictCache {
    /// Loads the cache at `path`, which need not exist yet. Any line whose
    /// checksum does not match is an error: the file has been corrupted.
    pub fn open(path: impl AsRef<Path>) -> anyhow::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            let file = File::open(&path).with_context(|| format!("opening cache {}", path.display()))?;
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let at = || format!("{}:{}", path.display(), i + 1);
                let v: Value = serde_json::from_str(&line).with_context(|| format!("cache corrupted at {}", at()))?;
                let (Some(sum), Some(rec)) = (v.get("checksum").and_then(Value::as_str), v.get("record")) else {
                    bail!("cache corrupted at {}: missing checksum or record", at());
                };
                if checksum(rec) != sum {
                    bail!("cache corrupted at {}: checksum mismatch", at());
                }
                let rec: VerdictRecord =
                    serde_json::from_value(rec.clone()).with_context(|| format!("cache corrupted at {}", at()))?;
                entries.entry(rec.canonical.clone()).or_insert(rec);
            }
        }
        Ok(VerdictCache { path, entries })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, canonical: &str) -> Option<&VerdictRecord> {
        self.entries.get(canonical)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &HashMap<String, VerdictRecord> {
        &self.entries
    }

    /// A writer appending to the cache file.
    pub fn appender(&self) -> anyhow::Result<CacheAppender> {
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening cache {} for writing", self.path.display()))?;
        Ok(CacheAppender { file })
    }

    /// Inserts and persists `rec` unless its key is already present.
    /// Returns whether anything was written.
    pub fn insert(&mut self, rec: VerdictRecord) -> anyhow::Result<bool> {
        if self.entries.contains_key(&rec.canonical) {
            return Ok(false);
        }
        self.appender()?.append(&rec)?;
        self.entries.insert(rec.canonical.clone(), rec);
        Ok(true)
    }

    /// Records already written through an appender.
    pub fn absorb(&mut self, recs: impl IntoIterator<Item = VerdictRecord>) {
        for rec in recs {
            self.entries.entry(rec.canonical.clone()).or_insert(rec);
        }
    }
}

pub struct CacheAppender {
    file: File,
}

impl CacheAppender {
    pub fn append(&mut self, rec: &VerdictRecord) -> anyhow::Result<()> {
        let rec = serde_json::to_value(rec)?;
        let line = serde_json::json!({ "checksum": checksum(&rec), "record": rec });
        writeln!(self.file, "{line}")?;
        Ok(())
    }
}
