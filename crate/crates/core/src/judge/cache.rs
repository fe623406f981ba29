//! Content-addressed judgment cache.
//!
//! JSON-lines file, one entry per judged document, keyed by a digest of
//! (variant, model, document text). Replaying a benchmark with a warm
//! cache performs zero network calls.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{JudgeError, JudgeVariant, Judgment};

#[derive(Debug, Serialize, Deserialize)]
struct CacheEntry {
    key: String,
    judgment: Judgment,
}

/// On-disk cache of parsed judgments.
#[derive(Debug)]
pub struct JudgmentCache {
    path: PathBuf,
    entries: HashMap<String, Judgment>,
}

impl JudgmentCache {
    /// Open (or create) the cache at `path`, loading existing entries.
    pub fn open(path: &Path) -> Result<Self, JudgeError> {
        let io_err = |source| JudgeError::CacheIo {
            path: path.display().to_string(),
            source,
        };
        let mut entries = HashMap::new();
        match File::open(path) {
            Ok(file) => {
                for line in BufReader::new(file).lines() {
                    let line = line.map_err(io_err)?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    // Unreadable lines are dropped rather than fatal: the
                    // worst case is a re-query.
                    if let Ok(entry) = serde_json::from_str::<CacheEntry>(&line) {
                        entries.insert(entry.key, entry.judgment);
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(io_err(e)),
        }
        Ok(Self {
            path: path.to_path_buf(),
            entries,
        })
    }

    /// Cache key for (variant, model, document text).
    pub fn key(variant: &JudgeVariant, model: &str, text: &str) -> String {
        let mut doc_hasher = Sha256::new();
        doc_hasher.update(text.as_bytes());
        let doc_digest = doc_hasher.finalize();
        let mut hasher = Sha256::new();
        hasher.update(variant.kind.as_str().as_bytes());
        hasher.update([0x1f]);
        hasher.update(model.as_bytes());
        hasher.update([0x1f]);
        hasher.update(doc_digest);
        hex_string(&hasher.finalize())
    }

    pub fn get(&self, key: &str) -> Option<&Judgment> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Append an entry; writes are flushed per entry so a crash loses at
    /// most the judgment in flight.
    pub fn put(&mut self, key: String, judgment: Judgment) -> Result<(), JudgeError> {
        let io_err = |source| JudgeError::CacheIo {
            path: self.path.display().to_string(),
            source,
        };
        if self.entries.contains_key(&key) {
            return Ok(());
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(io_err)?;
        let line = serde_json::to_string(&CacheEntry {
            key: key.clone(),
            judgment: judgment.clone(),
        })
        .expect("judgment serializes");
        writeln!(file, "{line}").map_err(io_err)?;
        file.flush().map_err(io_err)?;
        self.entries.insert(key, judgment);
        Ok(())
    }
}

fn hex_string(bytes: &[u8]) -> String {
    let mut out = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        out.push_str(&format!("{b:02x}"));
    }
    out
}
