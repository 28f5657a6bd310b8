//! On-disk results, one JSON file per entry.
//!
//! An entry records its full key, including the engine version, and a SHA-256
//! of the payload. Reads that find a mismatch of either kind report a miss;
//! writes go through a temporary file in the same directory and a rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub kind: String,
    pub subject: String,
    pub mode: String,
    pub engine: String,
}

impl CacheKey {
    pub fn new(kind: &str, subject: impl ToString, mode: &str, engine: &str) -> Self {
        CacheKey { kind: kind.into(), subject: subject.to_string(), mode: mode.into(), engine: engine.into() }
    }

    fn file_name(&self) -> String {
        let text = serde_json::to_string(self).expect("keys serialize");
        format!("{}-{}.json", self.kind, hex(&Sha256::digest(text.as_bytes())))
    }
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: CacheKey,
    checksum: String,
    payload: String,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn checksum(payload: &str) -> String {
    hex(&Sha256::digest(payload.as_bytes()))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_of(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// The payload stored under `key`; a missing, stale or corrupt entry is a
    /// miss, and the latter two print a warning.
    pub fn get(&self, key: &CacheKey) -> Option<String> {
        let path = self.path_of(key);
        let text = fs::read_to_string(&path).ok()?;
        let entry: CacheEntry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => {
                eprintln!("warning: ignoring unreadable cache entry {}: {e}", path.display());
                return None;
            }
        };
        if entry.key != *key {
            eprintln!("warning: ignoring cache entry {} written for another key", path.display());
            return None;
        }
        if entry.checksum != checksum(&entry.payload) {
            eprintln!("warning: ignoring cache entry {} with a bad checksum", path.display());
            return None;
        }
        Some(entry.payload)
    }

    pub fn put(&self, key: &CacheKey, payload: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry { key: key.clone(), checksum: checksum(payload), payload: payload.to_string() };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string_pretty(&entry)?.as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.persist(self.path_of(key)).map_err(|e| e.error)?;
        Ok(())
    }
}
