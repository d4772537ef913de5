//! On-disk cache of avoider counts.
//!
//! The file is plain JSON, `{"version":1,"counts":{"1324:6":"513"}}`. It is
//! advisory: a missing, unreadable or foreign-version file behaves like an
//! empty cache, and deleting it never changes a result.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "PERM1324_CACHE";
pub const DEFAULT_CACHE_FILE: &str = ".perm1324-cache.json";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub counts: BTreeMap<String, String>,
}

impl Default for CacheFile {
    fn default() -> Self {
        CacheFile { version: SCHEMA_VERSION, counts: BTreeMap::new() }
    }
}

pub fn key(pattern: &str, n: usize) -> String {
    format!("{pattern}:{n}")
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    file: CacheFile,
    dirty: bool,
}

impl Cache {
    /// Loads `path`, falling back to an empty cache.
    pub fn open(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        let file = match fs::read_to_string(&path) {
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(f) if f.version == SCHEMA_VERSION => f,
                Ok(f) => {
                    eprintln!("ignoring cache {} with schema version {}", path.display(), f.version);
                    CacheFile::default()
                }
                Err(e) => {
                    eprintln!("ignoring unreadable cache {}: {e}", path.display());
                    CacheFile::default()
                }
            },
            Err(_) => CacheFile::default(),
        };
        Cache { path, file, dirty: false }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, pattern: &str, n: usize) -> Option<BigUint> {
        self.file.counts.get(&key(pattern, n)).and_then(|s| s.parse().ok())
    }

    pub fn insert(&mut self, pattern: &str, n: usize, count: &BigUint) {
        let value = count.to_string();
        if self.file.counts.insert(key(pattern, n), value.clone()).as_ref() != Some(&value) {
            self.dirty = true;
        }
    }

    pub fn entries(&self) -> &BTreeMap<String, String> {
        &self.file.counts
    }

    /// Writes to a temporary file beside the target and renames it over.
    pub fn save(&mut self) -> std::io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let dir = match self.path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
            _ => PathBuf::from("."),
        };
        fs::create_dir_all(&dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
        serde_json::to_writer_pretty(&mut tmp, &self.file)?;
        tmp.write_all(b"\n")?;
        tmp.persist(&self.path).map_err(|e| e.error)?;
        self.dirty = false;
        Ok(())
    }
}
