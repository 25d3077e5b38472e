//! On-disk report cache: one JSON file per (group, computation kind),
//! keyed by a SHA-256 of the Cayley table and the crate version.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use doubleaut::groups::FiniteGroup;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Hash of the group's multiplication table, its name and the library
/// version.
pub fn group_hash(g: &FiniteGroup) -> String {
    let mut h = Sha256::new();
    h.update(b"doubleaut ");
    h.update(VERSION.as_bytes());
    h.update(b"\n");
    h.update(g.name().as_bytes());
    h.update(b"\n");
    h.update((g.order() as u64).to_le_bytes());
    for &x in g.table() {
        h.update(x.to_le_bytes());
    }
    hex::encode(h.finalize())
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Cache { dir }
    }

    /// Default location: $XDG_CACHE_HOME/doubleaut or ~/.cache/doubleaut.
    pub fn default_dir() -> Option<PathBuf> {
        std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))
            .map(|d| d.join("doubleaut"))
    }

    fn path(&self, group: &str, kind: &str) -> PathBuf {
        self.dir.join(format!("{group}.{kind}.json"))
    }

    /// A cached report; unreadable or corrupt entries count as misses.
    pub fn get(&self, group: &str, kind: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(group, kind)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Store a report. Failures are not fatal: the cache is an optimization.
    pub fn put(&self, group: &str, kind: &str, value: &Value) {
        if fs::create_dir_all(&self.dir).is_ok() {
            let _ = write_atomic(&self.path(group, kind), &render(value));
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Write through a temporary file in the target directory and rename it
/// into place.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
