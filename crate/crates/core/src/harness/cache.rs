//! On-disk cache of `DOM` values.
//!
//! One line per entry in `dom-cache.tsv`: `hash<TAB>value<TAB>version`.
//! Keys hash the labeled graph (order plus canonical edge list), so
//! relabeled copies of the same graph are cache misses. Entries written by
//! another solver version are ignored.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::graph::UndirectedGraph;

pub const SOLVER_VERSION: &str = concat!("orientdom-", env!("CARGO_PKG_VERSION"));
pub const CACHE_FILE: &str = "dom-cache.tsv";
pub const CACHE_DIR_ENV: &str = "ORIENTDOM_CACHE_DIR";

pub fn graph_key(g: &UndirectedGraph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("{}", g.n()));
    for &(u, v) in g.edges() {
        hasher.update(format!(";{u},{v}"));
    }
    hex::encode(hasher.finalize())
}

#[derive(Debug, Clone)]
pub struct DomCache {
    file: PathBuf,
    version: String,
}

impl DomCache {
    pub fn new(dir: &Path) -> Self {
        DomCache::with_version(dir, SOLVER_VERSION)
    }

    pub fn with_version(dir: &Path, version: &str) -> Self {
        DomCache { file: dir.join(CACHE_FILE), version: version.to_string() }
    }

    pub fn path(&self) -> &Path {
        &self.file
    }

    pub fn lookup(&self, g: &UndirectedGraph) -> Option<usize> {
        let text = fs::read_to_string(&self.file).ok()?;
        let key = graph_key(g);
        let mut found = None;
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let parsed = match fields.as_slice() {
                [hash, value, version] if hash.len() == 64 => value.parse::<usize>().ok().map(|v| (*hash, v, *version)),
                _ => None,
            };
            match parsed {
                Some((hash, value, version)) => {
                    if hash == key && version == self.version {
                        found = Some(value);
                    }
                }
                None => log::warn!("{}:{}: skipping corrupt cache line", self.file.display(), i + 1),
            }
        }
        found
    }

    pub fn store(&self, g: &UndirectedGraph, value: usize) -> Result<()> {
        if let Some(dir) = self.file.parent() {
            fs::create_dir_all(dir)?;
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.file)?;
        writeln!(f, "{}\t{}\t{}", graph_key(g), value, self.version)?;
        Ok(())
    }
}
