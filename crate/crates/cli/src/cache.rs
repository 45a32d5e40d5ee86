//! Append-only JSON-lines result store.
//!
//! Each line holds one entry keyed by the SHA-256 of the engine version and
//! the canonical request JSON. Writers take an exclusive lock on the file,
//! readers a shared one, so concurrent processes can share a cache.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub engine: String,
    pub input: Value,
    pub output: Value,
}

pub struct Cache {
    path: PathBuf,
}

pub fn key(engine: &str, input: &Value) -> String {
    let mut h = Sha256::new();
    h.update(engine.as_bytes());
    h.update(b"\n");
    h.update(input.to_string().as_bytes());
    hex::encode(h.finalize())
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Cache { path: path.into() }
    }

    fn scan(file: &File, path: &Path) -> Result<Vec<Entry>> {
        let mut out = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let e: Entry = serde_json::from_str(&line)
                .with_context(|| format!("{}:{}: malformed cache entry", path.display(), i + 1))?;
            out.push(e);
        }
        Ok(out)
    }

    fn find(entries: &[Entry], engine: &str, input: &Value) -> Result<Option<Value>> {
        let k = key(engine, input);
        match entries.iter().find(|e| e.key == k) {
            Some(e) if e.engine != engine || &e.input != input => {
                bail!("cache key collision on {k}: stored input differs from the request")
            }
            Some(e) => Ok(Some(e.output.clone())),
            None => Ok(None),
        }
    }

    pub fn entries(&self) -> Result<Vec<Entry>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e).with_context(|| format!("opening cache {}", self.path.display())),
        };
        file.lock_shared()?;
        let entries = Self::scan(&file, &self.path);
        file.unlock()?;
        entries
    }

    pub fn lookup(&self, engine: &str, input: &Value) -> Result<Option<Value>> {
        Self::find(&self.entries()?, engine, input)
    }

    /// Appends an entry unless an identical key is already present. A stored
    /// output that differs from `output` is an error.
    pub fn store(&self, engine: &str, input: &Value, output: &Value) -> Result<()> {
        let mut file = OpenOptions::new()
            .read(true)
            .append(true)
            .create(true)
            .open(&self.path)
            .with_context(|| format!("opening cache {}", self.path.display()))?;
        file.lock()?;
        let result = (|| {
            file.seek(SeekFrom::Start(0))?;
            let entries = Self::scan(&file, &self.path)?;
            match Self::find(&entries, engine, input)? {
                Some(old) if &old == output => Ok(()),
                Some(_) => bail!("cache already holds a different result for this request"),
                None => {
                    let e = Entry { key: key(engine, input), engine: engine.into(), input: input.clone(), output: output.clone() };
                    let mut line = serde_json::to_string(&e)?;
                    line.push('\n');
                    file.write_all(line.as_bytes())?;
                    file.flush()?;
                    Ok(())
                }
            }
        })();
        file.unlock()?;
        result
    }
}
