//! Append-only catalog of quantum codes: one JSON object per line.
//!
//! Queries hand back the stored lines untouched, so a record appended and
//! queried again is byte-identical.

use crate::code::{build, ConstaCode};
use crate::cyclotomic::{Ambient, CosetSet, Shift};
use crate::error::{Error, Result};
use crate::quantum::{Certification, Construction, QuantumParams};
use crate::weights::Distance;
use serde::{Deserialize, Serialize};
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

pub const TOOL_VERSION: &str = concat!("duadic ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRecord {
    pub n: u32,
    pub k: u32,
    pub d: Distance,
    pub degenerate: Option<bool>,
    pub shift: Shift,
    /// Length of the witness code, which differs from `n` for extensions.
    pub witness_n: u32,
    /// Coset leaders of the witness code's defining set.
    pub leaders: Vec<u32>,
    pub construction: Construction,
    pub splitting: Option<String>,
    pub method: Certification,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub tool_version: String,
    /// Seconds since the Unix epoch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl CatalogRecord {
    pub fn from_params(q: &QuantumParams) -> CatalogRecord {
        CatalogRecord {
            n: q.n,
            k: q.k,
            d: q.d,
            degenerate: q.degenerate.as_bool(),
            shift: q.shift,
            witness_n: q.witness_n,
            leaders: q.leaders.clone(),
            construction: q.construction,
            splitting: q.splitting.as_ref().map(|s| s.to_string()),
            method: q.method.clone(),
            notes: q.notes.clone(),
            tool_version: TOOL_VERSION.to_string(),
            timestamp: None,
        }
    }

    pub fn stamped(mut self) -> CatalogRecord {
        self.timestamp = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).ok().map(|d| d.as_secs());
        self
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialise")
    }

    pub fn parse(line: &str) -> Result<CatalogRecord> {
        serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Rebuild the witness code from its length, shift and leaders.
    pub fn witness(&self) -> Result<ConstaCode> {
        let amb = Ambient::new(self.witness_n, self.shift)?;
        build(amb, &CosetSet::from_leaders(amb, &self.leaders)?)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Query {
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub construction: Option<Construction>,
    pub shift: Option<Shift>,
    pub degenerate: Option<bool>,
}

impl Query {
    pub fn matches(&self, r: &CatalogRecord) -> bool {
        self.n.map_or(true, |n| r.n == n)
            && self.k.map_or(true, |k| r.k == k)
            && self.construction.map_or(true, |c| r.construction == c)
            && self.shift.map_or(true, |s| r.shift == s)
            && self.degenerate.map_or(true, |g| r.degenerate == Some(g))
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    path: PathBuf,
}

static WRITER: Mutex<()> = Mutex::new(());

impl Catalog {
    pub fn open(path: impl AsRef<Path>) -> Catalog {
        Catalog { path: path.as_ref().to_path_buf() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Append one record as a single line; returns the line written.
    pub fn append(&self, r: &CatalogRecord) -> Result<String> {
        let line = r.to_line();
        let _guard = WRITER.lock().unwrap_or_else(|e| e.into_inner());
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(line.as_bytes())?;
        f.write_all(b"\n")?;
        Ok(line)
    }

    /// Stored lines matching `q`, with their parsed records. Blank lines are
    /// skipped; a malformed line is an error naming its line number.
    pub fn query(&self, q: &Query) -> Result<Vec<(String, CatalogRecord)>> {
        if !self.path.exists() {
            return Ok(Vec::new());
        }
        let f = std::fs::File::open(&self.path)?;
        let mut out = Vec::new();
        for (i, line) in BufReader::new(f).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let r = CatalogRecord::parse(&line).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
            if q.matches(&r) {
                out.push((line, r));
            }
        }
        Ok(out)
    }
}
