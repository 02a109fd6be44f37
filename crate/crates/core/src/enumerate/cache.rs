//! Append-only CSV cache of completed counting queries.
//!
//! Format: a `kind,sigma,k,n,i,count` header, then one line per query.
//! Empty `sigma`/`i` fields mean "not applicable".

use std::collections::HashMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use super::{EnumError, Result};
use crate::patterns::Pattern;

pub const CACHE_HEADER: &str = "kind,sigma,k,n,i,count";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountKind {
    T,
    F,
    FAll,
    AIrred,
    ANi,
    CyclicT,
}

impl CountKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CountKind::T => "T",
            CountKind::F => "F",
            CountKind::FAll => "F_all",
            CountKind::AIrred => "A_irred",
            CountKind::ANi => "A_ni",
            CountKind::CyclicT => "CyclicT",
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "T" => CountKind::T,
            "F" => CountKind::F,
            "F_all" => CountKind::FAll,
            "A_irred" => CountKind::AIrred,
            "A_ni" => CountKind::ANi,
            "CyclicT" => CountKind::CyclicT,
            _ => return Err(format!("unknown count kind {s:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountQuery {
    pub kind: CountKind,
    pub sigma: Option<Pattern>,
    pub k: u32,
    pub n: usize,
    pub i: Option<usize>,
}

impl CountQuery {
    pub fn new(kind: CountKind, sigma: Option<Pattern>, k: u32, n: usize, i: Option<usize>) -> Self {
        // Kinds that ignore k or σ are normalised so cache keys stay unique.
        let (sigma, k) = match kind {
            CountKind::AIrred | CountKind::ANi => (Some("321".parse().expect("pattern")), 1),
            CountKind::CyclicT => (sigma, 1),
            _ => (sigma, k),
        };
        CountQuery { kind, sigma, k, n, i }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(EnumError::InvalidQuery(msg.to_string()));
        if self.k == 0 {
            return bad("k must be at least 1");
        }
        if self.n == 0 {
            return bad("n must be at least 1");
        }
        match self.kind {
            CountKind::FAll if self.sigma.is_some() => return bad("F_all takes no pattern"),
            CountKind::FAll => {}
            _ if self.sigma.is_none() => return bad("a pattern is required"),
            _ => {}
        }
        match (self.kind, self.i) {
            (CountKind::ANi, None) => bad("A_ni needs a position i"),
            (CountKind::ANi, Some(i)) if i == 0 || i > self.n => bad("position i must lie in 1..=n"),
            (CountKind::ANi, Some(_)) => Ok(()),
            (_, Some(_)) => bad("only A_ni takes a position i"),
            (_, None) => Ok(()),
        }
    }

    fn to_line(&self, count: u64) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.kind,
            self.sigma.as_ref().map(ToString::to_string).unwrap_or_default(),
            self.k,
            self.n,
            self.i.map(|i| i.to_string()).unwrap_or_default(),
            count
        )
    }

    fn from_line(line: &str) -> Option<(CountQuery, u64)> {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let [kind, sigma, k, n, i, count] = fields.as_slice() else {
            return None;
        };
        let sigma = if sigma.is_empty() { None } else { Some(sigma.parse().ok()?) };
        let i = if i.is_empty() { None } else { Some(i.parse().ok()?) };
        let query = CountQuery {
            kind: kind.parse().ok()?,
            sigma,
            k: k.parse().ok()?,
            n: n.parse().ok()?,
            i,
        };
        Some((query, count.parse().ok()?))
    }
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("cache {path} line {line}: malformed record {text:?}")]
    Malformed { path: PathBuf, line: usize, text: String },
}

/// Results of earlier queries, backed by an append-only file.
#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    entries: HashMap<CountQuery, u64>,
}

impl ResultCache {
    /// Loads `path`, treating a missing file as an empty cache.
    pub fn open(path: impl AsRef<Path>) -> std::result::Result<Self, CacheError> {
        let path = path.as_ref().to_path_buf();
        let io_err = |source| CacheError::Io {
            path: path.clone(),
            source,
        };
        let mut entries = HashMap::new();
        match File::open(&path) {
            Ok(file) => {
                for (idx, line) in BufReader::new(file).lines().enumerate() {
                    let line = line.map_err(io_err)?;
                    if line.trim().is_empty() || (idx == 0 && line.trim() == CACHE_HEADER) {
                        continue;
                    }
                    let (query, count) =
                        CountQuery::from_line(&line).ok_or_else(|| CacheError::Malformed {
                            path: path.clone(),
                            line: idx + 1,
                            text: line.clone(),
                        })?;
                    entries.insert(query, count);
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(io_err(e)),
        }
        Ok(ResultCache { path, entries })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, query: &CountQuery) -> Option<u64> {
        self.entries.get(query).copied()
    }

    /// Appends a completed query, writing the header on first use.
    pub fn record(&mut self, query: &CountQuery, count: u64) -> io::Result<()> {
        if self.entries.get(query) == Some(&count) {
            return Ok(());
        }
        let fresh = !self.path.exists();
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        if fresh {
            writeln!(file, "{CACHE_HEADER}")?;
        }
        writeln!(file, "{}", query.to_line(count))?;
        self.entries.insert(query.clone(), count);
        Ok(())
    }
}
