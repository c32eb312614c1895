//! JSON-lines catalog: a header, then for each completed level its entries
//! followed by a level marker. Only levels closed by a marker count when
//! the file is read back.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use distset_core::atlas::{AtlasEntry, SolutionRecord};
use distset_core::exact::Mode;
use distset_core::graph::{decode, encode};
use serde::{Deserialize, Serialize};

use crate::DistsetError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub d: usize,
    /// `spherical`, `general` or `both`.
    pub mode: String,
    pub seed_n: usize,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelMark {
    pub mode: String,
    pub n: usize,
    pub entries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub a: String,
    pub b: String,
    pub psd: bool,
    pub rank: usize,
    pub orientation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jspherical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spherical: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub n: usize,
    pub code: String,
    pub mode: String,
    pub survived: bool,
    pub solutions: Vec<SolutionJson>,
    pub set_count: usize,
    pub nonspherical_count: usize,
    pub low_rank_count: usize,
    pub indefinite_only: bool,
    pub self_complementary: bool,
    pub parent: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Header(Header),
    Entry(EntryRecord),
    Level(LevelMark),
}

impl From<&AtlasEntry> for EntryRecord {
    fn from(e: &AtlasEntry) -> Self {
        EntryRecord {
            n: e.n,
            code: e.class_key.to_string(),
            mode: e.mode.as_str().to_string(),
            survived: e.survived,
            solutions: e
                .solutions
                .iter()
                .map(|s| SolutionJson {
                    a: s.a.clone(),
                    b: s.b.clone(),
                    psd: s.psd,
                    rank: s.rank,
                    orientation: s.orientation.as_str().to_string(),
                    jspherical: s.jspherical,
                    spherical: s.spherical,
                })
                .collect(),
            set_count: e.set_count,
            nonspherical_count: e.nonspherical_count,
            low_rank_count: e.low_rank_count,
            indefinite_only: e.indefinite_only(),
            self_complementary: e.self_complementary,
            parent: e.parent.as_ref().map(|p| p.to_string()),
        }
    }
}

impl EntryRecord {
    pub fn to_entry(&self) -> Result<AtlasEntry, distset_core::Error> {
        let parent = match &self.parent {
            Some(p) => Some(encode(&decode(p, self.n - 1)?)),
            None => None,
        };
        let solutions = self
            .solutions
            .iter()
            .map(|s| {
                Ok(SolutionRecord {
                    a: s.a.clone(),
                    b: s.b.clone(),
                    psd: s.psd,
                    rank: s.rank,
                    orientation: s.orientation.parse()?,
                    jspherical: s.jspherical,
                    spherical: s.spherical,
                })
            })
            .collect::<Result<_, distset_core::Error>>()?;
        Ok(AtlasEntry {
            n: self.n,
            class_key: encode(&decode(&self.code, self.n)?),
            mode: self.mode.parse()?,
            survived: self.survived,
            solutions,
            set_count: self.set_count,
            nonspherical_count: self.nonspherical_count,
            low_rank_count: self.low_rank_count,
            self_complementary: self.self_complementary,
            parent,
        })
    }
}

/// The completed part of a catalog file.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub header: Header,
    pub entries: Vec<AtlasEntry>,
    pub levels: Vec<LevelMark>,
}

impl Catalog {
    /// Highest completed level of `mode`, with its entries.
    pub fn last_level(&self, mode: Mode) -> Option<(usize, Vec<AtlasEntry>)> {
        let n = self.levels.iter().filter(|l| l.mode == mode.as_str()).map(|l| l.n).max()?;
        Some((n, self.entries.iter().filter(|e| e.mode == mode && e.n == n).cloned().collect()))
    }
}

/// Read a catalog, ignoring a trailing unfinished level. Also returns the
/// byte length of the completed part.
pub fn read(path: &Path) -> Result<(Catalog, u64), DistsetError> {
    let file = File::open(path).map_err(DistsetError::io(path))?;
    let bad = |line: usize, msg: String| DistsetError::Catalog { path: path.to_path_buf(), line, msg };
    let mut header = None;
    let mut entries = Vec::new();
    let mut pending = Vec::new();
    let mut levels = Vec::new();
    let mut offset = 0u64;
    let mut complete = 0u64;
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(DistsetError::io(path))?;
        offset += line.len() as u64 + 1;
        let record: Record = serde_json::from_str(&line).map_err(|e| bad(i + 1, e.to_string()))?;
        match (record, &header) {
            (Record::Header(h), None) => {
                header = Some(h);
                complete = offset;
            }
            (_, None) => return Err(bad(i + 1, "missing header".into())),
            (Record::Header(_), Some(_)) => return Err(bad(i + 1, "second header".into())),
            (Record::Entry(r), Some(_)) => pending.push(r.to_entry().map_err(|e| bad(i + 1, e.to_string()))?),
            (Record::Level(mark), Some(_)) => {
                let found = pending.len();
                if found != mark.entries || pending.iter().any(|e: &AtlasEntry| e.n != mark.n || e.mode.as_str() != mark.mode) {
                    return Err(bad(i + 1, format!("level marker for {} entries at n={} does not match", mark.entries, mark.n)));
                }
                entries.append(&mut pending);
                levels.push(mark);
                complete = offset;
            }
        }
    }
    let header = header.ok_or_else(|| bad(0, "empty catalog".into()))?;
    Ok((Catalog { header, entries, levels }, complete))
}

pub struct CatalogWriter {
    path: PathBuf,
    out: BufWriter<File>,
}

impl CatalogWriter {
    pub fn create(path: &Path, header: &Header) -> Result<Self, DistsetError> {
        let file = File::create(path).map_err(DistsetError::io(path))?;
        let mut w = CatalogWriter { path: path.to_path_buf(), out: BufWriter::new(file) };
        w.write(&Record::Header(header.clone()))?;
        w.flush()?;
        Ok(w)
    }

    /// Reopen for appending after dropping any unfinished level.
    pub fn resume(path: &Path) -> Result<(Self, Catalog), DistsetError> {
        let (catalog, complete) = read(path)?;
        let file = OpenOptions::new().write(true).open(path).map_err(DistsetError::io(path))?;
        file.set_len(complete).map_err(DistsetError::io(path))?;
        let file = OpenOptions::new().append(true).open(path).map_err(DistsetError::io(path))?;
        Ok((CatalogWriter { path: path.to_path_buf(), out: BufWriter::new(file) }, catalog))
    }

    pub fn write_level(&mut self, mode: Mode, n: usize, entries: &[AtlasEntry]) -> Result<(), DistsetError> {
        for e in entries {
            self.write(&Record::Entry(e.into()))?;
        }
        self.write(&Record::Level(LevelMark { mode: mode.as_str().to_string(), n, entries: entries.len() }))?;
        self.flush()
    }

    fn write(&mut self, r: &Record) -> Result<(), DistsetError> {
        serde_json::to_writer(&mut self.out, r)?;
        self.out.write_all(b"\n").map_err(DistsetError::io(&self.path))
    }

    fn flush(&mut self) -> Result<(), DistsetError> {
        self.out.flush().map_err(DistsetError::io(&self.path))
    }
}
