//! Text encodings of Grundy tables.
//!
//! * CSV: header `a,b,g`, then one `a,b,g` row per position in lexicographic
//!   order.
//! * Table file: a one-line JSON header
//!   `{"schema_version":1,"family":..,"k":..,"l":..,"N":..}` followed by the
//!   same rows without a CSV header. Used by [`TableCache`].
//!
//! Both encodings are canonical, so rebuilding a table reproduces its file
//! byte for byte.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grundy::{grundy_table, GrundyTable};
use crate::rulesets::{Family, Ruleset};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "WYTHOFF_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableHeader {
    pub schema_version: u32,
    pub family: String,
    pub k: Option<u32>,
    pub l: Option<u32>,
    #[serde(rename = "N")]
    pub n: u32,
}

impl TableHeader {
    pub fn for_table(t: &GrundyTable) -> Self {
        let rs = t.ruleset();
        TableHeader {
            schema_version: SCHEMA_VERSION,
            family: rs.family().name().to_owned(),
            k: rs.k(),
            l: rs.l(),
            n: t.bound(),
        }
    }

    pub fn ruleset(&self) -> Result<Ruleset> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse {
                line: 1,
                reason: format!("unsupported schema version {}", self.schema_version),
            });
        }
        Ruleset::from_parts(self.family.parse::<Family>()?, self.k, self.l)
    }
}

fn push_rows(out: &mut String, t: &GrundyTable) {
    for (p, g) in t.iter() {
        // Writing to a String cannot fail.
        let _ = writeln!(out, "{},{},{}", p.a(), p.b(), g);
    }
}

pub fn to_csv(t: &GrundyTable) -> String {
    let mut out = String::with_capacity(t.len() * 10 + 6);
    out.push_str("a,b,g\n");
    push_rows(&mut out, t);
    out
}

pub fn to_table_file(t: &GrundyTable) -> String {
    let mut out = serde_json::to_string(&TableHeader::for_table(t)).expect("header serializes");
    out.push('\n');
    push_rows(&mut out, t);
    out
}

pub fn write_csv<W: Write>(t: &GrundyTable, mut w: W) -> io::Result<()> {
    w.write_all(to_csv(t).as_bytes())
}

/// Parses `a,b,g` rows; they must enumerate a complete triangle in order.
fn parse_rows<'a>(ruleset: Ruleset, lines: impl Iterator<Item = (usize, &'a str)>) -> Result<GrundyTable> {
    let mut rows = Vec::new();
    for (line, text) in lines {
        let bad = |reason: String| Error::Parse { line, reason };
        let fields: Vec<&str> = text.split(',').collect();
        let [a, b, g] = fields.as_slice() else {
            return Err(bad(format!("expected 3 fields, found {}", fields.len())));
        };
        let num = |s: &str| s.parse::<u32>().map_err(|e| bad(format!("'{s}': {e}")));
        rows.push((line, num(a)?, num(b)?, num(g)?));
    }
    // The a = 0 row spans b = 0..=N.
    let bound = match rows.iter().take_while(|r| r.1 == 0).count() {
        0 => {
            return Err(Error::Parse {
                line: rows.first().map_or(0, |r| r.0),
                reason: "table must start at 0,0".into(),
            })
        }
        n => (n - 1) as u32,
    };
    let expected = (0..=bound).flat_map(|a| (a..=bound).map(move |b| (a, b)));
    let mut values = Vec::with_capacity(rows.len());
    let mut expected = expected.fuse();
    for &(line, a, b, g) in &rows {
        if expected.next() != Some((a, b)) {
            return Err(Error::Parse {
                line,
                reason: format!("unexpected row ({a},{b}) for a table with N={bound}"),
            });
        }
        values.push(g);
    }
    if let Some((a, b)) = expected.next() {
        return Err(Error::Parse {
            line: rows.last().map_or(0, |r| r.0),
            reason: format!("table ends before ({a},{b})"),
        });
    }
    GrundyTable::from_values(ruleset, bound, values)
}

pub fn read_csv(ruleset: Ruleset, text: &str) -> Result<GrundyTable> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, "a,b,g")) => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                reason: "missing 'a,b,g' header".into(),
            })
        }
    }
    parse_rows(ruleset.validated()?, lines)
}

pub fn read_table_file(text: &str) -> Result<GrundyTable> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "empty table file".into(),
    })?;
    let header: TableHeader = serde_json::from_str(head)?;
    let t = parse_rows(header.ruleset()?, lines)?;
    if t.bound() != header.n {
        return Err(Error::Parse {
            line: 1,
            reason: format!("header says N={}, rows end at {}", header.n, t.bound()),
        });
    }
    Ok(t)
}

/// Directory of table files keyed by ruleset and bound.
#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// Cache rooted at `$WYTHOFF_CACHE_DIR`, if set and non-empty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_ENV)
            .filter(|v| !v.is_empty())
            .map(TableCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, rs: Ruleset, bound: u32) -> PathBuf {
        let mut name = rs.family().name().to_owned();
        if let Some(k) = rs.k() {
            let _ = write!(name, "-k{k}");
        }
        if let Some(l) = rs.l() {
            let _ = write!(name, "-l{l}");
        }
        let _ = write!(name, "-n{bound}.table");
        self.dir.join(name)
    }

    pub fn load(&self, rs: Ruleset, bound: u32) -> Result<Option<GrundyTable>> {
        let path = self.path_for(rs, bound);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let t = read_table_file(&text)?;
        if t.ruleset() != rs.validated()? || t.bound() != bound {
            return Err(Error::Parse {
                line: 1,
                reason: format!("{} does not hold {rs} at N={bound}", path.display()),
            });
        }
        Ok(Some(t))
    }

    /// Writes through a uniquely named temporary file and renames it into
    /// place, so concurrent writers never expose a partial file.
    pub fn store(&self, t: &GrundyTable) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(t.ruleset(), t.bound());
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            path.file_name().and_then(|n| n.to_str()).unwrap_or("table"),
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        {
            let mut f = fs::OpenOptions::new().write(true).create_new(true).open(&tmp)?;
            f.write_all(to_table_file(t).as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    pub fn load_or_build(&self, rs: Ruleset, bound: u32) -> Result<GrundyTable> {
        if let Some(t) = self.load(rs, bound)? {
            return Ok(t);
        }
        let t = grundy_table(rs, bound)?;
        self.store(&t)?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!(
            "wythoff-core-{tag}-{}-{}",
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let _ = fs::remove_dir_all(&dir);
        dir
    }

    #[test]
    fn csv_shape() {
        let t = grundy_table(Ruleset::Wk { k: 1 }, 5).unwrap();
        let csv = to_csv(&t);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "a,b,g");
        assert_eq!(lines.len(), 22);
        assert!(lines.contains(&"2,2,1"));
        assert!(csv.ends_with('\n'));
    }

    #[test]
    fn csv_round_trip() {
        for rs in [Ruleset::Wythoff, Ruleset::Tk { k: 3 }, Ruleset::Wkl { k: 1, l: 4 }] {
            for n in [0, 1, 9] {
                let t = grundy_table(rs, n).unwrap();
                let text = to_csv(&t);
                let back = read_csv(rs, &text).unwrap();
                assert_eq!(back, t);
                assert_eq!(to_csv(&back), text);
            }
        }
    }

    #[test]
    fn table_file_header() {
        let t = grundy_table(Ruleset::Wk { k: 1 }, 2).unwrap();
        let text = to_table_file(&t);
        assert_eq!(
            text,
            "{\"schema_version\":1,\"family\":\"wk\",\"k\":1,\"l\":null,\"N\":2}\n\
             0,0,0\n0,1,1\n0,2,2\n1,1,0\n1,2,3\n2,2,1\n"
        );
        assert_eq!(read_table_file(&text).unwrap(), t);
    }

    #[test]
    fn rejects_malformed() {
        let rs = Ruleset::Wythoff;
        assert!(read_csv(rs, "0,0,0\n").is_err());
        assert!(read_csv(rs, "a,b,g\n").is_err());
        assert!(read_csv(rs, "a,b,g\n0,0,0\n0,1,1\n1,1,2\n1,2,0\n").is_err());
        assert!(read_csv(rs, "a,b,g\n0,0,0\n0,1,x\n1,1,2\n").is_err());
        assert!(read_csv(rs, "a,b,g\n0,0,0\n0,2,1\n").is_err());
        assert!(read_csv(rs, "a,b,g\n0,0,0\n0,1,1\n1,1,2\n").is_ok());
    }

    #[test]
    fn cache_round_trip() {
        let dir = temp_dir("cache");
        let cache = TableCache::new(&dir);
        let rs = Ruleset::Tk { k: 2 };
        assert!(cache.load(rs, 12).unwrap().is_none());
        let built = cache.load_or_build(rs, 12).unwrap();
        let path = cache.path_for(rs, 12);
        assert!(path.ends_with("tk-k2-n12.table"));
        let first = fs::read(&path).unwrap();
        assert_eq!(cache.load(rs, 12).unwrap().unwrap(), built);
        cache.store(&grundy_table(rs, 12).unwrap()).unwrap();
        assert_eq!(fs::read(&path).unwrap(), first);
        let _ = fs::remove_dir_all(&dir);
    }
}
