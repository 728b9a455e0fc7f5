//! On-disk cache of solved enumerators, one JSON file per `(type, n)`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::gleason::{admissible, type_params, CodeType, ExtremalEnumerator};
use crate::polyarith::StepPoly;

pub const CACHE_ENV: &str = "EXTREMAL_CACHE_DIR";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub code_type: String,
    pub n: usize,
    pub a: Vec<String>,
    pub coefficients: Vec<String>,
    pub checksum: String,
}

impl CacheEntry {
    pub fn from_enumerator(e: &ExtremalEnumerator) -> Self {
        let mut entry = CacheEntry {
            schema_version: SCHEMA_VERSION,
            code_type: e.code_type.tag().to_string(),
            n: e.n,
            a: e.a.iter().map(ToString::to_string).collect(),
            coefficients: e.poly.coeffs().iter().map(ToString::to_string).collect(),
            checksum: String::new(),
        };
        entry.checksum = entry.compute_checksum();
        entry
    }

    pub fn compute_checksum(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.schema_version.to_le_bytes());
        h.update(self.code_type.as_bytes());
        h.update([0]);
        h.update((self.n as u64).to_le_bytes());
        for (tag, list) in [(b'a', &self.a), (b'c', &self.coefficients)] {
            h.update([tag]);
            h.update((list.len() as u64).to_le_bytes());
            for s in list {
                h.update(s.as_bytes());
                h.update([b',']);
            }
        }
        hex::encode(h.finalize())
    }

    /// Rebuild the enumerator, checking the structural invariants.
    pub fn to_enumerator(&self) -> Option<ExtremalEnumerator> {
        let t: CodeType = self.code_type.parse().ok()?;
        if !admissible(t, self.n) {
            return None;
        }
        let p = type_params(t);
        let j = self.n / p.s;
        let m = j / p.r;
        let parse = |v: &[String]| v.iter().map(|s| s.parse::<BigInt>().ok()).collect::<Option<Vec<_>>>();
        let a = parse(&self.a)?;
        let coeffs = parse(&self.coefficients)?;
        if a.len() != m + 1 || !a[0].is_one() {
            return None;
        }
        let poly = StepPoly::new(self.n, p.w, coeffs).ok()?;
        if !poly.coeffs()[0].is_one() || poly.coeffs()[1..=m].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ExtremalEnumerator { code_type: t, n: self.n, j, m, a, poly })
    }
}

enum Lookup {
    Hit(ExtremalEnumerator),
    Stale,
    Corrupt,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Cache rooted at `$EXTREMAL_CACHE_DIR`, if set and non-empty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, t: CodeType, n: usize) -> PathBuf {
        self.dir.join(format!("{}-{n}.json", t.tag()))
    }

    fn lookup(&self, t: CodeType, n: usize, path: &Path) -> Option<Lookup> {
        let bytes = match fs::read(path) {
            Ok(b) => b,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(_) => return Some(Lookup::Corrupt),
        };
        let value: serde_json::Value = match serde_json::from_slice(&bytes) {
            Ok(v) => v,
            Err(_) => return Some(Lookup::Corrupt),
        };
        if value.get("schema_version").and_then(|v| v.as_u64()) != Some(SCHEMA_VERSION as u64) {
            return Some(Lookup::Stale);
        }
        let entry: CacheEntry = match serde_json::from_value(value) {
            Ok(e) => e,
            Err(_) => return Some(Lookup::Corrupt),
        };
        if entry.checksum != entry.compute_checksum() || entry.code_type != t.tag() || entry.n != n {
            return Some(Lookup::Corrupt);
        }
        Some(entry.to_enumerator().map_or(Lookup::Corrupt, Lookup::Hit))
    }

    /// A validated entry, or `None`. Corrupt files are renamed with a
    /// `.bad` suffix.
    pub fn get(&self, t: CodeType, n: usize, diag: &mut dyn Write) -> Option<ExtremalEnumerator> {
        let path = self.path_for(t, n);
        match self.lookup(t, n, &path)? {
            Lookup::Hit(e) => Some(e),
            Lookup::Stale => None,
            Lookup::Corrupt => {
                let mut bad = path.clone().into_os_string();
                bad.push(".bad");
                match fs::rename(&path, &bad) {
                    Ok(()) => {
                        let _ = writeln!(diag, "warning: corrupt cache entry {} quarantined", path.display());
                    }
                    Err(e) => {
                        let _ = writeln!(diag, "warning: corrupt cache entry {}: {e}", path.display());
                    }
                }
                None
            }
        }
    }

    /// Atomic write: temp file in the cache directory, then rename.
    pub fn put(&self, e: &ExtremalEnumerator) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry::from_enumerator(e);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path_for(e.code_type, e.n)).map_err(|err| err.error)?;
        Ok(())
    }
}
