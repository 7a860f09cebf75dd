//! On-disk cache for Gröbner bases, keyed by a content hash of the generator
//! list and the monomial order. Entries are JSON files holding the rendered
//! basis; writes go through a temp file and an atomic rename.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::poly::{Poly, PolyRing};

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    schema: u32,
    order: String,
    vars: Vec<String>,
    generators: Vec<String>,
    basis: Vec<String>,
}

#[derive(Serialize, Deserialize, Default, Clone, Copy)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
}

#[derive(Clone, Debug)]
pub struct EntryInfo {
    pub key: String,
    pub bytes: u64,
    pub basis_size: usize,
    pub max_degree: u32,
}

#[derive(Clone, Debug)]
pub struct GroebnerCache {
    dir: PathBuf,
}

impl GroebnerCache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, Error> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
        Ok(GroebnerCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Content hash of `(order, variables, sorted generators)`.
    pub fn key(ring: &PolyRing, generators: &[Poly]) -> String {
        let mut hasher = Sha256::new();
        hasher.update(ring.order.tag().as_bytes());
        hasher.update(b"\n");
        for v in &ring.vars {
            hasher.update(v.as_bytes());
            hasher.update(b",");
        }
        hasher.update(b"\n");
        let mut rendered: Vec<String> = generators.iter().map(|g| ring.render(g)).collect();
        rendered.sort();
        for g in rendered {
            hasher.update(g.as_bytes());
            hasher.update(b";");
        }
        hex(&hasher.finalize())
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn lookup(&self, ring: &PolyRing, generators: &[Poly]) -> Option<Vec<Poly>> {
        let key = Self::key(ring, generators);
        let path = self.entry_path(&key);
        let hit = (|| -> Option<Vec<Poly>> {
            let text = fs::read_to_string(&path).ok()?;
            let entry: CacheEntry = serde_json::from_str(&text).ok()?;
            if entry.schema != 1 || entry.order != ring.order.tag() || entry.vars != ring.vars {
                return None;
            }
            entry
                .basis
                .iter()
                .map(|s| ring.parse(s).ok())
                .collect::<Option<Vec<_>>>()
        })();
        self.bump_stats(hit.is_some());
        hit
    }

    pub fn store(&self, ring: &PolyRing, generators: &[Poly], basis: &[Poly]) {
        let key = Self::key(ring, generators);
        let entry = CacheEntry {
            schema: 1,
            order: ring.order.tag(),
            vars: ring.vars.clone(),
            generators: generators.iter().map(|g| ring.render(g)).collect(),
            basis: basis.iter().map(|b| ring.render(b)).collect(),
        };
        // best effort: a failed cache write must not fail the computation
        let _ = self.write_atomic(&self.entry_path(&key), &entry);
    }

    fn write_atomic<T: Serialize>(&self, path: &Path, value: &T) -> Result<(), Error> {
        let text = serde_json::to_string_pretty(value)?;
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text).map_err(|e| Error::io(tmp.display().to_string(), e))?;
        fs::rename(&tmp, path).map_err(|e| Error::io(path.display().to_string(), e))?;
        Ok(())
    }

    fn bump_stats(&self, hit: bool) {
        let path = self.dir.join("stats.json");
        let mut stats: CacheStats = fs::read_to_string(&path)
            .ok()
            .and_then(|t| serde_json::from_str(&t).ok())
            .unwrap_or_default();
        if hit {
            stats.hits += 1;
        } else {
            stats.misses += 1;
        }
        let _ = self.write_atomic(&path, &stats);
    }

    pub fn stats(&self) -> CacheStats {
        fs::read_to_string(self.dir.join("stats.json"))
            .ok()
            .and_then(|t| serde_json::from_str(&t).ok())
            .unwrap_or_default()
    }

    pub fn entries(&self) -> Result<Vec<EntryInfo>, Error> {
        let mut out = Vec::new();
        let rd = fs::read_dir(&self.dir)
            .map_err(|e| Error::io(self.dir.display().to_string(), e))?;
        for item in rd {
            let item = item.map_err(|e| Error::io(self.dir.display().to_string(), e))?;
            let path = item.path();
            let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
            if name == "stats" || path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            let text = fs::read_to_string(&path)
                .map_err(|e| Error::io(path.display().to_string(), e))?;
            let entry: CacheEntry = serde_json::from_str(&text)?;
            let max_degree = entry
                .basis
                .iter()
                .map(|b| degree_of_rendered(b))
                .max()
                .unwrap_or(0);
            out.push(EntryInfo {
                key: name.to_string(),
                bytes: text.len() as u64,
                basis_size: entry.basis.len(),
                max_degree,
            });
        }
        out.sort_by(|a, b| a.key.cmp(&b.key));
        Ok(out)
    }

    pub fn clear(&self) -> Result<usize, Error> {
        let mut removed = 0;
        let rd = fs::read_dir(&self.dir)
            .map_err(|e| Error::io(self.dir.display().to_string(), e))?;
        for item in rd {
            let item = item.map_err(|e| Error::io(self.dir.display().to_string(), e))?;
            let path = item.path();
            if path.extension().and_then(|e| e.to_str()) == Some("json") {
                fs::remove_file(&path)
                    .map_err(|e| Error::io(path.display().to_string(), e))?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

/// Degree of a rendered polynomial, counted per `^` marker and bare variable;
/// only used for reporting, so a syntactic estimate is enough.
fn degree_of_rendered(text: &str) -> u32 {
    text.split(&['+', '-'][..])
        .map(|term| {
            term.split('*')
                .map(|f| {
                    let f = f.trim();
                    if f.is_empty() || f.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                        0
                    } else {
                        f.split_once('^')
                            .and_then(|(_, e)| e.trim().parse::<u32>().ok())
                            .unwrap_or(1)
                    }
                })
                .sum()
        })
        .max()
        .unwrap_or(0)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    #[test]
    fn round_trip_through_the_cache() {
        let dir = tempfile::tempdir().unwrap();
        let cache = GroebnerCache::open(dir.path()).unwrap();
        let ring = PolyRing::new(vec!["t".into(), "u".into()], MonomialOrder::DegRevLex);
        let gens = vec![ring.parse("t*u - 1").unwrap()];
        assert!(cache.lookup(&ring, &gens).is_none());
        let basis = crate::groebner::buchberger(&ring, &gens, &Default::default())
            .complete()
            .unwrap();
        cache.store(&ring, &gens, &basis);
        let loaded = cache.lookup(&ring, &gens).unwrap();
        assert_eq!(loaded, basis);
        let stats = cache.stats();
        assert_eq!((stats.hits, stats.misses), (1, 1));
        assert_eq!(cache.entries().unwrap().len(), 1);
        assert_eq!(cache.clear().unwrap(), 2); // entry + stats file
    }
}
